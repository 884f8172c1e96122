#include "qcov/tensor.hpp"

namespace qcov {

Tensor<1> as_tensor(const Element& x) {
  Tensor<1> out({x.n()}, x.order());
  for (const auto& [w, c] : x.terms()) out.add({w}, c);
  return out;
}

Element as_element(const Tensor<1>& x) {
  Element out(x.legs()[0], x.order());
  for (const auto& [k, c] : x.terms()) out.add(k[0], c);
  return out;
}

TensorElement tensor(const Element& x, const Element& y) {
  const int order = lcm_order(x.order(), y.order());
  return outer(as_tensor(lift_order(x, order)), as_tensor(lift_order(y, order)));
}

namespace {

struct GeneratorImages {
  TensorElement alpha, alpha_star, beta, beta_star;
};

GeneratorImages generator_images(int order) {
  const Scalar q = Scalar::q(order);
  auto word = [order](const Word& w) { return Element::monomial(1, w, Scalar::one(order)); };
  const Element al = word({1, 0, 0});
  const Element als = word({-1, 0, 0});
  const Element bt = word({0, 1, 0});
  const Element bts = word({0, 0, 1});
  GeneratorImages img{tensor(al, al) - q * tensor(bts, bt),
                      tensor(als, als) - q * tensor(bt, bts),
                      tensor(bt, al) + tensor(als, bt),
                      tensor(bts, als) + tensor(al, bts)};
  return img;
}

}  // namespace

TensorElement delta_word(const Word& w, int order) {
  const GeneratorImages img = generator_images(order);
  TensorElement out({1, 1}, order);
  out.add({Word{}, Word{}}, Scalar::one(order));
  const TensorElement& a = w.apow >= 0 ? img.alpha : img.alpha_star;
  for (int i = 0; i < std::abs(w.apow); ++i) out = out * a;
  for (int i = 0; i < w.g; ++i) out = out * img.beta;
  for (int i = 0; i < w.gs; ++i) out = out * img.beta_star;
  return out;
}

TensorElement delta(const Element& a) {
  if (a.n() != 1) throw DomainError("delta is defined on the base algebra (n = 1)");
  TensorElement out({1, 1}, a.order());
  for (const auto& [w, c] : a.terms()) out += c * delta_word(w, a.order());
  return out;
}

std::map<std::pair<int, int>, TensorElement> zz_grade(const TensorElement& x) {
  std::map<std::pair<int, int>, TensorElement> out;
  for (const auto& [k, c] : x.terms()) {
    auto it = out.try_emplace({k[0].degree(), k[1].degree()}, x.legs(), x.order()).first;
    it->second.add(k, c);
  }
  return out;
}

std::vector<std::pair<std::string, Element>> su_q2_relations(int order) {
  const Element one = Element::unit(1, order);
  const Element al = Element::alpha(1, order);
  const Element als = Element::alpha_star(1, order);
  const Element bt = Element::beta(1, order);
  const Element bts = Element::beta_star(1, order);
  const Scalar q = Scalar::q(order);
  return {
      {"al' al + bt' bt - 1", als * al + bts * bt - one},
      {"al al' + q^2 bt bt' - 1", al * als + (q * q) * (bt * bts) - one},
      {"al bt - q bt al", al * bt - q * (bt * al)},
      {"al bt' - q bt' al", al * bts - q * (bts * al)},
      {"bt' bt - bt bt'", bts * bt - bt * bts},
  };
}

std::vector<RelationResidual> delta_respects_relations(int order) {
  // Relations are pushed through delta before normalization in A_1, so the
  // check sees the unreduced words.
  const GeneratorImages img = generator_images(order);
  TensorElement one({1, 1}, order);
  one.add({Word{}, Word{}}, Scalar::one(order));
  const Scalar q = Scalar::q(order);
  std::vector<RelationResidual> out;
  out.push_back({"al' al + bt' bt - 1",
                 img.alpha_star * img.alpha + img.beta_star * img.beta - one});
  out.push_back({"al al' + q^2 bt bt' - 1",
                 img.alpha * img.alpha_star + (q * q) * (img.beta * img.beta_star) - one});
  out.push_back({"al bt - q bt al", img.alpha * img.beta - q * (img.beta * img.alpha)});
  out.push_back(
      {"al bt' - q bt' al", img.alpha * img.beta_star - q * (img.beta_star * img.alpha)});
  out.push_back({"bt' bt - bt bt'", img.beta_star * img.beta - img.beta * img.beta_star});
  return out;
}

CoassocResult coassoc_check(const Element& a) {
  const TensorElement d = delta(a);
  CoassocResult res{TripleTensor({1, 1, 1}, a.order()), TripleTensor({1, 1, 1}, a.order())};
  for (const auto& [k, c] : d.terms()) {
    Tensor<1> left_leg({1}, a.order());
    left_leg.add({k[0]}, Scalar::one(a.order()));
    Tensor<1> right_leg({1}, a.order());
    right_leg.add({k[1]}, Scalar::one(a.order()));
    res.left += c * outer(delta_word(k[0], a.order()), right_leg);
    res.right += c * outer(left_leg, delta_word(k[1], a.order()));
  }
  return res;
}

}  // namespace qcov
