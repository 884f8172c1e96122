#include "qcov/random.hpp"

namespace qcov {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

Word random_word(std::mt19937_64& rng, const RandomSpec& spec) {
  return Word{uniform(rng, -spec.max_apow, spec.max_apow), uniform(rng, 0, spec.max_g),
              uniform(rng, 0, spec.max_gs)};
}

Scalar random_scalar(std::mt19937_64& rng, int order, const RandomSpec& spec) {
  Scalar out(order);
  const int terms = uniform(rng, 1, 2);
  while (out.is_zero()) {
    for (int i = 0; i < terms; ++i) {
      int num = 0;
      while (num == 0) num = uniform(rng, -spec.max_numerator, spec.max_numerator);
      const Rational r(num, uniform(rng, 1, spec.max_denominator));
      out += Scalar::monomial(order, r, uniform(rng, 0, order - 1),
                              uniform(rng, -spec.max_texp, spec.max_texp));
    }
  }
  return out;
}

Element random_element(std::mt19937_64& rng, int n, int order, const RandomSpec& spec) {
  Element out(n, order);
  while (out.is_zero()) {
    const int terms = uniform(rng, 1, spec.max_terms);
    for (int i = 0; i < terms; ++i) out.add(random_word(rng, spec), random_scalar(rng, order, spec));
  }
  return out;
}

}  // namespace qcov
