#include "qcov/format.hpp"

#include <sstream>

namespace qcov {

namespace {

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

void append_power(std::ostringstream& os, const char* sym, int k) {
  os << sym;
  if (k != 1) os << '^' << k;
}

struct SignedCoeff {
  bool negative = false;
  std::string text;  // empty when the magnitude is 1
};

SignedCoeff split_sign(const Scalar& c, const FormatOptions& opt) {
  SignedCoeff out;
  Scalar mag = c;
  if (c.terms().size() == 1 && c.terms().begin()->second < 0) {
    out.negative = true;
    mag = -c;
  }
  if (mag.is_one()) return out;
  const std::string s = to_string(mag, opt);
  out.text = mag.terms().size() == 1 ? s : "(" + s + ")";
  return out;
}

std::string render_term(const SignedCoeff& c, const std::string& body, bool body_is_identity,
                        bool first = false) {
  if (body_is_identity) {
    if (c.text.empty()) return "1";
    // a leading multi-term constant is written without parentheses
    if (first && c.text.front() == '(') return c.text.substr(1, c.text.size() - 2);
    return c.text;
  }
  return c.text.empty() ? body : c.text + " " + body;
}

std::string join_terms(const std::vector<std::pair<SignedCoeff, std::string>>& parts) {
  if (parts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, text] : parts) {
    if (first) {
      if (c.negative) os << '-';
    } else {
      os << (c.negative ? " - " : " + ");
    }
    first = false;
    os << text;
  }
  return os.str();
}

}  // namespace

std::string to_string(const Scalar& c, const FormatOptions& opt) {
  std::string s = c.to_string();
  if (opt.pretty) s = replace_all(s, "z", "ζ");
  return s;
}

std::string word_string(const Word& w, int n, const FormatOptions& opt) {
  if (w.is_identity()) return "1";
  const char* al = opt.pretty ? "α" : "al";
  const char* als = opt.pretty ? "α*" : "al'";
  const char* gt = opt.pretty ? (n == 1 ? "β" : "γ") : (n == 1 ? "bt" : "gt");
  const char* gts = opt.pretty ? (n == 1 ? "β*" : "γ*") : (n == 1 ? "bt'" : "gt'");
  std::ostringstream os;
  bool wrote = false;
  auto sep = [&] {
    if (wrote) os << ' ';
    wrote = true;
  };
  if (w.apow > 0) {
    sep();
    append_power(os, al, w.apow);
  } else if (w.apow < 0) {
    sep();
    append_power(os, als, -w.apow);
  }
  if (w.g > 0) {
    sep();
    append_power(os, gt, w.g);
  }
  if (w.gs > 0) {
    sep();
    append_power(os, gts, w.gs);
  }
  return os.str();
}

std::vector<std::string> term_strings(const Element& x, const FormatOptions& opt) {
  std::vector<std::string> out;
  for (const auto& [w, c] : x.terms()) {
    const SignedCoeff sc = split_sign(c, opt);
    out.push_back((sc.negative ? "-" : "") +
                  render_term(sc, word_string(w, x.n(), opt), w.is_identity()));
  }
  return out;
}

std::string to_string(const Element& x, const FormatOptions& opt) {
  std::vector<std::pair<SignedCoeff, std::string>> parts;
  for (const auto& [w, c] : x.terms()) {
    const SignedCoeff sc = split_sign(c, opt);
    parts.emplace_back(
        sc, render_term(sc, word_string(w, x.n(), opt), w.is_identity(), parts.empty()));
  }
  return join_terms(parts);
}

namespace {

template <std::size_t Legs>
std::string tensor_body(const typename Tensor<Legs>::Key& k, const std::array<int, Legs>& legs,
                        const FormatOptions& opt) {
  const char* sep = opt.pretty ? " ⊗ " : " (x) ";
  std::string body;
  for (std::size_t i = 0; i < Legs; ++i) {
    if (i > 0) body += sep;
    body += word_string(k[i], legs[i], opt);
  }
  return body;
}

}  // namespace

template <std::size_t Legs>
std::string to_string(const Tensor<Legs>& x, const FormatOptions& opt) {
  std::vector<std::pair<SignedCoeff, std::string>> parts;
  for (const auto& [k, c] : x.terms()) {
    const SignedCoeff sc = split_sign(c, opt);
    parts.emplace_back(sc, render_term(sc, tensor_body<Legs>(k, x.legs(), opt), false));
  }
  return join_terms(parts);
}

template <std::size_t Legs>
std::vector<std::string> term_strings(const Tensor<Legs>& x, const FormatOptions& opt) {
  std::vector<std::string> out;
  for (const auto& [k, c] : x.terms()) {
    const SignedCoeff sc = split_sign(c, opt);
    out.push_back((sc.negative ? "-" : "") +
                  render_term(sc, tensor_body<Legs>(k, x.legs(), opt), false));
  }
  return out;
}

template std::string to_string<1>(const Tensor<1>&, const FormatOptions&);
template std::string to_string<2>(const Tensor<2>&, const FormatOptions&);
template std::string to_string<3>(const Tensor<3>&, const FormatOptions&);
template std::vector<std::string> term_strings<2>(const Tensor<2>&, const FormatOptions&);
template std::vector<std::string> term_strings<3>(const Tensor<3>&, const FormatOptions&);

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << to_string(x); }

template <std::size_t Legs>
std::ostream& operator<<(std::ostream& os, const Tensor<Legs>& x) {
  return os << to_string(x);
}

template std::ostream& operator<< <1>(std::ostream&, const Tensor<1>&);
template std::ostream& operator<< <2>(std::ostream&, const Tensor<2>&);
template std::ostream& operator<< <3>(std::ostream&, const Tensor<3>&);

}  // namespace qcov
