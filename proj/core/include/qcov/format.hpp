#pragma once

// Canonical text rendering.  Terms appear in word order (apow, g, gs), leg by
// leg for tensors, which is the order the term maps already use.  The output
// parses back through qcov::parse at the same n.

#include <string>
#include <vector>

#include "qcov/algebra.hpp"
#include "qcov/tensor.hpp"

namespace qcov {

struct FormatOptions {
  bool pretty = false;  // Unicode symbols instead of the ASCII grammar
};

std::string to_string(const Scalar& c, const FormatOptions& opt);
std::string word_string(const Word& w, int n, const FormatOptions& opt = {});
std::string to_string(const Element& x, const FormatOptions& opt = {});

template <std::size_t Legs>
std::string to_string(const Tensor<Legs>& x, const FormatOptions& opt = {});

/// Rendered terms, one string per term, with their signs.
std::vector<std::string> term_strings(const Element& x, const FormatOptions& opt = {});
template <std::size_t Legs>
std::vector<std::string> term_strings(const Tensor<Legs>& x, const FormatOptions& opt = {});

extern template std::string to_string<1>(const Tensor<1>&, const FormatOptions&);
extern template std::string to_string<2>(const Tensor<2>&, const FormatOptions&);
extern template std::string to_string<3>(const Tensor<3>&, const FormatOptions&);
extern template std::vector<std::string> term_strings<2>(const Tensor<2>&, const FormatOptions&);
extern template std::vector<std::string> term_strings<3>(const Tensor<3>&, const FormatOptions&);

}  // namespace qcov
