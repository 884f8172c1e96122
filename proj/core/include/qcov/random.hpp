#pragma once

// Seeded generators for property sweeps.  Everything downstream of a fixed
// seed is deterministic for a given standard library.

#include <random>

#include "qcov/algebra.hpp"

namespace qcov {

struct RandomSpec {
  int max_apow = 3;
  int max_g = 3;
  int max_gs = 3;
  int max_terms = 3;
  int max_texp = 2;
  int max_numerator = 3;
  int max_denominator = 2;
};

Word random_word(std::mt19937_64& rng, const RandomSpec& spec = {});
Scalar random_scalar(std::mt19937_64& rng, int order, const RandomSpec& spec = {});
/// Nonzero random element with 1..max_terms terms.
Element random_element(std::mt19937_64& rng, int n, int order, const RandomSpec& spec = {});
inline Element random_element(std::mt19937_64& rng, int n, const RandomSpec& spec = {}) {
  return random_element(rng, n, n, spec);
}

}  // namespace qcov
