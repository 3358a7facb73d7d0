#pragma once

#include <random>
#include <set>

#include "tropical/valued_poly.hpp"

namespace tropical::testing {

// Random polynomial with exponents in [0, max_exp]^n and valuations in
// [-max_val, max_val]. When full_dim is set, retries until the Newton
// polytope is n-dimensional.
inline ValuedLaurentPoly random_poly(std::mt19937& rng, std::size_t n, int min_terms, int max_terms, long max_exp = 3,
                                     long max_val = 2, bool full_dim = false) {
  std::uniform_int_distribution<int> count(min_terms, max_terms);
  std::uniform_int_distribution<long> exp(0, max_exp);
  std::uniform_int_distribution<long> val(-max_val, max_val);
  for (;;) {
    const int k = count(rng);
    std::set<IntegerVector> seen;
    ValuedLaurentPoly f(n);
    while (static_cast<int>(seen.size()) < k) {
      IntegerVector u(n);
      for (auto& x : u) x = exp(rng);
      if (seen.insert(u).second) f.add_term(u, Rational(val(rng)));
    }
    if (!full_dim || newton_polytope(f).dim() == static_cast<int>(n)) return f;
  }
}

}  // namespace tropical::testing
