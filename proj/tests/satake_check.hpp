#pragma once

// Re-derives the real-form conditions on a conjugation straight from root
// coordinates, without the library's own checks.

#include <string>

#include "crflag/satake.hpp"

namespace crflag::checks {

/// Empty when every condition holds, otherwise the first failure.
inline std::string conjugation_defect(const SatakeDiagram& d) {
  const RootSystem& rs = d.roots();
  const Conjugation& c = d.conjugation();
  const NodeSet black = d.black();
  for (std::size_t k = 0; k < rs.size(); ++k) {
    const Root& a = rs.root(k);
    const Root s = c.sigma.apply(a);
    const auto idx = rs.index_of(s);
    if (!idx) return "sigma(" + to_string(a) + ") is not a root";
    if (*idx != c.apply(k)) return "root permutation disagrees with the lattice map at " + to_string(a);
    if (c.sigma.apply(s) != a) return "sigma is not involutive at " + to_string(a);
    const bool black_supported = support(a).subset_of(black);
    if ((s == -a) != black_supported) return "sigma = -id fails to match black support at " + to_string(a);
    if (a.is_positive() && !black_supported && !s.is_positive()) return "sigma(" + to_string(a) + ") is negative";
  }
  for (int i = 0; i < rs.rank(); ++i) {
    if (black.contains(i)) continue;
    const Root diff = c.sigma.apply(rs.root(rs.simple(i))) - rs.root(rs.simple(c.epsilon[i]));
    for (int j = 0; j < rs.rank(); ++j) {
      if (diff.coeffs[j] < 0) return "negative coefficient in sigma(alpha) - epsilon(alpha)";
      if (diff.coeffs[j] > 0 && !black.contains(j)) return "sigma(alpha) - epsilon(alpha) leaves the black span";
    }
  }
  return {};
}

}  // namespace crflag::checks
