#pragma once

#include <cstdint>

#include "k3lat/lattice.hpp"
#include "k3lat/report.hpp"

namespace k3lat {

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::int64_t kDefaultBound = 50;

// A polarized K3 Picard lattice (S, f) together with the Hilbert-scheme
// index n and the search bound used by any box searches.
struct K3Input {
  IntegralLattice lattice;
  LatticeVector polarization;
  int n = 2;
  std::int64_t bound = kDefaultBound;

  // Throws InputError unless the polarization has the lattice's rank and a
  // positive even square, n >= 2 and bound >= 1.  The Hodge-index shape is
  // reported by the density check rather than enforced here.
  void validate() const;
};

// If f^2 = 2m^2 with m > 0, returns m.
std::optional<Integer> two_m_squared_root(const Integer& degree);

// Hypotheses for the fibration-positivity step on S^[2]:
//   (a) Pic(S) has signature (1, r-1)
//   (b) det [[f^2, <f,g>], [<f,g>, g^2]] < 0
//   (c) 2<f,g>^2 > m^2 <g,g>
//   (d) (f - m e)^2 . (g * g) equals the quantity in (c) and is positive
// Throws InputError if f^2 is not 2m^2 or g^2 <= 0; Unsupported if n != 2.
ClaimReport check_density_hypotheses(const K3Input& input, const LatticeVector& g);

// The fixed regression suite over every numeric identity this library
// reproduces.  Random sub-suites draw from `seed`; claim order is fixed.
ClaimReport verify_paper_claims(std::int64_t bound, std::uint64_t seed = kDefaultSeed);

}  // namespace k3lat
