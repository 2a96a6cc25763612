#pragma once

#include <cstdint>
#include <random>

#include "k3lat/lattice.hpp"

namespace k3lat {

// Seeded generator with a platform-independent draw rule (mt19937_64 output
// reduced mod the range), so a seed fixes the same stream everywhere.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform-ish integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  LatticeVector vector(std::size_t rank, std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

// A lattice together with a vector of prescribed square.
struct LatticeWithClass {
  IntegralLattice lattice;
  LatticeVector marked;
};

// A GL_r(Z) change of basis and its inverse: new Gram = U^T G U, and a
// vector with old coordinates y has new coordinates U^{-1} y.
struct Unimodular {
  std::vector<std::vector<Integer>> forward;
  std::vector<std::vector<Integer>> inverse;

  LatticeVector apply_inverse(const LatticeVector& y) const;
  IntegralLattice transform(const IntegralLattice& lattice) const;
};

Unimodular random_unimodular(SeededRng& rng, std::size_t rank, int steps);

// Signature (1, rank-1) lattice [2m^2] + (negative definite) in a scrambled
// basis, with f the image of the first basis vector (f^2 = 2m^2) and g a
// class with g^2 > 0 not proportional to f.
struct HodgeInstance {
  IntegralLattice lattice;
  LatticeVector f;
  LatticeVector g;
  std::int64_t m = 0;
};
HodgeInstance random_hodge_instance(SeededRng& rng, std::size_t rank, std::int64_t m);

// Random lattice with a marked (-2)-class; the complement is arbitrary.
LatticeWithClass random_lattice_with_minus_two(SeededRng& rng, std::size_t rank);

// Symmetric Gram with entries in [-range, range].
IntegralLattice random_symmetric(SeededRng& rng, std::size_t rank, std::int64_t range);

}  // namespace k3lat
