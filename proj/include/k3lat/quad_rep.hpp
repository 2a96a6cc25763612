#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

// Outcome of a bounded search.  Found verdicts are proofs (the witness is
// re-checked with `pair` before it is returned); NotFoundWithinBound only
// says the box of the given max-norm contains no witness.
struct SearchVerdict {
  enum class Status { Found, NotFoundWithinBound };

  Status status = Status::NotFoundWithinBound;
  std::optional<LatticeVector> witness;
  std::int64_t bound_used = 0;

  bool found() const { return status == Status::Found; }
  std::string to_string() const;

  static SearchVerdict found_with(LatticeVector w, std::int64_t bound) {
    return {Status::Found, std::move(w), bound};
  }
  static SearchVerdict not_found(std::int64_t bound) {
    return {Status::NotFoundWithinBound, std::nullopt, bound};
  }
};

// Ordering used for every box search: vectors compare lexicographically,
// first coordinate most significant, with the per-coordinate order
// 0, 1, -1, 2, -2, ...  Small coordinates come first and a positive
// coordinate precedes its negative.
bool box_order_less(const LatticeVector& a, const LatticeVector& b);

// Visits the nonzero vectors of max-norm <= bound in box order, together
// with their square, until `visit` returns false.
void for_each_in_box(const IntegralLattice& lattice, std::int64_t bound,
                     const std::function<bool(const LatticeVector&, const Integer&)>& visit);

// First x (box order) with pair(x, x) = target and |x|_inf <= bound.
SearchVerdict represent(const IntegralLattice& lattice, const Integer& target, std::int64_t bound);

// First primitive nonzero x with pair(x, x) = 0 and |x|_inf <= bound.
SearchVerdict isotropic_search(const IntegralLattice& lattice, std::int64_t bound);

// Unimodular change of basis for a binary form: columns of `transform` are
// the new basis vectors in old coordinates, so reduced = U^T G U.
struct BinaryReduction {
  IntegralLattice reduced;
  std::array<std::array<Integer, 2>, 2> transform;
};

// Lagrange-Gauss reduction of a rank-2 form a x^2 + 2b xy + c y^2 over
// GL_2(Z).  The reduced Gram is in one of three normal forms, always with
// b >= 0:
//   a != 0, c != 0:  2b <= |a| <= |c|
//   a == 0, b != 0:  0 <= c < 2b          (isotropic forms only)
//   b == 0, c == 0:  [[a, 0], [0, 0]]     (degenerate forms)
// For definite forms the first case is the classical reduced form.
BinaryReduction gauss_reduce_binary(const IntegralLattice& lattice);

// All C with |C|_inf <= bound, C^2 = -2 and (ample, C) > 0, in box order.
std::vector<LatticeVector> minus_two_classes(const IntegralLattice& lattice,
                                             const LatticeVector& ample, std::int64_t bound);

// Side-by-side check that the Beauville form of S^[2] represents zero
// exactly when Pic(S) represents 2m^2.  Both searches use the same box, so
// an isotropic (x, m) upstairs corresponds to q(x) = 2m^2 downstairs.
struct RepresentationEquivalence {
  SearchVerdict beauville_isotropic;  // on Pic(S) + Z e, (e,e) = -2
  SearchVerdict surface_two_m_squared;  // on Pic(S), smallest m first
  std::optional<Integer> m;  // the m realized by surface_two_m_squared
  bool consistent = false;
};

RepresentationEquivalence beauville_zero_iff_2m2(const IntegralLattice& surface,
                                                 std::int64_t bound);

}  // namespace k3lat
