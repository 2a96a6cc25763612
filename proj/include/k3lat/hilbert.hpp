#pragma once

#include "k3lat/lattice.hpp"

namespace k3lat {

// Pic(S^[n]) = Pic(S) + Z e, orthogonal, with (e,e) = -2(n-1).  The last
// basis vector is labelled "e"; 2e is the class of the locus of
// nonreduced subschemes.
class BeauvilleLattice {
 public:
  BeauvilleLattice(IntegralLattice base, int n);

  int n() const { return n_; }
  const IntegralLattice& base() const { return base_; }
  const IntegralLattice& extended() const { return extended_; }
  Integer e_square() const { return -2 * Integer(n_ - 1); }

 private:
  int n_;
  IntegralLattice base_;
  IntegralLattice extended_;
};

// A class surface_part + e_coeff * e on S^[n].
struct HilbertClass {
  LatticeVector surface_part;
  Integer e_coeff = 0;

  static HilbertClass surface(LatticeVector v) { return {std::move(v), 0}; }
  static HilbertClass e(std::size_t base_rank) { return {LatticeVector::zero(base_rank), 1}; }

  LatticeVector embed() const { return surface_part.concat(LatticeVector(std::vector<Integer>{e_coeff})); }
  static HilbertClass from_extended(const LatticeVector& v);

  HilbertClass& operator+=(const HilbertClass& o);
  HilbertClass& operator*=(const Integer& s);
  friend HilbertClass operator+(HilbertClass a, const HilbertClass& b) { return a += b; }
  friend HilbertClass operator-(HilbertClass a, const HilbertClass& b) { return a += -1 * b; }
  friend HilbertClass operator*(const Integer& s, HilbertClass a) { return a *= s; }
  friend bool operator==(const HilbertClass&, const HilbertClass&) = default;

  std::string to_string() const;
};

// Throws InputError for n < 2.
BeauvilleLattice beauville_extend(const IntegralLattice& surface, int n);

// Beauville form (x, y).
Integer beauville_pair(const BeauvilleLattice& lattice, const HilbertClass& x,
                       const HilbertClass& y);

// Action of the Beauville-Debarre involution of the Hilbert square of a
// quartic: x -> -x + (f4 - e, x)(f4 - e).  Requires n = 2 and
// (f4 - e)^2 = 2, i.e. f4^2 = 4.
HilbertClass debarre_involution(const BeauvilleLattice& lattice, const LatticeVector& f4,
                                const HilbertClass& x);

// a.b.c.d on S^[2] through the Fujiki-type relation
//   (a,b)(c,d) + (a,c)(b,d) + (a,d)(b,c).
// Throws Unsupported for n != 2.
Integer quadruple_intersection(const BeauvilleLattice& lattice, const HilbertClass& a,
                               const HilbertClass& b, const HilbertClass& c,
                               const HilbertClass& d);

// (f - m e)^2 . Sigma = <f,f> - m^2, Sigma the surface of subschemes
// through a fixed point.
Integer sigma_pairing(const BeauvilleLattice& lattice, const LatticeVector& f, const Integer& m);

// (f - m e)^2 . (g * g), with g * g = g.g - <g,g> Sigma.  Evaluated through
// that decomposition and cross-checked against 2<f,g>^2 - m^2 <g,g>.
Integer star_square_pairing(const BeauvilleLattice& lattice, const LatticeVector& f,
                            const Integer& m, const LatticeVector& g);

// Closed form 2<f,g>^2 - m^2 <g,g>, without going through S^[2].
Integer star_square_closed_form(const IntegralLattice& surface, const LatticeVector& f,
                                const Integer& m, const LatticeVector& g);

}  // namespace k3lat
