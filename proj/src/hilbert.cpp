#include "k3lat/hilbert.hpp"

namespace k3lat {

BeauvilleLattice::BeauvilleLattice(IntegralLattice base, int n) : n_(n), base_(std::move(base)) {
  if (n < 2) {
    throw InputError("Beauville lattice needs n >= 2, got " + std::to_string(n));
  }
  if (base_.labels() && base_.index_of("e")) {
    throw InputError("base lattice already uses the label 'e'");
  }
  IntegralLattice e_line(IntegralLattice::Gram{{e_square()}}, std::vector<std::string>{"e"});
  extended_ = orthogonal_sum(base_, e_line);
}

BeauvilleLattice beauville_extend(const IntegralLattice& surface, int n) {
  return BeauvilleLattice(surface, n);
}

HilbertClass HilbertClass::from_extended(const LatticeVector& v) {
  if (v.size() == 0) throw InputError("empty vector cannot be a Hilbert class");
  std::vector<Integer> head(v.coords().begin(), v.coords().end() - 1);
  return {LatticeVector(std::move(head)), v[v.size() - 1]};
}

HilbertClass& HilbertClass::operator+=(const HilbertClass& o) {
  surface_part += o.surface_part;
  e_coeff += o.e_coeff;
  return *this;
}

HilbertClass& HilbertClass::operator*=(const Integer& s) {
  surface_part *= s;
  e_coeff *= s;
  return *this;
}

std::string HilbertClass::to_string() const {
  return surface_part.to_string() + " + " + e_coeff.str() + "e";
}

Integer beauville_pair(const BeauvilleLattice& lattice, const HilbertClass& x,
                       const HilbertClass& y) {
  check_dimension(lattice.base(), x.surface_part, "surface part");
  check_dimension(lattice.base(), y.surface_part, "surface part");
  return pair(lattice.base(), x.surface_part, y.surface_part) +
         lattice.e_square() * x.e_coeff * y.e_coeff;
}

namespace {

void require_hilbert_square(const BeauvilleLattice& lattice, const char* what) {
  if (lattice.n() != 2) {
    throw Unsupported(std::string(what) + " is only available on S^[2], got n = " +
                      std::to_string(lattice.n()));
  }
}

}  // namespace

HilbertClass debarre_involution(const BeauvilleLattice& lattice, const LatticeVector& f4,
                                const HilbertClass& x) {
  if (lattice.n() != 2) {
    throw InputError("the quartic involution acts on S^[2]; got n = " +
                     std::to_string(lattice.n()));
  }
  check_dimension(lattice.base(), f4, "f4");
  const HilbertClass mirror{f4, -1};
  const Integer mirror_sq = beauville_pair(lattice, mirror, mirror);
  if (mirror_sq != 2) {
    throw InputError("(f4 - e)^2 must be 2 for the involution, got " + mirror_sq.str());
  }
  return -1 * x + beauville_pair(lattice, mirror, x) * mirror;
}

Integer quadruple_intersection(const BeauvilleLattice& lattice, const HilbertClass& a,
                               const HilbertClass& b, const HilbertClass& c,
                               const HilbertClass& d) {
  require_hilbert_square(lattice, "quadruple intersection");
  auto q = [&](const HilbertClass& x, const HilbertClass& y) { return beauville_pair(lattice, x, y); };
  return q(a, b) * q(c, d) + q(a, c) * q(b, d) + q(a, d) * q(b, c);
}

Integer sigma_pairing(const BeauvilleLattice& lattice, const LatticeVector& f, const Integer& m) {
  require_hilbert_square(lattice, "sigma pairing");
  return square(lattice.base(), f) - m * m;
}

Integer star_square_closed_form(const IntegralLattice& surface, const LatticeVector& f,
                                const Integer& m, const LatticeVector& g) {
  const Integer fg = pair(surface, f, g);
  return 2 * fg * fg - m * m * square(surface, g);
}

Integer star_square_pairing(const BeauvilleLattice& lattice, const LatticeVector& f,
                            const Integer& m, const LatticeVector& g) {
  const HilbertClass fme{f, -m};
  const HilbertClass gs = HilbertClass::surface(g);
  const Integer via_decomposition = quadruple_intersection(lattice, fme, fme, gs, gs) -
                                    square(lattice.base(), g) * sigma_pairing(lattice, f, m);
  const Integer closed = star_square_closed_form(lattice.base(), f, m, g);
  if (via_decomposition != closed) {
    throw std::logic_error("star-square pairing: decomposition " + via_decomposition.str() +
                           " disagrees with closed form " + closed.str());
  }
  return via_decomposition;
}

}  // namespace k3lat
