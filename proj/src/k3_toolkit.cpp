#include "k3lat/k3_toolkit.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace k3lat {

KodairaDim KodairaDim::of(long long value) {
  if (value < 0) throw InputError("Kodaira dimension must be -inf or >= 0");
  return KodairaDim(value);
}

KodairaDim KodairaDim::surface(long long value) {
  if (value < 0 || value > 2) {
    throw InputError("a surface has Kodaira dimension -inf, 0, 1 or 2; got " +
                     std::to_string(value));
  }
  return KodairaDim(value);
}

long long KodairaDim::value() const {
  if (!value_) throw InputError("Kodaira dimension is -inf");
  return *value_;
}

std::string KodairaDim::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("-inf");
}

KodairaDim kodaira_dim_sym(const KodairaDim& k, long long n) {
  if (n < 1) throw InputError("symmetric power needs n >= 1");
  if (k.is_minus_infinity()) return k;
  return KodairaDim::of(n * k.value());
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InputError("a partition needs at least one part");
  for (int p : parts_) {
    if (p <= 0) throw InputError("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<Partition> Partition::all(int n) {
  if (n < 1) throw InputError("partitions need n >= 1");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> build = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, largest); part >= 1; --part) {
      current.push_back(part);
      build(remaining - part, part);
      current.pop_back();
    }
  };
  build(n, n);
  return out;
}

StratumBound stratum_dim_bound(const Partition& p) {
  int ones = 0;
  int excess = 0;
  for (int a : p.parts()) {
    if (a == 1) ++ones;
    excess += a - 1;
  }
  StratumBound out;
  out.bound = ones + excess;
  out.strict = out.bound < p.n();
  return out;
}

Integer genus_of_class(const IntegralLattice& lattice, const LatticeVector& c) {
  const Integer sq = square(lattice, c);
  if (sq % 2 != 0) {
    throw InputError("class has odd square " + sq.str() + "; K3 lattices are even");
  }
  if (sq < -2) throw InputError("class has square " + sq.str() + " < -2");
  return sq / 2 + 1;
}

LatticeVector picard_lefschetz_reflect(const IntegralLattice& lattice, const LatticeVector& x,
                                       const LatticeVector& c) {
  check_dimension(lattice, x);
  const Integer cc = square(lattice, c);
  if (cc != -2) throw InputError("reflection needs a (-2)-class, got C^2 = " + cc.str());
  return x + pair(lattice, x, c) * c;
}

AmplenessScan ampleness_obstruction_scan(const IntegralLattice& lattice,
                                         const LatticeVector& ample,
                                         const LatticeVector& candidate, std::int64_t bound) {
  check_dimension(lattice, candidate, "candidate");
  AmplenessScan scan;
  scan.bound_used = bound;
  scan.minus_two = minus_two_classes(lattice, ample, bound);
  const Integer disc = discriminant(lattice);
  for (const auto& c : scan.minus_two) {
    const Integer dot = pair(lattice, candidate, c);
    if (dot > 0) continue;
    if (!scan.obstruction) scan.obstruction = c;
    if (dot < 0) {
      LatticeVector reflected = picard_lefschetz_reflect(lattice, candidate, c);
      Integer sub = discriminant(sublattice_gram(lattice, {reflected, ample}));
      scan.evidence.push_back({c, std::move(reflected), std::move(sub), disc});
    }
  }
  return scan;
}

CaseVerdict degree2_case_analysis(const Integer& gg, const Integer& gE, const Integer& EE) {
  if (gg != 2) throw InputError("degree-two case needs <g,g> = 2, got " + gg.str());
  if (EE < 0 || EE % 2 != 0) {
    throw InputError("<E,E> must be even and >= 0 for an irreducible genus-one class, got " +
                     EE.str());
  }
  if (gE == 2 && EE == 2) {
    return {Degree2Case::FiberClassEqualsG, "<g,E> = <E,E> = <g,g> = 2: E is in the class g"};
  }
  if (!(EE < gE)) {
    throw InputError("inconsistent data: violates <E,E> < <g,E> (" + EE.str() +
                     " >= " + gE.str() + ")");
  }
  if (!(gE < gg)) {
    throw InputError("inconsistent data: violates <g,E> < <g,g> (" + gE.str() +
                     " >= " + gg.str() + ")");
  }
  // 0 <= EE < gE < 2 with EE even leaves EE = 0.
  if (EE != 0) throw std::logic_error("degree-two chain admitted <E,E> != 0");
  return {Degree2Case::EllipticK3, EE.str() + " = <E,E> < <g,E> = " + gE.str() +
                                       " < <g,g> = 2, <E,E> even, hence <E,E> = 0"};
}

KummerCount kummer_intersection_count(long long n) {
  if (n < 1) throw InputError("Kummer count needs n >= 1");
  return {2 * Integer(n) + 5, Integer(n) + 2};
}

Integer multisection_degree(long long n) {
  if (n < 2) throw InputError("multisection degree needs n >= 2");
  return Integer(n) * (2 * Integer(n) - 2);
}

std::string to_string(Degree2Case c) {
  return c == Degree2Case::FiberClassEqualsG ? "FiberClassEqualsG" : "EllipticK3";
}

}  // namespace k3lat
