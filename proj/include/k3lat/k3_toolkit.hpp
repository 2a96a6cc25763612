#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "k3lat/lattice.hpp"
#include "k3lat/quad_rep.hpp"

namespace k3lat {

// Kodaira dimension; minus_infinity absorbs under scaling.
class KodairaDim {
 public:
  static KodairaDim minus_infinity() { return KodairaDim(); }
  // Throws InputError for negative values.
  static KodairaDim of(long long value);
  // Surfaces only: -inf, 0, 1 or 2.
  static KodairaDim surface(long long value);

  bool is_minus_infinity() const { return !value_.has_value(); }
  long long value() const;  // throws on -inf
  std::string to_string() const;

  friend bool operator==(const KodairaDim&, const KodairaDim&) = default;

 private:
  KodairaDim() = default;
  explicit KodairaDim(long long v) : value_(v) {}
  std::optional<long long> value_;
};

// Kodaira dimension of the n-th symmetric power of a surface of dimension k.
KodairaDim kodaira_dim_sym(const KodairaDim& k, long long n);

// A partition of n into nonincreasing positive parts.
class Partition {
 public:
  // Sorts; throws InputError on nonpositive parts or an empty list.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  bool all_ones() const { return parts_.front() == 1; }

  // All partitions of n, in reverse lexicographic order starting with (n).
  static std::vector<Partition> all(int n);

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Dimension count #{a_j = 1} + sum (a_j - 1) for the stratum of a product
// of curves lying over a partition type; strict means it is below n.
struct StratumBound {
  int bound = 0;
  bool strict = false;
};
StratumBound stratum_dim_bound(const Partition& p);

// C^2/2 + 1.  Requires C^2 even and >= -2.
Integer genus_of_class(const IntegralLattice& lattice, const LatticeVector& c);

// x + (x, C) C for a (-2)-class C.
LatticeVector picard_lefschetz_reflect(const IntegralLattice& lattice, const LatticeVector& x,
                                       const LatticeVector& c);

// A (-2)-class with (candidate, C) < 0 together with the discriminant of
// the span of rho_C(candidate) and the ample class.  Reported as data; no
// verdict is drawn from the comparison.
struct ReflectionEvidence {
  LatticeVector curve;
  LatticeVector reflected;
  Integer sublattice_discriminant;
  Integer lattice_discriminant;
};

struct AmplenessScan {
  std::vector<LatticeVector> minus_two;  // all classes that were examined
  std::optional<LatticeVector> obstruction;  // first C with (candidate, C) <= 0
  std::vector<ReflectionEvidence> evidence;  // every C with (candidate, C) < 0
  std::int64_t bound_used = 0;

  bool obstructed() const { return obstruction.has_value(); }
};

AmplenessScan ampleness_obstruction_scan(const IntegralLattice& lattice,
                                         const LatticeVector& ample,
                                         const LatticeVector& candidate, std::int64_t bound);

// Case split for a genus-one class E on a degree-two K3 with polarization g.
enum class Degree2Case { FiberClassEqualsG, EllipticK3 };

struct CaseVerdict {
  Degree2Case which;
  std::string justification;
};

CaseVerdict degree2_case_analysis(const Integer& gg, const Integer& gE, const Integer& EE);

// Kummer construction: degree 2n+5 isogeny, n+2 transverse intersections.
struct KummerCount {
  Integer isogeny_degree;
  Integer d1_dot_d2;
};
KummerCount kummer_intersection_count(long long n);

// n(2n - 2) points of the multisection for a degree 2(n-1) polarization.
Integer multisection_degree(long long n);

std::string to_string(Degree2Case c);

}  // namespace k3lat
