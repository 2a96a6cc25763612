#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boost/multiprecision/cpp_int.hpp"

namespace k3lat {

// Arbitrary precision; expression templates off so results are plain values.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

// Raised for malformed arguments: dimension mismatches, violated
// preconditions, unparsable input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an operation is asked for a case it deliberately does not
// cover (e.g. intersection numbers on S^[n] for n > 2).
class Unsupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Integer coordinates relative to some lattice basis.  The vector does not
// know its lattice; operations check the length against the lattice rank.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long long> coords);

  static LatticeVector zero(std::size_t rank);
  static LatticeVector unit(std::size_t rank, std::size_t index);

  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const;

  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  LatticeVector& operator*=(const Integer& scalar);

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator-(LatticeVector a) { return a *= -1; }
  friend LatticeVector operator*(const Integer& s, LatticeVector a) { return a *= s; }
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

  // Appends `tail`; used to embed surface classes into a Beauville lattice.
  LatticeVector concat(const LatticeVector& tail) const;

  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

// Inertia of a real symmetric form.
struct SignatureProfile {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  std::size_t rank() const { return n_plus + n_minus + n_zero; }
  friend bool operator==(const SignatureProfile&, const SignatureProfile&) = default;
};

// A free Z-module of finite rank with a symmetric integer bilinear form,
// stored as its Gram matrix.  Immutable once constructed.  Degenerate forms
// are legal values.  Labels name the basis vectors and carry no arithmetic.
class IntegralLattice {
 public:
  using Gram = std::vector<std::vector<Integer>>;

  IntegralLattice() = default;
  // Throws InputError unless gram is square and symmetric and labels (if
  // given) are distinct and of matching length.
  explicit IntegralLattice(Gram gram,
                           std::optional<std::vector<std::string>> labels = std::nullopt);
  IntegralLattice(std::initializer_list<std::initializer_list<long long>> gram);

  std::size_t rank() const { return gram_.size(); }
  const Integer& operator()(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  const Gram& gram() const { return gram_; }
  const std::optional<std::vector<std::string>>& labels() const { return labels_; }

  // Labels if present, otherwise v1..vr.
  std::vector<std::string> basis_names() const;
  // Position of a basis label, if any.
  std::optional<std::size_t> index_of(const std::string& label) const;

  IntegralLattice with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const IntegralLattice&, const IntegralLattice&) = default;

 private:
  Gram gram_;
  std::optional<std::vector<std::string>> labels_;
};

Integer pair(const IntegralLattice& lattice, const LatticeVector& x, const LatticeVector& y);
inline Integer square(const IntegralLattice& lattice, const LatticeVector& x) {
  return pair(lattice, x, x);
}

SignatureProfile signature(const IntegralLattice& lattice);
Integer discriminant(const IntegralLattice& lattice);

// Coefficients c_0..c_r of det(t I - G), lowest degree first.
std::vector<Integer> characteristic_polynomial(const IntegralLattice& lattice);

IntegralLattice orthogonal_sum(const IntegralLattice& first, const IntegralLattice& second);
IntegralLattice sublattice_gram(const IntegralLattice& lattice,
                                const std::vector<LatticeVector>& vectors);

// gcd of the coordinates is 1.  Throws InputError on the zero vector.
bool is_primitive(const LatticeVector& x);

// Signature (1, r-1): the shape of the Neron-Severi lattice of a surface.
bool hodge_index_valid(const IntegralLattice& lattice);

// Throws InputError unless x has the lattice's rank.
void check_dimension(const IntegralLattice& lattice, const LatticeVector& x,
                     const char* what = "vector");

Integer integer_gcd(const std::vector<Integer>& values);

}  // namespace k3lat
