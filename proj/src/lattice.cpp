#include "k3lat/lattice.hpp"

#include <set>
#include <sstream>
#include <utility>

namespace k3lat {

LatticeVector::LatticeVector(std::initializer_list<long long> coords) {
  coords_.reserve(coords.size());
  for (long long c : coords) coords_.emplace_back(c);
}

LatticeVector LatticeVector::zero(std::size_t rank) {
  return LatticeVector(std::vector<Integer>(rank, Integer(0)));
}

LatticeVector LatticeVector::unit(std::size_t rank, std::size_t index) {
  LatticeVector v = zero(rank);
  v.coords_.at(index) = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  if (other.size() != size()) throw InputError("vector length mismatch in addition");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  if (other.size() != size()) throw InputError("vector length mismatch in subtraction");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

LatticeVector LatticeVector::concat(const LatticeVector& tail) const {
  std::vector<Integer> out = coords_;
  out.insert(out.end(), tail.coords_.begin(), tail.coords_.end());
  return LatticeVector(std::move(out));
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

namespace {

std::vector<std::string> default_names(std::size_t rank) {
  std::vector<std::string> names;
  names.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) names.push_back("v" + std::to_string(i + 1));
  return names;
}

std::size_t sign_changes(const std::vector<Integer>& coeffs) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    int s = c.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

IntegralLattice::IntegralLattice(Gram gram, std::optional<std::vector<std::string>> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  const std::size_t r = gram_.size();
  for (std::size_t i = 0; i < r; ++i) {
    if (gram_[i].size() != r) {
      throw InputError("gram row " + std::to_string(i) + " has length " +
                       std::to_string(gram_[i].size()) + ", expected " + std::to_string(r));
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (gram_[i][j] != gram_[j][i]) {
        throw InputError("gram is not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
    }
  }
  if (labels_) {
    if (labels_->size() != r) {
      throw InputError("labels has length " + std::to_string(labels_->size()) +
                       ", expected " + std::to_string(r));
    }
    std::set<std::string> seen;
    for (const auto& l : *labels_) {
      if (l.empty()) throw InputError("labels contains an empty name");
      if (!seen.insert(l).second) throw InputError("labels contains duplicate '" + l + "'");
    }
  }
}

IntegralLattice::IntegralLattice(std::initializer_list<std::initializer_list<long long>> gram)
    : IntegralLattice([&] {
        Gram g;
        for (const auto& row : gram) {
          g.emplace_back();
          for (long long v : row) g.back().emplace_back(v);
        }
        return g;
      }()) {}

std::vector<std::string> IntegralLattice::basis_names() const {
  return labels_ ? *labels_ : default_names(rank());
}

std::optional<std::size_t> IntegralLattice::index_of(const std::string& label) const {
  const auto names = basis_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == label) return i;
  }
  return std::nullopt;
}

IntegralLattice IntegralLattice::with_labels(std::vector<std::string> labels) const {
  return IntegralLattice(gram_, std::move(labels));
}

void check_dimension(const IntegralLattice& lattice, const LatticeVector& x, const char* what) {
  if (x.size() != lattice.rank()) {
    throw InputError(std::string(what) + " has length " + std::to_string(x.size()) +
                     " but the lattice has rank " + std::to_string(lattice.rank()));
  }
}

Integer pair(const IntegralLattice& lattice, const LatticeVector& x, const LatticeVector& y) {
  check_dimension(lattice, x);
  check_dimension(lattice, y);
  Integer total = 0;
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    if (x[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < lattice.rank(); ++j) row += lattice(i, j) * y[j];
    total += x[i] * row;
  }
  return total;
}

// Faddeev-LeVerrier.  The divisions by k are exact over Z.
std::vector<Integer> characteristic_polynomial(const IntegralLattice& lattice) {
  const std::size_t n = lattice.rank();
  using Matrix = std::vector<std::vector<Integer>>;
  std::vector<Integer> c(n + 1, Integer(0));
  c[n] = 1;
  Matrix m(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    // m <- A m + c[n-k+1] I
    Matrix next(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Integer s = 0;
        for (std::size_t l = 0; l < n; ++l) s += lattice(i, l) * m[l][j];
        next[i][j] = std::move(s);
      }
      next[i][i] += c[n - k + 1];
    }
    m = std::move(next);
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += lattice(i, l) * m[l][i];
    }
    c[n - k] = -trace / static_cast<long long>(k);
  }
  return c;
}

// A real symmetric matrix has only real eigenvalues, so Descartes' rule of
// signs counts them exactly: positive roots = sign changes of p(t), negative
// roots = sign changes of p(-t), zero roots = lowest nonzero degree.
SignatureProfile signature(const IntegralLattice& lattice) {
  const auto p = characteristic_polynomial(lattice);
  SignatureProfile sig;
  while (sig.n_zero < p.size() && p[sig.n_zero] == 0) ++sig.n_zero;
  std::vector<Integer> reflected = p;
  for (std::size_t i = 1; i < reflected.size(); i += 2) reflected[i] = -reflected[i];
  sig.n_plus = sign_changes(p);
  sig.n_minus = sign_changes(reflected);
  return sig;
}

// Bareiss fraction-free elimination with row pivoting.
Integer discriminant(const IntegralLattice& lattice) {
  const std::size_t n = lattice.rank();
  if (n == 0) return 1;
  auto a = lattice.gram();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntegralLattice orthogonal_sum(const IntegralLattice& first, const IntegralLattice& second) {
  const std::size_t r1 = first.rank();
  const std::size_t r = r1 + second.rank();
  IntegralLattice::Gram g(r, std::vector<Integer>(r, Integer(0)));
  for (std::size_t i = 0; i < r1; ++i) {
    for (std::size_t j = 0; j < r1; ++j) g[i][j] = first(i, j);
  }
  for (std::size_t i = 0; i < second.rank(); ++i) {
    for (std::size_t j = 0; j < second.rank(); ++j) g[r1 + i][r1 + j] = second(i, j);
  }
  if (!first.labels() && !second.labels()) return IntegralLattice(std::move(g));

  auto names = first.basis_names();
  std::set<std::string> used(names.begin(), names.end());
  for (auto name : second.basis_names()) {
    while (used.count(name)) name += '\'';
    used.insert(name);
    names.push_back(std::move(name));
  }
  return IntegralLattice(std::move(g), std::move(names));
}

IntegralLattice sublattice_gram(const IntegralLattice& lattice,
                                const std::vector<LatticeVector>& vectors) {
  if (vectors.empty()) throw InputError("sublattice_gram needs at least one vector");
  for (const auto& v : vectors) check_dimension(lattice, v);
  const std::size_t r = vectors.size();
  IntegralLattice::Gram g(r, std::vector<Integer>(r, Integer(0)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      g[i][j] = pair(lattice, vectors[i], vectors[j]);
      g[j][i] = g[i][j];
    }
  }
  return IntegralLattice(std::move(g));
}

Integer integer_gcd(const std::vector<Integer>& values) {
  Integer g = 0;
  for (const auto& v : values) g = boost::multiprecision::gcd(g, v);
  return abs(g);
}

bool is_primitive(const LatticeVector& x) {
  if (x.is_zero()) throw InputError("primitivity is undefined for the zero vector");
  return integer_gcd(x.coords()) == 1;
}

bool hodge_index_valid(const IntegralLattice& lattice) {
  const auto sig = signature(lattice);
  return lattice.rank() >= 1 && sig.n_plus == 1 && sig.n_zero == 0;
}

}  // namespace k3lat
