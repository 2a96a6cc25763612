#include "k3lat/quad_rep.hpp"

#include <cstdlib>

#include "k3lat/hilbert.hpp"

namespace k3lat {

namespace {

// Position -> value in the per-coordinate order 0, 1, -1, 2, -2, ...
std::int64_t ordinal_value(std::int64_t index) {
  return index % 2 == 1 ? (index + 1) / 2 : -(index / 2);
}

Integer ordinal_key(const Integer& v) { return v > 0 ? 2 * v - 1 : -2 * v; }

void check_bound(std::int64_t bound) {
  if (bound < 1) throw InputError("search bound must be >= 1, got " + std::to_string(bound));
}

// Odometer over the box in box order; visit(x, q) returns false to stop.
template <class Num, class Visit>
void scan(const std::vector<std::vector<Num>>& g, std::int64_t bound, Visit&& visit) {
  const std::size_t r = g.size();
  if (r == 0) return;
  const std::int64_t span = 2 * bound + 1;
  std::vector<std::int64_t> index(r, 0);
  std::vector<std::int64_t> x(r, 0);
  while (true) {
    std::size_t pos = r;
    while (pos > 0) {
      --pos;
      if (++index[pos] < span) break;
      index[pos] = 0;
      x[pos] = 0;
      if (pos == 0) return;
    }
    x[pos] = ordinal_value(index[pos]);
    Num q = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (x[i] == 0) continue;
      Num row = 0;
      for (std::size_t j = 0; j < r; ++j) {
        if (x[j] != 0) row += g[i][j] * Num(x[j]);
      }
      q += Num(x[i]) * row;
    }
    if (!visit(x, q)) return;
  }
}

constexpr std::int64_t kFastBound = std::int64_t{1} << 20;
const Integer kFastEntry = Integer(1) << 40;

bool fits_fast_path(const IntegralLattice& lattice, std::int64_t bound) {
  if (lattice.rank() > 32 || bound > kFastBound) return false;
  for (const auto& row : lattice.gram()) {
    for (const auto& v : row) {
      if (abs(v) > kFastEntry) return false;
    }
  }
  return true;
}

// Largest |q(x)| possible on the fast path, as an upper bound.
__int128 fast_q_limit(std::size_t rank, std::int64_t bound) {
  return static_cast<__int128>(rank) * rank * (static_cast<__int128>(1) << 40) * bound * bound;
}

__int128 to_i128(const Integer& v) {
  // Only called for values bounded by fast_q_limit or kFastEntry.
  __int128 out = 0;
  Integer a = abs(v);
  __int128 scale = 1;
  while (a != 0) {
    out += scale * static_cast<__int128>(static_cast<std::uint64_t>(a & 0xFFFFFFFFu));
    a >>= 32;
    scale <<= 32;
  }
  return v < 0 ? -out : out;
}

Integer from_i128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 a = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer out = static_cast<std::uint64_t>(a >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(a);
  return neg ? -out : out;
}

LatticeVector to_vector(const std::vector<std::int64_t>& x) {
  std::vector<Integer> coords;
  coords.reserve(x.size());
  for (auto c : x) coords.emplace_back(c);
  return LatticeVector(std::move(coords));
}

// Runs `visit(x, q)` with q either __int128 or Integer, whichever is safe.
template <class Visit>
void dispatch_scan(const IntegralLattice& lattice, std::int64_t bound, Visit&& visit) {
  if (fits_fast_path(lattice, bound)) {
    std::vector<std::vector<__int128>> g;
    for (const auto& row : lattice.gram()) {
      g.emplace_back();
      for (const auto& v : row) g.back().push_back(to_i128(v));
    }
    scan(g, bound, visit);
  } else {
    scan(lattice.gram(), bound, visit);
  }
}

// Found verdicts are re-checked through the generic pairing.
SearchVerdict verified(const IntegralLattice& lattice, LatticeVector witness,
                       const Integer& target, std::int64_t bound) {
  if (square(lattice, witness) != target) {
    throw std::logic_error("box scan produced a witness that fails re-verification");
  }
  return SearchVerdict::found_with(std::move(witness), bound);
}

}  // namespace

std::string SearchVerdict::to_string() const {
  if (found()) return "Found " + witness->to_string();
  return "NotFoundWithinBound(" + std::to_string(bound_used) + ")";
}

bool box_order_less(const LatticeVector& a, const LatticeVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) continue;
    return ordinal_key(a[i]) < ordinal_key(b[i]);
  }
  return a.size() < b.size();
}

void for_each_in_box(const IntegralLattice& lattice, std::int64_t bound,
                     const std::function<bool(const LatticeVector&, const Integer&)>& visit) {
  check_bound(bound);
  dispatch_scan(lattice, bound, [&](const std::vector<std::int64_t>& x, const auto& q) {
    if constexpr (std::is_same_v<std::decay_t<decltype(q)>, __int128>) {
      return visit(to_vector(x), from_i128(q));
    } else {
      return visit(to_vector(x), q);
    }
  });
}

SearchVerdict represent(const IntegralLattice& lattice, const Integer& target, std::int64_t bound) {
  check_bound(bound);
  std::optional<LatticeVector> hit;
  if (fits_fast_path(lattice, bound)) {
    if (abs(target) > from_i128(fast_q_limit(lattice.rank(), bound))) {
      return SearchVerdict::not_found(bound);
    }
    const __int128 t = to_i128(target);
    dispatch_scan(lattice, bound, [&](const std::vector<std::int64_t>& x, const auto& q) {
      if constexpr (std::is_same_v<std::decay_t<decltype(q)>, __int128>) {
        if (q != t) return true;
      } else {
        if (q != target) return true;
      }
      hit = to_vector(x);
      return false;
    });
  } else {
    scan(lattice.gram(), bound, [&](const std::vector<std::int64_t>& x, const Integer& q) {
      if (q != target) return true;
      hit = to_vector(x);
      return false;
    });
  }
  if (!hit) return SearchVerdict::not_found(bound);
  return verified(lattice, std::move(*hit), target, bound);
}

SearchVerdict isotropic_search(const IntegralLattice& lattice, std::int64_t bound) {
  check_bound(bound);
  std::optional<LatticeVector> hit;
  dispatch_scan(lattice, bound, [&](const std::vector<std::int64_t>& x, const auto& q) {
    if (q != 0) return true;
    LatticeVector v = to_vector(x);
    if (!is_primitive(v)) return true;
    hit = std::move(v);
    return false;
  });
  if (!hit) return SearchVerdict::not_found(bound);
  return verified(lattice, std::move(*hit), 0, bound);
}

BinaryReduction gauss_reduce_binary(const IntegralLattice& lattice) {
  if (lattice.rank() != 2) {
    throw InputError("binary reduction needs a rank-2 lattice, got rank " +
                     std::to_string(lattice.rank()));
  }
  Integer a = lattice(0, 0), b = lattice(0, 1), c = lattice(1, 1);
  // Columns of u are the current basis in original coordinates.
  std::array<std::array<Integer, 2>, 2> u{{{1, 0}, {0, 1}}};

  // e2 <- e2 + t e1
  auto shear = [&](const Integer& t) {
    c += 2 * t * b + t * t * a;
    b += t * a;
    u[0][1] += t * u[0][0];
    u[1][1] += t * u[1][0];
  };
  // (e1, e2) <- (e2, -e1)
  auto rotate = [&] {
    std::swap(a, c);
    b = -b;
    for (int i = 0; i < 2; ++i) {
      Integer first = u[i][0];
      u[i][0] = u[i][1];
      u[i][1] = -first;
    }
  };

  while (true) {
    if (a == 0) {
      if (b == 0) {
        if (c != 0) rotate();
        break;
      }
      const Integer m = 2 * abs(b);
      Integer r = c % m;
      if (r < 0) r += m;
      shear((r - c) / (2 * b));
      break;
    }
    const Integer m = abs(a);
    Integer r = b % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    shear((r - b) / a);
    if (c == 0) {
      if (b == 0) break;
      rotate();
      continue;
    }
    if (abs(c) < abs(a)) {
      rotate();
      continue;
    }
    break;
  }
  if (b < 0) {
    b = -b;
    u[0][1] = -u[0][1];
    u[1][1] = -u[1][1];
  }
  IntegralLattice::Gram g{{a, b}, {b, c}};
  return {IntegralLattice(std::move(g)), u};
}

std::vector<LatticeVector> minus_two_classes(const IntegralLattice& lattice,
                                             const LatticeVector& ample, std::int64_t bound) {
  check_dimension(lattice, ample, "ample class");
  if (square(lattice, ample) <= 0) {
    throw InputError("ample class must have positive square, got " +
                     square(lattice, ample).str());
  }
  check_bound(bound);
  std::vector<LatticeVector> out;
  dispatch_scan(lattice, bound, [&](const std::vector<std::int64_t>& x, const auto& q) {
    if (q != -2) return true;
    LatticeVector c = to_vector(x);
    if (pair(lattice, ample, c) > 0) out.push_back(std::move(c));
    return true;
  });
  return out;
}

RepresentationEquivalence beauville_zero_iff_2m2(const IntegralLattice& surface,
                                                 std::int64_t bound) {
  check_bound(bound);
  RepresentationEquivalence result;
  result.beauville_isotropic = isotropic_search(beauville_extend(surface, 2).extended(), bound);

  // One pass over the box: keep the smallest m with q(x) = 2m^2, m <= bound,
  // and for it the first x in box order.  Same answer as calling
  // represent(S, 2m^2) for m = 0, 1, ..., bound in turn.
  std::optional<LatticeVector> best;
  Integer best_m = bound + 1;
  for_each_in_box(surface, bound, [&](const LatticeVector& x, const Integer& q) {
    if (q < 0 || q % 2 != 0) return true;
    const Integer half = q / 2;
    const Integer root = boost::multiprecision::sqrt(half);
    if (root * root != half || root >= best_m) return true;
    best = x;
    best_m = root;
    return best_m != 0;
  });
  if (best) {
    result.surface_two_m_squared = verified(surface, std::move(*best), 2 * best_m * best_m, bound);
    result.m = best_m;
  } else {
    result.surface_two_m_squared = SearchVerdict::not_found(bound);
  }
  result.consistent =
      result.beauville_isotropic.found() == result.surface_two_m_squared.found();
  return result;
}

}  // namespace k3lat
