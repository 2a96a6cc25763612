#include "k3lat/random_lattices.hpp"

namespace k3lat {

std::int64_t SeededRng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

LatticeVector SeededRng::vector(std::size_t rank, std::int64_t lo, std::int64_t hi) {
  std::vector<Integer> coords;
  coords.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) coords.emplace_back(uniform(lo, hi));
  return LatticeVector(std::move(coords));
}

LatticeVector Unimodular::apply_inverse(const LatticeVector& y) const {
  const std::size_t r = inverse.size();
  std::vector<Integer> out(r, Integer(0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) out[i] += inverse[i][j] * y[j];
  }
  return LatticeVector(std::move(out));
}

IntegralLattice Unimodular::transform(const IntegralLattice& lattice) const {
  const std::size_t r = lattice.rank();
  IntegralLattice::Gram gu(r, std::vector<Integer>(r, Integer(0)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) gu[i][j] += lattice(i, k) * forward[k][j];
    }
  }
  IntegralLattice::Gram out(r, std::vector<Integer>(r, Integer(0)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) out[i][j] += forward[k][i] * gu[k][j];
    }
  }
  return IntegralLattice(std::move(out));
}

Unimodular random_unimodular(SeededRng& rng, std::size_t rank, int steps) {
  Unimodular u;
  u.forward.assign(rank, std::vector<Integer>(rank, Integer(0)));
  u.inverse = u.forward;
  for (std::size_t i = 0; i < rank; ++i) u.forward[i][i] = u.inverse[i][i] = 1;
  if (rank < 2) return u;
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, rank - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, rank - 2));
    if (j >= i) ++j;
    const Integer t = rng.uniform(-2, 2);
    // U <- U E with E = I + t e_j e_i^T: column i += t * column j.
    for (std::size_t k = 0; k < rank; ++k) u.forward[k][i] += t * u.forward[k][j];
    // U^{-1} <- E^{-1} U^{-1}: row j -= t * row i.
    for (std::size_t k = 0; k < rank; ++k) u.inverse[j][k] -= t * u.inverse[i][k];
  }
  return u;
}

namespace {

// -(B^T B + I): negative definite.
IntegralLattice::Gram random_negative_definite(SeededRng& rng, std::size_t rank) {
  std::vector<std::vector<Integer>> b(rank, std::vector<Integer>(rank, Integer(0)));
  for (auto& row : b) {
    for (auto& v : row) v = rng.uniform(-3, 3);
  }
  IntegralLattice::Gram out(rank, std::vector<Integer>(rank, Integer(0)));
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      for (std::size_t k = 0; k < rank; ++k) out[i][j] -= b[k][i] * b[k][j];
    }
    out[i][i] -= 1;
  }
  return out;
}

IntegralLattice::Gram with_leading(const Integer& lead, const IntegralLattice::Gram& tail) {
  const std::size_t r = tail.size() + 1;
  IntegralLattice::Gram g(r, std::vector<Integer>(r, Integer(0)));
  g[0][0] = lead;
  for (std::size_t i = 0; i + 1 < r; ++i) {
    for (std::size_t j = 0; j + 1 < r; ++j) g[i + 1][j + 1] = tail[i][j];
  }
  return g;
}

}  // namespace

HodgeInstance random_hodge_instance(SeededRng& rng, std::size_t rank, std::int64_t m) {
  if (rank < 2) throw InputError("a non-proportional pair needs rank >= 2");
  const Integer lead = 2 * Integer(m) * Integer(m);
  const IntegralLattice diagonal(with_leading(lead, random_negative_definite(rng, rank - 1)));

  // g = a f + h with h != 0 in the negative part; raise a until g^2 > 0.
  LatticeVector h = LatticeVector::zero(rank);
  while (h.is_zero()) {
    for (std::size_t i = 1; i < rank; ++i) h[i] = rng.uniform(-2, 2);
  }
  Integer a = rng.uniform(1, 6);
  const LatticeVector e1 = LatticeVector::unit(rank, 0);
  while (square(diagonal, a * e1 + h) <= 0) ++a;
  const LatticeVector g_old = a * e1 + h;

  const Unimodular u = random_unimodular(rng, rank, 4 * static_cast<int>(rank));
  return {u.transform(diagonal), u.apply_inverse(e1), u.apply_inverse(g_old), m};
}

LatticeWithClass random_lattice_with_minus_two(SeededRng& rng, std::size_t rank) {
  if (rank < 1) throw InputError("rank must be >= 1");
  const IntegralLattice rest = random_symmetric(rng, rank - 1, 6);
  const IntegralLattice base(with_leading(-2, rest.gram()));
  const Unimodular u = random_unimodular(rng, rank, 4 * static_cast<int>(rank));
  return {u.transform(base), u.apply_inverse(LatticeVector::unit(rank, 0))};
}

IntegralLattice random_symmetric(SeededRng& rng, std::size_t rank, std::int64_t range) {
  IntegralLattice::Gram g(rank, std::vector<Integer>(rank, Integer(0)));
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i; j < rank; ++j) {
      g[i][j] = rng.uniform(-range, range);
      g[j][i] = g[i][j];
    }
  }
  return IntegralLattice(std::move(g));
}

}  // namespace k3lat
