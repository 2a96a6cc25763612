#include "k3lat/density.hpp"

#include <functional>

#include "k3lat/hilbert.hpp"
#include "k3lat/k3_toolkit.hpp"
#include "k3lat/lattice_io.hpp"
#include "k3lat/quad_rep.hpp"
#include "k3lat/random_lattices.hpp"

namespace k3lat {

void K3Input::validate() const {
  check_dimension(lattice, polarization, "polarization");
  const Integer d = square(lattice, polarization);
  if (d <= 0 || d % 2 != 0) {
    throw InputError("polarization must have positive even square, got " + d.str());
  }
  if (n < 2) throw InputError("n must be >= 2, got " + std::to_string(n));
  if (bound < 1) throw InputError("bound must be >= 1");
}

std::optional<Integer> two_m_squared_root(const Integer& degree) {
  if (degree <= 0 || degree % 2 != 0) return std::nullopt;
  const Integer half = degree / 2;
  const Integer m = boost::multiprecision::sqrt(half);
  if (m * m != half) return std::nullopt;
  return m;
}

namespace {

bool proportional(const LatticeVector& a, const LatticeVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return true;
}

Claim claim(std::string id, std::string citation, bool ok, ClaimValue lhs, ClaimValue rhs,
            std::string detail = {}) {
  return {std::move(id), std::move(citation), ok ? ClaimStatus::Pass : ClaimStatus::Fail,
          std::move(lhs), std::move(rhs), std::move(detail)};
}

std::string signature_string(const SignatureProfile& s) {
  return "(" + std::to_string(s.n_plus) + "," + std::to_string(s.n_minus) + "," +
         std::to_string(s.n_zero) + ")";
}

// Counts how many of `total` trials satisfy `trial`, remembering the first
// failure's description.
struct Tally {
  std::int64_t ok = 0;
  std::int64_t total = 0;
  std::string first_failure;

  void record(bool passed, const std::function<std::string()>& describe) {
    ++total;
    if (passed) {
      ++ok;
    } else if (first_failure.empty()) {
      first_failure = describe();
    }
  }

  Claim to_claim(std::string id, std::string citation, std::string detail) const {
    const bool passed = ok == total && total > 0;
    return claim(std::move(id), std::move(citation), passed, Integer(ok), Integer(total),
                 passed ? std::move(detail) : detail + "; first failure: " + first_failure);
  }
};

IntegralLattice quartic_octic(long long k) {
  return IntegralLattice({{4, k}, {k, 8}}, std::vector<std::string>{"f4", "f8"});
}

std::string render(const HilbertClass& c, const BeauvilleLattice& b) {
  return format_vector_expr(b.extended(), c.embed());
}

// Independent stream per sub-suite so adding a claim does not shift others.
SeededRng stream(std::uint64_t seed, std::uint64_t salt) {
  return SeededRng(seed * 0x9E3779B97F4A7C15ull + salt);
}

const char* kBeauvilleForm = "Beauville form: Pic(S^[n]) = Pic(S) + Ze orthogonally, (e,e) = -2(n-1)";
const char* kInvolution = "quartic Hilbert square involution: j*x = -x + (f4-e, x)(f4-e)";
const char* kPushforward = "j*(f8 - 2e) = (k-4)f4 - f8 - (k-6)e on <f4,f8> with Gram [[4,k],[k,8]]";
const char* kNorm = "g = (k-4)f4 - f8 has <g,g> = 2(k-6)^2 = 2m^2 with m = k-6";
const char* kFFGG = "S^[2]: f.f.g.g = <f,f><g,g> + 2<f,g>^2";
const char* kFEGG = "S^[2]: f.e.g.g = 0";
const char* kEEGG = "S^[2]: e.e.g.g = -2<g,g>";
const char* kSigma = "S^[2]: (f-me).(f-me).Sigma = <f,f> - m^2";
const char* kStar = "S^[2]: (f-me)^2.(g*g) = 2<f,g>^2 - m^2<g,g>, g*g = g.g - <g,g>Sigma";
const char* kDisc = "quartic-octic lattice [[4,k],[k,8]], k > 7: discriminant 32 - k^2 < 0";
const char* kKummer = "Kummer construction: isogeny of degree 2n+5, curves meeting in n+2 points";
const char* kStratum = "strata of C1*...*Cn over a partition (a_j) of n: #{a_j = 1} + sum(a_j - 1) < n unless all a_j = 1";
const char* kMultisection = "degree 2(n-1) polarization: C meets E1 u ... u En in n(2n-2) points";
const char* kGenus = "polarization of degree 2(n-1) has curves of genus n";
const char* kKodaira = "symmetric power X^(n) of a surface of Kodaira dimension k has Kodaira dimension nk";
const char* kDegree2 = "degree-2 K3: E = g, or <E,E> < <g,E> < <g,g> forces <E,E> = 0";
const char* kRepresent = "Beauville form of S^[2] represents 0 iff Pic(S) represents 2m^2";
const char* kReflection = "Picard-Lefschetz reflection rho(x) = x + <x,C>C for a (-2)-class C";
const char* kHodge = "Hodge index: det [[2m^2, <f,g>], [<f,g>, <g,g>]] < 0 gives 2<f,g>^2 > m^2<g,g>";

void beauville_claims(ClaimReport& r) {
  const IntegralLattice base = quartic_octic(9);
  for (int n = 2; n <= 5; ++n) {
    const auto b = beauville_extend(base, n);
    const Integer ee = b.extended()(2, 2);
    const Integer expected = -2 * Integer(n - 1);
    r.claims.push_back(claim("beauville.e_square.n" + std::to_string(n), kBeauvilleForm,
                             ee == expected, ee, expected));
    const Integer disc = discriminant(b.extended());
    const Integer product = discriminant(base) * discriminant(IntegralLattice({{-2LL * (n - 1)}}));
    r.claims.push_back(claim("beauville.disc_product.n" + std::to_string(n), kBeauvilleForm,
                             disc == product, disc, product, "disc(L + M) = disc(L) disc(M)"));
  }
}

void involution_claims(ClaimReport& r, std::uint64_t seed) {
  Tally involutive, isometry, fixed;
  SeededRng rng = stream(seed, 1);
  for (long long k = 8; k <= 20; ++k) {
    const auto b = beauville_extend(quartic_octic(k), 2);
    const LatticeVector f4{1, 0};
    const HilbertClass mirror{f4, -1};
    fixed.record(debarre_involution(b, f4, mirror) == mirror, [&] { return "k=" + std::to_string(k); });
    for (int t = 0; t < 100; ++t) {
      const auto x = HilbertClass::from_extended(rng.vector(3, -30, 30));
      const auto y = HilbertClass::from_extended(rng.vector(3, -30, 30));
      const auto jx = debarre_involution(b, f4, x);
      const auto jy = debarre_involution(b, f4, y);
      involutive.record(debarre_involution(b, f4, jx) == x,
                        [&] { return "k=" + std::to_string(k) + " x=" + x.to_string(); });
      isometry.record(beauville_pair(b, jx, jy) == beauville_pair(b, x, y),
                      [&] { return "k=" + std::to_string(k) + " x=" + x.to_string(); });
    }
  }
  r.claims.push_back(involutive.to_claim("involution.involutive", kInvolution,
                                         "j(j(x)) = x, random x, k = 8..20"));
  r.claims.push_back(isometry.to_claim("involution.isometry", kInvolution,
                                       "(jx, jy) = (x, y), random x, y, k = 8..20"));
  r.claims.push_back(fixed.to_claim("involution.fixes_f4_minus_e", kInvolution,
                                    "j(f4 - e) = f4 - e, k = 8..20"));

  Tally push;
  for (long long k = 8; k <= 40; ++k) {
    const auto b = beauville_extend(quartic_octic(k), 2);
    const HilbertClass source{LatticeVector{0, 1}, -2};
    const HilbertClass image = debarre_involution(b, LatticeVector{1, 0}, source);
    const HilbertClass expected{LatticeVector{k - 4, -1}, -(k - 6)};
    push.record(image == expected, [&] {
      return "k=" + std::to_string(k) + ": " + render(image, b) + " vs " + render(expected, b);
    });
  }
  r.claims.push_back(push.to_claim("involution.pushforward", kPushforward, "k = 8..40"));

  // The k = 9 instance spelled out, for readers of the report.
  const auto b9 = beauville_extend(quartic_octic(9), 2);
  const auto image9 = debarre_involution(b9, LatticeVector{1, 0}, HilbertClass{LatticeVector{0, 1}, -2});
  const std::string expected9 = render(HilbertClass{LatticeVector{5, -1}, -3}, b9);
  r.claims.push_back(claim("involution.pushforward.k9", kPushforward,
                           render(image9, b9) == expected9, render(image9, b9), expected9));
}

void norm_claims(ClaimReport& r) {
  Tally t;
  for (long long k = 8; k <= 40; ++k) {
    const auto base = quartic_octic(k);
    const LatticeVector g{k - 4, -1};
    const Integer gg = square(base, g);
    const Integer expected = 2 * Integer(k - 6) * Integer(k - 6);
    t.record(gg == expected, [&] { return "k=" + std::to_string(k) + " <g,g>=" + gg.str(); });
  }
  r.claims.push_back(t.to_claim("norm.g_square", kNorm, "k = 8..40"));
}

void intersection_claims(ClaimReport& r, std::uint64_t seed) {
  SeededRng rng = stream(seed, 2);
  Tally ffgg, fegg, eegg, star;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t rank = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto base = random_symmetric(rng, rank, 10);
    const auto b = beauville_extend(base, 2);
    const LatticeVector f = rng.vector(rank, -9, 9);
    const LatticeVector g = rng.vector(rank, -9, 9);
    const Integer m = rng.uniform(-6, 6);
    const auto F = HilbertClass::surface(f);
    const auto G = HilbertClass::surface(g);
    const auto E = HilbertClass::e(rank);
    const Integer ff = square(base, f), gg = square(base, g), fg = pair(base, f, g);
    auto where = [&] { return "f=" + f.to_string() + " g=" + g.to_string(); };
    ffgg.record(quadruple_intersection(b, F, F, G, G) == ff * gg + 2 * fg * fg, where);
    fegg.record(quadruple_intersection(b, F, E, G, G) == 0, where);
    eegg.record(quadruple_intersection(b, E, E, G, G) == -2 * gg, where);
    const HilbertClass fme{f, -m};
    const Integer decomposition =
        quadruple_intersection(b, fme, fme, G, G) - gg * sigma_pairing(b, f, m);
    star.record(decomposition == 2 * fg * fg - m * m * gg, where);
  }
  r.claims.push_back(ffgg.to_claim("intersection.ffgg", kFFGG, "1000 random (f, g), rank <= 4"));
  r.claims.push_back(fegg.to_claim("intersection.fegg", kFEGG, "1000 random (f, g), rank <= 4"));
  r.claims.push_back(eegg.to_claim("intersection.eegg", kEEGG, "1000 random (f, g), rank <= 4"));
  r.claims.push_back(star.to_claim("intersection.star_square", kStar,
                                   "decomposition path vs closed form, 1000 random (f, m, g)"));

  const auto b8 = beauville_extend(IntegralLattice({{8}}), 2);
  const Integer sigma = sigma_pairing(b8, LatticeVector{1}, 2);
  r.claims.push_back(claim("intersection.sigma.degree8", kSigma, sigma == 4, sigma, Integer(4),
                           "<f,f> = 8, m = 2"));
  const auto e = HilbertClass::e(1);
  const Integer e4 = quadruple_intersection(b8, e, e, e, e);
  r.claims.push_back(claim("intersection.e_fourth", kEEGG, e4 == 12, e4, Integer(12),
                           "e.e.e.e = 3 (e,e)^2"));
  const IntegralLattice fg_lattice({{8, 5}, {5, 2}});
  const auto bfg = beauville_extend(fg_lattice, 2);
  const Integer s = star_square_pairing(bfg, LatticeVector{1, 0}, 2, LatticeVector{0, 1});
  r.claims.push_back(claim("intersection.star_square.example", kStar, s == 42, s, Integer(42),
                           "<f,g> = 5, m = 2, <g,g> = 2"));
}

void discriminant_claims(ClaimReport& r) {
  Tally t;
  for (long long k = 8; k <= 40; ++k) {
    const Integer d = discriminant(quartic_octic(k));
    const Integer expected = 32 - Integer(k) * k;
    t.record(d == expected && d < 0, [&] { return "k=" + std::to_string(k) + " disc=" + d.str(); });
  }
  r.claims.push_back(t.to_claim("discriminant.quartic_octic", kDisc, "k = 8..40"));
}

void combinatorial_claims(ClaimReport& r) {
  Tally kummer, orbit;
  for (long long n = 1; n <= 50; ++n) {
    const auto c = kummer_intersection_count(n);
    kummer.record(c.isogeny_degree == 2 * n + 5 && c.d1_dot_d2 == n + 2,
                  [&] { return "n=" + std::to_string(n); });
    orbit.record(c.d1_dot_d2 == (c.isogeny_degree - 1) / 2 && (c.isogeny_degree - 1) % 2 == 0,
                 [&] { return "n=" + std::to_string(n); });
  }
  r.claims.push_back(kummer.to_claim("kummer.table", kKummer, "(2n+5, n+2), n = 1..50"));
  r.claims.push_back(orbit.to_claim("kummer.orbit_identity", kKummer,
                                    "n+2 = (2n+5-1)/2 orbits of non-2-torsion points, n = 1..50"));

  for (int n = 1; n <= 12; ++n) {
    Tally t;
    for (const auto& p : Partition::all(n)) {
      const auto sb = stratum_dim_bound(p);
      t.record(sb.strict == !p.all_ones(), [&] {
        std::string s;
        for (int a : p.parts()) s += std::to_string(a) + " ";
        return "partition " + s;
      });
    }
    r.claims.push_back(t.to_claim("stratum.strict.n" + std::to_string(n), kStratum,
                                  "all partitions of " + std::to_string(n)));
  }

  Tally multi;
  for (long long n = 2; n <= 10; ++n) {
    const Integer d = multisection_degree(n);
    const Integer gg = 2 * Integer(n - 1);
    multi.record(d == n * (2 * n - 2) && d == n * gg, [&] { return "n=" + std::to_string(n); });
  }
  r.claims.push_back(multi.to_claim("multisection.degree", kMultisection,
                                    "n(2n-2) = n<g,g>, n = 2..10"));

  Tally genus;
  for (long long n = 2; n <= 50; ++n) {
    const IntegralLattice pol({{2 * (n - 1)}});
    genus.record(genus_of_class(pol, LatticeVector{1}) == n, [&] { return "n=" + std::to_string(n); });
  }
  r.claims.push_back(genus.to_claim("genus.degree", kGenus, "n = 2..50"));

  Tally kod;
  for (long long n = 1; n <= 100; ++n) {
    kod.record(kodaira_dim_sym(KodairaDim::surface(0), n) == KodairaDim::of(0) &&
                   kodaira_dim_sym(KodairaDim::surface(1), n) == KodairaDim::of(n) &&
                   kodaira_dim_sym(KodairaDim::surface(2), n) == KodairaDim::of(2 * n) &&
                   kodaira_dim_sym(KodairaDim::minus_infinity(), n).is_minus_infinity(),
               [&] { return "n=" + std::to_string(n); });
  }
  r.claims.push_back(kod.to_claim("kodaira.symmetric_power", kKodaira,
                                  "k in {-inf, 0, 1, 2}, n = 1..100"));
}

void degree2_claims(ClaimReport& r) {
  const auto fiber = degree2_case_analysis(2, 2, 2);
  r.claims.push_back(claim("degree2.fiber_branch", kDegree2,
                           fiber.which == Degree2Case::FiberClassEqualsG, to_string(fiber.which),
                           std::string("FiberClassEqualsG"), fiber.justification));
  const auto elliptic = degree2_case_analysis(2, 1, 0);
  r.claims.push_back(claim("degree2.elliptic_branch", kDegree2,
                           elliptic.which == Degree2Case::EllipticK3, to_string(elliptic.which),
                           std::string("EllipticK3"), elliptic.justification));
  std::string outcome = "accepted";
  try {
    degree2_case_analysis(2, 1, 2);
  } catch (const InputError& e) {
    outcome = "rejected";
  }
  r.claims.push_back(claim("degree2.inconsistent", kDegree2, outcome == "rejected", outcome,
                           std::string("rejected"), "(g,g), (g,E), (E,E) = 2, 1, 2"));
}

void representation_claims(ClaimReport& r, std::int64_t bound) {
  for (long long d : {2LL, 4LL, 8LL, 18LL, 32LL}) {
    const IntegralLattice s({{d}});
    const auto eq = beauville_zero_iff_2m2(s, bound);
    const std::string tag = "S" + std::to_string(d);
    r.claims.push_back(claim("represent.consistent." + tag, kRepresent, eq.consistent,
                             eq.beauville_isotropic.to_string(),
                             eq.surface_two_m_squared.to_string(),
                             eq.m ? "m = " + eq.m->str() : "no m within bound"));

    Claim witness;
    witness.id = "represent.witness." + tag;
    witness.citation = kRepresent;
    witness.lhs = eq.beauville_isotropic.to_string();
    if (const auto m = two_m_squared_root(d)) {
      const LatticeVector expected{1, static_cast<long long>(*m)};
      witness.rhs = "Found " + expected.to_string();
      if (!eq.beauville_isotropic.found()) {
        witness.status = ClaimStatus::Inconclusive;
        witness.detail = "bound " + std::to_string(bound) + " below m = " + m->str();
      } else {
        witness.status =
            *eq.beauville_isotropic.witness == expected ? ClaimStatus::Pass : ClaimStatus::Fail;
      }
    } else {
      witness.rhs = "NotFoundWithinBound(" + std::to_string(bound) + ")";
      const bool neither = !eq.beauville_isotropic.found() && !eq.surface_two_m_squared.found();
      witness.status = neither ? ClaimStatus::Pass : ClaimStatus::Fail;
      witness.detail = "degree " + std::to_string(d) + " is not of the form 2m^2";
    }
    r.claims.push_back(std::move(witness));
  }
}

void reflection_claims(ClaimReport& r, std::uint64_t seed) {
  SeededRng rng = stream(seed, 3);
  Tally involutive, isometry, negates;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t rank = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto lc = random_lattice_with_minus_two(rng, rank);
    const auto& c = lc.marked;
    const LatticeVector x = rng.vector(rank, -20, 20);
    const LatticeVector y = rng.vector(rank, -20, 20);
    const auto rx = picard_lefschetz_reflect(lc.lattice, x, c);
    const auto ry = picard_lefschetz_reflect(lc.lattice, y, c);
    auto where = [&] { return "C=" + c.to_string() + " x=" + x.to_string(); };
    involutive.record(picard_lefschetz_reflect(lc.lattice, rx, c) == x, where);
    isometry.record(pair(lc.lattice, rx, ry) == pair(lc.lattice, x, y), where);
    negates.record(picard_lefschetz_reflect(lc.lattice, c, c) == -c, where);
  }
  r.claims.push_back(involutive.to_claim("reflection.involutive", kReflection,
                                         "rho(rho(x)) = x, 1000 random (x, C)"));
  r.claims.push_back(isometry.to_claim("reflection.isometry", kReflection,
                                       "<rho x, rho y> = <x, y>, 1000 random (x, y, C)"));
  r.claims.push_back(negates.to_claim("reflection.negates_c", kReflection,
                                      "rho(C) = -C, 1000 random C"));
}

void hodge_claims(ClaimReport& r, std::uint64_t seed) {
  SeededRng rng = stream(seed, 4);
  Tally t;
  for (int i = 0; i < 500; ++i) {
    const std::size_t rank = 2 + static_cast<std::size_t>(i % 4);
    const auto inst = random_hodge_instance(rng, rank, rng.uniform(1, 6));
    K3Input input{inst.lattice, inst.f, 2, 1};
    const auto report = check_density_hypotheses(input, inst.g);
    t.record(report.count(ClaimStatus::Pass) == report.claims.size(), [&] {
      return "rank " + std::to_string(rank) + " f=" + inst.f.to_string() +
             " g=" + inst.g.to_string();
    });
  }
  r.claims.push_back(t.to_claim("hodge.positivity", kHodge,
                                "500 random signature (1, r-1) lattices, r = 2..5, f^2 = 2m^2"));
}

}  // namespace

ClaimReport check_density_hypotheses(const K3Input& input, const LatticeVector& g) {
  input.validate();
  if (input.n != 2) {
    throw Unsupported("density hypotheses are checked on S^[2] only, got n = " +
                      std::to_string(input.n));
  }
  const auto& lattice = input.lattice;
  const auto& f = input.polarization;
  check_dimension(lattice, g, "g");
  const Integer ff = square(lattice, f);
  const auto m = two_m_squared_root(ff);
  if (!m) {
    throw InputError("polarization degree " + ff.str() +
                     " is not of the form 2m^2 required for K3 surfaces of degree 2m^2");
  }
  const Integer gg = square(lattice, g);
  if (gg <= 0) throw InputError("g must have positive square, got " + gg.str());
  const Integer fg = pair(lattice, f, g);

  ClaimReport r;
  r.suite = "density-check";
  r.bound = input.bound;

  const auto sig = signature(lattice);
  const std::string expected_sig = "(1," + std::to_string(lattice.rank() - 1) + ",0)";
  r.claims.push_back(claim("density.hodge_index", kHodge, hodge_index_valid(lattice),
                           signature_string(sig), expected_sig, "signature of Pic(S)"));

  const Integer det = discriminant(sublattice_gram(lattice, {f, g}));
  std::string det_detail = "det [[" + ff.str() + ", " + fg.str() + "], [" + fg.str() + ", " +
                           gg.str() + "]]";
  if (det >= 0) det_detail = proportional(f, g) ? "g proportional to f" : "determinant not negative";
  r.claims.push_back(claim("density.gram_determinant", kHodge, det < 0, det, Integer(0),
                           det_detail));

  const Integer lhs = 2 * fg * fg;
  const Integer rhs = *m * *m * gg;
  r.claims.push_back(claim("density.positivity", kHodge, lhs > rhs, lhs, rhs,
                           "2<f,g>^2 vs m^2<g,g>, m = " + m->str()));

  const auto b = beauville_extend(IntegralLattice(lattice.gram()), 2);
  const Integer star = star_square_pairing(b, f, *m, g);
  r.claims.push_back(claim("density.star_square", kStar, star == lhs - rhs && star > 0, star,
                           Integer(lhs - rhs), "(f-me)^2.(g*g) > 0"));
  return r;
}

ClaimReport verify_paper_claims(std::int64_t bound, std::uint64_t seed) {
  if (bound < 1) throw InputError("bound must be >= 1");
  ClaimReport r;
  r.suite = "verify-paper";
  r.seed = seed;
  r.bound = bound;
  beauville_claims(r);
  involution_claims(r, seed);
  norm_claims(r);
  intersection_claims(r, seed);
  discriminant_claims(r);
  combinatorial_claims(r);
  degree2_claims(r);
  representation_claims(r, bound);
  reflection_claims(r, seed);
  hodge_claims(r, seed);
  return r;
}

}  // namespace k3lat
