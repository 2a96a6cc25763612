#include "k3lat/cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "k3lat/density.hpp"
#include "k3lat/hilbert.hpp"
#include "k3lat/k3_toolkit.hpp"
#include "k3lat/lattice_io.hpp"
#include "k3lat/quad_rep.hpp"

namespace k3lat {

namespace {

struct Options {
  std::string lattice_path;
  std::int64_t bound = kDefaultBound;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  std::string target;
  int n = 2;
  std::string f4 = "f4";
  std::string x;
  std::string c;
  std::string f;
  std::string g;
  std::string m;
};

nlohmann::ordered_json vector_json(const LatticeVector& v) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : v.coords()) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max()) {
      arr.push_back(static_cast<std::int64_t>(c));
    } else {
      arr.push_back(c.str());
    }
  }
  return arr;
}

nlohmann::ordered_json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

int print_verdict(const SearchVerdict& v, const Options& o, std::ostream& out) {
  if (o.json) {
    nlohmann::ordered_json j;
    j["status"] = v.found() ? "Found" : "NotFoundWithinBound";
    j["witness"] = v.found() ? vector_json(*v.witness) : nlohmann::ordered_json(nullptr);
    j["bound"] = v.bound_used;
    out << j.dump(2) << '\n';
  } else {
    out << v.to_string() << '\n';
  }
  return v.found() ? kExitPass : kExitInconclusive;
}

int print_integer(const std::string& name, const Integer& v, const Options& o, std::ostream& out) {
  if (o.json) {
    nlohmann::ordered_json j;
    j[name] = integer_json(v);
    out << j.dump(2) << '\n';
  } else {
    out << v << '\n';
  }
  return kExitPass;
}

int print_report(const ClaimReport& r, const Options& o, std::ostream& out) {
  if (o.json) {
    out << r.to_json().dump(2) << '\n';
  } else {
    out << r.render_text();
  }
  return r.exit_code();
}

std::string gram_string(const IntegralLattice& l) {
  std::string s = "[";
  for (std::size_t i = 0; i < l.rank(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < l.rank(); ++j) {
      if (j) s += ",";
      s += l(i, j).str();
    }
    s += "]";
  }
  return s + "]";
}

int lattice_info(const Options& o, std::ostream& out) {
  const auto l = load_lattice_file(o.lattice_path);
  const auto sig = signature(l);
  const Integer disc = discriminant(l);
  const bool hodge = hodge_index_valid(l);
  std::optional<BinaryReduction> red;
  if (l.rank() == 2) red = gauss_reduce_binary(l);
  if (o.json) {
    nlohmann::ordered_json j = lattice_to_json(l);
    j["discriminant"] = integer_json(disc);
    j["signature"] = {sig.n_plus, sig.n_minus, sig.n_zero};
    j["hodge_index"] = hodge;
    if (red) {
      j["reduced_gram"] = lattice_to_json(red->reduced)["gram"];
      j["transform"] = {{integer_json(red->transform[0][0]), integer_json(red->transform[0][1])},
                        {integer_json(red->transform[1][0]), integer_json(red->transform[1][1])}};
    }
    out << j.dump(2) << '\n';
    return kExitPass;
  }
  out << "rank: " << l.rank() << '\n';
  out << "labels:";
  for (const auto& name : l.basis_names()) out << ' ' << name;
  out << '\n';
  out << "gram: " << gram_string(l) << '\n';
  out << "discriminant: " << disc << '\n';
  out << "signature: (" << sig.n_plus << "," << sig.n_minus << "," << sig.n_zero << ")\n";
  out << "hodge_index: " << (hodge ? "true" : "false") << '\n';
  if (red) {
    const auto& u = red->transform;
    out << "reduced: " << gram_string(red->reduced) << " via U = [[" << u[0][0] << ","
        << u[0][1] << "],[" << u[1][0] << "," << u[1][1] << "]]\n";
  }
  return kExitPass;
}

int run(const std::string& command, const Options& o, std::ostream& out) {
  if (command == "verify-paper") return print_report(verify_paper_claims(o.bound, o.seed), o, out);
  if (command == "lattice-info") return lattice_info(o, out);

  const auto lattice = load_lattice_file(o.lattice_path);
  if (command == "represent") {
    return print_verdict(represent(lattice, parse_integer(o.target, "--target"), o.bound), o, out);
  }
  if (command == "isotropic") return print_verdict(isotropic_search(lattice, o.bound), o, out);
  if (command == "beauville-extend") {
    out << lattice_to_json(beauville_extend(lattice, o.n).extended()).dump(2) << '\n';
    return kExitPass;
  }
  if (command == "involution") {
    const auto b = beauville_extend(lattice, 2);
    const auto f4 = parse_vector_expr(lattice, o.f4);
    const auto x = HilbertClass::from_extended(parse_vector_expr(b.extended(), o.x));
    const auto image = debarre_involution(b, f4, x).embed();
    if (o.json) {
      nlohmann::ordered_json j;
      j["class"] = vector_json(image);
      j["expr"] = format_vector_expr(b.extended(), image);
      out << j.dump(2) << '\n';
    } else {
      out << format_vector_expr(b.extended(), image) << '\n';
    }
    return kExitPass;
  }
  if (command == "reflect") {
    const auto image = picard_lefschetz_reflect(lattice, parse_vector_expr(lattice, o.x),
                                                parse_vector_expr(lattice, o.c));
    if (o.json) {
      nlohmann::ordered_json j;
      j["class"] = vector_json(image);
      j["expr"] = format_vector_expr(lattice, image);
      out << j.dump(2) << '\n';
    } else {
      out << format_vector_expr(lattice, image) << '\n';
    }
    return kExitPass;
  }
  if (command == "intersect") {
    const auto b = beauville_extend(IntegralLattice(lattice.gram()), 2);
    const Integer v = star_square_pairing(b, parse_vector_expr(lattice, o.f),
                                          parse_integer(o.m, "--m"),
                                          parse_vector_expr(lattice, o.g));
    return print_integer("star_square", v, o, out);
  }
  if (command == "sigma") {
    const auto b = beauville_extend(IntegralLattice(lattice.gram()), 2);
    const Integer v =
        sigma_pairing(b, parse_vector_expr(lattice, o.f), parse_integer(o.m, "--m"));
    return print_integer("sigma", v, o, out);
  }
  if (command == "density-check") {
    K3Input input{lattice, parse_vector_expr(lattice, o.f), 2, o.bound};
    auto report = check_density_hypotheses(input, parse_vector_expr(lattice, o.g));
    report.seed = o.seed;
    return print_report(report, o, out);
  }
  throw InputError("unknown subcommand '" + command + "'");
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice arithmetic for K3 surfaces and their Hilbert schemes", "k3lat"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--bound", o.bound, "Max-norm bound for box searches")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for the random property suites")->capture_default_str();
  app.add_flag("--json", o.json, "Machine-readable output");

  auto lattice_opt = [&](CLI::App* sub) {
    sub->add_option("--lattice", o.lattice_path, "Lattice file (JSON: rank, gram, labels)")
        ->required();
  };

  app.add_subcommand("verify-paper", "Run the full regression suite of identities");
  lattice_opt(app.add_subcommand("lattice-info", "Rank, Gram, discriminant, signature"));

  auto* rep = app.add_subcommand("represent", "Search for x with x^2 = target");
  lattice_opt(rep);
  rep->add_option("--target", o.target, "Target square")->required();

  lattice_opt(app.add_subcommand("isotropic", "Search for a primitive isotropic vector"));

  auto* ext = app.add_subcommand("beauville-extend", "Print Pic(S) + Ze with (e,e) = -2(n-1)");
  lattice_opt(ext);
  ext->add_option("--n", o.n, "Number of points")->capture_default_str();

  auto* inv = app.add_subcommand("involution", "Apply x -> -x + (f4-e, x)(f4-e) on S^[2]");
  lattice_opt(inv);
  inv->add_option("--f4", o.f4, "Quartic polarization")->capture_default_str();
  inv->add_option("--x", o.x, "Class on S^[2] (labels of Pic(S) and e)")->required();

  auto* refl = app.add_subcommand("reflect", "Picard-Lefschetz reflection in a (-2)-class");
  lattice_opt(refl);
  refl->add_option("--x", o.x, "Class to reflect")->required();
  refl->add_option("--c", o.c, "(-2)-class")->required();

  auto* inter = app.add_subcommand("intersect", "(f - m e)^2 . (g * g) on S^[2]");
  lattice_opt(inter);
  inter->add_option("--f", o.f, "Class f")->required();
  inter->add_option("--m", o.m, "Coefficient m")->required();
  inter->add_option("--g", o.g, "Class g")->required();

  auto* sig = app.add_subcommand("sigma", "(f - m e)^2 . Sigma on S^[2]");
  lattice_opt(sig);
  sig->add_option("--f", o.f, "Class f")->required();
  sig->add_option("--m", o.m, "Coefficient m")->required();

  auto* dens = app.add_subcommand("density-check", "Check the fibration positivity hypotheses");
  lattice_opt(dens);
  dens->add_option("--f", o.f, "Polarization of degree 2m^2")->required();
  dens->add_option("--g", o.g, "Class with positive square")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Unsupported& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace k3lat
