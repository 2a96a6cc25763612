#include "k3lat/lattice_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace k3lat {

Integer parse_integer(const std::string& text, const std::string& what) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw InputError(what + ": expected an integer, got '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw InputError(what + ": expected an integer, got '" + text + "'");
    }
  }
  Integer v(text[0] == '+' ? text.substr(1) : text);
  return v;
}

namespace {

Integer json_integer(const nlohmann::json& value, const std::string& where) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Integer(value.get<std::uint64_t>());
    return Integer(value.get<std::int64_t>());
  }
  if (value.is_string()) return parse_integer(value.get<std::string>(), where);
  throw InputError(where + ": expected an integer, got " + std::string(value.type_name()));
}

}  // namespace

IntegralLattice parse_lattice(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("lattice file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("lattice file: top level must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "rank" && key != "gram" && key != "labels") {
      throw InputError("lattice file: unknown field '" + key + "'");
    }
  }
  if (!doc.contains("rank")) throw InputError("lattice file: missing field 'rank'");
  if (!doc["rank"].is_number_integer() || doc["rank"].get<std::int64_t>() < 0) {
    throw InputError("rank: expected a nonnegative integer");
  }
  const auto rank = static_cast<std::size_t>(doc["rank"].get<std::int64_t>());

  if (!doc.contains("gram")) throw InputError("lattice file: missing field 'gram'");
  const auto& gram = doc["gram"];
  if (!gram.is_array() || gram.size() != rank) {
    throw InputError("gram: expected an array of " + std::to_string(rank) + " rows");
  }
  IntegralLattice::Gram g;
  for (std::size_t i = 0; i < rank; ++i) {
    const auto& row = gram[i];
    const std::string where = "gram[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != rank) {
      throw InputError(where + ": expected " + std::to_string(rank) + " entries");
    }
    g.emplace_back();
    for (std::size_t j = 0; j < rank; ++j) {
      g.back().push_back(json_integer(row[j], where + "[" + std::to_string(j) + "]"));
    }
  }

  std::optional<std::vector<std::string>> labels;
  if (doc.contains("labels")) {
    const auto& l = doc["labels"];
    if (!l.is_array() || l.size() != rank) {
      throw InputError("labels: expected an array of " + std::to_string(rank) + " strings");
    }
    labels.emplace();
    for (std::size_t i = 0; i < rank; ++i) {
      if (!l[i].is_string()) {
        throw InputError("labels[" + std::to_string(i) + "]: expected a string");
      }
      labels->push_back(l[i].get<std::string>());
    }
  }
  try {
    return IntegralLattice(std::move(g), std::move(labels));
  } catch (const InputError& e) {
    throw InputError(std::string("lattice file: ") + e.what());
  }
}

IntegralLattice load_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open lattice file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_lattice(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

nlohmann::ordered_json lattice_to_json(const IntegralLattice& lattice) {
  nlohmann::ordered_json out;
  out["rank"] = lattice.rank();
  auto gram = nlohmann::ordered_json::array();
  for (const auto& row : lattice.gram()) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& v : row) {
      if (v >= std::numeric_limits<std::int64_t>::min() &&
          v <= std::numeric_limits<std::int64_t>::max()) {
        r.push_back(static_cast<std::int64_t>(v));
      } else {
        r.push_back(v.str());
      }
    }
    gram.push_back(std::move(r));
  }
  out["gram"] = std::move(gram);
  if (lattice.labels()) out["labels"] = *lattice.labels();
  return out;
}

namespace {

bool label_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

LatticeVector parse_vector_expr(const IntegralLattice& lattice, const std::string& expr) {
  std::string s;
  for (char c : expr) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  auto fail = [&](std::size_t pos, const std::string& msg) -> InputError {
    return InputError("vector expression '" + expr + "' at position " + std::to_string(pos) +
                      ": " + msg);
  };
  if (s.empty()) throw fail(0, "empty expression");

  LatticeVector out = LatticeVector::zero(lattice.rank());
  if (s == "0") return out;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw fail(pos, "expected '+' or '-'");
    }
    first = false;

    Integer coeff = 1;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      const std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      coeff = Integer(s.substr(start, pos - start));
      if (pos >= s.size() || s[pos] != '*') throw fail(pos, "expected '*' after coefficient");
      ++pos;
    }
    if (pos >= s.size() || !label_start(s[pos])) throw fail(pos, "expected a basis label");
    const std::size_t start = pos;
    while (pos < s.size() && label_char(s[pos])) ++pos;
    const std::string label = s.substr(start, pos - start);
    const auto index = lattice.index_of(label);
    if (!index) throw fail(start, "unknown label '" + label + "'");
    out[*index] += sign * coeff;
  }
  return out;
}

std::string format_vector_expr(const IntegralLattice& lattice, const LatticeVector& v) {
  check_dimension(lattice, v);
  const auto names = lattice.basis_names();
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += v[i] < 0 ? " - " : " + ";
    else if (v[i] < 0) out += "-";
    out += abs(v[i]).str() + "*" + names[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace k3lat
