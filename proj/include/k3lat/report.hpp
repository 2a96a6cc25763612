#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

enum class ClaimStatus { Pass, Fail, Inconclusive };

std::string to_string(ClaimStatus s);

// An integer, or a rendered verdict/class.
using ClaimValue = std::variant<Integer, std::string>;

struct Claim {
  std::string id;
  std::string citation;
  ClaimStatus status = ClaimStatus::Fail;
  ClaimValue lhs;
  ClaimValue rhs;
  std::string detail;
};

struct ClaimReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::int64_t bound = 0;
  std::vector<Claim> claims;

  std::size_t count(ClaimStatus s) const;

  // 0 all pass, 1 any fail, 3 inconclusive without fail.
  int exit_code() const;

  // One line per claim after a header; stable across runs and platforms.
  std::string render_text() const;
  nlohmann::ordered_json to_json() const;
};

// Exit code for an arbitrary status multiset (same rule as ClaimReport).
int exit_code_for(const std::vector<ClaimStatus>& statuses);

std::string value_to_string(const ClaimValue& v);

}  // namespace k3lat
