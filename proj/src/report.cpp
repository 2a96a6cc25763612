#include "k3lat/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace k3lat {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Inconclusive: return "inconclusive";
  }
  return "fail";
}

std::string value_to_string(const ClaimValue& v) {
  if (const auto* i = std::get_if<Integer>(&v)) return i->str();
  return std::get<std::string>(v);
}

namespace {

nlohmann::ordered_json value_to_json(const ClaimValue& v) {
  if (const auto* i = std::get_if<Integer>(&v)) {
    if (*i >= std::numeric_limits<std::int64_t>::min() &&
        *i <= std::numeric_limits<std::int64_t>::max()) {
      return static_cast<std::int64_t>(*i);
    }
    return i->str();
  }
  return std::get<std::string>(v);
}

}  // namespace

int exit_code_for(const std::vector<ClaimStatus>& statuses) {
  if (std::count(statuses.begin(), statuses.end(), ClaimStatus::Fail)) return 1;
  if (std::count(statuses.begin(), statuses.end(), ClaimStatus::Inconclusive)) return 3;
  return 0;
}

std::size_t ClaimReport::count(ClaimStatus s) const {
  return std::count_if(claims.begin(), claims.end(),
                       [s](const Claim& c) { return c.status == s; });
}

int ClaimReport::exit_code() const {
  std::vector<ClaimStatus> statuses;
  for (const auto& c : claims) statuses.push_back(c.status);
  return exit_code_for(statuses);
}

std::string ClaimReport::render_text() const {
  std::ostringstream os;
  os << "suite " << suite << " seed " << seed << " bound " << bound << '\n';
  for (const auto& c : claims) {
    std::string status = to_string(c.status);
    for (auto& ch : status) ch = static_cast<char>(std::toupper(ch));
    os << status << ' ' << c.id << "  lhs=" << value_to_string(c.lhs)
       << " rhs=" << value_to_string(c.rhs);
    if (!c.detail.empty()) os << "  [" << c.detail << ']';
    os << "  -- " << c.citation << '\n';
  }
  os << "summary: " << count(ClaimStatus::Pass) << " pass, " << count(ClaimStatus::Fail)
     << " fail, " << count(ClaimStatus::Inconclusive) << " inconclusive\n";
  return os.str();
}

nlohmann::ordered_json ClaimReport::to_json() const {
  nlohmann::ordered_json out;
  out["suite"] = suite;
  out["seed"] = seed;
  out["bound"] = bound;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : claims) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["citation"] = c.citation;
    j["status"] = to_string(c.status);
    j["lhs"] = value_to_json(c.lhs);
    j["rhs"] = value_to_json(c.rhs);
    j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  out["claims"] = std::move(arr);
  return out;
}

}  // namespace k3lat
