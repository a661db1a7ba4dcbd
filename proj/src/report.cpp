#include "qgal/report.hpp"

#include <sstream>

namespace qgal {

void Report::merge(const Report& other) {
  for (const auto& c : other.checks_) checks_.push_back(c);
}

bool Report::all_pass() const {
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

long Report::total_cases() const {
  long n = 0;
  for (const auto& c : checks_) n += c.cases;
  return n;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << title_ << "\n";
  for (const auto& c : checks_) {
    os << (c.pass ? "  ok   " : "  FAIL ") << c.name;
    if (c.cases > 0) os << "  [" << c.cases << " cases]";
    if (!c.detail.empty()) os << "\n       " << c.detail;
    os << "\n";
  }
  os << (all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
  return os.str();
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["title"] = title_;
  j["pass"] = all_pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["cases"] = c.cases;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    j["checks"].push_back(jc);
  }
  return j;
}

}  // namespace qgal
