#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qgal {

/// Outcome of one verified identity or law.
struct CheckResult {
  std::string name;
  bool pass = true;
  long cases = 0;       ///< number of instances the law was evaluated on
  std::string detail;   ///< counterexample or note; empty when clean
};

/// A batch of related checks, printable as one line per identity.
class Report {
 public:
  explicit Report(std::string title) : title_(std::move(title)) {}

  void add(std::string name, bool pass, long cases = 0,
           std::string detail = "") {
    checks_.push_back({std::move(name), pass, cases, std::move(detail)});
  }
  void merge(const Report& other);

  const std::string& title() const { return title_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  bool all_pass() const;
  long total_cases() const;

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;

 private:
  std::string title_;
  std::vector<CheckResult> checks_;
};

}  // namespace qgal
