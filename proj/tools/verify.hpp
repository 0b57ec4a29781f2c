#pragma once

#include <optional>
#include <string>
#include <vector>

namespace polystrata::cli {

/// Inclusive integer range, written "a..b" or "a".
struct Range {
  int lo = 0;
  int hi = 0;

  static Range parse(const std::string& text);
};

struct VerificationCase {
  std::string input;
  std::string expected;
  std::string computed;
  bool match = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<VerificationCase> cases;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] std::size_t matched() const;
};

struct VerifyOptions {
  std::optional<Range> n;
  std::optional<Range> k;
  std::optional<Range> l;
  std::optional<Range> t;
  std::optional<Range> d;
  std::optional<int> n_max;
  std::optional<int> max_weight;
  std::optional<int> max_part;
  std::vector<std::string> lambdas;
};

/// Canonical suite names (aliases are accepted by run_suite).
std::vector<std::string> suite_names();

/// Throws InvalidInput for an unknown suite or out-of-bounds ranges.
VerificationReport run_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace polystrata::cli
