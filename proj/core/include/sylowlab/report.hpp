#ifndef SYLOWLAB_REPORT_HPP_
#define SYLOWLAB_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sylowlab/caps.hpp"
#include "sylowlab/group_expr.hpp"
#include "sylowlab/ratio.hpp"
#include "sylowlab/sylow.hpp"

namespace sylowlab {

struct ReportItem {
  std::string label;
  // Integers are stored as ratios with denominator 1.
  std::vector<std::pair<std::string, ExactRatio>> values;
  std::vector<std::pair<std::string, std::string>> details;
  // Whether `holds` is a bound the check asserts (queries only report).
  bool asserted = false;
  bool holds = true;
  // Set when the item could not be evaluated.
  std::string error_code;
  std::string error_message;
};

struct GroupEcho {
  std::string expr;
  std::size_t degree = 0;
  BigInt order;
  std::vector<std::string> generators;
};

struct VerificationReport {
  std::string check;
  std::optional<GroupEcho> group;
  std::optional<GroupEcho> subgroup;
  std::vector<std::uint64_t> primes;
  std::vector<ReportItem> items;
  std::vector<ConjectureDViolation> violations;
  std::vector<std::string> notices;
  std::uint64_t runtime_ms = 0;

  // Every asserted item holds and no item failed to evaluate.
  bool all_hold() const;
};

struct CheckOptions {
  std::string group;     // expression or @file
  std::string subgroup;  // expression or @file
  std::string element;   // cycle notation
  std::string edge_list; // path
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> pi;
  ExactRatio f = ExactRatio(1, 2);
  std::size_t m = 1;
  std::size_t n = 1;
  std::size_t k = 1;
  Caps caps = default_caps();
  bool parallel = false;
};

const std::vector<std::string>& verify_check_ids();
const std::vector<std::string>& compute_quantity_ids();

// Runs a verification check. Input errors (unknown check, bad group text,
// missing options) throw; errors raised while evaluating an item are
// recorded in that item.
VerificationReport run_check(const std::string& check, const CheckOptions& options);
VerificationReport run_compute(const std::string& quantity, const CheckOptions& options);

// An expression, or "@path" naming a generator-list file.
GroupExpr resolve_group_argument(const std::string& text);

// JSON with schema "sylowlab.report/1"; ratios are {"num": "..", "den": ".."}.
std::string to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

}  // namespace sylowlab

#endif  // SYLOWLAB_REPORT_HPP_
