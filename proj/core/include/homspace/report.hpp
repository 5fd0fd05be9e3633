#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homspace/rational.hpp"

namespace homspace {

/// Which bound a report row checks. lhs/rhs conventions:
///   prop1            rho          <= dim X
///   thm_affine       k            <= dim X / (rank + 1)
///   cor_ss           sum t_i      <= dim X / (1 + min rank)
///   cor_half         rho          <= dim X / 2
///   cor_sqrt_affine  k^2          <  dim X
///   thm_proj_linear  k            <= 2 dim X / (rank + 1)
///   thm_proj_sqrt    k^2          <  2 dim X
///   cor_proj_ss      sum k_i      <= 2 dim X / (1 + min rank)
/// Square-root bounds are stored squared so the comparison stays in integers.
enum class Inequality {
  prop1,
  thm_affine,
  cor_ss,
  cor_half,
  cor_sqrt_affine,
  thm_proj_linear,
  thm_proj_sqrt,
  cor_proj_ss,
};

inline constexpr std::array kAllInequalities{
    Inequality::prop1,           Inequality::thm_affine,      Inequality::cor_ss,
    Inequality::cor_half,        Inequality::cor_sqrt_affine, Inequality::thm_proj_linear,
    Inequality::thm_proj_sqrt,   Inequality::cor_proj_ss,
};

std::string_view inequality_name(Inequality ineq);
/// Throws std::invalid_argument for an unknown name.
Inequality parse_inequality(std::string_view name);
bool is_strict(Inequality ineq);

struct VerificationReport {
  std::string instance_id;
  int dim_X = 0;
  int picard_bound = 0;
  Inequality inequality = Inequality::prop1;
  Rational lhs;
  Rational rhs;
  bool passed = false;
  Rational slack;  // rhs - lhs

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Fills passed/slack from lhs/rhs and the strictness of the inequality.
VerificationReport make_report(std::string instance_id, int dim_X, int picard_bound,
                               Inequality inequality, Rational lhs, Rational rhs);

/// One JSON object, keys in declaration order, rationals as "p/q" strings.
std::string to_json_line(const VerificationReport& report);
/// Throws std::invalid_argument on schema violations.
VerificationReport from_json_line(std::string_view line);

std::string csv_header();
std::string to_csv_row(const VerificationReport& report);

struct InequalitySummary {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<Rational> min_slack;
};

struct ReportSummary {
  std::size_t total = 0;
  std::size_t failed = 0;
  std::map<Inequality, InequalitySummary> by_inequality;

  bool all_passed() const { return failed == 0; }
};

ReportSummary summarize(std::span<const VerificationReport> reports);

/// "checked=N failed=F | thm_proj_linear: n=.. failed=.. min_slack=.. | ..."
std::string format_summary(const ReportSummary& summary);

}  // namespace homspace
