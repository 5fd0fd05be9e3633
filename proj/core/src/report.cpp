#include "homspace/report.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace homspace {

std::string_view inequality_name(Inequality ineq) {
  switch (ineq) {
    case Inequality::prop1: return "prop1";
    case Inequality::thm_affine: return "thm_affine";
    case Inequality::cor_ss: return "cor_ss";
    case Inequality::cor_half: return "cor_half";
    case Inequality::cor_sqrt_affine: return "cor_sqrt_affine";
    case Inequality::thm_proj_linear: return "thm_proj_linear";
    case Inequality::thm_proj_sqrt: return "thm_proj_sqrt";
    case Inequality::cor_proj_ss: return "cor_proj_ss";
  }
  return "?";
}

Inequality parse_inequality(std::string_view name) {
  for (Inequality i : kAllInequalities) {
    if (inequality_name(i) == name) return i;
  }
  throw std::invalid_argument("unknown inequality '" + std::string(name) + "'");
}

bool is_strict(Inequality ineq) {
  return ineq == Inequality::cor_sqrt_affine || ineq == Inequality::thm_proj_sqrt;
}

VerificationReport make_report(std::string instance_id, int dim_X, int picard_bound,
                               Inequality inequality, Rational lhs, Rational rhs) {
  VerificationReport r;
  r.instance_id = std::move(instance_id);
  r.dim_X = dim_X;
  r.picard_bound = picard_bound;
  r.inequality = inequality;
  r.lhs = lhs;
  r.rhs = rhs;
  r.passed = is_strict(inequality) ? lhs < rhs : lhs <= rhs;
  r.slack = rhs - lhs;
  return r;
}

std::string to_json_line(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["instance_id"] = report.instance_id;
  j["dim_X"] = report.dim_X;
  j["picard_bound"] = report.picard_bound;
  j["inequality"] = std::string(inequality_name(report.inequality));
  j["lhs"] = to_string(report.lhs);
  j["rhs"] = to_string(report.rhs);
  j["passed"] = report.passed;
  j["slack"] = to_string(report.slack);
  return j.dump();
}

VerificationReport from_json_line(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
    VerificationReport r;
    r.instance_id = j.at("instance_id").get<std::string>();
    r.dim_X = j.at("dim_X").get<int>();
    r.picard_bound = j.at("picard_bound").get<int>();
    r.inequality = parse_inequality(j.at("inequality").get<std::string>());
    r.lhs = parse_rational(j.at("lhs").get<std::string>());
    r.rhs = parse_rational(j.at("rhs").get<std::string>());
    r.passed = j.at("passed").get<bool>();
    r.slack = parse_rational(j.at("slack").get<std::string>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report line: ") + e.what());
  }
}

std::string csv_header() {
  return "instance_id,dim_X,picard_bound,inequality,lhs,rhs,passed,slack";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv_row(const VerificationReport& report) {
  return csv_field(report.instance_id) + ',' + std::to_string(report.dim_X) + ',' +
         std::to_string(report.picard_bound) + ',' +
         std::string(inequality_name(report.inequality)) + ',' + to_string(report.lhs) + ',' +
         to_string(report.rhs) + ',' + (report.passed ? "true" : "false") + ',' +
         to_string(report.slack);
}

ReportSummary summarize(std::span<const VerificationReport> reports) {
  ReportSummary out;
  for (const auto& r : reports) {
    ++out.total;
    auto& s = out.by_inequality[r.inequality];
    ++s.checked;
    if (!r.passed) {
      ++out.failed;
      ++s.failed;
    }
    if (!s.min_slack || r.slack < *s.min_slack) s.min_slack = r.slack;
  }
  return out;
}

std::string format_summary(const ReportSummary& summary) {
  std::string out = "checked=" + std::to_string(summary.total) +
                    " failed=" + std::to_string(summary.failed);
  for (const auto& [ineq, s] : summary.by_inequality) {
    out += " | ";
    out += inequality_name(ineq);
    out += ": n=" + std::to_string(s.checked) + " failed=" + std::to_string(s.failed);
    if (s.min_slack) out += " min_slack=" + to_string(*s.min_slack);
  }
  return out;
}

}  // namespace homspace
