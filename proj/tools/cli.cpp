#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "homspace/classical.hpp"
#include "homspace/maxdim.hpp"
#include "homspace/parabolic.hpp"
#include "homspace/report.hpp"
#include "homspace/rootsys.hpp"
#include "homspace/verify.hpp"

namespace homspace::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OutputFormat resolve_format(const std::string& name, const Environment& env) {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  return env.stdout_is_tty ? OutputFormat::table : OutputFormat::json;
}

int parse_positive(const std::string& text, const std::string& what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || value < 1) {
    throw UsageError(what + " must be a positive integer (got '" + text + "')");
  }
  return value;
}

int rank_cap(const Environment& env) {
  if (!env.max_rank_override) return kDefaultRankCap;
  const int cap = parse_positive(*env.max_rank_override, "HOMSPACE_MAX_RANK");
  if (cap > 30) throw UsageError("HOMSPACE_MAX_RANK must be at most 30");
  return cap;
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string join_types(const std::vector<SimpleType>& types, const std::string& sep) {
  std::string out;
  for (const auto& t : types) {
    if (!out.empty()) out += sep;
    out += t.name();
  }
  return out;
}

// ---------------------------------------------------------------- table

constexpr std::array kFamilies{Family::A, Family::B, Family::C, Family::D, Family::E6,
                               Family::E7, Family::E8, Family::F4, Family::G2};

std::string symbolic_name(Family f) {
  return is_classical(f) ? std::string(family_name(f)) + "_l" : std::string(family_name(f));
}

std::optional<int> dimension_at(Family f, int l) {
  if (is_classical(f)) {
    if (l < min_rank(f)) return std::nullopt;
    return algebra_dimension(SimpleType(f, l));
  }
  if (l != min_rank(f)) return std::nullopt;
  return algebra_dimension(SimpleType(f));
}

void render_table1(std::ostream& out, OutputFormat fmt, int max_rank) {
  if (fmt == OutputFormat::json) {
    ordered_json rows = ordered_json::array();
    for (Family f : kFamilies) {
      ordered_json row;
      row["algebra"] = symbolic_name(f);
      row["rank"] = is_classical(f) ? std::string("l") : std::to_string(min_rank(f));
      row["dimension"] = std::string(dimension_formula(f));
      row["min_rank"] = min_rank(f);
      ordered_json dims = ordered_json::object();
      for (int l = 1; l <= max_rank; ++l) {
        if (auto d = dimension_at(f, l)) dims[std::to_string(l)] = *d;
      }
      row["dimensions"] = dims;
      rows.push_back(row);
    }
    out << rows.dump() << '\n';
    return;
  }
  if (fmt == OutputFormat::csv) {
    out << "algebra,rank,dimension";
    for (int l = 1; l <= max_rank; ++l) out << ",l=" << l;
    out << '\n';
    for (Family f : kFamilies) {
      out << symbolic_name(f) << ','
          << (is_classical(f) ? std::string("l") : std::to_string(min_rank(f))) << ','
          << dimension_formula(f);
      for (int l = 1; l <= max_rank; ++l) {
        const auto d = dimension_at(f, l);
        out << ',' << (d ? std::to_string(*d) : "");
      }
      out << '\n';
    }
    return;
  }
  out << "Table 1: dimension of each simple Lie algebra, l = 1.." << max_rank << "\n";
  out << "algebra  rank  dimension  |";
  for (int l = 1; l <= max_rank; ++l) out << ' ' << pad_left("l=" + std::to_string(l), 4);
  out << '\n';
  for (Family f : kFamilies) {
    out << pad_right(symbolic_name(f), 9)
        << pad_right(is_classical(f) ? std::string("l") : std::to_string(min_rank(f)), 6)
        << pad_right(std::string(dimension_formula(f)), 11) << '|';
    for (int l = 1; l <= max_rank; ++l) {
      const auto d = dimension_at(f, l);
      out << ' ' << pad_left(d ? std::to_string(*d) : "-", 4);
    }
    out << '\n';
  }
}

void render_table2(std::ostream& out, OutputFormat fmt, int max_rank) {
  const auto entries = max_dim_entries(max_rank);
  if (fmt == OutputFormat::json) {
    ordered_json rows = ordered_json::array();
    for (const auto& e : entries) {
      if (e.rank == 0) continue;
      ordered_json row;
      row["rank"] = e.rank;
      row["max_dimension"] = e.d_simple;
      ordered_json w = ordered_json::array();
      for (const auto& t : e.witnesses_simple) w.push_back(t.name());
      row["algebras"] = w;
      row["semisimple_max_dimension"] = e.d_semisimple;
      row["semisimple_partition"] = e.witness_partition;
      rows.push_back(row);
    }
    out << rows.dump() << '\n';
    return;
  }
  if (fmt == OutputFormat::csv) {
    out << "rank,max_dimension,algebras,semisimple_max_dimension\n";
    for (const auto& e : entries) {
      if (e.rank == 0) continue;
      out << e.rank << ',' << e.d_simple << ",\"" << join_types(e.witnesses_simple, " ") << "\","
          << e.d_semisimple << '\n';
    }
    return;
  }
  out << "Table 2: largest simple Lie algebras by rank\n";
  out << "rank | max dimension / algebras | D^ss\n";
  for (const auto& e : entries) {
    if (e.rank == 0) continue;
    const std::string cell = std::to_string(e.d_simple) + " / " + join_types(e.witnesses_simple, ", ");
    out << pad_left(std::to_string(e.rank), 4) << " | " << pad_right(cell, 24) << " | "
        << e.d_semisimple << '\n';
  }
}

void render_table3(std::ostream& out, OutputFormat fmt) {
  const auto rows = table3();
  if (fmt == OutputFormat::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json row;
      row["algebra"] = r.type.name();
      row["dimension"] = algebra_dimension(r.type);
      ordered_json cells = ordered_json::array();
      for (const auto& c : r.cells) cells.push_back(c ? ordered_json(*c) : ordered_json(nullptr));
      row["cells"] = cells;
      arr.push_back(row);
    }
    out << arr.dump() << '\n';
    return;
  }
  if (fmt == OutputFormat::csv) {
    out << "algebra,dimension";
    for (int t = 1; t <= kTable3Columns; ++t) out << ",t=" << t;
    out << '\n';
    for (const auto& r : rows) {
      out << r.type.name() << ',' << algebra_dimension(r.type);
      for (const auto& c : r.cells) out << ',' << (c ? std::to_string(*c) : "");
      out << '\n';
    }
    return;
  }
  out << "Table 3: dim g - dim t - D^ss(rk g - dim t) for exceptional Lie algebras\n";
  out << "algebra dim |";
  for (int t = 1; t <= kTable3Columns; ++t) out << ' ' << pad_left(std::to_string(t), 3);
  out << '\n';
  for (const auto& r : rows) {
    out << pad_right(r.type.name(), 7) << pad_left(std::to_string(algebra_dimension(r.type)), 4)
        << " |";
    for (const auto& c : r.cells) out << ' ' << pad_left(c ? std::to_string(*c) : "-", 3);
    out << '\n';
  }
}

// ---------------------------------------------------------------- flag

void render_flag(std::ostream& out, OutputFormat fmt, const SimpleType& type, SimpleSubset subset) {
  const RootSystem rs = build_root_system(type);
  const auto inv = flag_invariants(ParabolicSpec(rs, subset));
  const int l = type.rank();
  std::optional<Rational> linear_slack;
  std::optional<Rational> sqrt_slack;
  if (inv.dim_X > 0) {
    linear_slack = Rational(2 * inv.dim_X, l + 1) - Rational(inv.picard_rank);
    sqrt_slack = Rational(2 * inv.dim_X - inv.picard_rank * inv.picard_rank);
  }
  const auto opt = [](const std::optional<Rational>& r) {
    return r ? to_string(*r) : std::string("n/a");
  };

  if (fmt == OutputFormat::json) {
    ordered_json j;
    j["type"] = type.name();
    j["parabolic"] = format_subset(subset);
    j["dim_X"] = inv.dim_X;
    j["picard_rank"] = inv.picard_rank;
    j["dim_parabolic"] = inv.dim_parabolic;
    j["dim_levi"] = inv.dim_levi;
    j["dim_unipotent_radical"] = inv.dim_unipotent_radical;
    j["thm_proj_linear_slack"] = linear_slack ? ordered_json(to_string(*linear_slack)) : ordered_json(nullptr);
    j["thm_proj_sqrt_slack"] = sqrt_slack ? ordered_json(to_string(*sqrt_slack)) : ordered_json(nullptr);
    out << j.dump() << '\n';
    return;
  }
  if (fmt == OutputFormat::csv) {
    out << "type,parabolic,dim_X,picard_rank,dim_parabolic,dim_levi,dim_unipotent_radical,"
           "thm_proj_linear_slack,thm_proj_sqrt_slack\n";
    out << type.name() << ",\"" << format_subset(subset) << "\"," << inv.dim_X << ','
        << inv.picard_rank << ',' << inv.dim_parabolic << ',' << inv.dim_levi << ','
        << inv.dim_unipotent_radical << ',' << opt(linear_slack) << ',' << opt(sqrt_slack) << '\n';
    return;
  }
  const auto line = [&](const std::string& key, const std::string& value) {
    out << pad_right(key, 24) << value << '\n';
  };
  line("type", type.name());
  line("parabolic", format_subset(subset));
  line("dim_X", std::to_string(inv.dim_X));
  line("picard_rank", std::to_string(inv.picard_rank));
  line("dim_parabolic", std::to_string(inv.dim_parabolic));
  line("dim_levi", std::to_string(inv.dim_levi));
  line("dim_unipotent_radical", std::to_string(inv.dim_unipotent_radical));
  line("thm_proj_linear_slack", opt(linear_slack));
  line("thm_proj_sqrt_slack", opt(sqrt_slack));
}

// ---------------------------------------------------------------- verify

std::vector<SimpleType> select_types(const std::string& filter, bool exceptional_only,
                                     int max_rank) {
  std::vector<SimpleType> out;
  if (!filter.empty() && filter != "A" && filter != "B" && filter != "C" && filter != "D" &&
      filter != "E" && filter != "F" && filter != "G") {
    try {
      out.push_back(SimpleType::parse(filter));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (exceptional_only && out.front().classical()) {
      throw UsageError("--exceptional excludes classical type " + filter);
    }
    return out;
  }
  for (const auto& t : all_simple_types(max_rank)) {
    if (exceptional_only && t.classical()) continue;
    if (!filter.empty() && std::string(family_name(t.family())).front() != filter.front()) continue;
    out.push_back(t);
  }
  if (out.empty()) {
    std::string why = "no simple types selected with max rank " + std::to_string(max_rank);
    if (filter.size() == 1 && filter != "E" && filter != "F" && filter != "G") {
      const Family f = filter == "A"   ? Family::A
                       : filter == "B" ? Family::B
                       : filter == "C" ? Family::C
                                       : Family::D;
      why = filter + " requires rank >= " + std::to_string(min_rank(f)) + " (max rank " +
            std::to_string(max_rank) + ")";
    } else if (filter == "E") {
      why = "E requires rank >= 6 (max rank " + std::to_string(max_rank) + ")";
    } else if (filter == "F") {
      why = "F4 requires rank 4 (max rank " + std::to_string(max_rank) + ")";
    } else if (filter == "G") {
      why = "G2 requires rank 2 (max rank " + std::to_string(max_rank) + ")";
    }
    throw UsageError(why);
  }
  return out;
}

void emit_reports(std::ostream& out, OutputFormat fmt, const std::vector<VerificationReport>& rows,
                  bool header) {
  if (fmt == OutputFormat::json) {
    for (const auto& r : rows) out << to_json_line(r) << '\n';
    return;
  }
  if (fmt == OutputFormat::csv) {
    if (header) out << csv_header() << '\n';
    for (const auto& r : rows) out << to_csv_row(r) << '\n';
    return;
  }
  if (header) {
    out << pad_right("instance_id", 28) << pad_right("inequality", 17) << pad_left("dim_X", 6)
        << pad_left("rho", 5) << pad_left("lhs", 9) << pad_left("rhs", 9) << pad_left("slack", 9)
        << "  result\n";
  }
  for (const auto& r : rows) {
    out << pad_right(r.instance_id, 28) << pad_right(std::string(inequality_name(r.inequality)), 17)
        << pad_left(std::to_string(r.dim_X), 6) << pad_left(std::to_string(r.picard_bound), 5)
        << pad_left(to_string(r.lhs), 9) << pad_left(to_string(r.rhs), 9)
        << pad_left(to_string(r.slack), 9) << "  " << (r.passed ? "pass" : "FAIL") << '\n';
  }
}

struct Options {
  std::string format;
  // table
  std::string table_id;
  std::optional<int> max_rank;
  // flag
  std::string flag_type;
  std::string parabolic;
  // verify
  bool affine = false;
  bool projective = false;
  bool all = false;
  bool exceptional = false;
  bool summary_only = false;
  std::string type_filter;
  std::vector<std::string> products;
  std::size_t sample_limit = SweepOptions{}.sample_limit;
  std::uint64_t seed = SweepOptions{}.seed;
  // verdict
  int dim = 0;
  int rho = 0;
};

int cmd_table(const Options& o, const Environment& env, std::ostream& out) {
  const OutputFormat fmt = resolve_format(o.format, env);
  if (o.table_id == "1") {
    render_table1(out, fmt, o.max_rank.value_or(rank_cap(env)));
  } else if (o.table_id == "2") {
    render_table2(out, fmt, o.max_rank.value_or(7));
  } else if (o.table_id == "3") {
    render_table3(out, fmt);
  } else {
    throw UsageError("unknown table id '" + o.table_id + "' (expected 1, 2 or 3)");
  }
  return kExitOk;
}

int cmd_flag(const Options& o, const Environment& env, std::ostream& out) {
  SimpleType type = [&] {
    try {
      return SimpleType::parse(o.flag_type);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  SimpleSubset subset = 0;
  try {
    subset = parse_subset(o.parabolic, type.rank());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  render_flag(out, resolve_format(o.format, env), type, subset);
  return kExitOk;
}

int cmd_verify(const Options& o, const Environment& env, std::ostream& out, std::ostream& err) {
  const OutputFormat fmt = resolve_format(o.format, env);
  const bool affine = o.affine || o.all || (!o.affine && !o.projective);
  const bool projective = o.projective || o.all || (!o.affine && !o.projective);
  if (o.sample_limit == 0) throw UsageError("--sample-limit must be positive");
  SweepOptions sweep;
  sweep.sample_limit = o.sample_limit;
  sweep.seed = o.seed;

  std::vector<VerificationReport> rows;
  if (!o.products.empty()) {
    for (const auto& text : o.products) {
      SemisimpleProduct product;
      try {
        product = SemisimpleProduct::parse(text);
        if (affine) {
          auto r = verify_semisimple_product(product, SweepMode::affine, sweep);
          rows.insert(rows.end(), r.begin(), r.end());
        }
        if (projective) {
          auto r = verify_semisimple_product(product, SweepMode::projective, sweep);
          rows.insert(rows.end(), r.begin(), r.end());
        }
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
  } else {
    const int cap = o.max_rank.value_or(rank_cap(env));
    if (cap > 30) throw UsageError("--max-rank must be at most 30");
    const auto types = select_types(o.type_filter, o.exceptional, cap);
    for (const auto& t : types) {
      if (projective) {
        auto r = verify_projective_simple(t, sweep);
        rows.insert(rows.end(), r.begin(), r.end());
      }
    }
    for (const auto& t : types) {
      if (affine) {
        auto r = verify_affine_simple(t, sweep);
        rows.insert(rows.end(), r.begin(), r.end());
      }
    }
  }

  if (!o.summary_only) emit_reports(out, fmt, rows, true);
  const auto summary = summarize(rows);
  (fmt == OutputFormat::table ? out : err) << "summary: " << format_summary(summary) << '\n';
  return summary.all_passed() ? kExitOk : kExitFailed;
}

int cmd_verdict(const Options& o, const Environment& env, std::ostream& out) {
  Verdict v;
  try {
    v = flag_variety_verdict(o.dim, o.rho);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  switch (resolve_format(o.format, env)) {
    case OutputFormat::json: {
      ordered_json j;
      j["dim_X"] = o.dim;
      j["rho"] = o.rho;
      j["verdict"] = std::string(verdict_name(v));
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "dim_X,rho,verdict\n" << o.dim << ',' << o.rho << ',' << verdict_name(v) << '\n';
      break;
    case OutputFormat::table:
      out << verdict_name(v) << '\n';
      break;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  Options o;
  CLI::App app{"Dimensions and Picard-number bounds of homogeneous spaces", "homspace"};
  app.require_subcommand(1);
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format (default: table on a TTY, json otherwise)")
        ->check(CLI::IsMember({"table", "json", "csv"}));
  };

  auto* table = app.add_subcommand("table", "Reproduce table 1, 2 or 3");
  table->add_option("which", o.table_id, "Table id: 1, 2 or 3")->required();
  table->add_option("--max-rank", o.max_rank, "Largest rank shown (tables 1 and 2)")
      ->check(CLI::Range(1, 30));
  add_format(table);

  auto* flag = app.add_subcommand("flag", "Invariants of the flag variety G/P_I");
  flag->add_option("type", o.flag_type, "Simple type, e.g. A4, D5, E7")->required();
  flag->add_option("--parabolic", o.parabolic,
                   "Comma-separated Bourbaki indices of I (empty = Borel)");
  add_format(flag);

  auto* verify = app.add_subcommand("verify", "Run exhaustive verification sweeps");
  verify->add_flag("--affine", o.affine, "Affine sweeps");
  verify->add_flag("--projective", o.projective, "Projective sweeps");
  verify->add_flag("--all", o.all, "Both (default)");
  verify->add_option("--type", o.type_filter, "Family letter (A..G) or a single type (E6)");
  verify->add_flag("--exceptional", o.exceptional, "Only exceptional types");
  verify->add_option("--max-rank", o.max_rank, "Rank cap for the sweep")->check(CLI::Range(1, 30));
  verify->add_option("--product", o.products,
                     "Semisimple product to sweep instead of simple types, e.g. A1,A1,B2");
  verify->add_option("--sample-limit", o.sample_limit,
                     "Maximum instances per product sweep before sampling");
  verify->add_option("--seed", o.seed, "Seed used when a product sweep is sampled");
  verify->add_flag("--summary-only", o.summary_only, "Print only the summary line");
  add_format(verify);

  auto* verdict = app.add_subcommand("verdict", "Can a variety with (dim, rho) be a flag variety?");
  verdict->add_option("--dim", o.dim, "dim X")->required();
  verdict->add_option("--rho", o.rho, "Picard number")->required();
  add_format(verdict);

  std::vector<std::string> storage{"homspace"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table) return cmd_table(o, env, out);
    if (*flag) return cmd_flag(o, env, out);
    if (*verify) return cmd_verify(o, env, out, err);
    if (*verdict) return cmd_verdict(o, env, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace homspace::cli
