#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "normality/constructions.hpp"
#include "normality/enumeration.hpp"
#include "normality/formulas.hpp"
#include "normality/graph.hpp"
#include "normality/invariants.hpp"
#include "normality/json_report.hpp"
#include "normality/verify.hpp"

namespace normality {

enum ExitCode : int { kExitOk = 0, kExitDiscrepancy = 1, kExitUsage = 2 };

namespace cli_detail {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to a sibling temp file and renames it over the target.
inline void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write " + tmp.string());
    f << content;
    if (!f.flush()) throw UsageError("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw UsageError("cannot rename onto " + path + ": " + ec.message());
  }
}

inline void emit(const nlohmann::json& j, const std::string& out_path, std::ostream& out, int indent = 2) {
  const std::string text = j.dump(indent) + "\n";
  if (out_path.empty())
    out << text;
  else
    write_atomically(out_path, text);
}

inline std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("expected N or A..B, got '" + text + "'");
  }
}

inline Objective parse_objective(const std::string& s) {
  if (s == "norm") return Objective::norm_sum;
  if (s == "lambda") return Objective::lambda_sum;
  return Objective::ecc_sum;
}

inline nlohmann::json formula_json(const std::string& name, int n, std::optional<int> d, std::optional<int> k) {
  nlohmann::json inputs{{"n", n}};
  if (d) inputs["d"] = *d;
  if (k) inputs["k"] = *k;
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError(std::string("formula ") + name + " needs --" + flag);
    return *v;
  };
  nlohmann::json j{{"formula", name}, {"inputs", inputs}, {"applies", true}};
  if (name == "norm_t_hat") {
    const auto f = eval_norm_t_hat(n, need(d, "d"));
    j["branch"] = f.branch;
    j["applies"] = f.applies();
    j["value"] = f.value ? nlohmann::json(*f.value) : nlohmann::json(nullptr);
  } else if (name == "max_norm_bound") {
    j["branch"] = "floor((2n^2-4n+1)/7)";
    j["value"] = max_norm_bound(n);
  } else if (name == "optimal_diameters") {
    j["branch"] = "n mod 7 = " + std::to_string(n % 7);
    j["value"] = optimal_diameters(n);
  } else if (name == "t_tilde_d_range") {
    const auto r = t_tilde_optimal_d_range(n, need(k, "k"));
    j["branch"] = "range";
    j["value"] = {r.lo, r.hi};
  } else if (name == "min_norm_k_peripheral") {
    j["branch"] = "3n-6k";
    j["value"] = min_norm_k_peripheral(n, need(k, "k"));
  } else if (name == "max_lambda_given_d") {
    const int dd = need(d, "d");
    j["branch"] = dd % 2 == 0 ? "even_d" : "odd_d";
    j["value"] = max_lambda_given_d(n, dd);
  } else if (name == "max_lambda_bound") {
    j["branch"] = "floor((n^2+1)/2)";
    j["value"] = max_lambda_bound(n);
  } else if (name == "min_lambda_bound") {
    j["branch"] = "constant";
    j["value"] = min_lambda_bound(n);
  } else {
    throw UsageError("unknown formula '" + name + "'");
  }
  return j;
}

inline const char* kFormulaNames =
    "norm_t_hat, max_norm_bound, optimal_diameters, t_tilde_d_range, min_norm_k_peripheral, "
    "max_lambda_given_d, max_lambda_bound, min_lambda_bound";

}  // namespace cli_detail

/**
 * Entry point of the `normality` tool. Machine-readable output goes to
 * `out`, summaries and diagnostics to `err`.
 *
 * Exit status: 0 success, 1 discrepancy found under --strict, 2 usage or
 * input error.
 */
inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  using namespace cli_detail;
  CLI::App app{"Eccentricity, normality and lambda invariants of trees; exhaustive extremal verification"};
  app.require_subcommand(1);

  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  auto* compute = app.add_subcommand("compute", "Profile of an edge-list graph as JSON");
  std::string input;
  bool pretty = false;
  compute->add_option("--input", input, "edge-list file ('-' for stdin)")->required();
  compute->add_flag("--json", pretty, "pretty-print the JSON profile");

  auto* construct = app.add_subcommand("construct", "Edge list of a named tree family");
  std::string family;
  std::optional<int> c_n, c_d, c_k, c_r, c_a, c_b;
  std::string fig;
  construct->add_option("--family", family)->required()->check(
      CLI::IsMember({"path", "star", "comet", "dumbbell", "balanced_starlike", "t_hat", "t_tilde", "s_tilde",
                     "s_hat", "fixture"}));
  construct->add_option("--n", c_n);
  construct->add_option("--d", c_d);
  construct->add_option("--k", c_k);
  construct->add_option("--r", c_r, "comet length, or branch length for balanced_starlike");
  construct->add_option("--a", c_a);
  construct->add_option("--b", c_b);
  construct->add_option("--id", fig)->check(CLI::IsMember(fixture_ids()));

  auto* enumerate = app.add_subcommand("enumerate", "All non-isomorphic trees of one order");
  int e_n = 0;
  std::optional<int> e_diameter, e_peripheral;
  bool count_only = false;
  enumerate->add_option("--n", e_n)->required();
  enumerate->add_option("--diameter", e_diameter);
  enumerate->add_option("--peripheral", e_peripheral);
  enumerate->add_flag("--count-only", count_only);

  auto* formula = app.add_subcommand("formula", "Evaluate a closed-form value or bound");
  std::string f_name;
  int f_n = 0;
  std::optional<int> f_d, f_k;
  formula->add_option("--name", f_name, kFormulaNames)->required();
  formula->add_option("--n", f_n)->required();
  formula->add_option("--d", f_d);
  formula->add_option("--k", f_k);

  auto* scan = app.add_subcommand("scan", "Exhaustive extremal scan");
  int s_n = 0;
  std::string s_objective, s_direction, s_out;
  std::optional<int> s_diameter, s_peripheral;
  scan->add_option("--n", s_n)->required();
  scan->add_option("--objective", s_objective)->required()->check(CLI::IsMember({"norm", "lambda", "ecc"}));
  scan->add_option("--direction", s_direction)->required()->check(CLI::IsMember({"max", "min"}));
  scan->add_option("--diameter", s_diameter);
  scan->add_option("--peripheral", s_peripheral);
  scan->add_option("--out", s_out);
  scan->add_option("--jobs", jobs, "worker threads");

  auto* verify = app.add_subcommand("verify", "Verify a theorem exhaustively over a range of orders");
  std::string v_theorem, v_range, v_out;
  bool strict = false;
  std::vector<std::string> theorem_ids;
  for (const auto& t : theorem_table()) theorem_ids.push_back(t.id);
  verify->add_option("--theorem", v_theorem)->required()->check(CLI::IsMember(theorem_ids));
  verify->add_option("--n", v_range, "order or range A..B")->required();
  verify->add_flag("--strict", strict, "exit 1 when any discrepancy is found");
  verify->add_option("--out", v_out);
  verify->add_option("--jobs", jobs, "worker threads");

  auto* anomaly = app.add_subcommand("anomaly", "Edge additions that increase Norm");
  int a_n = 0;
  std::string a_out;
  anomaly->add_option("--n", a_n)->required();
  anomaly->add_option("--out", a_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*compute) {
      Graph g;
      if (input == "-") {
        g = parse_edge_list(std::cin);
      } else {
        std::ifstream f(input, std::ios::binary);
        if (!f) throw UsageError("cannot open " + input);
        g = parse_edge_list(f);
      }
      const auto p = profile(g);
      nlohmann::json j{{"schema", kJsonSchema}, {"order", g.order()}, {"size", g.size()},
                       {"is_tree", is_tree(g)}, {"profile", to_json(p)}};
      out << j.dump(pretty ? 2 : -1) << "\n";
      err << "n=" << g.order() << " diameter=" << p.diameter << " radius=" << p.radius
          << " Ecc=" << p.ecc_sum << " Norm=" << p.norm_sum << " Lambda=" << p.lambda_sum << "\n";
      return kExitOk;
    }

    if (*construct) {
      FamilySpec spec;
      spec.family = *parse_family(family);
      spec.fixture_id = fig;
      const std::pair<const char*, std::optional<int>&> params[] = {
          {"n", c_n}, {"d", c_d}, {"k", c_k}, {"r", c_r}, {"a", c_a}, {"b", c_b}};
      for (const auto& [name, v] : params)
        if (v) spec.parameters[name] = *v;
      if (spec.family == Family::fixture && fig.empty()) throw UsageError("fixture needs --id");
      const Graph g = build(spec);
      out << serialize_edge_list(g);
      if (spec.family == Family::t_hat && t_hat_uses_degenerate_comet(spec.param("n"), spec.param("d")))
        err << "note: degenerate comet, extra vertices attached as pendants at the midpoint\n";
      return kExitOk;
    }

    if (*enumerate) {
      const auto stream = free_trees_filtered(e_n, e_diameter, e_peripheral);
      if (count_only) {
        out << stream.size() << "\n";
      } else {
        bool first = true;
        stream.for_each([&](const CanonicalCode&, const Graph& t) {
          if (!first) out << "\n";
          first = false;
          out << serialize_edge_list(t);
        });
      }
      err << stream.size() << " tree(s)\n";
      return kExitOk;
    }

    if (*formula) {
      out << formula_json(f_name, f_n, f_d, f_k).dump(2) << "\n";
      return kExitOk;
    }

    if (*scan) {
      const auto r = extremal_scan(s_n, parse_objective(s_objective),
                                   s_direction == "max" ? Direction::max : Direction::min, s_diameter, s_peripheral,
                                   ScanOptions{jobs});
      emit({{"schema", kJsonSchema}, {"report", to_json(r)}}, s_out, out);
      err << "scanned " << r.trees_scanned << " tree(s); optimum "
          << (r.optimum ? std::to_string(*r.optimum) : std::string("none (vacuous)")) << " with "
          << r.witnesses.size() << " witness(es)\n";
      return kExitOk;
    }

    if (*verify) {
      const auto [lo, hi] = parse_range(v_range);
      const auto reports = verify_theorem(v_theorem, lo, hi, ScanOptions{jobs});
      std::size_t discrepancies = 0;
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) {
        if (r.discrepancy) ++discrepancies;
        arr.push_back(to_json(r));
      }
      const auto& info = theorem_info(v_theorem);
      emit({{"schema", kJsonSchema},
            {"theorem", v_theorem},
            {"claim", info.claim},
            {"relation", to_string(info.relation)},
            {"n_range", {lo, hi}},
            {"reports", std::move(arr)},
            {"discrepancy_count", discrepancies}},
           v_out, out);
      err << v_theorem << ": " << reports.size() << " report(s), " << discrepancies << " discrepanc"
          << (discrepancies == 1 ? "y" : "ies") << "\n";
      for (const auto& r : reports)
        if (r.discrepancy) {
          err << "  n=" << r.n;
          if (r.diameter) err << " d=" << *r.diameter;
          if (r.peripheral_count) err << " k=" << *r.peripheral_count;
          err << ": " << r.detail << "\n";
        }
      return strict && discrepancies > 0 ? kExitDiscrepancy : kExitOk;
    }

    if (*anomaly) {
      const auto records = search_edge_anomalies(a_n);
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& a : records) arr.push_back(to_json(a));
      emit({{"schema", kJsonSchema}, {"n", a_n}, {"records", std::move(arr)}}, a_out, out);
      err << records.size() << " anomal" << (records.size() == 1 ? "y" : "ies") << " at n=" << a_n << "\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace normality
