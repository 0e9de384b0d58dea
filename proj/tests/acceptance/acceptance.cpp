// Acceptance run: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "normality/cli.hpp"
#include "normality/normality.hpp"

using namespace normality;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (details.size() < 12) details.push_back(what);
    }
  }
  void note(const std::string& s) { details.push_back(s); }
};

struct Criterion {
  int id;
  std::string name;
  std::string target;  // empty when no time target applies
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string cell(int n, int d) { return "(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")"; }

template <typename Fn>
double timed(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return seconds_since(t0);
}

// Every report clean; failing ones are listed.
void expect_clean(Outcome& o, const std::vector<ExtremalReport>& reports) {
  for (const auto& r : reports) {
    std::string where = "n=" + std::to_string(r.n);
    if (r.diameter) where += " d=" + std::to_string(*r.diameter);
    if (r.peripheral_count) where += " k=" + std::to_string(*r.peripheral_count);
    o.check(!r.discrepancy, where + ": " + r.detail);
  }
  o.note(std::to_string(reports.size()) + " report(s)");
}

bool induced_connected(const Graph& g, const std::vector<Vertex>& vs) {
  std::set<Vertex> in(vs.begin(), vs.end()), seen{vs.front()};
  std::vector<Vertex> stack{vs.front()};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (in.count(w) && seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == in.size();
}

std::string run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "normality");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> c;

  c.push_back({1, "figure fixtures", "< 1 ms each", 0.001 * 4, [](Outcome& o) {
    using V = std::vector<Vertex>;
    double worst = 0;
    worst = std::max(worst, timed([&] {
      const Graph g = fixture("fig1");
      const auto p = profile(g);
      const auto via = ecc_via_periphery(g);
      o.check(p.periphery == V{0, 4}, "fig1 periphery != {v1,v5}");
      o.check(p.ecc[2] == 3 && via[2] == 2, "fig1 ecc(v3)=3 vs distance-to-periphery 2");
    }));
    worst = std::max(worst, timed([&] {
      const auto before = profile(fixture("fig2_tree")).norm_sum;
      const auto after = profile(fixture("fig2_plus_edge")).norm_sum;
      o.check(before == 2 && after == 3, "fig2 Norm " + std::to_string(before) + " -> " + std::to_string(after));
    }));
    worst = std::max(worst, timed([&] {
      const Graph g = fixture("fig3");
      const auto p = profile(g);
      o.check(p.normality_center == V{4, 5, 6, 7}, "fig3 normality center != {v5..v8}");
      o.check(!induced_connected(g, p.normality_center), "fig3 normality center is connected");
      o.check(p.center == V{8, 9}, "fig3 center != {v9,v10}");
    }));
    o.check(worst < 0.001, "slowest fixture took " + std::to_string(worst * 1e3) + " ms");
  }});

  c.push_back({2, "ecc via periphery and two-endpoint property, 2 <= n <= 14", "< 60 s single-threaded", 60,
               [](Outcome& o) {
                 std::size_t trees = 0;
                 for (int n = 2; n <= 14; ++n)
                   free_trees(n).for_each([&](const CanonicalCode& code, const Graph& t) {
                     ++trees;
                     o.check(ecc_via_periphery(t) == profile(t).ecc, "ecc mismatch " + code.str());
                     o.check(check_two_endpoint_property(t), "two-endpoint failure " + code.str());
                   });
                 o.note(std::to_string(trees) + " trees checked");
               }});

  c.push_back({3, "star is the unique Norm minimizer, 3 <= n <= 14", "", 0, [](Outcome& o) {
    for (int n = 3; n <= 14; ++n) {
      const auto r = extremal_scan(n, Objective::norm_sum, Direction::min);
      o.check(r.optimum == 1, "n=" + std::to_string(n) + " min Norm != 1");
      o.check(r.witness_codes() == std::vector<CanonicalCode>{canonical_code(star(n))},
              "n=" + std::to_string(n) + " witness set != {star}");
    }
  }});

  c.push_back({4, "closed forms for Norm(T̂(n,d)) match the tree, n <= 60", "", 0, [](Outcome& o) {
    std::size_t applicable = 0, mismatched = 0;
    for (int n = 3; n <= 60; ++n)
      for (int d = 2; d < n; ++d) {
        const auto f = eval_norm_t_hat(n, d);
        if (!f.applies()) continue;
        ++applicable;
        const auto tree = profile(t_hat(n, d)).norm_sum;
        if (*f.value != tree) {
          ++mismatched;
          o.check(false, cell(n, d) + " " + f.branch + " gives " + std::to_string(*f.value) + ", tree has " +
                             std::to_string(tree));
        }
      }
    o.note(std::to_string(mismatched) + " of " + std::to_string(applicable) + " applicable cells differ");
  }});

  c.push_back({5, "T̂ maximizes Norm given d, 2 <= d < n <= 13", "< 10 min", 600, [](Outcome& o) {
    expect_clean(o, verify_theorem("thm-norm-given-d", 3, 13));
  }});

  c.push_back({6, "global Norm maximum and mod-7 witness set, 4 <= n <= 13", "", 0, [](Outcome& o) {
    const auto reports = verify_theorem("thm-norm-global", 4, 13);
    expect_clean(o, reports);
    for (const auto& r : reports)
      if (r.discrepancy)
        for (const auto& note : r.notes) o.note("n=" + std::to_string(r.n) + ": " + note);
  }});

  c.push_back({7, "S̃ attains min Norm 3n-6k with k peripheral vertices, n <= 13", "", 0, [](Outcome& o) {
    expect_clean(o, verify_theorem("thm-norm-min-k", 1, 13));
  }});

  c.push_back({8, "T̃ maximizes Norm given (n,k,d), every split a witness, d range, n <= 12", "", 0,
               [](Outcome& o) {
                 expect_clean(o, verify_theorem("thm-norm-nkd", 4, 12));
                 expect_clean(o, verify_theorem("thm-norm-nkd-range", 4, 12));
               }});

  c.push_back({9, "lambda extremes on periphery and center, n <= 13", "", 0, [](Outcome& o) {
    expect_clean(o, verify_theorem("thm-lambda-location", 1, 13));
  }});

  c.push_back({10, "Lambda >= 12 with equality only at Ŝ, 8 <= n <= 13", "", 0, [](Outcome& o) {
    expect_clean(o, verify_theorem("thm-lambda-min", 8, 13));
  }});

  c.push_back({11, "max Lambda given d by dumbbells, 2 <= d < n <= 13", "", 0, [](Outcome& o) {
    expect_clean(o, verify_theorem("thm-lambda-max-given-d", 3, 13));
  }});

  c.push_back({12, "global max Lambda equals the path value; discrepancy raised, 8 <= n <= 13", "", 0,
               [](Outcome& o) {
                 for (const auto& r : verify_theorem("thm-lambda-max-global", 8, 13)) {
                   const std::int64_t n = r.n;
                   const std::int64_t path_value = n % 2 == 0 ? n * n / 2 : (n * n - 1) / 2;
                   const std::string at = "n=" + std::to_string(n);
                   o.check(r.optimum == path_value, at + " optimum differs from path value");
                   o.check(r.witness_codes() == std::vector<CanonicalCode>{canonical_code(path(r.n))},
                           at + " witness set != {path}");
                   o.check(r.discrepancy, at + " discrepancy flag not raised");
                   o.note(at + ": optimum " + std::to_string(*r.optimum) + ", bound " +
                          std::to_string(max_lambda_bound(n)) + "; " + r.detail);
                 }
               }});

  c.push_back({13, "free-tree counts, Prüfer cross-check, n=14 and n=16 timing", "n=14 < 60 s, n=16 < 5 min", 0,
               [](Outcome& o) {
                 const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
                 for (int n = 1; n <= 13; ++n)
                   o.check(free_trees(n).size() == expected[n - 1], "count mismatch at n=" + std::to_string(n));
                 std::size_t n14 = 0;
                 const double t14 = timed([&] { n14 = free_trees(14).size(); });
                 o.check(n14 == 3159, "count mismatch at n=14");
                 o.check(t14 < 60, "n=14 took " + std::to_string(t14) + " s");
                 for (int n = 1; n <= 9; ++n) {
                   std::set<CanonicalCode> classes;
                   for_each_labeled_tree(n, [&](const Graph& t) { classes.insert(canonical_code(t)); });
                   const auto codes = free_tree_codes(n);
                   o.check(classes == std::set<CanonicalCode>(codes.begin(), codes.end()),
                           "Prüfer classes differ at n=" + std::to_string(n));
                 }
                 std::size_t n16 = 0;
                 const double t16 = timed([&] { n16 = free_trees(16).size(); });
                 o.check(n16 == 19320, "n=16 count " + std::to_string(n16));
                 o.check(t16 < 300, "n=16 took " + std::to_string(t16) + " s");
                 o.note("n=14: " + std::to_string(t14) + " s, n=16: " + std::to_string(t16) + " s");
               }});

  c.push_back({14, "edge-addition anomalies include the n=5 instance and re-verify", "", 0, [](Outcome& o) {
    const Graph base = fixture("fig2_tree");
    const auto key = pair_orbit_key(base, 0, 4);
    bool found = false;
    for (int n = 5; n <= 9; ++n)
      for (const auto& a : search_edge_anomalies(n)) {
        if (n == 5 && a.base_code == canonical_code(base) && pair_orbit_key(a.base, a.added.u, a.added.v) == key)
          found = a.norm_sum_before == 2 && a.norm_sum_after == 3;
        const auto before = profile(a.base).norm_sum;
        const auto after = profile(add_edge(a.base, a.added.u, a.added.v)).norm_sum;
        o.check(after > before && before == a.norm_sum_before && after == a.norm_sum_after,
                "record does not re-verify at n=" + std::to_string(n));
      }
    o.check(found, "n=5 instance (2 -> 3) missing");
  }});

  c.push_back({15, "verify output is byte-identical across runs", "", 0, [](Outcome& o) {
    const std::vector<std::string> args{"verify", "--theorem", "thm-norm-global", "--n", "7..10"};
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    o.check(!first.empty(), "empty output");
    o.check(first == second, "outputs differ");
    o.note(std::to_string(first.size()) + " bytes");
  }});

  return c;
}

}  // namespace

int main() {
  int failures = 0;
  for (const auto& cr : criteria()) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    if (cr.limit_seconds > 0 && secs >= cr.limit_seconds)
      o.check(false, "took " + std::to_string(secs) + " s");
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %s (%.3f s%s%s)\n", o.pass ? "PASS" : "FAIL", cr.id, cr.name.c_str(), secs,
                cr.target.empty() ? "" : "; target ", cr.target.c_str());
    for (const auto& d : o.details) std::printf("       %s\n", d.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 15 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
