#ifndef BRAID_REPORT_HPP
#define BRAID_REPORT_HPP

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "braid/arrangement.hpp"
#include "braid/boxed.hpp"
#include "braid/contribution.hpp"
#include "braid/ish.hpp"
#include "braid/oracle.hpp"
#include "braid/plane_tree.hpp"
#include "braid/random_spec.hpp"

namespace braid {

enum class Method { kBrute, kFast, kInvolution, kFormula, kBijection, kOracle };

inline std::string method_name(Method m) {
  switch (m) {
    case Method::kBrute: return "brute";
    case Method::kFast: return "fast";
    case Method::kInvolution: return "involution";
    case Method::kFormula: return "formula";
    case Method::kBijection: return "bijection";
    case Method::kOracle: return "oracle";
  }
  return "?";
}

inline Method parse_method(const std::string& name) {
  for (Method m : {Method::kBrute, Method::kFast, Method::kInvolution, Method::kFormula,
                   Method::kBijection, Method::kOracle})
    if (method_name(m) == name) return m;
  throw UsageError("unknown method: " + name);
}

inline std::vector<Method> parse_methods(const std::string& list) {
  std::vector<Method> out;
  std::stringstream ss(list);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) out.push_back(parse_method(token));
  }
  if (out.empty()) throw UsageError("empty method list");
  return out;
}

struct MethodResult {
  Method method;
  BigInt count;
  double millis;
};

struct TreeStats {
  BigInt total_trees;
  BigInt nonzero_trees;
  std::map<IshClassification, BigInt> classes;  // only when Ish-type
  bool has_classes = false;
};

struct RunReport {
  int n = 0;
  int m = 0;
  std::size_t hyperplanes = 0;
  std::set<std::string> family;
  std::vector<MethodResult> results;
  bool agreement = true;
  std::optional<TreeStats> tree_stats;

  std::string kv_lines() const {
    std::ostringstream out;
    out << "spec.n=" << n << "\n";
    out << "spec.m=" << m << "\n";
    out << "spec.hyperplanes=" << hyperplanes << "\n";
    out << "spec.family=";
    bool first = true;
    for (const std::string& tag : family) {
      if (!first) out << ",";
      out << tag;
      first = false;
    }
    out << "\n";
    for (const MethodResult& r : results) {
      out << "method." << method_name(r.method) << ".count=" << r.count.str() << "\n";
      out << "method." << method_name(r.method) << ".ms=" << r.millis << "\n";
    }
    if (tree_stats) {
      out << "trees.total=" << tree_stats->total_trees.str() << "\n";
      out << "trees.nonzero=" << tree_stats->nonzero_trees.str() << "\n";
      if (tree_stats->has_classes)
        for (const auto& [cls, count] : tree_stats->classes)
          out << "trees.class" << to_string(cls) << "=" << count.str() << "\n";
    }
    out << "agreement=" << (agreement ? "true" : "false") << "\n";
    return out.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json doc;
    doc["spec"] = {{"n", n}, {"m", m}, {"hyperplanes", hyperplanes}};
    doc["spec"]["family"] = family;
    doc["methods"] = nlohmann::json::object();
    for (const MethodResult& r : results)
      doc["methods"][method_name(r.method)] = {{"count", r.count.str()}, {"ms", r.millis}};
    if (tree_stats) {
      doc["trees"] = {{"total", tree_stats->total_trees.str()},
                      {"nonzero", tree_stats->nonzero_trees.str()}};
      if (tree_stats->has_classes) {
        nlohmann::json classes = nlohmann::json::object();
        for (const auto& [cls, count] : tree_stats->classes)
          classes[to_string(cls)] = count.str();
        doc["trees"]["classes"] = classes;
      }
    }
    doc["agreement"] = agreement;
    return doc;
  }
};

struct RunOptions {
  BigInt guard = BigInt(100000000);
  long long prime_bound = 0;  // 0 = default bound
  bool tree_stats = true;
};

inline BigInt run_method(const ArrangementSpec& spec, Method method, const RunOptions& opts) {
  switch (method) {
    case Method::kBrute: return count_regions_brute(spec, opts.guard);
    case Method::kFast: return count_regions_fast(spec, opts.guard);
    case Method::kInvolution: return count_regions_involution(spec, opts.guard);
    case Method::kFormula: return count_regions_formula(spec);
    case Method::kBijection: return count_regions_bijection(spec);
    case Method::kOracle: return count_regions_oracle(spec, opts.prime_bound);
  }
  throw UsageError("unknown method");
}

inline RunReport run_count(const ArrangementSpec& spec, const std::vector<Method>& methods,
                           const RunOptions& opts = {}) {
  RunReport report;
  report.n = spec.dimension();
  report.m = spec.max_offset();
  report.hyperplanes = spec.hyperplane_count();
  report.family = classify_family(spec);
  for (Method method : methods) {
    auto start = std::chrono::steady_clock::now();
    BigInt count = run_method(spec, method, opts);
    auto stop = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    report.results.push_back({method, count, ms});
  }
  for (std::size_t i = 1; i < report.results.size(); ++i)
    if (report.results[i].count != report.results[0].count) report.agreement = false;

  bool walks_trees = false;
  for (Method m : methods)
    if (m == Method::kBrute || m == Method::kFast || m == Method::kInvolution)
      walks_trees = true;
  if (opts.tree_stats && walks_trees) {
    TreeStats stats;
    if (report.family.count("ish-type")) {
      ClassHistogram h = class_histogram(spec, opts.guard);
      stats.total_trees = h.total_trees;
      stats.nonzero_trees = h.nonzero_trees;
      stats.classes = h.classes;
      stats.has_classes = true;
    } else {
      check_tree_guard(spec.dimension(), spec.max_offset(), opts.guard);
      for_each_tree(spec.dimension(), spec.max_offset(), [&](const PlaneTree& tree) {
        ++stats.total_trees;
        if (tree_contribution_fast(spec, tree) != 0) ++stats.nonzero_trees;
      });
    }
    report.tree_stats = stats;
  }
  return report;
}

// One sampled spec of the verification sweep.
struct VerifySample {
  int index;
  ArrangementSpec spec;
  BigInt brute;
  BigInt fast;
  BigInt oracle;
  bool agree;
  std::optional<std::string> failing_tree;  // first brute-vs-fast mismatch
};

// Runs brute vs fast vs oracle on seeded random specs; on the first
// disagreement the sample carries the spec document and the minimal failing
// tree (first in canonical enumeration order whose per-tree contributions
// differ).
template <typename Fn>
bool run_verify(int n, int m, double density, int samples, std::uint64_t seed,
                const RunOptions& opts, Fn&& per_sample) {
  SplitMix64 rng(seed);
  bool all_ok = true;
  for (int index = 0; index < samples; ++index) {
    VerifySample sample{index, sample_spec(rng, n, m, density), 0, 0, 0, true, {}};
    sample.brute = count_regions_brute(sample.spec, opts.guard);
    sample.fast = count_regions_fast(sample.spec, opts.guard);
    sample.oracle = count_regions_oracle(sample.spec, opts.prime_bound);
    sample.agree = sample.brute == sample.fast && sample.fast == sample.oracle;
    if (sample.brute != sample.fast) {
      for_each_tree(sample.spec.dimension(), sample.spec.max_offset(),
                    [&](const PlaneTree& tree) {
                      if (sample.failing_tree) return;
                      if (tree_contribution_brute(sample.spec, tree) !=
                          tree_contribution_fast(sample.spec, tree))
                        sample.failing_tree = encode_tree(tree);
                    });
    }
    all_ok = all_ok && sample.agree;
    per_sample(sample);
    if (!sample.agree) return false;
  }
  return all_ok;
}

}  // namespace braid

#endif  // BRAID_REPORT_HPP
