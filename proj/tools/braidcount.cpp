// braidcount: count the regions of an integer deformation of the braid
// arrangement several independent ways, and poke at the tree combinatorics
// behind the counts.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "braid/arrangement.hpp"
#include "braid/boxed.hpp"
#include "braid/contribution.hpp"
#include "braid/ish.hpp"
#include "braid/oracle.hpp"
#include "braid/render.hpp"
#include "braid/report.hpp"

namespace {

using namespace braid;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct SpecOptions {
  std::string spec_file;
  std::string preset_name;
  int n = 0;
  std::string nest;
};

void add_spec_options(CLI::App* cmd, SpecOptions* opts) {
  cmd->add_option("--spec", opts->spec_file, "spec document (JSON file)");
  cmd->add_option("--preset", opts->preset_name,
                  "preset family: braid, shi, ish, nested-ish, ish-type");
  cmd->add_option("--n", opts->n, "dimension for --preset");
  cmd->add_option("--nest", opts->nest,
                  "per-column ranges a..b for j = 2..n (nested-ish / ish-type)");
}

std::map<int, std::vector<int>> parse_nest(const std::string& text, int n) {
  std::map<int, std::vector<int>> columns;
  std::stringstream ss(text);
  std::string token;
  int j = 2;
  while (std::getline(ss, token, ',')) {
    if (j > n) throw UsageError("--nest has more columns than j = 2..n");
    long long lo, hi;
    std::size_t dots = token.find("..");
    try {
      if (dots == std::string::npos) {
        lo = hi = std::stoll(token);
      } else {
        lo = std::stoll(token.substr(0, dots));
        hi = std::stoll(token.substr(dots + 2));
      }
    } catch (const std::exception&) {
      throw UsageError("--nest: cannot parse range '" + token + "'");
    }
    if (lo > hi) throw UsageError("--nest: empty range '" + token + "'");
    std::vector<int> col;
    for (long long s = lo; s <= hi; ++s) col.push_back(static_cast<int>(s));
    columns[j++] = std::move(col);
  }
  if (j <= n) throw UsageError("--nest needs one range per j = 2..n");
  return columns;
}

ArrangementSpec resolve_spec(const SpecOptions& opts) {
  if (!opts.spec_file.empty() && !opts.preset_name.empty())
    throw UsageError("give either --spec or --preset, not both");
  if (!opts.spec_file.empty()) {
    std::ifstream in(opts.spec_file);
    if (!in) throw UsageError("cannot open spec file: " + opts.spec_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_arrangement(buffer.str());
  }
  if (opts.preset_name.empty()) throw UsageError("need --spec FILE or --preset NAME");
  if (opts.n < 1) throw UsageError("--preset needs --n N");
  if (opts.preset_name == "nested-ish" || opts.preset_name == "ish-type") {
    if (opts.nest.empty()) throw UsageError(opts.preset_name + " needs --nest");
    return preset(opts.preset_name, opts.n, parse_nest(opts.nest, opts.n));
  }
  return preset(opts.preset_name, opts.n);
}

PlaneTree resolve_tree(const std::string& text, const ArrangementSpec& spec,
                       bool demand_uniform) {
  PlaneTree tree = decode_tree(text);
  if (tree.node_count() != spec.dimension())
    throw UsageError("tree has " + std::to_string(tree.node_count()) +
                     " nodes but the arrangement lives in dimension " +
                     std::to_string(spec.dimension()));
  if (demand_uniform) require_arity(spec, tree);
  return tree;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  std::size_t k = values.size();
  return k % 2 == 1 ? values[k / 2] : 0.5 * (values[k / 2 - 1] + values[k / 2]);
}

int cmd_count(const SpecOptions& spec_opts, const std::string& methods_list,
              const RunOptions& run_opts, bool json) {
  ArrangementSpec spec = resolve_spec(spec_opts);
  std::vector<Method> methods = parse_methods(methods_list);
  RunReport report = run_count(spec, methods, run_opts);
  if (json)
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.kv_lines();
  return report.agreement ? kExitOk : kExitDisagreement;
}

int cmd_verify(int n, int m, double density, int samples, std::uint64_t seed,
               const RunOptions& run_opts, bool json) {
  bool ok = run_verify(n, m, density, samples, seed, run_opts, [&](const VerifySample& s) {
    if (json) {
      nlohmann::json doc;
      doc["index"] = s.index;
      doc["spec"] = spec_to_json(s.spec);
      doc["brute"] = s.brute.str();
      doc["fast"] = s.fast.str();
      doc["oracle"] = s.oracle.str();
      doc["agree"] = s.agree;
      if (s.failing_tree) doc["failing_tree"] = *s.failing_tree;
      std::cout << doc.dump() << "\n";
      return;
    }
    std::cout << "sample=" << s.index << " brute=" << s.brute.str() << " fast=" << s.fast.str()
              << " oracle=" << s.oracle.str() << " agree=" << (s.agree ? "true" : "false")
              << "\n";
    if (!s.agree) {
      std::cout << "spec=" << spec_to_json(s.spec).dump() << "\n";
      if (s.failing_tree) std::cout << "failing_tree=" << *s.failing_tree << "\n";
    }
  });
  return ok ? kExitOk : kExitDisagreement;
}

int cmd_classify(const SpecOptions& spec_opts, const std::string& tree_text) {
  ArrangementSpec spec = resolve_spec(spec_opts);
  PlaneTree tree = resolve_tree(tree_text, spec, true);
  auto cls = classify_tree(spec, tree);
  if (cls)
    std::cout << to_string(*cls) << "\n";
  else
    std::cout << "zero-contribution\n";
  return kExitOk;
}

int cmd_render(const SpecOptions& spec_opts, const std::string& tree_text,
               const std::string& what) {
  ArrangementSpec spec = resolve_spec(spec_opts);
  PlaneTree tree = resolve_tree(tree_text, spec, true);
  std::cout << to_dot(spec, tree, parse_render_what(what));
  return kExitOk;
}

int cmd_explain(const SpecOptions& spec_opts, const std::string& tree_text) {
  ArrangementSpec spec = resolve_spec(spec_opts);
  PlaneTree tree = resolve_tree(tree_text, spec, true);
  std::cout << explain_text(spec, tree);
  return kExitOk;
}

int cmd_involve(const SpecOptions& spec_opts, const std::string& tree_text,
                const std::string& op, int index) {
  ArrangementSpec spec = resolve_spec(spec_opts);
  PlaneTree tree = resolve_tree(tree_text, spec, op != "g");
  PlaneTree out = [&]() {
    if (op == "phi_l") return phi_l(spec, tree);
    if (op == "psi_l") return psi_l(spec, tree, index);
    if (op == "phi_u") return phi_u(spec, tree);
    if (op == "psi_u") return psi_u(spec, tree, index);
    if (op == "omega_l") return omega_l(spec, tree);
    if (op == "omega_u") return omega_u(spec, tree);
    if (op == "f") return bijection_f(spec, tree);
    if (op == "g") return bijection_g(spec, tree);
    throw UsageError("unknown involution op: " + op);
  }();
  std::cout << encode_tree(out) << "\n";
  return kExitOk;
}

int cmd_bench(const SpecOptions& spec_opts, const std::string& methods_list, int reps,
              const RunOptions& run_opts, bool json) {
  ArrangementSpec spec = resolve_spec(spec_opts);
  std::vector<Method> methods = parse_methods(methods_list);
  if (reps < 1) throw UsageError("--reps must be positive");
  nlohmann::json rows = nlohmann::json::array();
  for (Method method : methods) {
    std::vector<double> times;
    BigInt count = 0;
    for (int rep = 0; rep < reps; ++rep) {
      auto start = std::chrono::steady_clock::now();
      count = run_method(spec, method, run_opts);
      auto stop = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    double med = median(times);
    if (json) {
      rows.push_back({{"method", method_name(method)},
                      {"reps", reps},
                      {"median_ms", med},
                      {"count", count.str()}});
    } else {
      std::cout << "method=" << method_name(method) << " reps=" << reps << " median_ms=" << med
                << " count=" << count.str() << "\n";
    }
  }
  if (json) std::cout << rows.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"region counts for integer deformations of the braid arrangement"};
  app.require_subcommand(1);

  SpecOptions spec_opts;
  std::string methods = "fast,oracle";
  std::string tree_text;
  std::string what = "boxes";
  std::string op;
  bool json = false;
  int index = 0;
  int reps = 5;
  int verify_n = 3, verify_m = 2, verify_samples = 50;
  double density = 0.5;
  std::uint64_t seed = 1;
  long long guard = 100000000;
  long long prime_bound = 0;

  auto add_common = [&](CLI::App* cmd) {
    add_spec_options(cmd, &spec_opts);
    cmd->add_flag("--json", json, "machine-readable output");
    cmd->add_option("--guard", guard, "tree-count guard for enumeration methods");
    cmd->add_option("--prime-bound", prime_bound, "lower bound for the oracle's primes");
  };

  CLI::App* count = app.add_subcommand("count", "count regions by the chosen methods");
  add_common(count);
  count->add_option("--methods", methods,
                    "comma list of brute,fast,involution,formula,bijection,oracle");
  count->add_option("--method", methods, "single method (alias of --methods)");

  CLI::App* verify = app.add_subcommand("verify", "differential sweep over random specs");
  verify->add_flag("--json", json, "machine-readable output");
  verify->add_option("--guard", guard, "tree-count guard");
  verify->add_option("--prime-bound", prime_bound, "lower bound for the oracle's primes");
  verify->add_option("--n", verify_n, "dimension of sampled specs");
  verify->add_option("--m", verify_m, "offset bound of sampled specs");
  verify->add_option("--density", density, "probability of each offset");
  verify->add_option("--samples", verify_samples, "number of specs");
  verify->add_option("--seed", seed, "PRNG seed");

  CLI::App* classify = app.add_subcommand("classify", "classification quadruple of one tree");
  add_common(classify);
  classify->add_option("--tree", tree_text, "canonical tree text")->required();

  CLI::App* render = app.add_subcommand("render", "DOT drawing of one tree");
  add_common(render);
  render->add_option("--tree", tree_text, "canonical tree text")->required();
  render->add_option("--what", what, "boxes | connected | classification");

  CLI::App* explain = app.add_subcommand("explain", "walk the contribution computation");
  add_common(explain);
  explain->add_option("--tree", tree_text, "canonical tree text")->required();

  CLI::App* involve = app.add_subcommand("involve", "apply one involution or bijection");
  add_common(involve);
  involve->add_option("--tree", tree_text, "canonical tree text")->required();
  involve->add_option("--op", op, "phi_l psi_l phi_u psi_u omega_l omega_u f g")->required();
  involve->add_option("--index", index, "index for psi_l / psi_u");

  CLI::App* bench = app.add_subcommand("bench", "median wall time per method");
  add_common(bench);
  bench->add_option("--methods", methods, "comma list of methods");
  bench->add_option("--reps", reps, "repetitions per method (>= 3 for stable medians)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunOptions run_opts;
  run_opts.guard = guard;
  run_opts.prime_bound = prime_bound;

  try {
    if (count->parsed()) return cmd_count(spec_opts, methods, run_opts, json);
    if (verify->parsed())
      return cmd_verify(verify_n, verify_m, density, verify_samples, seed, run_opts, json);
    if (classify->parsed()) return cmd_classify(spec_opts, tree_text);
    if (render->parsed()) return cmd_render(spec_opts, tree_text, what);
    if (explain->parsed()) return cmd_explain(spec_opts, tree_text);
    if (involve->parsed()) return cmd_involve(spec_opts, tree_text, op, index);
    if (bench->parsed()) return cmd_bench(spec_opts, methods, reps, run_opts, json);
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
