#include "twinned/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "twinned/errors.hpp"
#include "twinned/groebner.hpp"
#include "twinned/verify.hpp"

namespace twinned {

namespace {

constexpr const char* kCounterexampleP = "5; 1<3 2<3 2<4 3<5 4<5";
constexpr const char* kCounterexampleQ = "5; 4<3 3<2 2<1 4<5";
constexpr const char* kCounterexampleCubic = "x{2}*x{1,2,3,4}*y{1,2,3,4,5} - x{2,4}*y{4,5}*z";

nlohmann::json permutation_json(const std::vector<int>& perm) {
  nlohmann::json out = nlohmann::json::array();
  for (int x : perm) out.push_back(x + 1);
  return out;
}

nlohmann::json poset_json(const Poset& p) {
  nlohmann::json covers = nlohmann::json::array();
  for (auto [a, b] : p.covers()) covers.push_back({a + 1, b + 1});
  return {{"d", p.size()}, {"covers", covers}};
}

std::vector<std::string> render(const VariableSet& vs, const std::vector<Binomial>& bs) {
  std::vector<std::string> out;
  out.reserve(bs.size());
  for (const auto& b : bs) out.push_back(format_binomial(vs, b));
  return out;
}

std::vector<int> delta_ints(const DeltaVector& delta) {
  std::vector<int> out;
  for (const auto& e : delta.entries) out.push_back(static_cast<int>(e));
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string out = "(";
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? ", " : "") + std::to_string(xs[k]);
  return out + ")";
}

}  // namespace

CommandResult cmd_analyze(const Poset& p, const Poset& q) {
  const auto analysis = analyze_interior(p, q);
  const auto cfg = build_omega(p, q);
  CommandResult res;
  auto& r = res.report;
  r["d"] = p.size();
  r["P"] = poset_json(p);
  r["Q"] = poset_json(q);
  r["ideals_P"] = enumerate_ideals(p).size();
  r["ideals_Q"] = enumerate_ideals(q).size();
  r["omega_size"] = cfg.points.size();
  r["common_extension"] = analysis.common_extension ? permutation_json(*analysis.common_extension) : nlohmann::json(nullptr);
  r["union_cycle"] = permutation_json(analysis.union_cycle);
  r["origin_interior"] = analysis.certificate.has_value();
  if (analysis.certificate) {
    nlohmann::json weights = nlohmann::json::array();
    for (const auto& w : analysis.certificate->weights) weights.push_back(w.str());
    r["certificate"] = weights;
  }
  if (analysis.common_extension) {
    // The same pair with labels renamed so that 1, 2, ..., d is the common extension.
    r["relabeled"] = {{"P", serialize_poset(p.relabel(*analysis.common_extension))},
                      {"Q", serialize_poset(q.relabel(*analysis.common_extension))}};
  }
  r["verdicts_agree"] = analysis.agree();

  std::ostringstream text;
  text << "d = " << p.size() << "; |J(P)| = " << r["ideals_P"] << "; |J(Q)| = " << r["ideals_Q"]
       << "; |Omega| = " << cfg.points.size() << "\n";
  if (analysis.common_extension) {
    text << "common extension " << format_permutation(*analysis.common_extension);
  } else {
    text << "no common extension (union cycle ";
    for (std::size_t k = 0; k < analysis.union_cycle.size(); ++k)
      text << (k ? "<" : "") << analysis.union_cycle[k] + 1;
    text << ")";
  }
  text << "; origin " << (analysis.certificate ? "interior" : "not interior") << "\n";
  if (analysis.common_extension)
    text << "relabeled: P = " << r["relabeled"]["P"].get<std::string>() << "  Q = "
         << r["relabeled"]["Q"].get<std::string>() << "\n";
  if (!analysis.agree()) {
    text << "ERROR: the linear-extension test and the LP interior test disagree\n";
    res.exit_code = kExitMismatch;
  }
  res.text = text.str();
  return res;
}

CommandResult cmd_groebner(const Poset& p, const Poset& q, const std::optional<std::string>& order_text) {
  const VariableSet vs = build_variables(p, q);
  const MonomialOrder order = order_text ? parse_order(vs, *order_text) : default_order(vs);
  const auto g = family_G(p, q, vs);
  const auto gb = toric_ideal_generators(vs, order);
  CommandResult res;
  auto& r = res.report;
  r["variables"] = vs.size();
  nlohmann::json ranking = nlohmann::json::array();
  for (auto v : order.ranking()) ranking.push_back(vs[v].name());
  r["order"] = ranking;
  r["family_G"] = render(vs, g);
  r["reduced_gb"] = render(vs, gb);
  r["max_degree"] = max_degree(gb);
  std::vector<Binomial> high;
  for (const auto& b : gb)
    if (b.degree() > 2) high.push_back(b);
  r["non_quadratic"] = render(vs, high);

  std::ostringstream text;
  text << "# family G (" << g.size() << " binomials)\n";
  for (const auto& s : r["family_G"]) text << s.get<std::string>() << "\n";
  text << "# reduced Groebner basis (" << gb.size() << " binomials, max degree " << max_degree(gb) << ")\n";
  for (const auto& s : r["reduced_gb"]) text << s.get<std::string>() << "\n";
  if (!high.empty()) {
    text << "# elements of degree > 2\n";
    for (const auto& s : r["non_quadratic"]) text << s.get<std::string>() << "\n";
  }
  if (common_linear_extension(p, q)) {
    const auto report = verify_quadratic_family(p, q, order, &gb);
    r["quadratic_family"] = report.to_json();
    text << "# quadratic family checks: G oriented " << (report.initial_is_first ? "yes" : "NO")
         << ", G Groebner basis " << (report.g_is_groebner ? "yes" : "NO") << ", reduced basis quadratic "
         << (report.reduced_gb_quadratic ? "yes" : "NO") << ", initials from G "
         << (report.initials_from_g ? "yes" : "NO") << ", reduced basis inside G "
         << (report.g_contains_reduced_gb ? "yes" : "no") << "\n";
    if (!report.passed()) res.exit_code = kExitMismatch;
  } else {
    r["quadratic_family"] = nullptr;
    text << "# no common linear extension: quadratic family checks skipped\n";
  }
  res.text = text.str();
  return res;
}

CommandResult cmd_delta(const Poset& p, const Poset& q, const DeltaOptions& options) {
  const int d = p.size();
  if (d > options.d_cap) {
    if (!options.allow_large)
      throw InputError("d = " + std::to_string(d) + " exceeds the cap " + std::to_string(options.d_cap) +
                       " (raise --dmax to override)");
    std::cerr << "warning: d = " << d << " exceeds the default cap; counting may take very long\n";
  }
  const int t_max = options.t_max.value_or(d + 1);
  const auto report = analyze_polytope(p, q, t_max);
  CommandResult res;
  res.report = report.to_json();
  res.report["d"] = d;
  std::ostringstream text;
  text << "L(0.." << d << ") =";
  for (const auto& v : report.counts.values) text << ' ' << v;
  text << "\ndelta = " << join(delta_ints(report.delta)) << "\n";
  text << "symmetric " << (report.flags.symmetric ? "yes" : "no") << ", unimodal "
       << (report.flags.unimodal ? "yes" : "no") << ", reflexive " << (report.reflexive ? "yes" : "no")
       << ", Fano " << (report.fano ? "yes" : "no") << ", normal up to t = " << t_max << ": "
       << (report.normal ? (*report.normal ? "yes" : "no") : "not checked") << "\n";
  const bool consistent = report.reflexive && report.fano && report.flags.symmetric && report.flags.unimodal &&
                          report.normal.value_or(true);
  if (common_linear_extension(p, q) && !consistent) {
    text << "ERROR: a pair with a common linear extension failed a geometric check\n";
    res.exit_code = kExitMismatch;
  }
  res.text = text.str();
  return res;
}

nlohmann::json builtin_golden() {
  return {
      {"counterexample",
       {{"P", kCounterexampleP},
        {"Q", kCounterexampleQ},
        {"common_extension", false},
        {"origin_interior", false},
        {"cubic", kCounterexampleCubic},
        {"cubic_in_reduced_gb", true},
        {"quadratically_generated", true}}},
      {"chain_antichain_delta",
       {{"2", {1, 3, 1}},
        {"3", {1, 7, 7, 1}},
        {"4", {1, 15, 33, 15, 1}},
        {"5", {1, 31, 131, 131, 31, 1}},
        {"6", {1, 63, 473, 883, 473, 63, 1}}}},
  };
}

CommandResult cmd_reproduce(const ReproduceOptions& options) {
  if (options.trials < 1) throw InputError("trials must be at least 1");
  const nlohmann::json golden = options.golden.value_or(builtin_golden());
  CommandResult res;
  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json diffs = nlohmann::json::array();
  std::ostringstream text;
  auto check = [&](const std::string& name, const nlohmann::json& expected, const nlohmann::json& actual) {
    const bool ok = expected == actual;
    checks.push_back({{"check", name}, {"expected", expected}, {"actual", actual}, {"pass", ok}});
    if (!ok) diffs.push_back({{"check", name}, {"expected", expected}, {"actual", actual}});
    text << (ok ? "PASS " : "FAIL ") << name;
    if (!ok) text << "\n  expected: " << expected.dump() << "\n  actual:   " << actual.dump();
    text << "\n";
  };

  const auto& cx = golden.at("counterexample");
  const Poset p = parse_poset(cx.at("P").get<std::string>());
  const Poset q = parse_poset(cx.at("Q").get<std::string>());
  const auto analysis = analyze_interior(p, q);
  check("counterexample: common linear extension", cx.at("common_extension"), analysis.common_extension.has_value());
  check("counterexample: origin interior", cx.at("origin_interior"), analysis.certificate.has_value());

  const VariableSet vs = build_variables(p, q);
  const std::string cubic_text = cx.at("cubic").get<std::string>();
  const auto bar = cubic_text.find(" - ");
  const Binomial cubic{parse_monomial(vs, cubic_text.substr(0, bar)), parse_monomial(vs, cubic_text.substr(bar + 3))};
  const MonomialOrder order0 = default_order(vs);
  const auto gens = toric_ideal_generators(vs, order0);
  auto has_cubic = [&](const std::vector<Binomial>& gb) { return std::find(gb.begin(), gb.end(), cubic) != gb.end(); };
  check("counterexample: cubic in reduced basis (default order)", cx.at("cubic_in_reduced_gb"), has_cubic(gens));
  int random_hits = 0;
  for (int k = 0; k < options.trials; ++k) {
    const MonomialOrder order = random_order(vs, options.seed + static_cast<std::uint64_t>(k));
    if (has_cubic(buchberger(gens, order).elements)) ++random_hits;
  }
  check("counterexample: cubic in reduced basis (" + std::to_string(options.trials) + " random orders)",
        cx.at("cubic_in_reduced_gb").get<bool>() ? options.trials : 0, random_hits);
  check("counterexample: generated by quadrics", cx.at("quadratically_generated"),
        quadratically_generated(vs, gens, order0));

  for (const auto& [key, expected] : golden.at("chain_antichain_delta").items()) {
    const int d = std::stoi(key);
    const Polytope poly(build_omega(Poset::chain(d), Poset::antichain(d)));
    const auto delta = delta_vector(ehrhart_counts(poly.halfspaces(), d, d), d);
    check("chain/antichain delta d=" + key, expected, delta_ints(delta));
  }

  res.report = {{"checks", checks}, {"diff", diffs}, {"passed", diffs.empty()}};
  res.exit_code = diffs.empty() ? kExitOk : kExitMismatch;
  text << (diffs.empty() ? "all checks match\n" : std::to_string(diffs.size()) + " mismatch(es)\n");
  res.text = text.str();
  return res;
}

CommandResult cmd_fuzz(const FuzzOptions& options) {
  if (options.trials < 1) throw InputError("trials must be at least 1");
  if (options.d_min < 1 || options.d_max < options.d_min) throw InputError("invalid d range");
  int interior_disagreements = 0, family_failures = 0, generation_violations = 0, with_extension = 0;
  nlohmann::json violations = nlohmann::json::array();
  for (int k = 0; k < options.trials; ++k) {
    const std::uint64_t trial_seed = options.seed * 1000003ull + static_cast<std::uint64_t>(k);
    const int d = options.d_min + static_cast<int>(trial_seed % static_cast<std::uint64_t>(options.d_max - options.d_min + 1));
    const auto [p, q] = random_pair(d, options.edge_num, options.edge_den, trial_seed);
    std::vector<std::string> problems;

    const auto analysis = analyze_interior(p, q);
    if (!analysis.agree()) {
      ++interior_disagreements;
      problems.push_back("interior tests disagree");
    }
    const VariableSet vs = build_variables(p, q);
    const MonomialOrder order = default_order(vs);
    const auto gens = toric_ideal_generators(vs, order);
    if (analysis.common_extension) {
      ++with_extension;
      if (!verify_quadratic_family(p, q, order, &gens).passed()) {
        ++family_failures;
        problems.push_back("quadratic family checks failed");
      }
    }
    if (!quadratically_generated(vs, gens, order)) {
      ++generation_violations;
      problems.push_back("toric ideal not generated by quadrics");
    }
    if (problems.empty()) continue;
    nlohmann::json v{{"trial", k}, {"seed", trial_seed}, {"P", serialize_poset(p)}, {"Q", serialize_poset(q)}, {"problems", problems}};
    if (options.dump_dir) {
      std::filesystem::create_directories(*options.dump_dir);
      const auto path = std::filesystem::path(*options.dump_dir) / ("violation_" + std::to_string(trial_seed) + ".txt");
      std::ofstream(path) << serialize_poset(p) << "\n" << serialize_poset(q) << "\n";
      v["file"] = path.string();
    }
    violations.push_back(std::move(v));
  }
  CommandResult res;
  res.report = {{"trials", options.trials},
                {"seed", options.seed},
                {"pairs_with_common_extension", with_extension},
                {"interior_disagreements", interior_disagreements},
                {"quadratic_family_failures", family_failures},
                {"quadratic_generation_violations", generation_violations},
                {"violations", violations}};
  std::ostringstream text;
  text << options.trials << " trials (" << with_extension << " with a common extension): " << interior_disagreements
       << " interior-test disagreements, " << family_failures << " quadratic-family failures, "
       << generation_violations << " quadratic-generation violations\n";
  for (const auto& v : violations)
    text << "  seed " << v["seed"] << ": P = " << v["P"].get<std::string>() << "  Q = " << v["Q"].get<std::string>() << "\n";
  res.text = text.str();
  // Interior disagreements and quadratic-family failures contradict proven
  // statements; quadratic-generation violations are findings, not errors.
  res.exit_code = (interior_disagreements || family_failures) ? kExitMismatch : kExitOk;
  return res;
}

}  // namespace twinned
