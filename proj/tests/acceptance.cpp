// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "twinned/commands.hpp"
#include "twinned/ehrhart.hpp"
#include "twinned/groebner.hpp"
#include "twinned/verify.hpp"

using namespace twinned;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

int run(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << title << " -- "
            << out.detail.str() << " (" << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
  return out.pass ? 0 : 1;
}

void delta_table(Outcome& out) {
  const std::vector<std::vector<int>> expected{
      {1, 3, 1}, {1, 7, 7, 1}, {1, 15, 33, 15, 1}, {1, 31, 131, 131, 31, 1}, {1, 63, 473, 883, 473, 63, 1}};
  for (int d = 2; d <= 6; ++d) {
    DeltaOptions opt;
    opt.t_max = 1;  // normality belongs to criterion 5
    const auto r = cmd_delta(Poset::chain(d), Poset::antichain(d), opt);
    if (r.report["delta"] != nlohmann::json(expected[d - 2]))
      out.fail("d=" + std::to_string(d) + " gave " + r.report["delta"].dump());
  }
  if (out.pass) out.detail << "chain/antichain d=2..6 exact";
}

void interior_equivalence(Outcome& out) {
  int with = 0, without = 0;
  auto check = [&](const Poset& p, const Poset& q) {
    const auto a = analyze_interior(p, q);
    if (!a.agree()) out.fail("disagreement on " + serialize_poset(p) + " / " + serialize_poset(q));
    if (a.certificate && !verify_certificate(build_omega(p, q), *a.certificate)) out.fail("bad certificate");
    (a.common_extension ? with : without)++;
  };
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto [p, q] = random_pair(2 + static_cast<int>(seed % 5), 1, seed % 2 ? 4 : 2, 1000 + seed);
    check(p, q);
  }
  std::size_t exhaustive = 0;
  for (int d = 2; d <= 3; ++d) {
    const auto all = oracle::all_posets(d);
    for (const auto& p : all)
      for (const auto& q : all) {
        check(p, q);
        ++exhaustive;
      }
  }
  out.detail << "500 random pairs d=2..6 and " << exhaustive << " exhaustive pairs d=2,3; " << with
             << " with a common extension, " << without << " without";
}

void quadratic_family(Outcome& out) {
  int pairs = 0, checks = 0;
  for (std::uint64_t seed = 0; pairs < 100; ++seed) {
    const int d = 2 + static_cast<int>(seed % 4);
    const auto [p, q] = random_compatible_pair(d, 1, seed % 2 ? 4 : 2, 5000 + seed);
    ++pairs;
    const VariableSet vs = build_variables(p, q);
    const MonomialOrder base = default_order(vs);
    const auto gens = toric_ideal_generators(vs, base);
    std::vector<MonomialOrder> orders{base};
    for (std::uint64_t k = 0; k < 3; ++k) orders.push_back(random_order(vs, seed * 7 + k));
    for (const auto& order : orders) {
      const auto report = verify_quadratic_family(p, q, order, &gens);
      ++checks;
      if (!report.passed())
        out.fail("failed on " + serialize_poset(p) + " / " + serialize_poset(q) + ": " + report.to_json().dump());
    }
  }
  out.detail << pairs << " pairs d=2..5, " << checks << " order checks";
}

void counterexample(Outcome& out) {
  const Poset p = parse_poset("5; 1<3 2<3 2<4 3<5 4<5");
  const Poset q = parse_poset("5; 4<3 3<2 2<1 4<5");
  if (common_linear_extension(p, q)) out.fail("unexpected common extension");
  if (origin_in_interior(build_omega(p, q))) out.fail("origin reported interior");
  const VariableSet vs = build_variables(p, q);
  const Binomial cubic{parse_monomial(vs, "x{2}*x{1,2,3,4}*y{1,2,3,4,5}"), parse_monomial(vs, "x{2,4}*y{4,5}*z")};
  const MonomialOrder base = default_order(vs);
  const auto gens = toric_ideal_generators(vs, base);
  auto has = [&](const std::vector<Binomial>& gb) { return std::find(gb.begin(), gb.end(), cubic) != gb.end(); };
  if (!has(gens)) out.fail("cubic missing under the default order");
  int hits = 0;
  for (std::uint64_t k = 0; k < 25; ++k) {
    const auto order = random_order(vs, 1 + k);
    const auto gb = buchberger(gens, order).elements;
    if (has(gb)) ++hits;
    if (!ideal_equality(gb, gens, base)) out.fail("random order changed the ideal");
  }
  if (hits != 25) out.fail("cubic present under only " + std::to_string(hits) + "/25 random orders");
  if (!quadratically_generated(vs, gens, base)) out.fail("degree-2 part does not generate the ideal");
  ReproduceOptions opt;
  if (cmd_reproduce(opt).exit_code != kExitOk) out.fail("reproduce reported a mismatch");
  if (out.pass) out.detail << "cubic under default + 25 random orders; quadrics generate; reproduce exit 0";
}

void geometric_bundle(Outcome& out) {
  int count = 0;
  auto check = [&](const Poset& p, const Poset& q) {
    const int d = p.size();
    const auto r = analyze_polytope(p, q, d + 1);
    ++count;
    if (!r.geometry_holds()) out.fail("failed on " + serialize_poset(p) + " / " + serialize_poset(q) + ": " + r.to_json().dump());
  };
  for (int d = 1; d <= 4; ++d) check(Poset::chain(d), Poset::antichain(d));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto [p, q] = random_compatible_pair(2 + static_cast<int>(seed % 3), 1, seed % 2 ? 4 : 2, 9000 + seed);
    check(p, q);
  }
  out.detail << count << " pairs: Fano, reflexive, normal to t=d+1, delta symmetric and unimodal";
}

void properties(Outcome& out) {
  int schedules = 0, binomials = 0, round_trips = 0, families = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int d = 2 + static_cast<int>(seed % 2);
    const auto [p, q] = random_pair(d, 1, 2, 300 + seed);
    const VariableSet vs = build_variables(p, q);
    const MonomialOrder order = random_order(vs, seed);
    auto gens = family_G(p, q, vs);
    const auto toric = toric_ideal_generators(vs, order);
    gens.insert(gens.end(), toric.begin(), toric.end());
    const auto a = buchberger(gens, order, PairSchedule::kDegree);
    const auto b = buchberger(gens, order, PairSchedule::kFifo);
    if (a.elements != b.elements) out.fail("schedules disagree on " + serialize_poset(p) + " / " + serialize_poset(q));
    if (a.elements != toric) out.fail("reduced basis differs from elimination result");
    ++schedules;
    for (const auto& list : {std::cref(gens), std::cref(a.elements)})
      for (const auto& bin : list.get()) {
        ++binomials;
        if (pi_eval(vs, bin.first) != pi_eval(vs, bin.second)) out.fail("binomial outside the toric ideal");
      }
  }
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int d = 1 + static_cast<int>(seed % 4);
    const auto [p, q] = random_pair(d, 1, 2, 600 + seed);
    const Polytope poly(build_omega(p, q));
    const auto counts = ehrhart_counts(poly.halfspaces(), d, d);
    if (counts_from_delta(delta_vector(counts, d), d, d).values != counts.values) out.fail("delta round trip failed");
    ++round_trips;
    for (const Poset* x : {&p, &q}) {
      const auto fam = enumerate_ideals(*x);
      ++families;
      for (Mask u : fam.ideals)
        for (Mask v : fam.ideals)
          if (!fam.contains(u | v) || !fam.contains(u & v)) out.fail("ideal family not a lattice");
    }
  }
  out.detail << schedules << " schedule comparisons, " << binomials << " binomials pi-checked, " << round_trips
             << " delta round trips, " << families << " ideal lattices";
}

}  // namespace

int main() {
  int failures = 0;
  failures += run(1, "delta-vector table", delta_table);
  failures += run(2, "interior origin iff common linear extension", interior_equivalence);
  failures += run(3, "quadratic family is a Groebner basis", quadratic_family);
  failures += run(4, "counterexample pair", counterexample);
  failures += run(5, "reflexive, Fano, normal, symmetric unimodal delta", geometric_bundle);
  failures += run(6, "property suite", properties);
  std::cout << (failures ? std::to_string(failures) + " criterion(s) failed" : std::string("all criteria passed"))
            << std::endl;
  return failures ? 1 : 0;
}
