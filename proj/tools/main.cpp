#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "twinned/commands.hpp"
#include "twinned/errors.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw twinned::InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A poset argument is either an inline description "d; a<b ..." or a file.
twinned::Poset load_poset(const std::string& arg) {
  if (arg.find(';') != std::string::npos) return twinned::parse_poset(arg);
  return twinned::parse_poset(read_file(arg));
}

int emit(const twinned::CommandResult& res, const std::string& format) {
  if (format == "json")
    std::cout << res.report.dump(2) << "\n";
  else
    std::cout << res.text;
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twinned order polytopes: interior test, toric Groebner bases, Ehrhart data"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string poset_p, poset_q;
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--poset-p", poset_p, "First poset: \"d; a<b ...\" or a file")->required();
    sub->add_option("--poset-q", poset_q, "Second poset: \"d; a<b ...\" or a file")->required();
  };

  auto* analyze = app.add_subcommand("analyze", "Common linear extension and interior-point test");
  add_pair(analyze);

  auto* groebner = app.add_subcommand("groebner", "Quadratic family and reduced Groebner basis");
  add_pair(groebner);
  std::string order = "default";
  groebner->add_option("--order", order, "Ranking file (variable names, lowest first) or 'default'");

  auto* delta = app.add_subcommand("delta", "Lattice-point counts, delta vector, reflexive/Fano/normal");
  add_pair(delta);
  std::optional<int> tmax;
  int dmax = 6;
  delta->add_option("--tmax", tmax, "Normality check horizon (default d + 1)")->check(CLI::PositiveNumber);
  delta->add_option("--dmax", dmax, "Largest accepted d (above 6 prints a warning)")->check(CLI::PositiveNumber);

  auto* reproduce = app.add_subcommand("reproduce", "Recompute the counterexample and delta table, diff against golden values");
  twinned::ReproduceOptions repro;
  std::string golden;
  reproduce->add_option("--trials", repro.trials, "Random orders tried on the counterexample")->check(CLI::PositiveNumber);
  reproduce->add_option("--seed", repro.seed, "Seed for the random orders");
  reproduce->add_option("--golden", golden, "Golden JSON file (built-in values when absent)");

  auto* fuzz = app.add_subcommand("fuzz", "Random pairs checked against every claim");
  twinned::FuzzOptions fz;
  fuzz->add_option("--trials", fz.trials, "Number of random pairs")->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", fz.seed, "Base seed");
  fuzz->add_option("--dmin", fz.d_min, "Smallest d");
  fuzz->add_option("--dmax", fz.d_max, "Largest d");
  fuzz->add_option("--dump-dir", fz.dump_dir, "Directory receiving violating pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : twinned::kExitInput;
  }

  try {
    if (*analyze) return emit(twinned::cmd_analyze(load_poset(poset_p), load_poset(poset_q)), format);
    if (*groebner) {
      std::optional<std::string> text;
      if (order != "default") text = read_file(order);
      return emit(twinned::cmd_groebner(load_poset(poset_p), load_poset(poset_q), text), format);
    }
    if (*delta) {
      const auto p = load_poset(poset_p);
      twinned::DeltaOptions opt;
      opt.t_max = tmax;
      if (p.size() > dmax)
        throw twinned::InputError("d = " + std::to_string(p.size()) + " exceeds --dmax " + std::to_string(dmax));
      opt.allow_large = true;
      return emit(twinned::cmd_delta(p, load_poset(poset_q), opt), format);
    }
    if (*reproduce) {
      if (!golden.empty()) {
        try {
          repro.golden = nlohmann::json::parse(read_file(golden));
        } catch (const nlohmann::json::exception& e) {
          throw twinned::InputError(std::string("golden file: ") + e.what());
        }
      }
      return emit(twinned::cmd_reproduce(repro), format);
    }
    if (*fuzz) return emit(twinned::cmd_fuzz(fz), format);
  } catch (const twinned::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return twinned::kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed golden data: " << e.what() << "\n";
    return twinned::kExitInput;
  }
  return twinned::kExitInput;
}
