#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "twinned/poset.hpp"

namespace twinned {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInput = 2;

struct CommandResult {
  nlohmann::json report;
  std::string text;
  int exit_code = kExitOk;
};

/// Ideal counts, the common-extension verdict and the LP interior verdict.
/// Exits with kExitMismatch if the two verdicts disagree.
CommandResult cmd_analyze(const Poset& p, const Poset& q);

/// Family G, the reduced Groebner basis of the toric ideal under the chosen
/// order (`order_text` is a ranking file body, default order when absent),
/// and the quadratic-family checks when a common extension exists.
CommandResult cmd_groebner(const Poset& p, const Poset& q, const std::optional<std::string>& order_text);

struct DeltaOptions {
  std::optional<int> t_max;  // normality horizon, d + 1 when absent
  int d_cap = 6;
  bool allow_large = false;
};

/// Lattice-point counts, delta vector and the reflexive/Fano/normal flags.
CommandResult cmd_delta(const Poset& p, const Poset& q, const DeltaOptions& options);

struct ReproduceOptions {
  int trials = 25;
  std::uint64_t seed = 1;
  std::optional<nlohmann::json> golden;  // built-in values when absent
};

/// The known non-quadratic pair and the chain/antichain delta table,
/// diffed against golden values.
CommandResult cmd_reproduce(const ReproduceOptions& options);

/// Golden values used by cmd_reproduce.
nlohmann::json builtin_golden();

struct FuzzOptions {
  int trials = 100;
  std::uint64_t seed = 7;
  int d_min = 2;
  int d_max = 4;
  std::uint64_t edge_num = 1;
  std::uint64_t edge_den = 2;
  std::optional<std::string> dump_dir;
};

/// Random pairs: interior-test agreement always, the quadratic-family checks when a
/// common extension exists, and quadratic generation of the toric ideal.
CommandResult cmd_fuzz(const FuzzOptions& options);

}  // namespace twinned
