#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "lattk/k3.hpp"

namespace lattk {

enum class CheckStatus { pass, fail, ambiguous, skipped };

std::string to_string(CheckStatus s);

// named verification outcome; `statement` is the exact claim the check
// asserts, `witness` carries the computed evidence. For ambiguous results
// witness["readings"] records every documented reading with its own verdict.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  std::string statement;
  nlohmann::json witness = nlohmann::json::object();
  std::vector<std::string> notes;

  // pass, or ambiguous with at least one passing reading; skipped counts
  bool ok() const;
};

struct SweepConfig {
  std::int64_t samples = 100;
  std::uint64_t seed = 0;
  std::int64_t numerator_bound = 9;
};

struct Report {
  std::string suite_version;
  std::string convention;
  SweepConfig config;
  std::vector<CheckResult> checks;  // sorted by name
  nlohmann::json sweep;
  bool overall_pass = false;
};

const std::vector<std::string>& check_registry();

// throws DomainError for unknown names
CheckResult run_check(const std::string& name, const SweepConfig& config);

Report run_all(const SweepConfig& config);

// per-sample reruns of the parameter-dependent checks
nlohmann::json sweep_bfields(const SweepConfig& config);

nlohmann::json report_json(const Report& report);
std::string report_text(const Report& report);

// canonical serialization: sorted keys, two-space indent, "p/q" rationals
std::string canonical_json(const nlohmann::json& j);

// deterministically sampled admissible parameter triples
std::vector<BFieldParams> sampled_triples(const SweepConfig& config);

// solutions of w perp h, w.e4 = e4_pairing, w^2 = square inside the rank-3
// sublattice spanned by (2e0+2B, h, e4) extended by s. The set can be
// infinite; it is returned as zero-s-coefficient representatives plus an
// exact description of the shift families.
struct AppBSolveResult {
  std::vector<MukaiVector> canonical;  // representatives with s-coefficient 0
  bool e4_line = false;                // each representative extends along e4 freely
  Int s_period = 0;                    // > 0: families w + y s + (...) e4, y in residues mod period
  IntVec s_residues;
};
AppBSolveResult appendix_b_solve(const ConcreteBField& b, const Int& square,
                                 const Int& e4_pairing);

}  // namespace lattk
