#pragma once

// Certification pipelines. Each pipeline checks its hypotheses, then every
// conclusion clause separately, and folds the outcome into a verdict.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nefcert/graphs.hpp"
#include "nefcert/linalg.hpp"

namespace nefcert {

inline constexpr std::string_view kReportVersion = "1";

enum class Status { kPass, kFail, kPartial, kSkipped };
enum class Verdict { kConfirmed, kHypothesisNotMet, kDiscrepancy };

std::string_view to_string(Status s);
std::string_view to_string(Verdict v);
/// 0, 2, 3 for CONFIRMED, HYPOTHESIS_NOT_MET, DISCREPANCY.
int exit_code(Verdict v);

struct Check {
  std::string id;
  Status status = Status::kSkipped;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
};

struct Instance {
  std::string kind;          // "matrix" or "graph"
  std::string description;
  std::optional<IntMatrix> matrix;
  std::optional<Graph> graph;

  /// FNV-1a 64 of the kind and the canonical text form, as 16 hex digits.
  std::string hash() const;
};

struct CertificateReport {
  std::string pipeline;
  Instance instance;
  std::vector<Check> hypotheses;
  std::vector<Check> clauses;
  Verdict verdict = Verdict::kConfirmed;
  std::vector<std::pair<std::string, std::int64_t>> timings_ms;

  /// HYPOTHESIS_NOT_MET if a hypothesis failed, else DISCREPANCY if a clause
  /// failed, else CONFIRMED. PARTIAL and SKIPPED clauses do not downgrade.
  void settle();
};

struct CertifyOptions {
  std::int64_t k_max = 3;          // bound for the recorded idp_check
  bool all_translates = false;     // nef-partition check for every lattice point a
  std::size_t cycle_cap = 0;       // 0: default_cycle_cap()
  std::size_t sum_gb_max_points = 40;  // skip the Minkowski sum's own GB beyond this
};

CertificateReport certify_main1(const IntMatrix& a, const CertifyOptions& opt = {});
CertificateReport certify_main2(const IntMatrix& a, const CertifyOptions& opt = {});
CertificateReport certify_corollary(const IntMatrix& a, const CertifyOptions& opt = {});
CertificateReport certify_proof_identities(const IntMatrix& a, const CertifyOptions& opt = {});
/// Throws NotConnected.
CertificateReport certify_edge(const Graph& g, const CertifyOptions& opt = {});

/// version, instance, hypotheses, clauses, verdict, timings_ms. Timings are
/// emitted only when asked for, so reports stay byte-identical across runs.
nlohmann::ordered_json to_json(const CertificateReport& r, bool with_timings = false);
std::string to_text(const CertificateReport& r, bool with_timings = false);

}  // namespace nefcert
