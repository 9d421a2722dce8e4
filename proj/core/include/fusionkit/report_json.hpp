#pragma once

#include <cstddef>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/control.hpp"
#include "fusionkit/critical.hpp"
#include "fusionkit/families.hpp"
#include "fusionkit/suite.hpp"

namespace fusionkit {

using Json = nlohmann::ordered_json;

/// Subgroups are written as sorted member indices, maps as [from, to] index pairs.
Json members_json(const Subgroup& h);

Json to_json(const PLocalProfile& profile);
/// Matches the control report schema; `elapsed_ms` only when given.
Json to_json(const ControlReport& report, std::optional<double> elapsed_ms = std::nullopt);
/// D and [P, O^p(G)] as indices of the setup's P-table.
Json to_json(const CriticalCertificate& cert);
Json to_json(const AglClaims& claims);
Json to_json(const QuillenDemo& demo);
/// Per-check elapsed times only when `timings` is set, so that two runs
/// serialize identically otherwise.
Json to_json(const SuiteReport& report, bool timings = false);

struct AuditRow {
  std::vector<Elem> a;
  bool normal_in_p = false;
  bool centralizer_is_p_group = false;
  std::size_t centralizer_order = 0;
  friend bool operator==(const AuditRow&, const AuditRow&) = default;
};

/// Certificate with every subgroup expressed in the ambient group.
struct CertificateSummary {
  std::vector<Elem> p;
  std::vector<Elem> d;
  std::vector<Elem> commutator;
  bool g_invariant = false;
  bool exponent_ok = false;
  bool class_condition = false;
  bool faithful = false;
  std::vector<AuditRow> maximal_abelians;
  std::size_t candidates_examined = 0;
  friend bool operator==(const CertificateSummary&, const CertificateSummary&) = default;
};

struct PrimeAnalysis {
  unsigned prime = 0;
  std::vector<Elem> sylow;
  std::size_t op_residual_order = 0;
  std::vector<Elem> hyperfocal;
  std::vector<Elem> focal;
  bool p_nilpotent = false;
  std::vector<std::vector<Elem>> essential_classes;  // one fully normalized representative each
  std::optional<CertificateSummary> certificate;    // Thompson D for P = S
  friend bool operator==(const PrimeAnalysis&, const PrimeAnalysis&) = default;
};

struct AnalysisReport {
  std::string name;
  std::size_t order = 0;
  std::size_t degree = 0;
  std::vector<PrimeAnalysis> primes;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Profile and essential classes at each prime (all prime divisors when
/// `primes` is empty); the Thompson certificate on S when requested.
AnalysisReport analyze(const Subgroup& g, const std::string& name, const std::vector<unsigned>& primes,
                       bool with_certificate);

Json to_json(const AnalysisReport& report);
/// Inverse of to_json; throws ParseError on a malformed document.
AnalysisReport analysis_from_json(const Json& j);

}  // namespace fusionkit
