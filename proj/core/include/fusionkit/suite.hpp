#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/control.hpp"
#include "fusionkit/corpus.hpp"

namespace fusionkit {

/// One named check on one entry (and prime, 0 when not per-prime).
struct CheckResult {
  std::string name;
  unsigned prime = 0;
  bool ok = true;
  std::size_t instances = 0;  // pairs, setups, subgroups... whatever was iterated
  std::string detail;         // first failure, or a short tally
  double elapsed_ms = 0;
};

struct EntryResult {
  std::string name;
  std::size_t order = 0;
  std::vector<unsigned> primes;
  std::vector<CheckResult> checks;
  std::optional<std::string> error;

  bool ok() const;
};

struct SuiteOptions {
  std::string filter = "*";
  unsigned jobs = 1;
  /// Above this group order only S, N_G(S), G and the named subgroups are
  /// used as H instead of the full overgroup lattice of S.
  std::size_t overgroup_scan_limit = kDefaultGroupCap;
};

struct SuiteReport {
  std::vector<EntryResult> entries;
  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0 && !entries.empty(); }
};

/// Runs every check on the entries whose name matches the filter. Entries
/// are processed by `jobs` workers; the result order is the corpus order.
SuiteReport run_suite(const std::vector<LoadedEntry>& corpus, const SuiteOptions& options = {});

EntryResult run_entry(const LoadedEntry& entry, const SuiteOptions& options = {});

/// H with S <= H <= G used for the control checks: S, N_G(S), G, the named
/// subgroups containing S, then (when |G| is within `scan_limit`) every other
/// subgroup containing S. Deduplicated.
std::vector<Subgroup> overgroup_pairs(const Subgroup& g, const Subgroup& s, const std::vector<Subgroup>& named,
                                      std::size_t scan_limit);

/// SL(2,3) at p = 2: the elementary-abelian form of the hypothesis holds, the
/// exponent-4 form fails at <i> -> <j>, and F_S(S) != F_S(G).
struct QuillenDemo {
  bool elementary_abelian_hypothesis = false;
  bool exponent4_hypothesis = true;
  bool fusion_equal = true;
  std::optional<HypothesisWitness> witness;
  bool witness_is_i_to_j = false;
  bool reproduced() const {
    return elementary_abelian_hypothesis && !exponent4_hypothesis && !fusion_equal && witness_is_i_to_j;
  }
};
QuillenDemo quillen_demo();

}  // namespace fusionkit
