#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/group_io.hpp"
#include "fusionkit/subgroup.hpp"

namespace fusionkit {

/// A frozen quantity. Keys are "order", "center_order", "derived_order" or
/// "<name>@p" for sylow_order, op_order, hyperfocal_order, focal_order,
/// p_nilpotent (0/1) and subgroup_count (subgroups of S). `source` says where
/// the number came from: "known" (textbook), "oracle" (independent brute
/// force) or "construction".
struct Expectation {
  std::string key;
  std::int64_t value = 0;
  std::string source;
};

struct NamedSubgroup {
  std::string name;
  std::vector<std::string> generators;  // lines in the group-file syntax
};

/// Family the entry was built from; the suite rebuilds it and checks its claims.
struct FamilyTag {
  std::string kind;  // "agl" or "sl23"
  unsigned p = 0;
  unsigned n = 0;
};

struct CorpusEntry {
  std::string name;
  std::string file;  // relative to the manifest
  GroupSpec spec;
  std::vector<unsigned> primes;
  std::optional<FamilyTag> family;
  std::vector<NamedSubgroup> subgroups;
  std::vector<Expectation> expected;
};

/// The built-in corpus in a fixed order.
std::vector<CorpusEntry> builtin_corpus();

/// Writes <dir>/manifest.json and one group file per entry.
void write_corpus(const std::string& dir, const std::vector<CorpusEntry>& entries);

struct ExpectationCheck {
  Expectation expected;
  std::optional<std::int64_t> actual;  // unset when the key could not be computed
  bool ok = false;
};

/// An entry with its group enumerated and its expectations re-verified.
struct LoadedEntry {
  CorpusEntry entry;
  Subgroup group;
  bool closure_ok = false;
  std::vector<ExpectationCheck> audit;
  /// Set when the group file or a named subgroup could not be read.
  std::optional<std::string> error;

  bool audit_ok() const;
  /// Named subgroup, or nullopt.
  std::optional<Subgroup> subgroup(const std::string& name) const;
};

LoadedEntry load_entry(CorpusEntry entry);

/// Reads a manifest and every group file it names. Throws ParseError for a
/// malformed manifest; per-entry problems end up in LoadedEntry::error.
std::vector<LoadedEntry> load_corpus(const std::string& manifest_path);

/// Evaluates one expectation key on `group`. Throws PreconditionViolated for
/// an unknown key, PNotPrime for a bad prime suffix.
std::int64_t compute_quantity(const Subgroup& group, const std::string& key);

/// fnmatch-style glob on entry names ('*', '?', '[...]').
bool name_matches(const std::string& name, const std::string& pattern);

}  // namespace fusionkit
