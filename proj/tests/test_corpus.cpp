#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <unistd.h>

#include "fusionkit/corpus.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/p_structure.hpp"
#include "oracles.hpp"

using namespace fusionkit;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("fusionkit_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  return d;
}

const std::vector<LoadedEntry>& loaded() {
  static const std::vector<LoadedEntry> all = [] {
    std::vector<LoadedEntry> out;
    for (auto& e : builtin_corpus()) out.push_back(load_entry(std::move(e)));
    return out;
  }();
  return all;
}

}  // namespace

TEST(BuiltinCorpus, ShapeAndAudit) {
  const auto& c = loaded();
  EXPECT_GE(c.size(), 15U);
  std::set<std::string> names;
  for (const auto& e : c) {
    EXPECT_TRUE(names.insert(e.entry.name).second) << e.entry.name;
    EXPECT_FALSE(e.error) << e.entry.name;
    EXPECT_TRUE(e.closure_ok) << e.entry.name;
    EXPECT_LE(e.group.order(), kDefaultGroupCap);
    EXPECT_EQ(e.entry.primes, prime_divisors(e.group.order())) << e.entry.name;
    EXPECT_FALSE(e.entry.expected.empty()) << e.entry.name;
    for (const auto& x : e.entry.expected) EXPECT_FALSE(x.source.empty());
    EXPECT_TRUE(e.audit_ok()) << e.entry.name;
  }
  for (const char* n : {"c2", "d8", "d16", "q8", "q16", "sd16", "s3", "s4", "a4", "s5", "sl23", "agl-3-2", "agl-2-3",
                        "c7c3", "s3xs3"})
    EXPECT_TRUE(names.count(n)) << n;
}

TEST(BuiltinCorpus, S4ExpectsHyperfocalFour) {
  for (const auto& e : loaded()) {
    if (e.entry.name != "s4") continue;
    bool found = false;
    for (const auto& x : e.entry.expected)
      if (x.key == "hyperfocal_order@2") {
        EXPECT_EQ(x.value, 4);
        found = true;
      }
    EXPECT_TRUE(found);
  }
}

TEST(BuiltinCorpus, Deterministic) {
  const auto a = builtin_corpus();
  const auto b = builtin_corpus();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].spec.generators, b[i].spec.generators);
  }
}

TEST(BuiltinCorpus, NamedSubgroups) {
  for (const auto& e : loaded())
    for (const auto& s : e.entry.subgroups) {
      const auto h = e.subgroup(s.name);
      ASSERT_TRUE(h) << e.entry.name << "/" << s.name;
      EXPECT_TRUE(h->is_subgroup_of(e.group));
    }
}

TEST(BuiltinCorpus, SubgroupCountsAgreeWithJoinOracle) {
  for (const auto& e : loaded())
    for (unsigned p : e.entry.primes) {
      const Subgroup s = sylow(e.group, p);
      EXPECT_EQ(enumerate_subgroups(s, SubgroupFilter::All).size(), oracle::all_subgroups_by_joins(s).size())
          << e.entry.name << " p=" << p;
    }
}

TEST(CorpusFiles, WriteThenLoadRoundTrips) {
  const fs::path d = scratch("roundtrip");
  const auto entries = builtin_corpus();
  write_corpus(d.string(), entries);
  const auto back = load_corpus((d / "manifest.json").string());
  ASSERT_EQ(back.size(), entries.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].entry.name, entries[i].name);
    EXPECT_EQ(back[i].entry.primes, entries[i].primes);
    EXPECT_EQ(back[i].entry.spec.generators, entries[i].spec.generators);
    EXPECT_EQ(back[i].entry.expected.size(), entries[i].expected.size());
    EXPECT_EQ(back[i].entry.family.has_value(), entries[i].family.has_value());
    EXPECT_TRUE(back[i].audit_ok()) << back[i].entry.name;
  }
  fs::remove_all(d);
}

TEST(CorpusFiles, CorruptedExpectationFailsAudit) {
  auto entries = builtin_corpus();
  CorpusEntry e = entries.front();
  e.expected.front().value += 1;
  const LoadedEntry l = load_entry(e);
  EXPECT_FALSE(l.audit_ok());
  EXPECT_FALSE(l.audit.front().ok);
  ASSERT_TRUE(l.audit.front().actual);
  EXPECT_EQ(*l.audit.front().actual, e.expected.front().value - 1);

  e.expected = {{"no_such_thing", 1, "oracle"}};
  const LoadedEntry u = load_entry(e);
  EXPECT_FALSE(u.audit_ok());
  EXPECT_FALSE(u.audit.front().actual);
}

TEST(CorpusFiles, Errors) {
  const fs::path d = scratch("errors");
  fs::create_directories(d);
  EXPECT_THROW(load_corpus((d / "missing.json").string()), ParseError);
  std::ofstream(d / "manifest.json") << "{\"entries\": [{\"name\": 3}]}";
  EXPECT_THROW(load_corpus((d / "manifest.json").string()), ParseError);
  std::ofstream(d / "manifest.json") << R"({"entries": [{"name": "x", "file": "x.grp", "primes": [2]}]})";
  const auto l = load_corpus((d / "manifest.json").string());
  ASSERT_EQ(l.size(), 1U);
  EXPECT_TRUE(l[0].error);
  EXPECT_FALSE(l[0].audit_ok());
  fs::remove_all(d);
}

TEST(ComputeQuantity, Keys) {
  const Subgroup g = Subgroup::whole(GroupTable::enumerate(
      4, std::vector<Permutation>{Permutation::from_cycles(4, "(1 2 3 4)"), Permutation::from_cycles(4, "(1 2)")}));
  EXPECT_EQ(compute_quantity(g, "order"), 24);
  EXPECT_EQ(compute_quantity(g, "center_order"), 1);
  EXPECT_EQ(compute_quantity(g, "derived_order"), 12);
  EXPECT_EQ(compute_quantity(g, "sylow_order@2"), 8);
  EXPECT_EQ(compute_quantity(g, "op_order@3"), 24);  // transpositions are 3'-elements
  EXPECT_EQ(compute_quantity(g, "op_order@2"), 12);
  EXPECT_EQ(compute_quantity(g, "hyperfocal_order@2"), 4);
  EXPECT_EQ(compute_quantity(g, "focal_order@3"), 3);
  EXPECT_EQ(compute_quantity(g, "p_nilpotent@2"), 0);
  EXPECT_EQ(compute_quantity(g, "subgroup_count@2"), 10);
  EXPECT_THROW(compute_quantity(g, "volume"), PreconditionViolated);
  EXPECT_THROW(compute_quantity(g, "sylow_order@x"), PreconditionViolated);
  EXPECT_THROW(compute_quantity(g, "sylow_order@4"), PNotPrime);
}

TEST(NameMatches, Globs) {
  EXPECT_TRUE(name_matches("agl-3-2", "agl*"));
  EXPECT_FALSE(name_matches("sl23", "agl*"));
  EXPECT_TRUE(name_matches("s4", "s?"));
  EXPECT_FALSE(name_matches("s4xc2", "s?"));
  EXPECT_TRUE(name_matches("d8", "[dq]8"));
  EXPECT_TRUE(name_matches("anything", "*"));
}
