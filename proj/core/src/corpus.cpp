#include "fusionkit/corpus.hpp"

#include <fnmatch.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "fusionkit/error.hpp"
#include "fusionkit/families.hpp"
#include "fusionkit/fusion.hpp"
#include "fusionkit/p_structure.hpp"

namespace fusionkit {
namespace {

using Json = nlohmann::ordered_json;

GroupSpec from_cycles(std::size_t degree, std::initializer_list<const char*> cycles) {
  GroupSpec spec{degree, {}};
  for (const char* c : cycles) spec.generators.push_back(Permutation::from_cycles(degree, c));
  return spec;
}

GroupSpec from_table(const GroupTable& t) {
  GroupSpec spec{t.degree(), {}};
  for (Elem g : t.generators()) spec.generators.push_back(t.permutation(g));
  return spec;
}

// Matrices over F_p (row-major) acting on the non-zero column vectors of
// F_p^dim; vector v is the point (sum v_i p^i) - 1.
GroupSpec matrix_group(unsigned p, unsigned dim, const std::vector<std::vector<unsigned>>& mats) {
  std::size_t q = 1;
  for (unsigned i = 0; i < dim; ++i) q *= p;
  GroupSpec spec{q - 1, {}};
  for (const auto& m : mats) {
    std::vector<Point> img(q - 1);
    for (std::size_t v = 1; v < q; ++v) {
      std::vector<unsigned> x(dim);
      for (unsigned i = 0, r = static_cast<unsigned>(v); i < dim; ++i, r /= p) x[i] = r % p;
      std::size_t w = 0, scale = 1;
      for (unsigned i = 0; i < dim; ++i, scale *= p) {
        unsigned s = 0;
        for (unsigned j = 0; j < dim; ++j) s += m[i * dim + j] * x[j];
        w += (s % p) * scale;
      }
      img[v - 1] = static_cast<Point>(w - 1);
    }
    spec.generators.emplace_back(std::move(img));
  }
  return spec;
}

// Expected values, computed once by tests/oracle/corpus_oracle.py and frozen.
// Orders are textbook values.
const std::map<std::string, std::vector<Expectation>>& frozen() {
  static const std::map<std::string, std::vector<Expectation>> table = {
#include "corpus_expected.inc"
  };
  return table;
}

CorpusEntry make(std::string name, GroupSpec spec, std::vector<unsigned> primes) {
  CorpusEntry e;
  e.file = name + ".grp";
  e.name = std::move(name);
  e.spec = std::move(spec);
  e.primes = std::move(primes);
  if (auto it = frozen().find(e.name); it != frozen().end()) e.expected = it->second;
  return e;
}

std::vector<std::string> cycle_lines(const GroupTable& t, std::initializer_list<Elem> elems) {
  std::vector<std::string> out;
  for (Elem x : elems) out.push_back(t.permutation(x).to_cycle_string());
  return out;
}

CorpusEntry agl_entry(unsigned p, unsigned n, std::vector<unsigned> primes) {
  const AglFamily f = build_agl_family(p, n);
  const GroupTable& t = *f.table;
  CorpusEntry e = make("agl-" + std::to_string(p) + "-" + std::to_string(n), from_table(t), std::move(primes));
  e.family = FamilyTag{"agl", p, n};
  e.subgroups.push_back({"H", cycle_lines(t, {f.translation, f.multiplication})});
  e.subgroups.push_back({"D_hat", cycle_lines(t, {f.multiplication, f.frobenius})});
  return e;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw PreconditionViolated("bad " + what + " \"" + s + "\"");
  return v;
}

}  // namespace

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> c;
  c.push_back(make("c2", from_cycles(2, {"(1 2)"}), {2}));
  c.push_back(make("c3xc3", from_cycles(6, {"(1 2 3)", "(4 5 6)"}), {3}));
  c.push_back(make("c2xc2xc2", from_cycles(6, {"(1 2)", "(3 4)", "(5 6)"}), {2}));
  c.push_back(make("c4xc2", from_cycles(6, {"(1 2 3 4)", "(5 6)"}), {2}));
  c.push_back(make("d8", from_cycles(4, {"(1 2 3 4)", "(1 3)"}), {2}));
  c.push_back(make("q8", from_cycles(8, {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"}), {2}));
  c.push_back(make("d16", from_cycles(8, {"(1 2 3 4 5 6 7 8)", "(2 8)(3 7)(4 6)"}), {2}));
  c.push_back(make("q16", from_table(*build_metacyclic(8, 2, 4, 7)), {2}));
  c.push_back(make("sd16", from_table(*build_metacyclic(8, 2, 0, 3)), {2}));
  c.push_back(make("s3", from_cycles(3, {"(1 2 3)", "(1 2)"}), {2, 3}));
  c.push_back(make("s4", from_cycles(4, {"(1 2 3 4)", "(1 2)"}), {2, 3}));
  c.push_back(make("a4", from_cycles(4, {"(1 2 3)", "(2 3 4)"}), {2, 3}));
  {
    CorpusEntry s5 = make("s5", from_cycles(5, {"(1 2 3 4 5)", "(1 2)"}), {2, 3, 5});
    s5.subgroups.push_back({"A5", {"(1 2 3 4 5)", "(1 2 3)"}});
    c.push_back(std::move(s5));
  }
  c.push_back(make("a5", from_cycles(5, {"(1 2 3 4 5)", "(1 2 3)"}), {2, 3, 5}));
  c.push_back(make("a6", from_cycles(6, {"(1 2 3)", "(2 3 4 5 6)"}), {2, 3, 5}));
  {
    const Sl23 sl = build_sl23();
    CorpusEntry e = make("sl23", from_table(*sl.table), {2, 3});
    e.family = FamilyTag{"sl23", 2, 0};
    e.subgroups.push_back({"Q8", cycle_lines(*sl.table, {sl.i, sl.j})});
    c.push_back(std::move(e));
  }
  {
    CorpusEntry e = make("gl23", matrix_group(3, 2, {{1, 1, 0, 1}, {1, 0, 1, 1}, {2, 0, 0, 1}}), {2, 3});
    const GroupSpec sl = matrix_group(3, 2, {{1, 1, 0, 1}, {1, 0, 1, 1}});
    e.subgroups.push_back({"SL", {sl.generators[0].to_cycle_string(), sl.generators[1].to_cycle_string()}});
    c.push_back(std::move(e));
  }
  c.push_back(make("psl27", matrix_group(2, 3, {{1, 1, 0, 0, 1, 0, 0, 0, 1}, {0, 0, 1, 1, 0, 0, 0, 1, 0}}),
                   {2, 3, 7}));
  c.push_back(make("c7c3", from_cycles(7, {"(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"}), {3, 7}));
  c.push_back(make("f20", from_table(*build_metacyclic(5, 4, 0, 2)), {2, 5}));
  c.push_back(make("s3xs3", from_cycles(6, {"(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)"}), {2, 3}));
  c.push_back(make("s3xc3", from_cycles(6, {"(1 2 3)", "(1 2)", "(4 5 6)"}), {2, 3}));
  c.push_back(make("s4xc2", from_cycles(6, {"(1 2 3 4)", "(1 2)", "(5 6)"}), {2, 3}));
  c.push_back(agl_entry(3, 2, {2, 3}));
  c.push_back(agl_entry(2, 3, {2, 3, 7}));
  c.push_back(agl_entry(5, 2, {2, 3, 5}));
  return c;
}

void write_corpus(const std::string& dir, const std::vector<CorpusEntry>& entries) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  Json list = Json::array();
  for (const auto& e : entries) {
    write_group_file((fs::path(dir) / e.file).string(), e.spec, e.name);
    Json j;
    j["name"] = e.name;
    j["file"] = e.file;
    j["primes"] = e.primes;
    if (e.family) j["family"] = Json{{"kind", e.family->kind}, {"p", e.family->p}, {"n", e.family->n}};
    Json subs = Json::array();
    for (const auto& s : e.subgroups) subs.push_back(Json{{"name", s.name}, {"generators", s.generators}});
    j["subgroups"] = subs;
    Json exp = Json::array();
    for (const auto& x : e.expected) exp.push_back(Json{{"key", x.key}, {"value", x.value}, {"source", x.source}});
    j["expected"] = exp;
    list.push_back(std::move(j));
  }
  Json manifest{{"format", "fusionkit-corpus"}, {"version", 1}, {"entries", list}};
  std::ofstream out(fs::path(dir) / "manifest.json");
  if (!out) throw PreconditionViolated("cannot write " + (fs::path(dir) / "manifest.json").string());
  out << manifest.dump(2) << '\n';
}

bool LoadedEntry::audit_ok() const {
  if (error || !closure_ok) return false;
  for (const auto& a : audit)
    if (!a.ok) return false;
  return true;
}

std::optional<Subgroup> LoadedEntry::subgroup(const std::string& name) const {
  for (const auto& s : entry.subgroups) {
    if (s.name != name) continue;
    std::vector<Elem> gens;
    for (const auto& line : s.generators) {
      const auto e = group.table().find(parse_generator(group.table().degree(), line));
      if (!e) throw PreconditionViolated("subgroup " + name + ": generator " + line + " not in the group");
      gens.push_back(*e);
    }
    return Subgroup::generated(group.parent(), gens);
  }
  return std::nullopt;
}

LoadedEntry load_entry(CorpusEntry entry) {
  LoadedEntry out;
  out.entry = std::move(entry);
  try {
    out.group = Subgroup::whole(GroupTable::enumerate(out.entry.spec.degree, out.entry.spec.generators));
    out.closure_ok = out.group.table().verify_closure();
    for (const auto& s : out.entry.subgroups) (void)out.subgroup(s.name);
  } catch (const Error& e) {
    out.error = e.what();
    return out;
  }
  for (const auto& x : out.entry.expected) {
    ExpectationCheck c{x, std::nullopt, false};
    try {
      c.actual = compute_quantity(out.group, x.key);
      c.ok = *c.actual == x.value;
    } catch (const Error&) {
    }
    out.audit.push_back(std::move(c));
  }
  return out;
}

std::vector<LoadedEntry> load_corpus(const std::string& manifest_path) {
  namespace fs = std::filesystem;
  std::ifstream in(manifest_path);
  if (!in) throw ParseError(0, "cannot open manifest " + manifest_path);
  Json m;
  try {
    m = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("manifest: ") + e.what());
  }
  const fs::path base = fs::path(manifest_path).parent_path();
  std::vector<LoadedEntry> out;
  try {
    for (const auto& j : m.at("entries")) {
      CorpusEntry e;
      e.name = j.at("name").get<std::string>();
      e.file = j.at("file").get<std::string>();
      e.primes = j.at("primes").get<std::vector<unsigned>>();
      if (j.contains("family")) {
        const auto& f = j["family"];
        e.family = FamilyTag{f.at("kind").get<std::string>(), f.at("p").get<unsigned>(), f.at("n").get<unsigned>()};
      }
      for (const auto& s : j.value("subgroups", Json::array()))
        e.subgroups.push_back({s.at("name").get<std::string>(), s.at("generators").get<std::vector<std::string>>()});
      for (const auto& x : j.value("expected", Json::array()))
        e.expected.push_back(
            {x.at("key").get<std::string>(), x.at("value").get<std::int64_t>(), x.value("source", std::string{})});
      std::optional<std::string> err;
      try {
        e.spec = read_group_file((base / e.file).string());
      } catch (const Error& ex) {
        err = e.file + ": " + ex.what();
      }
      if (err) {
        LoadedEntry bad;
        bad.entry = std::move(e);
        bad.error = std::move(err);
        out.push_back(std::move(bad));
      } else {
        out.push_back(load_entry(std::move(e)));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("manifest: ") + e.what());
  }
  return out;
}

std::int64_t compute_quantity(const Subgroup& group, const std::string& key) {
  const auto at = key.find('@');
  const std::string name = key.substr(0, at);
  if (at == std::string::npos) {
    if (name == "order") return static_cast<std::int64_t>(group.order());
    if (name == "center_order") return static_cast<std::int64_t>(center(group).order());
    if (name == "derived_order") return static_cast<std::int64_t>(derived_subgroup(group).order());
    throw PreconditionViolated("unknown quantity \"" + key + "\"");
  }
  const auto p = static_cast<unsigned>(parse_int(key.substr(at + 1), "prime in " + key));
  if (!is_prime(p)) throw PNotPrime(p);
  const Subgroup s = sylow(group, p);
  if (name == "sylow_order") return static_cast<std::int64_t>(s.order());
  if (name == "op_order") return static_cast<std::int64_t>(op_residual(group, p).order());
  if (name == "hyperfocal_order") return static_cast<std::int64_t>(hyperfocal_puig(group, s, p).order());
  if (name == "focal_order") return static_cast<std::int64_t>(focal_subgroup(group, s, p).order());
  if (name == "p_nilpotent") return is_p_nilpotent(group, p) ? 1 : 0;
  if (name == "subgroup_count") return static_cast<std::int64_t>(enumerate_subgroups(s, SubgroupFilter::All).size());
  throw PreconditionViolated("unknown quantity \"" + key + "\"");
}

bool name_matches(const std::string& name, const std::string& pattern) {
  return ::fnmatch(pattern.c_str(), name.c_str(), 0) == 0;
}

}  // namespace fusionkit
