// fusionkit command-line front end.
//
// exit codes: 0 ok, 1 implication violated / claim failed, 2 parse error,
// 3 cap exceeded, 4 invalid prime, 5 precondition violated or bad parameters

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/control.hpp"
#include "fusionkit/corpus.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/families.hpp"
#include "fusionkit/group_io.hpp"
#include "fusionkit/report_json.hpp"
#include "fusionkit/suite.hpp"

using namespace fusionkit;

namespace {

enum Exit { kOk = 0, kAlarm = 1, kParse = 2, kCap = 3, kPrime = 4, kPrecondition = 5 };

bool is_scalar_array(const Json& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

// Same facts as the JSON, one per line.
void print_text(std::ostream& out, const Json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    const std::string key = j.is_object() ? it.key() : "-";
    if (v.is_object()) {
      out << pad << key << ":\n";
      print_text(out, v, indent + 2);
    } else if (v.is_array() && !v.empty() && !is_scalar_array(v) && v.front().is_object()) {
      out << pad << key << ":\n";
      for (const auto& x : v) {
        out << pad << "  -\n";
        print_text(out, x, indent + 4);
      }
    } else if (v.is_string()) {
      out << pad << key << ": " << v.get<std::string>() << '\n';
    } else {
      out << pad << key << ": " << v.dump() << '\n';
    }
  }
}

void emit(const Json& j, const std::string& format) {
  if (format == "json")
    std::cout << j.dump(2) << '\n';
  else
    print_text(std::cout, j);
}

template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const PNotPrime& e) {
    std::cerr << "invalid prime: " << e.what() << '\n';
    return kPrime;
  } catch (const ClaimFailed& e) {
    std::cerr << e.what() << '\n';
    return kAlarm;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  }
}

std::size_t cap_or_default(std::size_t max_order) { return max_order ? max_order : default_group_cap(); }

Subgroup load_group(const std::string& path, std::size_t max_order) {
  const GroupSpec spec = read_group_file(path);
  return Subgroup::whole(GroupTable::enumerate(spec.degree, spec.generators, cap_or_default(max_order)));
}

void require_prime(unsigned p) {
  if (!is_prime(p)) throw PNotPrime(p);
}

// "--subgroup" values: element indices or generator lines.
Subgroup parse_subgroup(const Subgroup& g, const std::vector<std::string>& items) {
  std::vector<Elem> gens;
  for (const auto& s : items) {
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
      const unsigned long idx = std::stoul(s);
      if (idx >= g.order()) throw PreconditionViolated("element index " + s + " out of range");
      gens.push_back(static_cast<Elem>(idx));
      continue;
    }
    Permutation perm;
    try {
      perm = parse_generator(g.table().degree(), s);
    } catch (const Error& e) {
      throw PreconditionViolated("bad --subgroup generator \"" + s + "\": " + e.what());
    }
    const auto e = g.table().find(perm);
    if (!e) throw PreconditionViolated("--subgroup generator " + s + " is not in G");
    gens.push_back(*e);
  }
  return Subgroup::generated(g.parent(), gens);
}

struct AnalyzeArgs {
  std::string file;
  std::vector<unsigned> primes;
  std::string format = "text";
  std::size_t max_order = 0;
  bool certificate = false;
};

int cmd_analyze(const AnalyzeArgs& a) {
  for (unsigned p : a.primes) require_prime(p);
  const Subgroup g = load_group(a.file, a.max_order);
  const std::string name = std::filesystem::path(a.file).stem().string();
  emit(to_json(analyze(g, name, a.primes, a.certificate)), a.format);
  return kOk;
}

struct ControlArgs {
  std::string file;
  unsigned prime = 0;
  std::vector<std::string> subgroup;
  bool normalizer = false;
  bool inner = false;
  std::string theorem = "thm1";
  std::string filter;
  std::string format = "text";
  std::size_t max_order = 0;
  bool timings = false;
};

int cmd_check_control(const ControlArgs& a) {
  require_prime(a.prime);
  const Subgroup g = load_group(a.file, a.max_order);
  const Subgroup s = sylow(g, a.prime);
  if (s.is_trivial()) throw PreconditionViolated("p does not divide |G|");
  const int chosen = int(!a.subgroup.empty()) + int(a.normalizer) + int(a.inner);
  if (chosen > 1) throw PreconditionViolated("give at most one of --subgroup, --normalizer, --inner");
  if (!a.filter.empty() && a.theorem != "thm1") throw PreconditionViolated("--filter applies to thm1 only");

  Subgroup h = g;
  if (!a.subgroup.empty()) h = parse_subgroup(g, a.subgroup);
  if (a.normalizer) h = normalizer(g, s);
  if (a.inner) h = s;

  const auto t0 = std::chrono::steady_clock::now();
  ControlReport r;
  std::optional<SubgroupFilter> forced;
  if (a.theorem == "thm1") {
    if (!a.filter.empty()) forced = subgroup_filter_from_string(a.filter);
    r = thm1_validate(g, h, s, a.prime, forced);
  } else if (a.theorem == "thm1-local") {
    r = thm1_essential_local_validate(g, h, s, a.prime);
  } else if (a.theorem == "thm2") {
    if (!a.subgroup.empty()) throw PreconditionViolated("thm2 takes --normalizer or --inner, not --subgroup");
    r = thm2_validate(g, s, a.prime, a.inner ? Thm2Variant::Inner : Thm2Variant::Normalizer);
  } else if (a.theorem == "conj-aut") {
    r = conj_automizer_control(g, h, s, a.prime);
  } else {
    throw PreconditionViolated("unknown theorem " + a.theorem);
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  Json j = to_json(r, a.timings ? std::optional<double>(ms) : std::nullopt);
  if (forced) {
    j["diagnostic"] = true;
    j["filter"] = std::string(to_string(*forced));
  }
  emit(j, a.format);
  // a forced filter is outside the theorem, so no alarm
  return r.implication_ok || forced ? kOk : kAlarm;
}

struct FamilyArgs {
  unsigned p = 0;
  unsigned n = 0;
  bool validate = false;
  std::string emit_file;
  std::string format = "text";
};

void write_family(const std::string& path, const GroupTable& t, const std::string& comment) {
  GroupSpec spec{t.degree(), {}};
  for (Elem x : t.generators()) spec.generators.push_back(t.permutation(x));
  write_group_file(path, spec, comment);
}

int cmd_family_agl(const FamilyArgs& a) {
  const AglFamily f = [&] {
    try {
      return build_agl_family(a.p, a.n);
    } catch (const PNotPrime& e) {
      throw PreconditionViolated(e.what());
    } catch (const CapExceeded& e) {
      throw PreconditionViolated(e.what());
    }
  }();
  const std::string label = "agl-" + std::to_string(a.p) + "-" + std::to_string(a.n);
  if (!a.emit_file.empty()) write_family(a.emit_file, *f.table, label);
  if (!a.validate) {
    emit(Json{{"family", "agl"},
              {"p", a.p},
              {"n", a.n},
              {"orders", {{"G", f.g.order()}, {"H", f.h.order()}, {"S", f.s.order()}, {"D_hat", f.d_hat.order()}}}},
         a.format);
    return kOk;
  }
  const AglClaims c = verify_agl_claims(f);
  emit(to_json(c), a.format);
  c.throw_if_failed();
  return kOk;
}

int cmd_family_sl23(const FamilyArgs& a) {
  const Sl23 sl = build_sl23();
  if (!a.emit_file.empty()) write_family(a.emit_file, *sl.table, "sl23");
  if (!a.validate) {
    emit(Json{{"family", "sl23"}, {"orders", {{"G", sl.g.order()}, {"S", sl.s.order()}}}}, a.format);
    return kOk;
  }
  const QuillenDemo d = quillen_demo();
  Json j = to_json(d);
  j["orders"] = {{"G", sl.g.order()}, {"S", sl.s.order()}};
  emit(j, a.format);
  if (!d.reproduced()) throw ClaimFailed("quillen_obstruction");
  return kOk;
}

struct CorpusArgs {
  std::string manifest = "corpus/manifest.json";
  std::string filter = "*";
  unsigned jobs = 1;
  std::string format = "text";
  bool timings = false;
  std::string dir;
};

int cmd_corpus_run(const CorpusArgs& a) {
  const std::vector<LoadedEntry> corpus = load_corpus(a.manifest);
  SuiteOptions opt;
  opt.filter = a.filter;
  opt.jobs = a.jobs;
  const SuiteReport r = run_suite(corpus, opt);
  emit(to_json(r, a.timings), a.format);
  for (const auto& e : r.entries) {
    if (e.error) std::cerr << e.name << ": " << *e.error << '\n';
    for (const auto& c : e.checks)
      if (!c.ok) std::cerr << e.name << ": " << c.name << (c.prime ? "@" + std::to_string(c.prime) : "") << ": " << c.detail << '\n';
  }
  if (r.entries.empty()) std::cerr << "no corpus entry matches " << a.filter << '\n';
  return r.ok() ? kOk : kAlarm;
}

int cmd_corpus_emit(const CorpusArgs& a) {
  const auto entries = builtin_corpus();
  write_corpus(a.dir, entries);
  std::cout << "wrote " << entries.size() << " entries to " << a.dir << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusionkit: fusion systems, hyperfocal subgroups and control-of-fusion checks"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"text", "json"});
  int code = kOk;

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "p-local profile of a group file");
  analyze_cmd->add_option("group_file", an.file, "group file")->required();
  analyze_cmd->add_option("-p,--prime", an.primes, "prime (repeatable; default all prime divisors)");
  analyze_cmd->add_option("--format", an.format)->check(formats);
  analyze_cmd->add_option("--max-order", an.max_order, "enumeration cap");
  analyze_cmd->add_flag("--certificate", an.certificate, "include the Thompson subgroup D of S");
  analyze_cmd->callback([&] { code = guarded([&] { return cmd_analyze(an); }); });

  ControlArgs cc;
  auto* control_cmd = app.add_subcommand("check-control", "run one control-of-fusion checker");
  control_cmd->add_option("group_file", cc.file, "group file")->required();
  control_cmd->add_option("-p,--prime", cc.prime)->required();
  control_cmd->add_option("--subgroup", cc.subgroup, "generator of H: element index or permutation (repeatable)");
  control_cmd->add_flag("--normalizer", cc.normalizer, "H = N_G(S)");
  control_cmd->add_flag("--inner", cc.inner, "H = S");
  control_cmd->add_option("--theorem", cc.theorem)->check(CLI::IsMember({"thm1", "thm1-local", "thm2", "conj-aut"}));
  control_cmd->add_option("--filter", cc.filter, "diagnostic: force the thm1 subgroup filter")
      ->check(CLI::IsMember({"all", "elementary_abelian", "abelian_exponent_le_4", "cyclic_p_or_4", "maximal_abelian"}));
  control_cmd->add_option("--format", cc.format)->check(formats);
  control_cmd->add_option("--max-order", cc.max_order, "enumeration cap");
  control_cmd->add_flag("--timings", cc.timings, "add elapsed_ms");
  control_cmd->callback([&] { code = guarded([&] { return cmd_check_control(cc); }); });

  FamilyArgs fa;
  auto* family_cmd = app.add_subcommand("family", "build an example family");
  family_cmd->require_subcommand(1);
  auto* agl_cmd = family_cmd->add_subcommand("agl", "AΓL(1,p^n)");
  agl_cmd->add_option("--p", fa.p)->required();
  agl_cmd->add_option("--n", fa.n)->required();
  auto* sl_cmd = family_cmd->add_subcommand("sl23", "SL(2,3) with S = Q8");
  for (auto* c : {agl_cmd, sl_cmd}) {
    c->add_flag("--validate", fa.validate, "check the family's claims");
    c->add_option("--emit-group-file", fa.emit_file, "write the generators to this file");
    c->add_option("--format", fa.format)->check(formats);
  }
  agl_cmd->callback([&] { code = guarded([&] { return cmd_family_agl(fa); }); });
  sl_cmd->callback([&] { code = guarded([&] { return cmd_family_sl23(fa); }); });

  CorpusArgs ca;
  auto* corpus_cmd = app.add_subcommand("corpus", "corpus suite");
  corpus_cmd->require_subcommand(1);
  auto* run_cmd = corpus_cmd->add_subcommand("run", "run every check on the corpus");
  run_cmd->add_option("--manifest", ca.manifest, "manifest.json")->capture_default_str();
  run_cmd->add_option("--filter", ca.filter, "entry name glob")->capture_default_str();
  run_cmd->add_option("-j,--jobs", ca.jobs)->check(CLI::PositiveNumber);
  run_cmd->add_option("--format", ca.format)->check(formats);
  run_cmd->add_flag("--timings", ca.timings, "add per-check elapsed_ms");
  run_cmd->callback([&] { code = guarded([&] { return cmd_corpus_run(ca); }); });
  auto* emit_cmd = corpus_cmd->add_subcommand("emit", "write the built-in corpus");
  emit_cmd->add_option("--dir", ca.dir)->required();
  emit_cmd->callback([&] { code = guarded([&] { return cmd_corpus_emit(ca); }); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kPrecondition;
  }
  return code;
}
