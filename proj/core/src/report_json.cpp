#include "fusionkit/report_json.hpp"

#include "fusionkit/error.hpp"
#include "fusionkit/fusion.hpp"

namespace fusionkit {
namespace {

Json pairs_json(const std::vector<Elem>& from, const std::vector<Elem>& to) {
  Json out = Json::array();
  for (std::size_t i = 0; i < from.size() && i < to.size(); ++i) out.push_back(Json::array({from[i], to[i]}));
  return out;
}

Json elems(const std::vector<Elem>& v) { return Json(v); }

Json witness_json(const HypothesisWitness& w) {
  Json j{{"reason", w.reason}, {"a", members_json(w.a)}, {"b", members_json(w.b)}};
  if (!w.images.empty()) j["map"] = pairs_json(w.a.elements(), w.images);
  if (w.reason == "automizer") {
    j["aut_g_order"] = w.aut_g_order;
    j["aut_h_order"] = w.aut_h_order;
  }
  return j;
}

Json certificate_json(const CertificateSummary& c) {
  Json rows = Json::array();
  for (const auto& r : c.maximal_abelians)
    rows.push_back(Json{{"a", r.a},
                        {"normal_in_p", r.normal_in_p},
                        {"centralizer_is_p_group", r.centralizer_is_p_group},
                        {"centralizer_order", r.centralizer_order}});
  return Json{{"p", c.p},
              {"d", c.d},
              {"commutator", c.commutator},
              {"checks",
               {{"g_invariant", c.g_invariant},
                {"exponent_ok", c.exponent_ok},
                {"class_condition", c.class_condition},
                {"faithful", c.faithful}}},
              {"maximal_abelians", rows},
              {"candidates_examined", c.candidates_examined}};
}

CertificateSummary certificate_from_json(const Json& j) {
  CertificateSummary c;
  c.p = j.at("p").get<std::vector<Elem>>();
  c.d = j.at("d").get<std::vector<Elem>>();
  c.commutator = j.at("commutator").get<std::vector<Elem>>();
  const Json& k = j.at("checks");
  c.g_invariant = k.at("g_invariant").get<bool>();
  c.exponent_ok = k.at("exponent_ok").get<bool>();
  c.class_condition = k.at("class_condition").get<bool>();
  c.faithful = k.at("faithful").get<bool>();
  for (const auto& r : j.at("maximal_abelians"))
    c.maximal_abelians.push_back({r.at("a").get<std::vector<Elem>>(), r.at("normal_in_p").get<bool>(),
                                  r.at("centralizer_is_p_group").get<bool>(),
                                  r.at("centralizer_order").get<std::size_t>()});
  c.candidates_examined = j.at("candidates_examined").get<std::size_t>();
  return c;
}

}  // namespace

Json members_json(const Subgroup& h) { return elems(h.elements()); }

Json to_json(const PLocalProfile& pr) {
  return Json{{"prime", pr.prime},
              {"sylow", {{"order", pr.sylow.order()}, {"members", members_json(pr.sylow)}}},
              {"op_residual", {{"order", pr.op_residual.order()}}},
              {"hyperfocal", {{"order", pr.hyperfocal.order()}, {"members", members_json(pr.hyperfocal)}}},
              {"focal", {{"order", pr.focal.order()}, {"members", members_json(pr.focal)}}},
              {"p_nilpotent", pr.p_nilpotent}};
}

Json to_json(const ControlReport& r, std::optional<double> elapsed_ms) {
  Json j;
  j["theorem_id"] = std::string(to_string(r.theorem));
  j["prime"] = r.prime;
  j["group_orders"] = {{"G", r.order_g}, {"H", r.order_h}, {"S", r.order_s}, {"hyperfocal", r.order_hyperfocal}};
  Json hyp{{"holds", r.hypothesis.holds}};
  if (r.hypothesis.witness) hyp["witness"] = witness_json(*r.hypothesis.witness);
  j["hypothesis"] = hyp;
  Json concl{{"holds", r.conclusion.equal}};
  if (r.conclusion.witness)
    concl["witness"] = {{"subgroup", members_json(r.conclusion.witness->q)},
                        {"map", pairs_json(r.conclusion.witness->q.elements(), r.conclusion.witness->images)}};
  j["conclusion"] = concl;
  j["implication_ok"] = r.implication_ok;
  j["in_scope"] = r.in_scope;
  if (r.cross_check) j["cross_check"] = *r.cross_check;
  if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
  return j;
}

Json to_json(const CriticalCertificate& cert) {
  Json rows = Json::array();
  for (const auto& r : cert.maximal_abelians)
    rows.push_back(Json{{"a", members_json(r.a)},
                        {"normal_in_p", r.normal_in_p},
                        {"centralizer_is_p_group", r.centralizer_is_p_group},
                        {"centralizer_order", r.centralizer_order}});
  return Json{{"d", members_json(cert.d)},
              {"commutator", members_json(cert.commutator)},
              {"checks",
               {{"g_invariant", cert.checks.g_invariant},
                {"exponent_ok", cert.checks.exponent_ok},
                {"class_condition", cert.checks.class_condition},
                {"faithful", cert.checks.faithful}}},
              {"maximal_abelians", rows},
              {"candidates_examined", cert.candidates_examined}};
}

Json to_json(const AglClaims& c) {
  Json claims = Json::array();
  for (const auto& x : c.claims)
    claims.push_back(Json{{"name", x.name}, {"expected", x.expected}, {"actual", x.actual}, {"ok", x.ok}});
  return Json{{"family", "agl"},
              {"p", c.p},
              {"n", c.n},
              {"orders", {{"G", c.order_g}, {"H", c.order_h}, {"S", c.order_s}, {"D_hat", c.order_d_hat}}},
              {"v_count", c.v_count},
              {"hom_h_min", c.hom_h_min},
              {"hom_h_max", c.hom_h_max},
              {"hyperfocal_order", c.order_hyperfocal},
              {"cyclic_control", c.cyclic_control},
              {"full_control", c.full_control},
              {"claims", claims},
              {"ok", c.all_ok()}};
}

Json to_json(const QuillenDemo& d) {
  Json j{{"family", "sl23"},
         {"elementary_abelian_hypothesis", d.elementary_abelian_hypothesis},
         {"exponent4_hypothesis", d.exponent4_hypothesis},
         {"fusion_equal", d.fusion_equal}};
  if (d.witness) j["witness"] = witness_json(*d.witness);
  j["witness_is_i_to_j"] = d.witness_is_i_to_j;
  j["ok"] = d.reproduced();
  return j;
}

Json to_json(const SuiteReport& report, bool timings) {
  Json entries = Json::array();
  std::size_t checks = 0;
  std::size_t failed_checks = 0;
  for (const auto& e : report.entries) {
    Json je{{"name", e.name}, {"order", e.order}, {"primes", e.primes}, {"ok", e.ok()}};
    if (e.error) je["error"] = *e.error;
    Json cs = Json::array();
    for (const auto& c : e.checks) {
      ++checks;
      failed_checks += !c.ok;
      Json jc{{"name", c.name}, {"prime", c.prime}, {"ok", c.ok}, {"instances", c.instances}, {"detail", c.detail}};
      if (timings) jc["elapsed_ms"] = c.elapsed_ms;
      cs.push_back(std::move(jc));
    }
    je["checks"] = cs;
    entries.push_back(std::move(je));
  }
  return Json{{"summary",
               {{"entries", report.entries.size()},
                {"passed", report.passed()},
                {"failed", report.failed()},
                {"checks", checks},
                {"failed_checks", failed_checks},
                {"ok", report.ok()}}},
              {"entries", entries}};
}

AnalysisReport analyze(const Subgroup& g, const std::string& name, const std::vector<unsigned>& primes,
                       bool with_certificate) {
  AnalysisReport r;
  r.name = name;
  r.order = g.order();
  r.degree = g.table().degree();
  const std::vector<unsigned> ps = primes.empty() ? prime_divisors(g.order()) : primes;
  for (unsigned p : ps) {
    const PLocalProfile pr = p_local_profile(g, p);
    PrimeAnalysis a;
    a.prime = p;
    a.sylow = pr.sylow.elements();
    a.op_residual_order = pr.op_residual.order();
    a.hyperfocal = pr.hyperfocal.elements();
    a.focal = pr.focal.elements();
    a.p_nilpotent = pr.p_nilpotent;
    if (!pr.sylow.is_trivial()) {
      for (const auto& q : essential_class_representatives(g, pr.sylow)) a.essential_classes.push_back(q.elements());
      if (with_certificate) {
        const AutSetup setup = automizer_setup(g, pr.sylow, p);
        const CriticalCertificate cert = find_thompson_d(setup);
        CertificateSummary c;
        c.p = pr.sylow.elements();
        c.d = to_ambient(setup, g.parent(), cert.d).elements();
        c.commutator = to_ambient(setup, g.parent(), cert.commutator).elements();
        c.g_invariant = cert.checks.g_invariant;
        c.exponent_ok = cert.checks.exponent_ok;
        c.class_condition = cert.checks.class_condition;
        c.faithful = cert.checks.faithful;
        for (const auto& row : cert.maximal_abelians)
          c.maximal_abelians.push_back({to_ambient(setup, g.parent(), row.a).elements(), row.normal_in_p,
                                        row.centralizer_is_p_group, row.centralizer_order});
        c.candidates_examined = cert.candidates_examined;
        a.certificate = std::move(c);
      }
    }
    r.primes.push_back(std::move(a));
  }
  return r;
}

Json to_json(const AnalysisReport& r) {
  Json primes = Json::array();
  for (const auto& a : r.primes) {
    Json j{{"prime", a.prime},
           {"sylow", {{"order", a.sylow.size()}, {"members", a.sylow}}},
           {"op_residual", {{"order", a.op_residual_order}}},
           {"hyperfocal", {{"order", a.hyperfocal.size()}, {"members", a.hyperfocal}}},
           {"focal", {{"order", a.focal.size()}, {"members", a.focal}}},
           {"p_nilpotent", a.p_nilpotent},
           {"essential_classes", a.essential_classes}};
    if (a.certificate) j["certificate"] = certificate_json(*a.certificate);
    primes.push_back(std::move(j));
  }
  return Json{{"group", {{"name", r.name}, {"order", r.order}, {"degree", r.degree}}}, {"primes", primes}};
}

AnalysisReport analysis_from_json(const Json& j) {
  try {
    AnalysisReport r;
    const Json& g = j.at("group");
    r.name = g.at("name").get<std::string>();
    r.order = g.at("order").get<std::size_t>();
    r.degree = g.at("degree").get<std::size_t>();
    for (const auto& pj : j.at("primes")) {
      PrimeAnalysis a;
      a.prime = pj.at("prime").get<unsigned>();
      a.sylow = pj.at("sylow").at("members").get<std::vector<Elem>>();
      a.op_residual_order = pj.at("op_residual").at("order").get<std::size_t>();
      a.hyperfocal = pj.at("hyperfocal").at("members").get<std::vector<Elem>>();
      a.focal = pj.at("focal").at("members").get<std::vector<Elem>>();
      a.p_nilpotent = pj.at("p_nilpotent").get<bool>();
      a.essential_classes = pj.at("essential_classes").get<std::vector<std::vector<Elem>>>();
      if (pj.contains("certificate")) a.certificate = certificate_from_json(pj["certificate"]);
      r.primes.push_back(std::move(a));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("analysis report: ") + e.what());
  }
}

}  // namespace fusionkit
