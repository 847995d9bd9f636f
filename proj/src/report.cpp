#include "terracini/report.hpp"

#include <fstream>
#include <iostream>

namespace terracini {

namespace {

Json points_json(const std::vector<IntPoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(p);
  return a;
}

Json vector_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

}  // namespace

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const BigInt& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return z.convert_to<std::int64_t>();
  return z.str();
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_json(RatVector(m.row(i).begin(), m.row(i).end())));
  return rows;
}

Json to_json(const ParamVariety& x) {
  Json j = {{"id", x.id},
            {"kind", to_string(x.kind)},
            {"n", x.n},
            {"N", x.N},
            {"num_params", x.num_params},
            {"num_coords", x.num_coords},
            {"chart", x.chart}};
  if (x.secant) j["secant"] = {{"base", x.secant->base_id}, {"r", x.secant->r}, {"base_n", x.secant->base_n}};
  return j;
}

Json to_json(const RankReport& r) {
  Json per = Json::array();
  for (const auto& p : r.per_prime) per.push_back({{"prime", p.prime}, {"trial_ranks", p.trial_ranks}, {"best", p.best}});
  return {{"variety", r.variety},
          {"n", r.n},
          {"N", r.N},
          {"h", r.h},
          {"seed", r.seed},
          {"trials", r.trials},
          {"per_prime", per},
          {"primes_agree", r.primes_agree},
          {"points", points_json(r.points)},
          {"cone_rank", r.cone_rank},
          {"secant_dim", r.secant_dim},
          {"expected_dim", r.expected_dim},
          {"verdict", to_string(r.verdict)}};
}

Json to_json(const FiberReport& r) {
  return {{"variety", r.variety},       {"h", r.h},
          {"delta", r.delta},           {"fiber_dim", r.fiber_dim},
          {"image_dim", r.image_dim},   {"span_rank", r.span_rank},
          {"dim_sec_next", r.dim_sec_next}, {"fiber_from_count", r.fiber_from_count},
          {"consistent", r.consistent}, {"primes_agree", r.primes_agree}};
}

Json to_json(const LdiffReport& r) {
  return {{"variety", r.variety},
          {"h", r.h},
          {"n", r.n},
          {"rows", r.rows},
          {"cols", r.cols},
          {"rank", r.rank},
          {"kernel_dim", r.kernel_dim},
          {"generic_rank", r.generic_rank},
          {"generic_kernel_dim", r.generic_kernel_dim},
          {"matches_statement", r.matches_statement},
          {"residual_part_assumed_empty", r.residual_part_assumed_empty},
          {"primes_agree", r.primes_agree},
          {"precondition", to_json(r.precondition)}};
}

Json to_json(const ConeReport& r) {
  return {{"variety", r.variety},
          {"is_cone", r.is_cone},
          {"confidence", r.is_cone ? "probable" : "certified"},
          {"vertex_dim", r.vertex_dim},
          {"trials", r.trials},
          {"trials_satisfied", r.trials_satisfied},
          {"chart", r.chart}};
}

Json to_json(const GaussReport& r) {
  return {{"variety", r.variety},
          {"n", r.n},
          {"gauss_rank", r.gauss_rank},
          {"kernel_dim", r.kernel_dim},
          {"degenerate", r.degenerate},
          {"confidence", r.degenerate ? "probable" : "certified"},
          {"per_prime", r.per_prime},
          {"primes_agree", r.primes_agree}};
}

Json to_json(const ContactReport& r) {
  return {{"variety", r.variety},
          {"h", r.h},
          {"n", r.n},
          {"span_rank", r.span_rank},
          {"gamma_hat", r.gamma_hat},
          {"gamma_hat_alt", r.gamma_hat_alt},
          {"projector_independent", r.projector_independent},
          {"constraint_vanishes", r.constraint_vanishes},
          {"per_prime", r.per_prime},
          {"primes_agree", r.primes_agree},
          {"base_points", points_json(r.base_points)},
          {"verdict", to_string(r.verdict)}};
}

Json to_json(const BoundResult& b) {
  Json parts = Json::array();
  for (const auto& p : b.parts) parts.push_back(to_json(p));
  return {{"family", b.family},
          {"params", b.params},
          {"source", b.source},
          {"applicable", b.applicable},
          {"value", to_json(b.value)},
          {"strict", b.strict},
          {"floor_value", to_json(b.floor_value)},
          {"max_h", b.max_h},
          {"empty", b.empty},
          {"excluded_h", b.excluded_h},
          {"notes", b.notes},
          {"parts", parts}};
}

Json to_json(const PlaneWitness& w) {
  Json inter = Json::array();
  for (const auto& v : w.intersections) inter.push_back(vector_json(v));
  Json inputs = Json::array();
  for (const auto& m : w.inputs) inputs.push_back(to_json(m));
  return {{"ambient", w.ambient},
          {"p", vector_json(w.p)},
          {"inputs", inputs},
          {"plane", to_json(w.plane)},
          {"intersections", inter},
          {"p_in_plane", w.p_in_plane},
          {"meets_each_once", w.meets_each_once},
          {"verified", w.verified()}};
}

Json to_json(const SecnoidReport& s) {
  Json ws = Json::array();
  for (const auto& w : s.witnesses) ws.push_back(to_json(w));
  return {{"base", s.base},
          {"r", s.r},
          {"h", s.h},
          {"parameters", s.parameters},
          {"p", vector_json(s.p)},
          {"partitions", s.partitions},
          {"witnesses", ws},
          {"count", s.witnesses.size()},
          {"expected_count", s.expected_count},
          {"count_is_lower_bound", true},
          {"all_verified", s.all_verified},
          {"all_distinct", s.all_distinct}};
}

Json to_json(const ProjectionReport& p) {
  return {{"N", p.N},
          {"t", p.t},
          {"centre_params", vector_json(p.centre_params)},
          {"centre_rank", p.centre_rank},
          {"span_dim", p.span_dim},
          {"base_degree", p.base_degree},
          {"map_degree", p.map_degree},
          {"fiber_size", p.fiber_size},
          {"birational", p.birational},
          {"image_degree", p.image_degree},
          {"rational_normal", p.rational_normal}};
}

Json to_json(const CounterexampleDossier& d) {
  return {{"N", d.N},
          {"r", d.r},
          {"h", d.h},
          {"nondefective", to_json(d.nondefective)},
          {"projection", to_json(d.projection)},
          {"projected_fills", to_json(d.projected_fills)},
          {"sec_r_dim", d.sec_r_dim},
          {"dimension_identity", d.dimension_identity},
          {"decompositions", to_json(d.decompositions)},
          {"failures", d.failures},
          {"verdict", d.verified ? "counterexample-verified" : "not-verified"}};
}

Json to_json(const Certificate& c) {
  Json facts = Json::array();
  for (const auto& f : c.facts)
    facts.push_back({{"variety", f.variety}, {"h", f.h}, {"identifiable", f.identifiable}, {"statement", f.statement}});
  Json hyp = {{"inequality",
               {{"lhs", c.inequality.lhs}, {"N", c.inequality.N}, {"holds", c.inequality.holds}}}};
  if (c.nondefective) {
    const bool ok = c.nondefective->verdict != Verdict::defective_probable;
    hyp["nondefective"] = {{"holds", ok},
                           {"confidence", ok ? "certified" : "probable"},
                           {"report", to_json(*c.nondefective)}};
  }
  if (c.gauss)
    hyp["gauss"] = {{"holds", !c.gauss->degenerate},
                    {"confidence", c.gauss->degenerate ? "probable" : "certified"},
                    {"report", to_json(*c.gauss)}};
  Json j = {{"variety", c.variety},
            {"n", c.n},
            {"N", c.N},
            {"h", c.h},
            {"hypotheses", hyp},
            {"conclusion", to_string(c.conclusion)},
            {"reasons", c.reasons},
            {"notes", c.notes},
            {"known_facts", facts}};
  if (c.contact) j["contact"] = to_json(*c.contact);
  if (c.witnesses) j["witnesses"] = to_json(*c.witnesses);
  return j;
}

Json polytope_report(const LatticePolytope& p) {
  Json pts = Json::array();
  for (const auto& q : p.points) pts.push_back(q);
  Json j = {{"points", pts}, {"dim", p.dim}, {"rank", p.rank}, {"lattice_points", p.size()}};
  if (p.rank == p.dim && p.rank >= 1) {
    const auto m = mprime_rank(p);
    j["b_size"] = m.b_size;
    j["rho"] = m.rho;
    j["quotient_rank"] = m.quotient_rank;
    const auto tb = toric_bound(p);
    j["max_hyperplane"] = tb.max_hyperplane;
    j["toric_bound"] = to_json(bound_toric(p));
  }
  return j;
}

Json envelope(const std::string& command, const Json& arguments, const SampleOptions& opt, const Json& result) {
  return {{"schema_version", kSchemaVersion},
          {"tool", "terracini"},
          {"version", kVersion},
          {"command", command},
          {"arguments", arguments},
          {"seed", opt.seed},
          {"trials", opt.trials},
          {"primes", opt.primes},
          {"result", result}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string ResultCache::key(const std::string& command, const Json& arguments, const SampleOptions& opt) {
  Json k = {{"command", command}, {"arguments", arguments}, {"seed", opt.seed}, {"trials", opt.trials},
            {"primes", opt.primes}, {"version", kVersion}};
  return k.dump();
}

std::optional<Json> ResultCache::lookup(const std::string& key) const {
  std::ifstream in(path_);
  if (!in) return std::nullopt;
  std::optional<Json> hit;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Json rec = Json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object() || !rec.contains("key") || !rec.contains("report") ||
        !rec["key"].is_string()) {
      std::cerr << "warning: cache " << path_ << " is corrupt at line " << lineno << "; ignoring the cache\n";
      return std::nullopt;
    }
    if (!hit && rec["key"] == key) hit = rec["report"];
  }
  return hit;
}

void ResultCache::store(const std::string& key, const Json& report) const {
  std::ofstream out(path_, std::ios::app);
  if (!out) {
    std::cerr << "warning: cannot write cache " << path_ << "\n";
    return;
  }
  out << Json{{"key", key}, {"report", report}}.dump() << "\n";
}

}  // namespace terracini
