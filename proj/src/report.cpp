#include "f2sumset/report.hpp"

namespace f2sumset {

namespace {

Json bits_array(std::span<const Bits> xs, int n) {
  Json a = Json::array();
  for (Bits x : xs) a.push_back(to_binary(x, n));
  return a;
}

}  // namespace

Json to_json(const DoublingReport& r) {
  return Json{{"sumset_size", r.sumset_size}, {"dbl", r.dbl}};
}

Json to_json(const EnergyReport& r) {
  return Json{{"count", r.count}, {"omega", r.omega}, {"method", to_string(r.method)}};
}

Json to_json(const FlatnessVerdict& v, int n) {
  Json j{{"flat", v.flat}, {"delta", v.delta}};
  j["witness"] = v.witness ? Json(to_binary(v.witness->bits(), n)) : Json(nullptr);
  return j;
}

Json to_json(const SplitDiagnostics& d, int n) {
  return Json{{"xi", to_binary(d.xi.bits(), n)},
              {"j", d.j},
              {"alpha", d.alpha},
              {"beta", d.beta},
              {"psi", d.psi},
              {"swapped", d.swapped},
              {"half_sizes", d.half_sizes},
              {"a_majority_is_dot_zero", d.a_majority_is_dot_zero},
              {"b_majority_is_dot_zero", d.b_majority_is_dot_zero},
              {"kept_minority_half", d.kept_minority_half},
              {"bound", d.bound},
              {"sharper_bound", d.sharper_bound},
              {"sharper_bound_held", d.sharper_bound_held},
              {"a_in", d.a_in},
              {"b_in", d.b_in},
              {"a_out", d.a_out},
              {"b_out", d.b_out},
              {"measured_dbl", d.measured_dbl}};
}

Json to_json(const BucketAudit& a) {
  Json flagged = Json::array();
  for (bool f : a.flagged) flagged.push_back(f);
  return Json{{"k", a.k},
              {"bucket_constant", a.bucket_constant},
              {"occupancy", a.occupancy},
              {"limits", a.limits},
              {"flagged", flagged},
              {"out_of_range", a.out_of_range},
              {"ok", a.ok}};
}

Json to_json(const FlatteningTrace& t, int n) {
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(to_json(s, n));
  return Json{{"k", t.k},
              {"step_coefficient", t.step_coefficient},
              {"m", t.m},
              {"k_sequence", t.k_sequence},
              {"initial_dbl", t.initial_dbl},
              {"final_dbl", t.final_dbl},
              {"bucket_counts", t.bucket_counts},
              {"steps", steps}};
}

Json to_json(const Lemma1Verdict& v, int n) {
  return Json{{"size_ok", v.size_ok},
              {"product_ok", v.product_ok},
              {"translates", bits_array(v.translates, n)},
              {"densities", v.densities},
              {"size_floor", v.size_floor},
              {"product_mean", v.product_mean},
              {"product_floor", v.product_floor}};
}

Json to_json(const Subspace& h) {
  return Json{{"n", h.ambient_dimension()},
              {"dim", h.dim()},
              {"size", h.size()},
              {"basis", bits_array(h.basis(), h.ambient_dimension())}};
}

Json to_json(const StructureResult& r) {
  const int n = r.h.ambient_dimension();
  return Json{{"status", to_string(r.status)},
              {"h", to_json(r.h)},
              {"x", to_binary(r.x, n)},
              {"y", to_binary(r.y, n)},
              {"density_a", r.density_a},
              {"density_b", r.density_b},
              {"geo_mean", r.geo_mean},
              {"threshold", r.threshold},
              {"lemma_geo_mean", r.lemma_geo_mean},
              {"size_bound_ok", r.size_bound_ok},
              {"product_ok", r.product_ok},
              {"density_bound_ok", r.density_bound_ok},
              {"k_used", r.k_used},
              {"j_used", r.j_used},
              {"input_dbl", r.input_dbl},
              {"energy_omega", r.energy_omega},
              {"size_ratio", r.size_ratio},
              {"flat_a_size", r.flat_a_size},
              {"flat_b_size", r.flat_b_size},
              {"used_fallback", r.used_fallback},
              {"lemma1", to_json(r.lemma1, n)},
              {"bucket_audit", to_json(r.audit)},
              {"trace", to_json(r.trace, n)}};
}

Json to_json(const OracleCheckReport& r) {
  Json ops = Json::array();
  for (const auto& o : r.operations) {
    ops.push_back(Json{{"operation", o.operation}, {"trials", o.trials},
                       {"mismatches", o.mismatches}});
  }
  return Json{{"seed", r.seed}, {"ok", r.ok()}, {"operations", ops}};
}

Json to_json(const CampaignRow& r) {
  return Json{{"seed", r.seed},
              {"kind", r.kind},
              {"k", r.k},
              {"trial", r.trial},
              {"n", r.n},
              {"k_measured", r.k_measured},
              {"size_a", r.size_a},
              {"size_b", r.size_b},
              {"m", r.m},
              {"j", r.j},
              {"h_dim", r.h_dim},
              {"h_size", r.h_size},
              {"size_ratio", r.size_ratio},
              {"geo_mean", r.geo_mean},
              {"threshold", r.threshold},
              {"energy_gate_ok", r.energy_gate_ok},
              {"size_bound_ok", r.size_bound_ok},
              {"product_ok", r.product_ok},
              {"density_bound_ok", r.density_bound_ok},
              {"bucket_ok", r.bucket_ok},
              {"translate_check", r.translate_check},
              {"used_fallback", r.used_fallback},
              {"planted", r.planted},
              {"status", r.status},
              {"error", r.error}};
}

Json to_json(const CampaignCell& c) {
  return Json{{"kind", c.kind},       {"k", c.k},           {"trials", c.trials},
              {"errors", c.errors},   {"verified", c.verified}, {"unverified", c.unverified},
              {"mean_m", c.mean_m},   {"max_m", c.max_m},   {"c_fit", c.c_fit},
              {"buckets_ok", c.buckets_ok}};
}

}  // namespace f2sumset
