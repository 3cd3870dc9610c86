#include "f2sumset/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "f2sumset/fourier.hpp"
#include "f2sumset/report.hpp"
#include "f2sumset/setstats.hpp"

namespace f2sumset {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9E3779B97F4A7C15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::subspace: return "subspace";
    case GeneratorKind::coset_union: return "coset_union";
    case GeneratorKind::perturbed_subspace: return "perturbed_subspace";
    case GeneratorKind::random_dense: return "random_dense";
  }
  return "unknown";
}

GeneratorKind parse_generator_kind(std::string_view s) {
  for (auto k : {GeneratorKind::subspace, GeneratorKind::coset_union,
                 GeneratorKind::perturbed_subspace, GeneratorKind::random_dense}) {
    if (s == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown generator kind: " + std::string(s));
}

bool is_planted(GeneratorKind k) { return k != GeneratorKind::random_dense; }

// ---------------------------------------------------------------------------
// Generators

Subspace random_subspace(Rng& rng, int n, int dim) {
  if (dim < 0 || dim > n) throw InfeasibleSpec("subspace dimension outside [0, n]");
  std::vector<Bits> gens;
  Subspace s(n);
  while (s.dim() < dim) {
    gens.push_back(static_cast<Bits>(rng.below(space_size(n))));
    s = span(gens, n);
  }
  return s;
}

namespace {

std::vector<Bits> pick_cosets(Rng& rng, const Subspace& h, int count, bool exclude_zero) {
  const int n = h.ambient_dimension();
  const std::size_t quotient = space_size(n - h.dim());
  const std::size_t available = quotient - (exclude_zero ? 1 : 0);
  if (count < 0 || static_cast<std::size_t>(count) > available) {
    throw InfeasibleSpec("requested " + std::to_string(count) + " cosets but only " +
                         std::to_string(available) + " exist");
  }
  std::set<Bits> chosen;
  while (chosen.size() < static_cast<std::size_t>(count)) {
    const Bits r = h.reduce(static_cast<Bits>(rng.below(space_size(n))));
    if (exclude_zero && r == 0) continue;
    chosen.insert(r);
  }
  return {chosen.begin(), chosen.end()};
}

PointSet coset_union(const Subspace& h, std::span<const Bits> reps) {
  const auto elems = h.elements();
  std::vector<Bits> out;
  out.reserve(elems.size() * reps.size());
  for (Bits r : reps) {
    for (Bits e : elems) out.push_back(r ^ e);
  }
  return PointSet::from_elements(h.ambient_dimension(), out);
}

// k distinct entries of v, partial Fisher-Yates.
std::vector<Bits> sample(Rng& rng, std::vector<Bits> v, std::size_t k) {
  k = std::min(k, v.size());
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(v.size() - i));
    std::swap(v[i], v[j]);
  }
  v.resize(k);
  return v;
}

PointSet perturbed(Rng& rng, const Subspace& h, std::span<const Bits> targets,
                   const GeneratorSpec& spec) {
  const auto elems = h.elements();
  if (spec.remove >= elems.size()) throw InfeasibleSpec("cannot remove all of H0");
  const auto extra = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::llround(spec.add_fraction * static_cast<double>(elems.size()))),
      1, elems.size());
  std::vector<Bits> out;
  for (Bits t : targets) {
    for (Bits e : sample(rng, elems, extra)) out.push_back(t ^ e);
  }
  const auto removed = sample(rng, elems, spec.remove);
  const std::set<Bits> gone(removed.begin(), removed.end());
  for (Bits e : elems) {
    if (!gone.count(e)) out.push_back(e);
  }
  return PointSet::from_elements(h.ambient_dimension(), out);
}

PointSet random_dense(Rng& rng, int n, double density) {
  std::vector<std::uint64_t> words((space_size(n) + 63) / 64, 0);
  for (std::size_t x = 0; x < space_size(n); ++x) {
    if (rng.unit() < density) words[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
  PointSet s = PointSet::from_words(n, std::move(words));
  if (s.empty()) throw InfeasibleSpec("random_dense produced an empty set");
  return s;
}

}  // namespace

GeneratedInstance generate(const GeneratorSpec& spec) {
  check_dimension(spec.n);
  Rng rng(spec.seed);
  const int n = spec.n;
  switch (spec.kind) {
    case GeneratorKind::subspace: {
      Subspace h = random_subspace(rng, n, spec.dim);
      PointSet a = h.to_point_set();
      GeneratedInstance g{a, std::nullopt, h, {0}, {}};
      if (spec.paired) {
        g.b = a;
        g.reps_b = {0};
      }
      return g;
    }
    case GeneratorKind::coset_union: {
      if (spec.cosets < 1) throw InfeasibleSpec("coset_union needs at least one coset");
      Subspace h = random_subspace(rng, n, spec.dim);
      auto reps_a = pick_cosets(rng, h, spec.cosets, false);
      GeneratedInstance g{coset_union(h, reps_a), std::nullopt, h, reps_a, {}};
      if (spec.paired) {
        g.reps_b = pick_cosets(rng, h, spec.cosets, false);
        g.b = coset_union(h, g.reps_b);
      }
      return g;
    }
    case GeneratorKind::perturbed_subspace: {
      Subspace h = random_subspace(rng, n, spec.dim);
      auto targets = pick_cosets(rng, h, spec.spread, true);
      GeneratedInstance g{perturbed(rng, h, targets, spec), std::nullopt, h, targets, {}};
      if (spec.paired) {
        g.b = perturbed(rng, h, targets, spec);
        g.reps_b = targets;
      }
      return g;
    }
    case GeneratorKind::random_dense: {
      if (!(spec.density > 0.0 && spec.density <= 1.0)) {
        throw InfeasibleSpec("density must lie in (0, 1]");
      }
      GeneratedInstance g{random_dense(rng, n, spec.density), std::nullopt, std::nullopt, {}, {}};
      if (spec.paired) g.b = random_dense(rng, n, spec.density);
      return g;
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Oracles

namespace {

void oracle_guard(int n, int limit, const char* what) {
  if (n > limit) {
    throw CostGuardExceeded(std::string(what) + ": oracle limited to n <= " +
                            std::to_string(limit));
  }
}

std::map<Bits, std::uint64_t> pair_sums(const PointSet& a, const PointSet& b) {
  std::map<Bits, std::uint64_t> r;
  const auto ea = a.elements();
  const auto eb = b.elements();
  for (Bits x : ea) {
    for (Bits y : eb) ++r[x ^ y];
  }
  return r;
}

}  // namespace

PointSet oracle_sumset(const PointSet& a, const PointSet& b) {
  oracle_guard(a.dimension(), kOracleMaxDimension, "sumset");
  std::set<Bits> s;
  for (Bits x : a.elements()) {
    for (Bits y : b.elements()) s.insert(x ^ y);
  }
  const std::vector<Bits> v(s.begin(), s.end());
  return PointSet::from_elements(a.dimension(), v);
}

std::uint64_t oracle_energy(const PointSet& a1, const PointSet& a2, const PointSet& a3,
                            const PointSet& a4) {
  oracle_guard(a1.dimension(), kOracleMaxDimension, "energy");
  const auto r12 = pair_sums(a1, a2);
  const auto r34 = pair_sums(a3, a4);
  std::uint64_t count = 0;
  for (const auto& [s, c] : r12) {
    const auto it = r34.find(s);
    if (it != r34.end()) count += c * it->second;
  }
  return count;
}

DensestCoset oracle_translate(const PointSet& a, const Subspace& h) {
  const int n = a.dimension();
  oracle_guard(n, kTranslateOracleMaxDimension, "translate");
  const auto elems = h.elements();
  std::vector<bool> seen(space_size(n), false);
  DensestCoset best;
  for (std::size_t x = 0; x < space_size(n); ++x) {
    if (seen[x]) continue;
    std::size_t count = 0;
    for (Bits e : elems) {
      const Bits y = static_cast<Bits>(x) ^ e;
      seen[y] = true;
      count += a.contains(y);
    }
    if (count > best.density) best = {static_cast<Bits>(x), count};
  }
  return best;
}

bool OracleCheckReport::ok() const {
  return std::all_of(operations.begin(), operations.end(),
                     [](const OracleCheckCounts& o) { return o.mismatches == 0; });
}

namespace {

PointSet random_set(Rng& rng, int n, std::size_t max_size) {
  const std::size_t target = 1 + static_cast<std::size_t>(rng.below(max_size));
  std::vector<Bits> v;
  for (std::size_t i = 0; i < target; ++i) v.push_back(static_cast<Bits>(rng.below(space_size(n))));
  return PointSet::from_elements(n, v);
}

int random_n(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace

OracleCheckReport run_oracle_check(std::size_t trials, std::uint64_t seed) {
  OracleCheckReport report;
  report.seed = seed;
  Rng rng(seed);

  OracleCheckCounts wht_c{"wht", trials, 0};
  for (std::size_t t = 0; t < trials; ++t) {
    const int n = random_n(rng, 1, 10);
    std::vector<double> f(space_size(n));
    for (double& v : f) v = rng.unit() * 2.0 - 1.0;
    const auto fast = wht(f);
    const auto slow = wht_naive(f);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (std::abs(fast.values[i] - slow.values[i]) > 1e-12) {
        ++wht_c.mismatches;
        break;
      }
    }
  }
  report.operations.push_back(wht_c);

  OracleCheckCounts spec_c{"spectrum", trials, 0};
  for (std::size_t t = 0; t < trials; ++t) {
    const int n = random_n(rng, 1, 10);
    const PointSet a = random_set(rng, n, space_size(n));
    const double alpha = 0.05 + 0.95 * rng.unit();
    std::vector<double> f(space_size(n), 0.0);
    a.for_each([&](Bits x) { f[x] = 1.0; });
    const auto slow = wht_naive(f);
    std::vector<Bits> expect;
    const double floor = alpha * static_cast<double>(a.size()) / static_cast<double>(f.size());
    for (std::size_t xi = 0; xi < f.size(); ++xi) {
      if (std::abs(slow.values[xi]) >= floor * (1.0 - kSpectrumRelTol)) {
        expect.push_back(static_cast<Bits>(xi));
      }
    }
    if (!(spectrum(a, alpha) == PointSet::from_elements(n, expect))) ++spec_c.mismatches;
  }
  report.operations.push_back(spec_c);

  OracleCheckCounts sum_c{"sumset", trials, 0};
  for (std::size_t t = 0; t < trials; ++t) {
    const int n = random_n(rng, 1, 10);
    const PointSet a = random_set(rng, n, 64);
    const PointSet b = random_set(rng, n, 64);
    if (!(sumset(a, b) == oracle_sumset(a, b))) ++sum_c.mismatches;
  }
  report.operations.push_back(sum_c);

  OracleCheckCounts en_c{"energy", trials, 0};
  for (std::size_t t = 0; t < trials; ++t) {
    const int n = random_n(rng, 1, 8);
    const PointSet a1 = random_set(rng, n, 40);
    const PointSet a2 = random_set(rng, n, 40);
    const PointSet a3 = random_set(rng, n, 40);
    const PointSet a4 = random_set(rng, n, 40);
    const auto ref = oracle_energy(a1, a2, a3, a4);
    if (energy_direct(a1, a2, a3, a4).count != ref ||
        energy_fourier(a1, a2, a3, a4).count != ref) {
      ++en_c.mismatches;
    }
  }
  report.operations.push_back(en_c);

  OracleCheckCounts tr_c{"translate", trials, 0};
  for (std::size_t t = 0; t < trials; ++t) {
    const int n = random_n(rng, 1, 10);
    const PointSet a = random_set(rng, n, space_size(n));
    const Subspace h = random_subspace(rng, n, random_n(rng, 0, n));
    const DensestCoset fast = densest_coset(a, h);
    const DensestCoset slow = oracle_translate(a, h);
    if (fast.representative != slow.representative || fast.density != slow.density) {
      ++tr_c.mismatches;
    }
  }
  report.operations.push_back(tr_c);
  return report;
}

// ---------------------------------------------------------------------------
// Campaigns

namespace {

int ceil_log2(int c) { return c <= 1 ? 0 : std::bit_width(static_cast<unsigned>(c - 1)); }

// Largest s with 1 + s + s(s-1)/2 <= K: A + B then meets at most that many
// cosets of H0, so Dbl(A, B) <= K.
int spread_for(double k) {
  int s = 0;
  while (1.0 + (s + 1) + (s + 1) * s / 2.0 <= k) ++s;
  return s;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

CampaignConfig parse_campaign_config(std::string_view text) {
  const Json j = Json::parse(text);
  CampaignConfig c;
  if (j.contains("k_ladder")) c.k_ladder = j.at("k_ladder").get<std::vector<double>>();
  if (j.contains("kinds")) {
    c.kinds.clear();
    for (const auto& k : j.at("kinds")) c.kinds.push_back(parse_generator_kind(k.get<std::string>()));
  }
  if (j.contains("n_min")) c.n_min = j.at("n_min").get<int>();
  if (j.contains("n_max")) c.n_max = j.at("n_max").get<int>();
  if (j.contains("trials_per_cell")) c.trials_per_cell = j.at("trials_per_cell").get<int>();
  if (j.contains("seed_base")) c.seed_base = j.at("seed_base").get<std::uint64_t>();
  if (j.contains("translate_oracle_max_n"))
    c.translate_oracle_max_n = j.at("translate_oracle_max_n").get<int>();
  if (j.contains("step_coefficient")) c.step_coefficient = j.at("step_coefficient").get<double>();
  if (j.contains("bucket_constant")) c.bucket_constant = j.at("bucket_constant").get<double>();
  if (j.contains("dim")) c.dim = j.at("dim").get<int>();
  if (j.contains("cosets")) c.cosets = j.at("cosets").get<int>();
  if (j.contains("spread")) c.spread = j.at("spread").get<int>();
  if (j.contains("add_fraction")) c.add_fraction = j.at("add_fraction").get<double>();
  if (j.contains("density")) c.density = j.at("density").get<double>();

  if (c.k_ladder.empty() || c.kinds.empty()) throw std::invalid_argument("empty campaign");
  for (double k : c.k_ladder) {
    if (!(k >= 1.0)) throw std::invalid_argument("K-ladder entries must be >= 1");
  }
  if (c.n_min < 1 || c.n_max < c.n_min) throw std::invalid_argument("bad n range");
  check_dimension(c.n_max);
  if (c.trials_per_cell < 1) throw std::invalid_argument("trials_per_cell must be >= 1");
  return c;
}

std::string campaign_config_to_json(const CampaignConfig& c) {
  Json kinds = Json::array();
  for (auto k : c.kinds) kinds.push_back(to_string(k));
  Json j{{"k_ladder", c.k_ladder},
         {"kinds", kinds},
         {"n_min", c.n_min},
         {"n_max", c.n_max},
         {"trials_per_cell", c.trials_per_cell},
         {"seed_base", c.seed_base},
         {"translate_oracle_max_n", c.translate_oracle_max_n},
         {"step_coefficient", c.step_coefficient},
         {"bucket_constant", c.bucket_constant}};
  if (c.dim) j["dim"] = *c.dim;
  if (c.cosets) j["cosets"] = *c.cosets;
  if (c.spread) j["spread"] = *c.spread;
  if (c.add_fraction) j["add_fraction"] = *c.add_fraction;
  if (c.density) j["density"] = *c.density;
  return j.dump();
}

GeneratorSpec campaign_spec(const CampaignConfig& c, GeneratorKind kind, double k, int n,
                            std::uint64_t seed) {
  GeneratorSpec s;
  s.kind = kind;
  s.n = n;
  s.seed = seed;
  s.paired = true;
  switch (kind) {
    case GeneratorKind::subspace:
      s.dim = c.dim.value_or(n / 2);
      break;
    case GeneratorKind::coset_union: {
      // |A + B| <= c^2 |H0| and |A| = |B| = c |H0|, so Dbl <= c <= K.
      s.cosets = c.cosets.value_or(std::max(1, static_cast<int>(std::floor(k))));
      const int room = n - ceil_log2(s.cosets);
      s.dim = c.dim.value_or(std::clamp(room - 2, 1, std::max(1, room)));
      break;
    }
    case GeneratorKind::perturbed_subspace: {
      s.spread = c.spread.value_or(spread_for(k));
      s.add_fraction = c.add_fraction.value_or(0.125);
      const int room = n - ceil_log2(s.spread + 1);
      s.dim = c.dim.value_or(std::clamp(room - 3, 1, std::max(1, room)));
      break;
    }
    case GeneratorKind::random_dense:
      s.density = c.density.value_or(0.5);
      break;
  }
  return s;
}

CampaignRow run_trial(const CampaignConfig& c, GeneratorKind kind, double k, int trial) {
  const auto kind_index = static_cast<std::uint64_t>(
      std::find(c.kinds.begin(), c.kinds.end(), kind) - c.kinds.begin());
  const auto k_index = static_cast<std::uint64_t>(
      std::find(c.k_ladder.begin(), c.k_ladder.end(), k) - c.k_ladder.begin());
  CampaignRow row;
  row.seed = mix_seed(mix_seed(c.seed_base, kind_index),
                      mix_seed(k_index, static_cast<std::uint64_t>(trial)));
  row.kind = to_string(kind);
  row.k = k;
  row.trial = trial;
  row.n = c.n_min + trial % (c.n_max - c.n_min + 1);
  row.planted = is_planted(kind);

  const auto start = std::chrono::steady_clock::now();
  try {
    const GeneratedInstance inst = generate(campaign_spec(c, kind, k, row.n, row.seed));
    const PointSet& a = inst.a;
    const PointSet& b = *inst.b;
    row.size_a = a.size();
    row.size_b = b.size();
    row.k_measured = doubling(a, b).dbl;

    PipelineOptions opts;
    opts.flattening.step_coefficient = c.step_coefficient;
    opts.flattening.bucket_constant = c.bucket_constant;
    const StructureResult r = theorem4_pipeline(a, b, k, opts);
    row.m = r.trace.m;
    row.j = r.j_used;
    row.h_dim = r.h.dim();
    row.h_size = r.h.size();
    row.size_ratio = r.size_ratio;
    row.geo_mean = r.geo_mean;
    row.threshold = r.threshold;
    row.energy_gate_ok = true;
    row.size_bound_ok = r.size_bound_ok;
    row.product_ok = r.product_ok;
    row.density_bound_ok = r.density_bound_ok;
    row.bucket_ok = r.audit.ok;
    row.used_fallback = r.used_fallback;
    row.status = to_string(r.status);
    if (row.n <= std::min(c.translate_oracle_max_n, kTranslateOracleMaxDimension)) {
      const DensestCoset oa = oracle_translate(a, r.h);
      const DensestCoset ob = oracle_translate(b, r.h);
      const bool match = oa.representative == r.x && oa.density == r.density_a &&
                         ob.representative == r.y && ob.density == r.density_b;
      row.translate_check = match ? "match" : "mismatch";
    }
  } catch (const std::exception& e) {
    row.status = "ERROR";
    row.error = e.what();
  }
  row.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

CampaignReport run_campaign(const CampaignConfig& config) {
  CampaignReport rep;
  rep.config = config;
  for (GeneratorKind kind : config.kinds) {
    for (double k : config.k_ladder) {
      CampaignCell cell;
      cell.kind = to_string(kind);
      cell.k = k;
      double sum_m = 0.0;
      for (int t = 0; t < config.trials_per_cell; ++t) {
        CampaignRow row = run_trial(config, kind, k, t);
        ++cell.trials;
        if (row.status == "ERROR") {
          ++cell.errors;
        } else {
          if (row.status == "VERIFIED") ++cell.verified; else ++cell.unverified;
          sum_m += static_cast<double>(row.m);
          cell.max_m = std::max(cell.max_m, row.m);
          cell.buckets_ok = cell.buckets_ok && row.bucket_ok;
        }
        rep.rows.push_back(std::move(row));
      }
      const std::size_t ok_rows = cell.trials - cell.errors;
      cell.mean_m = ok_rows ? sum_m / static_cast<double>(ok_rows) : 0.0;
      cell.c_fit = static_cast<double>(cell.max_m) / std::sqrt(k);
      rep.cells.push_back(cell);
    }
  }

  // Fits over successful rows.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& row : rep.rows) {
    if (row.status == "ERROR") continue;
    rep.fitted_c = std::max(rep.fitted_c, static_cast<double>(row.m) / std::sqrt(row.k));
    if (row.size_ratio <= 0.0) continue;
    const double x = std::sqrt(row.k);
    const double y = std::log(row.size_ratio);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++rep.size_fit_points;
  }
  if (rep.size_fit_points > 0) {
    const double cnt = static_cast<double>(rep.size_fit_points);
    const double var = sxx - sx * sx / cnt;
    const double slope = var > 1e-12 ? (sxy - sx * sy / cnt) / var : 0.0;
    const double intercept = (sy - slope * sx) / cnt;
    rep.size_fit_c = std::exp(intercept);
    rep.size_fit_exponent = -slope;
  }
  return rep;
}

std::string campaign_csv(const CampaignReport& r) {
  std::string out =
      "seed,kind,k,trial,n,k_measured,size_a,size_b,m,j,h_dim,h_size,size_ratio,geo_mean,"
      "threshold,energy_gate_ok,size_bound_ok,product_ok,density_bound_ok,bucket_ok,"
      "translate_check,used_fallback,planted,status,error\n";
  const auto b = [](bool v) { return v ? std::string("true") : std::string("false"); };
  for (const auto& row : r.rows) {
    out += std::to_string(row.seed) + "," + row.kind + "," + format_double(row.k) + "," +
           std::to_string(row.trial) + "," + std::to_string(row.n) + "," +
           format_double(row.k_measured) + "," + std::to_string(row.size_a) + "," +
           std::to_string(row.size_b) + "," + std::to_string(row.m) + "," +
           format_double(row.j) + "," + std::to_string(row.h_dim) + "," +
           std::to_string(row.h_size) + "," + format_double(row.size_ratio) + "," +
           format_double(row.geo_mean) + "," + format_double(row.threshold) + "," +
           b(row.energy_gate_ok) + "," + b(row.size_bound_ok) + "," + b(row.product_ok) + "," +
           b(row.density_bound_ok) + "," + b(row.bucket_ok) + "," + row.translate_check + "," +
           b(row.used_fallback) + "," + b(row.planted) + "," + row.status + "," +
           csv_field(row.error) + "\n";
  }
  return out;
}

std::string campaign_json(const CampaignReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(to_json(row));
  Json cells = Json::array();
  for (const auto& c : r.cells) cells.push_back(to_json(c));
  Json j{{"format", "f2sumset-campaign/1"},
         {"rng_algorithm", std::string(Rng::kAlgorithm)},
         {"config", Json::parse(campaign_config_to_json(r.config))},
         {"fitted_c", r.fitted_c},
         {"size_fit", Json{{"c", r.size_fit_c},
                           {"exponent", r.size_fit_exponent},
                           {"points", r.size_fit_points}}},
         {"cells", cells},
         {"rows", rows}};
  return j.dump(2) + "\n";
}

std::string campaign_timings_csv(const CampaignReport& r) {
  std::string out = "seed,kind,k,trial,n,runtime_ms\n";
  for (const auto& row : r.rows) {
    out += std::to_string(row.seed) + "," + row.kind + "," + format_double(row.k) + "," +
           std::to_string(row.trial) + "," + std::to_string(row.n) + "," +
           format_double(row.runtime_ms) + "\n";
  }
  return out;
}

}  // namespace f2sumset
