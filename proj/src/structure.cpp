#include "f2sumset/structure.hpp"

#include <algorithm>
#include <cmath>

#include "f2sumset/fourier.hpp"
#include "f2sumset/setstats.hpp"

namespace f2sumset {

namespace {

std::size_t density_at(const PointSet& a, const Subspace& h, Bits x) {
  std::size_t c = 0;
  const Bits rep = h.reduce(x);
  a.for_each([&](Bits y) { c += h.reduce(y) == rep; });
  return c;
}

// (#flags true, |H|, basis) ordering; basis compared so that the
// lexicographically smallest one wins ties.
bool better_candidate(const Lemma1Verdict& v, const Subspace& h, const Lemma1Verdict& best_v,
                      const Subspace& best_h) {
  const int score = int{v.size_ok} + int{v.product_ok};
  const int best = int{best_v.size_ok} + int{best_v.product_ok};
  if (score != best) return score > best;
  if (h.dim() != best_h.dim()) return h.dim() > best_h.dim();
  return std::lexicographical_compare(h.basis().begin(), h.basis().end(),
                                      best_h.basis().begin(), best_h.basis().end());
}

}  // namespace

std::string to_string(PipelineStatus s) {
  return s == PipelineStatus::verified ? "VERIFIED" : "CONSTRUCTION_UNVERIFIED";
}

DensestCoset densest_coset(const PointSet& a, const Subspace& h) {
  DensestCoset best;
  for (const auto& [rep, count] : coset_decompose(a, h)) {
    if (count > best.density) best = {rep, count};
  }
  return best;
}

Subspace extract_subspace(const PointSet& a, const PointSet& b, double j) {
  if (!(j >= 1.0)) throw PreconditionViolation("extract_subspace: J must be >= 1");
  const double delta = flatness_delta(j);
  if (!check_flatness(a, b, delta).flat) {
    throw PreconditionViolation("extract_subspace: (A', B', A', B') is not coherently flat");
  }
  const PointSet s = set_union(spectrum(a, delta), spectrum(b, delta));
  const auto freqs = s.elements();
  return annihilator(span(freqs, a.dimension()));
}

Lemma1Verdict verify_lemma1(const PointSet& a1, const PointSet& a2, const PointSet& a3,
                            const PointSet& a4, const Subspace& h, double j) {
  const std::array<const PointSet*, 4> sets = {&a1, &a2, &a3, &a4};
  Lemma1Verdict v;
  long double prod_sizes = 1.0L;
  long double prod_dens = 1.0L;
  for (std::size_t i = 0; i < 4; ++i) {
    const DensestCoset c = densest_coset(*sets[i], h);
    v.translates[i] = c.representative;
    v.densities[i] = c.density;
    prod_sizes *= static_cast<long double>(sets[i]->size());
    prod_dens *= static_cast<long double>(c.density);
  }
  const auto hsize = static_cast<double>(h.size());
  v.size_floor = kLemma1SizeFactor * static_cast<double>(std::pow(prod_sizes, 0.25L));
  v.size_ok = hsize >= v.size_floor - kStructureAbsTol;
  v.product_mean = static_cast<double>(std::pow(prod_dens, 0.25L));
  v.product_floor = hsize / (2.0 * j);
  v.product_ok = v.product_mean >= v.product_floor - kStructureAbsTol;
  return v;
}

StructureResult theorem4_pipeline(const PointSet& a, const PointSet& b, double k,
                                  const PipelineOptions& options) {
  if (a.dimension() != b.dimension()) throw DimensionError("dimension mismatch");
  if (a.empty() || b.empty()) throw PreconditionViolation("theorem4: empty set");
  if (!(k >= 1.0)) throw PreconditionViolation("theorem4: K must be >= 1");
  const int n = a.dimension();

  StructureResult r;
  r.k_used = k;
  r.input_dbl = doubling(a, b).dbl;
  if (r.input_dbl > k * (1.0 + kContractRelTol)) {
    throw PreconditionViolation("theorem4: Dbl(A,B) = " + std::to_string(r.input_dbl) +
                                " exceeds K = " + std::to_string(k));
  }
  // |A| <= |A+B| <= K (|A||B|)^{1/2} gives K^-2 |A| <= |B|, and symmetrically.
  const double sa = static_cast<double>(a.size());
  const double sb = static_cast<double>(b.size());
  if (sa > k * k * sb * (1.0 + kContractRelTol) || sb > k * k * sa * (1.0 + kContractRelTol)) {
    throw std::logic_error("theorem4: K^-2 |A| <= |B| failed despite Dbl <= K");
  }

  FlatteningResult flat = run_flattening(a, b, k, options.flattening);
  r.j_used = flat.j;
  r.flat_a_size = flat.a.size();
  r.flat_b_size = flat.b.size();

  const EnergyReport energy = energy_fourier(flat.a, flat.b, flat.a, flat.b);
  r.energy_omega = energy.omega;
  if (energy.omega < 1.0 / flat.j - kStructureAbsTol) {
    throw ContractViolation("theorem4: energy gate failed, omega = " +
                            std::to_string(energy.omega) + " < 1/J = " +
                            std::to_string(1.0 / flat.j));
  }

  Subspace h = extract_subspace(flat.a, flat.b, flat.j);
  Lemma1Verdict lemma = verify_lemma1(flat.a, flat.b, flat.a, flat.b, h, flat.j);

  if (!lemma.ok() && n <= options.fallback_max_n) {
    const double delta = flatness_delta(flat.j);
    const PointSet s = set_union(spectrum(flat.a, delta), spectrum(flat.b, delta));
    const auto freqs = s.elements();
    const Subspace full_span = span(freqs, n);
    if (full_span.dim() <= options.fallback_dim_guard) {
      const auto gens = full_span.basis();
      const std::size_t subsets = std::size_t{1} << gens.size();
      for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<Bits> t;
        for (std::size_t i = 0; i < gens.size(); ++i) {
          if ((mask >> i) & 1u) t.push_back(gens[i]);
        }
        Subspace cand = annihilator(span(t, n));
        Lemma1Verdict cv = verify_lemma1(flat.a, flat.b, flat.a, flat.b, cand, flat.j);
        if (better_candidate(cv, cand, lemma, h)) {
          h = std::move(cand);
          lemma = cv;
          r.used_fallback = true;
        }
      }
    }
  }

  r.h = h;
  r.lemma1 = lemma;
  r.size_bound_ok = lemma.size_ok;
  r.product_ok = lemma.product_ok;

  // Of the two A-translates (and the two B-translates) keep the one denser
  // in the original set, then re-maximise over every coset.
  const auto pick = [&](const PointSet& s, Bits u, Bits v) {
    const std::size_t du = density_at(s, h, u);
    const std::size_t dv = density_at(s, h, v);
    return dv > du ? dv : du;
  };
  const std::size_t lemma_da = pick(a, lemma.translates[0], lemma.translates[2]);
  const std::size_t lemma_db = pick(b, lemma.translates[1], lemma.translates[3]);
  r.lemma_geo_mean =
      std::sqrt(static_cast<double>(lemma_da) * static_cast<double>(lemma_db));

  const DensestCoset ca = densest_coset(a, h);
  const DensestCoset cb = densest_coset(b, h);
  r.x = ca.representative;
  r.y = cb.representative;
  r.density_a = ca.density;
  r.density_b = cb.density;
  r.geo_mean = std::sqrt(static_cast<double>(ca.density) * static_cast<double>(cb.density));
  if (r.geo_mean < r.lemma_geo_mean) {
    throw std::logic_error("theorem4: global coset search returned a worse translate");
  }
  const auto hsize = static_cast<double>(h.size());
  r.threshold = hsize / (2.0 * k);
  r.density_bound_ok = r.geo_mean >= r.threshold - kStructureAbsTol;
  r.size_ratio = hsize / sa;
  r.status = (r.size_bound_ok && r.product_ok && r.density_bound_ok)
                 ? PipelineStatus::verified
                 : PipelineStatus::construction_unverified;
  r.audit = bucket_audit(flat.trace, k, options.flattening.bucket_constant);
  r.trace = std::move(flat.trace);
  return r;
}

}  // namespace f2sumset
