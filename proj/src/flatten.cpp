#include "f2sumset/flatten.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "f2sumset/fourier.hpp"
#include "f2sumset/setstats.hpp"

namespace f2sumset {

namespace {

void require_sets(std::initializer_list<const PointSet*> sets) {
  const int n = (*sets.begin())->dimension();
  for (const PointSet* s : sets) {
    if (s->dimension() != n) throw DimensionError("dimension mismatch");
    if (s->empty()) throw PreconditionViolation("empty set");
  }
}

void require_delta(double delta) {
  if (!(delta > 0.0 && delta <= kMaxFlatnessDelta)) {
    throw std::invalid_argument("flatness delta must lie in (0, 1/sqrt(2)]");
  }
}

struct Coefficients {
  const std::vector<std::int32_t>* w;
  std::size_t card;
};

FlatnessVerdict scan_flatness(std::span<const Coefficients> sets, int n, double delta) {
  FlatnessVerdict v;
  v.delta = delta;
  const std::size_t len = space_size(n);
  for (std::size_t xi = 1; xi < len; ++xi) {
    bool any_mid = false;   // in Spec_delta of some set
    bool all_high = true;   // in Spec_{9/10} of every set
    for (const auto& c : sets) {
      const std::int64_t mag = std::abs(static_cast<std::int64_t>((*c.w)[xi]));
      any_mid = any_mid || meets_fraction(mag, c.card, delta);
      all_high = all_high && meets_fraction(mag, c.card, kHighSpectrumLevel);
    }
    if (any_mid && !all_high) {
      v.flat = false;
      v.witness = GroupElement(static_cast<Bits>(xi), n);
      return v;
    }
  }
  return v;
}

std::string describe(const SplitDiagnostics& d) {
  std::ostringstream os;
  os.precision(17);
  os << "xi=" << d.xi.bits() << " J=" << d.j << " alpha=" << d.alpha << " beta=" << d.beta
     << " swapped=" << d.swapped << " halves=[" << d.half_sizes[0] << "," << d.half_sizes[1]
     << "," << d.half_sizes[2] << "," << d.half_sizes[3] << "] psi=" << d.psi
     << " bound=" << d.bound << " |A|=" << d.a_in << " |B|=" << d.b_in
     << " |A'|=" << d.a_out << " |B'|=" << d.b_out;
  return os.str();
}

}  // namespace

FlatnessVerdict check_flatness(const PointSet& a1, const PointSet& a2, const PointSet& a3,
                               const PointSet& a4, double delta) {
  require_sets({&a1, &a2, &a3, &a4});
  require_delta(delta);
  const auto w1 = walsh_coefficients(a1);
  const auto w2 = walsh_coefficients(a2);
  const auto w3 = walsh_coefficients(a3);
  const auto w4 = walsh_coefficients(a4);
  const std::array<Coefficients, 4> c = {Coefficients{&w1, a1.size()}, {&w2, a2.size()},
                                         {&w3, a3.size()}, {&w4, a4.size()}};
  return scan_flatness(c, a1.dimension(), delta);
}

FlatnessVerdict check_flatness(const PointSet& a, const PointSet& b, double delta) {
  require_sets({&a, &b});
  require_delta(delta);
  const auto wa = walsh_coefficients(a);
  const auto wb = walsh_coefficients(b);
  const std::array<Coefficients, 2> c = {Coefficients{&wa, a.size()}, {&wb, b.size()}};
  return scan_flatness(c, a.dimension(), delta);
}

SplitResult split_step(const PointSet& a, const PointSet& b, double j, GroupElement xi,
                       double step_coefficient) {
  require_sets({&a, &b});
  if (!(j >= 1.0)) throw PreconditionViolation("split_step: J must be >= 1");
  if (xi.dimension() != a.dimension()) throw DimensionError("witness dimension mismatch");

  SplitDiagnostics d;
  d.xi = xi;
  d.j = j;
  d.a_in = a.size();
  d.b_in = b.size();
  d.bound = next_k(j, step_coefficient);
  d.sharper_bound = j / (1.0 + 1.0 / (20.0 * std::sqrt(2.0 * j)));

  const Bits f = xi.bits();
  const auto on_zero = [f](Bits x) { return parity(x & f) == 0; };
  const auto on_one = [f](Bits x) { return parity(x & f) == 1; };
  PointSet a0 = a.filter(on_zero);
  PointSet a1 = a.filter(on_one);
  PointSet b0 = b.filter(on_zero);
  PointSet b1 = b.filter(on_one);

  // Majority half first; a tie keeps the dot = 0 half.
  d.a_majority_is_dot_zero = a0.size() >= a1.size();
  d.b_majority_is_dot_zero = b0.size() >= b1.size();
  if (!d.a_majority_is_dot_zero) std::swap(a0, a1);
  if (!d.b_majority_is_dot_zero) std::swap(b0, b1);
  d.half_sizes = {a0.size(), a1.size(), b0.size(), b1.size()};

  const double frac_a = static_cast<double>(a0.size()) / static_cast<double>(a.size());
  const double frac_b = static_cast<double>(b0.size()) / static_cast<double>(b.size());

  // Witness conditions in terms of the bias |W| = |maj| - |min|.
  const auto bias_a = static_cast<std::int64_t>(a0.size() - a1.size());
  const auto bias_b = static_cast<std::int64_t>(b0.size() - b1.size());
  const double delta = flatness_delta(j);
  const bool off_high = !meets_fraction(bias_a, a.size(), kHighSpectrumLevel) ||
                        !meets_fraction(bias_b, b.size(), kHighSpectrumLevel);
  const bool in_mid = meets_fraction(bias_a, a.size(), delta) ||
                      meets_fraction(bias_b, b.size(), delta);

  // The A-role set is the one with the smaller majority fraction.
  d.swapped = frac_b < frac_a;
  d.alpha = d.swapped ? frac_b : frac_a;
  d.beta = d.swapped ? frac_a : frac_b;

  if (!off_high || !in_mid || f == 0) {
    throw ContractViolation("split_step: xi is not a flatness witness at delta = 1/sqrt(2J): " +
                            describe(d));
  }
  const double input_dbl = doubling(a, b).dbl;
  if (input_dbl > j * (1.0 + kContractRelTol)) {
    throw ContractViolation("split_step: Dbl(A,B) = " + std::to_string(input_dbl) +
                            " exceeds J: " + describe(d));
  }

  const PointSet& p = d.swapped ? a0 : b0;
  const PointSet& q0 = d.swapped ? b0 : a0;
  const PointSet& q1 = d.swapped ? b1 : a1;
  if (q1.empty()) {
    throw ContractViolation("split_step: A-role minority half is empty: " + describe(d));
  }
  const double psi0 = doubling(q0, p).dbl;
  const double psi1 = doubling(q1, p).dbl;
  d.kept_minority_half = psi1 < psi0;
  d.psi = d.kept_minority_half ? psi1 : psi0;
  const PointSet& q = d.kept_minority_half ? q1 : q0;

  SplitResult r{d.swapped ? p : q, d.swapped ? q : p, {}};
  d.a_out = r.a.size();
  d.b_out = r.b.size();
  d.measured_dbl = d.psi;
  d.sharper_bound_held = d.psi <= d.sharper_bound * (1.0 + kContractRelTol);

  if (d.a_out * 20 < d.a_in || d.b_out * 20 < d.b_in) {
    throw ContractViolation("split_step: size floor |A'| >= |A|/20 violated: " + describe(d));
  }
  if (d.psi > d.bound * (1.0 + kContractRelTol)) {
    throw ContractViolation("split_step: doubling bound violated: " + describe(d));
  }
  r.diag = d;
  return r;
}

BucketAudit bucket_audit(std::span<const double> levels, double k, double bucket_constant) {
  if (!(k >= 1.0)) throw std::invalid_argument("bucket_audit: K must be >= 1");
  BucketAudit audit;
  audit.k = k;
  audit.bucket_constant = bucket_constant;
  const auto r = static_cast<std::size_t>(std::floor(std::log(k)));
  audit.occupancy.assign(r + 1, 0);
  audit.flagged.assign(r + 1, false);
  for (std::size_t s = 0; s <= r; ++s) {
    audit.limits.push_back(bucket_constant * std::sqrt(k / std::exp(static_cast<double>(s))) +
                           1.0);
  }
  for (double v : levels) {
    if (!(v > 0.0) || v > k) {
      ++audit.out_of_range;
      continue;
    }
    const double depth = std::floor(std::log(k / v));
    if (depth > static_cast<double>(r)) {
      ++audit.out_of_range;
      continue;
    }
    ++audit.occupancy[static_cast<std::size_t>(depth)];
  }
  for (std::size_t s = 0; s <= r; ++s) {
    audit.flagged[s] = static_cast<double>(audit.occupancy[s]) > audit.limits[s];
    audit.ok = audit.ok && !audit.flagged[s];
  }
  return audit;
}

BucketAudit bucket_audit(const FlatteningTrace& trace, double k, double bucket_constant) {
  const std::size_t m = std::min(trace.m, trace.k_sequence.size());
  return bucket_audit(std::span<const double>(trace.k_sequence.data(), m), k, bucket_constant);
}

FlatteningResult run_flattening(const PointSet& a, const PointSet& b, double k,
                                const FlatteningOptions& options) {
  require_sets({&a, &b});
  if (!(k >= 1.0)) throw PreconditionViolation("run_flattening: K must be >= 1");
  const double dbl0 = doubling(a, b).dbl;
  if (dbl0 > k * (1.0 + kContractRelTol)) {
    throw PreconditionViolation("run_flattening: Dbl(A,B) = " + std::to_string(dbl0) +
                                " exceeds K = " + std::to_string(k));
  }

  FlatteningResult res{a, b, k, {}, {}};
  FlatteningTrace& t = res.trace;
  t.k = k;
  t.step_coefficient = options.step_coefficient;
  t.initial_dbl = dbl0;
  t.k_sequence.push_back(k);

  double level = k;
  for (;;) {
    FlatnessVerdict v = check_flatness(res.a, res.b, flatness_delta(level));
    if (v.flat) {
      res.final_verdict = v;
      break;
    }
    if (t.steps.size() >= options.iteration_cap) {
      throw std::logic_error("run_flattening: iteration cap exceeded");
    }
    SplitResult s = split_step(res.a, res.b, level, *v.witness, options.step_coefficient);
    const double next = next_k(level, options.step_coefficient);
    if (next < 1.0 - kContractRelTol) {
      throw std::logic_error("run_flattening: recurrence fell below 1");
    }
    res.a = std::move(s.a);
    res.b = std::move(s.b);
    t.steps.push_back(s.diag);
    t.k_sequence.push_back(next);
    level = next;
  }
  t.m = t.steps.size();
  t.final_dbl = t.steps.empty() ? dbl0 : t.steps.back().measured_dbl;
  t.bucket_counts = bucket_audit(t, k, options.bucket_constant).occupancy;
  res.j = level;
  return res;
}

}  // namespace f2sumset
