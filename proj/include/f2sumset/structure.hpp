#pragma once

#include <array>
#include <optional>
#include <string>

#include "f2sumset/flatten.hpp"
#include "f2sumset/gf2core.hpp"

namespace f2sumset {

inline constexpr double kStructureAbsTol = 1e-9;
inline constexpr double kLemma1SizeFactor = 0.8;

struct Lemma1Verdict {
  bool size_ok = false;
  bool product_ok = false;
  std::array<Bits, 4> translates{};
  std::array<std::size_t, 4> densities{};  // |A_i ∩ (x_i + H)|
  double size_floor = 0.0;     // 0.8 (prod |A_i|)^{1/4}
  double product_mean = 0.0;   // prod |A_i ∩ (x_i + H)|^{1/4}
  double product_floor = 0.0;  // |H| / (2J)

  bool ok() const { return size_ok && product_ok; }
};

// H = annihilator(span(Spec_delta(A') ∪ Spec_delta(B'))), delta = 1/sqrt(2J).
// Throws PreconditionViolation unless (A', B', A', B') is coherently
// delta-flat.
Subspace extract_subspace(const PointSet& a, const PointSet& b, double j);

// Checks |H| >= 0.8 (prod |A_i|)^{1/4} and, with the densest coset of H in
// each A_i, prod |A_i ∩ (x_i + H)|^{1/4} >= |H| / (2J).
Lemma1Verdict verify_lemma1(const PointSet& a1, const PointSet& a2, const PointSet& a3,
                            const PointSet& a4, const Subspace& h, double j);

struct DensestCoset {
  Bits representative = 0;
  std::size_t density = 0;
};

// Densest coset of H in A; ties go to the smallest representative.
DensestCoset densest_coset(const PointSet& a, const Subspace& h);

enum class PipelineStatus { verified, construction_unverified };

std::string to_string(PipelineStatus s);

struct PipelineOptions {
  FlatteningOptions flattening;
  int fallback_max_n = 10;
  int fallback_dim_guard = 12;
};

struct StructureResult {
  Subspace h{1};
  Bits x = 0;
  Bits y = 0;
  std::size_t density_a = 0;  // |A ∩ (x + H)|
  std::size_t density_b = 0;  // |B ∩ (y + H)|
  double geo_mean = 0.0;
  double threshold = 0.0;  // |H| / (2K)
  bool size_bound_ok = false;
  bool product_ok = false;
  bool density_bound_ok = false;
  double k_used = 0.0;
  double j_used = 0.0;
  double size_ratio = 0.0;  // |H| / |A|
  double input_dbl = 0.0;
  double energy_omega = 0.0;   // omega(A', B', A', B')
  double lemma_geo_mean = 0.0;  // with the verify_lemma1 translates, before re-maximising
  bool used_fallback = false;
  std::size_t flat_a_size = 0;
  std::size_t flat_b_size = 0;
  PipelineStatus status = PipelineStatus::construction_unverified;
  Lemma1Verdict lemma1;
  FlatteningTrace trace;
  BucketAudit audit;
};

// Flatten, gate on energy, extract H, verify, and pick translates for the
// original A and B. Throws PreconditionViolation if Dbl(A,B) > K.
StructureResult theorem4_pipeline(const PointSet& a, const PointSet& b, double k,
                                  const PipelineOptions& options = {});

}  // namespace f2sumset
