#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "f2sumset/gf2core.hpp"

namespace f2sumset {

inline constexpr double kHighSpectrumLevel = 0.9;
inline constexpr double kDefaultStepCoefficient = 0.01;
inline constexpr std::size_t kDefaultIterationCap = 10000;
inline constexpr double kDefaultBucketConstant = 120.0;
inline constexpr double kContractRelTol = 1e-9;
inline constexpr double kMaxFlatnessDelta = 0.70710678118654757;  // 1/sqrt(2), J = 1

// Raised when an input breaks an operation's stated precondition.
class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a split step cannot honour its size and doubling guarantees.
// The message carries the full diagnostics.
class ContractViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FlatnessVerdict {
  bool flat = true;
  std::optional<GroupElement> witness;  // smallest violating frequency
  double delta = 0.0;
};

// Coherent delta-flatness: every xi lies in Spec_{9/10} of all four sets or
// outside Spec_delta of all four. Accepts 0 < delta <= 1/sqrt(2), the range
// of 1/sqrt(2J) over J >= 1.
FlatnessVerdict check_flatness(const PointSet& a1, const PointSet& a2, const PointSet& a3,
                               const PointSet& a4, double delta);

// (A, B, A, B) specialisation that computes two transforms instead of four.
FlatnessVerdict check_flatness(const PointSet& a, const PointSet& b, double delta);

inline double flatness_delta(double j) { return 1.0 / std::sqrt(2.0 * j); }

struct SplitDiagnostics {
  GroupElement xi{0, 1};
  // Majority fractions. alpha belongs to the A-role set, beta to the
  // B-role set; alpha <= beta.
  double alpha = 0.0;
  double beta = 0.0;
  double psi = 0.0;       // min over the two A-role halves of Dbl(half, P)
  bool swapped = false;   // A-role is the input B
  // |A0|, |A1|, |B0|, |B1| of the inputs, index 0 naming the majority half.
  std::array<std::size_t, 4> half_sizes{};
  bool a_majority_is_dot_zero = true;
  bool b_majority_is_dot_zero = true;
  bool kept_minority_half = false;  // Psi attained on the A-role minority half
  double j = 0.0;
  double bound = 0.0;          // J / (1 + c/sqrt(J))
  double sharper_bound = 0.0;  // J / (1 + 1/(20 sqrt(2J)))
  bool sharper_bound_held = false;
  std::size_t a_in = 0, b_in = 0, a_out = 0, b_out = 0;
  double measured_dbl = 0.0;  // Dbl(A', B'), equal to psi
};

struct SplitResult {
  PointSet a;
  PointSet b;
  SplitDiagnostics diag;
};

// One bisection along the witness xi. Requires Dbl(A, B) <= J and xi a
// valid witness at delta = 1/sqrt(2J); throws ContractViolation otherwise.
SplitResult split_step(const PointSet& a, const PointSet& b, double j, GroupElement xi,
                       double step_coefficient = kDefaultStepCoefficient);

struct FlatteningOptions {
  double step_coefficient = kDefaultStepCoefficient;
  std::size_t iteration_cap = kDefaultIterationCap;
  double bucket_constant = kDefaultBucketConstant;
};

// K_{i+1} = K_i / (1 + c / sqrt(K_i)).
inline double next_k(double k, double step_coefficient = kDefaultStepCoefficient) {
  return k / (1.0 + step_coefficient / std::sqrt(k));
}

struct BucketAudit {
  double k = 0.0;
  double bucket_constant = kDefaultBucketConstant;
  // Bucket s covers (K/e^{s+1}, K/e^s], s = 0..floor(ln K).
  std::vector<std::size_t> occupancy;
  std::vector<double> limits;  // bucket_constant * sqrt(K/e^s) + 1
  std::vector<bool> flagged;
  std::size_t out_of_range = 0;  // levels below K/e^{r+1} or above K
  bool ok = true;
};

struct FlatteningTrace {
  double k = 0.0;
  double step_coefficient = kDefaultStepCoefficient;
  std::vector<double> k_sequence;  // K_1 = K, ..., K_{m+1} = J
  std::vector<SplitDiagnostics> steps;
  std::size_t m = 0;
  std::vector<std::size_t> bucket_counts;
  double initial_dbl = 0.0;
  double final_dbl = 0.0;
};

// Buckets the levels at which a split happened, i.e. k_sequence[0..m).
BucketAudit bucket_audit(const FlatteningTrace& trace, double k,
                         double bucket_constant = kDefaultBucketConstant);
BucketAudit bucket_audit(std::span<const double> levels, double k,
                         double bucket_constant = kDefaultBucketConstant);

struct FlatteningResult {
  PointSet a;
  PointSet b;
  double j = 0.0;
  FlatteningTrace trace;
  FlatnessVerdict final_verdict;
};

// Iterates split_step until (A', B', A', B') is coherently 1/sqrt(2J)-flat.
FlatteningResult run_flattening(const PointSet& a, const PointSet& b, double k,
                                const FlatteningOptions& options = {});

}  // namespace f2sumset
