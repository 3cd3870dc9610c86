#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "f2sumset/gf2core.hpp"
#include "f2sumset/structure.hpp"

namespace f2sumset {

// Seedable generator with a portable output sequence: std::mt19937_64 is
// fully specified by the standard and bounded draws use our own rejection
// step instead of <random> distributions.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/rejection-mod/v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [0, 1) with 53 bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

// splitmix64 finaliser, used to derive per-trial seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

enum class GeneratorKind { subspace, coset_union, perturbed_subspace, random_dense };

std::string to_string(GeneratorKind k);
GeneratorKind parse_generator_kind(std::string_view s);
// Kinds built around a known subspace.
bool is_planted(GeneratorKind k);

class InfeasibleSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::subspace;
  int n = 8;
  std::uint64_t seed = 1;
  int dim = 4;             // planted subspace dimension
  int cosets = 2;          // coset_union: cosets per set
  int spread = 1;          // perturbed_subspace: target cosets receiving extra points
  double add_fraction = 0.125;  // perturbed_subspace: extra points per target, as a fraction of |H0|
  std::size_t remove = 0;  // perturbed_subspace: points deleted from H0
  double density = 0.5;    // random_dense
  bool paired = true;      // also produce B
};

struct GeneratedInstance {
  PointSet a;
  std::optional<PointSet> b;
  std::optional<Subspace> planted;
  std::vector<Bits> reps_a;  // canonical coset representatives used for A
  std::vector<Bits> reps_b;
};

// Deterministic in (spec, seed). Throws InfeasibleSpec for impossible
// parameters.
GeneratedInstance generate(const GeneratorSpec& spec);

Subspace random_subspace(Rng& rng, int n, int dim);

// ---------------------------------------------------------------------------
// Brute-force references.

inline constexpr int kOracleMaxDimension = 10;
inline constexpr int kTranslateOracleMaxDimension = 12;

PointSet oracle_sumset(const PointSet& a, const PointSet& b);
std::uint64_t oracle_energy(const PointSet& a1, const PointSet& a2, const PointSet& a3,
                            const PointSet& a4);
// Walks cosets in increasing order of their minimal element; independent of
// the row-reduction used by coset_decompose.
DensestCoset oracle_translate(const PointSet& a, const Subspace& h);

struct OracleCheckCounts {
  std::string operation;
  std::size_t trials = 0;
  std::size_t mismatches = 0;
};

struct OracleCheckReport {
  std::uint64_t seed = 0;
  std::vector<OracleCheckCounts> operations;
  bool ok() const;
};

OracleCheckReport run_oracle_check(std::size_t trials_per_operation, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Campaigns.

struct CampaignConfig {
  std::vector<double> k_ladder{2, 4, 8, 16, 32};
  std::vector<GeneratorKind> kinds{GeneratorKind::coset_union,
                                   GeneratorKind::perturbed_subspace};
  int n_min = 10;
  int n_max = 14;
  int trials_per_cell = 20;
  std::uint64_t seed_base = 20240101;
  int translate_oracle_max_n = 12;
  double step_coefficient = kDefaultStepCoefficient;
  double bucket_constant = kDefaultBucketConstant;
  // Overrides for the per-K parameter rules.
  std::optional<int> dim;
  std::optional<int> cosets;
  std::optional<int> spread;
  std::optional<double> add_fraction;
  std::optional<double> density;
};

CampaignConfig parse_campaign_config(std::string_view json_text);
std::string campaign_config_to_json(const CampaignConfig& c);

// Generator parameters used for one campaign trial.
GeneratorSpec campaign_spec(const CampaignConfig& c, GeneratorKind kind, double k, int n,
                            std::uint64_t seed);

struct CampaignRow {
  std::uint64_t seed = 0;
  std::string kind;
  double k = 0.0;
  int trial = 0;
  int n = 0;
  double k_measured = 0.0;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  std::size_t m = 0;
  double j = 0.0;
  int h_dim = 0;
  std::size_t h_size = 0;
  double size_ratio = 0.0;
  double geo_mean = 0.0;
  double threshold = 0.0;
  bool energy_gate_ok = false;
  bool size_bound_ok = false;
  bool product_ok = false;
  bool density_bound_ok = false;
  bool bucket_ok = false;
  std::string translate_check = "skipped";  // match | mismatch | skipped
  bool used_fallback = false;
  std::string status;  // VERIFIED | CONSTRUCTION_UNVERIFIED | ERROR
  std::string error;
  bool planted = false;
  double runtime_ms = 0.0;  // wall time; excluded from the CSV/JSON reports
};

struct CampaignCell {
  std::string kind;
  double k = 0.0;
  std::size_t trials = 0;
  std::size_t errors = 0;
  std::size_t verified = 0;
  std::size_t unverified = 0;
  double mean_m = 0.0;
  std::size_t max_m = 0;
  double c_fit = 0.0;  // max m / sqrt(K)
  bool buckets_ok = true;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<CampaignRow> rows;
  std::vector<CampaignCell> cells;
  double fitted_c = 0.0;  // smallest C with m <= C sqrt(K) on every row
  // Least-squares fit of ln(|H|/|A|) = ln c - C_size sqrt(K).
  double size_fit_c = 0.0;
  double size_fit_exponent = 0.0;
  std::size_t size_fit_points = 0;
};

CampaignRow run_trial(const CampaignConfig& c, GeneratorKind kind, double k, int trial);
CampaignReport run_campaign(const CampaignConfig& config);

// Frozen formats, documented in docs/format.md.
std::string campaign_csv(const CampaignReport& r);
std::string campaign_json(const CampaignReport& r);
std::string campaign_timings_csv(const CampaignReport& r);

}  // namespace f2sumset
