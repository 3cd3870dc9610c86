#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "f2sumset/gf2core.hpp"

namespace f2sumset {

// Relative slack on spectrum thresholds. Values within the slack of the
// threshold count as members.
inline constexpr double kSpectrumRelTol = 1e-9;

inline constexpr int kNaiveTransformMaxDimension = 12;

struct TransformTable {
  int n = 0;
  std::vector<double> values;  // values[xi] = f^(xi)
};

// Unnormalized in-place butterfly: a[xi] <- sum_x a[x] (-1)^{xi.x}.
template <class T>
void walsh_hadamard_in_place(std::span<T> a) {
  const std::size_t len = a.size();
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const T x = a[j];
        const T y = a[j + h];
        a[j] = x + y;
        a[j + h] = x - y;
      }
    }
  }
}

// f^(xi) = 2^-n sum_x f(x) (-1)^{xi.x}, O(n 2^n).
TransformTable wht(std::span<const double> f);

// Direct double loop, n <= kNaiveTransformMaxDimension.
TransformTable wht_naive(std::span<const double> f);

// Integer Walsh coefficients W(xi) = sum_{x in A} (-1)^{xi.x} = 2^n 1_A^(xi).
std::vector<std::int32_t> walsh_coefficients(const PointSet& a);

// 1_A^ computed on the integer path and divided once at the end.
TransformTable indicator_transform(const PointSet& a);

// |W| >= alpha |A| under the tie-goes-in slack.
inline bool meets_fraction(std::int64_t abs_coefficient, std::size_t cardinality,
                           double alpha) {
  const double threshold = alpha * static_cast<double>(cardinality);
  return static_cast<double>(abs_coefficient) >= threshold * (1.0 - kSpectrumRelTol);
}

struct SpectrumQuery {
  PointSet set;
  double alpha;

  void validate() const;  // throws std::invalid_argument
};

// Spec_alpha(A) = {xi : |1_A^(xi)| >= alpha |A| / 2^n}, as a set of frequencies.
PointSet spectrum(const SpectrumQuery& q);
PointSet spectrum(const PointSet& a, double alpha);

// Same, from precomputed Walsh coefficients of a set of the given size.
PointSet spectrum_from_coefficients(std::span<const std::int32_t> coefficients,
                                    std::size_t cardinality, int n, double alpha);

}  // namespace f2sumset
