#include "f2sumset/fourier.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace f2sumset {

namespace {

int log2_length(std::size_t len) {
  if (len == 0 || (len & (len - 1)) != 0) {
    throw std::invalid_argument("transform length " + std::to_string(len) +
                                " is not a power of two");
  }
  const int n = std::countr_zero(len);
  if (n > max_dimension()) {
    throw DimensionError("transform dimension " + std::to_string(n) + " exceeds N_MAX");
  }
  return n;
}

}  // namespace

TransformTable wht(std::span<const double> f) {
  const int n = log2_length(f.size());
  TransformTable t{n, std::vector<double>(f.begin(), f.end())};
  walsh_hadamard_in_place(std::span<double>(t.values));
  const double scale = std::ldexp(1.0, -n);
  for (double& v : t.values) v *= scale;
  return t;
}

TransformTable wht_naive(std::span<const double> f) {
  const int n = log2_length(f.size());
  if (n > kNaiveTransformMaxDimension) {
    throw std::invalid_argument("naive transform limited to n <= " +
                                std::to_string(kNaiveTransformMaxDimension));
  }
  const std::size_t len = f.size();
  TransformTable t{n, std::vector<double>(len, 0.0)};
  const double scale = std::ldexp(1.0, -n);
  for (std::size_t xi = 0; xi < len; ++xi) {
    double acc = 0.0;
    for (std::size_t x = 0; x < len; ++x) {
      acc += parity(static_cast<Bits>(xi & x)) ? -f[x] : f[x];
    }
    t.values[xi] = acc * scale;
  }
  return t;
}

std::vector<std::int32_t> walsh_coefficients(const PointSet& a) {
  std::vector<std::int32_t> w(space_size(a.dimension()), 0);
  a.for_each([&](Bits x) { w[x] = 1; });
  walsh_hadamard_in_place(std::span<std::int32_t>(w));
  return w;
}

TransformTable indicator_transform(const PointSet& a) {
  const auto w = walsh_coefficients(a);
  TransformTable t{a.dimension(), std::vector<double>(w.size())};
  const double scale = std::ldexp(1.0, -a.dimension());
  for (std::size_t i = 0; i < w.size(); ++i) t.values[i] = w[i] * scale;
  return t;
}

namespace {

void validate_spectrum_args(const PointSet& a, double alpha) {
  if (a.empty()) throw std::invalid_argument("spectrum of the empty set");
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("spectrum threshold must lie in (0, 1]");
  }
}

}  // namespace

void SpectrumQuery::validate() const { validate_spectrum_args(set, alpha); }

PointSet spectrum_from_coefficients(std::span<const std::int32_t> coefficients,
                                    std::size_t cardinality, int n, double alpha) {
  std::vector<std::uint64_t> words((space_size(n) + 63) / 64, 0);
  for (std::size_t xi = 0; xi < coefficients.size(); ++xi) {
    if (meets_fraction(std::abs(static_cast<std::int64_t>(coefficients[xi])), cardinality,
                       alpha)) {
      words[xi >> 6] |= std::uint64_t{1} << (xi & 63);
    }
  }
  return PointSet::from_words(n, std::move(words));
}

PointSet spectrum(const PointSet& a, double alpha) {
  validate_spectrum_args(a, alpha);
  const auto w = walsh_coefficients(a);
  return spectrum_from_coefficients(w, a.size(), a.dimension(), alpha);
}

PointSet spectrum(const SpectrumQuery& q) { return spectrum(q.set, q.alpha); }

}  // namespace f2sumset
