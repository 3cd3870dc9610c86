#pragma once

#include <algorithm>
#include <vector>

#include "f2sumset/gf2core.hpp"
#include "f2sumset/harness.hpp"

namespace testing {

using f2sumset::Bits;
using f2sumset::PointSet;
using f2sumset::Rng;

// Uniform random subset of F2^n with exactly `size` elements.
inline PointSet random_set(Rng& rng, int n, std::size_t size) {
  std::vector<Bits> all(f2sumset::space_size(n));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Bits>(i);
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t j = i + rng.below(all.size() - i);
    std::swap(all[i], all[j]);
  }
  all.resize(size);
  return PointSet::from_elements(n, all);
}

// Random non-empty subset with size drawn from [1, max_size].
inline PointSet random_nonempty(Rng& rng, int n, std::size_t max_size) {
  max_size = std::min(max_size, f2sumset::space_size(n));
  return random_set(rng, n, 1 + rng.below(max_size));
}

inline std::vector<double> indicator(const PointSet& a) {
  std::vector<double> f(f2sumset::space_size(a.dimension()), 0.0);
  a.for_each([&](Bits x) { f[x] = 1.0; });
  return f;
}

}  // namespace testing
