#include "f2sumset/setstats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "f2sumset/fourier.hpp"

namespace f2sumset {

namespace {

void require_nonempty_pair(const PointSet& a, const PointSet& b) {
  if (a.dimension() != b.dimension()) throw DimensionError("dimension mismatch");
  if (a.empty() || b.empty()) throw std::invalid_argument("empty set");
}

void require_quadruple(const std::array<const PointSet*, 4>& sets) {
  for (const PointSet* s : sets) {
    if (s->dimension() != sets[0]->dimension()) throw DimensionError("dimension mismatch");
    if (s->empty()) throw std::invalid_argument("empty set");
  }
}

// Bit i of the result is bit (i ^ lo) of w, for lo < 64.
std::uint64_t xor_permute(std::uint64_t w, unsigned lo) {
  static constexpr std::array<std::uint64_t, 6> kLowHalves = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
      0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
  for (unsigned k = 0; k < 6; ++k) {
    if ((lo >> k) & 1u) {
      const unsigned s = 1u << k;
      w = ((w & kLowHalves[k]) << s) | ((w >> s) & kLowHalves[k]);
    }
  }
  return w;
}

}  // namespace

std::string to_string(EnergyMethod m) { return m == EnergyMethod::direct ? "direct" : "fourier"; }

PointSet sumset(const PointSet& a, const PointSet& b) {
  require_nonempty_pair(a, b);
  const PointSet& small = a.size() <= b.size() ? a : b;
  const PointSet& large = a.size() <= b.size() ? b : a;
  const auto src = large.words();
  std::vector<std::uint64_t> out(src.size(), 0);
  small.for_each([&](Bits x) {
    const std::size_t hi = x >> 6;
    const unsigned lo = x & 63u;
    for (std::size_t w = 0; w < src.size(); ++w) {
      if (src[w]) out[w ^ hi] |= xor_permute(src[w], lo);
    }
  });
  return PointSet::from_words(a.dimension(), std::move(out));
}

DoublingReport doubling(const PointSet& a, const PointSet& b) {
  const PointSet s = sumset(a, b);
  DoublingReport r;
  r.sumset_size = s.size();
  r.dbl = static_cast<double>(s.size()) /
          std::sqrt(static_cast<double>(a.size()) * static_cast<double>(b.size()));
  return r;
}

double normalized_energy(std::uint64_t count, std::size_t s1, std::size_t s2, std::size_t s3,
                         std::size_t s4) {
  const long double prod = static_cast<long double>(s1) * s2 * s3 * s4;
  return static_cast<double>(static_cast<long double>(count) / std::pow(prod, 0.75L));
}

EnergyReport energy_direct(const PointSet& a1, const PointSet& a2, const PointSet& a3,
                           const PointSet& a4) {
  std::array<const PointSet*, 4> sets = {&a1, &a2, &a3, &a4};
  require_quadruple(sets);
  // The equation is symmetric in the four sets, so loop over the smallest three.
  std::array<const PointSet*, 4> order = sets;
  std::sort(order.begin(), order.end(),
            [](const PointSet* x, const PointSet* y) { return x->size() < y->size(); });
  const double cost = static_cast<double>(order[0]->size()) * static_cast<double>(order[1]->size()) *
                      static_cast<double>(order[2]->size());
  if (cost > kEnergyDirectCostGuard) {
    throw CostGuardExceeded("energy_direct: |A1||A2||A3| exceeds the cost guard; use the "
                            "fourier method");
  }
  const auto e0 = order[0]->elements();
  const auto e1 = order[1]->elements();
  const auto e2 = order[2]->elements();
  const PointSet& last = *order[3];
  std::uint64_t count = 0;
  for (Bits x : e0) {
    for (Bits y : e1) {
      const Bits xy = x ^ y;
      for (Bits z : e2) count += last.contains(xy ^ z);
    }
  }
  return {count, normalized_energy(count, a1.size(), a2.size(), a3.size(), a4.size()),
          EnergyMethod::direct};
}

EnergyReport energy_fourier(const PointSet& a1, const PointSet& a2, const PointSet& a3,
                            const PointSet& a4) {
  std::array<const PointSet*, 4> sets = {&a1, &a2, &a3, &a4};
  require_quadruple(sets);
  const int n = a1.dimension();

  // Reuse coefficients for repeated arguments such as (A, B, A, B).
  std::array<std::vector<std::int32_t>, 4> coeffs;
  std::array<std::size_t, 4> slot{};
  for (std::size_t i = 0; i < 4; ++i) {
    slot[i] = i;
    for (std::size_t j = 0; j < i; ++j) {
      if (slot[j] == j && *sets[j] == *sets[i]) {
        slot[i] = j;
        break;
      }
    }
    if (slot[i] == i) coeffs[i] = walsh_coefficients(*sets[i]);
  }
  const auto& w1 = coeffs[slot[0]];
  const auto& w2 = coeffs[slot[1]];
  const auto& w3 = coeffs[slot[2]];
  const auto& w4 = coeffs[slot[3]];

  __int128 total = 0;
  for (std::size_t xi = 0; xi < w1.size(); ++xi) {
    const __int128 p12 = static_cast<__int128>(static_cast<std::int64_t>(w1[xi]) * w2[xi]);
    const __int128 p34 = static_cast<__int128>(static_cast<std::int64_t>(w3[xi]) * w4[xi]);
    __int128 term = 0;
    if (__builtin_mul_overflow(p12, p34, &term) || __builtin_add_overflow(total, term, &total)) {
      throw std::overflow_error("energy_fourier: accumulator overflow");
    }
  }
  const __int128 denom = static_cast<__int128>(1) << n;
  if (total < 0 || total % denom != 0) {
    // The character sum is always a non-negative multiple of 2^n.
    throw std::logic_error("energy_fourier: nonzero rounding residual");
  }
  const __int128 count = total / denom;
  if (count > static_cast<__int128>(UINT64_MAX)) {
    throw std::overflow_error("energy_fourier: count exceeds 64 bits");
  }
  const auto c = static_cast<std::uint64_t>(count);
  return {c, normalized_energy(c, a1.size(), a2.size(), a3.size(), a4.size()),
          EnergyMethod::fourier};
}

}  // namespace f2sumset
