#pragma once

#include <cstdint>
#include <string>

#include "f2sumset/gf2core.hpp"

namespace f2sumset {

struct DoublingReport {
  std::size_t sumset_size = 0;
  double dbl = 0.0;  // |A+B| / (|A||B|)^{1/2}
};

enum class EnergyMethod { direct, fourier };

std::string to_string(EnergyMethod m);

struct EnergyReport {
  std::uint64_t count = 0;  // #{(a1,a2,a3,a4) : a1+a2+a3+a4 = 0}
  double omega = 0.0;       // count / (|A1||A2||A3||A4|)^{3/4}
  EnergyMethod method = EnergyMethod::direct;
};

inline constexpr double kEnergyDirectCostGuard = 1e8;

class CostGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PointSet sumset(const PointSet& a, const PointSet& b);
DoublingReport doubling(const PointSet& a, const PointSet& b);

// Triple loop over the three smallest sets with a membership test in the
// fourth. Throws CostGuardExceeded past kEnergyDirectCostGuard iterations.
EnergyReport energy_direct(const PointSet& a1, const PointSet& a2, const PointSet& a3,
                           const PointSet& a4);

// count = 2^-n sum_xi prod_i W_i(xi) over integer Walsh coefficients, exact.
EnergyReport energy_fourier(const PointSet& a1, const PointSet& a2, const PointSet& a3,
                            const PointSet& a4);

double normalized_energy(std::uint64_t count, std::size_t s1, std::size_t s2, std::size_t s3,
                         std::size_t s4);

}  // namespace f2sumset
