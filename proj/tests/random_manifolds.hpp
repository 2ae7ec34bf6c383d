#pragma once

#include <random>
#include <vector>

#include "mabuchi/admissible.hpp"

namespace testing_support {

// Random Fano admissible data: 1 to 3 base factors with mixed signs and
// rational Einstein constants just above the Fano threshold.
inline mabuchi::AdmissibleManifold random_fano_manifold(std::mt19937& rng) {
  std::uniform_int_distribution<unsigned> small(0, 3), dim(1, 3), count(1, 3), num(1, 40), den(1, 9);
  std::bernoulli_distribution sign(0.5);
  const unsigned d0 = small(rng), d_inf = small(rng);
  std::vector<mabuchi::BaseFactor> factors;
  const unsigned n = count(rng);
  for (unsigned i = 0; i < n; ++i) {
    const int eps = sign(rng) ? 1 : -1;
    const unsigned floor = (eps > 0 ? d0 : d_inf) + 1;
    const mabuchi::BigRational s =
        mabuchi::BigRational(static_cast<long>(floor)) + mabuchi::BigRational(static_cast<long>(num(rng)), static_cast<long>(den(rng)));
    factors.push_back({dim(rng), eps, s});
  }
  return mabuchi::AdmissibleManifold(d0, d_inf, std::move(factors));
}

}  // namespace testing_support
