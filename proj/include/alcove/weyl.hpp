#pragma once

#include <optional>
#include <vector>

#include "alcove/root_datum.hpp"
#include "alcove/weight.hpp"

namespace alcove {

// Simple reflection s_i (1-based node index) on a weight in fundamental
// coordinates: lambda - lambda_i * (i-th column of the Cartan matrix).
Weight apply_simple(const RootDatum& datum, int i, const Weight& lambda);

// Reflection in the positive root beta:  lambda - <lambda, beta> * beta.
Weight apply_root_reflection(const RootDatum& datum, const RootVec& beta,
                             const Weight& lambda);

// Full Weyl orbit of lambda, sorted by the global weight order.  Memoized on
// the datum per dominant representative; the group itself is never listed.
const std::vector<Weight>& weyl_orbit(const RootDatum& datum, const Weight& lambda);

// The unique dominant weight in the orbit of lambda.
Weight dominant_rep(const RootDatum& datum, const Weight& lambda);

// Dominant representative under the dot action w(lambda + rho) - rho,
// together with det(w).  Empty when lambda + rho lies on a reflection wall
// (some coordinate of the shifted weight is zero), i.e. the dot orbit has no
// regular dominant member.
struct SignedWeight {
  Weight rep;
  int sign = 1;
};
std::optional<SignedWeight> dominant_shifted(const RootDatum& datum, const Weight& lambda);

// Order of the stabilizer of lambda in W: |W| / |orbit|, always exact.
Int stabilizer_order(const RootDatum& datum, const Weight& lambda);

}  // namespace alcove
