#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "alcove/root_datum.hpp"
#include "alcove/weight.hpp"
#include "alcove/weyl.hpp"

namespace alcove {

// Accepts l iff it is odd, at least the Coxeter number, and coprime to the
// determinant of the Cartan matrix.  The rejection message names every
// violated condition.
void validate_l(const RootDatum& datum, i64 l);

// Dominant weights lying strictly inside the first shifted alcove:
// lambda >= 0 and <lambda + rho, theta> < l.
bool in_open_alcove(const RootDatum& datum, i64 l, const Weight& lambda);

// Dominant weights in the closed fundamental simplex of the natural affine
// action: lambda >= 0 and <lambda, theta> <= l.
bool in_closed_natural_alcove(const RootDatum& datum, i64 l, const Weight& lambda);

// Folds lambda under the shifted affine action (finite dot-reflections plus
// the affine reflection about the wall <nu, theta> = l) into the closed
// alcove.  Returns the interior representative with the accumulated sign, or
// empty when the fold ends on a wall.
std::optional<SignedWeight> fold_shifted_affine(const RootDatum& datum, i64 l,
                                                const Weight& lambda);

// Same fold, but at each step `pick` chooses among the currently applicable
// moves (values are 1..rank for a simple dot-reflection, 0 for the affine
// reflection).  The result must not depend on the choices; used to stress
// path-independence.
std::optional<SignedWeight> fold_shifted_affine_order(
    const RootDatum& datum, i64 l, const Weight& lambda,
    const std::function<int(const std::vector<int>&)>& pick);

// Reduces every coordinate into [0, l-1], identifying P/lP with canonical
// lifts.
Weight reduce_mod_lP(const Weight& lambda, i64 l);

// Canonical representative of the orbit of lambda under the natural affine
// action w(lambda) mod lP.
Weight fold_natural(const RootDatum& datum, i64 l, const Weight& lambda);

// Canonical representative of the orbit of lambda (which must be a canonical
// lift) under the dot action followed by reduction mod lP.
Weight fold_bullet(const RootDatum& datum, i64 l, const Weight& lambda);

// All fundamental domains for one (datum, l), plus constant-time lookup
// tables indexed by the mixed-radix index of a canonical lift.
struct Domains {
  i64 l = 0;
  std::vector<Weight> X;     // open shifted alcove
  std::vector<Weight> P_l;   // all canonical lifts, mixed-radix order
  std::vector<Weight> Xhat;  // representatives of natural orbits
  std::vector<Weight> Xbar;  // representatives of dot-action orbits
  std::vector<Weight> Xreg;  // Xbar members whose orbit is free (size |W|)

  std::vector<std::int32_t> natural_rep;    // P_l index -> position in Xhat
  std::vector<std::int32_t> bullet_rep;     // P_l index -> position in Xbar
  std::vector<i64> natural_orbit_size;      // by Xhat position
  std::vector<i64> bullet_orbit_size;       // by Xbar position
  std::map<Weight, int, WeightOrder> xhat_index;
  std::map<Weight, int, WeightOrder> xbar_index;
  i64 xhat_outside_X = 0;  // natural orbits with no representative inside X

  i64 index_of(const Weight& canonical) const;
};

inline constexpr i64 kDefaultDomainSizeBound = 1000000;

Domains enumerate_domains(const RootDatum& datum, i64 l,
                          i64 size_bound = kDefaultDomainSizeBound);

// Scans the box of dominant weights with coordinate sum <= height_bound and
// checks that the dominant weights outside every width-l strip around the
// origin (|<lambda + rho, beta>| < l for a positive root beta) are exactly
// the translated cone (l-1)rho + P_+.
struct StripReport {
  bool ok = true;
  i64 box_size = 0;
  bool corner_in_box = false;  // whether (l-1)rho itself lay in the box
  std::vector<Weight> counterexamples;
};
StripReport strip_complement_check(const RootDatum& datum, i64 l, i64 height_bound);

// Visits every dominant weight with coordinate sum <= bound.
void for_each_dominant_weight(int rank, i64 bound,
                              const std::function<void(const Weight&)>& fn);

}  // namespace alcove
