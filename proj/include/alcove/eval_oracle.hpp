#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <vector>

#include "alcove/char_ring.hpp"
#include "alcove/fusion.hpp"
#include "alcove/root_datum.hpp"

namespace alcove {

// Numerical character table of a fusion-type ring: one row per evaluation
// point (a one-dimensional representation of the ring), one column per basis
// element.  Because the rows are ring homomorphisms, structure constants are
// recoverable by solving a square linear system, which gives a route to the
// tables that shares no code with the exact folding constructions.
struct EvalTable {
  TableKind kind = TableKind::VR_MINUS;
  i64 l = 0;
  std::vector<Weight> basis;
  std::vector<Weight> point_weights;  // VR_MINUS: open-alcove labels
  std::vector<RootVec> point_roots;   // VR_PLUS: orbit reps in Q/lQ
  Eigen::MatrixXcd values;            // points x basis
  double min_singular = 0.0;          // of the row-normalized matrix
};

// Characters of the alcove fusion ring: ratios of signed exponential sums
//   phi_mu(chi(lambda)) = S(lambda + rho; mu + rho) / S(rho; mu + rho),
//   S(nu; zeta) = sum over the orbit of nu of det(w) exp(2 pi i <w nu, zeta>/l),
// one point per open-alcove weight mu.  Construction verifies conditioning
// (minimum singular value of the row-normalized matrix > 1e-6) and that the
// characters kill sampled generators chi(lambda) + chi(reflected lambda) of
// the fusion ideal to 1e-9.
EvalTable vr_eval_table(const RootDatum& datum, i64 l);

// Characters of the orbit-sum ring: psi_beta(f(lambda)) evaluates every
// exponential at the root-lattice point beta, one point per Weyl orbit
// representative of Q/lQ.  The point count must equal the basis size.
EvalTable vrplus_eval_table(const RootDatum& datum, i64 l);

struct OracleConstants {
  std::map<int, i64> n;
  double residual = 0.0;  // max distance of any solved coordinate from Z
  bool ok = false;        // residual < 1e-6
};

// Solves values * n = (column i) .* (column j) and rounds to integers.
OracleConstants constants_from_eval(const EvalTable& table, int i, int j);

// Recovers the full structure-constant table numerically; rejects any pair
// whose solution is farther than 1e-6 from integers.
FusionTable table_from_eval(const RootDatum& datum, const EvalTable& table);

// Max relative error of phi(x * y) = phi(x) phi(y) over random basis pairs,
// evaluated directly on exact products; exercises the homomorphism property
// of every row.
double oracle_hom_max_error(const RootDatum& datum, const EvalTable& table,
                            int samples, unsigned seed);

}  // namespace alcove
