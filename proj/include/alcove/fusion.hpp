#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "alcove/affine.hpp"
#include "alcove/char_ring.hpp"
#include "alcove/restricted_ring.hpp"
#include "alcove/root_datum.hpp"

namespace alcove {

enum class TableKind { VR_MINUS, VR_PLUS };

std::string to_string(TableKind kind);
TableKind table_kind_from_string(const std::string& s);

// Structure constants of one of the two fusion-type rings, over its
// canonical basis (open-alcove weights for VR_MINUS, natural-orbit
// representatives for VR_PLUS).  Only pairs i <= j are stored; the table is
// symmetric by construction.
struct FusionTable {
  TableKind kind = TableKind::VR_MINUS;
  std::string family;
  int rank = 0;
  i64 l = 0;
  std::vector<Weight> basis;
  std::map<std::array<int, 3>, Int> constants;

  Int constant(int i, int j, int k) const;
  bool operator==(const FusionTable&) const = default;
};

// Fusion constants via tensor decomposition followed by signed folding into
// the open alcove; arguments must lie in the open alcove.
std::map<Weight, Int, WeightOrder> vr_constants(const RootDatum& datum, i64 l,
                                                const Weight& lambda,
                                                const Weight& mu);

// Structure constants of the orbit-sum ring under the natural affine action:
// exact f-product, each term f(nu) folded onto its orbit representative with
// the stabilizer-ratio weight |W_rep| / |W_nu| (a full W-sum descends term
// by term; the plain orbit sums rescale), no signs, nothing discarded.
std::map<Weight, Int, WeightOrder> vrplus_constants(const RootDatum& datum, i64 l,
                                                    const Weight& lambda,
                                                    const Weight& mu);

// Full table over the basis; integrality, nonnegativity and the identity row
// are verified before returning.  The parallel flag selects the OpenMP
// pair-loop; build_table_serial is the plain sequential reference.
FusionTable build_table(const RootDatum& datum, i64 l, TableKind kind,
                        bool parallel = true);
FusionTable build_table_serial(const RootDatum& datum, i64 l, TableKind kind);

// Checks sum_k n_ij^k n_km^p = sum_k n_jm^k n_ik^p.  With max_quadruples = 0
// all (i,j,m,p) are checked; otherwise that many deterministic pseudo-random
// quadruples.
bool table_associative(const FusionTable& table, i64 max_quadruples, unsigned seed = 1);

// Projective-ideal basis: normal_form(steinberg * f(lambda)) over the
// natural-orbit representatives, in their canonical order.
std::vector<RestrictedElem> pr_basis(const RootDatum& datum, i64 l);

struct PrProductReport {
  bool ok = false;
  Weight lambda, mu;
  std::map<Weight, Int, WeightOrder> n;
  RestrictedElem lhs, rhs;
};
PrProductReport check_pr_product(const RootDatum& datum, i64 l, const Weight& lambda,
                                 const Weight& mu);

struct PrProductSummary {
  bool ok = true;
  i64 pairs = 0;
  std::vector<PrProductReport> failures;
};
PrProductSummary check_pr_product_all(const RootDatum& datum, i64 l,
                                      bool parallel = true);

// Verifies the projective-character identity
//   sum over the l*mu-translated Weyl group of chi(w . lambda)
//     = chi((l-1)rho + l(mu - rho)) * sum_{w in W} e^{w(lambda + rho - l mu)}
// and, when mu is on a finite wall, that the left side vanishes.  The report
// also records whether the weaker displayed factor f(lambda - l mu) would
// have matched (it does not in general).
struct ThmPrReport {
  bool ok = false;
  bool singular_mu = false;
  bool printed_form_matches = false;
  SymElem lhs, rhs, rhs_printed;
};
ThmPrReport check_thm_pr(const RootDatum& datum, i64 l, const Weight& lambda,
                         const Weight& mu);

struct ThmPrBoxReport {
  bool ok = true;
  i64 cases = 0;
  i64 printed_failure_count = 0;
  std::vector<std::pair<Weight, Weight>> failures;
  std::vector<std::pair<Weight, Weight>> printed_failures;  // first 50
};
ThmPrBoxReport check_thm_pr_box(const RootDatum& datum, i64 l, i64 lambda_bound,
                                i64 mu_bound);

struct CodimReport {
  bool ok = false;
  i64 dim = 0;
  i64 codim = 0;
  i64 expected_codim = 0;
};
CodimReport check_bJ_codim(const RootDatum& datum, i64 l);

struct SocleReport {
  bool ok = false;
  i64 annihilator_dim = 0;
  i64 pr_span_dim = 0;
  bool spans_equal = false;
  i64 expected_dim = 0;
};
SocleReport check_socle(const RootDatum& datum, i64 l);

struct ProporReport {
  bool ok = true;
  i64 cases = 0;
  std::vector<std::pair<Weight, int>> failures;
};
ProporReport check_propor(const RootDatum& datum, i64 l);

}  // namespace alcove
