#pragma once

#include <complex>
#include <map>
#include <vector>

#include "alcove/root_datum.hpp"
#include "alcove/weight.hpp"

namespace alcove {

// Element of the W-symmetric character ring, written on the orbit-sum basis
// f(lambda) = sum of e^eta over the W-orbit of lambda (each orbit element
// once).  Keys are dominant; zero coefficients are pruned.
struct SymElem {
  std::map<Weight, Rat, WeightOrder> terms;

  bool zero() const { return terms.empty(); }
  bool operator==(const SymElem& o) const { return terms == o.terms; }

  // Adds c * f(lambda), pruning the term if the total cancels.
  void add_term(const Weight& lambda, const Rat& c);
};

SymElem sym_add(const SymElem& a, const SymElem& b);
SymElem sym_sub(const SymElem& a, const SymElem& b);
SymElem sym_scale(const Rat& c, const SymElem& a);
std::string to_string(const SymElem& a);

// f(lambda): the single orbit-sum term.  Rejects non-dominant lambda.
SymElem f_elem(const Weight& lambda);

// Weyl character chi(lambda) expanded on orbit sums via Freudenthal
// multiplicities; unitriangular with respect to dominance.
SymElem chi_elem(const RootDatum& datum, const Weight& lambda);

// chi at an arbitrary argument, resolved through the dot action: zero when
// lambda + rho is singular, otherwise det(w) * chi(dominant representative).
SymElem chi_signed(const RootDatum& datum, const Weight& lambda);

// Exact product in the character ring: expand both factors to exponent
// orbits, convolve, and re-collect dominant exponents (the f-coordinates of
// the product).
SymElem mul(const RootDatum& datum, const SymElem& a, const SymElem& b);

// Decomposition chi(lambda) * chi(mu) = sum c_nu chi(nu) by dot-folding
// lambda + (weights of V(mu)); an independent route to products of
// characters.  All coefficients are nonnegative.
std::map<Weight, Int, WeightOrder> klimyk_product(const RootDatum& datum,
                                                  const Weight& lambda,
                                                  const Weight& mu);

// chi((l-1) rho); its value at 1 is l^(number of positive roots).
SymElem steinberg(const RootDatum& datum, i64 l);

// Evaluation at 1: sum of c_lambda * |orbit(lambda)|.
Rat value_at_one(const RootDatum& datum, const SymElem& a);

// Evaluation e^eta -> exp(2 pi i <eta, beta> / l) for beta in simple-root
// coordinates; the pairing is an exact integer reduced mod l.
std::complex<double> eval_at(const RootDatum& datum, const SymElem& a,
                             const RootVec& beta, i64 l);

// Evaluation e^eta -> exp(2 pi i <eta, zeta> / l) for a weight-valued point
// zeta; the exponent is an exact rational reduced mod 1 before
// exponentiation.
std::complex<double> eval_at_weight_point(const RootDatum& datum, const SymElem& a,
                                          const Weight& zeta, i64 l);

// Rewrites a on the Weyl-character basis (inverse of chi_elem expansion).
std::map<Weight, Rat, WeightOrder> to_chi_basis(const RootDatum& datum, SymElem a);

}  // namespace alcove
