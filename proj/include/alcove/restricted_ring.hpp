#pragma once

#include <map>
#include <vector>

#include "alcove/char_ring.hpp"
#include "alcove/root_datum.hpp"
#include "alcove/weight.hpp"

namespace alcove {

// Element of the restricted character ring, written on the basis
// {[f(lambda)] : lambda with all coordinates in [0, l-1]}.
struct RestrictedElem {
  i64 l = 0;
  std::map<Weight, Rat, WeightOrder> coords;

  bool zero() const { return coords.empty(); }
  bool operator==(const RestrictedElem& o) const { return l == o.l && coords == o.coords; }

  void add_term(const Weight& lambda, const Rat& c);
};

RestrictedElem rest_add(const RestrictedElem& a, const RestrictedElem& b);
RestrictedElem rest_sub(const RestrictedElem& a, const RestrictedElem& b);
RestrictedElem rest_scale(const Rat& c, const RestrictedElem& a);
std::string to_string(const RestrictedElem& a);

// [f(lambda)] for a single restricted weight.
RestrictedElem rest_basis_elem(i64 l, const Weight& lambda);

// Splits a dominant weight coordinatewise as lambda0 + l * lambda1 with
// lambda0 restricted.
std::pair<Weight, Weight> split_weight(const Weight& lambda, i64 l);

// Image of a character-ring element in the restricted ring, expressed on the
// restricted f-basis.  Rewrites the maximal out-of-range term f(lambda),
// lambda = lambda0 + l*lambda1 with lambda1 != 0, through the exact product
// f(lambda0) f(l lambda1) and the quotient relation
// f(l lambda1) = |W-orbit(lambda1)| f(0).
RestrictedElem normal_form(const RootDatum& datum, i64 l, const SymElem& a);

// The tautological lift sending [f(lambda)] to f(lambda).
SymElem lift(const RestrictedElem& a);

// Product in the restricted ring: lift, multiply exactly, reduce.
RestrictedElem rmul(const RootDatum& datum, const RestrictedElem& x,
                    const RestrictedElem& y);

// Basis of the radical: the span of the stabilizer-weighted differences
// {|W_lambda| [f(lambda)] - |W_mu| [f(mu)]} with mu = reduce(s_i lambda),
// over restricted lambda and simple i, reduced to echelon form.  (The
// weights matter: the plain difference [f(lambda)] - [f(mu)] is not
// nilpotent when the two stabilizers differ.)  Its dimension is l^rank
// minus the number of natural orbits.
std::vector<RestrictedElem> radical_basis(const RootDatum& datum, i64 l);

// Basis of {x : x * g = 0 for all g in generators}, by exact null-space
// computation on the stacked multiplication matrices.
std::vector<RestrictedElem> annihilator(const RootDatum& datum, i64 l,
                                        const std::vector<RestrictedElem>& generators);

// Partition of the restricted weights into dot-action orbits, keyed by the
// canonical representative.
std::map<Weight, std::vector<Weight>, WeightOrder> blocks(const RootDatum& datum, i64 l);

// Dense coordinates over all l^rank restricted weights, mixed-radix order;
// used by the exact linear algebra.
std::vector<Rat> dense_coords(const RestrictedElem& a, int rank);

// Whether two families span the same subspace of the restricted ring.
bool same_restricted_span(const std::vector<RestrictedElem>& a,
                          const std::vector<RestrictedElem>& b, int rank);

i64 restricted_dimension(int rank, i64 l);

}  // namespace alcove
