#include "alcove/weyl.hpp"

#include <deque>
#include <set>

#include "alcove/errors.hpp"

namespace alcove {

Weight apply_simple(const RootDatum& datum, int i, const Weight& lambda) {
  const int n = datum.rank();
  require(i >= 1 && i <= n, ErrorKind::InvalidArgument, "simple reflection index out of range");
  require(lambda.rank() == n, ErrorKind::InvalidArgument, "rank mismatch");
  Weight out = lambda;
  const i64 coeff = lambda.c[i - 1];
  if (coeff == 0) return out;
  const auto& cartan = datum.cartan();
  for (int j = 0; j < n; ++j) out.c[j] -= coeff * cartan[j][i - 1];
  return out;
}

Weight apply_root_reflection(const RootDatum& datum, const RootVec& beta,
                             const Weight& lambda) {
  const i64 coeff = datum.pair(lambda, beta);
  if (coeff == 0) return lambda;
  Weight out = lambda;
  Weight beta_w = datum.root_as_weight(beta);
  for (int j = 0; j < datum.rank(); ++j) out.c[j] -= coeff * beta_w.c[j];
  return out;
}

Weight dominant_rep(const RootDatum& datum, const Weight& lambda) {
  Weight w = lambda;
  const int n = datum.rank();
  for (;;) {
    int neg = -1;
    for (int i = 0; i < n; ++i)
      if (w.c[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return w;
    w = apply_simple(datum, neg + 1, w);
  }
}

const std::vector<Weight>& weyl_orbit(const RootDatum& datum, const Weight& lambda) {
  Weight dom = dominant_rep(datum, lambda);
  return datum.memo_orbit(dom, [&datum, dom]() {
    std::set<Weight, WeightOrder> visited;
    std::deque<Weight> queue;
    visited.insert(dom);
    queue.push_back(dom);
    const int n = datum.rank();
    while (!queue.empty()) {
      Weight w = std::move(queue.front());
      queue.pop_front();
      for (int i = 1; i <= n; ++i) {
        Weight img = apply_simple(datum, i, w);
        if (visited.insert(img).second) queue.push_back(img);
      }
    }
    return std::vector<Weight>(visited.begin(), visited.end());
  });
}

std::optional<SignedWeight> dominant_shifted(const RootDatum& datum, const Weight& lambda) {
  const int n = datum.rank();
  require(lambda.rank() == n, ErrorKind::InvalidArgument, "rank mismatch");
  Weight nu = lambda + datum.rho();
  int sign = 1;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < n; ++i)
      if (nu.c[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    nu = apply_simple(datum, neg + 1, nu);
    sign = -sign;
  }
  for (int i = 0; i < n; ++i)
    if (nu.c[i] == 0) return std::nullopt;
  return SignedWeight{nu - datum.rho(), sign};
}

Int stabilizer_order(const RootDatum& datum, const Weight& lambda) {
  const auto& orbit = weyl_orbit(datum, lambda);
  Int size(static_cast<long>(orbit.size()));
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), datum.weyl_order().get_mpz_t(),
              size.get_mpz_t());
  require(r == 0, ErrorKind::Internal, "orbit size must divide the Weyl group order");
  return q;
}

}  // namespace alcove
