#include "alcove/affine.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "alcove/errors.hpp"

namespace alcove {

void validate_l(const RootDatum& datum, i64 l) {
  std::vector<std::string> violations;
  if (l % 2 == 0) violations.push_back("l must be odd (got " + std::to_string(l) + ")");
  if (l < datum.coxeter_number())
    violations.push_back("l must be >= the Coxeter number " +
                         std::to_string(datum.coxeter_number()) + " (got " +
                         std::to_string(l) + ")");
  const i64 det = datum.cartan_det();
  const i64 g = std::gcd(l > 0 ? l : -l, det);
  if (g != 1)
    violations.push_back("l must be coprime to the Cartan determinant " +
                         std::to_string(det) + " (gcd = " + std::to_string(g) + ")");
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid level l=" << l << " for " << datum.name() << ": ";
  for (size_t i = 0; i < violations.size(); ++i) {
    if (i > 0) msg << "; ";
    msg << violations[i];
  }
  fail(ErrorKind::Validation, msg.str());
}

bool in_open_alcove(const RootDatum& datum, i64 l, const Weight& lambda) {
  if (!lambda.dominant()) return false;
  return datum.pair(lambda + datum.rho(), datum.highest_root()) < l;
}

bool in_closed_natural_alcove(const RootDatum& datum, i64 l, const Weight& lambda) {
  if (!lambda.dominant()) return false;
  return datum.pair(lambda, datum.highest_root()) <= l;
}

namespace {

constexpr i64 kMaxFoldSteps = 10000000;

std::optional<SignedWeight> fold_shifted_impl(
    const RootDatum& datum, i64 l, const Weight& lambda,
    const std::function<int(const std::vector<int>&)>* pick) {
  const int n = datum.rank();
  require(lambda.rank() == n, ErrorKind::InvalidArgument, "rank mismatch");
  Weight nu = lambda + datum.rho();
  const Weight theta_w = datum.root_as_weight(datum.highest_root());
  int sign = 1;
  std::vector<int> moves;
  for (i64 step = 0;; ++step) {
    require(step < kMaxFoldSteps, ErrorKind::Internal, "affine fold did not terminate");
    moves.clear();
    for (int i = 0; i < n; ++i)
      if (nu.c[i] < 0) moves.push_back(i + 1);
    const i64 level = datum.pair(nu, datum.highest_root());
    if (level > l) moves.push_back(0);
    if (moves.empty()) break;
    int chosen = moves.front();
    if (pick != nullptr) {
      chosen = (*pick)(moves);
      require(std::find(moves.begin(), moves.end(), chosen) != moves.end(),
              ErrorKind::InvalidArgument, "move picker returned an inapplicable move");
    }
    if (chosen == 0) {
      const i64 excess = level - l;
      for (int j = 0; j < n; ++j) nu.c[j] -= excess * theta_w.c[j];
    } else {
      nu = apply_simple(datum, chosen, nu);
    }
    sign = -sign;
  }
  for (int i = 0; i < n; ++i)
    if (nu.c[i] == 0) return std::nullopt;
  if (datum.pair(nu, datum.highest_root()) == l) return std::nullopt;
  return SignedWeight{nu - datum.rho(), sign};
}

}  // namespace

std::optional<SignedWeight> fold_shifted_affine(const RootDatum& datum, i64 l,
                                                const Weight& lambda) {
  return fold_shifted_impl(datum, l, lambda, nullptr);
}

std::optional<SignedWeight> fold_shifted_affine_order(
    const RootDatum& datum, i64 l, const Weight& lambda,
    const std::function<int(const std::vector<int>&)>& pick) {
  return fold_shifted_impl(datum, l, lambda, &pick);
}

Weight reduce_mod_lP(const Weight& lambda, i64 l) {
  require(l >= 1, ErrorKind::InvalidArgument, "modulus must be positive");
  Weight out = lambda;
  for (i64& c : out.c) {
    c %= l;
    if (c < 0) c += l;
  }
  return out;
}

namespace {

// Orbit of a canonical lift under `step` followed by reduction mod lP.
std::set<Weight, WeightOrder> reduced_orbit(
    const RootDatum& datum, i64 l, const Weight& start,
    const std::function<Weight(int, const Weight&)>& step) {
  std::set<Weight, WeightOrder> orbit;
  std::deque<Weight> queue;
  orbit.insert(start);
  queue.push_back(start);
  const int n = datum.rank();
  while (!queue.empty()) {
    Weight w = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      Weight img = reduce_mod_lP(step(i, w), l);
      if (orbit.insert(img).second) queue.push_back(img);
    }
  }
  return orbit;
}

Weight natural_step(const RootDatum& datum, int i, const Weight& w) {
  return apply_simple(datum, i, w);
}

Weight bullet_step(const RootDatum& datum, int i, const Weight& w) {
  return apply_simple(datum, i, w + datum.rho()) - datum.rho();
}

// Representative rule: smallest member (by coordinate sum, then
// lexicographic) inside the open alcove; failing that, smallest inside the
// closed natural simplex; failing that, smallest of the whole orbit.  The
// fallbacks are required in practice — e.g. A2 at l=5 has a natural orbit
// disjoint from the open alcove, and the Steinberg weight is a fixed point
// far outside it.
Weight select_representative(const RootDatum& datum, i64 l,
                             const std::set<Weight, WeightOrder>& orbit,
                             bool* outside_open_alcove) {
  if (outside_open_alcove != nullptr) *outside_open_alcove = false;
  for (const Weight& w : orbit)
    if (in_open_alcove(datum, l, w)) return w;
  if (outside_open_alcove != nullptr) *outside_open_alcove = true;
  for (const Weight& w : orbit)
    if (in_closed_natural_alcove(datum, l, w)) return w;
  return *orbit.begin();
}

}  // namespace

Weight fold_natural(const RootDatum& datum, i64 l, const Weight& lambda) {
  validate_l(datum, l);
  Weight start = reduce_mod_lP(lambda, l);
  auto orbit = reduced_orbit(datum, l, start,
                             [&](int i, const Weight& w) { return natural_step(datum, i, w); });
  return select_representative(datum, l, orbit, nullptr);
}

Weight fold_bullet(const RootDatum& datum, i64 l, const Weight& lambda) {
  validate_l(datum, l);
  require(reduce_mod_lP(lambda, l) == lambda, ErrorKind::Validation,
          "fold_bullet expects a canonical lift with coordinates in [0, l-1]");
  auto orbit = reduced_orbit(datum, l, lambda,
                             [&](int i, const Weight& w) { return bullet_step(datum, i, w); });
  return select_representative(datum, l, orbit, nullptr);
}

i64 Domains::index_of(const Weight& canonical) const {
  i64 idx = 0;
  i64 scale = 1;
  for (i64 c : canonical.c) {
    require(c >= 0 && c < l, ErrorKind::InvalidArgument,
            "weight is not a canonical lift with coordinates in [0, l-1]");
    idx += c * scale;
    scale *= l;
  }
  return idx;
}

Domains enumerate_domains(const RootDatum& datum, i64 l, i64 size_bound) {
  validate_l(datum, l);
  const int n = datum.rank();
  Int total_big = 1;
  for (int i = 0; i < n; ++i) total_big *= Int(static_cast<long>(l));
  require(total_big <= Int(static_cast<long>(size_bound)), ErrorKind::SizeBound,
          "l^rank = " + to_decimal(total_big) + " exceeds the size bound " +
              std::to_string(size_bound));
  const i64 total = to_i64(total_big);

  Domains dom;
  dom.l = l;
  dom.P_l.reserve(total);
  for (i64 idx = 0; idx < total; ++idx) {
    Weight w = Weight::zero(n);
    i64 rem = idx;
    for (int i = 0; i < n; ++i) {
      w.c[i] = rem % l;
      rem /= l;
    }
    dom.P_l.push_back(std::move(w));
  }

  struct Sweep {
    std::vector<Weight> reps;
    std::vector<i64> orbit_sizes;
    std::vector<std::int32_t> assign;
    i64 fallback_count = 0;
  };
  auto sweep = [&](const std::function<Weight(int, const Weight&)>& step,
                   bool count_fallbacks) {
    Sweep s;
    s.assign.assign(total, -1);
    for (i64 idx = 0; idx < total; ++idx) {
      if (s.assign[idx] >= 0) continue;
      auto orbit = reduced_orbit(datum, l, dom.P_l[idx], step);
      bool fallback = false;
      Weight rep = select_representative(datum, l, orbit, &fallback);
      if (fallback && count_fallbacks) s.fallback_count += 1;
      const auto pos = static_cast<std::int32_t>(s.reps.size());
      s.reps.push_back(rep);
      s.orbit_sizes.push_back(static_cast<i64>(orbit.size()));
      for (const Weight& member : orbit) s.assign[dom.index_of(member)] = pos;
    }
    // Re-order representatives by the global weight order, keeping the
    // assignment table consistent.
    std::vector<std::int32_t> perm(s.reps.size());
    std::iota(perm.begin(), perm.end(), 0);
    WeightOrder less;
    std::sort(perm.begin(), perm.end(), [&](std::int32_t a, std::int32_t b) {
      return less(s.reps[a], s.reps[b]);
    });
    std::vector<std::int32_t> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<std::int32_t>(i);
    Sweep out;
    out.fallback_count = s.fallback_count;
    out.reps.reserve(s.reps.size());
    out.orbit_sizes.reserve(s.reps.size());
    for (std::int32_t p : perm) {
      out.reps.push_back(s.reps[p]);
      out.orbit_sizes.push_back(s.orbit_sizes[p]);
    }
    out.assign.resize(total);
    for (i64 idx = 0; idx < total; ++idx) out.assign[idx] = inv[s.assign[idx]];
    return out;
  };

  Sweep nat = sweep([&](int i, const Weight& w) { return natural_step(datum, i, w); }, true);
  Sweep bul = sweep([&](int i, const Weight& w) { return bullet_step(datum, i, w); }, false);

  dom.Xhat = std::move(nat.reps);
  dom.natural_orbit_size = std::move(nat.orbit_sizes);
  dom.natural_rep = std::move(nat.assign);
  dom.xhat_outside_X = nat.fallback_count;
  dom.Xbar = std::move(bul.reps);
  dom.bullet_orbit_size = std::move(bul.orbit_sizes);
  dom.bullet_rep = std::move(bul.assign);

  for (size_t i = 0; i < dom.Xhat.size(); ++i)
    dom.xhat_index[dom.Xhat[i]] = static_cast<int>(i);
  for (size_t i = 0; i < dom.Xbar.size(); ++i)
    dom.xbar_index[dom.Xbar[i]] = static_cast<int>(i);

  for (const Weight& w : dom.P_l)
    if (in_open_alcove(datum, l, w)) dom.X.push_back(w);
  std::sort(dom.X.begin(), dom.X.end(), WeightOrder{});

  const i64 weyl = to_i64(datum.weyl_order());
  for (size_t i = 0; i < dom.Xbar.size(); ++i)
    if (dom.bullet_orbit_size[i] == weyl) dom.Xreg.push_back(dom.Xbar[i]);

  require(dom.Xhat.size() == dom.Xbar.size(), ErrorKind::Internal,
          "orbit counts of the natural and dot actions must agree");
  for (const Weight& w : dom.Xreg)
    require(in_open_alcove(datum, l, w), ErrorKind::Internal,
            "free-orbit representatives must lie in the open alcove");
  require(static_cast<i64>(dom.X.size()) % datum.cartan_det() == 0, ErrorKind::Internal,
          "|X| must be divisible by the index of connection");
  require(static_cast<i64>(dom.Xreg.size()) * datum.cartan_det() ==
              static_cast<i64>(dom.X.size()),
          ErrorKind::Internal, "|Xreg| must equal |X| / index of connection");
  return dom;
}

void for_each_dominant_weight(int rank, i64 bound,
                              const std::function<void(const Weight&)>& fn) {
  Weight w = Weight::zero(rank);
  std::function<void(int, i64)> rec = [&](int pos, i64 remaining) {
    if (pos == rank) {
      fn(w);
      return;
    }
    for (i64 v = 0; v <= remaining; ++v) {
      w.c[pos] = v;
      rec(pos + 1, remaining - v);
    }
    w.c[pos] = 0;
  };
  rec(0, bound);
}

StripReport strip_complement_check(const RootDatum& datum, i64 l, i64 height_bound) {
  validate_l(datum, l);
  StripReport report;
  const Weight rho = datum.rho();
  for_each_dominant_weight(datum.rank(), height_bound, [&](const Weight& lambda) {
    report.box_size += 1;
    Weight nu = lambda + rho;
    bool outside_all_strips = true;
    for (const RootVec& beta : datum.positive_roots())
      if (datum.pair(nu, beta) < l) {
        outside_all_strips = false;
        break;
      }
    bool in_translated_cone = true;
    for (i64 c : lambda.c)
      if (c < l - 1) {
        in_translated_cone = false;
        break;
      }
    if (outside_all_strips != in_translated_cone) {
      report.ok = false;
      if (report.counterexamples.size() < 10) report.counterexamples.push_back(lambda);
    }
  });
  report.corner_in_box = (l - 1) * datum.rank() <= height_bound;
  return report;
}

}  // namespace alcove
