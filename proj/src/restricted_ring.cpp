#include "alcove/restricted_ring.hpp"

#include <algorithm>
#include <sstream>

#include "alcove/affine.hpp"
#include "alcove/errors.hpp"
#include "alcove/parallel.hpp"
#include "alcove/qlinalg.hpp"
#include "alcove/weyl.hpp"

namespace alcove {

void RestrictedElem::add_term(const Weight& lambda, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = coords.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coords.erase(it);
  }
}

RestrictedElem rest_add(const RestrictedElem& a, const RestrictedElem& b) {
  require(a.l == b.l, ErrorKind::InvalidArgument, "mismatched l");
  RestrictedElem out = a;
  for (const auto& [w, c] : b.coords) out.add_term(w, c);
  return out;
}

RestrictedElem rest_sub(const RestrictedElem& a, const RestrictedElem& b) {
  require(a.l == b.l, ErrorKind::InvalidArgument, "mismatched l");
  RestrictedElem out = a;
  for (const auto& [w, c] : b.coords) out.add_term(w, -c);
  return out;
}

RestrictedElem rest_scale(const Rat& c, const RestrictedElem& a) {
  RestrictedElem out;
  out.l = a.l;
  if (c == 0) return out;
  for (const auto& [w, coeff] : a.coords) out.coords.emplace(w, c * coeff);
  return out;
}

std::string to_string(const RestrictedElem& a) {
  if (a.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : a.coords) {
    if (!first) os << " + ";
    first = false;
    os << to_decimal(c) << "*[f" << to_string(w) << "]";
  }
  return os.str();
}

namespace {

bool in_range(const Weight& w, i64 l) {
  for (i64 c : w.c)
    if (c < 0 || c >= l) return false;
  return true;
}

i64 index_of_weight(const Weight& w, i64 l) {
  i64 idx = 0, scale = 1;
  for (i64 c : w.c) {
    idx += c * scale;
    scale *= l;
  }
  return idx;
}

Weight weight_of_index(i64 idx, i64 l, int rank) {
  Weight w = Weight::zero(rank);
  for (int i = 0; i < rank; ++i) {
    w.c[i] = idx % l;
    idx /= l;
  }
  return w;
}

}  // namespace

RestrictedElem rest_basis_elem(i64 l, const Weight& lambda) {
  require(in_range(lambda, l), ErrorKind::Validation,
          "weight " + to_string(lambda) + " is not restricted for l=" + std::to_string(l));
  RestrictedElem out;
  out.l = l;
  out.coords.emplace(lambda, Rat(1));
  return out;
}

std::pair<Weight, Weight> split_weight(const Weight& lambda, i64 l) {
  require(lambda.dominant(), ErrorKind::Validation,
          "split_weight requires a dominant weight");
  require(l >= 1, ErrorKind::InvalidArgument, "l must be positive");
  Weight low = Weight::zero(lambda.rank());
  Weight high = Weight::zero(lambda.rank());
  for (int i = 0; i < lambda.rank(); ++i) {
    low.c[i] = lambda.c[i] % l;
    high.c[i] = lambda.c[i] / l;
  }
  return {low, high};
}

RestrictedElem normal_form(const RootDatum& datum, i64 l, const SymElem& a) {
  validate_l(datum, l);
  std::map<Weight, Rat, WeightOrder> work = a.terms;
  for (;;) {
    // Largest out-of-range term, scanning from the top of the global order.
    auto chosen = work.rend();
    for (auto it = work.rbegin(); it != work.rend(); ++it) {
      if (!in_range(it->first, l)) {
        chosen = it;
        break;
      }
    }
    if (chosen == work.rend()) break;
    const Weight lambda = chosen->first;
    const Rat c = chosen->second;
    work.erase(std::next(chosen).base());

    auto [low, high] = split_weight(lambda, l);
    SymElem prod = mul(datum, f_elem(low), f_elem(l * high));
    auto top_it = prod.terms.find(lambda);
    require(top_it != prod.terms.end() && top_it->second >= 1, ErrorKind::Internal,
            "reduction product must contain the rewritten term");
    const Rat c_top = top_it->second;
    const Rat scale = c / c_top;
    const Rat orbit_size(static_cast<long>(weyl_orbit(datum, high).size()));

    auto add = [&work](const Weight& w, const Rat& delta) {
      if (delta == 0) return;
      auto [it, inserted] = work.emplace(w, delta);
      if (!inserted) {
        it->second += delta;
        if (it->second == 0) work.erase(it);
      }
    };
    add(low, scale * orbit_size);
    for (const auto& [nu, q] : prod.terms) {
      if (nu == lambda) continue;
      add(nu, -scale * q);
    }
  }
  RestrictedElem out;
  out.l = l;
  out.coords = std::move(work);
  return out;
}

SymElem lift(const RestrictedElem& a) {
  SymElem out;
  out.terms = a.coords;
  return out;
}

RestrictedElem rmul(const RootDatum& datum, const RestrictedElem& x,
                    const RestrictedElem& y) {
  require(x.l == y.l, ErrorKind::InvalidArgument,
          "rmul requires matching l (got " + std::to_string(x.l) + " and " +
              std::to_string(y.l) + ")");
  return normal_form(datum, x.l, mul(datum, lift(x), lift(y)));
}

std::vector<RestrictedElem> radical_basis(const RootDatum& datum, i64 l) {
  validate_l(datum, l);
  const int n = datum.rank();
  const i64 N = restricted_dimension(n, l);

  // Count natural orbits with a plain sweep (no representative selection).
  i64 orbit_count = 0;
  {
    std::vector<char> seen(N, 0);
    for (i64 idx = 0; idx < N; ++idx) {
      if (seen[idx]) continue;
      ++orbit_count;
      std::vector<i64> stack = {idx};
      seen[idx] = 1;
      while (!stack.empty()) {
        const i64 cur = stack.back();
        stack.pop_back();
        const Weight w = weight_of_index(cur, l, n);
        for (int i = 1; i <= n; ++i) {
          const i64 img = index_of_weight(reduce_mod_lP(apply_simple(datum, i, w), l), l);
          if (!seen[img]) {
            seen[img] = 1;
            stack.push_back(img);
          }
        }
      }
    }
  }

  // Generators pair the full W-sums |W_w| f(w) of weights that the natural
  // action identifies; the plain orbit-sum difference f(w) - f(img) is not
  // nilpotent when the two stabilizers differ.
  std::vector<std::vector<Rat>> rows;
  for (i64 idx = 0; idx < N; ++idx) {
    const Weight w = weight_of_index(idx, l, n);
    for (int i = 1; i <= n; ++i) {
      const Weight img = reduce_mod_lP(apply_simple(datum, i, w), l);
      const i64 img_idx = index_of_weight(img, l);
      if (img_idx == idx) continue;
      std::vector<Rat> row(N, Rat(0));
      row[idx] = Rat(stabilizer_order(datum, w));
      row[img_idx] = -Rat(stabilizer_order(datum, img));
      rows.push_back(std::move(row));
    }
  }
  std::vector<RestrictedElem> basis;
  if (rows.empty()) {
    require(orbit_count == N, ErrorKind::Internal, "radical dimension mismatch");
    return basis;
  }
  std::vector<int> pivots;
  QMatrix reduced = rref(from_rows(rows, static_cast<int>(N)), &pivots);
  for (size_t r = 0; r < pivots.size(); ++r) {
    RestrictedElem e;
    e.l = l;
    for (i64 c = 0; c < N; ++c)
      if (reduced.at(static_cast<int>(r), static_cast<int>(c)) != 0)
        e.coords.emplace(weight_of_index(c, l, n),
                         reduced.at(static_cast<int>(r), static_cast<int>(c)));
    basis.push_back(std::move(e));
  }
  require(static_cast<i64>(basis.size()) == N - orbit_count, ErrorKind::Internal,
          "radical dimension must be l^rank minus the natural orbit count");
  return basis;
}

std::vector<RestrictedElem> annihilator(const RootDatum& datum, i64 l,
                                        const std::vector<RestrictedElem>& generators) {
  validate_l(datum, l);
  const int n = datum.rank();
  const i64 N = restricted_dimension(n, l);
  if (generators.empty()) {
    std::vector<Weight> all;
    for (i64 idx = 0; idx < N; ++idx) all.push_back(weight_of_index(idx, l, n));
    std::sort(all.begin(), all.end(), WeightOrder{});
    std::vector<RestrictedElem> out;
    for (const Weight& w : all) out.push_back(rest_basis_elem(l, w));
    return out;
  }
  for (const auto& g : generators)
    require(g.l == l, ErrorKind::InvalidArgument, "generator has mismatched l");

  const auto n_gen = static_cast<i64>(generators.size());
  QMatrix stacked(static_cast<int>(n_gen * N), static_cast<int>(N));
  parallel_for(N, true, [&](i64 col) {
    const RestrictedElem basis_col = rest_basis_elem(l, weight_of_index(col, l, n));
    for (i64 g = 0; g < n_gen; ++g) {
      const RestrictedElem prod = rmul(datum, basis_col, generators[g]);
      for (const auto& [w, c] : prod.coords)
        stacked.at(static_cast<int>(g * N + index_of_weight(w, l)),
                   static_cast<int>(col)) = c;
    }
  });

  std::vector<std::vector<Rat>> null = nullspace_basis(stacked);
  std::vector<RestrictedElem> out;
  for (const auto& vec : null) {
    RestrictedElem e;
    e.l = l;
    for (i64 idx = 0; idx < N; ++idx)
      if (vec[idx] != 0) e.coords.emplace(weight_of_index(idx, l, n), vec[idx]);
    out.push_back(std::move(e));
  }
  return out;
}

std::map<Weight, std::vector<Weight>, WeightOrder> blocks(const RootDatum& datum, i64 l) {
  Domains dom = enumerate_domains(datum, l);
  std::map<Weight, std::vector<Weight>, WeightOrder> out;
  for (size_t idx = 0; idx < dom.P_l.size(); ++idx)
    out[dom.Xbar[dom.bullet_rep[idx]]].push_back(dom.P_l[idx]);
  for (auto& [rep, members] : out) std::sort(members.begin(), members.end(), WeightOrder{});
  return out;
}

std::vector<Rat> dense_coords(const RestrictedElem& a, int rank) {
  const i64 N = restricted_dimension(rank, a.l);
  std::vector<Rat> out(N, Rat(0));
  for (const auto& [w, c] : a.coords) {
    require(in_range(w, a.l), ErrorKind::InvalidArgument,
            "coordinate key outside the restricted range");
    out[index_of_weight(w, a.l)] = c;
  }
  return out;
}

bool same_restricted_span(const std::vector<RestrictedElem>& a,
                          const std::vector<RestrictedElem>& b, int rank) {
  std::vector<std::vector<Rat>> rows_a, rows_b;
  for (const auto& e : a) rows_a.push_back(dense_coords(e, rank));
  for (const auto& e : b) rows_b.push_back(dense_coords(e, rank));
  if (rows_a.empty() && rows_b.empty()) return true;
  const size_t cols = !rows_a.empty() ? rows_a.front().size() : rows_b.front().size();
  return same_span(rows_a, rows_b, cols);
}

i64 restricted_dimension(int rank, i64 l) {
  Int total = 1;
  for (int i = 0; i < rank; ++i) total *= Int(static_cast<long>(l));
  return to_i64(total);
}

}  // namespace alcove
