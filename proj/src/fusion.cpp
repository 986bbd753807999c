#include "alcove/fusion.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "alcove/errors.hpp"
#include "alcove/parallel.hpp"
#include "alcove/qlinalg.hpp"

namespace alcove {

std::string to_string(TableKind kind) {
  return kind == TableKind::VR_MINUS ? "VR_MINUS" : "VR_PLUS";
}

TableKind table_kind_from_string(const std::string& s) {
  if (s == "VR_MINUS") return TableKind::VR_MINUS;
  if (s == "VR_PLUS") return TableKind::VR_PLUS;
  fail(ErrorKind::InvalidArgument, "unknown table kind: " + s);
}

Int FusionTable::constant(int i, int j, int k) const {
  if (i > j) std::swap(i, j);
  auto it = constants.find(std::array<int, 3>{i, j, k});
  return it == constants.end() ? Int(0) : it->second;
}

namespace {

// Structural checks every finished table must satisfy: positive integer
// entries, well-formed keys, and the zero weight acting as identity.
void verify_table(const FusionTable& t) {
  require(!t.basis.empty() && t.basis[0].is_zero(), ErrorKind::Internal,
          "table basis must start at the zero weight");
  const int n = static_cast<int>(t.basis.size());
  for (const auto& [key, v] : t.constants) {
    require(0 <= key[0] && key[0] <= key[1] && key[1] < n && 0 <= key[2] && key[2] < n,
            ErrorKind::Internal, "malformed structure-constant key");
    require(v > 0, ErrorKind::Internal, "structure constants must be positive");
  }
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      require(t.constant(0, j, k) == (j == k ? 1 : 0), ErrorKind::Internal,
              "zero weight is not an identity for the table");
}

bool is_natural_rep(const RootDatum& datum, i64 l, const Weight& w) {
  if (!w.dominant()) return false;
  for (i64 x : w.c)
    if (x >= l) return false;
  return fold_natural(datum, l, w) == w;
}

}  // namespace

std::map<Weight, Int, WeightOrder> vr_constants(const RootDatum& datum, i64 l,
                                                const Weight& lambda,
                                                const Weight& mu) {
  validate_l(datum, l);
  require(in_open_alcove(datum, l, lambda) && in_open_alcove(datum, l, mu),
          ErrorKind::InvalidArgument,
          "fusion arguments must lie in the open alcove");
  std::map<Weight, Int, WeightOrder> acc;
  for (const auto& [nu, c] : klimyk_product(datum, lambda, mu)) {
    auto folded = fold_shifted_affine(datum, l, nu);
    if (!folded) continue;
    acc[folded->rep] += folded->sign > 0 ? c : Int(-c);
  }
  for (auto it = acc.begin(); it != acc.end();) {
    if (it->second == 0) {
      it = acc.erase(it);
      continue;
    }
    require(it->second > 0, ErrorKind::Internal, "negative fusion constant");
    require(in_open_alcove(datum, l, it->first), ErrorKind::Internal,
            "fusion constant attached to a weight outside the open alcove");
    ++it;
  }
  return acc;
}

std::map<Weight, Int, WeightOrder> vrplus_constants(const RootDatum& datum, i64 l,
                                                    const Weight& lambda,
                                                    const Weight& mu) {
  validate_l(datum, l);
  require(is_natural_rep(datum, l, lambda) && is_natural_rep(datum, l, mu),
          ErrorKind::InvalidArgument,
          "arguments must be canonical natural-orbit representatives");
  SymElem prod = mul(datum, f_elem(lambda), f_elem(mu));
  // Identifying translates mod lP collapses each orbit sum f(nu) onto a
  // multiple of f(rep): the full W-sum of nu has |W_nu| copies of each orbit
  // element, so f(nu) descends to (|W_rep| / |W_nu|) f(rep).
  std::map<Weight, Rat, WeightOrder> acc;
  for (const auto& [nu, c] : prod.terms) {
    Weight rep = fold_natural(datum, l, nu);
    acc[rep] += c * Rat(stabilizer_order(datum, rep)) /
                Rat(stabilizer_order(datum, nu));
  }
  std::map<Weight, Int, WeightOrder> out;
  for (const auto& [w, n] : acc) {
    require(is_integer(n), ErrorKind::Internal,
            "orbit structure constant is not an integer");
    require(n > 0, ErrorKind::Internal, "nonpositive orbit structure constant");
    out[w] = Int(n.get_num());
  }
  return out;
}

FusionTable build_table(const RootDatum& datum, i64 l, TableKind kind,
                        bool parallel) {
  validate_l(datum, l);
  Domains dom = enumerate_domains(datum, l);

  FusionTable out;
  out.kind = kind;
  out.family = to_string(datum.family());
  out.rank = datum.rank();
  out.l = l;
  out.basis = kind == TableKind::VR_MINUS ? dom.X : dom.Xhat;

  const int n = static_cast<int>(out.basis.size());
  std::map<Weight, int, WeightOrder> bidx;
  for (int i = 0; i < n; ++i) bidx.emplace(out.basis[i], i);

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(n) * (n + 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<std::map<int, Int>> results(pairs.size());
  parallel_for(static_cast<i64>(pairs.size()), parallel, [&](i64 t) {
    const auto [i, j] = pairs[static_cast<size_t>(t)];
    std::map<int, Int>& row = results[static_cast<size_t>(t)];
    if (kind == TableKind::VR_MINUS) {
      for (const auto& [nu, c] : klimyk_product(datum, out.basis[i], out.basis[j])) {
        auto folded = fold_shifted_affine(datum, l, nu);
        if (!folded) continue;
        auto pos = bidx.find(folded->rep);
        require(pos != bidx.end(), ErrorKind::Internal,
                "alcove fold escaped the table basis");
        row[pos->second] += folded->sign > 0 ? c : Int(-c);
      }
      for (auto it = row.begin(); it != row.end();)
        it = it->second == 0 ? row.erase(it) : std::next(it);
    } else {
      SymElem prod = mul(datum, f_elem(out.basis[i]), f_elem(out.basis[j]));
      std::map<int, Rat> racc;
      for (const auto& [nu, c] : prod.terms) {
        i64 flat = dom.index_of(reduce_mod_lP(nu, l));
        int rep = dom.natural_rep[static_cast<size_t>(flat)];
        racc[rep] +=
            c *
            Rat(stabilizer_order(datum, out.basis[static_cast<size_t>(rep)])) /
            Rat(stabilizer_order(datum, nu));
      }
      for (const auto& [k, v] : racc) {
        require(is_integer(v), ErrorKind::Internal,
                "orbit structure constant is not an integer");
        row[k] = Int(v.get_num());
      }
    }
    for (const auto& [k, v] : row)
      require(v > 0, ErrorKind::Internal, "nonpositive structure constant");
  });

  for (size_t t = 0; t < pairs.size(); ++t)
    for (const auto& [k, v] : results[t])
      out.constants[std::array<int, 3>{pairs[t].first, pairs[t].second, k}] = v;

  verify_table(out);
  return out;
}

FusionTable build_table_serial(const RootDatum& datum, i64 l, TableKind kind) {
  validate_l(datum, l);
  Domains dom = enumerate_domains(datum, l);

  FusionTable out;
  out.kind = kind;
  out.family = to_string(datum.family());
  out.rank = datum.rank();
  out.l = l;
  out.basis = kind == TableKind::VR_MINUS ? dom.X : dom.Xhat;

  const int n = static_cast<int>(out.basis.size());
  std::map<Weight, int, WeightOrder> bidx;
  for (int i = 0; i < n; ++i) bidx.emplace(out.basis[i], i);

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      auto cmap = kind == TableKind::VR_MINUS
                      ? vr_constants(datum, l, out.basis[i], out.basis[j])
                      : vrplus_constants(datum, l, out.basis[i], out.basis[j]);
      for (const auto& [w, c] : cmap)
        out.constants[std::array<int, 3>{i, j, bidx.at(w)}] = c;
    }

  verify_table(out);
  return out;
}

bool table_associative(const FusionTable& table, i64 max_quadruples, unsigned seed) {
  const int n = static_cast<int>(table.basis.size());
  auto check = [&](int i, int j, int m, int p) {
    Int left = 0, right = 0;
    for (int k = 0; k < n; ++k) {
      Int a = table.constant(i, j, k);
      if (a != 0) left += a * table.constant(k, m, p);
      Int b = table.constant(j, m, k);
      if (b != 0) right += b * table.constant(i, k, p);
    }
    return left == right;
  };
  if (max_quadruples <= 0) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int m = 0; m < n; ++m)
          for (int p = 0; p < n; ++p)
            if (!check(i, j, m, p)) return false;
    return true;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pickidx(0, n - 1);
  for (i64 t = 0; t < max_quadruples; ++t)
    if (!check(pickidx(rng), pickidx(rng), pickidx(rng), pickidx(rng))) return false;
  return true;
}

std::vector<RestrictedElem> pr_basis(const RootDatum& datum, i64 l) {
  validate_l(datum, l);
  Domains dom = enumerate_domains(datum, l);
  SymElem st = steinberg(datum, l);
  std::vector<RestrictedElem> out(dom.Xhat.size());
  parallel_for(static_cast<i64>(dom.Xhat.size()), true, [&](i64 t) {
    out[static_cast<size_t>(t)] = normal_form(
        datum, l, mul(datum, st, f_elem(dom.Xhat[static_cast<size_t>(t)])));
  });
  return out;
}

namespace {

PrProductReport check_pr_product_impl(const RootDatum& datum, i64 l,
                                      const Domains& dom,
                                      const std::vector<RestrictedElem>& projectives,
                                      const RestrictedElem& steinberg_bar, int i,
                                      int j) {
  PrProductReport rep;
  rep.lambda = dom.Xhat[static_cast<size_t>(i)];
  rep.mu = dom.Xhat[static_cast<size_t>(j)];
  rep.n = vrplus_constants(datum, l, rep.lambda, rep.mu);
  rep.lhs = rmul(datum, projectives[static_cast<size_t>(i)],
                 projectives[static_cast<size_t>(j)]);
  RestrictedElem combo;
  combo.l = l;
  for (const auto& [nu, c] : rep.n) {
    auto pos = dom.xhat_index.find(nu);
    require(pos != dom.xhat_index.end(), ErrorKind::Internal,
            "orbit fold escaped the representative list");
    combo = rest_add(combo,
                     rest_scale(Rat(c), projectives[static_cast<size_t>(pos->second)]));
  }
  rep.rhs = rmul(datum, steinberg_bar, combo);
  rep.ok = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace

PrProductReport check_pr_product(const RootDatum& datum, i64 l,
                                 const Weight& lambda, const Weight& mu) {
  validate_l(datum, l);
  require(is_natural_rep(datum, l, lambda) && is_natural_rep(datum, l, mu),
          ErrorKind::InvalidArgument,
          "arguments must be canonical natural-orbit representatives");
  Domains dom = enumerate_domains(datum, l);
  std::vector<RestrictedElem> projectives = pr_basis(datum, l);
  RestrictedElem steinberg_bar = normal_form(datum, l, steinberg(datum, l));
  return check_pr_product_impl(datum, l, dom, projectives, steinberg_bar,
                               dom.xhat_index.at(lambda), dom.xhat_index.at(mu));
}

PrProductSummary check_pr_product_all(const RootDatum& datum, i64 l, bool parallel) {
  validate_l(datum, l);
  Domains dom = enumerate_domains(datum, l);
  std::vector<RestrictedElem> projectives = pr_basis(datum, l);
  RestrictedElem steinberg_bar = normal_form(datum, l, steinberg(datum, l));

  const int n = static_cast<int>(dom.Xhat.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<PrProductReport> reports(pairs.size());
  parallel_for(static_cast<i64>(pairs.size()), parallel, [&](i64 t) {
    reports[static_cast<size_t>(t)] =
        check_pr_product_impl(datum, l, dom, projectives, steinberg_bar,
                              pairs[static_cast<size_t>(t)].first,
                              pairs[static_cast<size_t>(t)].second);
  });

  PrProductSummary summary;
  summary.pairs = static_cast<i64>(pairs.size());
  for (auto& rep : reports)
    if (!rep.ok) {
      summary.ok = false;
      summary.failures.push_back(std::move(rep));
    }
  return summary;
}

ThmPrReport check_thm_pr(const RootDatum& datum, i64 l, const Weight& lambda,
                         const Weight& mu) {
  require(l >= 1, ErrorKind::InvalidArgument, "l must be positive");
  ThmPrReport rep;
  for (const RootVec& beta : datum.positive_roots())
    if (datum.pair(mu, beta) == 0) {
      rep.singular_mu = true;
      break;
    }

  const Weight xi = lambda + datum.rho() - l * mu;
  const Int stab = stabilizer_order(datum, xi);
  const Weight shift = l * mu - datum.rho();

  SymElem sum;
  for (const Weight& eta : weyl_orbit(datum, xi))
    sum = sym_add(sum, chi_signed(datum, shift + eta));
  rep.lhs = sym_scale(Rat(stab), sum);

  SymElem factor = chi_signed(datum, shift);
  rep.rhs = sym_scale(Rat(stab),
                      mul(datum, factor, f_elem(dominant_rep(datum, xi))));
  rep.rhs_printed =
      mul(datum, factor, f_elem(dominant_rep(datum, lambda - l * mu)));

  rep.ok = rep.lhs == rep.rhs && (!rep.singular_mu || rep.lhs.zero());
  rep.printed_form_matches = rep.lhs == rep.rhs_printed;
  return rep;
}

ThmPrBoxReport check_thm_pr_box(const RootDatum& datum, i64 l, i64 lambda_bound,
                                i64 mu_bound) {
  ThmPrBoxReport box;
  std::vector<Weight> mus;
  for_each_dominant_weight(datum.rank(), mu_bound,
                           [&](const Weight& mu) { mus.push_back(mu); });
  for_each_dominant_weight(datum.rank(), lambda_bound, [&](const Weight& lambda) {
    for (const Weight& mu : mus) {
      ThmPrReport rep = check_thm_pr(datum, l, lambda, mu);
      ++box.cases;
      if (!rep.ok) {
        box.ok = false;
        if (box.failures.size() < 50) box.failures.emplace_back(lambda, mu);
      }
      if (!rep.printed_form_matches) {
        ++box.printed_failure_count;
        if (box.printed_failures.size() < 50)
          box.printed_failures.emplace_back(lambda, mu);
      }
    }
  });
  return box;
}

CodimReport check_bJ_codim(const RootDatum& datum, i64 l) {
  validate_l(datum, l);
  Domains dom = enumerate_domains(datum, l);
  const int rank_n = datum.rank();
  const i64 dimension = restricted_dimension(rank_n, l);

  std::vector<std::vector<Rat>> rows;
  rows.reserve(dom.P_l.size() * datum.positive_roots().size());
  std::vector<RestrictedElem> chis(dom.P_l.size());
  parallel_for(static_cast<i64>(dom.P_l.size()), true, [&](i64 t) {
    chis[static_cast<size_t>(t)] = normal_form(
        datum, l, chi_elem(datum, dom.P_l[static_cast<size_t>(t)]));
  });
  for (size_t t = 0; t < dom.P_l.size(); ++t) {
    const Weight& la = dom.P_l[t];
    for (const RootVec& beta : datum.positive_roots()) {
      Weight reflected =
          apply_root_reflection(datum, beta, la + datum.rho()) - datum.rho();
      i64 partner = dom.index_of(reduce_mod_lP(reflected, l));
      RestrictedElem gen = rest_add(chis[t], chis[static_cast<size_t>(partner)]);
      rows.push_back(dense_coords(gen, rank_n));
    }
  }

  CodimReport rep;
  rep.dim = rank_of_rows(rows, static_cast<int>(dimension));
  rep.codim = dimension - rep.dim;
  rep.expected_codim = static_cast<i64>(dom.Xreg.size());
  rep.ok = rep.codim == rep.expected_codim;
  return rep;
}

SocleReport check_socle(const RootDatum& datum, i64 l) {
  validate_l(datum, l);
  Domains dom = enumerate_domains(datum, l);
  std::vector<RestrictedElem> rad = radical_basis(datum, l);
  std::vector<RestrictedElem> ann = annihilator(datum, l, rad);
  std::vector<RestrictedElem> projectives = pr_basis(datum, l);

  SocleReport rep;
  rep.annihilator_dim = static_cast<i64>(ann.size());
  std::vector<std::vector<Rat>> pr_rows;
  pr_rows.reserve(projectives.size());
  for (const RestrictedElem& p : projectives)
    pr_rows.push_back(dense_coords(p, datum.rank()));
  rep.pr_span_dim =
      rank_of_rows(pr_rows, static_cast<int>(restricted_dimension(datum.rank(), l)));
  rep.spans_equal = same_restricted_span(ann, projectives, datum.rank());
  rep.expected_dim = static_cast<i64>(dom.Xbar.size());
  rep.ok = rep.spans_equal && rep.annihilator_dim == rep.expected_dim &&
           rep.pr_span_dim == rep.expected_dim;
  return rep;
}

ProporReport check_propor(const RootDatum& datum, i64 l) {
  validate_l(datum, l);
  Domains dom = enumerate_domains(datum, l);
  SymElem st = steinberg(datum, l);

  // Proportional reductions are compared after weighting each one by the
  // stabilizer order of its weight: the Steinberg character times the full
  // W-sum |W_la| f(la) is what stays constant along an orbit, while the plain
  // orbit sums f(la) pick up the inverse stabilizer factors.
  const i64 count = static_cast<i64>(dom.P_l.size());
  std::vector<RestrictedElem> reduced(static_cast<size_t>(count));
  parallel_for(count, true, [&](i64 t) {
    const Weight& la = dom.P_l[static_cast<size_t>(t)];
    reduced[static_cast<size_t>(t)] =
        rest_scale(Rat(stabilizer_order(datum, la)),
                   normal_form(datum, l, mul(datum, st, f_elem(la))));
  });

  ProporReport rep;
  for (i64 t = 0; t < count; ++t) {
    const Weight& la = dom.P_l[static_cast<size_t>(t)];
    for (int i = 1; i <= datum.rank(); ++i) {
      Weight moved = reduce_mod_lP(apply_simple(datum, i, la), l);
      i64 partner = dom.index_of(moved);
      ++rep.cases;
      if (!(reduced[static_cast<size_t>(t)] ==
            reduced[static_cast<size_t>(partner)])) {
        rep.ok = false;
        if (rep.failures.size() < 50) rep.failures.emplace_back(la, i);
      }
    }
  }
  return rep;
}

}  // namespace alcove
