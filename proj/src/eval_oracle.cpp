#include "alcove/eval_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "alcove/affine.hpp"
#include "alcove/errors.hpp"
#include "alcove/weyl.hpp"

namespace alcove {

namespace {

using cdouble = std::complex<double>;

// exp(2 pi i x) for an exact rational x, reduced mod 1 before conversion.
cdouble unit_exponential(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  Rat frac = x - Rat(q);
  return std::polar(1.0, 2.0 * std::numbers::pi_v<double> * frac.get_d());
}

// sum over the orbit of nu of det(w) exp(2 pi i <w nu, zeta> / l); nu must be
// regular so each orbit element carries a well-defined sign.
cdouble signed_orbit_sum(const RootDatum& datum, const Weight& nu,
                         const Weight& zeta, i64 l) {
  cdouble sum = 0.0;
  for (const Weight& eta : weyl_orbit(datum, nu)) {
    auto folded = dominant_shifted(datum, eta - datum.rho());
    require(folded.has_value(), ErrorKind::Internal,
            "signed orbit sum over a singular weight");
    sum += static_cast<double>(folded->sign) *
           unit_exponential(datum.pair_weights(eta, zeta) / l);
  }
  return sum;
}

void finish_table(EvalTable& table) {
  Eigen::MatrixXcd normed = table.values;
  for (Eigen::Index p = 0; p < normed.rows(); ++p) {
    double norm = normed.row(p).norm();
    require(norm > 1e-12, ErrorKind::Internal, "evaluation row is numerically zero");
    normed.row(p) /= norm;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(normed);
  table.min_singular = svd.singularValues().minCoeff();
  require(table.min_singular > 1e-6, ErrorKind::Internal,
          "evaluation table is numerically singular");
}

cdouble evaluate_at_point(const RootDatum& datum, const EvalTable& table,
                          const SymElem& a, size_t point) {
  if (table.kind == TableKind::VR_MINUS)
    return eval_at_weight_point(datum, a,
                                table.point_weights[point] + datum.rho(), table.l);
  return eval_at(datum, a, table.point_roots[point], table.l);
}

// Spot-check that the characters kill sampled generators of the fusion
// ideal: chi(lambda) plus chi of an affinely reflected partner must evaluate
// to zero at every point.
void check_ideal_annihilation(const RootDatum& datum, const EvalTable& table) {
  std::mt19937 rng(20250814u);
  std::uniform_int_distribution<i64> coord(0, 2 * table.l - 1);
  std::uniform_int_distribution<size_t> rootpick(0,
                                                 datum.positive_roots().size() - 1);
  std::uniform_int_distribution<i64> shift(0, 2);
  for (int s = 0; s < 10; ++s) {
    std::vector<i64> coords(static_cast<size_t>(datum.rank()));
    for (auto& x : coords) x = coord(rng);
    Weight lambda(coords);
    const RootVec& beta = datum.positive_roots()[rootpick(rng)];
    Weight partner = apply_root_reflection(datum, beta, lambda + datum.rho()) -
                     datum.rho() + (shift(rng) * table.l) * datum.root_as_weight(beta);
    SymElem first = chi_signed(datum, lambda);
    SymElem gen = sym_add(first, chi_signed(datum, partner));
    for (size_t p = 0; p < static_cast<size_t>(table.values.rows()); ++p) {
      double scale = 1.0 + std::abs(evaluate_at_point(datum, table, first, p));
      double err = std::abs(evaluate_at_point(datum, table, gen, p));
      require(err < 1e-9 * scale, ErrorKind::Internal,
              "evaluation points fail to annihilate the fusion ideal");
    }
  }
}

}  // namespace

EvalTable vr_eval_table(const RootDatum& datum, i64 l) {
  validate_l(datum, l);

  EvalTable table;
  table.kind = TableKind::VR_MINUS;
  table.l = l;
  for_each_dominant_weight(datum.rank(), l, [&](const Weight& w) {
    if (in_open_alcove(datum, l, w)) table.basis.push_back(w);
  });
  std::sort(table.basis.begin(), table.basis.end(), WeightOrder{});
  table.point_weights = table.basis;

  const int n = static_cast<int>(table.basis.size());
  table.values.resize(n, n);
  for (int p = 0; p < n; ++p) {
    const Weight zeta = table.point_weights[static_cast<size_t>(p)] + datum.rho();
    cdouble denom = signed_orbit_sum(datum, datum.rho(), zeta, l);
    require(std::abs(denom) > 1e-12, ErrorKind::Internal,
            "vanishing Weyl denominator at an interior point");
    for (int k = 0; k < n; ++k)
      table.values(p, k) =
          signed_orbit_sum(datum, table.basis[static_cast<size_t>(k)] + datum.rho(),
                           zeta, l) /
          denom;
  }

  finish_table(table);
  check_ideal_annihilation(datum, table);
  return table;
}

EvalTable vrplus_eval_table(const RootDatum& datum, i64 l) {
  validate_l(datum, l);
  Domains dom = enumerate_domains(datum, l);

  EvalTable table;
  table.kind = TableKind::VR_PLUS;
  table.l = l;
  table.basis = dom.Xhat;

  // Orbit representatives of (Z/l)^rank under the Weyl action on root
  // coordinates; the reflection s_i subtracts the i-th entry of C v from
  // coordinate i, everything taken mod l.
  const int rank_n = datum.rank();
  i64 total = 1;
  for (int i = 0; i < rank_n; ++i) total *= l;
  std::vector<char> seen(static_cast<size_t>(total), 0);
  auto flatten = [&](const std::vector<i64>& v) {
    i64 idx = 0;
    for (int i = rank_n - 1; i >= 0; --i) idx = idx * l + v[static_cast<size_t>(i)];
    return idx;
  };
  struct CoordOrder {
    bool operator()(const std::vector<i64>& a, const std::vector<i64>& b) const {
      i64 sa = 0, sb = 0;
      for (i64 x : a) sa += x;
      for (i64 x : b) sb += x;
      if (sa != sb) return sa < sb;
      return a < b;
    }
  };
  std::vector<i64> cursor(static_cast<size_t>(rank_n), 0);
  for (i64 flat = 0; flat < total; ++flat) {
    if (!seen[static_cast<size_t>(flat)]) {
      std::set<std::vector<i64>, CoordOrder> orbit;
      std::vector<std::vector<i64>> frontier{cursor};
      orbit.insert(cursor);
      seen[static_cast<size_t>(flat)] = 1;
      while (!frontier.empty()) {
        std::vector<i64> v = std::move(frontier.back());
        frontier.pop_back();
        for (int i = 0; i < rank_n; ++i) {
          std::vector<i64> next = v;
          i64 cv = 0;
          for (int j = 0; j < rank_n; ++j)
            cv += datum.cartan()[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                  v[static_cast<size_t>(j)];
          next[static_cast<size_t>(i)] =
              ((next[static_cast<size_t>(i)] - cv) % l + l) % l;
          if (orbit.insert(next).second) {
            seen[static_cast<size_t>(flatten(next))] = 1;
            frontier.push_back(next);
          }
        }
      }
      table.point_roots.emplace_back(*orbit.begin());
    }
    // advance mixed-radix cursor (coordinate 0 fastest)
    for (int i = 0; i < rank_n; ++i) {
      if (++cursor[static_cast<size_t>(i)] < l) break;
      cursor[static_cast<size_t>(i)] = 0;
    }
  }
  std::sort(table.point_roots.begin(), table.point_roots.end(),
            [](const RootVec& a, const RootVec& b) { return CoordOrder{}(a.c, b.c); });
  require(table.point_roots.size() == table.basis.size(), ErrorKind::Validation,
          "evaluation point count differs from the basis size (the level must "
          "be coprime to the connection index)");

  const int n = static_cast<int>(table.basis.size());
  table.values.resize(n, n);
  for (int p = 0; p < n; ++p)
    for (int k = 0; k < n; ++k)
      table.values(p, k) =
          eval_at(datum, f_elem(table.basis[static_cast<size_t>(k)]),
                  table.point_roots[static_cast<size_t>(p)], l);

  finish_table(table);
  return table;
}

namespace {

OracleConstants solve_pair(const Eigen::FullPivLU<Eigen::MatrixXcd>& lu,
                           const EvalTable& table, int i, int j) {
  const int n = static_cast<int>(table.basis.size());
  require(0 <= i && i < n && 0 <= j && j < n, ErrorKind::InvalidArgument,
          "basis index out of range");
  Eigen::VectorXcd rhs(table.values.rows());
  for (Eigen::Index p = 0; p < table.values.rows(); ++p)
    rhs(p) = table.values(p, i) * table.values(p, j);
  Eigen::VectorXcd sol = lu.solve(rhs);

  OracleConstants oc;
  for (int k = 0; k < n; ++k) {
    i64 rounded = std::llround(sol(k).real());
    oc.residual = std::max(
        oc.residual, std::abs(sol(k) - cdouble(static_cast<double>(rounded), 0.0)));
    if (rounded != 0) oc.n[k] = rounded;
  }
  oc.ok = oc.residual < 1e-6;
  return oc;
}

}  // namespace

OracleConstants constants_from_eval(const EvalTable& table, int i, int j) {
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(table.values);
  return solve_pair(lu, table, i, j);
}

FusionTable table_from_eval(const RootDatum& datum, const EvalTable& table) {
  FusionTable out;
  out.kind = table.kind;
  out.family = to_string(datum.family());
  out.rank = datum.rank();
  out.l = table.l;
  out.basis = table.basis;

  Eigen::FullPivLU<Eigen::MatrixXcd> lu(table.values);
  const int n = static_cast<int>(table.basis.size());
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      OracleConstants oc = solve_pair(lu, table, i, j);
      require(oc.ok, ErrorKind::Validation,
              "numerical structure constants are not close to integers");
      for (const auto& [k, v] : oc.n) {
        require(v > 0, ErrorKind::Validation,
                "numerical structure constant is negative");
        out.constants[std::array<int, 3>{i, j, k}] = Int(v);
      }
    }
  return out;
}

double oracle_hom_max_error(const RootDatum& datum, const EvalTable& table,
                            int samples, unsigned seed) {
  const int n = static_cast<int>(table.basis.size());
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pickidx(0, n - 1);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    int a = pickidx(rng), b = pickidx(rng);
    SymElem x, y;
    if (table.kind == TableKind::VR_MINUS) {
      x = chi_elem(datum, table.basis[static_cast<size_t>(a)]);
      y = chi_elem(datum, table.basis[static_cast<size_t>(b)]);
    } else {
      x = f_elem(table.basis[static_cast<size_t>(a)]);
      y = f_elem(table.basis[static_cast<size_t>(b)]);
    }
    SymElem prod = mul(datum, x, y);
    for (size_t p = 0; p < static_cast<size_t>(table.values.rows()); ++p) {
      cdouble lhs = evaluate_at_point(datum, table, prod, p);
      cdouble rhs = table.values(static_cast<Eigen::Index>(p), a) *
                    table.values(static_cast<Eigen::Index>(p), b);
      worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
    }
  }
  return worst;
}

}  // namespace alcove
