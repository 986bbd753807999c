#include "alcove/char_ring.hpp"

#include <cmath>
#include <sstream>
#include <unordered_map>

#include "alcove/affine.hpp"
#include "alcove/errors.hpp"
#include "alcove/weyl.hpp"

namespace alcove {

void SymElem::add_term(const Weight& lambda, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

SymElem sym_add(const SymElem& a, const SymElem& b) {
  SymElem out = a;
  for (const auto& [w, c] : b.terms) out.add_term(w, c);
  return out;
}

SymElem sym_sub(const SymElem& a, const SymElem& b) {
  SymElem out = a;
  for (const auto& [w, c] : b.terms) out.add_term(w, -c);
  return out;
}

SymElem sym_scale(const Rat& c, const SymElem& a) {
  SymElem out;
  if (c == 0) return out;
  for (const auto& [w, coeff] : a.terms) out.terms.emplace(w, c * coeff);
  return out;
}

std::string to_string(const SymElem& a) {
  if (a.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : a.terms) {
    if (!first) os << " + ";
    first = false;
    os << to_decimal(c) << "*f" << to_string(w);
  }
  return os.str();
}

SymElem f_elem(const Weight& lambda) {
  require(lambda.dominant(), ErrorKind::Validation,
          "f_elem requires a dominant weight, got " + to_string(lambda));
  SymElem out;
  out.terms.emplace(lambda, Rat(1));
  return out;
}

SymElem chi_elem(const RootDatum& datum, const Weight& lambda) {
  require(lambda.dominant(), ErrorKind::Validation,
          "chi_elem requires a dominant weight, got " + to_string(lambda));
  SymElem out;
  for (const auto& [mu, m] : datum.weight_mults(lambda)) out.terms.emplace(mu, Rat(m));
  return out;
}

SymElem chi_signed(const RootDatum& datum, const Weight& lambda) {
  auto folded = dominant_shifted(datum, lambda);
  if (!folded) return SymElem{};
  SymElem out = chi_elem(datum, folded->rep);
  if (folded->sign < 0) out = sym_scale(Rat(-1), out);
  return out;
}

namespace {

// Whether every coefficient is an integer, and the L1 mass (sum of
// |coefficient| * orbit size) as an exact integer; used to decide whether the
// machine-word convolution path is safe.
bool integer_l1_mass(const RootDatum& datum, const SymElem& a, Int* mass) {
  *mass = 0;
  for (const auto& [w, c] : a.terms) {
    if (c.get_den() != 1) return false;
    Int abs_num = c.get_num() >= 0 ? c.get_num() : Int(-c.get_num());
    *mass += abs_num * Int(static_cast<long>(weyl_orbit(datum, w).size()));
  }
  return true;
}

// Convolution with 64-bit accumulators; valid when the total accumulated
// magnitude provably fits (callers check L1(a) * L1(b) against 2^62).
SymElem mul_int_fast(const RootDatum& datum, const SymElem& a, const SymElem& b) {
  const int n = datum.rank();
  std::unordered_map<Weight, i64, WeightHash, WeightEq> acc;
  acc.reserve(1024);
  std::vector<i64> sum(n);
  for (const auto& [wa, ca] : a.terms) {
    const auto& orbit_a = weyl_orbit(datum, wa);
    for (const auto& [wb, cb] : b.terms) {
      const auto& orbit_b = weyl_orbit(datum, wb);
      const i64 cc = mpz_get_si(ca.get_num().get_mpz_t()) *
                     mpz_get_si(cb.get_num().get_mpz_t());
      for (const Weight& ea : orbit_a) {
        for (const Weight& eb : orbit_b) {
          bool dominant = true;
          for (int r = 0; r < n; ++r) {
            const i64 s = ea.c[r] + eb.c[r];
            if (s < 0) {
              dominant = false;
              break;
            }
            sum[r] = s;
          }
          if (!dominant) continue;
          auto it = acc.find(sum);
          if (it != acc.end())
            it->second += cc;
          else
            acc.emplace(Weight(sum), cc);
        }
      }
    }
  }
  SymElem out;
  for (auto& [w, c] : acc)
    if (c != 0) out.terms.emplace(w, Rat(static_cast<long>(c)));
  return out;
}

SymElem mul_exact_slow(const RootDatum& datum, const SymElem& a, const SymElem& b) {
  const int n = datum.rank();
  SymElem out;
  std::vector<i64> sum(n);
  for (const auto& [wa, ca] : a.terms) {
    const auto& orbit_a = weyl_orbit(datum, wa);
    for (const auto& [wb, cb] : b.terms) {
      const auto& orbit_b = weyl_orbit(datum, wb);
      Rat cc = ca * cb;
      for (const Weight& ea : orbit_a) {
        for (const Weight& eb : orbit_b) {
          bool dominant = true;
          for (int r = 0; r < n; ++r) {
            const i64 s = ea.c[r] + eb.c[r];
            if (s < 0) {
              dominant = false;
              break;
            }
            sum[r] = s;
          }
          if (dominant) out.add_term(Weight(sum), cc);
        }
      }
    }
  }
  return out;
}

}  // namespace

SymElem mul(const RootDatum& datum, const SymElem& a, const SymElem& b) {
  if (a.zero() || b.zero()) return SymElem{};
  Int mass_a, mass_b;
  if (integer_l1_mass(datum, a, &mass_a) && integer_l1_mass(datum, b, &mass_b)) {
    static const Int kLimit = Int(1) << 62;
    if (mass_a * mass_b < kLimit) return mul_int_fast(datum, a, b);
  }
  return mul_exact_slow(datum, a, b);
}

std::map<Weight, Int, WeightOrder> klimyk_product(const RootDatum& datum,
                                                  const Weight& lambda,
                                                  const Weight& mu) {
  require(lambda.dominant() && mu.dominant(), ErrorKind::Validation,
          "klimyk_product requires dominant weights");
  std::map<Weight, Int, WeightOrder> out;
  for (const auto& [kappa, m] : datum.weight_mults(mu)) {
    for (const Weight& eta : weyl_orbit(datum, kappa)) {
      auto folded = dominant_shifted(datum, lambda + eta);
      if (!folded) continue;
      auto [it, inserted] = out.emplace(folded->rep, Int(0));
      if (folded->sign > 0)
        it->second += m;
      else
        it->second -= m;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    require(it->second >= 0, ErrorKind::Internal,
            "tensor decomposition produced a negative multiplicity");
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

SymElem steinberg(const RootDatum& datum, i64 l) {
  validate_l(datum, l);
  return chi_elem(datum, (l - 1) * datum.rho());
}

Rat value_at_one(const RootDatum& datum, const SymElem& a) {
  Rat total = 0;
  for (const auto& [w, c] : a.terms)
    total += c * Rat(static_cast<long>(weyl_orbit(datum, w).size()));
  return total;
}

std::complex<double> eval_at(const RootDatum& datum, const SymElem& a,
                             const RootVec& beta, i64 l) {
  require(l >= 1, ErrorKind::InvalidArgument, "l must be positive");
  const double two_pi = 2.0 * std::acos(-1.0);
  std::vector<std::complex<double>> twiddle(l);
  for (i64 r = 0; r < l; ++r)
    twiddle[r] = std::polar(1.0, two_pi * static_cast<double>(r) / static_cast<double>(l));
  std::complex<double> total = 0;
  for (const auto& [w, c] : a.terms) {
    std::complex<double> orbit_sum = 0;
    for (const Weight& eta : weyl_orbit(datum, w)) {
      i64 e = datum.pair(eta, beta) % l;
      if (e < 0) e += l;
      orbit_sum += twiddle[e];
    }
    total += c.get_d() * orbit_sum;
  }
  return total;
}

std::complex<double> eval_at_weight_point(const RootDatum& datum, const SymElem& a,
                                          const Weight& zeta, i64 l) {
  require(l >= 1, ErrorKind::InvalidArgument, "l must be positive");
  const double two_pi = 2.0 * std::acos(-1.0);
  std::complex<double> total = 0;
  for (const auto& [w, c] : a.terms) {
    std::complex<double> orbit_sum = 0;
    for (const Weight& eta : weyl_orbit(datum, w)) {
      Rat r = datum.pair_weights(eta, zeta) / Rat(static_cast<long>(l));
      // Reduce the exponent mod 1 exactly before going to floating point.
      Int fl;
      mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
      r -= Rat(fl);
      orbit_sum += std::polar(1.0, two_pi * r.get_d());
    }
    total += c.get_d() * orbit_sum;
  }
  return total;
}

std::map<Weight, Rat, WeightOrder> to_chi_basis(const RootDatum& datum, SymElem a) {
  std::map<Weight, Rat, WeightOrder> out;
  while (!a.zero()) {
    const auto& [lambda, c] = *a.terms.rbegin();
    Weight top = lambda;
    Rat coeff = c;
    out[top] = coeff;
    a = sym_sub(a, sym_scale(coeff, chi_elem(datum, top)));
  }
  return out;
}

}  // namespace alcove
