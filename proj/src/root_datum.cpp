#include "alcove/root_datum.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <cmath>

#include "alcove/errors.hpp"
#include "alcove/weyl.hpp"

namespace alcove {

namespace detail {

struct CacheState {
  mutable std::shared_mutex orbit_mu;
  std::map<Weight, std::vector<Weight>, WeightOrder> orbits;

  mutable std::mutex mult_mu;
  std::map<Weight, MultMap, WeightOrder> mults;
  bool disk_loaded = false;
};

}  // namespace detail

Family family_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "D" || s == "d") return Family::D;
  if (s == "E" || s == "e") return Family::E;
  fail(ErrorKind::InvalidArgument, "unknown family '" + s + "' (expected A, D, or E)");
}

std::string to_string(Family f) { return std::string(1, static_cast<char>(f)); }

CacheConfig CacheConfig::from_env() {
  CacheConfig cfg;
  cfg.enabled = true;
  const char* env = std::getenv("ALCOVE_CACHE");
  cfg.dir = (env != nullptr && *env != '\0') ? env : ".alcove-cache";
  return cfg;
}

namespace {

// Dynkin diagram edges, nodes numbered 1..rank.  A: a chain.  D: a chain
// 1..rank-1 with node rank attached to node rank-2.  E: chain 1-3-4-5-6(-7-8)
// with node 2 attached to node 4.
std::vector<std::pair<int, int>> diagram_edges(Family family, int rank) {
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case Family::A:
      require(rank >= 1, ErrorKind::Unsupported, "family A requires rank >= 1");
      for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
      return edges;
    case Family::D:
      require(rank >= 4, ErrorKind::Unsupported, "family D requires rank >= 4");
      for (int i = 1; i < rank - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 2, rank);
      return edges;
    case Family::E:
      require(rank >= 6 && rank <= 8, ErrorKind::Unsupported,
              "family E requires rank in {6,7,8}");
      edges.emplace_back(1, 3);
      edges.emplace_back(3, 4);
      edges.emplace_back(4, 5);
      edges.emplace_back(5, 6);
      if (rank >= 7) edges.emplace_back(6, 7);
      if (rank >= 8) edges.emplace_back(7, 8);
      edges.emplace_back(2, 4);
      return edges;
  }
  fail(ErrorKind::Unsupported, "unknown family");
}

std::vector<std::vector<i64>> build_cartan(Family family, int rank) {
  std::vector<std::vector<i64>> c(rank, std::vector<i64>(rank, 0));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  for (auto [a, b] : diagram_edges(family, rank)) {
    c[a - 1][b - 1] = -1;
    c[b - 1][a - 1] = -1;
  }
  return c;
}

// Positive roots in simple-root coordinates by height-level closure: in a
// simply-laced system beta + alpha_i is a root exactly when <beta, alpha_i>
// = (C beta)_i equals -1.
std::vector<RootVec> close_positive_roots(const std::vector<std::vector<i64>>& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::set<std::vector<i64>> seen;
  std::vector<RootVec> level;
  for (int i = 0; i < n; ++i) {
    RootVec e;
    e.c.assign(n, 0);
    e.c[i] = 1;
    seen.insert(e.c);
    level.push_back(std::move(e));
  }
  std::vector<RootVec> all = level;
  while (!level.empty()) {
    std::vector<RootVec> next;
    for (const RootVec& beta : level) {
      for (int i = 0; i < n; ++i) {
        i64 pairing = 0;
        for (int j = 0; j < n; ++j) pairing += cartan[i][j] * beta.c[j];
        if (pairing != -1) continue;
        RootVec gamma = beta;
        gamma.c[i] += 1;
        if (seen.insert(gamma.c).second) next.push_back(std::move(gamma));
      }
    }
    for (const RootVec& g : next) all.push_back(g);
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const RootVec& x, const RootVec& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x.c < y.c;
  });
  return all;
}

// The exponents of the Weyl group are the conjugate partition of the
// root-height histogram; degrees are exponents + 1 and |W| is their product.
std::vector<i64> exponents_from_heights(const std::vector<RootVec>& roots, int rank) {
  std::map<i64, i64> hist;
  for (const RootVec& r : roots) hist[r.height()] += 1;
  std::vector<i64> exps;
  for (int j = 1; j <= rank; ++j) {
    i64 count = 0;
    for (const auto& [h, c] : hist)
      if (c >= j) count += 1;
    exps.push_back(count);
  }
  std::sort(exps.begin(), exps.end());
  return exps;
}

std::filesystem::path mults_cache_path(const CacheConfig& cfg, Family family, int rank) {
  std::ostringstream name;
  name << to_string(family) << rank << ".mults";
  return std::filesystem::path(cfg.dir) / name.str();
}

}  // namespace

RootDatum::RootDatum(Family family, int rank, CacheConfig cache)
    : family_(family),
      rank_(rank),
      cache_(std::move(cache)),
      state_(std::make_unique<detail::CacheState>()) {
  if (cache_.enabled && cache_.dir.empty()) cache_.dir = ".alcove-cache";
  cartan_ = build_cartan(family, rank);

  QMatrix cm(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) cm.at(i, j) = Rat(cartan_[i][j]);
  cartan_det_ = to_i64(det_int(cartan_));
  require(cartan_det_ > 0, ErrorKind::Internal, "Cartan matrix must be nonsingular");
  cartan_inverse_ = inverse(cm);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      require(cartan_inverse_.at(i, j) > 0, ErrorKind::Internal,
              "inverse Cartan matrix must be entrywise positive");
  index_of_connection_ = cartan_det_;

  positive_roots_ = close_positive_roots(cartan_);
  highest_root_ = positive_roots_.back();
  for (const RootVec& r : positive_roots_)
    require(r.height() < highest_root_.height() || r == highest_root_,
            ErrorKind::Internal, "highest root must be unique");
  coxeter_number_ = highest_root_.height() + 1;

  std::vector<i64> exps = exponents_from_heights(positive_roots_, rank);
  i64 exp_sum = 0;
  weyl_order_ = 1;
  for (i64 m : exps) {
    exp_sum += m;
    weyl_order_ *= Int(m + 1);
  }
  require(exp_sum == static_cast<i64>(positive_roots_.size()), ErrorKind::Internal,
          "exponents must sum to the number of positive roots");
  require(exps.back() + 1 == coxeter_number_, ErrorKind::Internal,
          "largest degree must equal the Coxeter number");

  rho_ = Weight{std::vector<i64>(rank, 1)};
}

RootDatum::~RootDatum() = default;
RootDatum::RootDatum(RootDatum&&) noexcept = default;
RootDatum& RootDatum::operator=(RootDatum&&) noexcept = default;

std::string RootDatum::name() const {
  return to_string(family_) + std::to_string(rank_);
}

i64 RootDatum::pair(const Weight& eta, const RootVec& beta) const {
  require(eta.rank() == rank_ && beta.rank() == rank_, ErrorKind::InvalidArgument,
          "rank mismatch in pairing");
  i64 s = 0;
  for (int i = 0; i < rank_; ++i) s += eta.c[i] * beta.c[i];
  return s;
}

Rat RootDatum::pair_weights(const Weight& eta, const Weight& mu) const {
  require(eta.rank() == rank_ && mu.rank() == rank_, ErrorKind::InvalidArgument,
          "rank mismatch in pairing");
  Rat s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (eta.c[i] != 0 && mu.c[j] != 0)
        s += Rat(eta.c[i]) * cartan_inverse_.at(i, j) * Rat(mu.c[j]);
  return s;
}

Weight RootDatum::root_as_weight(const RootVec& beta) const {
  require(beta.rank() == rank_, ErrorKind::InvalidArgument, "rank mismatch");
  Weight w = Weight::zero(rank_);
  for (int i = 0; i < rank_; ++i) {
    i64 s = 0;
    for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * beta.c[j];
    w.c[i] = s;
  }
  return w;
}

Int RootDatum::weyl_dim(const Weight& lambda) const {
  require(lambda.rank() == rank_, ErrorKind::InvalidArgument, "rank mismatch");
  require(lambda.dominant(), ErrorKind::Validation,
          "weyl_dim requires a dominant weight");
  Weight shifted = lambda + rho_;
  Int num = 1, den = 1;
  for (const RootVec& beta : positive_roots_) {
    num *= Int(pair(shifted, beta));
    den *= Int(beta.height());
  }
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  require(r == 0, ErrorKind::Internal, "Weyl dimension must be an integer");
  return q;
}

double RootDatum::quantum_dim(const Weight& lambda, i64 l) const {
  require(lambda.rank() == rank_, ErrorKind::InvalidArgument, "rank mismatch");
  require(lambda.dominant(), ErrorKind::Validation,
          "quantum_dim requires a dominant weight");
  require(l >= coxeter_number_, ErrorKind::Validation,
          "quantum_dim requires l >= Coxeter number");
  Weight shifted = lambda + rho_;
  // A single vanishing numerator factor makes the whole product exactly zero;
  // detect that case arithmetically instead of trusting floating point.
  for (const RootVec& beta : positive_roots_)
    if (pair(shifted, beta) % l == 0) return 0.0;
  const double pi = std::acos(-1.0);
  double value = 1.0;
  for (const RootVec& beta : positive_roots_) {
    double num = std::sin(static_cast<double>(pair(shifted, beta)) * pi / static_cast<double>(l));
    double den = std::sin(static_cast<double>(beta.height()) * pi / static_cast<double>(l));
    value *= num / den;
  }
  return value;
}

const std::vector<Weight>& RootDatum::memo_orbit(
    const Weight& dominant_rep,
    const std::function<std::vector<Weight>()>& compute) const {
  {
    std::shared_lock lock(state_->orbit_mu);
    auto it = state_->orbits.find(dominant_rep);
    if (it != state_->orbits.end()) return it->second;
  }
  std::vector<Weight> fresh = compute();
  std::unique_lock lock(state_->orbit_mu);
  auto [it, inserted] = state_->orbits.emplace(dominant_rep, std::move(fresh));
  return it->second;
}

namespace {

// Cache file grammar, decimal text, newline-delimited:
//   L <lambda coords>
//   M <mu coords> <multiplicity>    (one line per dominant weight)
void load_mults_file(const std::filesystem::path& path, int rank,
                     std::map<Weight, MultMap, WeightOrder>& out) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  Weight current;
  MultMap* current_map = nullptr;
  i64 line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    auto read_weight = [&]() {
      Weight w = Weight::zero(rank);
      for (int i = 0; i < rank; ++i)
        require(static_cast<bool>(ls >> w.c[i]), ErrorKind::Validation,
                "corrupt multiplicity cache file: " + path.string() + " line " +
                    std::to_string(line_no));
      return w;
    };
    if (tag == "L") {
      current = read_weight();
      current_map = &out[current];
    } else if (tag == "M") {
      require(current_map != nullptr, ErrorKind::Validation,
              "corrupt multiplicity cache file: " + path.string() + " line " +
                  std::to_string(line_no));
      Weight mu = read_weight();
      std::string mult;
      require(static_cast<bool>(ls >> mult), ErrorKind::Validation,
              "corrupt multiplicity cache file: " + path.string() + " line " +
                  std::to_string(line_no));
      (*current_map)[mu] = Int(mult);
    } else {
      fail(ErrorKind::Validation, "corrupt multiplicity cache file: " + path.string() +
                                      " line " + std::to_string(line_no));
    }
  }
}

void append_mults_record(const std::filesystem::path& path, const Weight& lambda,
                         const MultMap& mults) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::app);
  require(static_cast<bool>(out), ErrorKind::Validation,
          "cannot open multiplicity cache file for writing: " + path.string());
  out << "L";
  for (i64 c : lambda.c) out << ' ' << c;
  out << '\n';
  for (const auto& [mu, m] : mults) {
    out << "M";
    for (i64 c : mu.c) out << ' ' << c;
    out << ' ' << to_decimal(m) << '\n';
  }
  out.flush();
}

}  // namespace

const MultMap& RootDatum::weight_mults(const Weight& lambda) const {
  require(lambda.rank() == rank_, ErrorKind::InvalidArgument, "rank mismatch");
  require(lambda.dominant(), ErrorKind::Validation,
          "weight_mults requires a dominant weight");

  const std::filesystem::path cache_path =
      cache_.enabled ? mults_cache_path(cache_, family_, rank_) : std::filesystem::path();

  {
    std::lock_guard lock(state_->mult_mu);
    if (cache_.enabled && !state_->disk_loaded) {
      load_mults_file(cache_path, rank_, state_->mults);
      state_->disk_loaded = true;
    }
    auto it = state_->mults.find(lambda);
    if (it != state_->mults.end()) return it->second;
  }

  // Freudenthal recursion over the displacement box.  Every dominant weight
  // of V(lambda) is lambda - C d with 0 <= d_j <= floor((C^{-1} lambda)_j);
  // the bound is valid because the inverse Cartan matrix is entrywise
  // positive.  Candidates are processed by increasing displacement height,
  // so every multiplicity referenced by the recursion is already known.
  std::vector<i64> bound(rank_);
  for (int j = 0; j < rank_; ++j) {
    Rat entry = 0;
    for (int k = 0; k < rank_; ++k)
      entry += cartan_inverse_.at(j, k) * Rat(lambda.c[k]);
    Int floor_val;
    mpz_fdiv_q(floor_val.get_mpz_t(), entry.get_num().get_mpz_t(),
               entry.get_den().get_mpz_t());
    bound[j] = to_i64(floor_val);
  }

  struct Candidate {
    RootVec d;
    Weight mu;
  };
  std::vector<Candidate> candidates;
  RootVec d;
  d.c.assign(rank_, 0);
  while (true) {
    Weight mu = lambda - root_as_weight(d);
    if (mu.dominant()) candidates.push_back({d, mu});
    int j = 0;
    while (j < rank_ && d.c[j] == bound[j]) {
      d.c[j] = 0;
      ++j;
    }
    if (j == rank_) break;
    d.c[j] += 1;
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    if (x.d.height() != y.d.height()) return x.d.height() < y.d.height();
    return x.d.c < y.d.c;
  });

  MultMap computed;
  Weight two_rho = rho_ + rho_;
  for (const Candidate& cand : candidates) {
    if (cand.d.height() == 0) {
      computed[cand.mu] = 1;
      continue;
    }
    i64 denom = pair(lambda + cand.mu + two_rho, cand.d);
    require(denom > 0, ErrorKind::Internal, "Freudenthal denominator must be positive");
    Int num = 0;
    for (const RootVec& beta : positive_roots_) {
      Weight beta_w = root_as_weight(beta);
      i64 base = pair(cand.mu, beta);
      for (i64 k = 1;; ++k) {
        Weight nu = cand.mu + k * beta_w;
        Weight dom = ::alcove::dominant_rep(*this, nu);
        auto it = computed.find(dom);
        if (it == computed.end()) break;
        num += it->second * Int(base + 2 * k);
      }
    }
    num *= 2;
    Int q, r;
    Int den_int(denom);
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den_int.get_mpz_t());
    require(r == 0, ErrorKind::Internal, "Freudenthal multiplicity must be an integer");
    require(q >= 0, ErrorKind::Internal, "Freudenthal multiplicity must be nonnegative");
    computed[cand.mu] = q;
  }

  MultMap result;
  for (const auto& [mu, m] : computed)
    if (m > 0) result[mu] = m;

  std::lock_guard lock(state_->mult_mu);
  auto it = state_->mults.find(lambda);
  if (it != state_->mults.end()) return it->second;  // lost a race; keep first
  if (cache_.enabled) append_mults_record(cache_path, lambda, result);
  auto [ins, ok] = state_->mults.emplace(lambda, std::move(result));
  return ins->second;
}

RootDatum build_root_datum(Family family, int rank) {
  return RootDatum(family, rank, CacheConfig::from_env());
}

RootDatum build_root_datum(Family family, int rank, CacheConfig cache) {
  return RootDatum(family, rank, std::move(cache));
}

std::vector<CacheFileInfo> cache_dir_info(const std::string& dir) {
  std::vector<CacheFileInfo> out;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() != ".mults") continue;
    CacheFileInfo info;
    info.path = entry.path().string();
    info.bytes = static_cast<i64>(entry.file_size());
    std::ifstream in(entry.path());
    std::string line;
    while (std::getline(in, line))
      if (!line.empty() && line[0] == 'L') info.records += 1;
    out.push_back(std::move(info));
  }
  std::sort(out.begin(), out.end(),
            [](const CacheFileInfo& a, const CacheFileInfo& b) { return a.path < b.path; });
  return out;
}

}  // namespace alcove
