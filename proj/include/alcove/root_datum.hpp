#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "alcove/numeric.hpp"
#include "alcove/qlinalg.hpp"
#include "alcove/weight.hpp"

namespace alcove {

enum class Family : char { A = 'A', D = 'D', E = 'E' };

Family family_from_string(const std::string& s);
std::string to_string(Family f);

// Disk cache settings for weight multiplicities.  The default directory is
// `.alcove-cache/`, overridable by the ALCOVE_CACHE environment variable.
struct CacheConfig {
  bool enabled = true;
  std::string dir;

  static CacheConfig from_env();
  static CacheConfig disabled() { return {false, {}}; }
  static CacheConfig at(std::string d) { return {true, std::move(d)}; }
};

using MultMap = std::map<Weight, Int, WeightOrder>;

namespace detail {
struct CacheState;
}

// Immutable Cartan/root/weight data for one simply-laced system, plus
// memoized derived data (orbits, weight multiplicities).  All accessors are
// safe for concurrent use.
class RootDatum {
public:
  RootDatum(Family family, int rank, CacheConfig cache);
  ~RootDatum();
  RootDatum(RootDatum&&) noexcept;
  RootDatum& operator=(RootDatum&&) noexcept;
  RootDatum(const RootDatum&) = delete;
  RootDatum& operator=(const RootDatum&) = delete;

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;  // e.g. "A2"

  const std::vector<std::vector<i64>>& cartan() const { return cartan_; }
  const QMatrix& cartan_inverse() const { return cartan_inverse_; }
  const std::vector<RootVec>& positive_roots() const { return positive_roots_; }
  const RootVec& highest_root() const { return highest_root_; }
  const Weight& rho() const { return rho_; }
  i64 coxeter_number() const { return coxeter_number_; }
  const Int& weyl_order() const { return weyl_order_; }
  i64 cartan_det() const { return cartan_det_; }
  i64 index_of_connection() const { return index_of_connection_; }

  // <eta, beta> for a weight against a root-lattice vector: with the
  // normalization <alpha,alpha> = 2 the bases are dual, so this is the plain
  // coordinate dot product.  Exact.
  i64 pair(const Weight& eta, const RootVec& beta) const;

  // <eta, mu> for two weights, through the inverse Cartan matrix.  Exact.
  Rat pair_weights(const Weight& eta, const Weight& mu) const;

  // Weight coordinates of a root-lattice vector (Cartan matrix applied).
  Weight root_as_weight(const RootVec& beta) const;

  Int weyl_dim(const Weight& lambda) const;
  double quantum_dim(const Weight& lambda, i64 l) const;

  // Dominant weight multiplicities of the Weyl module V(lambda) by the
  // Freudenthal recursion; memoized in memory and, when enabled, on disk.
  const MultMap& weight_mults(const Weight& lambda) const;

  const CacheConfig& cache_config() const { return cache_; }

  // Memoization hooks shared by this module and the Weyl-orbit code.  The
  // compute callback runs outside the lock; first publication wins.
  const std::vector<Weight>& memo_orbit(
      const Weight& dominant_rep,
      const std::function<std::vector<Weight>()>& compute) const;

private:
  Family family_;
  int rank_;
  CacheConfig cache_;
  std::vector<std::vector<i64>> cartan_;
  QMatrix cartan_inverse_;
  std::vector<RootVec> positive_roots_;
  RootVec highest_root_;
  Weight rho_;
  i64 coxeter_number_ = 0;
  Int weyl_order_;
  i64 cartan_det_ = 0;
  i64 index_of_connection_ = 0;
  std::unique_ptr<detail::CacheState> state_;
};

RootDatum build_root_datum(Family family, int rank);
RootDatum build_root_datum(Family family, int rank, CacheConfig cache);

// Cache inspection used by the CLI `cache-info` command.
struct CacheFileInfo {
  std::string path;
  i64 records = 0;
  i64 bytes = 0;
};
std::vector<CacheFileInfo> cache_dir_info(const std::string& dir);

}  // namespace alcove
