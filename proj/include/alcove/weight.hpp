#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "alcove/numeric.hpp"

namespace alcove {

// Integral weight written in the fundamental-weight basis.
struct Weight {
  std::vector<i64> c;

  Weight() = default;
  explicit Weight(std::vector<i64> v) : c(std::move(v)) {}
  Weight(std::initializer_list<i64> v) : c(v) {}

  static Weight zero(int rank) { return Weight(std::vector<i64>(rank, 0)); }

  int rank() const { return static_cast<int>(c.size()); }
  bool is_zero() const {
    for (i64 x : c)
      if (x != 0) return false;
    return true;
  }
  bool dominant() const {
    for (i64 x : c)
      if (x < 0) return false;
    return true;
  }
  i64 coord_sum() const {
    i64 s = 0;
    for (i64 x : c) s += x;
    return s;
  }

  Weight& operator+=(const Weight& o) {
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(i64 k, Weight a) {
    for (auto& x : a.c) x *= k;
    return a;
  }
  bool operator==(const Weight&) const = default;
};

// Element of the root lattice written in the simple-root basis.
struct RootVec {
  std::vector<i64> c;

  RootVec() = default;
  explicit RootVec(std::vector<i64> v) : c(std::move(v)) {}
  RootVec(std::initializer_list<i64> v) : c(v) {}

  int rank() const { return static_cast<int>(c.size()); }
  i64 height() const {
    i64 s = 0;
    for (i64 x : c) s += x;
    return s;
  }
  RootVec& operator+=(const RootVec& o) {
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  friend RootVec operator+(RootVec a, const RootVec& b) { return a += b; }
  bool operator==(const RootVec&) const = default;
};

inline bool lex_less(const std::vector<i64>& a, const std::vector<i64>& b) {
  return a < b;
}

// Global deterministic weight order: coordinate sum first, then
// lexicographic.  Every container of weights in the library uses it, so all
// iteration (and hence all serialized output) is reproducible.
struct WeightOrder {
  bool operator()(const Weight& a, const Weight& b) const {
    i64 sa = a.coord_sum(), sb = b.coord_sum();
    if (sa != sb) return sa < sb;
    return a.c < b.c;
  }
};

// Transparent hash/equality so hot loops can probe hash maps with a reused
// coordinate buffer instead of constructing a Weight per probe.
struct WeightHash {
  using is_transparent = void;
  size_t operator()(const std::vector<i64>& c) const {
    size_t h = 1469598103934665603ull;
    for (i64 x : c) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
  size_t operator()(const Weight& w) const { return (*this)(w.c); }
};

struct WeightEq {
  using is_transparent = void;
  bool operator()(const Weight& a, const Weight& b) const { return a.c == b.c; }
  bool operator()(const Weight& a, const std::vector<i64>& b) const { return a.c == b; }
  bool operator()(const std::vector<i64>& a, const Weight& b) const { return a == b.c; }
};

inline std::string to_string(const Weight& w) {
  std::string s = "(";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.c[i]);
  }
  return s + ")";
}

inline std::string to_string(const RootVec& r) {
  std::string s = "[";
  for (int i = 0; i < r.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(r.c[i]);
  }
  return s + "]";
}

}  // namespace alcove
