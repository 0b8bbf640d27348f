#pragma once

// Optimization over codimension-increment sequences r_n = n+1 - d_n.
// An admissible profile takes the forced value r_n = n+1 below its pivot
// index n_0 (first n with r_n <= n) and is non-increasing afterwards; its
// weight is N = sum r_n.  The objective
//   sum_{n >= n_0} (r_{n-1} - r_n) * sum_{m > n} r_m
// is maximized exactly by dynamic programming over (current value, weight
// left), cross-checked against exhaustive enumeration and against the
// closed form for the all-ones tail.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "fp.hpp"

namespace idgrow {

struct SequenceProfile {
  std::vector<std::int64_t> r;

  std::int64_t at(std::size_t n) const { return n < r.size() ? r[n] : 0; }

  std::uint32_t n0() const {
    for (std::size_t n = 0; n < r.size(); ++n)
      if (r[n] <= std::int64_t(n)) return std::uint32_t(n);
    return std::uint32_t(r.size());
  }

  std::int64_t total() const {
    std::int64_t s = 0;
    for (auto x : r) s += x;
    return s;
  }

  bool admissible() const {
    for (auto x : r)
      if (x < 0) return false;
    std::uint32_t p = n0();
    for (std::size_t n = 0; n < p; ++n)
      if (r[n] != std::int64_t(n) + 1) return false;
    for (std::size_t n = p; n + 1 < r.size(); ++n)
      if (r[n] < r[n + 1]) return false;
    return true;
  }
};

inline std::int64_t objective(const SequenceProfile& s) {
  if (!s.admissible()) throw std::invalid_argument("objective: inadmissible sequence");
  std::uint32_t p = s.n0();
  std::size_t len = s.r.size();
  std::int64_t acc = 0;
  // suffix[n] = sum_{m > n} r_m
  std::int64_t suffix = 0;
  std::vector<std::int64_t> suf(len + 1, 0);
  for (std::size_t n = len; n-- > 0;) {
    suf[n] = suffix;
    suffix += s.r[n];
  }
  for (std::size_t n = p; n < len; ++n) {
    std::int64_t prev = n == 0 ? 0 : s.at(n - 1);
    acc += (prev - s.r[n]) * suf[n];
  }
  return acc;
}

// Same quantity after partial summation: n_0 * sum_{n > n_0} r_n - sum_{n >= n_0} r_n r_{n+1}.
inline std::int64_t abel_objective(const SequenceProfile& s) {
  if (!s.admissible()) throw std::invalid_argument("abel_objective: inadmissible sequence");
  std::uint32_t p = s.n0();
  std::int64_t tail = 0, cross = 0;
  for (std::size_t n = p + 1; n < s.r.size(); ++n) tail += s.r[n];
  for (std::size_t n = p; n < s.r.size(); ++n) cross += s.at(n) * s.at(n + 1);
  return std::int64_t(p) * tail - cross;
}

// Enumerate all admissible profiles of weight N (prefix 1,2,..,n_0 followed
// by a non-increasing tail with parts <= n_0).
inline void for_each_profile(std::uint32_t N, const std::function<void(const SequenceProfile&)>& fn) {
  for (std::uint32_t p = 0;; ++p) {
    std::uint64_t prefix = std::uint64_t(p) * (p + 1) / 2;
    if (prefix > N) break;
    std::uint32_t rem = N - std::uint32_t(prefix);
    SequenceProfile s;
    for (std::uint32_t k = 1; k <= p; ++k) s.r.push_back(k);
    auto rec = [&](auto&& self, std::uint32_t left, std::uint32_t max_part) -> void {
      if (left == 0) {
        fn(s);
        return;
      }
      for (std::uint32_t part = std::min(left, max_part); part >= 1; --part) {
        s.r.push_back(part);
        self(self, left - part, part);
        s.r.pop_back();
      }
    };
    if (rem == 0)
      fn(s);
    else if (p >= 1)
      rec(rec, rem, p);
    // p == 0 with rem > 0 admits no tail (parts must be <= 0).
  }
}

inline std::int64_t exhaustive_max(std::uint32_t N, std::uint32_t guard = 24) {
  if (N > guard) throw guard_error("exhaustive_max: N exceeds guard");
  std::int64_t best = -1;
  for_each_profile(N, [&](const SequenceProfile& s) {
    std::int64_t v = objective(s);
    if (v > best) best = v;
  });
  return best;
}

// DP over (value of the previous entry, weight remaining):
//   F(prev, rem) = max over 1 <= r <= min(prev, rem) of (prev-r)(rem-r) + F(r, rem-r),
// so that dp_max(N) = max over n_0 of F(n_0, N - n_0(n_0+1)/2).
class DpTable {
 public:
  explicit DpTable(std::uint32_t max_n) : max_n_(max_n) {
    pmax_ = 0;
    while (std::uint64_t(pmax_ + 1) * (pmax_ + 2) / 2 <= max_n) ++pmax_;
    f_.assign(std::size_t(pmax_ + 1) * (max_n + 1), -1);
    for (std::uint32_t prev = 0; prev <= pmax_; ++prev) at(prev, 0) = 0;
    for (std::uint32_t rem = 1; rem <= max_n; ++rem)
      for (std::uint32_t prev = 1; prev <= pmax_; ++prev) {
        std::int64_t best = -1;
        for (std::uint32_t r = 1; r <= std::min(prev, rem); ++r) {
          std::int64_t sub = at(r, rem - r);
          if (sub < 0) continue;
          std::int64_t v = std::int64_t(prev - r) * (rem - r) + sub;
          if (v > best) best = v;
        }
        at(prev, rem) = best;
      }
  }

  std::int64_t dp_max(std::uint32_t N) const {
    if (N > max_n_) throw std::invalid_argument("DpTable: N beyond table");
    std::int64_t best = -1;
    for (std::uint32_t p = 0;; ++p) {
      // T(p) <= N <= max_n forces p <= pmax.
      std::uint64_t prefix = std::uint64_t(p) * (p + 1) / 2;
      if (prefix > N) break;
      std::uint32_t rem = N - std::uint32_t(prefix);
      std::int64_t v = rem == 0 ? 0 : (p == 0 ? -1 : get(p, rem));
      if (v > best) best = v;
    }
    return best;
  }

 private:
  std::int64_t& at(std::uint32_t prev, std::uint32_t rem) {
    return f_[std::size_t(prev) * (max_n_ + 1) + rem];
  }
  std::int64_t get(std::uint32_t prev, std::uint32_t rem) const {
    return f_[std::size_t(prev) * (max_n_ + 1) + rem];
  }

  std::uint32_t max_n_;
  std::uint32_t pmax_;
  std::vector<std::int64_t> f_;
};

// Value of the profile (1, 2, .., n_0, 1, 1, .., 1) with k = N - n_0(n_0+1)/2
// trailing ones: (n_0 - 1) * (k - 1) for k >= 1.
inline std::int64_t tail_ones_value(std::uint32_t N, std::uint32_t n0) {
  if (n0 < 1) throw std::invalid_argument("tail_ones_value: n0 must be >= 1");
  std::uint64_t prefix = std::uint64_t(n0) * (n0 + 1) / 2;
  if (prefix + 1 > N) throw std::invalid_argument("tail_ones_value: N too small for n0");
  std::uint64_t k = N - prefix;
  return std::int64_t(n0 - 1) * std::int64_t(k - 1);
}

struct TailOnesBest {
  std::int64_t value = -1;
  std::uint32_t n0 = 0;
};

inline TailOnesBest tail_ones_max(std::uint32_t N) {
  TailOnesBest best;
  for (std::uint32_t n0 = 1;; ++n0) {
    std::uint64_t prefix = std::uint64_t(n0) * (n0 + 1) / 2;
    if (prefix + 1 > N) break;
    std::int64_t v = tail_ones_value(N, n0);
    if (v > best.value) {
      best.value = v;
      best.n0 = n0;
    }
  }
  if (best.value < 0) {
    // No room for any trailing one; the bare prefix (or empty) profile scores 0.
    best.value = 0;
    best.n0 = 0;
  }
  return best;
}

}  // namespace idgrow
