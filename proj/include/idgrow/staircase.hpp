#pragma once

// Staircases: cofinite monomial ideals of N^d, stored by their minimal
// generating antichain.  For d = 2 these are integer partitions of the
// colength; for d = 3, plane partitions.  Enumeration is provided for
// d <= 3 only.

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "count.hpp"
#include "monomial.hpp"

namespace idgrow {

inline std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);  // exact at each step: product of i+1 consecutive
  }
  return r;
}

// All exponent vectors in d variables of total degree exactly deg.
inline std::vector<ExponentVector> exponents_of_degree(std::uint32_t d, std::uint32_t deg) {
  std::vector<ExponentVector> out;
  std::vector<std::uint32_t> cur(d, 0);
  auto rec = [&](auto&& self, std::uint32_t pos, std::uint32_t rem) -> void {
    if (pos + 1 == d) {
      cur[pos] = rem;
      out.push_back(ExponentVector(cur));
      return;
    }
    for (std::uint32_t v = 0; v <= rem; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rem - v);
    }
  };
  if (d == 0) {
    if (deg == 0) out.push_back(ExponentVector(std::vector<std::uint32_t>{}));
    return out;
  }
  rec(rec, 0, deg);
  return out;
}

class Staircase {
 public:
  Staircase() = default;

  Staircase(std::uint32_t d, std::vector<ExponentVector> gens) : d_(d) {
    for (const auto& g : gens)
      if (g.dim() != d) throw std::invalid_argument("Staircase: generator dimension mismatch");
    // Keep only the minimal antichain.
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < gens.size() && !dominated; ++j)
        if (j != i && gens[j].divides(gens[i])) dominated = true;
      if (!dominated) gens_.push_back(gens[i]);
    }
  }

  static Staircase power_of_maximal(std::uint32_t d, std::uint32_t c) {
    return Staircase(d, exponents_of_degree(d, c));
  }

  // Build from the complement: points is the (finite, downward closed) set
  // of exponents *outside* the ideal.
  static Staircase from_downset(std::uint32_t d, const std::vector<ExponentVector>& points) {
    std::unordered_set<ExponentVector, ExponentVectorHash> in(points.begin(), points.end());
    std::vector<std::uint32_t> box(d, 0);
    for (const auto& pt : points)
      for (std::uint32_t i = 0; i < d; ++i) box[i] = std::max(box[i], pt.e[i] + 1);
    // Minimal outside points: all predecessors inside.
    std::vector<ExponentVector> gens;
    std::vector<std::uint32_t> cur(d, 0);
    auto rec = [&](auto&& self, std::uint32_t pos) -> void {
      if (pos == d) {
        ExponentVector v(cur);
        if (in.count(v)) return;
        for (std::uint32_t i = 0; i < d; ++i) {
          if (v.e[i] == 0) continue;
          ExponentVector pred = v;
          --pred.e[i];
          if (!in.count(pred)) return;
        }
        gens.push_back(v);
        return;
      }
      for (std::uint32_t x = 0; x <= box[pos]; ++x) {
        cur[pos] = x;
        self(self, pos + 1);
      }
    };
    if (d == 0) return Staircase(0, {ExponentVector(std::vector<std::uint32_t>{})});
    rec(rec, 0);
    return Staircase(d, std::move(gens));
  }

  std::uint32_t dim() const { return d_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }

  bool contains(const ExponentVector& v) const {
    for (const auto& g : gens_)
      if (g.divides(v)) return true;
    return false;
  }

  // Upper bound (exclusive) for outside points along each axis; nullopt on
  // an axis with no pure power (infinite colength).
  std::optional<std::vector<std::uint32_t>> box_bounds() const {
    std::vector<std::uint32_t> box(d_, 0);
    for (std::uint32_t i = 0; i < d_; ++i) {
      bool found = false;
      for (const auto& g : gens_) {
        bool pure = true;
        for (std::uint32_t j = 0; j < d_; ++j)
          if (j != i && g.e[j] != 0) { pure = false; break; }
        if (pure) {
          box[i] = found ? std::min(box[i], g.e[i]) : g.e[i];
          found = true;
        }
      }
      if (!found) return std::nullopt;
    }
    return box;
  }

  bool cofinite() const { return box_bounds().has_value(); }

  // Number of exponents outside the ideal.
  std::uint64_t colength(std::uint64_t cell_guard = 100'000'000) const {
    auto box = box_bounds();
    if (!box) throw std::invalid_argument("Staircase::colength: not cofinite");
    std::uint64_t cells = 1;
    for (auto b : *box) {
      if (b == 0) return 0;
      if (cells > cell_guard / b) throw guard_error("Staircase::colength: box too large");
      cells *= b;
    }
    std::uint64_t count = 0;
    std::vector<std::uint32_t> cur(d_, 0);
    auto rec = [&](auto&& self, std::uint32_t pos) -> void {
      if (pos == d_) {
        if (!contains(ExponentVector(cur))) ++count;
        return;
      }
      for (std::uint32_t x = 0; x < (*box)[pos]; ++x) {
        cur[pos] = x;
        self(self, pos + 1);
      }
    };
    if (d_ == 0) return 0;
    rec(rec, 0);
    return count;
  }

  // All exponents outside the ideal, sorted.
  std::vector<ExponentVector> downset(std::uint64_t cell_guard = 100'000'000) const {
    auto box = box_bounds();
    if (!box) throw std::invalid_argument("Staircase::downset: not cofinite");
    std::uint64_t cells = 1;
    for (auto b : *box) {
      if (b == 0) return {};
      if (cells > cell_guard / b) throw guard_error("Staircase::downset: box too large");
      cells *= b;
    }
    std::vector<ExponentVector> out;
    std::vector<std::uint32_t> cur(d_, 0);
    auto rec = [&](auto&& self, std::uint32_t pos) -> void {
      if (pos == d_) {
        ExponentVector v(cur);
        if (!contains(v)) out.push_back(std::move(v));
        return;
      }
      for (std::uint32_t x = 0; x < (*box)[pos]; ++x) {
        cur[pos] = x;
        self(self, pos + 1);
      }
    };
    if (d_ > 0) rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const Staircase& o) const { return d_ == o.d_ && gens_ == o.gens_; }
  bool operator<(const Staircase& o) const {
    if (d_ != o.d_) return d_ < o.d_;
    return gens_ < o.gens_;
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& g : gens_) arr.push_back(g.e);
    return arr;
  }

  static Staircase from_json(const nlohmann::json& j, std::uint32_t d) {
    std::vector<ExponentVector> gens;
    for (const auto& item : j) {
      std::vector<std::uint32_t> e = item.get<std::vector<std::uint32_t>>();
      if (e.size() != d) throw std::invalid_argument("Staircase::from_json: bad tuple length");
      gens.push_back(ExponentVector(std::move(e)));
    }
    return Staircase(d, std::move(gens));
  }

 private:
  std::uint32_t d_ = 0;
  std::vector<ExponentVector> gens_;
};

// Constants C_d with C_1 = 1 and C_d = d * (d!)^(1/(d(d-1))) * C_{d-1};
// the minimal generator count of a colength-n staircase is at most
// C_d * n^((d-1)/d).  The check below is exact integer arithmetic for
// d <= 3 (C_2^2 = 8, C_3^6 = 864^2 * 3).
struct BoundConstants {
  static double value(std::uint32_t d) {
    double c = 1.0;
    double fact = 1.0;
    for (std::uint32_t k = 2; k <= d; ++k) {
      fact *= k;
      c *= double(k) * std::pow(fact, 1.0 / (double(k) * (k - 1)));
    }
    return c;
  }

  // Does g <= C_d * n^((d-1)/d) hold?  Exact for d <= 3.
  static bool check(std::uint32_t d, std::uint64_t g, std::uint64_t n) {
    switch (d) {
      case 1:
        return g <= 1;
      case 2:
        return g * g <= 8 * n;  // C_2^2 = 8
      case 3: {
        // C_3 = 6 * sqrt(2) * 6^(1/6), so C_3^6 = 2239488.
        mpz_class lhs, rhs;
        mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(g), 6);
        mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(n), 4);
        rhs *= 2239488;
        return lhs <= rhs;
      }
      default: {
        double c = value(d);
        return double(g) <= c * std::pow(double(n), double(d - 1) / double(d)) + 1e-9;
      }
    }
  }
};

// Minimal generators, with the generator-count bound asserted for cofinite
// staircases of positive colength.
inline std::vector<ExponentVector> minimal_generators(const Staircase& s) {
  const auto& gens = s.generators();
  if (s.cofinite()) {
    std::uint64_t n = s.colength();
    if (n > 0)
      ensure(BoundConstants::check(s.dim(), gens.size(), n),
             "minimal_generators: generator bound violated");
  }
  return gens;
}

namespace detail {

// Partitions of n as weakly decreasing column heights.
inline void for_each_partition(std::uint32_t n, std::uint32_t max_part,
                               std::vector<std::uint32_t>& cur,
                               const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  if (n == 0) {
    fn(cur);
    return;
  }
  for (std::uint32_t part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    for_each_partition(n - part, part, cur, fn);
    cur.pop_back();
  }
}

// Sub-partitions mu of given size contained in lambda (mu_i <= lambda_i).
inline void for_each_subpartition(const std::vector<std::uint32_t>& lambda, std::uint32_t size,
                                  std::size_t pos, std::uint32_t max_part,
                                  std::vector<std::uint32_t>& cur,
                                  const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  if (size == 0) {
    fn(cur);
    return;
  }
  if (pos >= lambda.size()) return;
  std::uint32_t hi = std::min({lambda[pos], max_part, size});
  for (std::uint32_t part = hi; part >= 1; --part) {
    cur.push_back(part);
    for_each_subpartition(lambda, size - part, pos + 1, part, cur, fn);
    cur.pop_back();
  }
}

}  // namespace detail

// Enumerate all staircases of colength n for d <= 3.  Each staircase is
// emitted exactly once; emission order is deterministic.
inline void for_each_staircase(std::uint32_t d, std::uint32_t n,
                               const std::function<void(const Staircase&)>& fn,
                               std::uint32_t n_guard = 64) {
  if (d < 1 || d > 3)
    throw std::invalid_argument("for_each_staircase: d must be 1, 2 or 3");
  if (n > n_guard) throw guard_error("for_each_staircase: n exceeds guard");

  if (d == 1) {
    fn(Staircase(1, {ExponentVector({n})}));
    return;
  }

  if (d == 2) {
    std::vector<std::uint32_t> cur;
    detail::for_each_partition(n, n == 0 ? 1 : n, cur, [&](const std::vector<std::uint32_t>& lambda) {
      std::vector<ExponentVector> pts;
      for (std::uint32_t i = 0; i < lambda.size(); ++i)
        for (std::uint32_t j = 0; j < lambda[i]; ++j)
          pts.push_back(ExponentVector({i, j}));
      fn(Staircase::from_downset(2, pts));
    });
    return;
  }

  // d == 3: stacks of nested partitions (slices along the last axis).
  std::vector<std::vector<std::uint32_t>> slices;
  auto emit = [&]() {
    std::vector<ExponentVector> pts;
    for (std::uint32_t k = 0; k < slices.size(); ++k)
      for (std::uint32_t i = 0; i < slices[k].size(); ++i)
        for (std::uint32_t j = 0; j < slices[k][i]; ++j)
          pts.push_back(ExponentVector({i, j, k}));
    fn(Staircase::from_downset(3, pts));
  };
  auto rec = [&](auto&& self, std::uint32_t rem) -> void {
    if (rem == 0) {
      emit();
      return;
    }
    bool first = slices.empty();
    std::uint32_t smax = first ? rem : std::min<std::uint32_t>(
        rem, std::uint32_t([&] {
          std::uint32_t s = 0;
          for (auto x : slices.back()) s += x;
          return s;
        }()));
    for (std::uint32_t s = smax; s >= 1; --s) {
      std::vector<std::uint32_t> cur;
      auto handle = [&](const std::vector<std::uint32_t>& mu) {
        slices.push_back(mu);
        self(self, rem - s);
        slices.pop_back();
      };
      if (first) {
        detail::for_each_partition(s, s, cur, handle);
      } else {
        detail::for_each_subpartition(slices.back(), s, 0, s, cur, handle);
      }
    }
  };
  if (n == 0) {
    emit();
    return;
  }
  rec(rec, n);
}

inline std::vector<Staircase> enumerate_staircases(std::uint32_t d, std::uint32_t n,
                                                   std::uint32_t n_guard = 64) {
  std::vector<Staircase> out;
  for_each_staircase(d, n, [&](const Staircase& s) { out.push_back(s); }, n_guard);
  return out;
}

struct HoelderReport {
  std::uint32_t min_degree = 0;    // t: minimal total degree among generators
  std::uint32_t slice_count = 0;   // last exponent of the chosen witness
  std::vector<std::uint64_t> slice_colengths;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;
};

// Instrument the slice inequality
//   sum_nu c_nu^((d-2)/(d-1)) <= t^(1/(d-1)) * (sum_nu c_nu)^((d-2)/(d-1))
// where c_nu is the colength of the slice of the staircase at last
// coordinate nu, nu < (last exponent of a minimal-degree generator chosen
// with maximal last exponent).
inline HoelderReport hoelder_audit(const Staircase& s) {
  std::uint32_t d = s.dim();
  if (d < 2) throw std::invalid_argument("hoelder_audit: requires d >= 2");
  if (!s.cofinite()) throw std::invalid_argument("hoelder_audit: requires cofinite staircase");
  const auto& gens = s.generators();
  ensure(!gens.empty(), "hoelder_audit: no generators");

  HoelderReport rep;
  rep.min_degree = gens[0].degree();
  for (const auto& g : gens) rep.min_degree = std::min(rep.min_degree, g.degree());
  for (const auto& g : gens)
    if (g.degree() == rep.min_degree)
      rep.slice_count = std::max(rep.slice_count, g.e[d - 1]);

  double sum = 0.0;
  double theta = double(d - 2) / double(d - 1);
  for (std::uint32_t nu = 0; nu < rep.slice_count; ++nu) {
    std::vector<ExponentVector> slice_gens;
    for (const auto& g : gens) {
      if (g.e[d - 1] <= nu) {
        std::vector<std::uint32_t> e(g.e.begin(), g.e.end() - 1);
        slice_gens.push_back(ExponentVector(std::move(e)));
      }
    }
    Staircase slice(d - 1, std::move(slice_gens));
    std::uint64_t c = slice.colength();
    ensure(c >= 1, "hoelder_audit: empty slice complement inside range");
    rep.slice_colengths.push_back(c);
    rep.lhs += std::pow(double(c), theta);
    sum += double(c);
  }
  rep.rhs = std::pow(double(rep.min_degree), 1.0 / double(d - 1)) * std::pow(sum, theta);
  rep.holds = rep.lhs <= rep.rhs + 1e-9;
  return rep;
}

}  // namespace idgrow
