#pragma once

// Monomials of a power series ring in d variables, and the degree-refined
// local orders used to pick leading terms.  In the local convention the
// *smallest* monomial of an element is its leading monomial, so orders here
// are built so that comparing "less" means "leads earlier": lower total
// degree first, ties broken through a variable permutation where a larger
// exponent on an earlier variable makes the monomial smaller.

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "fp.hpp"

namespace idgrow {

struct ExponentVector {
  std::vector<std::uint32_t> e;

  ExponentVector() = default;
  explicit ExponentVector(std::vector<std::uint32_t> v) : e(std::move(v)) {}

  std::uint32_t dim() const { return std::uint32_t(e.size()); }

  std::uint32_t degree() const {
    std::uint32_t s = 0;
    for (auto x : e) s += x;
    return s;
  }

  bool divides(const ExponentVector& o) const {
    ensure(e.size() == o.e.size(), "ExponentVector::divides: dimension mismatch");
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  ExponentVector times_var(std::uint32_t var) const {
    ExponentVector r = *this;
    ++r.e[var];
    return r;
  }

  ExponentVector plus(const ExponentVector& o) const {
    ensure(e.size() == o.e.size(), "ExponentVector::plus: dimension mismatch");
    ExponentVector r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }

  bool operator==(const ExponentVector& o) const { return e == o.e; }
  auto operator<=>(const ExponentVector& o) const { return e <=> o.e; }
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto x : v.e) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return std::size_t(h);
  }
};

// Degree-refined order with a configurable variable permutation tie-break.
// var_order lists variable indices from "earliest" to "latest"; among equal
// total degrees, the monomial with the larger exponent at the earliest
// differing variable compares smaller.
struct TermOrder {
  std::vector<std::uint32_t> var_order;

  static TermOrder standard(std::uint32_t d) {
    TermOrder o;
    o.var_order.resize(d);
    std::iota(o.var_order.begin(), o.var_order.end(), 0u);
    return o;
  }

  std::uint32_t dim() const { return std::uint32_t(var_order.size()); }

  void validate() const {
    std::vector<bool> seen(var_order.size(), false);
    for (auto v : var_order) {
      if (v >= var_order.size() || seen[v])
        throw std::invalid_argument("TermOrder: var_order must be a permutation");
      seen[v] = true;
    }
  }

  std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const {
    if (a.dim() != dim() || b.dim() != dim())
      throw std::invalid_argument("TermOrder::compare: dimension mismatch");
    std::uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    for (auto v : var_order) {
      if (a.e[v] != b.e[v])
        return a.e[v] > b.e[v] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  bool less(const ExponentVector& a, const ExponentVector& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

  bool operator==(const TermOrder& o) const { return var_order == o.var_order; }
};

}  // namespace idgrow
