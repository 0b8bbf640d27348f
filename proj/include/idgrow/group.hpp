#pragma once

// Principal congruence groups SL_2^1(A): matrices congruent to the
// identity modulo the maximal ideal, determinant 1.  An element is
// determined by the three free entries of g - 1 (the fourth follows from
// det = 1 and invertibility of 1 + M11), so |G| = |m|^3.  Normal subgroups
// are enumerated as joins of conjugacy classes; large groups support
// seeded normal closures without materializing every element.
// p = 2 is rejected, as in the Lie layer.

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "count.hpp"
#include "quotient.hpp"
#include "sl2.hpp"

namespace idgrow {

struct Mat2 {
  FpVec a, b, c, d;

  std::vector<std::uint64_t> key() const {
    std::vector<std::uint64_t> k;
    for (const FpVec* v : {&a, &b, &c, &d})
      for (auto w : v->words()) k.push_back(w);
    return k;
  }
  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
};

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& k) const {
    return std::size_t(hash_words(k.size(), k));
  }
};

class CongruenceGroup {
 public:
  explicit CongruenceGroup(const QuotientAlgebra& A) : A_(&A) {
    if (A.p() == 2) throw std::invalid_argument("CongruenceGroup: p = 2 is not supported");
    ensure(A.mono(0).degree() == 0, "CongruenceGroup: basis must start at 1");
    m_dim_ = A.dim() - 1;
    order_ = CountValue::p_power(A.p(), 3ul * m_dim_);
  }

  const QuotientAlgebra& base() const { return *A_; }
  std::uint32_t p() const { return A_->p(); }
  std::uint32_t m_dim() const { return m_dim_; }
  const CountValue& order() const { return order_; }

  Mat2 identity() const {
    return Mat2{A_->unit_vec(0), A_->zero_vec(), A_->zero_vec(), A_->unit_vec(0)};
  }

  Mat2 mul(const Mat2& x, const Mat2& y) const {
    const auto& F = A_->field();
    Mat2 r;
    r.a = A_->multiply(x.a, y.a);
    r.a.axpy(1, A_->multiply(x.b, y.c), F);
    r.b = A_->multiply(x.a, y.b);
    r.b.axpy(1, A_->multiply(x.b, y.d), F);
    r.c = A_->multiply(x.c, y.a);
    r.c.axpy(1, A_->multiply(x.d, y.c), F);
    r.d = A_->multiply(x.c, y.b);
    r.d.axpy(1, A_->multiply(x.d, y.d), F);
    return r;
  }

  // Adjugate; valid because det = 1.
  Mat2 inv(const Mat2& x) const {
    const auto& F = A_->field();
    Mat2 r;
    r.a = x.d;
    r.d = x.a;
    r.b = x.b;
    r.b.scale(F.neg(1), F);
    r.c = x.c;
    r.c.scale(F.neg(1), F);
    return r;
  }

  FpVec det(const Mat2& x) const {
    const auto& F = A_->field();
    FpVec v = A_->multiply(x.a, x.d);
    v.axpy(F.neg(1), A_->multiply(x.b, x.c), F);
    return v;
  }

  bool in_group(const Mat2& g) const {
    if (!(det(g) == A_->unit_vec(0))) return false;
    return g.a.get(0) == 1 && g.b.get(0) == 0 && g.c.get(0) == 0 && g.d.get(0) == 1;
  }

  // Element from the free entries of g - 1 (all in m); the (2,2) entry is
  // forced: 1 + M22 = (1 + M11)^{-1} (1 + M12 M21).
  Mat2 from_parts(const FpVec& m11, const FpVec& m12, const FpVec& m21) const {
    const auto& F = A_->field();
    ensure(m11.get(0) == 0 && m12.get(0) == 0 && m21.get(0) == 0,
           "CongruenceGroup::from_parts: entries must lie in m");
    Mat2 g;
    g.a = A_->unit_vec(0);
    g.a.axpy(1, m11, F);
    g.b = m12;
    g.c = m21;
    FpVec rhs = A_->unit_vec(0);
    rhs.axpy(1, A_->multiply(m12, m21), F);
    g.d = A_->multiply(A_->invert_unit(g.a), rhs);
    ensure(in_group(g), "CongruenceGroup::from_parts: determinant check failed");
    return g;
  }

  // Standard generating set: elementary matrices 1 + mu E12, 1 + mu E21 and
  // diagonal diag(1 + mu, (1 + mu)^{-1}) for each basis monomial mu of m.
  std::vector<Mat2> generators() const {
    std::vector<Mat2> out;
    const auto& F = A_->field();
    for (std::uint32_t i = 1; i < A_->dim(); ++i) {
      FpVec mu = A_->unit_vec(i);
      Mat2 e12{A_->unit_vec(0), mu, A_->zero_vec(), A_->unit_vec(0)};
      Mat2 e21{A_->unit_vec(0), A_->zero_vec(), mu, A_->unit_vec(0)};
      FpVec u = A_->unit_vec(0);
      u.axpy(1, mu, F);
      Mat2 diag{u, A_->zero_vec(), A_->zero_vec(), A_->invert_unit(u)};
      out.push_back(std::move(e12));
      out.push_back(std::move(e21));
      out.push_back(std::move(diag));
    }
    return out;
  }

  // --- Materialized mode (small groups) ---

  struct Elements {
    std::vector<Mat2> list;
    std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, KeyHash> id;
    std::vector<std::uint32_t> mul_table;  // [x * n + y] = x*y
    std::vector<std::uint32_t> inv_id;
    std::uint32_t n = 0;
  };

  Elements materialize(std::uint64_t guard = 729) const {
    Elements E;
    if (order_.exact > guard) throw guard_error("CongruenceGroup::materialize: order exceeds guard");
    std::uint32_t n = std::uint32_t(order_.exact.get_ui());
    E.n = n;
    std::vector<std::uint32_t> dv(3 * std::size_t(m_dim_), 0);
    auto part = [&](std::uint32_t block) {
      FpVec v = A_->zero_vec();
      for (std::uint32_t i = 0; i < m_dim_; ++i) v.set(i + 1, dv[block * m_dim_ + i]);
      return v;
    };
    for (;;) {
      Mat2 g = from_parts(part(0), part(1), part(2));
      std::uint32_t gid = std::uint32_t(E.list.size());
      ensure(E.id.emplace(g.key(), gid).second, "materialize: duplicate element");
      E.list.push_back(std::move(g));
      std::size_t t = 0;
      while (t < dv.size() && dv[t] + 1 == p()) dv[t++] = 0;
      if (t == dv.size()) break;
      ++dv[t];
    }
    ensure(E.list.size() == n, "materialize: order mismatch");

    E.mul_table.assign(std::size_t(n) * n, 0);
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y) {
        auto it = E.id.find(mul(E.list[x], E.list[y]).key());
        ensure(it != E.id.end(), "materialize: product escapes group");
        E.mul_table[std::size_t(x) * n + y] = it->second;
      }
    E.inv_id.assign(n, 0);
    for (std::uint32_t x = 0; x < n; ++x) {
      auto it = E.id.find(inv(E.list[x]).key());
      ensure(it != E.id.end(), "materialize: inverse escapes group");
      E.inv_id[x] = it->second;
    }

    // The standard generators generate the whole group.
    std::vector<std::uint32_t> gen_ids;
    for (const auto& g : generators()) gen_ids.push_back(E.id.at(g.key()));
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> stack = {E.id.at(identity().key())};
    seen[stack[0]] = true;
    std::uint32_t reached = 1;
    while (!stack.empty()) {
      std::uint32_t x = stack.back();
      stack.pop_back();
      for (auto g : gen_ids) {
        std::uint32_t y = E.mul_table[std::size_t(x) * n + g];
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    ensure(reached == n, "materialize: generators do not generate");
    return E;
  }

  // Conjugacy classes of a materialized group: orbit of each element under
  // conjugation by the generators.
  static std::vector<std::vector<std::uint32_t>> conjugacy_classes(const Elements& E,
                                                                   const std::vector<std::uint32_t>& gen_ids,
                                                                   std::vector<std::uint32_t>* class_of = nullptr) {
    std::uint32_t n = E.n;
    std::vector<std::uint32_t> cls(n, npos32);
    std::vector<std::vector<std::uint32_t>> classes;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (cls[x] != npos32) continue;
      std::uint32_t cid = std::uint32_t(classes.size());
      std::vector<std::uint32_t> orbit = {x};
      cls[x] = cid;
      std::vector<std::uint32_t> stack = {x};
      while (!stack.empty()) {
        std::uint32_t y = stack.back();
        stack.pop_back();
        for (auto g : gen_ids) {
          std::uint32_t z = E.mul_table[std::size_t(E.mul_table[std::size_t(g) * n + y]) * n + E.inv_id[g]];
          if (cls[z] == npos32) {
            cls[z] = cid;
            orbit.push_back(z);
            stack.push_back(z);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      classes.push_back(std::move(orbit));
    }
    if (class_of) *class_of = std::move(cls);
    return classes;
  }

 private:
  const QuotientAlgebra* A_;
  std::uint32_t m_dim_;
  CountValue order_;
};

namespace detail {

struct Bitset {
  std::vector<std::uint64_t> w;
  explicit Bitset(std::uint32_t n = 0) : w((n + 63) / 64, 0) {}
  bool get(std::uint32_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(std::uint32_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  bool operator<(const Bitset& o) const { return w < o.w; }
  bool contains(const Bitset& o) const {
    for (std::size_t k = 0; k < w.size(); ++k)
      if (o.w[k] & ~w[k]) return false;
    return true;
  }
};

}  // namespace detail

struct NormalSubgroup {
  std::vector<std::uint32_t> elems;  // sorted element ids
  std::uint64_t order = 0;
};

// All normal subgroups, bottom-up: start from the trivial subgroup and
// repeatedly join with conjugacy classes.  Every normal subgroup is the
// join of its own classes, so the closure of this process is complete.
inline std::vector<NormalSubgroup> enumerate_normal_subgroups(
    const CongruenceGroup& G, const CongruenceGroup::Elements& E, std::uint64_t max_index,
    std::uint64_t lattice_guard = 100'000) {
  std::uint32_t n = E.n;
  std::vector<std::uint32_t> gen_ids;
  for (const auto& g : G.generators()) gen_ids.push_back(E.id.at(g.key()));
  std::vector<std::uint32_t> class_of;
  auto classes = CongruenceGroup::conjugacy_classes(E, gen_ids, &class_of);
  std::uint32_t e_id = E.id.at(G.identity().key());

  // Subgroup generated by a seed set (with identity adjoined).  Each element
  // is paired with every earlier element when it is popped, so all products
  // are covered.
  auto close = [&](const std::vector<std::uint32_t>& seed) {
    detail::Bitset bs(n);
    std::vector<std::uint32_t> list;
    std::vector<std::uint32_t> stack;
    auto add = [&](std::uint32_t x) {
      if (!bs.get(x)) {
        bs.set(x);
        list.push_back(x);
        stack.push_back(x);
      }
    };
    add(e_id);
    for (auto x : seed) add(x);
    while (!stack.empty()) {
      std::uint32_t x = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < list.size(); ++i) {
        add(E.mul_table[std::size_t(x) * n + list[i]]);
        add(E.mul_table[std::size_t(list[i]) * n + x]);
      }
    }
    std::sort(list.begin(), list.end());
    return std::pair(std::move(bs), std::move(list));
  };

  // Subgroup generated by each single class; normal because the class is
  // closed under conjugation.
  std::vector<std::vector<std::uint32_t>> class_group(classes.size());
  for (std::size_t cid = 0; cid < classes.size(); ++cid)
    class_group[cid] = close(classes[cid]).second;

  std::map<detail::Bitset, std::vector<std::uint32_t>> found;
  auto trivial = close({});
  std::vector<detail::Bitset> frontier;
  found.emplace(trivial.first, trivial.second);
  frontier.push_back(trivial.first);

  while (!frontier.empty()) {
    std::vector<detail::Bitset> next;
    for (const auto& bs : frontier) {
      const auto& members = found.at(bs);
      for (std::size_t cid = 0; cid < classes.size(); ++cid) {
        if (bs.get(classes[cid][0])) continue;  // class already inside
        // Join = N * <C>: a subgroup since both factors are normal, so a
        // plain product set suffices (no closure pass).
        detail::Bitset jb(n);
        std::uint32_t count = 0;
        for (auto x : members) {
          for (auto k : class_group[cid]) {
            std::uint32_t y = E.mul_table[std::size_t(x) * n + k];
            if (!jb.get(y)) {
              jb.set(y);
              ++count;
            }
          }
          if (count == n) break;  // already the full group
        }
        std::vector<std::uint32_t> list;
        list.reserve(count);
        for (std::uint32_t x = 0; x < n; ++x)
          if (jb.get(x)) list.push_back(x);
        if (found.size() >= lattice_guard)
          throw guard_error("enumerate_normal_subgroups: lattice guard exceeded");
        auto [it, fresh] = found.emplace(std::move(jb), std::move(list));
        if (fresh) next.push_back(it->first);
      }
    }
    frontier = std::move(next);
  }

  std::vector<NormalSubgroup> out;
  for (const auto& [bs, list] : found) {
    std::uint64_t idx = n / list.size();
    ensure(std::uint64_t(list.size()) * idx == n, "enumerate_normal_subgroups: Lagrange");
    if (idx <= max_index) {
      NormalSubgroup ns;
      ns.elems = list;
      ns.order = list.size();
      out.push_back(std::move(ns));
    }
  }
  // Conjugation stability re-check.
  for (const auto& ns : out) {
    detail::Bitset bs(n);
    for (auto x : ns.elems) bs.set(x);
    for (auto x : ns.elems)
      for (auto g : gen_ids) {
        std::uint32_t z =
            E.mul_table[std::size_t(E.mul_table[std::size_t(g) * n + x]) * n + E.inv_id[g]];
        ensure(bs.get(z), "enumerate_normal_subgroups: not conjugation stable");
      }
  }
  return out;
}

// Normal closure of one element in a group too large to materialize:
// maintain a generating set, close under products, and extend by
// generator conjugates until conjugation-stable.
inline std::vector<Mat2> normal_closure(const CongruenceGroup& G, const Mat2& seed,
                                        std::uint64_t size_guard = 1'000'000) {
  auto T = G.generators();
  std::vector<Mat2> gens = {seed};

  std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, KeyHash> seen;
  std::vector<Mat2> S = {G.identity()};
  seen.emplace(S[0].key(), 0);
  // done[i] = number of generators already applied to S[i]; each (element,
  // generator) pair is processed once even as the generating set grows.
  std::vector<std::size_t> done = {0};
  std::vector<std::uint32_t> stack = {0};

  auto grow = [&]() {
    while (!stack.empty()) {
      std::uint32_t x = stack.back();
      stack.pop_back();
      while (done[x] < gens.size()) {
        Mat2 y = G.mul(S[x], gens[done[x]]);
        ++done[x];
        auto [it, fresh] = seen.emplace(y.key(), std::uint32_t(S.size()));
        if (fresh) {
          if (S.size() >= size_guard) throw guard_error("normal_closure: size guard exceeded");
          S.push_back(std::move(y));
          done.push_back(0);
          stack.push_back(it->second);
        }
      }
    }
  };

  for (std::size_t gens_checked = 0;;) {
    grow();
    // Conjugation stability of the generating set; new conjugates resume the
    // closure instead of restarting it.
    std::size_t upto = gens.size();
    for (const auto& t : T) {
      Mat2 tinv = G.inv(t);
      for (std::size_t i = gens_checked; i < upto; ++i) {
        Mat2 conj = G.mul(G.mul(t, gens[i]), tinv);
        if (!seen.count(conj.key())) gens.push_back(std::move(conj));
      }
    }
    gens_checked = upto;
    if (gens.size() == upto) return S;
    for (std::uint32_t x = 0; x < S.size(); ++x)
      if (done[x] < gens.size()) stack.push_back(x);
  }
}

// Entry ideal of a set of group elements: ideal generated by the entries
// of g - 1.
inline IdealSubspace entry_ideal(const CongruenceGroup& G, const std::vector<Mat2>& elems) {
  const QuotientAlgebra& A = G.base();
  const auto& F = A.field();
  std::vector<FpVec> entries;
  for (const auto& g : elems) {
    FpVec da = g.a;
    da.axpy(F.neg(1), A.unit_vec(0), F);
    FpVec dd = g.d;
    dd.axpy(F.neg(1), A.unit_vec(0), F);
    entries.push_back(std::move(da));
    entries.push_back(g.b);
    entries.push_back(g.c);
    entries.push_back(std::move(dd));
  }
  return ideal_closure(A, entries);
}

// All elements of SL_2^1(I) for an ideal I inside m: free entries range
// over I.
inline std::vector<Mat2> congruence_subgroup_elements(const CongruenceGroup& G,
                                                      const IdealSubspace& I,
                                                      std::uint64_t guard = 1'000'000) {
  const QuotientAlgebra& A = G.base();
  const auto& F = A.field();
  for (const auto& b : I.space.basis())
    if (b.get(0) != 0) throw std::invalid_argument("congruence_subgroup_elements: I not in m");
  std::uint32_t r = I.space.rank();
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), G.p(), 3ul * r);
  if (total > guard) throw guard_error("congruence_subgroup_elements: size exceeds guard");

  std::vector<Mat2> out;
  std::vector<std::uint32_t> dv(3 * std::size_t(r), 0);
  auto part = [&](std::uint32_t block) {
    FpVec v = A.zero_vec();
    for (std::uint32_t i = 0; i < r; ++i) {
      std::uint32_t cv = dv[block * r + i];
      if (cv) v.axpy(cv, I.space.basis()[i], F);
    }
    return v;
  };
  for (;;) {
    out.push_back(G.from_parts(part(0), part(1), part(2)));
    std::size_t t = 0;
    while (t < dv.size() && dv[t] + 1 == G.p()) dv[t++] = 0;
    if (t == dv.size()) break;
    ++dv[t];
  }
  return out;
}

// SL_2^1(J) >= N >= SL_2^1(m^3 J) with J the entry ideal of N.
inline bool group_sandwich_check(const CongruenceGroup& G, const std::vector<Mat2>& N_elems) {
  const QuotientAlgebra& A = G.base();
  const auto& F = A.field();
  IdealSubspace J = entry_ideal(G, N_elems);
  // Upper: entries of every g - 1 lie in J.
  for (const auto& g : N_elems) {
    FpVec da = g.a;
    da.axpy(F.neg(1), A.unit_vec(0), F);
    FpVec dd = g.d;
    dd.axpy(F.neg(1), A.unit_vec(0), F);
    if (!J.space.contains(da) || !J.space.contains(g.b) || !J.space.contains(g.c) ||
        !J.space.contains(dd))
      return false;
  }
  // Lower: every element of SL_2^1(m^3 J) belongs to N.
  std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, KeyHash> nset;
  for (std::uint32_t i = 0; i < N_elems.size(); ++i) nset.emplace(N_elems[i].key(), i);
  IdealSubspace lower_ideal = cube_times(A, J);
  for (const auto& g : congruence_subgroup_elements(G, lower_ideal))
    if (!nset.count(g.key())) return false;
  return true;
}

}  // namespace idgrow
