#pragma once

// Exact linear algebra over the prime field F_p.
//
// Vectors are bit-packed (power-of-two field width per entry, XOR fast path
// for p = 2).  Subspaces are kept in reduced row echelon form at all times,
// which makes the RREF basis a canonical form: two subspaces are equal iff
// their stored bases are bitwise equal.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace idgrow {

constexpr std::uint32_t npos32 = UINT32_MAX;

// Guard violations (work bound exceeded) are distinct from invariant
// failures; the CLI maps them to their own exit code.
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal invariant check.  Violations indicate a bug, not bad input.
inline void ensure(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime_u32(p)) throw std::invalid_argument("PrimeField: p must be prime");
  }

  std::uint32_t p() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return std::uint32_t((std::uint64_t(a) * b) % p_);
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a % p_ == 0) throw std::invalid_argument("PrimeField::inv of zero");
    // Fermat; p is small so the loop is cheap.
    std::uint32_t r = 1, base = a % p_, e = p_ - 2;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

// Dense vector over F_p, entries packed into 64-bit words.
// Entry width is bit_width(p-1) bits; entries never straddle words.
class FpVec {
 public:
  FpVec() = default;
  FpVec(std::uint32_t len, std::uint32_t p)
      : len_(len),
        bits_(static_cast<std::uint8_t>(std::bit_width(p - 1))),
        w_((std::size_t(len) * bits_ + 63) / 64, 0) {}

  std::uint32_t size() const { return len_; }

  std::uint32_t get(std::uint32_t i) const {
    std::uint32_t epw = 64 / bits_;
    return std::uint32_t(w_[i / epw] >> (std::uint64_t(i % epw) * bits_)) & mask();
  }

  void set(std::uint32_t i, std::uint32_t v) {
    std::uint32_t epw = 64 / bits_;
    std::uint64_t sh = std::uint64_t(i % epw) * bits_;
    std::uint64_t& word = w_[i / epw];
    word = (word & ~(std::uint64_t(mask()) << sh)) | (std::uint64_t(v) << sh);
  }

  bool is_zero() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }

  // Index of the first nonzero entry, npos32 if none.
  std::uint32_t first_nonzero() const {
    std::uint32_t epw = 64 / bits_;
    for (std::size_t k = 0; k < w_.size(); ++k) {
      if (!w_[k]) continue;
      std::uint32_t base = std::uint32_t(k) * epw;
      std::uint32_t off = std::uint32_t(std::countr_zero(w_[k])) / bits_;
      return base + off;
    }
    return npos32;
  }

  // this += c * x  (c != 0).
  void axpy(std::uint32_t c, const FpVec& x, const PrimeField& F) {
    if (F.p() == 2) {
      for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= x.w_[k];
      return;
    }
    for (std::uint32_t i = 0; i < len_; ++i) {
      std::uint32_t xv = x.get(i);
      if (xv) set(i, F.add(get(i), F.mul(c, xv)));
    }
  }

  void scale(std::uint32_t c, const PrimeField& F) {
    if (c == 1) return;
    for (std::uint32_t i = 0; i < len_; ++i) {
      std::uint32_t v = get(i);
      if (v) set(i, F.mul(c, v));
    }
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

  bool operator==(const FpVec& o) const {
    return len_ == o.len_ && bits_ == o.bits_ && w_ == o.w_;
  }
  auto operator<=>(const FpVec& o) const {
    if (auto c = len_ <=> o.len_; c != 0) return c;
    if (auto c = bits_ <=> o.bits_; c != 0) return c;
    return w_ <=> o.w_;
  }

 private:
  std::uint32_t mask() const { return (1u << bits_) - 1; }

  std::uint32_t len_ = 0;
  std::uint8_t bits_ = 1;
  std::vector<std::uint64_t> w_;
};

inline std::uint64_t hash_words(std::uint64_t seed, const std::vector<std::uint64_t>& w) {
  std::uint64_t h = seed ^ 0xcbf29ce484222325ull;
  for (auto x : w) {
    h ^= x;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return h;
}

struct FpVecHash {
  std::size_t operator()(const FpVec& v) const {
    return std::size_t(hash_words(v.size(), v.words()));
  }
};

// Row-major dense matrix over F_p.
struct MatrixFp {
  std::uint32_t rows = 0, cols = 0, p = 2;
  std::vector<FpVec> data;

  MatrixFp() = default;
  MatrixFp(std::uint32_t r, std::uint32_t c, std::uint32_t prime)
      : rows(r), cols(c), p(prime), data(r, FpVec(c, prime)) {}

  static MatrixFp from_rows(std::uint32_t cols, std::uint32_t p,
                            const std::vector<std::vector<std::uint32_t>>& rows) {
    MatrixFp m(std::uint32_t(rows.size()), cols, p);
    for (std::uint32_t i = 0; i < m.rows; ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("MatrixFp: ragged rows");
      for (std::uint32_t j = 0; j < cols; ++j) m.data[i].set(j, rows[i][j] % p);
    }
    return m;
  }

  std::uint32_t at(std::uint32_t r, std::uint32_t c) const { return data[r].get(c); }

  bool operator==(const MatrixFp& o) const {
    return rows == o.rows && cols == o.cols && p == o.p && data == o.data;
  }
};

// Incrementally maintained reduced row echelon basis.  Rows are kept
// normalized (pivot entry 1), pivot columns strictly increasing, and every
// pivot column is cleared in all other rows.
class EchelonBasis {
 public:
  EchelonBasis(const PrimeField& F, std::uint32_t ambient) : F_(F), ambient_(ambient) {}

  std::uint32_t rank() const { return std::uint32_t(rows_.size()); }
  std::uint32_t ambient_dim() const { return ambient_; }
  const std::vector<FpVec>& rows() const { return rows_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }
  const PrimeField& field() const { return F_; }

  // Fully reduce v against the current basis; true iff a nonzero remainder is left.
  bool reduce(FpVec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::uint32_t c = v.get(pivots_[r]);
      if (c) v.axpy(F_.neg(c), rows_[r], F_);
    }
    return !v.is_zero();
  }

  bool contains(FpVec v) const { return !reduce(v); }

  // Insert v; returns true iff the rank grew.
  bool insert(FpVec v) {
    if (!reduce(v)) return false;
    std::uint32_t piv = v.first_nonzero();
    v.scale(F_.inv(v.get(piv)), F_);
    for (auto& row : rows_) {
      std::uint32_t c = row.get(piv);
      if (c) row.axpy(F_.neg(c), v, F_);
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    std::size_t pos = std::size_t(it - pivots_.begin());
    pivots_.insert(it, piv);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

 private:
  PrimeField F_;
  std::uint32_t ambient_;
  std::vector<FpVec> rows_;
  std::vector<std::uint32_t> pivots_;
};

// Reduced row echelon form; zero rows sink to the bottom, shape is preserved.
inline MatrixFp rref(const MatrixFp& m) {
  PrimeField F(m.p);
  EchelonBasis eb(F, m.cols);
  for (const auto& row : m.data) eb.insert(row);
  MatrixFp out(m.rows, m.cols, m.p);
  for (std::uint32_t i = 0; i < eb.rank(); ++i) out.data[i] = eb.rows()[i];
  return out;
}

// Immutable subspace of F_p^n in canonical (RREF) form.
class SubspaceFp {
 public:
  SubspaceFp() : F_(2) {}

  explicit SubspaceFp(EchelonBasis eb)
      : F_(eb.field()), ambient_(eb.ambient_dim()),
        basis_(eb.rows()), pivots_(eb.pivots()) {}

  static SubspaceFp span(const PrimeField& F, std::uint32_t ambient,
                         const std::vector<FpVec>& vecs) {
    EchelonBasis eb(F, ambient);
    for (const auto& v : vecs) eb.insert(v);
    return SubspaceFp(std::move(eb));
  }

  static SubspaceFp zero(const PrimeField& F, std::uint32_t ambient) {
    return SubspaceFp(EchelonBasis(F, ambient));
  }

  static SubspaceFp full(const PrimeField& F, std::uint32_t ambient) {
    EchelonBasis eb(F, ambient);
    for (std::uint32_t i = 0; i < ambient; ++i) {
      FpVec e(ambient, F.p());
      e.set(i, 1);
      eb.insert(e);
    }
    return SubspaceFp(std::move(eb));
  }

  std::uint32_t rank() const { return std::uint32_t(basis_.size()); }
  std::uint32_t ambient_dim() const { return ambient_; }
  std::uint32_t p() const { return F_.p(); }
  const std::vector<FpVec>& basis() const { return basis_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }

  bool contains(FpVec v) const {
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      std::uint32_t c = v.get(pivots_[r]);
      if (c) v.axpy(F_.neg(c), basis_[r], F_);
    }
    return v.is_zero();
  }

  bool contains(const SubspaceFp& other) const {
    for (const auto& b : other.basis_)
      if (!contains(b)) return false;
    return true;
  }

  SubspaceFp sum(const SubspaceFp& other) const {
    EchelonBasis eb(F_, ambient_);
    for (const auto& b : basis_) eb.insert(b);
    for (const auto& b : other.basis_) eb.insert(b);
    return SubspaceFp(std::move(eb));
  }

  EchelonBasis to_echelon() const {
    EchelonBasis eb(F_, ambient_);
    for (const auto& b : basis_) eb.insert(b);
    return eb;
  }

  // Canonical key: equal subspaces produce equal keys.
  std::vector<std::uint64_t> key() const {
    std::vector<std::uint64_t> k;
    k.push_back((std::uint64_t(ambient_) << 32) | rank());
    for (auto piv : pivots_) k.push_back(piv);
    for (const auto& row : basis_)
      for (auto w : row.words()) k.push_back(w);
    return k;
  }

  bool operator==(const SubspaceFp& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator<(const SubspaceFp& o) const { return key() < o.key(); }

 private:
  PrimeField F_;
  std::uint32_t ambient_ = 0;
  std::vector<FpVec> basis_;
  std::vector<std::uint32_t> pivots_;
};

struct SubspaceHash {
  std::size_t operator()(const SubspaceFp& s) const {
    return std::size_t(hash_words(s.rank(), s.key()));
  }
};

}  // namespace idgrow
