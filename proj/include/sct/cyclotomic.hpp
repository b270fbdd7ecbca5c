#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "sct/rational.hpp"

// Exact arithmetic in cyclotomic fields Q(zeta_m).  A value is stored in the
// power basis 1, zeta, ..., zeta^{phi(m)-1} with rational coefficients, always
// fully reduced modulo the m-th cyclotomic polynomial.  Canonical form makes
// structural equality coincide with field equality.

namespace sct {

inline long euler_phi(long m) {
  if (m <= 0) throw std::invalid_argument("euler_phi: m must be positive");
  long result = m, n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

inline std::vector<long> divisors_of(long m) {
  std::vector<long> ds;
  for (long d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      ds.push_back(d);
      if (d != m / d) ds.push_back(m / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

namespace detail {

// Exact division of integer polynomials; the divisor must be monic.
inline std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  if (den.empty() || den.back() != 1) throw std::logic_error("poly_div_exact: divisor not monic");
  if (num.size() < den.size()) throw std::logic_error("poly_div_exact: degree underflow");
  std::vector<Int> quot(num.size() - den.size() + 1);
  for (std::size_t qi = quot.size(); qi-- > 0;) {
    Int c = num[qi + den.size() - 1];
    quot[qi] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < den.size(); ++j) num[qi + j] -= c * den[j];
    }
  }
  for (const Int& c : num) {
    if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  }
  return quot;
}

}  // namespace detail

// Coefficients of Phi_m, ascending degree, length phi(m)+1, monic.  Computed by
// exact division of x^m - 1 by the cyclotomic polynomials of proper divisors.
inline const std::vector<Int>& cyclotomic_polynomial(long m) {
  static std::map<long, std::vector<Int>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // Build bottom-up so recursion never re-enters the lock.
  for (long d : divisors_of(m)) {
    if (cache.count(d)) continue;
    std::vector<Int> num(static_cast<std::size_t>(d) + 1);
    num[0] = -1;
    num[static_cast<std::size_t>(d)] = 1;
    std::vector<Int> q = std::move(num);
    for (long e : divisors_of(d)) {
      if (e == d) continue;
      q = detail::poly_div_exact(std::move(q), cache.at(e));
    }
    cache.emplace(d, std::move(q));
  }
  return cache.at(m);
}

namespace detail {

// Reduce a rational polynomial modulo Phi_m in place, then trim to length phi(m).
inline void reduce_mod_phi(std::vector<Rat>& p, long m) {
  const std::vector<Int>& phi = cyclotomic_polynomial(m);
  const std::size_t d = phi.size() - 1;
  while (p.size() > d) {
    Rat c = p.back();
    p.pop_back();
    if (c != 0) {
      const std::size_t base = p.size() - d;
      for (std::size_t j = 0; j < d; ++j) p[base + j] -= c * Rat(phi[j]);
    }
  }
  p.resize(d);
}

}  // namespace detail

class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), c_(1) {}

  static Cyclotomic zero(long m) { return Cyclotomic(m); }

  static Cyclotomic one(long m) { return from_rational(m, Rat(1)); }

  static Cyclotomic from_rational(long m, const Rat& r) {
    Cyclotomic z(m);
    std::vector<Rat> p{r};
    detail::reduce_mod_phi(p, m);
    z.c_ = std::move(p);
    return z;
  }

  // zeta_m^k; k may be any integer residue.
  static Cyclotomic root_of_unity(long m, long k) {
    if (m <= 0) throw std::invalid_argument("root_of_unity: conductor must be positive");
    k %= m;
    if (k < 0) k += m;
    Cyclotomic z(m);
    std::vector<Rat> p(static_cast<std::size_t>(k) + 1);
    p[static_cast<std::size_t>(k)] = 1;
    detail::reduce_mod_phi(p, m);
    z.c_ = std::move(p);
    return z;
  }

  long conductor() const { return conductor_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
  }

  bool is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& r) { return r == 0; });
  }

  Rat rational_value() const {
    if (!is_rational()) throw std::domain_error("rational_value: value is irrational");
    return c_[0];
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    check_same_conductor(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }

  Cyclotomic& operator-=(const Cyclotomic& o) {
    check_same_conductor(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }

  Cyclotomic& operator*=(const Cyclotomic& o) {
    check_same_conductor(o);
    std::vector<Rat> prod(2 * c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) {
        if (o.c_[j] == 0) continue;
        prod[i + j] += c_[i] * o.c_[j];
      }
    }
    detail::reduce_mod_phi(prod, conductor_);
    c_ = std::move(prod);
    return *this;
  }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

  Cyclotomic operator-() const {
    Cyclotomic z(*this);
    for (Rat& r : z.c_) r = -r;
    return z;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ != b.conductor_)
      throw std::invalid_argument("cyclotomic comparison across conductors; embed first");
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic scaled(const Rat& r) const {
    Cyclotomic z(*this);
    for (Rat& x : z.c_) x *= r;
    return z;
  }

  Cyclotomic divided_by(const Rat& r) const {
    if (r == 0) throw std::invalid_argument("divided_by: zero scalar");
    Cyclotomic z(*this);
    for (Rat& x : z.c_) x /= r;
    return z;
  }

  // Apply the field automorphism zeta -> zeta^k; requires gcd(k, m) = 1.
  Cyclotomic galois(long k) const {
    const long m = conductor_;
    k %= m;
    if (k < 0) k += m;
    if (std::gcd(k, m) != 1) throw std::invalid_argument("galois: exponent not coprime to conductor");
    std::vector<Rat> p(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      p[static_cast<std::size_t>((static_cast<long>(i) * k) % m)] += c_[i];
    }
    detail::reduce_mod_phi(p, m);
    Cyclotomic z(m);
    z.c_ = std::move(p);
    return z;
  }

  // Complex conjugation, zeta -> zeta^{-1}.
  Cyclotomic conjugate() const { return conductor_ == 1 ? *this : galois(conductor_ - 1); }

  // Lift into Q(zeta_M) for m | M via zeta_m = zeta_M^{M/m}.
  Cyclotomic embedded(long big) const {
    if (big % conductor_ != 0) throw std::invalid_argument("embedded: target conductor not a multiple");
    if (big == conductor_) return *this;
    const long t = big / conductor_;
    std::vector<Rat> p(static_cast<std::size_t>(big));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      p[i * static_cast<std::size_t>(t)] += c_[i];
    }
    detail::reduce_mod_phi(p, big);
    Cyclotomic z(big);
    z.c_ = std::move(p);
    return z;
  }

  Cyclotomic pow(long e) const {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    Cyclotomic acc = one(conductor_);
    Cyclotomic base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  // Smallest t in [1, cap] with z^t = 1, or 0 if none.
  long multiplicative_order(long cap) const {
    Cyclotomic acc = *this;
    const Cyclotomic unit = one(conductor_);
    for (long t = 1; t <= cap; ++t) {
      if (acc == unit) return t;
      acc *= *this;
    }
    return 0;
  }

 private:
  explicit Cyclotomic(long m) : conductor_(m) {
    if (m <= 0) throw std::invalid_argument("conductor must be positive");
    c_.assign(static_cast<std::size_t>(euler_phi(m)), Rat(0));
  }

  void check_same_conductor(const Cyclotomic& o) const {
    if (conductor_ != o.conductor_)
      throw std::invalid_argument("cyclotomic operands have different conductors; embed first");
  }

  long conductor_;
  std::vector<Rat> c_;
};

struct CycMatrix {
  long conductor = 1;
  std::size_t rows = 0, cols = 0;
  std::vector<Cyclotomic> entries;

  CycMatrix() = default;
  CycMatrix(long m, std::size_t r, std::size_t c)
      : conductor(m), rows(r), cols(c), entries(r * c, Cyclotomic::zero(m)) {}

  Cyclotomic& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Cyclotomic& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

inline CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols != b.rows || a.conductor != b.conductor)
    throw std::invalid_argument("mat_mul: shape or conductor mismatch");
  CycMatrix out(a.conductor, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Cyclotomic& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        const Cyclotomic& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

inline CycMatrix conjugated(const CycMatrix& a) {
  CycMatrix out = a;
  for (Cyclotomic& z : out.entries) z = z.conjugate();
  return out;
}

inline CycMatrix transposed(const CycMatrix& a) {
  CycMatrix out(a.conductor, a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
  return out;
}

namespace detail {

// Elements of Z[zeta_m] as integer coefficient vectors of length phi(m).
using ZCyc = std::vector<Int>;

struct ZCycRing {
  long m;
  std::size_t phi;
  const std::vector<Int>* modulus;

  explicit ZCycRing(long conductor)
      : m(conductor),
        phi(static_cast<std::size_t>(euler_phi(conductor))),
        modulus(&cyclotomic_polynomial(conductor)) {}

  bool is_zero(const ZCyc& a) const {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
  }

  void reduce(std::vector<Int>& p) const {
    const std::vector<Int>& mod = *modulus;
    while (p.size() > phi) {
      Int c = p.back();
      p.pop_back();
      if (c != 0) {
        const std::size_t base = p.size() - phi;
        for (std::size_t j = 0; j < phi; ++j) p[base + j] -= c * mod[j];
      }
    }
    p.resize(phi);
  }

  ZCyc mul(const ZCyc& a, const ZCyc& b) const {
    std::vector<Int> prod(2 * phi);
    for (std::size_t i = 0; i < phi; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < phi; ++j) {
        if (b[j] == 0) continue;
        prod[i + j] += a[i] * b[j];
      }
    }
    reduce(prod);
    return prod;
  }

  ZCyc galois(const ZCyc& a, long k) const {
    std::vector<Int> p(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < phi; ++i) {
      if (a[i] == 0) continue;
      p[static_cast<std::size_t>((static_cast<long>(i) * k) % m)] += a[i];
    }
    reduce(p);
    return p;
  }

  // Exact quotient a / b in Z[zeta_m].  Multiply by the nontrivial Galois
  // conjugates of b; the denominator collapses to the integer norm N(b), and
  // divisibility of every coefficient is guaranteed whenever b | a.
  ZCyc exact_div(const ZCyc& a, const ZCyc& b) const {
    if (is_zero(b)) throw std::domain_error("exact_div: zero divisor");
    ZCyc num = a;
    ZCyc den = b;
    for (long k = 2; k < m; ++k) {
      if (std::gcd(k, m) != 1) continue;
      ZCyc conj = galois(b, k);
      num = mul(num, conj);
      den = mul(den, conj);
    }
    for (std::size_t i = 1; i < phi; ++i) {
      if (den[i] != 0) throw std::logic_error("exact_div: norm is not rational");
    }
    const Int& n = den[0];
    ZCyc out(phi);
    for (std::size_t i = 0; i < phi; ++i) {
      if (num[i] % n != 0) throw std::logic_error("exact_div: inexact division");
      out[i] = num[i] / n;
    }
    return out;
  }
};

// Fraction-free Gaussian elimination (Bareiss).  Intermediate entries are
// minors of the input, so every division by the previous pivot is exact in
// the integral domain Z[zeta_m].
inline std::size_t zcyc_rank(const ZCycRing& ring, std::vector<std::vector<ZCyc>> rows,
                             std::size_t cols, long stop_when_above = -1) {
  std::size_t rank = 0;
  ZCyc prev(ring.phi);
  prev[0] = 1;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (!ring.is_zero(rows[r][col])) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const ZCyc& pv = rows[rank][col];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (ring.is_zero(rows[i][col])) {
        for (std::size_t j = col + 1; j < cols; ++j) {
          if (!ring.is_zero(rows[i][j]))
            rows[i][j] = ring.exact_div(ring.mul(rows[i][j], pv), prev);
        }
        continue;
      }
      for (std::size_t j = col + 1; j < cols; ++j) {
        ZCyc t = ring.mul(rows[i][j], pv);
        ZCyc u = ring.mul(rows[i][col], rows[rank][j]);
        for (std::size_t q = 0; q < ring.phi; ++q) t[q] -= u[q];
        rows[i][j] = ring.exact_div(t, prev);
      }
      std::fill(rows[i][col].begin(), rows[i][col].end(), Int(0));
    }
    prev = pv;
    ++rank;
    if (stop_when_above >= 0 && rank > static_cast<std::size_t>(stop_when_above)) return rank;
  }
  return rank;
}

// Scale each row by the lcm of its coefficient denominators; the rowspace is
// unchanged and entries become algebraic integers.
inline std::vector<std::vector<ZCyc>> clear_denominators(const CycMatrix& a) {
  const std::size_t phi = static_cast<std::size_t>(euler_phi(a.conductor));
  std::vector<std::vector<ZCyc>> rows(a.rows, std::vector<ZCyc>(a.cols, ZCyc(phi)));
  for (std::size_t i = 0; i < a.rows; ++i) {
    Int scale = 1;
    for (std::size_t j = 0; j < a.cols; ++j)
      for (const Rat& r : a.at(i, j).coeffs())
        scale = int_lcm(scale, boost::multiprecision::denominator(r));
    for (std::size_t j = 0; j < a.cols; ++j) {
      const std::vector<Rat>& cs = a.at(i, j).coeffs();
      for (std::size_t q = 0; q < phi; ++q) {
        Rat scaled = cs[q] * Rat(scale);
        rows[i][j][q] = boost::multiprecision::numerator(scaled);
      }
    }
  }
  return rows;
}

}  // namespace detail

inline std::size_t rank(const CycMatrix& a) {
  detail::ZCycRing ring(a.conductor);
  return detail::zcyc_rank(ring, detail::clear_denominators(a), a.cols);
}

// rs(A) = rs(B), decided exactly: both ranks equal the rank of the stacked matrix.
inline bool rowspace_equal(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols != b.cols) throw std::invalid_argument("rowspace_equal: column count mismatch");
  if (a.conductor != b.conductor)
    throw std::invalid_argument("rowspace_equal: conductor mismatch; embed first");
  detail::ZCycRing ring(a.conductor);
  auto ra = detail::zcyc_rank(ring, detail::clear_denominators(a), a.cols);
  auto rb = detail::zcyc_rank(ring, detail::clear_denominators(b), b.cols);
  if (ra != rb) return false;
  auto stacked = detail::clear_denominators(a);
  auto extra = detail::clear_denominators(b);
  stacked.insert(stacked.end(), std::make_move_iterator(extra.begin()),
                 std::make_move_iterator(extra.end()));
  return detail::zcyc_rank(ring, std::move(stacked), a.cols,
                           static_cast<long>(ra)) == ra;
}

}  // namespace sct
