#ifndef RAMDEPTH_CYCLOTOMIC_HPP_
#define RAMDEPTH_CYCLOTOMIC_HPP_

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace ramdepth {

// N-th cyclotomic polynomial, exact, memoized.  Phi_1 = x - 1.
inline const Polynomial<Rat>& cyclotomic_polynomial(long n) {
  static std::map<long, Polynomial<Rat>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Polynomial<Rat> p = Polynomial<Rat>::monomial(Rat(1), static_cast<std::size_t>(n)) -
                      Polynomial<Rat>::one();
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = p / cyclotomic_polynomial(d);
  return cache.emplace(n, std::move(p)).first->second;
}

// Element of Q(zeta_n), stored as the coefficient vector of
// 1, zeta, ..., zeta^{n-1} in canonical form: reduced mod Phi_n, so only the
// first deg(Phi_n) entries may be nonzero and equality is vector equality
// (after promoting both sides to a common conductor).
class Cyc {
 public:
  Cyc() : n_(1), c_(1, Rat(0)) {}
  Cyc(const Rat& v) : n_(1), c_(1, v) {}
  Cyc(long v) : n_(1), c_(1, Rat(v)) {}
  Cyc(int v) : n_(1), c_(1, Rat(v)) {}

  static Cyc root_of_unity(long n, long k) {
    require(n >= 1, "SchemaError", "root of unity needs conductor >= 1");
    k %= n;
    if (k < 0) k += n;
    std::vector<Rat> raw(static_cast<std::size_t>(n), Rat(0));
    raw[static_cast<std::size_t>(k)] = Rat(1);
    return Cyc(n, std::move(raw));
  }

  long conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
      if (c_[k] != 0) return false;
    return true;
  }

  Rat as_rational() const {
    require(is_rational(), "NonIntegerInnerProduct",
            "cyclotomic value is not rational");
    return c_[0];
  }

  Cyc promoted(long m) const {
    require(m % n_ == 0, "SchemaError", "conductor promotion must be divisible");
    if (m == n_) return *this;
    long stride = m / n_;
    std::vector<Rat> raw(static_cast<std::size_t>(m), Rat(0));
    for (long k = 0; k < n_; ++k)
      raw[static_cast<std::size_t>(k * stride)] = c_[static_cast<std::size_t>(k)];
    return Cyc(m, std::move(raw));
  }

  friend Cyc operator+(const Cyc& a, const Cyc& b) {
    long m = lcm_long(a.n_, b.n_);
    Cyc x = a.promoted(m), y = b.promoted(m);
    for (std::size_t k = 0; k < x.c_.size(); ++k) x.c_[k] += y.c_[k];
    return Cyc(m, std::move(x.c_));
  }

  friend Cyc operator-(const Cyc& a, const Cyc& b) {
    long m = lcm_long(a.n_, b.n_);
    Cyc x = a.promoted(m), y = b.promoted(m);
    for (std::size_t k = 0; k < x.c_.size(); ++k) x.c_[k] -= y.c_[k];
    return Cyc(m, std::move(x.c_));
  }

  Cyc operator-() const {
    Cyc r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    long m = lcm_long(a.n_, b.n_);
    Cyc x = a.promoted(m), y = b.promoted(m);
    std::vector<Rat> raw(static_cast<std::size_t>(2 * m), Rat(0));
    for (long i = 0; i < m; ++i) {
      if (x.c_[static_cast<std::size_t>(i)] == 0) continue;
      for (long j = 0; j < m; ++j) {
        if (y.c_[static_cast<std::size_t>(j)] == 0) continue;
        raw[static_cast<std::size_t>(i + j)] +=
            x.c_[static_cast<std::size_t>(i)] * y.c_[static_cast<std::size_t>(j)];
      }
    }
    return Cyc(m, std::move(raw));
  }

  // Complex conjugation zeta -> zeta^{-1}.
  Cyc conj() const {
    std::vector<Rat> raw(static_cast<std::size_t>(n_), Rat(0));
    for (long k = 0; k < n_; ++k)
      raw[static_cast<std::size_t>((n_ - k) % n_)] = c_[static_cast<std::size_t>(k)];
    return Cyc(n_, std::move(raw));
  }

  Cyc inverse() const {
    require(!is_zero(), "DivisionByZero", "inverse of zero cyclotomic value");
    Polynomial<Rat> a = as_poly();
    auto [g, u] = poly_half_ext_gcd(a, cyclotomic_polynomial(n_));
    require(g == Polynomial<Rat>::one(), "DivisionByZero",
            "cyclotomic inversion failed");
    Polynomial<Rat> inv = u % cyclotomic_polynomial(n_);
    std::vector<Rat> raw(static_cast<std::size_t>(n_), Rat(0));
    for (long k = 0; k <= inv.deg(); ++k)
      raw[static_cast<std::size_t>(k)] = inv.coeff(static_cast<std::size_t>(k));
    return Cyc(n_, std::move(raw));
  }

  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

  friend bool operator==(const Cyc& a, const Cyc& b) {
    long m = lcm_long(a.n_, b.n_);
    return a.promoted(m).c_ == b.promoted(m).c_;
  }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  // |x|^2 = x * conj(x); rational and nonnegative for the values that arise
  // from characters, but returned as a Cyc so callers can test exactly.
  Cyc norm_squared() const { return *this * conj(); }

  std::string str() const {
    if (is_rational()) return rat_str(c_[0]);
    std::ostringstream out;
    bool first = true;
    for (long k = 0; k < n_; ++k) {
      const Rat& v = c_[static_cast<std::size_t>(k)];
      if (v == 0) continue;
      Rat mag = v < 0 ? Rat(-v) : v;
      if (first) {
        if (v < 0) out << "-";
        first = false;
      } else {
        out << (v < 0 ? " - " : " + ");
      }
      if (k == 0) {
        out << rat_str(mag);
        continue;
      }
      if (mag != 1) out << rat_str(mag) << "*";
      out << "zeta" << n_;
      if (k > 1) out << "^" << k;
    }
    if (first) out << "0";
    return out.str();
  }

 private:
  Cyc(long n, std::vector<Rat> raw) : n_(n) { reduce(std::move(raw)); }

  Polynomial<Rat> as_poly() const {
    Polynomial<Rat> p;
    for (long k = n_; k-- > 0;)
      p = p + Polynomial<Rat>::monomial(c_[static_cast<std::size_t>(k)],
                                        static_cast<std::size_t>(k));
    return p;
  }

  void reduce(std::vector<Rat> raw) {
    std::vector<Rat> folded(static_cast<std::size_t>(n_), Rat(0));
    for (std::size_t k = 0; k < raw.size(); ++k)
      folded[k % static_cast<std::size_t>(n_)] += raw[k];
    const Polynomial<Rat>& phi = cyclotomic_polynomial(n_);
    Polynomial<Rat> p;
    for (long k = n_; k-- > 0;)
      p = p + Polynomial<Rat>::monomial(folded[static_cast<std::size_t>(k)],
                                        static_cast<std::size_t>(k));
    if (p.deg() >= phi.deg()) p = p % phi;
    c_.assign(static_cast<std::size_t>(n_), Rat(0));
    for (long k = 0; k <= p.deg(); ++k)
      c_[static_cast<std::size_t>(k)] = p.coeff(static_cast<std::size_t>(k));
  }

  long n_;
  std::vector<Rat> c_;
};

}  // namespace ramdepth

#endif
