#ifndef RAMDEPTH_POLYNOMIAL_HPP_
#define RAMDEPTH_POLYNOMIAL_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ramdepth {

// Dense polynomial over a field F.  F must be default-constructible to its
// zero, constructible from long, and support +, -, *, /, ==.  Coefficient
// vectors never carry trailing zeros, so the zero polynomial is empty and
// representations are canonical as long as F's are.
template <class F>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const F& v) {
    if (!(v == F{})) c_.push_back(v);
  }

  static Polynomial monomial(const F& v, std::size_t k) {
    Polynomial p;
    if (v == F{}) return p;
    p.c_.assign(k + 1, F{});
    p.c_[k] = v;
    return p;
  }

  static Polynomial one() { return Polynomial(F(1)); }

  long deg() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }

  F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F{}; }

  const F& leading() const {
    require(!c_.empty(), "DivisionByZero", "leading coefficient of zero polynomial");
    return c_.back();
  }

  // Lowest-degree nonzero coefficient and its degree.
  std::pair<F, std::size_t> lowest() const {
    require(!c_.empty(), "DivisionByZero", "lowest coefficient of zero polynomial");
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!(c_[k] == F{})) return {c_[k], k};
    return {c_.back(), c_.size() - 1};  // unreachable: no trailing zeros
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), F{});
    for (std::size_t k = 0; k < r.c_.size(); ++k)
      r.c_[k] = a.coeff(k) + b.coeff(k);
    r.trim();
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), F{});
    for (std::size_t k = 0; k < r.c_.size(); ++k)
      r.c_[k] = a.coeff(k) - b.coeff(k);
    r.trim();
    return r;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& v : r.c_) v = F{} - v;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, F{});
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == F{}) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }

  Polynomial scaled(const F& v) const {
    Polynomial r;
    if (v == F{}) return r;
    r.c_ = c_;
    for (auto& x : r.c_) x = x * v;
    r.trim();
    return r;
  }

  // Substitute x -> a * x.
  Polynomial stretched(const F& a) const {
    Polynomial r = *this;
    F power = F(1);
    for (std::size_t k = 0; k < r.c_.size(); ++k) {
      r.c_[k] = r.c_[k] * power;
      power = power * a;
    }
    r.trim();
    return r;
  }

  Polynomial shifted_up(std::size_t k) const {  // multiply by x^k
    if (is_zero() || k == 0) return *this;
    Polynomial r;
    r.c_.assign(c_.size() + k, F{});
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
  }

  // Coefficient reversal within degree d (>= deg()): x^d * p(1/x).
  Polynomial reversed(std::size_t d) const {
    Polynomial r;
    r.c_.assign(d + 1, F{});
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[d - k] = c_[k];
    r.trim();
    return r;
  }

  F eval(const F& x) const {
    F acc{};
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  friend std::pair<Polynomial, Polynomial> divmod(Polynomial a, const Polynomial& b) {
    require(!b.is_zero(), "DivisionByZero", "polynomial division by zero");
    Polynomial q;
    if (a.deg() >= b.deg()) q.c_.assign(a.c_.size() - b.c_.size() + 1, F{});
    while (!a.is_zero() && a.deg() >= b.deg()) {
      F f = a.leading() / b.leading();
      std::size_t k = static_cast<std::size_t>(a.deg() - b.deg());
      q.c_[k] = f;
      for (std::size_t i = 0; i < b.c_.size(); ++i)
        a.c_[i + k] = a.c_[i + k] - f * b.c_[i];
      a.trim();
    }
    q.trim();
    return {q, a};
  }

  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
    return divmod(a, b).first;
  }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) {
    return divmod(a, b).second;
  }

  Polynomial monic() const {
    require(!is_zero(), "DivisionByZero", "monic of zero polynomial");
    return scaled(F(1) / leading());
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == F{}) c_.pop_back();
  }

  std::vector<F> c_;
};

template <class F>
Polynomial<F> poly_gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    a = a % b;
    std::swap(a, b);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

// Extended Euclid: returns (g, u) with u*a = g (mod m), g = gcd(a, m) monic.
// Only the Bezout coefficient of `a` is needed (modular inversion).
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> poly_half_ext_gcd(Polynomial<F> a,
                                                          Polynomial<F> m) {
  Polynomial<F> u0 = Polynomial<F>::one(), u1;
  while (!m.is_zero()) {
    auto [q, r] = divmod(a, m);
    a = m;
    m = r;
    Polynomial<F> u2 = u0 - q * u1;
    u0 = u1;
    u1 = u2;
  }
  require(!a.is_zero(), "DivisionByZero", "gcd of zero polynomials");
  F lc = a.leading();
  return {a.scaled(F(1) / lc), u0.scaled(F(1) / lc)};
}

// Quotient field element num/den in canonical form: gcd-reduced, with the
// denominator's lowest-degree nonzero coefficient scaled to one (this keeps
// the L-factor shape "1 - c*U" intact under reduction, unlike a monic
// normalization).
template <class F>
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial<F>::one()) {}
  RationalFunction(const F& v) : num_(v), den_(Polynomial<F>::one()) {}
  RationalFunction(long v) : num_(F(v)), den_(Polynomial<F>::one()) {}
  RationalFunction(Polynomial<F> num, Polynomial<F> den = Polynomial<F>::one())
      : num_(std::move(num)), den_(std::move(den)) {
    require(!den_.is_zero(), "DivisionByZero", "rational function with zero denominator");
    normalize();
  }

  const Polynomial<F>& num() const { return num_; }
  const Polynomial<F>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == Polynomial<F>::one(); }
  bool is_constant() const { return is_polynomial() && num_.deg() <= 0; }

  F constant() const {
    require(is_constant(), "NonMonomialResult", "value is not a constant");
    return num_.coeff(0);
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    require(!b.is_zero(), "DivisionByZero", "division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  RationalFunction inverse() const {
    require(!is_zero(), "DivisionByZero", "inverse of zero");
    return RationalFunction(den_, num_);
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Polynomial<F>::one();
      return;
    }
    Polynomial<F> g = poly_gcd(num_, den_);
    if (g.deg() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    F unit = den_.lowest().first;
    if (!(unit == F(1))) {
      F inv = F(1) / unit;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Polynomial<F> num_, den_;
};

}  // namespace ramdepth

#endif
