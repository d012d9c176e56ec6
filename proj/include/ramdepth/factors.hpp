#ifndef RAMDEPTH_FACTORS_HPP_
#define RAMDEPTH_FACTORS_HPP_

#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "cyclotomic.hpp"
#include "polynomial.hpp"

namespace ramdepth {

// Coefficient tower for formal local factors.  Everything is exact:
//   VScalar    = rational functions in v (v^2 = q) over a cyclotomic field,
//   CoefScalar = rational functions in the named scalar z over VScalar.
// L-, epsilon- and gamma-factors are then polynomials / monomials / rational
// functions in U = q^{-s} with CoefScalar coefficients.  A shift s -> s + h
// acts by U -> U * v^{-2h}.
using VScalar = RationalFunction<Cyc>;
using CoefScalar = RationalFunction<VScalar>;
using AdditiveCharLevel = long;

inline CoefScalar cs_cyc(const Cyc& c) { return CoefScalar(VScalar(c)); }
inline CoefScalar cs_rat(const Rat& r) { return cs_cyc(Cyc(r)); }

inline VScalar v_power(long k) {
  if (k >= 0)
    return VScalar(Polynomial<Cyc>::monomial(Cyc(1), static_cast<std::size_t>(k)));
  return VScalar(Polynomial<Cyc>::one(),
                 Polynomial<Cyc>::monomial(Cyc(1), static_cast<std::size_t>(-k)));
}

inline CoefScalar cs_v(long k) { return CoefScalar(v_power(k)); }

inline CoefScalar cs_z(long k = 1) {
  if (k >= 0)
    return CoefScalar(
        Polynomial<VScalar>::monomial(VScalar(1), static_cast<std::size_t>(k)));
  return CoefScalar(Polynomial<VScalar>::one(),
                    Polynomial<VScalar>::monomial(VScalar(1),
                                                  static_cast<std::size_t>(-k)));
}

inline CoefScalar cs_sign(long k) { return cs_rat(Rat(k % 2 == 0 ? 1 : -1)); }

using UPoly = Polynomial<CoefScalar>;
using URat = RationalFunction<CoefScalar>;

inline CoefScalar shift_unit(const Rat& h) {
  Rat twice = h * 2;
  require(is_integer(twice), "SchemaError", "s-shifts must be half-integers");
  return cs_v(-rat_as_long(twice));
}

// L(s) = 1/P(U) with P(0) = 1.
class LFactor {
 public:
  LFactor() : p_(UPoly::one()) {}
  explicit LFactor(UPoly p) : p_(std::move(p)) {
    require(p_.coeff(0) == CoefScalar(1), "SchemaError",
            "L-factor polynomial must have constant term 1");
  }

  const UPoly& poly() const { return p_; }

  LFactor shifted(const Rat& h) const { return LFactor(p_.stretched(shift_unit(h))); }

  friend LFactor operator*(const LFactor& a, const LFactor& b) {
    return LFactor(a.p_ * b.p_);
  }

  friend bool operator==(const LFactor& a, const LFactor& b) { return a.p_ == b.p_; }
  friend bool operator!=(const LFactor& a, const LFactor& b) { return !(a == b); }

 private:
  UPoly p_;
};

inline LFactor l_ramified() { return LFactor(); }

inline LFactor l_unramified_char(const CoefScalar& z) {
  require(!z.is_zero(), "ZeroFrobeniusValue",
          "unramified character needs a nonzero Frobenius value");
  return LFactor(UPoly::one() - UPoly::monomial(z, 1));
}

// eps(s) = c * U^e; always a monomial, possibly with negative exponent.
class EpsFactor {
 public:
  EpsFactor(CoefScalar c, long e) : c_(std::move(c)), e_(e) {
    require(!c_.is_zero(), "ZeroFrobeniusValue", "epsilon constant must be nonzero");
  }

  const CoefScalar& constant() const { return c_; }
  long exponent() const { return e_; }

  EpsFactor shifted(long i) const { return EpsFactor(c_ * cs_v(-2 * i * e_), e_); }

  friend EpsFactor operator*(const EpsFactor& a, const EpsFactor& b) {
    return EpsFactor(a.c_ * b.c_, a.e_ + b.e_);
  }

  friend bool operator==(const EpsFactor& a, const EpsFactor& b) {
    return a.e_ == b.e_ && a.c_ == b.c_;
  }
  friend bool operator!=(const EpsFactor& a, const EpsFactor& b) { return !(a == b); }

 private:
  CoefScalar c_;
  long e_;
};

// gamma(s) as a reduced ratio of polynomials in U.
class GammaFactor {
 public:
  explicit GammaFactor(URat f) : f_(std::move(f)) {
    require(!f_.is_zero(), "ZeroFrobeniusValue", "gamma factor must be nonzero");
  }

  const URat& value() const { return f_; }

  friend bool operator==(const GammaFactor& a, const GammaFactor& b) {
    return a.f_ == b.f_;
  }
  friend bool operator!=(const GammaFactor& a, const GammaFactor& b) {
    return !(a == b);
  }

 private:
  URat f_;
};

// U^d * P(U^{-1} * v^{2j}): the positive-power clearing of a dual L-factor
// polynomial evaluated at 1 - s - j.
inline UPoly reflected_dual_poly(const UPoly& p, long j) {
  std::size_t d = static_cast<std::size_t>(p.deg());
  return p.stretched(cs_v(2 * j)).reversed(d);
}

// gamma = eps * L(1-s, dual) / L(s, .), assembled exactly.
inline GammaFactor gamma_from(const EpsFactor& eps, const LFactor& l,
                              const LFactor& l_dual) {
  long d = l_dual.poly().deg();
  // reflected_dual_poly(p, j) targets -s - j; the argument 1 - s is j = -1.
  UPoly qrev = reflected_dual_poly(l_dual.poly(), -1);
  long shift = eps.exponent() + d;
  UPoly num = l.poly();
  UPoly den = qrev;
  if (shift >= 0)
    num = (num * UPoly::monomial(eps.constant(), static_cast<std::size_t>(shift)));
  else {
    num = num.scaled(eps.constant());
    den = den.shifted_up(static_cast<std::size_t>(-shift));
  }
  return GammaFactor(URat(num, den));
}

struct SteinbergFactors {
  LFactor l;
  LFactor l_dual;
  EpsFactor eps;
  GammaFactor gamma;
};

// Closed forms for the Steinberg twist St_n(chi), chi unramified with
// Frobenius value z, and psi of level -1:
//   L     = 1 / (1 - z v^{1-n} U)
//   eps   = (-1)^{n-1} v^{-1} z^{-1} U^{-1}
//   gamma = (-1)^n v^n (1 - z v^{1-n} U) / (1 - z v^{1+n} U)
inline SteinbergFactors steinberg_factors(long n, const CoefScalar& z,
                                          AdditiveCharLevel level) {
  require(n >= 1, "SchemaError", "Steinberg factors need n >= 1");
  require(level == -1, "UnsupportedPsiLevel",
          "Steinberg closed forms are pinned at psi level -1");
  require(!z.is_zero(), "ZeroFrobeniusValue",
          "Steinberg twist needs a nonzero Frobenius value");
  CoefScalar zin = z.inverse();
  LFactor l(UPoly::one() - UPoly::monomial(z * cs_v(1 - n), 1));
  LFactor l_dual(UPoly::one() - UPoly::monomial(zin * cs_v(1 - n), 1));
  EpsFactor eps(cs_sign(n - 1) * cs_v(-1) * zin, -1);
  UPoly gnum = (UPoly::one() - UPoly::monomial(z * cs_v(1 - n), 1))
                   .scaled(cs_sign(n) * cs_v(n));
  UPoly gden = UPoly::one() - UPoly::monomial(z * cs_v(1 + n), 1);
  return {l, l_dual, eps, GammaFactor(URat(gnum, gden))};
}

// Product of shifted L-factors over a segment of length b and step s_sigma,
// centered: shifts s_sigma * (k - (1+b)/2) for k = 1..b.
inline LFactor l_segment(const LFactor& base, long b, long s_sigma) {
  require(b >= 1 && s_sigma >= 1, "SchemaError", "segment needs b, s_sigma >= 1");
  LFactor acc;
  for (long k = 1; k <= b; ++k)
    acc = acc * base.shifted(Rat(Int(s_sigma * (2 * k - 1 - b)), Int(2)));
  return acc;
}

// Monomial extraction: c * U^e when the reduced function is a single term
// over a single term.
inline std::optional<std::pair<CoefScalar, long>> as_monomial(const URat& f) {
  auto single = [](const UPoly& p) -> std::optional<std::pair<CoefScalar, long>> {
    if (p.is_zero()) return std::nullopt;
    auto [c, k] = p.lowest();
    if (static_cast<long>(k) != p.deg()) return std::nullopt;
    return std::make_pair(c, static_cast<long>(k));
  };
  auto n = single(f.num());
  auto d = single(f.den());
  if (!n || !d) return std::nullopt;
  return std::make_pair(n->first / d->first, n->second - d->second);
}

// eps of a segment of length len built on a cuspidal base:
//   prod_{i=0}^{len-1} eps(s+i, base) *
//   prod_{j=0}^{len-2} L(-s-j, base dual) / L(s+j, base).
// The L-ratio must reduce to a monomial in U; anything else is an error.
inline EpsFactor eps_segment(const EpsFactor& eps_base, const LFactor& l_base,
                             const LFactor& l_base_dual, long len) {
  require(len >= 1, "SchemaError", "segment length must be >= 1");
  EpsFactor acc = eps_base;
  for (long i = 1; i < len; ++i) acc = acc * eps_base.shifted(i);
  URat ratio(UPoly::one());
  long dq = l_base_dual.poly().deg();
  for (long j = 0; j <= len - 2; ++j) {
    UPoly pj = l_base.poly().stretched(cs_v(-2 * j));
    UPoly qj = reflected_dual_poly(l_base_dual.poly(), j);
    ratio = ratio * URat(pj.shifted_up(static_cast<std::size_t>(dq)), qj);
  }
  auto mono = as_monomial(ratio);
  require(mono.has_value(), "NonMonomialResult",
          "segment L-ratio did not reduce to a monomial");
  return EpsFactor(acc.constant() * mono->first, acc.exponent() + mono->second);
}

// U-exponent of the epsilon factor of a parameter with conductor a and
// dimension n against a level-c additive character.
inline long eps_exponent_wd(long a, long n, AdditiveCharLevel c) { return a + n * c; }

// --- rendering -------------------------------------------------------------
//
// Canonical text order inside a monomial: sign, rational magnitude, root of
// unity, v-power, z-power, U-power.

namespace detail {

inline std::optional<std::pair<Cyc, long>> vscalar_monomial(const VScalar& w) {
  auto single = [](const Polynomial<Cyc>& p) -> std::optional<std::pair<Cyc, long>> {
    if (p.is_zero()) return std::nullopt;
    auto [c, k] = p.lowest();
    if (static_cast<long>(k) != p.deg()) return std::nullopt;
    return std::make_pair(c, static_cast<long>(k));
  };
  auto n = single(w.num());
  auto d = single(w.den());
  if (!n || !d) return std::nullopt;
  return std::make_pair(n->first / d->first, n->second - d->second);
}

inline std::string power_text(const char* base, long e) {
  return e == 1 ? std::string(base) : std::string(base) + "^" + std::to_string(e);
}

struct MonomialText {
  bool neg = false;
  std::vector<std::string> parts;  // magnitude and power factors, in order
};

inline std::optional<MonomialText> coef_monomial_text(const CoefScalar& c) {
  auto single = [](const Polynomial<VScalar>& p)
      -> std::optional<std::pair<VScalar, long>> {
    if (p.is_zero()) return std::nullopt;
    auto [v, k] = p.lowest();
    if (static_cast<long>(k) != p.deg()) return std::nullopt;
    return std::make_pair(v, static_cast<long>(k));
  };
  auto n = single(c.num());
  auto d = single(c.den());
  if (!n || !d) return std::nullopt;
  long z_exp = n->second - d->second;
  auto w = vscalar_monomial(n->first / d->first);
  if (!w) return std::nullopt;
  MonomialText out;
  Cyc scalar = w->first;
  long v_exp = w->second;
  std::string root;
  Rat mag(1);
  if (scalar.is_rational()) {
    Rat r = scalar.as_rational();
    out.neg = r < 0;
    mag = out.neg ? Rat(-r) : r;
  } else {
    root = "(" + scalar.str() + ")";
  }
  if (mag != 1) out.parts.push_back(rat_str(mag));
  if (!root.empty()) out.parts.push_back(root);
  if (v_exp != 0) out.parts.push_back(power_text("v", v_exp));
  if (z_exp != 0) out.parts.push_back(power_text("z", z_exp));
  return out;
}

inline std::string join_monomial(MonomialText m, long u_exp, const char* sep) {
  if (u_exp != 0) m.parts.push_back(power_text("U", u_exp));
  std::string body;
  if (m.parts.empty()) body = "1";
  for (std::size_t i = 0; i < m.parts.size(); ++i) {
    if (i) body += sep;
    body += m.parts[i];
  }
  return (m.neg ? "-" : "") + body;
}

}  // namespace detail

inline std::string render_coef(const CoefScalar& c) {
  auto m = detail::coef_monomial_text(c);
  if (m) return detail::join_monomial(*m, 0, "*");
  return "<nonmonomial>";
}

inline std::string render_upoly(const UPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (long k = 0; k <= p.deg(); ++k) {
    CoefScalar c = p.coeff(static_cast<std::size_t>(k));
    if (c.is_zero()) continue;
    auto m = detail::coef_monomial_text(c);
    std::string term;
    bool neg = false;
    if (m) {
      neg = m->neg;
      m->neg = false;
      term = detail::join_monomial(*m, k, "*");
    } else {
      term = "(" + std::string("<nonmonomial>") + ")" +
             (k ? "*" + detail::power_text("U", k) : "");
    }
    if (first) {
      out += (neg ? "-" : "") + term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

inline std::string render_l(const LFactor& l) {
  if (l.poly() == UPoly::one()) return "1";
  return "1 / (" + render_upoly(l.poly()) + ")";
}

inline std::string render_eps(const EpsFactor& e) {
  auto m = detail::coef_monomial_text(e.constant());
  if (m) return detail::join_monomial(*m, e.exponent(), " * ");
  return "(" + render_upoly(UPoly(e.constant())) + ") * " +
         detail::power_text("U", e.exponent());
}

inline std::string render_gamma(const GammaFactor& g) {
  std::string num = render_upoly(g.value().num());
  if (g.value().den() == UPoly::one()) return num;
  return "(" + num + ") / (" + render_upoly(g.value().den()) + ")";
}

}  // namespace ramdepth

#endif
