#ifndef RAMDEPTH_INNERFORMS_HPP_
#define RAMDEPTH_INNERFORMS_HPP_

#include <numeric>
#include <string>
#include <vector>

#include "conductor.hpp"
#include "rational.hpp"

namespace ramdepth {

// GL_m(D) with D of index d over the base field: an inner form of GL_n, n = d*m.
struct InnerForm {
  long n = 1;
  long d = 1;
  long m = 1;
};

inline void validate_inner_form(const InnerForm& f) {
  require(f.d >= 1 && f.m >= 1, "SchemaError", "inner form needs d, m >= 1");
  require(f.n == f.d * f.m, "SchemaError", "inner form needs n = d * m");
}

// Unitary supercuspidal datum sigma of GL_a(D): depth, torsion number s_sigma,
// and the unramified flag (only a = 1, depth 0 can be unramified).  The
// conductor exponent f(sigma) is derived:
//   unramified: d - 1;  ramified: a * d * (depth + 1).
struct CuspidalDatum {
  long a = 1;
  Rat depth = Rat(0);
  long s_sigma = 1;
  bool unramified = false;
};

inline long cuspidal_conductor(const CuspidalDatum& c, const InnerForm& form) {
  if (c.unramified) return form.d - 1;
  Rat f = Rat(c.a * form.d) * (c.depth + 1);
  require(is_integer(f) && f >= 1, "SchemaError",
          "cuspidal conductor must be a positive integer");
  return rat_as_long(f);
}

// Essentially square-integrable datum: the segment of length b over sigma on
// GL_m(D), m = a * b.
struct EssL2Datum {
  InnerForm form;
  CuspidalDatum sigma;
  long b = 1;
};

inline void validate_essl2(const EssL2Datum& e) {
  validate_inner_form(e.form);
  const CuspidalDatum& c = e.sigma;
  require(c.a >= 1 && e.b >= 1, "SchemaError", "segment needs a, b >= 1");
  require(c.a * e.b == e.form.m, "SchemaError", "segment needs a * b = m");
  require(c.depth >= 0, "SchemaError", "depth must be nonnegative");
  require(Int(c.a * e.form.d) % denominator(c.depth) == 0, "SchemaError",
          "depth denominator must divide a * d");
  require(c.s_sigma >= 1 && (c.a * e.form.d) % c.s_sigma == 0, "SchemaError",
          "s_sigma must divide a * d");
  if (e.form.d == 1)
    require(c.s_sigma == 1, "SchemaError", "split-form data need s_sigma = 1");
  if (c.unramified) {
    require(c.a == 1 && c.depth == 0, "SchemaError",
            "unramified sigma needs a = 1 and depth 0");
    require(c.s_sigma == e.form.d, "SchemaError",
            "unramified sigma needs s_sigma = d");
  } else {
    require(cuspidal_conductor(c, e.form) % c.s_sigma == 0, "SchemaError",
            "s_sigma must divide the cuspidal conductor");
  }
}

// f(pi): n - 1 for the unramified-sigma (Steinberg-like) case, b * f(sigma)
// otherwise.
inline long conductor_essl2(const EssL2Datum& e) {
  validate_essl2(e);
  if (e.sigma.unramified) return e.form.n - 1;
  return e.b * cuspidal_conductor(e.sigma, e.form);
}

// d(pi), computed two ways: max{(f(pi) - n)/n, 0} and d(sigma); the agreement
// is asserted.
inline Rat depth_essl2(const EssL2Datum& e) {
  long f = conductor_essl2(e);
  Rat via_conductor = std::max(Rat(f - e.form.n) / Rat(e.form.n), Rat(0));
  Rat via_sigma = e.sigma.depth;
  require(via_conductor == via_sigma, "DepthMismatch",
          "conductor and cuspidal depths disagree");
  require(Int(e.form.n) % denominator(via_sigma) == 0, "DepthMismatch",
          "depth denominator must divide n");
  return via_sigma;
}

// Godement-Jacquet exponent f(pi, psi) = f(pi) + n * c(psi); the level enters
// only through this linear bookkeeping term.
inline long godement_jacquet_f(const EssL2Datum& e, AdditiveCharLevel c) {
  return conductor_essl2(e) + e.form.n * c;
}

// Transfer to the split form GL_n(F): the segment stretches by s_sigma, the
// cuspidal support shrinks to GL_{a*}(F) with a* = a*d/s_sigma, conductor and
// depth are preserved.
inline EssL2Datum jl_transfer(const EssL2Datum& e) {
  validate_essl2(e);
  long n = e.form.n;
  EssL2Datum out;
  out.form = InnerForm{n, 1, n};
  out.b = e.b * e.sigma.s_sigma;
  CuspidalDatum& star = out.sigma;
  star.a = e.sigma.a * e.form.d / e.sigma.s_sigma;
  star.s_sigma = 1;
  star.unramified = e.sigma.unramified;
  if (star.unramified) {
    star.depth = Rat(0);
  } else {
    long f_star = cuspidal_conductor(e.sigma, e.form) / e.sigma.s_sigma;
    star.depth = std::max((Rat(f_star) - Rat(star.a)) / Rat(star.a), Rat(0));
  }
  validate_essl2(out);
  require(conductor_essl2(out) == conductor_essl2(e), "PreservationFailure",
          "transfer changed the conductor");
  require(depth_essl2(out) == depth_essl2(e), "PreservationFailure",
          "transfer changed the depth");
  return out;
}

struct PreservationReport {
  EssL2Datum input;
  EssL2Datum transfer;
  long f_pi = 0;
  Rat d_pi;
  long f_parameter = 0;
  Rat d_parameter;
  bool pass = false;
};

// Builds the parameter skeleton of the transferred datum (cuspidal summand
// tensor SL2 of dimension b*s_sigma) and checks that its conductor and depth
// reproduce f(pi) and d(pi).
inline PreservationReport verify_depth_preservation(const EssL2Datum& e) {
  PreservationReport r;
  r.input = e;
  r.transfer = jl_transfer(e);
  InertialDatum rho{UnramifiedChar{}};
  if (!r.transfer.sigma.unramified) {
    RamifiedCharSymbol sym;
    sym.dim = r.transfer.sigma.a;
    sym.conductor_exponent = cuspidal_conductor(r.transfer.sigma, r.transfer.form);
    rho = sym;
  }
  WDParameter phi({WDSummand{rho, r.transfer.b}});
  r.f_pi = conductor_essl2(e);
  r.d_pi = depth_essl2(e);
  r.f_parameter = conductor_wd(phi);
  r.d_parameter = depth_wd(phi);
  r.pass = (r.f_pi == r.f_parameter) && (r.d_pi == r.d_parameter);
  require(r.pass, "PreservationFailure",
          "parameter skeleton disagrees with the segment data");
  return r;
}

// Irreducible representation datum: essentially square-integrable factors on
// a Levi of GL_m(D); its depth is the maximum of the factor depths.
struct IrrDatum {
  InnerForm form;
  std::vector<EssL2Datum> factors;
};

inline Rat depth_irr(const IrrDatum& pi) {
  validate_inner_form(pi.form);
  require(!pi.factors.empty(), "SchemaError", "Levi datum needs >= 1 factor");
  long m_total = 0;
  Rat d(0);
  for (const auto& f : pi.factors) {
    require(f.form.d == pi.form.d, "SchemaError",
            "Levi factors must share the division algebra");
    m_total += f.form.m;
    d = std::max(d, depth_essl2(f));
  }
  require(m_total == pi.form.m, "SchemaError", "Levi factor sizes must sum to m");
  return d;
}

// Deterministic enumeration of valid segment data with a*d <= max_ad,
// b <= max_b, and reduced depth numerator <= max_depth_num.
inline std::vector<EssL2Datum> enumerate_essl2(long max_ad, long max_b,
                                               long max_depth_num) {
  std::vector<EssL2Datum> out;
  for (long d = 1; d <= max_ad; ++d)
    for (long a = 1; a * d <= max_ad; ++a)
      for (long b = 1; b <= max_b; ++b) {
        InnerForm form{a * b * d, d, a * b};
        if (a == 1) {
          EssL2Datum e{form, CuspidalDatum{1, Rat(0), d, true}, b};
          validate_essl2(e);
          out.push_back(e);
        }
        long ad = a * d;
        for (long q = 1; q <= ad; ++q) {
          if (ad % q != 0) continue;
          for (long p = 0; p <= max_depth_num; ++p) {
            if (boost::multiprecision::gcd(Int(p), Int(q)) != 1) continue;
            Rat depth = Rat(Int(p), Int(q));
            long f_sigma = rat_as_long(Rat(ad) * (depth + 1));
            for (long s = 1; s <= ad; ++s) {
              if (ad % s != 0 || f_sigma % s != 0) continue;
              if (d == 1 && s != 1) continue;
              EssL2Datum e{form, CuspidalDatum{a, depth, s, false}, b};
              validate_essl2(e);
              out.push_back(e);
            }
          }
        }
      }
  return out;
}

}  // namespace ramdepth

#endif
