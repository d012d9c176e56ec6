// Formal local factors in U = q^{-s}: L, epsilon, gamma, shifts, segment
// products and rendering.

#include <catch2/catch_amalgamated.hpp>

#include "ramdepth/factors.hpp"

using namespace ramdepth;

namespace {

struct HasCode : Catch::Matchers::MatcherGenericBase {
  std::string code;
  explicit HasCode(std::string c) : code(std::move(c)) {}
  bool match(const Error& e) const { return e.code() == code; }
  std::string describe() const override { return "has error code " + code; }
};

}  // namespace

TEST_CASE("L-factors shift and multiply") {
  LFactor l = l_unramified_char(cs_z());  // 1 / (1 - z U)
  // s -> s + 1 multiplies U by v^-2
  REQUIRE(l.shifted(Rat(1)) ==
          LFactor(UPoly::one() - UPoly::monomial(cs_z() * cs_v(-2), 1)));
  REQUIRE(l.shifted(Rat(1, 2)) ==
          LFactor(UPoly::one() - UPoly::monomial(cs_z() * cs_v(-1), 1)));
  REQUIRE(l.shifted(Rat(3, 2)).shifted(Rat(-3, 2)) == l);
  REQUIRE(l_ramified() == LFactor(UPoly::one()));
  REQUIRE(l * l_ramified() == l);
  // constant term of an L-polynomial is pinned to one
  REQUIRE_THROWS_MATCHES(LFactor(UPoly::monomial(cs_z(), 1)), Error,
                         HasCode("SchemaError"));
}

TEST_CASE("epsilon factors are monomials with exact shifts") {
  EpsFactor e(cs_v(-1) * cs_z(-1), -1);
  REQUIRE(e.exponent() == -1);
  EpsFactor e1 = e.shifted(1);  // c -> c * v^{-2 * 1 * (-1)} = c * v^2
  REQUIRE(e1.constant() == cs_v(1) * cs_z(-1));
  REQUIRE(e1.exponent() == -1);
  EpsFactor prod = e * e1;
  REQUIRE(prod.exponent() == -2);
  REQUIRE(prod.constant() == cs_v(0) * cs_z(-2));
  REQUIRE_THROWS_MATCHES(EpsFactor(CoefScalar(), -1), Error,
                         HasCode("ZeroFrobeniusValue"));
}

TEST_CASE("gamma from the standard arrangement matches the closed form") {
  for (long n = 1; n <= 6; ++n) {
    SteinbergFactors f = steinberg_factors(n, cs_z(), -1);
    REQUIRE(gamma_from(f.eps, f.l, f.l_dual) == f.gamma);
  }
  SteinbergFactors g = steinberg_factors(3, cs_rat(Rat(-2, 3)), -1);
  REQUIRE(gamma_from(g.eps, g.l, g.l_dual) == g.gamma);
  REQUIRE_THROWS_MATCHES(steinberg_factors(2, cs_z(), 0), Error,
                         HasCode("UnsupportedPsiLevel"));
  REQUIRE_THROWS_MATCHES(steinberg_factors(2, CoefScalar(), -1), Error,
                         HasCode("ZeroFrobeniusValue"));
}

TEST_CASE("segment L-product over centered shifts") {
  LFactor base = l_unramified_char(cs_z());
  REQUIRE(l_segment(base, 1, 1) == base);
  // length 2, step 1: shifts -1/2 and +1/2
  REQUIRE(l_segment(base, 2, 1) == base.shifted(Rat(-1, 2)) * base.shifted(Rat(1, 2)));
  // step 3 spreads the same pattern three times as far
  REQUIRE(l_segment(base, 2, 3) == base.shifted(Rat(-3, 2)) * base.shifted(Rat(3, 2)));
  REQUIRE(l_segment(l_ramified(), 4, 2) == l_ramified());
}

TEST_CASE("segment epsilon collapses to a monomial or fails loudly") {
  // unramified degree-one base at the left end of a length-2 segment
  CoefScalar zb = cs_z() * cs_v(1);
  EpsFactor eb(cs_v(-1) / zb, -1);
  LFactor lb = l_unramified_char(zb);
  LFactor lbd = l_unramified_char(cs_rat(1) / zb);
  EpsFactor seg = eps_segment(eb, lb, lbd, 2);
  REQUIRE(seg.exponent() == -1);
  REQUIRE(seg.constant() == cs_rat(-1) / zb);  // (-1)^{l-1} v^{l-2} / z_b
  REQUIRE(eps_segment(eb, lb, lbd, 2) == steinberg_factors(2, cs_z(), -1).eps);

  // a ramified base pairs a trivial L with any epsilon: nothing to cancel
  EpsFactor er(cs_z(), 3);
  EpsFactor segr = eps_segment(er, l_ramified(), l_ramified(), 2);
  REQUIRE(segr.exponent() == 6);
  REQUIRE(segr.constant() == cs_z(2) * cs_v(-6));

  // mismatched L-pair leaves a non-monomial ratio
  REQUIRE_THROWS_MATCHES(eps_segment(eb, lb, l_ramified(), 2), Error,
                         HasCode("NonMonomialResult"));
}

TEST_CASE("as_monomial extraction") {
  URat m(UPoly::monomial(cs_v(2), 3), UPoly::monomial(cs_z(), 1));
  auto got = as_monomial(m);
  REQUIRE(got.has_value());
  REQUIRE(got->first == cs_v(2) / cs_z());
  REQUIRE(got->second == 2);
  URat notm(UPoly::one() - UPoly::monomial(cs_z(), 1));
  REQUIRE_FALSE(as_monomial(notm).has_value());
}

TEST_CASE("rendering is stable and omits unit exponents") {
  REQUIRE(render_coef(cs_v(-1) * cs_z(-1)) == "v^-1*z^-1");
  REQUIRE(render_coef(cs_rat(1)) == "1");
  REQUIRE(render_coef(cs_rat(Rat(-2, 3)) * cs_v(2)) == "-2/3*v^2");

  SteinbergFactors f3 = steinberg_factors(3, cs_z(), -1);
  REQUIRE(render_l(f3.l) == "1 / (1 - v^-2*z*U)");
  REQUIRE(render_eps(f3.eps) == "v^-1 * z^-1 * U^-1");
  REQUIRE(render_gamma(f3.gamma) == "(-v^3 + v*z*U) / (1 - v^4*z*U)");

  SteinbergFactors f1 = steinberg_factors(1, cs_z(), -1);
  REQUIRE(render_l(f1.l) == "1 / (1 - z*U)");
  REQUIRE(render_gamma(f1.gamma) == "(-v + v*z*U) / (1 - v^2*z*U)");

  SteinbergFactors f2 = steinberg_factors(2, cs_rat(1), -1);
  REQUIRE(render_gamma(f2.gamma) == "(v^2 - v*U) / (1 - v^3*U)");
  REQUIRE(render_eps(steinberg_factors(2, cs_z(), -1).eps) ==
          "-v^-1 * z^-1 * U^-1");
}
