// Writes the bundled fixture corpus: small Galois-type filtered groups with
// characters, parameters and segment data, each carrying hand-checked
// expectation values that the `verify` subcommand replays.

#include <filesystem>
#include <iostream>
#include <string>
#include <utility>

#include "ramdepth/document.hpp"
#include "ramdepth/fixtures.hpp"

namespace {

using namespace ramdepth;

Json ex(Json value, const std::string& prov) {
  return Json{{"value", std::move(value)}, {"provenance", prov}};
}

Json rq(long num, long den) { return rat_to_json(make_rat(num, den)); }

FixtureDocument two_octahedral() {
  OctahedralFixture oct = binary_octahedral_fixture();
  FixtureDocument doc;
  doc.name = "two_octahedral";
  doc.fg = oct.base.fg;
  doc.characters = oct.base.characters;  // chi2, ad3
  doc.parameters = {
      ParameterSpec{"lift_chi2", "monomial", {{"orbit", "chi2", 1, 1, 1}}},
      ParameterSpec{"lift_ad3", "monomial", {{"orbit", "ad3", 1, 1, 1}}},
      ParameterSpec{"wd_chi2", "wd", {{"finite_orbit", "chi2", 1, 1, 1}}},
      ParameterSpec{"wd_mixed", "wd",
                    {{"finite_orbit", "chi2", 1, 1, 1}, {"unramified", "", 2, 1, 1}}},
  };
  const std::string model = "order-48 matrix model over Q(zeta_8)";
  const std::string slopes = "slope sums over level orders [48,24,8,2,2,1]";
  doc.expect["group_order"] = ex(48, model);
  doc.expect["num_classes"] = ex(8, "class count of the order-48 model");
  doc.expect["inertia_order"] = ex(24, "second stored level");
  doc.expect["lower_order/1"] = ex(8, "third stored level");
  doc.expect["lower_order/3"] = ex(2, "fifth stored level");
  doc.expect["lower_order/5"] = ex(1, "levels past the stored tail are trivial");
  doc.expect["phi/1"] = ex(rq(1, 3), slopes);
  doc.expect["phi/2"] = ex(rq(5, 12), slopes);
  doc.expect["phi/3"] = ex(rq(1, 2), slopes);
  doc.expect["phi/4"] = ex(rq(13, 24), slopes);
  doc.expect["psi/1:3"] = ex(1, "inverse of the transition function");
  doc.expect["psi/5:12"] = ex(2, "inverse of the transition function");
  doc.expect["psi/1:2"] = ex(3, "inverse of the transition function");
  doc.expect["upper_order/1:3"] = ex(8, "upper numbering via the inverse function");
  doc.expect["upper_order/1:2"] = ex(2, "upper numbering via the inverse function");
  doc.expect["upper_order/13:24"] = ex(1, "upper numbering via the inverse function");
  doc.expect["degree/chi2"] = ex(2, "trace of the identity matrix");
  doc.expect["conductor/chi2"] =
      ex(3, "weighted codimension sum 2 + 2/3 + 1/6 + 1/6 over the levels");
  doc.expect["depth_kernel/chi2"] =
      ex(rq(1, 2), "faithful character: depth is phi at the last stored level");
  doc.expect["kernel_order/chi2"] = ex(1, "trace 2 only at the identity");
  doc.expect["dim_fixed/chi2/0"] = ex(0, "no fixed vectors on the inertia level");
  doc.expect["dim_fixed/chi2/3"] = ex(0, "central level acts by -1");
  doc.expect["dim_fixed/chi2/5"] = ex(2, "trivial level fixes everything");
  doc.expect["degree/ad3"] = ex(3, "chi x dual chi minus the trivial summand");
  doc.expect["conductor/ad3"] =
      ex(4, "weighted codimension sum 3 + 1 over the first two levels");
  doc.expect["depth_kernel/ad3"] =
      ex(rq(1, 3), "kernel is the center, phi at the deepest level outside it");
  doc.expect["kernel_order/ad3"] = ex(2, "value 3 exactly on the center");
  doc.expect["dim_fixed/ad3/1"] = ex(0, "restriction to the level stays irreducible");
  doc.expect["dim_fixed/ad3/2"] = ex(3, "central level is in the kernel");
  doc.expect["proj/lift_chi2/depth_bar"] = ex(rq(1, 2), "depth of the faithful lift");
  doc.expect["proj/lift_chi2/depth_proj"] =
      ex(rq(1, 3), "scalar classes form the center; phi at the level above it");
  doc.expect["proj/lift_chi2/strict"] =
      ex(true, "projective depth drops strictly for this wild lift");
  doc.expect["proj/lift_chi2/ess_tame"] =
      ex(false, "lift is nonscalar on the derived subgroup of the wild level");
  doc.expect["proj/lift_chi2/min_twist"] =
      ex(rq(1, 2), "both degree-one twists keep depth 1/2");
  doc.expect["proj/lift_chi2/twist_count"] = ex(2, "abelianized group has order 2");
  doc.expect["proj/lift_chi2/twist_index"] = ex(0, "minimum already at the trivial twist");
  doc.expect["proj/lift_chi2/lift_degree"] = ex(2, model);
  doc.expect["proj/lift_chi2/lift_conductor"] = ex(3, "same as the character conductor");
  doc.expect["proj/lift_chi2/lift_kernel_order"] = ex(1, "faithful lift");
  doc.expect["proj/lift_chi2/proj_kernel_order"] = ex(2, "center of the model");
  doc.expect["proj/lift_ad3/depth_bar"] = ex(rq(1, 3), "kernel of the lift is the center");
  doc.expect["proj/lift_ad3/depth_proj"] = ex(rq(1, 3), "scalar classes equal the kernel");
  doc.expect["proj/lift_ad3/strict"] = ex(false, "no drop for this lift");
  doc.expect["proj/lift_ad3/ess_tame"] =
      ex(true, "lift is scalar on the derived subgroup of the wild level");
  doc.expect["proj/lift_ad3/min_twist"] =
      ex(rq(1, 3), "twisting cannot go below the projective depth");
  doc.expect["proj/lift_ad3/proj_kernel_order"] = ex(2, "center of the model");
  doc.expect["wd/wd_chi2/conductor"] = ex(3, "single summand, multiplier one");
  doc.expect["wd/wd_chi2/depth"] = ex(rq(1, 2), "depth of the single orbit summand");
  doc.expect["wd/wd_chi2/dim"] = ex(2, "degree times multiplier");
  doc.expect["wd/wd_mixed/conductor"] =
      ex(4, "3 from the orbit plus b-1 = 1 from the unramified block");
  doc.expect["wd/wd_mixed/depth"] = ex(rq(1, 2), "maximum over summands");
  doc.expect["wd/wd_mixed/dim"] = ex(4, "2 + 1*2");
  return doc;
}

FixtureDocument two_tetrahedral() {
  GaloisFixture tt = binary_tetrahedral_fixture();
  FixtureDocument doc;
  doc.name = "two_tetrahedral";
  doc.fg = tt.fg;
  doc.characters = tt.characters;
  doc.parameters = {
      ParameterSpec{"lift_chi2", "monomial", {{"orbit", "chi2", 1, 1, 1}}},
  };
  const std::string slopes = "slope sums over level orders [24,24,8,2,2,1]";
  doc.expect["group_order"] = ex(24, "order-24 matrix model over Q(zeta_8)");
  doc.expect["num_classes"] = ex(7, "class count of the order-24 model");
  doc.expect["inertia_order"] = ex(24, "totally ramified presentation");
  doc.expect["lower_order/1"] = ex(8, "third stored level");
  doc.expect["phi/1"] = ex(rq(1, 3), slopes);
  doc.expect["phi/3"] = ex(rq(1, 2), slopes);
  doc.expect["degree/chi2"] = ex(2, "trace of the identity matrix");
  doc.expect["conductor/chi2"] =
      ex(3, "weighted codimension sum 2 + 2/3 + 1/6 + 1/6; agrees with the "
            "order-48 presentation of the same character");
  doc.expect["depth_kernel/chi2"] =
      ex(rq(1, 2), "presentation-independent depth of the faithful lift");
  doc.expect["proj/lift_chi2/depth_bar"] = ex(rq(1, 2), "depth of the faithful lift");
  doc.expect["proj/lift_chi2/depth_proj"] = ex(rq(1, 3), "scalar classes form the center");
  doc.expect["proj/lift_chi2/strict"] = ex(true, "wild lift with a strict drop");
  doc.expect["proj/lift_chi2/ess_tame"] =
      ex(false, "nonscalar on the derived subgroup of the wild level");
  doc.expect["proj/lift_chi2/min_twist"] =
      ex(rq(1, 2), "all three cubic twists keep the kernel trivial");
  doc.expect["proj/lift_chi2/twist_count"] = ex(3, "abelianized group has order 3");
  return doc;
}

FixtureDocument quaternion() {
  GaloisFixture q8 = quaternion_fixture();
  FixtureDocument doc;
  doc.name = "quaternion";
  doc.fg = q8.fg;
  doc.characters = q8.characters;
  doc.parameters = {
      ParameterSpec{"lift_chi2", "monomial", {{"orbit", "chi2", 1, 1, 1}}},
      ParameterSpec{"wd_chi2", "wd", {{"finite_orbit", "chi2", 1, 1, 1}}},
      ParameterSpec{"wd_double", "wd", {{"finite_orbit", "chi2", 2, 1, 1}}},
  };
  const std::string slopes = "slope sums over level orders [8,8,8,2,2,1]";
  doc.expect["group_order"] = ex(8, "matrix model of the quaternion units");
  doc.expect["num_classes"] = ex(5, "classes 1, -1, i, j, k");
  doc.expect["inertia_order"] = ex(8, "totally ramified presentation");
  doc.expect["phi/1"] = ex(1, slopes);
  doc.expect["phi/2"] = ex(rq(5, 4), slopes);
  doc.expect["phi/3"] = ex(rq(3, 2), slopes);
  doc.expect["psi/3:2"] = ex(3, "inverse of the transition function");
  doc.expect["upper_order/3:2"] = ex(2, "upper numbering via the inverse function");
  doc.expect["degree/chi2"] = ex(2, "trace of the identity matrix");
  doc.expect["conductor/chi2"] =
      ex(5, "weighted codimension sum 2 + 2 + 1/2 + 1/2 over the levels");
  doc.expect["depth_kernel/chi2"] =
      ex(rq(3, 2), "faithful character: phi at the last stored level");
  doc.expect["dim_fixed/chi2/2"] = ex(0, "central level acts by -1");
  doc.expect["proj/lift_chi2/depth_bar"] = ex(rq(3, 2), "depth of the faithful lift");
  doc.expect["proj/lift_chi2/depth_proj"] =
      ex(1, "scalar classes form the center; phi at the level above it");
  doc.expect["proj/lift_chi2/strict"] = ex(true, "strict drop for the faithful lift");
  doc.expect["proj/lift_chi2/ess_tame"] =
      ex(false, "nonscalar on the derived subgroup of the wild level");
  doc.expect["proj/lift_chi2/min_twist"] =
      ex(rq(3, 2), "every degree-one twist keeps the kernel trivial");
  doc.expect["proj/lift_chi2/twist_count"] = ex(4, "abelianization of order 4");
  doc.expect["proj/lift_chi2/twist_index"] = ex(0, "minimum at the trivial twist");
  doc.expect["wd/wd_chi2/conductor"] = ex(5, "single summand, multiplier one");
  doc.expect["wd/wd_chi2/depth"] = ex(rq(3, 2), "depth of the single orbit summand");
  doc.expect["wd/wd_double/conductor"] = ex(10, "multiplier two doubles the conductor");
  doc.expect["wd/wd_double/depth"] = ex(rq(3, 2), "depth ignores the multiplier");
  doc.expect["wd/wd_double/dim"] = ex(4, "degree times multiplier");
  return doc;
}

FixtureDocument s3() {
  GaloisFixture fx = s3_fixture();
  FixtureDocument doc;
  doc.name = "s3";
  doc.fg = fx.fg;
  doc.characters = {{"ind_xi3", induce(fx.subchars[0].second)}};
  doc.subchars = fx.subchars;
  doc.parameters = {
      ParameterSpec{"p3", "monomial", {{"induced", "xi3", 1, 1, 1}}},
      ParameterSpec{"wd_ind", "wd", {{"finite_orbit", "ind_xi3", 1, 1, 1}}},
      ParameterSpec{"wd_twisted_st", "wd", {{"finite_orbit", "ind_xi3", 2, 1, 1}}},
  };
  doc.expect["group_order"] = ex(6, "symmetric group on three letters");
  doc.expect["num_classes"] = ex(3, "identity, rotations, transpositions");
  doc.expect["inertia_order"] = ex(3, "rotation subgroup");
  doc.expect["phi/1"] = ex(1, "slope sums over level orders [6,3,3,1]");
  doc.expect["phi/2"] = ex(rq(4, 3), "slope drops to 1/3 past the stored tail");
  doc.expect["degree/ind_xi3"] = ex(2, "index of the rotation subgroup");
  doc.expect["conductor/ind_xi3"] =
      ex(4, "weighted codimension sum 2 + 2 over the first two levels");
  doc.expect["depth_kernel/ind_xi3"] = ex(1, "trivial kernel, phi at the wild level");
  doc.expect["kernel_order/ind_xi3"] = ex(1, "value 2 only at the identity");
  doc.expect["proj/p3/depth_bar"] = ex(1, "depth of the induced lift");
  doc.expect["proj/p3/depth_proj"] =
      ex(1, "no nontrivial scalar class, kernel stays trivial");
  doc.expect["proj/p3/strict"] = ex(false, "no drop for this tame-type lift");
  doc.expect["proj/p3/ess_tame"] =
      ex(true, "derived subgroup of the wild level is trivial");
  doc.expect["proj/p3/min_twist"] = ex(1, "both degree-one twists keep depth 1");
  doc.expect["proj/p3/twist_count"] = ex(2, "abelianization of order 2");
  doc.expect["proj/p3/twist_index"] = ex(0, "minimum at the trivial twist");
  doc.expect["proj/p3/lift_degree"] = ex(2, "index of the inducing subgroup");
  doc.expect["wd/wd_ind/conductor"] = ex(4, "single summand, multiplier one");
  doc.expect["wd/wd_ind/depth"] = ex(1, "depth of the induced orbit");
  doc.expect["wd/wd_twisted_st/conductor"] = ex(8, "multiplier two doubles the conductor");
  doc.expect["wd/wd_twisted_st/dim"] = ex(4, "degree times multiplier");
  return doc;
}

FixtureDocument s3_times_c2() {
  GaloisFixture fx = s3_times_c2_fixture();
  FixtureDocument doc;
  doc.name = "s3_times_c2";
  doc.fg = fx.fg;
  doc.characters = {{"ind_xi3", induce(fx.subchars[0].second)}};
  doc.subchars = fx.subchars;
  doc.parameters = {
      ParameterSpec{"p3", "monomial", {{"induced", "xi3", 1, 1, 1}}},
  };
  doc.expect["group_order"] = ex(12, "product of the order-6 group with a central order-2 factor");
  doc.expect["inertia_order"] = ex(3, "rotation subgroup");
  doc.expect["degree/ind_xi3"] = ex(4, "index of the rotation subgroup");
  doc.expect["conductor/ind_xi3"] =
      ex(8, "weighted codimension sum 4 + 4 over the first two levels");
  doc.expect["depth_kernel/ind_xi3"] = ex(1, "trivial kernel, phi at the wild level");
  doc.expect["proj/p3/depth_bar"] = ex(1, "depth of the induced lift");
  doc.expect["proj/p3/depth_proj"] = ex(1, "kernel stays trivial in the quotient");
  doc.expect["proj/p3/ess_tame"] = ex(true, "derived subgroup of the wild level is trivial");
  doc.expect["proj/p3/min_twist"] =
      ex(1, "enlarging the ambient group must not change the minimal twist depth");
  doc.expect["proj/p3/twist_count"] = ex(4, "abelianization of order 4");
  return doc;
}

FixtureDocument f20() {
  GaloisFixture fx = f20_fixture();
  FixtureDocument doc;
  doc.name = "f20";
  doc.fg = fx.fg;
  doc.characters = {{"ind_xi5", induce(fx.subchars[0].second)}};
  doc.subchars = fx.subchars;
  doc.parameters = {
      ParameterSpec{"p5", "monomial", {{"induced", "xi5", 1, 1, 1}}},
      ParameterSpec{"wd_ind", "wd", {{"finite_orbit", "ind_xi5", 1, 1, 1}}},
  };
  doc.expect["group_order"] = ex(20, "order-5 cycle extended by an order-4 action");
  doc.expect["num_classes"] = ex(5, "identity, the 5-cycle class and three coset classes");
  doc.expect["inertia_order"] = ex(20, "totally ramified presentation");
  doc.expect["phi/1"] = ex(rq(1, 4), "slope sums over level orders [20,20,5,1]");
  doc.expect["psi/1:4"] = ex(1, "inverse of the transition function");
  doc.expect["upper_order/1:4"] = ex(5, "upper numbering via the inverse function");
  doc.expect["degree/ind_xi5"] = ex(4, "index of the order-5 subgroup");
  doc.expect["conductor/ind_xi5"] =
      ex(5, "weighted codimension sum 4 + 1 over the first two levels");
  doc.expect["depth_kernel/ind_xi5"] =
      ex(rq(1, 4), "trivial kernel, phi at the wild level");
  doc.expect["proj/p5/depth_bar"] = ex(rq(1, 4), "depth of the induced lift");
  doc.expect["proj/p5/depth_proj"] = ex(rq(1, 4), "kernel stays trivial in the quotient");
  doc.expect["proj/p5/strict"] = ex(false, "no drop for this lift");
  doc.expect["proj/p5/ess_tame"] =
      ex(true, "derived subgroup of the wild level is trivial");
  doc.expect["proj/p5/min_twist"] = ex(rq(1, 4), "all four twists keep depth 1/4");
  doc.expect["proj/p5/twist_count"] = ex(4, "abelianization of order 4");
  doc.expect["proj/p5/lift_conductor"] = ex(5, "same as the character conductor");
  doc.expect["wd/wd_ind/conductor"] = ex(5, "single summand, multiplier one");
  doc.expect["wd/wd_ind/depth"] = ex(rq(1, 4), "depth of the induced orbit");
  doc.expect["wd/wd_ind/dim"] = ex(4, "degree times multiplier");
  return doc;
}

FixtureDocument c6_wild() {
  GaloisFixture fx = cyclic_chain_fixture({6, 6, 3, 3, 1}, 3L, {1, 2, 3});
  FixtureDocument doc;
  doc.name = "c6_wild";
  doc.fg = fx.fg;
  doc.characters = fx.characters;
  doc.parameters = {
      ParameterSpec{"p1", "monomial", {{"orbit", "chi1", 1, 1, 1}}},
      ParameterSpec{"wd_mix", "wd",
                    {{"finite_orbit", "chi1", 1, 1, 1}, {"unramified", "", 2, 1, 1}}},
  };
  const std::string slopes = "slope sums over level orders [6,6,3,3,1]";
  doc.expect["group_order"] = ex(6, "cyclic of order 6");
  doc.expect["inertia_order"] = ex(6, "totally ramified chain");
  doc.expect["phi/2"] = ex(1, slopes);
  doc.expect["phi/3"] = ex(rq(7, 6), "slope drops to 1/6 past the stored tail");
  doc.expect["conductor/chi1"] = ex(2, "codimension sum 1 + 1/2 + 1/2");
  doc.expect["depth_kernel/chi1"] = ex(1, "faithful: phi at the last stored level");
  doc.expect["conductor/chi2"] = ex(2, "order-3 character, nontrivial on both wild levels");
  doc.expect["depth_kernel/chi2"] = ex(1, "kernel of order 2 misses the wild levels");
  doc.expect["kernel_order/chi2"] = ex(2, "order-3 character on a cyclic order-6 group");
  doc.expect["conductor/chi3"] = ex(1, "order-2 character is trivial on the wild levels");
  doc.expect["depth_kernel/chi3"] = ex(0, "kernel contains the wild levels");
  doc.expect["kernel_order/chi3"] = ex(3, "order-2 character on a cyclic order-6 group");
  doc.expect["proj/p1/depth_bar"] = ex(1, "depth of the faithful degree-one lift");
  doc.expect["proj/p1/depth_proj"] = ex(0, "degree-one lifts are projectively trivial");
  doc.expect["proj/p1/strict"] = ex(true, "projective depth drops to zero");
  doc.expect["proj/p1/ess_tame"] = ex(true, "abelian group, derived subgroup trivial");
  doc.expect["proj/p1/min_twist"] =
      ex(0, "twisting by the inverse character trivializes the lift");
  doc.expect["proj/p1/twist_count"] = ex(6, "abelianization is the whole cyclic group");
  doc.expect["wd/wd_mix/conductor"] =
      ex(3, "2 from the orbit plus b-1 = 1 from the unramified block");
  doc.expect["wd/wd_mix/depth"] = ex(1, "maximum over summands");
  doc.expect["wd/wd_mix/dim"] = ex(3, "1 + 1*2");
  return doc;
}

FixtureDocument c3_wild() {
  GaloisFixture fx = cyclic_chain_fixture({3, 3, 3, 1}, 3L, {1});
  FixtureDocument doc;
  doc.name = "c3_wild";
  doc.fg = fx.fg;
  doc.characters = fx.characters;
  doc.parameters = {
      ParameterSpec{"p1", "monomial", {{"orbit", "chi1", 1, 1, 1}}},
  };
  doc.expect["group_order"] = ex(3, "cyclic of order 3");
  doc.expect["phi/1"] = ex(1, "slope sums over level orders [3,3,3,1]");
  doc.expect["phi/2"] = ex(rq(4, 3), "slope drops to 1/3 past the stored tail");
  doc.expect["conductor/chi1"] = ex(2, "codimension sum 1 + 1");
  doc.expect["depth_kernel/chi1"] = ex(1, "faithful: phi at the last stored level");
  doc.expect["proj/p1/depth_proj"] = ex(0, "degree-one lifts are projectively trivial");
  doc.expect["proj/p1/min_twist"] =
      ex(0, "twisting by the inverse character trivializes the lift");
  doc.expect["proj/p1/twist_count"] = ex(3, "abelianization is the whole cyclic group");
  return doc;
}

FixtureDocument c2_ramified() {
  GaloisFixture fx = cyclic_chain_fixture({2, 2, 2, 1}, 2L, {1});
  FixtureDocument doc;
  doc.name = "c2_ramified";
  doc.fg = fx.fg;
  doc.characters = fx.characters;
  doc.expect["group_order"] = ex(2, "cyclic of order 2");
  doc.expect["phi/1"] = ex(1, "slope sums over level orders [2,2,2,1]");
  doc.expect["conductor/chi1"] = ex(2, "codimension sum 1 + 1");
  doc.expect["depth_kernel/chi1"] = ex(1, "faithful: phi at the last stored level");
  return doc;
}

FixtureDocument c2_wild_deep() {
  GaloisFixture fx = cyclic_chain_fixture({2, 2, 2, 2, 2, 1}, 2L, {1});
  FixtureDocument doc;
  doc.name = "c2_wild_deep";
  doc.fg = fx.fg;
  doc.characters = fx.characters;
  doc.parameters = {
      ParameterSpec{"wd_double", "wd", {{"finite_orbit", "chi1", 2, 1, 1}}},
  };
  doc.expect["group_order"] = ex(2, "cyclic of order 2");
  doc.expect["phi/3"] = ex(3, "four full-order levels give slope 1");
  doc.expect["phi/5"] = ex(4, "slope drops to 1/2 past the stored tail");
  doc.expect["conductor/chi1"] = ex(4, "codimension sum 1 + 1 + 1 + 1");
  doc.expect["depth_kernel/chi1"] = ex(3, "faithful: phi at the last stored level");
  doc.expect["wd/wd_double/conductor"] = ex(8, "multiplier two doubles the conductor");
  doc.expect["wd/wd_double/depth"] = ex(3, "depth ignores the multiplier");
  return doc;
}

FixtureDocument c2_unramified() {
  GaloisFixture fx = cyclic_chain_fixture({2, 1}, 2L, {1});
  FixtureDocument doc;
  doc.name = "c2_unramified";
  doc.fg = fx.fg;
  doc.characters = fx.characters;
  doc.parameters = {
      ParameterSpec{"wd_triple", "wd", {{"finite_orbit", "chi1", 3, 1, 1}}},
  };
  doc.expect["group_order"] = ex(2, "cyclic of order 2");
  doc.expect["inertia_order"] = ex(1, "trivial inertia");
  doc.expect["phi/7:3"] = ex(rq(7, 3), "transition function is the identity");
  doc.expect["psi/7:3"] = ex(rq(7, 3), "inverse of the identity");
  doc.expect["upper_order/0"] = ex(1, "inertia is already trivial");
  doc.expect["conductor/chi1"] = ex(0, "inertia acts trivially");
  doc.expect["depth_kernel/chi1"] = ex(0, "inertia lies in every kernel");
  doc.expect["wd/wd_triple/conductor"] =
      ex(2, "unramified orbit with multiplier three contributes b-1 = 2");
  doc.expect["wd/wd_triple/depth"] = ex(0, "unramified summand");
  doc.expect["wd/wd_triple/dim"] = ex(3, "degree times multiplier");
  return doc;
}

EssL2Datum segment(long n, long d, long m, long a, long b, long s, Rat depth,
                   bool unram) {
  EssL2Datum e;
  e.form = InnerForm{n, d, m};
  e.sigma = CuspidalDatum{a, depth, s, unram};
  e.b = b;
  return e;
}

FixtureDocument segments() {
  FixtureDocument doc;
  doc.name = "segments";
  doc.segments = {
      segment(2, 2, 1, 1, 1, 2, Rat(0), true),
      segment(2, 1, 2, 1, 2, 1, Rat(0), true),
      segment(2, 2, 1, 1, 1, 1, make_rat(1, 2), false),
      segment(4, 2, 2, 1, 2, 1, make_rat(1, 2), false),
      segment(6, 3, 2, 2, 1, 2, make_rat(1, 3), false),
  };
  const std::string arith = "conductor and depth formulas on (n,d,a,b,s) data";
  doc.expect["segment/0/f"] = ex(1, "unramified twist of the square-free form: n-1");
  doc.expect["segment/0/depth"] = ex(0, arith);
  doc.expect["segment/0/preserved"] = ex(true, "transfer keeps depth 0");
  doc.expect["segment/0/jl/b"] = ex(2, "segment length multiplies by the torsion number");
  doc.expect["segment/0/jl/d"] = ex(1, "transfer lands on the split form");
  doc.expect["segment/0/jl/f"] = ex(1, arith);
  doc.expect["segment/0/gj/0"] = ex(1, "level-zero pairing adds nothing");
  doc.expect["segment/1/f"] = ex(1, "split segment of an unramified character: n-1");
  doc.expect["segment/1/depth"] = ex(0, arith);
  doc.expect["segment/1/preserved"] = ex(true, "split form transfers to itself");
  doc.expect["segment/2/f"] = ex(3, "ramified cuspidal datum: a*d*(depth+1) = 3");
  doc.expect["segment/2/depth"] = ex(rq(1, 2), "(f - n)/n on the quaternionic form");
  doc.expect["segment/2/preserved"] = ex(true, "ramified transfer keeps depth 1/2");
  doc.expect["segment/2/jl/a"] = ex(2, "torsion one: dimension a*d carries over");
  doc.expect["segment/2/jl/b"] = ex(1, "torsion one keeps the segment length");
  doc.expect["segment/2/jl/f"] = ex(3, arith);
  doc.expect["segment/2/jl/depth"] = ex(rq(1, 2), arith);
  doc.expect["segment/2/gj/-1"] = ex(1, "f + n*c at level -1");
  doc.expect["segment/3/f"] = ex(6, "two segment factors of conductor 3");
  doc.expect["segment/3/depth"] = ex(rq(1, 2), "(f - n)/n = 2/4");
  doc.expect["segment/3/preserved"] = ex(true, "transfer keeps depth 1/2");
  doc.expect["segment/3/jl/b"] = ex(2, "torsion one keeps the segment length");
  doc.expect["segment/3/jl/f"] = ex(6, arith);
  doc.expect["segment/4/f"] = ex(8, "a*d*(depth+1) = 6*(4/3) = 8");
  doc.expect["segment/4/depth"] = ex(rq(1, 3), "(f - n)/n = 2/6");
  doc.expect["segment/4/preserved"] = ex(true, "torsion-two transfer keeps depth 1/3");
  doc.expect["segment/4/jl/a"] = ex(3, "a*d divided by the torsion number");
  doc.expect["segment/4/jl/b"] = ex(2, "segment length multiplies by the torsion number");
  doc.expect["segment/4/jl/f"] = ex(8, arith);
  doc.expect["segment/4/jl/depth"] = ex(rq(1, 3), arith);
  doc.expect["segment/4/gj/-1"] = ex(2, "f + n*c at level -1");
  const std::string closed = "closed product form at additive level -1";
  doc.expect["steinberg/1/eps"] = ex("v^-1 * z^-1 * U^-1", closed);
  doc.expect["steinberg/1/gamma"] = ex("(-v + v*z*U) / (1 - v^2*z*U)", closed);
  doc.expect["steinberg/2/L"] = ex("1 / (1 - v^-1*z*U)", closed);
  doc.expect["steinberg/2/eps"] = ex("-v^-1 * z^-1 * U^-1", closed);
  doc.expect["steinberg/2/gamma"] = ex("(v^2 - v*z*U) / (1 - v^3*z*U)", closed);
  doc.expect["steinberg/3/L"] = ex("1 / (1 - v^-2*z*U)", closed);
  doc.expect["steinberg/3/gamma"] = ex("(-v^3 + v*z*U) / (1 - v^4*z*U)", closed);
  doc.expect["steinberg/4/eps_exponent"] = ex(-1, "monomial of degree -1 in U");
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  std::string outdir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(outdir);
  const FixtureDocument docs[] = {
      two_octahedral(), two_tetrahedral(), quaternion(),   s3(),
      s3_times_c2(),    f20(),             c6_wild(),      c3_wild(),
      c2_ramified(),    c2_wild_deep(),    c2_unramified(), segments(),
  };
  for (const FixtureDocument& doc : docs) {
    std::string path = outdir + "/" + doc.name + ".json";
    save_fixture(doc, path);
    std::cout << "wrote " << path << "\n";
  }
  return 0;
}
