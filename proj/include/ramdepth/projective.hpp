#ifndef RAMDEPTH_PROJECTIVE_HPP_
#define RAMDEPTH_PROJECTIVE_HPP_

#include <optional>
#include <variant>
#include <vector>

#include "classfunc.hpp"
#include "filtration.hpp"

namespace ramdepth {

// A summand of a parameter given either as a subgroup character (inducing to
// the whole group) or directly as an irreducible character of the whole
// group.  The second form covers summands that are not induced from any
// proper subgroup.
using ProjSummand = std::variant<SubgroupWithCharacter, ClassFunction>;

struct MonomialParameter {
  FilteredGroupPtr fg;
  std::vector<ProjSummand> summands;
};

inline void validate_parameter(const MonomialParameter& mp) {
  require(mp.fg != nullptr, "SchemaError", "parameter needs a filtered group");
  require(!mp.summands.empty(), "SchemaError", "parameter needs >= 1 summand");
  for (const auto& s : mp.summands) {
    if (std::holds_alternative<SubgroupWithCharacter>(s)) {
      require_same_group(mp.fg, std::get<SubgroupWithCharacter>(s).group());
    } else {
      const ClassFunction& chi = std::get<ClassFunction>(s);
      require_same_group(mp.fg, chi.group());
      require(chi.genuine(), "SchemaError",
              "direct summands must be genuine characters");
      require(inner_product(chi, chi) == 1, "SchemaError",
              "direct summands must be irreducible");
    }
  }
}

// The character of the lifted (linear) parameter: sum over summands of the
// induced character, or of the character itself for direct summands.
inline ClassFunction lift_character(const MonomialParameter& mp) {
  validate_parameter(mp);
  std::optional<ClassFunction> total;
  for (const auto& s : mp.summands) {
    ClassFunction piece =
        std::holds_alternative<SubgroupWithCharacter>(s)
            ? induce(std::get<SubgroupWithCharacter>(s))
            : std::get<ClassFunction>(s);
    total = total ? direct_sum(*total, piece) : piece;
  }
  return *total;
}

// If w acts as a scalar on the summand, returns that scalar.
//
// Induced summand from (H, xi): in the coset basis w is diagonal exactly when
// s^{-1} w s lies in H for every s, with diagonal entries xi(s^{-1} w s); it
// is a scalar when those entries all agree.
//
// Direct irreducible summand chi: w acts as a scalar iff |chi(w)| equals
// chi(1), and the scalar is chi(w)/chi(1).
inline std::optional<Cyc> summand_scalar(const ProjSummand& s, int w) {
  if (std::holds_alternative<SubgroupWithCharacter>(s)) {
    const SubgroupWithCharacter& sc = std::get<SubgroupWithCharacter>(s);
    const FiniteGroup& g = sc.group()->group();
    std::optional<Cyc> lambda;
    for (int x = 0; x < g.order(); ++x) {
      int t = g.conj_by(g.inv(x), w);
      if (!sc.contains(t)) return std::nullopt;
      Cyc val = sc.value_at(t);
      if (!lambda) {
        lambda = val;
      } else if (!(*lambda == val)) {
        return std::nullopt;
      }
    }
    return lambda;
  }
  const ClassFunction& chi = std::get<ClassFunction>(s);
  Cyc val = chi.value_at(w);
  Cyc deg = Cyc(Rat(chi.degree()));
  if (!(val * val.conj() == deg * deg)) return std::nullopt;
  return val / deg;
}

// Kernel of the projectivized parameter: elements acting by one common scalar
// across all summands.
inline Subgroup projective_kernel(const MonomialParameter& mp) {
  validate_parameter(mp);
  const FiniteGroup& g = mp.fg->group();
  Subgroup ker;
  for (int w = 0; w < g.order(); ++w) {
    std::optional<Cyc> common;
    bool ok = true;
    for (const auto& s : mp.summands) {
      std::optional<Cyc> lambda = summand_scalar(s, w);
      if (!lambda) {
        ok = false;
        break;
      }
      if (!common) {
        common = lambda;
      } else if (!(*common == *lambda)) {
        ok = false;
        break;
      }
    }
    if (ok) ker.push_back(w);
  }
  return ker;
}

struct ProjectiveKernelReport {
  ClassFunction lift;
  Subgroup lift_kernel;
  Subgroup proj_kernel;
  Rat depth_bar;
  Rat depth_proj;
  bool strict = false;  // depth_bar > depth_proj
};

inline ProjectiveKernelReport depth_projective(const MonomialParameter& mp) {
  ClassFunction lift = lift_character(mp);
  Subgroup lk = kernel_of(lift);
  Subgroup pk = projective_kernel(mp);
  require(subgroup_subset(lk, pk), "DepthMismatch",
          "linear kernel must lie inside the projective kernel");
  Rat bar = depth_of_kernel(*mp.fg, lk);
  Rat proj = depth_of_kernel(*mp.fg, pk);
  require(proj <= bar, "DepthMismatch",
          "projective depth cannot exceed the linear depth");
  return ProjectiveKernelReport{lift, lk, pk, bar, proj, bar > proj};
}

// Essentially tame parameters are those whose lift is trivial on the derived
// subgroup of the wild part: the wild image is then abelian, so the depth can
// be minimized by a character twist.
inline bool is_essentially_tame(const MonomialParameter& mp) {
  ClassFunction lift = lift_character(mp);
  const FiniteGroup& g = mp.fg->group();
  Subgroup wild = mp.fg->lower(1);
  Subgroup comm = derived_subgroup(g, wild);
  Cyc deg = Cyc(Rat(lift.degree()));
  for (int c : comm)
    if (!(lift.value_at(c) == deg)) return false;
  return true;
}

// Twist every summand by a degree-1 character of the ambient group, given by
// its element-indexed values.  Scalar twists die under projectivization, so
// the projective kernel and tameness are unchanged by this operation.
inline MonomialParameter twist_parameter(const MonomialParameter& mp,
                                         const std::vector<Cyc>& gamma) {
  validate_parameter(mp);
  const FiniteGroup& g = mp.fg->group();
  require(gamma.size() == static_cast<std::size_t>(g.order()), "SchemaError",
          "twist needs one value per group element");
  require(gamma[0] == Cyc(1), "SchemaError", "twist must send the identity to 1");
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      require(gamma[static_cast<std::size_t>(g.op(x, y))] ==
                  gamma[static_cast<std::size_t>(x)] * gamma[static_cast<std::size_t>(y)],
              "SchemaError", "twist must be multiplicative");
  MonomialParameter out;
  out.fg = mp.fg;
  for (const auto& s : mp.summands) {
    if (std::holds_alternative<SubgroupWithCharacter>(s)) {
      const SubgroupWithCharacter& sc = std::get<SubgroupWithCharacter>(s);
      std::vector<Cyc> vals;
      for (std::size_t i = 0; i < sc.carrier().size(); ++i)
        vals.push_back(sc.values()[i] *
                       gamma[static_cast<std::size_t>(sc.carrier()[i])]);
      out.summands.emplace_back(
          SubgroupWithCharacter(mp.fg, sc.carrier(), std::move(vals)));
    } else {
      const ClassFunction& chi = std::get<ClassFunction>(s);
      std::vector<Cyc> vals;
      for (int c = 0; c < g.num_classes(); ++c) {
        int rep = g.classes()[static_cast<std::size_t>(c)][0];
        vals.push_back(chi.class_values()[static_cast<std::size_t>(c)] *
                       gamma[static_cast<std::size_t>(rep)]);
      }
      out.summands.emplace_back(ClassFunction(mp.fg, std::move(vals), true));
    }
  }
  return out;
}

struct TwistSearchResult {
  Rat min_depth;
  long twist_index = 0;   // index into the sorted twist list; 0 is trivial
  long twist_count = 0;
  long twist_modulus = 1; // twist values live among these roots of unity
  bool essentially_tame = false;
  Rat depth_bar;
  Rat depth_proj;
};

// Minimal depth over all twists of the lift by characters of the
// abelianization.  Twisting never goes below the projective depth, and when
// the parameter is essentially tame the bound is attained.
inline TwistSearchResult min_twist_depth(const MonomialParameter& mp) {
  ProjectiveKernelReport report = depth_projective(mp);
  const FiniteGroup& g = mp.fg->group();
  Subgroup comm = derived_subgroup(g, whole_group(g));
  QuotientGroup quo = quotient_group(g, comm);
  AbelianCharacters ab = abelian_characters(quo.group);
  Cyc deg = Cyc(Rat(report.lift.degree()));

  TwistSearchResult out;
  out.twist_count = static_cast<long>(ab.chars.size());
  out.twist_modulus = ab.modulus;
  out.essentially_tame = is_essentially_tame(mp);
  out.depth_bar = report.depth_bar;
  out.depth_proj = report.depth_proj;

  bool first = true;
  for (long idx = 0; idx < out.twist_count; ++idx) {
    Subgroup ker;
    for (int w = 0; w < g.order(); ++w) {
      Cyc gamma = Cyc::root_of_unity(ab.modulus, ab.chars[idx][quo.proj[w]]);
      if (report.lift.value_at(w) * gamma == deg) ker.push_back(w);
    }
    Rat depth = depth_of_kernel(*mp.fg, ker);
    if (first || depth < out.min_depth) {
      out.min_depth = depth;
      out.twist_index = idx;
      first = false;
    }
  }

  require(out.min_depth >= report.depth_proj, "DepthMismatch",
          "twist search went below the projective depth");
  require(out.min_depth <= report.depth_bar, "DepthMismatch",
          "twist search exceeded the untwisted depth");
  if (out.essentially_tame)
    require(out.min_depth == report.depth_proj, "TamenessViolation",
            "essentially tame parameter did not reach the projective depth");
  return out;
}

}  // namespace ramdepth

#endif
