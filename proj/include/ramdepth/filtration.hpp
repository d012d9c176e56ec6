#ifndef RAMDEPTH_FILTRATION_HPP_
#define RAMDEPTH_FILTRATION_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "group.hpp"
#include "rational.hpp"

namespace ramdepth {

// A finite group with a descending chain of normal subgroups in lower
// numbering: levels[0] = G_{-1} = G, levels[i+1] = G_i, ending at the trivial
// subgroup.  levels[1] = G_0 plays the inertia role, levels[2] = G_1 the wild
// part.  Indices past the stored tail denote the trivial subgroup.
class FilteredGroup {
 public:
  FilteredGroup(FiniteGroup g, std::vector<Subgroup> levels,
                std::optional<long> p = std::nullopt)
      : g_(std::move(g)), levels_(std::move(levels)), p_(p) {
    validate();
  }

  const FiniteGroup& group() const { return g_; }
  const std::vector<Subgroup>& levels() const { return levels_; }
  std::optional<long> residual_char() const { return p_; }

  // G_i for i >= -1.
  const Subgroup& lower(long i) const {
    static const Subgroup trivial{0};
    std::size_t idx = static_cast<std::size_t>(i + 1);
    return idx < levels_.size() ? levels_[idx] : trivial;
  }

  long deepest_stored() const { return static_cast<long>(levels_.size()) - 2; }

  long inertia_order() const { return static_cast<long>(lower(0).size()); }

 private:
  void validate() {
    require(!levels_.empty(), "NotNested", "filtration must store G_{-1}");
    require(levels_[0] == whole_group(g_), "NotNested",
            "filtration must start at the whole group");
    for (const auto& h : levels_)
      require(is_subgroup(g_, h), "NotAGroup", "filtration level is not a subgroup");
    for (std::size_t i = 1; i < levels_.size(); ++i)
      require(subgroup_subset(levels_[i], levels_[i - 1]), "NotNested",
              "filtration levels must descend");
    for (std::size_t i = 1; i < levels_.size(); ++i)
      require(is_normal(g_, levels_[i]), "NotNormal",
              "filtration level is not normal in the whole group");
    require(levels_.back() == Subgroup{0}, "NoTrivialTail",
            "filtration must end at the trivial subgroup");
    if (p_) {
      long p = *p_;
      require(p >= 2, "WildPartMismatch", "residual characteristic must be >= 2");
      long wild = static_cast<long>(lower(1).size());
      while (wild % p == 0) wild /= p;
      require(wild == 1, "WildPartMismatch", "G_1 must be a p-group");
      long tame = static_cast<long>(lower(0).size()) /
                  static_cast<long>(lower(1).size());
      require(tame % p != 0, "WildPartMismatch",
              "tame quotient order must be coprime to p");
    }
  }

  FiniteGroup g_;
  std::vector<Subgroup> levels_;
  std::optional<long> p_;
};

inline FilteredGroup build_filtered_group(FiniteGroup g, std::vector<Subgroup> levels,
                                          std::optional<long> p = std::nullopt) {
  return FilteredGroup(std::move(g), std::move(levels), p);
}

// phi(u) = integral_0^u dt / [G_0 : G_t], piecewise linear with slope
// |G_i|/|G_0| on [i-1, i]; for the unramified model (G_0 trivial) this is the
// identity.  Exact rational arithmetic throughout.
inline Rat herbrand_phi(const FilteredGroup& fg, const Rat& u) {
  require(u >= 0, "SchemaError", "herbrand_phi needs u >= 0");
  Rat g0(fg.inertia_order());
  Int whole = floor_rat(u);
  Rat acc(0);
  for (Int i = 1; i <= whole; ++i)
    acc += Rat(Int(fg.lower(to_long(i)).size()), Int(1)) / g0;
  Rat frac = u - Rat(whole);
  if (frac != 0)
    acc += frac * Rat(Int(fg.lower(to_long(whole) + 1).size()), Int(1)) / g0;
  return acc;
}

inline Rat herbrand_psi(const FilteredGroup& fg, const Rat& l) {
  require(l >= 0, "SchemaError", "herbrand_psi needs l >= 0");
  Rat g0(fg.inertia_order());
  Rat acc(0);
  long i = 0;
  while (true) {
    Rat slope = Rat(Int(fg.lower(i + 1).size()), Int(1)) / g0;
    Rat next = acc + slope;
    if (l <= next || i > fg.deepest_stored()) {
      return Rat(i) + (l - acc) / slope;
    }
    acc = next;
    ++i;
  }
}

// G^l in upper numbering: G_{psi(l)}, where a non-integer lower index u means
// G_{ceil(u)}.
inline const Subgroup& upper_subgroup(const FilteredGroup& fg, const Rat& l) {
  require(l >= 0, "SchemaError", "upper_subgroup needs l >= 0");
  Rat u = herbrand_psi(fg, l);
  return fg.lower(to_long(ceil_rat(u)));
}

// Depth of the parameter with kernel k: zero when inertia is inside k,
// otherwise phi at the last lower index whose level escapes k.
inline Rat depth_of_kernel(const FilteredGroup& fg, const Subgroup& k) {
  require(is_subgroup(fg.group(), k), "NotAGroup", "kernel is not a subgroup");
  require(is_normal(fg.group(), k), "NotNormal", "kernel is not normal");
  if (subgroup_subset(fg.lower(0), k)) return Rat(0);
  long j = 0;
  for (long i = fg.deepest_stored(); i >= 0; --i) {
    if (!subgroup_subset(fg.lower(i), k)) {
      j = i;
      break;
    }
  }
  Rat d = herbrand_phi(fg, Rat(j));
  require(Int(fg.inertia_order()) % denominator(d) == 0, "NotNested",
          "depth denominator must divide the inertia order");
  return d;
}

}  // namespace ramdepth

#endif
