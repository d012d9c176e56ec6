#ifndef RAMDEPTH_CONDUCTOR_HPP_
#define RAMDEPTH_CONDUCTOR_HPP_

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "classfunc.hpp"
#include "factors.hpp"

namespace ramdepth {

// Artin conductor exponent: sum over i >= 0 of
// (|G_i| / |G_0|) * (deg chi - dim of the G_i-fixed subspace).
// Integrality is a theorem for genuine data; violations are hard errors.
inline long artin_conductor(const FilteredGroup& fg, const ClassFunction& chi) {
  require(chi.group()->group().mul_table() == fg.group().mul_table() &&
              chi.group()->levels() == fg.levels(),
          "GroupMismatch", "class function lives on a different filtered group");
  Rat deg(chi.degree());
  Rat g0(fg.inertia_order());
  Rat acc(0);
  for (long i = 0; i <= fg.deepest_stored(); ++i) {
    const Subgroup& level = fg.lower(i);
    Rat drop = deg - Rat(dim_fixed(chi, level));
    acc += Rat(static_cast<long>(level.size())) * drop / g0;
  }
  require(is_integer(acc) && acc >= 0, "NonIntegerConductor",
          "Artin conductor must be a nonnegative integer");
  return rat_as_long(acc);
}

// Depth of a degree-one parameter from its conductor exponent: a - 1, floored
// at zero for the unramified case a = 0.
inline Rat char_depth(long a) {
  require(a >= 0, "SchemaError", "conductor exponent must be nonnegative");
  return Rat(a >= 1 ? a - 1 : 0);
}

// Depth of an irreducible n-dimensional parameter via its conductor: zero
// when inertia is in the kernel, a/n - 1 otherwise.
inline Rat depth_elliptic_via_conductor(long n, long a, bool inertia_in_kernel) {
  require(n >= 1, "SchemaError", "dimension must be positive");
  if (inertia_in_kernel) return Rat(0);
  require(a >= n, "ConductorTooSmall",
          "an inertially nontrivial parameter needs conductor >= dimension");
  return Rat(a) / Rat(n) - 1;
}

// Inertial data carried by a Weil-Deligne style parameter summand: an orbit
// realized on a finite filtered quotient, an unramified character with a
// formal Frobenius value, or an opaque ramified record (dim, conductor) for
// supercuspidal-attached summands.
struct FiniteOrbit {
  FilteredGroupPtr fg;
  ClassFunction chi;
  bool irreducible = true;
};

struct UnramifiedChar {
  std::optional<CoefScalar> frobenius_value;  // must be nonzero when present
};

struct RamifiedCharSymbol {
  long conductor_exponent = 1;
  long dim = 1;
  std::optional<CoefScalar> frobenius_value;
};

using InertialDatum = std::variant<FiniteOrbit, UnramifiedChar, RamifiedCharSymbol>;

inline long inertial_dim(const InertialDatum& d) {
  if (const auto* fo = std::get_if<FiniteOrbit>(&d)) return fo->chi.degree();
  if (std::get_if<UnramifiedChar>(&d)) return 1;
  return std::get<RamifiedCharSymbol>(d).dim;
}

inline long inertial_conductor(const InertialDatum& d) {
  if (const auto* fo = std::get_if<FiniteOrbit>(&d))
    return artin_conductor(*fo->fg, fo->chi);
  if (std::get_if<UnramifiedChar>(&d)) return 0;
  return std::get<RamifiedCharSymbol>(d).conductor_exponent;
}

inline bool inertial_unramified(const InertialDatum& d) {
  if (const auto* fo = std::get_if<FiniteOrbit>(&d))
    return subgroup_subset(fo->fg->lower(0), kernel_of(fo->chi));
  return std::holds_alternative<UnramifiedChar>(d);
}

inline Rat inertial_depth(const InertialDatum& d) {
  if (const auto* fo = std::get_if<FiniteOrbit>(&d))
    return depth_of_kernel(*fo->fg, kernel_of(fo->chi));
  if (std::get_if<UnramifiedChar>(&d)) return Rat(0);
  const auto& sym = std::get<RamifiedCharSymbol>(d);
  return depth_elliptic_via_conductor(sym.dim, sym.conductor_exponent, false);
}

inline void validate_inertial(const InertialDatum& d) {
  if (const auto* fo = std::get_if<FiniteOrbit>(&d)) {
    require(fo->chi.genuine(), "SchemaError",
            "orbit summands need genuine characters");
    if (fo->irreducible)
      require(inner_product(fo->chi, fo->chi) == 1, "SchemaError",
              "summand flagged irreducible has self inner product != 1");
    return;
  }
  if (const auto* u = std::get_if<UnramifiedChar>(&d)) {
    if (u->frobenius_value)
      require(!u->frobenius_value->is_zero(), "ZeroFrobeniusValue",
              "unramified character needs a nonzero Frobenius value");
    return;
  }
  const auto& sym = std::get<RamifiedCharSymbol>(d);
  require(sym.dim >= 1, "SchemaError", "symbol dimension must be positive");
  require(sym.conductor_exponent >= sym.dim, "ConductorTooSmall",
          "ramified symbol needs conductor >= dimension");
}

// Parameter shape (rho_i, b_i): inertial datum tensored with the b-dimensional
// SL2 representation.
struct WDSummand {
  InertialDatum rho;
  long b = 1;
};

class WDParameter {
 public:
  explicit WDParameter(std::vector<WDSummand> summands)
      : summands_(std::move(summands)) {
    require(!summands_.empty(), "SchemaError", "parameter needs >= 1 summand");
    for (const auto& s : summands_) {
      require(s.b >= 1, "SchemaError", "SL2 dimension must be positive");
      validate_inertial(s.rho);
    }
  }

  const std::vector<WDSummand>& summands() const { return summands_; }

  long dim() const {
    long n = 0;
    for (const auto& s : summands_) n += inertial_dim(s.rho) * s.b;
    return n;
  }

  bool elliptic() const {
    if (summands_.size() != 1) return false;
    if (const auto* fo = std::get_if<FiniteOrbit>(&summands_[0].rho))
      return fo->irreducible;
    return true;
  }

 private:
  std::vector<WDSummand> summands_;
};

// a(phi) = sum b_i * a(rho_i) + sum over unramified rho_i of (b_i - 1); the
// second term is the drop dim(V^I / V_N^I) from the monodromy operator.
inline long conductor_wd(const WDParameter& phi) {
  long acc = 0;
  for (const auto& s : phi.summands()) {
    acc += s.b * inertial_conductor(s.rho);
    if (inertial_unramified(s.rho)) acc += s.b - 1;
  }
  return acc;
}

// Depth of a direct sum is the maximum of the summand depths; the SL2 part
// carries no depth.
inline Rat depth_wd(const WDParameter& phi) {
  Rat d(0);
  for (const auto& s : phi.summands()) d = std::max(d, inertial_depth(s.rho));
  return d;
}

}  // namespace ramdepth

#endif
