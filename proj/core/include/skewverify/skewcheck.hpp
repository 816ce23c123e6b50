#pragma once

// Exact checks of the skew monoidal axioms, the braiding axioms and the
// unit compatibilities a braiding implies.
//
//   M1  a∘a = (1a)∘a∘(a1)                 M2  ℓ∘a = ℓ1
//   M3  a∘r = 1r                          M4  (1ℓ)∘a∘(r1) = 1
//   M5  ℓ_I∘r_I = 1
//   S2, S3a, S3b, Sstar on quadruples; S1 (s∘s = 1) is optional.

#include <functional>
#include <stdexcept>

#include "skewverify/report.hpp"
#include "skewverify/skewmon.hpp"

namespace skewverify {

class NotLeftNormal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

AxiomReport check_skew_axioms(const SkewMonCat& c, const ProbeFamily& probes);

/// Laws nat-a, nat-l, nat-r (and nat-s when braided) against seeded maps Pi → Qi.
AxiomReport check_naturality(const SkewMonCat& c, const ProbeFamily& probes, std::uint64_t seed);

/// S2, S3a, S3b, Sstar, S1. Throws NotInvertible when s has no inverse on a probe.
AxiomReport check_braiding_axioms(const SkewMonCat& c, const ProbeFamily& probes);

/// Lsr, Psr, Pslr, Psar1, Psr1a, Psr1b. With a braiding report, a failure of a
/// law implied by a passing S3a (resp. S3b) is marked inconsistent.
AxiomReport check_derived_properties(const SkewMonCat& c, const ProbeFamily& probes,
                                     const AxiomReport* braiding = nullptr);

/// The category with s replaced by s⁻¹.
SkewMonCat inverse_braiding(const SkewMonCat& c);

/// Copy of c whose braiding is multiplied by `factor` at the single component
/// s_{X,A,B} (and the inverse adjusted to match).
SkewMonCat mutate_braiding(const SkewMonCat& c, const Space& x, const Space& a, const Space& b,
                           const Scalar& factor);
/// Copy of c with every braiding component multiplied by `factor`.
SkewMonCat scale_braiding(const SkewMonCat& c, const Scalar& factor);

struct ClassicalBraiding {
  /// c_{B,C}: BC → CB.
  std::function<LinMap(const Space&, const Space&)> c;
  /// hexagon-1, hexagon-2, S1, a-invertible, r-invertible.
  AxiomReport report;
};

/// c_{B,C} = (ℓ_C⋆1)∘s_{I,B,C}∘(ℓ_B⋆1)⁻¹. Throws NotLeftNormal when ℓ is singular on a probe.
ClassicalBraiding classical_braiding_from_s(const SkewMonCat& c, const ProbeFamily& probes);

}  // namespace skewverify
