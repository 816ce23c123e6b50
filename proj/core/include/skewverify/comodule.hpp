#pragma once

// Left B-comodules (coalgebras for G = B⊗−), their lifted tensor product and
// the braiding c induced on them by a braiding y on G.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewverify/report.hpp"
#include "skewverify/warp.hpp"

namespace skewverify {

class InvalidComodule : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// y∘(α⊗β) ≠ (β⊗α)∘c: y does not restrict to the comodules.
class EqualizerSquareFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Comodule {
  std::string name;
  Space carrier;
  LinMap coaction;  // A → B⊗A
  std::optional<Space> cofree_on;  // X when this is (B⊗X, Δ⊗1)
};

/// Laws counit and coassoc.
AxiomReport check_comodule(const Bialgebra& b, const Comodule& m);

/// (B⊗X, Δ⊗1).
Comodule cofree(const Bialgebra& b, const Space& x);
/// (X, η⊗1).
Comodule trivial_comodule(const Bialgebra& b, const Space& x);
/// (X, x ↦ e_k⊗x) for a group-like basis vector e_k. Throws InvalidComodule otherwise.
Comodule grouplike_comodule(const Bialgebra& b, std::size_t k, const Space& x);
/// Carrier A⊗N, coaction G2∘(α⊗β): a⊗n ↦ Σ a₍₋₁₎n₍₋₁₎⊗a₍₀₎⊗n₍₀₎.
/// Throws InvalidComodule when either factor fails its laws.
Comodule tensor_comodules(const Bialgebra& b, const Comodule& m, const Comodule& n);

/// c = (ε⊗1⊗ε⊗1)∘y_{A,N}∘(α⊗β): A⊗N → N⊗A. Throws EqualizerSquareFailure
/// when the square y∘(α⊗β) = (β⊗α)∘c does not commute.
LinMap braiding_on_comodules(const MonoidalComonad& g, const BraidingOnComonad& y, const Comodule& m,
                             const Comodule& n);

/// Trivial (K), cofree(K), cofree of a 2-dimensional space, and one
/// grouplike comodule per group-like basis vector when there are several.
std::vector<Comodule> probe_comodules(const Bialgebra& b);

/// Laws square, invertible, natural, hexagon-1, hexagon-2, cofree-is-y and
/// symmetry (optional) on every pair and triple of the given comodules.
AxiomReport check_comodule_braiding(const MonoidalComonad& g, const BraidingOnComonad& y,
                                    const std::vector<Comodule>& comodules, std::uint64_t seed);

/// Laws y.delta1, y.delta and y-coalg. With a y-axiom report, a failure of a
/// law whose premises passed there (eq:1b; eq:1a and eq:1b; eq:funny) is
/// marked inconsistent.
AxiomReport check_comonad_braiding_consequences(const MonoidalComonad& g, const BraidingOnComonad& y,
                                                const ProbeFamily& probes,
                                                const AxiomReport* y_axioms = nullptr);

}  // namespace skewverify
