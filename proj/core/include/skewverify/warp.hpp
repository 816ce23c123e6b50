#pragma once

// The monoidal comonad G = B⊗− of a bialgebra, its skew cowarping, the
// cowarped category Vect[B] (X⋆Y = X⊗B⊗Y), and braidings y on G.

#include <optional>

#include "skewverify/bialgebra.hpp"
#include "skewverify/report.hpp"
#include "skewverify/skewmon.hpp"

namespace skewverify {

class MonoidalComonad {
 public:
  explicit MonoidalComonad(Bialgebra b) : b_(std::move(b)) {}

  const Bialgebra& bialgebra() const { return b_; }
  const Space& carrier() const { return b_.space; }
  Field field() const { return b_.field(); }

  Space G(const Space& x) const { return b_.space * x; }
  LinMap G(const LinMap& f) const;
  LinMap delta(const Space& x) const;  // B⊗X → B⊗B⊗X
  LinMap eps(const Space& x) const;    // B⊗X → X
  LinMap G2(const Space& x, const Space& y) const;  // B⊗X⊗B⊗Y → B⊗X⊗Y
  LinMap G0() const { return b_.eta; }

 private:
  Bialgebra b_;
};

/// The cowarping (G, K = I, v, v0 = G0, k = ε) with v = G2∘(1⊗δ).
class Cowarping {
 public:
  explicit Cowarping(MonoidalComonad g) : g_(std::move(g)) {}
  const MonoidalComonad& comonad() const { return g_; }
  /// v_{X,Y}: GX⊗GY → G(X⊗GY), b⊗x⊗b'⊗y ↦ Σ bb'₁⊗x⊗b'₂⊗y.
  LinMap v(const Space& x, const Space& y) const;
  LinMap v0() const { return g_.G0(); }
  LinMap k(const Space& x) const { return g_.eps(x); }

 private:
  MonoidalComonad g_;
};

/// A braiding y_{X,Y}: GX⊗GY → GY⊗GX, determined by its core B⊗B → B⊗B.
class BraidingOnComonad {
 public:
  BraidingOnComonad(Space carrier, LinMap core);

  const Space& carrier() const { return b_; }
  const LinMap& core() const { return core_; }
  const std::optional<LinMap>& core_inverse() const { return core_inv_; }
  bool invertible() const { return core_inv_.has_value(); }

  /// b⊗x⊗b'⊗y ↦ core(b⊗b') rearranged to B⊗Y⊗B⊗X.
  LinMap y(const Space& x, const Space& yy) const;
  /// Inverse of y_{X,Y}, a map GY⊗GX → GX⊗GY. Throws NotInvertible.
  LinMap y_inv(const Space& x, const Space& yy) const;

 private:
  Space b_;
  LinMap core_;
  std::optional<LinMap> core_inv_;
};

MonoidalComonad comonad_from_bialgebra(const Bialgebra& b);

/// Laws comonad-coassoc, comonad-counit, G2-assoc, G2-unit, delta-monoidal,
/// eps-monoidal, v-formula and v-horizontal on probe objects.
AxiomReport check_monoidal_comonad(const Cowarping& w, const ProbeFamily& probes);

/// Vect[B]: X⋆Y = X⊗B⊗Y, a = 1⊗v, ℓ = ε⊗1, r = 1⊗η. Unbraided.
SkewMonCat skewmon_from_cowarp(const Cowarping& w);

/// y(b⊗x⊗b'⊗y) = Σ r(b₁⊗b'₁) b'₂⊗y⊗b₂⊗x.
BraidingOnComonad y_from_cobraiding(const Bialgebra& b, const Cobraiding& c);
/// r = (ε⊗ε)∘core.
LinMap cobraiding_from_y(const Bialgebra& b, const BraidingOnComonad& y);

/// Triples (X, Y, Z) over {I, P1, P2, P3}, each generator used at most once.
std::vector<std::array<Space, 3>> y_probe_triples(const ProbeFamily& probes);
/// Laws eq:1, eq:1a, eq:1b, eq:funny.
AxiomReport check_y_axioms(const Cowarping& w, const BraidingOnComonad& y, const ProbeFamily& probes);

/// Vect[B] with braiding s_{X,Y,Z} = 1_X⊗y_{Y,Z} (and its inverse when y is invertible).
SkewMonCat s_from_y(const SkewMonCat& vect_b, const BraidingOnComonad& y);
/// Core recovered as s_{I,I,I}; y_{Y,Z} = s_{I,Y,Z}.
BraidingOnComonad y_from_s(const SkewMonCat& c, const Space& carrier);

}  // namespace skewverify
