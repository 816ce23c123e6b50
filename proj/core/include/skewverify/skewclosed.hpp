#pragma once

// The skew closed structure of a closed skew monoidal category whose tensor
// is a right action X⋆A = X⊗R(A) with R(A) = K⋆A, as for Vect[B]. Then
// [A,Y] = Hom(R(A), Y) and the adjunction is plain currying.
//
//   L: [B,C] → [[A,B],[A,C]]   i: [I,A] → A   j: I → [A,A]
//   t: [AB,Y] → [A,[B,Y]]      s′_{A,B,Y}: [B,[A,Y]] → [A,[B,Y]]

#include <functional>

#include "skewverify/report.hpp"
#include "skewverify/skewmon.hpp"

namespace skewverify {

class ClosedStructure {
 public:
  /// Throws ShapeError when X⋆A is not X⊗(K⋆A) on the unit and a test object.
  explicit ClosedStructure(SkewMonCat c);

  const SkewMonCat& category() const { return c_; }
  const Field& field() const { return c_.field; }

  /// R(A) = K⋆A, the right factor every X⋆A ends with.
  Space action(const Space& a) const;
  /// [A,Y].
  Space hom(const Space& a, const Space& y) const;
  /// [f,g]: [A,Y] → [A′,Y′] for f: A′ → A, g: Y → Y′.
  LinMap hom_map(const LinMap& f, const LinMap& g) const;
  /// [1_A, g].
  LinMap hom_post(const Space& a, const LinMap& g) const;

  /// f: X⋆A → Y  ↦  X → [A,Y].
  LinMap transpose(const LinMap& f, const Space& a) const;
  /// g: X → [A,Y]  ↦  X⋆A → Y.
  LinMap untranspose(const LinMap& g) const;
  /// ε: [A,Y]⋆A → Y.
  LinMap counit(const Space& a, const Space& y) const;
  /// u: X → [A, X⋆A].
  LinMap unit(const Space& x, const Space& a) const;

  LinMap L(const Space& a, const Space& b, const Space& c) const;
  LinMap i(const Space& a) const;
  LinMap j(const Space& a) const;
  LinMap t(const Space& a, const Space& b, const Space& y) const;

  /// t as [u,1]∘L.
  LinMap t_from_L(const Space& a, const Space& b, const Space& y) const;
  /// L as t∘[ε,1].
  LinMap L_from_t(const Space& a, const Space& b, const Space& c) const;

 private:
  SkewMonCat c_;
};

/// s′_{A,B,Y}: [B,[A,Y]] → [A,[B,Y]].
using ClosedBraiding = std::function<LinMap(const Space&, const Space&, const Space&)>;

/// The mate of s: transpose twice of ε∘(ε⋆1)∘s_{X,A,B} with X = [B,[A,Y]].
ClosedBraiding mate_s_to_sprime(const ClosedStructure& cs);
/// s_{X,A,B} recovered by untransposing s′∘u twice.
SkewMonCat::Component3 mate_sprime_to_s(const ClosedStructure& cs, ClosedBraiding sprime);

/// adjunction-1, adjunction-2, t-curry, t-from-L, L-from-t, and when the
/// category is braided mate-square and mate-roundtrip.
AxiomReport check_closed_structure(const ClosedStructure& cs, const ProbeFamily& probes, std::uint64_t seed);

/// bourkeS2, bourkeS3, bourkeS3b, bourkeSstar, bourkeS1 (optional), s'r, cor:red.
/// A monoidal quadruple (X, A, B, C) is read as Y = X for the three-variable
/// laws and as (Y, X, B, C) = (X, A, B, C) for bourkeSstar.
AxiomReport check_closed_braiding_axioms(const ClosedStructure& cs, const ClosedBraiding& sprime,
                                         const ProbeFamily& probes);

}  // namespace skewverify
