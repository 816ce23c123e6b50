#pragma once

// The skew multicategory of a skew monoidal category: tight multimaps are
// maps out of (((a₁a₂)a₃)…aₙ), loose ones maps out of (((Ia₁)a₂)…aₙ).
// A braiding s gives braid-group actions on both kinds.

#include <stdexcept>
#include <vector>

#include "skewverify/braid.hpp"
#include "skewverify/report.hpp"
#include "skewverify/skewmon.hpp"

namespace skewverify {

class TightSigmaOne : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Substitution of a tight multimap off the first position, or a target
/// that does not match the source it is plugged into.
class InvalidSubstitution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ExtractionMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Tightness { tight, loose };

struct Multimap {
  std::vector<Space> sources;
  Space target;
  Tightness tightness = Tightness::loose;
  LinMap payload;

  bool tight() const { return tightness == Tightness::tight; }
  std::size_t arity() const { return sources.size(); }
};

class SkewMulticategory {
 public:
  explicit SkewMulticategory(SkewMonCat c);

  const SkewMonCat& category() const { return c_; }

  /// (((a₁a₂)…)aₙ) for tight, (((Ia₁)…)aₙ) for loose. Tight needs n ≥ 1.
  Space bracket(const std::vector<Space>& sources, Tightness t) const;
  /// Throws ShapeError unless payload: bracket(sources) → target.
  Multimap make(std::vector<Space> sources, Tightness t, LinMap payload) const;
  Multimap identity(const Space& a) const;
  /// e_{A,B}: the tight binary multimap A, B → AB.
  Multimap universal(const Space& a, const Space& b) const;
  /// Precomposition with ((ℓ⋆1)…)⋆1.
  Multimap j(const Multimap& f) const;
  /// f(g₁,…,gₙ); g₂…gₙ must be loose. Tight iff f and g₁ are.
  Multimap substitute(const Multimap& f, const std::vector<Multimap>& gs) const;
  /// f ∘ᵢ g: g in position i (1-based), identities elsewhere.
  Multimap substitute_at(const Multimap& f, std::size_t i, const Multimap& g) const;
  /// Right action, letters applied left to right; the source at position p
  /// moves to braid_to_perm(w)(p). Throws TightSigmaOne, StrandMismatch.
  Multimap act(const BraidWord& w, const Multimap& f) const;

 private:
  LinMap lift(const LinMap& phi, const std::vector<Space>& rest) const;
  LinMap pad_unit(const Space& x, const std::vector<Space>& as) const;
  LinMap split_prefix(const Space& x, const std::vector<Space>& as) const;
  LinMap braid_inverse(const Space& x, const Space& a, const Space& b) const;

  SkewMonCat c_;
};

/// Seeded multimap with entries in {−2, …, 2}.
Multimap random_multimap(const SkewMulticategory& m, std::uint64_t seed, std::vector<Space> sources,
                         const Space& target, Tightness t);

/// Laws identity, assoc and tightness on seeded substitutions of arity ≤ 3.
AxiomReport check_multicategory(const SkewMulticategory& m, const ProbeFamily& probes, std::uint64_t seed);

/// Laws action-eq, equivariance-loose, equivariance-tight, tight-closure and
/// symmetry-cond (optional).
AxiomReport check_braided_multicat(const SkewMulticategory& m, const ProbeFamily& probes, std::uint64_t seed);

struct ExtractedBraiding {
  /// The underlying category with s and s⁻¹ read off the σ₂-action.
  SkewMonCat category;
  /// Laws universal-ternary, extract-roundtrip and universal-symmetry.
  AxiomReport report;
};

/// s_{A,B,C} = payload of (e_{AC,B} ∘₁ e_{A,C})·σ₂. Throws ExtractionMismatch
/// when it differs from the braiding the multicategory was built from.
ExtractedBraiding extract_braiding(const SkewMulticategory& m, const ProbeFamily& probes);

}  // namespace skewverify
