#pragma once

// A computationally presented skew monoidal category and the probe objects
// its laws are checked on.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "skewverify/linmap.hpp"

namespace skewverify {

/// Objects are Spaces; every component is computed on demand.
struct SkewMonCat {
  using Component3 = std::function<LinMap(const Space&, const Space&, const Space&)>;
  using Component1 = std::function<LinMap(const Space&)>;

  std::string name;
  Field field;
  Space unit;
  std::function<Space(const Space&, const Space&)> tensor;
  std::function<LinMap(const LinMap&, const LinMap&)> tensor_map;
  Component3 assoc;       // a_{A,B,C}: (AB)C → A(BC)
  Component1 left_unit;   // ℓ_A: IA → A
  Component1 right_unit;  // r_A: A → AI
  Component3 braid;       // s_{X,A,B}: (XA)B → (XB)A, empty when unbraided
  Component3 braid_inv;   // (s⁻¹)_{X,A,B} = (s_{X,B,A})⁻¹, empty when unknown

  bool braided() const { return static_cast<bool>(braid); }
  LinMap id(const Space& a) const { return LinMap::identity(a, field); }
  Space t(const Space& a, const Space& b) const { return tensor(a, b); }
  Space t(const Space& a, const Space& b, const Space& c) const { return tensor(tensor(a, b), c); }
  LinMap tm(const LinMap& f, const LinMap& g) const { return tensor_map(f, g); }
};

/// Generator spaces P1..P4 and the tuples built from them and the unit.
///
/// Quadruples (X, A, B, C): X ∈ {P1, I}, each of A, B, C ∈ {P2, P3, P4, I}
/// with every generator used at most once. Triples (X, A, B): X ∈ {P1, I},
/// A, B ∈ {P2, P3, I}. Pairs (A, B): A ∈ {P1, I}, B ∈ {P2, I}. The families
/// are closed under permuting every position after the first.
class ProbeFamily {
 public:
  ProbeFamily(std::array<std::size_t, 4> dims, Space unit);

  const std::vector<Space>& generators() const { return gens_; }
  const Space& unit() const { return unit_; }
  const std::array<std::size_t, 4>& dims() const { return dims_; }

  std::vector<std::array<Space, 4>> quadruples() const;
  std::vector<std::array<Space, 3>> triples() const;
  std::vector<std::array<Space, 2>> pairs() const;

  /// "I" for the unit, otherwise the space's own name.
  std::string name(const Space& s) const;
  std::string describe(const std::vector<std::string>& roles, const std::vector<Space>& objs) const;
  /// One line per generator plus tuple counts, for reports.
  std::vector<std::string> summary() const;

 private:
  std::array<std::size_t, 4> dims_;
  std::vector<Space> gens_;
  Space unit_;
};

/// Seeded random map with entries in {−2, …, 2}.
LinMap random_map(std::uint64_t seed, const Space& dom, const Space& cod, Field field);

}  // namespace skewverify
