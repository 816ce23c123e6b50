#pragma once

// Bialgebras given by structure constants, and cobraidings on them.
//
// Cobraiding convention (Sweedler notation, r: B⊗B → K):
//   CB1  r(ab⊗c) = Σ r(b⊗c₁) r(a⊗c₂)
//   CB2  r(a⊗bc) = Σ r(a₁⊗b) r(a₂⊗c)
//   CB3  Σ r(a₁⊗b₁) b₂a₂ = Σ a₁b₁ r(a₂⊗b₂)
//   inv  r is convolution invertible with inverse rbar
// These are exactly the conditions under which
//   y(b⊗x⊗b'⊗y) = Σ r(b₁⊗b'₁) b'₂⊗y⊗b₂⊗x
// is a braiding on the comonad B⊗−.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewverify/linmap.hpp"
#include "skewverify/report.hpp"

namespace skewverify {

class NotAGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotARootOfUnity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BialgebraAxiomFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Bialgebra {
  Space space;  // B
  LinMap mu;     // B⊗B → B
  LinMap eta;    // K → B
  LinMap delta;  // B → B⊗B
  LinMap eps;    // B → K

  const Field& field() const { return mu.field(); }
  std::size_t dim() const { return space.dim(); }
};

struct Cobraiding {
  LinMap r;     // B⊗B → K
  LinMap rbar;  // claimed convolution inverse
};

/// Laws assoc, unit-l, unit-r, coassoc, counit-l, counit-r, compat.
/// Throws ShapeError if a structure map has the wrong domain or codomain.
AxiomReport check_bialgebra(const Bialgebra& b);

/// Group algebra of a multiplication table (table[i][j] = index of gᵢgⱼ).
Bialgebra group_algebra(const std::vector<std::vector<std::size_t>>& table, std::size_t unit_index,
                        Field field, std::vector<std::string> names = {});
Bialgebra cyclic_group_algebra(std::size_t n, Field field);
/// Q[S3]-style algebra on permutations of three points.
Bialgebra symmetric_group3_algebra(Field field);
/// The one-dimensional bialgebra K.
Bialgebra trivial_bialgebra(Field field);
/// Sweedler's four-dimensional Hopf algebra on {1, g, x, gx}.
Bialgebra sweedler_bialgebra(Field field);

/// ε⊗ε : B⊗B → K, the unit for convolution.
LinMap counit_pair(const Bialgebra& b);
/// (f*g)(x) = Σ f(x₁) g(x₂) for functionals on the coalgebra B⊗B.
LinMap convolution(const Bialgebra& b, const LinMap& f, const LinMap& g);
/// Two-sided convolution inverse, or nullopt when f is not invertible.
std::optional<LinMap> convolution_inverse(const Bialgebra& b, const LinMap& f);

/// Laws inv, CB1, CB2, CB3.
AxiomReport check_cobraiding(const Bialgebra& b, const Cobraiding& c);

/// Cobraiding from a functional r, with rbar solved for. Throws NotInvertible.
Cobraiding make_cobraiding(const Bialgebra& b, LinMap r);
/// r = ε⊗ε.
Cobraiding trivial_cobraiding(const Bialgebra& b);
/// r(gᵃ⊗gᵇ) = ζ^{ab} on the cyclic group algebra of order n.
Cobraiding bicharacter_cobraiding(std::size_t n, const Scalar& zeta, Field field);
/// The cobraiding family on the Sweedler algebra with r(x⊗x) = λ.
Cobraiding sweedler_cobraiding(const Scalar& lambda);

}  // namespace skewverify
