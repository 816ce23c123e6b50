#pragma once

// Finite-dimensional spaces with structured labels.
//
// A Space is a flat list of factors; the tensor product concatenates lists
// and the unit K is the empty list, so Vect is treated as strict monoidal.
// A factor is either a named generator or an internal hom Hom(V, W).
//
// Basis indexing (global, every module relies on it):
//   * tensor: lexicographic, left factor most significant;
//   * Hom(V, W): matrix units E[w, v] at index w * dim(V) + v (row-major).

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewverify {

class ShapeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Space;

struct Factor {
  enum class Kind { generator, hom };

  Kind kind = Kind::generator;
  std::string name;  // generator only
  std::size_t dim = 0;
  std::shared_ptr<const std::vector<std::string>> basis;  // optional basis names
  std::shared_ptr<const Space> hom_dom;                   // hom only
  std::shared_ptr<const Space> hom_cod;                   // hom only

  std::string basis_label(std::size_t i) const;
  std::string to_string() const;
};

bool operator==(const Factor& a, const Factor& b);

class Space {
 public:
  /// The unit K (dimension 1, no factors).
  Space();

  static Space unit() { return Space(); }
  static Space generator(std::string name, std::size_t dim,
                         std::vector<std::string> basis_names = {});
  static Space hom(const Space& dom, const Space& cod);
  static Space tensor(const Space& left, const Space& right);
  static Space tensor(const std::vector<Space>& parts);

  std::size_t dim() const { return dim_; }
  bool is_unit() const { return factors_->empty(); }
  const std::vector<Factor>& factors() const { return *factors_; }

  /// Per-factor indices of a basis vector.
  std::vector<std::size_t> multi_index(std::size_t index) const;
  /// Human-readable basis vector, e.g. "x0.g.y1" (or "1" in K).
  std::string basis_label(std::size_t index) const;

  bool ends_with(const Space& suffix) const;
  /// Factors before `suffix`; throws ShapeError if `suffix` is not a suffix.
  Space strip_suffix(const Space& suffix) const;

  /// When this space is a single Hom factor, its domain and codomain.
  bool is_hom() const;
  const Space& hom_domain() const;
  const Space& hom_codomain() const;

  std::string to_string() const;

  friend bool operator==(const Space& a, const Space& b);

 private:
  explicit Space(std::vector<Factor> factors);

  std::shared_ptr<const std::vector<Factor>> factors_;
  std::size_t dim_ = 1;
};

inline Space operator*(const Space& a, const Space& b) { return Space::tensor(a, b); }

}  // namespace skewverify
