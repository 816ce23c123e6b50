#pragma once

// Exact linear maps between labelled spaces.
//
// Storage is compressed sparse columns: structure maps of the skew monoidal
// categories built here are close to monomial, so the number of nonzeros
// stays near the dimension even when the spaces have thousands of basis
// vectors. Equality, composition and Kronecker products are exact.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewverify/scalar.hpp"
#include "skewverify/space.hpp"

namespace skewverify {

class DimensionMismatch : public ShapeError {
 public:
  using ShapeError::ShapeError;
};

class NotATensorDomain : public ShapeError {
 public:
  using ShapeError::ShapeError;
};

struct Triplet {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

/// First entry (column-major, then row) at which two maps disagree.
struct EntryDifference {
  std::size_t row;
  std::size_t col;
  Scalar lhs;
  Scalar rhs;
};

class LinMap {
 public:
  /// Appends columns in order; duplicates within a column are summed.
  class Builder {
   public:
    Builder(Space dom, Space cod, Field field);
    void add(std::size_t row, const Scalar& value);
    void finish_column();
    LinMap build() &&;

   private:
    Space dom_, cod_;
    Field field_;
    std::vector<std::pair<std::uint32_t, Scalar>> pending_;
    std::vector<std::size_t> colptr_{0};
    std::vector<std::uint32_t> rows_;
    std::vector<Scalar> vals_;
  };

  /// The zero map.
  LinMap(Space dom, Space cod, Field field);

  static LinMap identity(const Space& s, Field field);
  static LinMap from_dense(Space dom, Space cod, Field field,
                           const std::vector<std::vector<Scalar>>& rows);
  static LinMap from_triplets(Space dom, Space cod, Field field, std::vector<Triplet> entries);
  /// Integer-entry convenience, mostly for fixtures and tests.
  static LinMap from_ints(Space dom, Space cod, Field field,
                          const std::vector<std::vector<long long>>& rows);

  const Space& dom() const { return dom_; }
  const Space& cod() const { return cod_; }
  const Field& field() const { return field_; }
  std::size_t rows() const { return cod_.dim(); }
  std::size_t cols() const { return dom_.dim(); }
  std::size_t nnz() const { return rows_.size(); }

  std::span<const std::uint32_t> column_rows(std::size_t col) const;
  std::span<const Scalar> column_values(std::size_t col) const;
  Scalar entry(std::size_t row, std::size_t col) const;
  std::vector<std::vector<Scalar>> to_dense() const;

  bool is_identity() const;
  bool is_zero() const { return rows_.empty(); }

  LinMap transpose() const;
  /// Same matrix, new labels of equal dimension.
  LinMap relabel(Space dom, Space cod) const;
  LinMap scaled(const Scalar& c) const;
  LinMap operator-() const { return scaled(-field_.one()); }
  /// Inverse by sparse Gauss-Jordan; nullopt when singular or non-square.
  std::optional<LinMap> inverse() const;

  friend bool operator==(const LinMap& a, const LinMap& b);

 private:
  Space dom_, cod_;
  Field field_;
  std::vector<std::size_t> colptr_;
  std::vector<std::uint32_t> rows_;
  std::vector<Scalar> vals_;
};

/// g after f. Throws DimensionMismatch unless f.cod == g.dom structurally.
LinMap compose(const LinMap& g, const LinMap& f);
/// Composite of a diagram path, applied left to right: path({f, g, h}) = h∘g∘f.
LinMap path(std::initializer_list<LinMap> steps);
/// Kronecker product, left index major.
LinMap tensor_map(const LinMap& f, const LinMap& g);
LinMap tensor_map(std::initializer_list<LinMap> fs);
LinMap operator+(const LinMap& a, const LinMap& b);
LinMap operator-(const LinMap& a, const LinMap& b);

/// First disagreement between two parallel maps, or nullopt when equal.
std::optional<EntryDifference> first_difference(const LinMap& a, const LinMap& b);

/// Reorders tensor factors: parts[order[0]] ⊗ parts[order[1]] ⊗ ... .
LinMap permute_factors(const std::vector<Space>& parts, const std::vector<std::size_t>& order,
                       Field field);
/// The symmetry V⊗W → W⊗V.
LinMap flip(const Space& v, const Space& w, Field field);

/// f: X⊗A → B  ↦  X → Hom(A, B). Throws NotATensorDomain if A is not a suffix of dom(f).
LinMap curry(const LinMap& f, const Space& a);
/// g: X → Hom(A, B)  ↦  X⊗A → B.
LinMap uncurry(const LinMap& g);
/// Evaluation Hom(V, W)⊗V → W.
LinMap evaluation(const Space& v, const Space& w, Field field);
/// φ ↦ post∘φ∘pre, as a map Hom(V, W) → Hom(V', W') for pre: V' → V, post: W → W'.
LinMap hom_map(const LinMap& pre, const LinMap& post);

}  // namespace skewverify
