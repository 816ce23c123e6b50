#pragma once

// Artin braid groups Bₙ as words, with an equality oracle through the action
// on the free group, the map to Sₙ and operad substitution (cabling).

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewverify {

class BraidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class StrandMismatch : public BraidError {
 public:
  using BraidError::BraidError;
};
class ArityMismatch : public BraidError {
 public:
  using BraidError::BraidError;
};
class UsesGeneratorOne : public BraidError {
 public:
  using BraidError::BraidError;
};

/// Images of 1…n (1-based): position p ends at images[p-1].
class Permutation {
 public:
  static Permutation identity(std::size_t n);
  /// Throws BraidError unless the images form a bijection on 1…n.
  explicit Permutation(std::vector<std::size_t> images);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t p) const { return images_.at(p - 1); }
  const std::vector<std::size_t>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;
  /// First this, then o.
  Permutation then(const Permutation& o) const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

struct BraidLetter {
  std::size_t index;  // σ_index, 1 ≤ index < strands
  int sign;           // +1 or −1
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class BraidWord {
 public:
  explicit BraidWord(std::size_t strands = 0) : strands_(strands) {}
  /// Freely reduces; throws BraidError on an index outside [1, strands−1].
  BraidWord(std::size_t strands, const std::vector<BraidLetter>& letters);
  /// Signed indices: 2 is σ₂, −1 is σ₁⁻¹.
  static BraidWord from_signed(std::size_t strands, const std::vector<int>& letters);
  static BraidWord generator(std::size_t strands, std::size_t i, int sign = 1);

  std::size_t strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  /// Built through b1_word or a substitution that stays in B¹.
  bool in_b1() const { return b1_; }

  BraidWord inverse() const;
  /// Concatenation uv. Throws StrandMismatch.
  BraidWord operator*(const BraidWord& o) const;

  /// "3: 1 2 -1".
  std::string to_string() const;
  static BraidWord parse(std::string_view text);

  /// Literal equality of reduced words; use braid_equal for the group.
  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands_ == b.strands_ && a.letters_ == b.letters_;
  }

 private:
  friend BraidWord b1_word(const std::vector<int>& letters, std::size_t n);
  friend BraidWord operad_subst(const BraidWord& s, const std::vector<BraidWord>& parts);

  std::size_t strands_;
  std::vector<BraidLetter> letters_;
  bool b1_ = false;
};

/// Reduced images of the free generators x₁…xₙ under the Artin action
/// σᵢ: xᵢ ↦ xᵢxᵢ₊₁xᵢ⁻¹, xᵢ₊₁ ↦ xᵢ. Letters are ±j for x_j^{±1}.
std::vector<std::vector<int>> artin_images(const BraidWord& u);

/// Same group element. Throws StrandMismatch.
bool braid_equal(const BraidWord& u, const BraidWord& v);

/// σᵢ ↦ (i, i+1); words compose left to right.
Permutation braid_to_perm(const BraidWord& u);

/// Block permutation s(t₁,…,tₙ) in the symmetric operad, same conventions
/// as operad_subst.
Permutation perm_subst(const Permutation& s, const std::vector<Permutation>& parts);

/// Cabling: tᵢ runs on the i-th bundle, then each strand of s is replaced
/// by its bundle. Throws ArityMismatch unless parts.size() == s.strands().
BraidWord operad_subst(const BraidWord& s, const std::vector<BraidWord>& parts);

/// A word in ⟨σ₂,…,σₙ₋₁⟩ ≤ Bₙ, tagged as such. Throws UsesGeneratorOne.
BraidWord b1_word(const std::vector<int>& letters, std::size_t n);

}  // namespace skewverify
