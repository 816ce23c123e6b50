#pragma once

// Bialgebra spec files (JSON) and the bundled fixture gallery.
//
//   {"name": "...", "field": {"kind": "rational"} | {"kind": "prime", "p": 5},
//    "dim": n, "basis": [n names],
//    "mu": n² rows of n scalars,   row i·n+j holds eᵢeⱼ
//    "delta": n rows of n² scalars, entry k·n+l of row i holds e_k⊗e_l in Δeᵢ
//    "eps": n scalars, "eta": n scalars,
//    "r": n² scalars (optional), "rbar": n² scalars (optional)}
//
// Scalars are strings ("3/4", "-1") or JSON integers; floats are rejected.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewverify/bialgebra.hpp"

namespace skewverify {

/// Malformed JSON; the message carries line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Well-formed JSON that does not describe a bialgebra spec.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BialgebraSpec {
  std::string name;
  std::vector<std::string> basis;
  Bialgebra bialgebra;
  std::optional<LinMap> r;
  std::optional<LinMap> rbar;

  const Field& field() const { return bialgebra.field(); }
  bool has_cobraiding() const { return r.has_value(); }
  /// r with rbar as given, or solved for when absent. Throws ValidationError without r.
  Cobraiding cobraiding() const;
};

BialgebraSpec parse_spec_text(const std::string& text, const std::string& origin = "<string>");
/// Throws std::runtime_error when the file cannot be read.
BialgebraSpec parse_spec(const std::string& path);

/// trivial, z2_sign, z4_f5, s3_flip, sweedler_lambda1.
const std::vector<std::string>& fixture_names();
/// Directory holding <name>.json and golden/<name>.*.
std::string fixture_dir();
std::string fixture_path(const std::string& name);

}  // namespace skewverify
