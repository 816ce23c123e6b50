#pragma once

// Uniform law-by-law results shared by every checker.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewverify/linmap.hpp"

namespace skewverify {

enum class LawStatus { pass, fail, inconsistent };

std::string to_string(LawStatus s);

/// Where two sides of a diagram first disagree.
struct Witness {
  std::string probe;  // e.g. "X=P1 A=P2 B=I C=P3"
  std::size_t row = 0;
  std::size_t col = 0;
  std::string row_label;
  std::string col_label;
  std::string lhs;
  std::string rhs;
  std::string note;  // free-form detail when the failure is not an entry mismatch
};

struct LawResult {
  std::string id;
  LawStatus status = LawStatus::pass;
  /// Optional laws are reported but never affect the exit code.
  bool optional = false;
  std::optional<Witness> witness;
  std::size_t probes_checked = 0;
};

struct AxiomReport {
  std::string suite;
  std::vector<LawResult> laws;
  std::vector<std::string> probes;

  const LawResult* find(const std::string& id) const;
  const LawResult& at(const std::string& id) const;
  bool passed(const std::string& id) const { return at(id).status == LawStatus::pass; }
  /// Ids of every law whose status is not pass.
  std::vector<std::string> failing() const;
  void append(const AxiomReport& other);
  /// 0 all pass, 1 some required law failed, 3 internal inconsistency.
  int exit_code() const;
};

/// Accumulates one law over many probes, keeping the first witness.
class LawCheck {
 public:
  explicit LawCheck(std::string id, bool optional = false);

  /// Compares two parallel maps; returns false on the first mismatch.
  bool compare(const std::string& probe, const LinMap& lhs, const LinMap& rhs);
  /// Records a failure that is not an entry mismatch.
  void fail(const std::string& probe, std::string note);
  bool failed() const { return result_.status != LawStatus::pass; }
  LawResult result() const { return result_; }

 private:
  LawResult result_;
};

/// Thrown by checkers when a map they need does not exist.
class NotInvertible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace skewverify
