#include "skewverify/report.hpp"

namespace skewverify {

std::string to_string(LawStatus s) {
  switch (s) {
    case LawStatus::pass:
      return "pass";
    case LawStatus::fail:
      return "fail";
    case LawStatus::inconsistent:
      return "inconsistent";
  }
  return "unknown";
}

const LawResult* AxiomReport::find(const std::string& id) const {
  for (const auto& l : laws) {
    if (l.id == id) return &l;
  }
  return nullptr;
}

const LawResult& AxiomReport::at(const std::string& id) const {
  const LawResult* l = find(id);
  if (l == nullptr) throw std::out_of_range("law '" + id + "' not in report '" + suite + "'");
  return *l;
}

std::vector<std::string> AxiomReport::failing() const {
  std::vector<std::string> out;
  for (const auto& l : laws) {
    if (l.status != LawStatus::pass) out.push_back(l.id);
  }
  return out;
}

void AxiomReport::append(const AxiomReport& other) {
  laws.insert(laws.end(), other.laws.begin(), other.laws.end());
  for (const auto& p : other.probes) {
    bool seen = false;
    for (const auto& q : probes) seen = seen || q == p;
    if (!seen) probes.push_back(p);
  }
}

int AxiomReport::exit_code() const {
  int code = 0;
  for (const auto& l : laws) {
    if (l.status == LawStatus::inconsistent) return 3;
    if (l.status == LawStatus::fail && !l.optional) code = 1;
  }
  return code;
}

LawCheck::LawCheck(std::string id, bool optional) {
  result_.id = std::move(id);
  result_.optional = optional;
}

bool LawCheck::compare(const std::string& probe, const LinMap& lhs, const LinMap& rhs) {
  if (failed()) return false;
  ++result_.probes_checked;
  auto d = first_difference(lhs, rhs);
  if (!d) return true;
  result_.status = LawStatus::fail;
  Witness w;
  w.probe = probe;
  w.row = d->row;
  w.col = d->col;
  w.row_label = lhs.cod().basis_label(d->row);
  w.col_label = lhs.dom().basis_label(d->col);
  w.lhs = d->lhs.to_string();
  w.rhs = d->rhs.to_string();
  result_.witness = std::move(w);
  return false;
}

void LawCheck::fail(const std::string& probe, std::string note) {
  if (failed()) return;
  ++result_.probes_checked;
  result_.status = LawStatus::fail;
  Witness w;
  w.probe = probe;
  w.note = std::move(note);
  result_.witness = std::move(w);
}

}  // namespace skewverify
