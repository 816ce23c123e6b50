#include "skewverify/space.hpp"

#include <limits>

namespace skewverify {

namespace {

constexpr std::size_t kMaxDim = std::size_t{1} << 31U;

std::size_t checked_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kMaxDim / a) throw ShapeError("space dimension exceeds 2^31");
  return a * b;
}

}  // namespace

std::string Factor::basis_label(std::size_t i) const {
  if (kind == Kind::hom) {
    const std::size_t cols = hom_dom->dim();
    return "E[" + hom_cod->basis_label(i / cols) + "," + hom_dom->basis_label(i % cols) + "]";
  }
  if (basis && i < basis->size()) return (*basis)[i];
  return name + std::to_string(i);
}

std::string Factor::to_string() const {
  if (kind == Kind::hom) return "[" + hom_dom->to_string() + "," + hom_cod->to_string() + "]";
  return name;
}

bool operator==(const Factor& a, const Factor& b) {
  if (a.kind != b.kind || a.dim != b.dim) return false;
  if (a.kind == Factor::Kind::generator) return a.name == b.name;
  return *a.hom_dom == *b.hom_dom && *a.hom_cod == *b.hom_cod;
}

Space::Space() : factors_(std::make_shared<const std::vector<Factor>>()), dim_(1) {}

Space::Space(std::vector<Factor> factors) {
  std::size_t d = 1;
  for (const auto& f : factors) d = checked_mul(d, f.dim);
  dim_ = d;
  factors_ = std::make_shared<const std::vector<Factor>>(std::move(factors));
}

Space Space::generator(std::string name, std::size_t dim, std::vector<std::string> basis_names) {
  if (name.empty()) throw ShapeError("generator spaces need a name");
  if (!basis_names.empty() && basis_names.size() != dim) {
    throw ShapeError("generator '" + name + "': " + std::to_string(basis_names.size()) +
                     " basis names for dimension " + std::to_string(dim));
  }
  Factor f;
  f.kind = Factor::Kind::generator;
  f.name = std::move(name);
  f.dim = dim;
  if (!basis_names.empty()) {
    f.basis = std::make_shared<const std::vector<std::string>>(std::move(basis_names));
  }
  return Space({std::move(f)});
}

Space Space::hom(const Space& dom, const Space& cod) {
  Factor f;
  f.kind = Factor::Kind::hom;
  f.dim = checked_mul(dom.dim(), cod.dim());
  f.hom_dom = std::make_shared<const Space>(dom);
  f.hom_cod = std::make_shared<const Space>(cod);
  return Space({std::move(f)});
}

Space Space::tensor(const Space& left, const Space& right) {
  if (left.is_unit()) return right;
  if (right.is_unit()) return left;
  std::vector<Factor> fs = left.factors();
  fs.insert(fs.end(), right.factors().begin(), right.factors().end());
  return Space(std::move(fs));
}

Space Space::tensor(const std::vector<Space>& parts) {
  std::vector<Factor> fs;
  for (const auto& p : parts) fs.insert(fs.end(), p.factors().begin(), p.factors().end());
  return Space(std::move(fs));
}

std::vector<std::size_t> Space::multi_index(std::size_t index) const {
  const auto& fs = factors();
  std::vector<std::size_t> out(fs.size());
  for (std::size_t k = fs.size(); k-- > 0;) {
    out[k] = index % fs[k].dim;
    index /= fs[k].dim;
  }
  return out;
}

std::string Space::basis_label(std::size_t index) const {
  if (is_unit()) return "1";
  auto mi = multi_index(index);
  std::string out;
  for (std::size_t k = 0; k < mi.size(); ++k) {
    if (k) out += '.';
    out += factors()[k].basis_label(mi[k]);
  }
  return out;
}

bool Space::ends_with(const Space& suffix) const {
  const auto& a = factors();
  const auto& b = suffix.factors();
  if (b.size() > a.size()) return false;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!(a[a.size() - b.size() + i] == b[i])) return false;
  }
  return true;
}

Space Space::strip_suffix(const Space& suffix) const {
  if (!ends_with(suffix)) {
    throw ShapeError("'" + suffix.to_string() + "' is not a tensor suffix of '" + to_string() + "'");
  }
  std::vector<Factor> fs(factors().begin(), factors().end() - static_cast<std::ptrdiff_t>(
                                                                   suffix.factors().size()));
  return Space(std::move(fs));
}

bool Space::is_hom() const {
  return factors().size() == 1 && factors().front().kind == Factor::Kind::hom;
}

const Space& Space::hom_domain() const {
  if (!is_hom()) throw ShapeError("'" + to_string() + "' is not an internal hom");
  return *factors().front().hom_dom;
}

const Space& Space::hom_codomain() const {
  if (!is_hom()) throw ShapeError("'" + to_string() + "' is not an internal hom");
  return *factors().front().hom_cod;
}

std::string Space::to_string() const {
  if (is_unit()) return "K";
  std::string out;
  for (std::size_t k = 0; k < factors().size(); ++k) {
    if (k) out += '.';
    out += factors()[k].to_string();
  }
  return out;
}

bool operator==(const Space& a, const Space& b) {
  if (a.factors_ == b.factors_) return true;
  if (a.dim_ != b.dim_) return false;
  return *a.factors_ == *b.factors_;
}

}  // namespace skewverify
