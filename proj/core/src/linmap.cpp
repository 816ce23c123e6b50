#include "skewverify/linmap.hpp"

#include <algorithm>
#include <numeric>

namespace skewverify {

namespace {

void require_field(const Field& a, const Field& b) {
  if (a != b) throw FieldMismatch("maps over " + a.name() + " and " + b.name());
}

std::string shape_of(const LinMap& f) {
  return f.dom().to_string() + " -> " + f.cod().to_string();
}

}  // namespace

// ---------------------------------------------------------------- Builder

LinMap::Builder::Builder(Space dom, Space cod, Field field)
    : dom_(std::move(dom)), cod_(std::move(cod)), field_(field) {
  rows_.reserve(dom_.dim());
  vals_.reserve(dom_.dim());
}

void LinMap::Builder::add(std::size_t row, const Scalar& value) {
  if (row >= cod_.dim()) throw ShapeError("row index out of range in " + cod_.to_string());
  if (value.is_zero()) return;
  pending_.emplace_back(static_cast<std::uint32_t>(row), value);
}

void LinMap::Builder::finish_column() {
  if (colptr_.size() > dom_.dim()) throw ShapeError("too many columns for " + dom_.to_string());
  auto strictly_before = [](const auto& a, const auto& b) { return a.first >= b.first; };
  if (std::adjacent_find(pending_.begin(), pending_.end(), strictly_before) == pending_.end()) {
    // already sorted without repeats; values are nonzero by construction
    for (auto& [r, v] : pending_) {
      rows_.push_back(r);
      vals_.push_back(std::move(v));
    }
    pending_.clear();
    colptr_.push_back(rows_.size());
    return;
  }
  std::sort(pending_.begin(), pending_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < pending_.size();) {
    std::uint32_t r = pending_[i].first;
    Scalar acc = pending_[i].second;
    std::size_t k = i + 1;
    for (; k < pending_.size() && pending_[k].first == r; ++k) acc += pending_[k].second;
    if (!acc.is_zero()) {
      rows_.push_back(r);
      vals_.push_back(std::move(acc));
    }
    i = k;
  }
  pending_.clear();
  colptr_.push_back(rows_.size());
}

LinMap LinMap::Builder::build() && {
  if (!pending_.empty()) finish_column();
  while (colptr_.size() <= dom_.dim()) colptr_.push_back(rows_.size());
  LinMap out(std::move(dom_), std::move(cod_), field_);
  out.colptr_ = std::move(colptr_);
  out.rows_ = std::move(rows_);
  out.vals_ = std::move(vals_);
  return out;
}

// ---------------------------------------------------------------- LinMap

LinMap::LinMap(Space dom, Space cod, Field field)
    : dom_(std::move(dom)), cod_(std::move(cod)), field_(field), colptr_(dom_.dim() + 1, 0) {}

LinMap LinMap::identity(const Space& s, Field field) {
  Builder b(s, s, field);
  const Scalar one = field.one();
  for (std::size_t j = 0; j < s.dim(); ++j) {
    b.add(j, one);
    b.finish_column();
  }
  return std::move(b).build();
}

LinMap LinMap::from_dense(Space dom, Space cod, Field field,
                          const std::vector<std::vector<Scalar>>& rows) {
  if (rows.size() != cod.dim()) {
    throw DimensionMismatch("dense matrix has " + std::to_string(rows.size()) + " rows, codomain " +
                            cod.to_string() + " has dimension " + std::to_string(cod.dim()));
  }
  for (const auto& r : rows) {
    if (r.size() != dom.dim()) {
      throw DimensionMismatch("dense matrix row of length " + std::to_string(r.size()) +
                              " for domain " + dom.to_string());
    }
  }
  Builder b(dom, cod, field);
  for (std::size_t j = 0; j < dom.dim(); ++j) {
    for (std::size_t i = 0; i < cod.dim(); ++i) {
      require_field(rows[i][j].field(), field);
      b.add(i, rows[i][j]);
    }
    b.finish_column();
  }
  return std::move(b).build();
}

LinMap LinMap::from_ints(Space dom, Space cod, Field field,
                         const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Scalar>> s;
  s.reserve(rows.size());
  for (const auto& r : rows) {
    auto& out = s.emplace_back();
    for (long long v : r) out.push_back(field.from_int(v));
  }
  return from_dense(std::move(dom), std::move(cod), field, s);
}

LinMap LinMap::from_triplets(Space dom, Space cod, Field field, std::vector<Triplet> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Triplet& a, const Triplet& b) { return a.col < b.col; });
  Builder b(dom, cod, field);
  std::size_t k = 0;
  for (std::size_t j = 0; j < dom.dim(); ++j) {
    for (; k < entries.size() && entries[k].col == j; ++k) b.add(entries[k].row, entries[k].value);
    b.finish_column();
  }
  if (k != entries.size()) throw ShapeError("triplet column out of range for " + dom.to_string());
  return std::move(b).build();
}

std::span<const std::uint32_t> LinMap::column_rows(std::size_t col) const {
  return {rows_.data() + colptr_[col], colptr_[col + 1] - colptr_[col]};
}

std::span<const Scalar> LinMap::column_values(std::size_t col) const {
  return {vals_.data() + colptr_[col], colptr_[col + 1] - colptr_[col]};
}

Scalar LinMap::entry(std::size_t row, std::size_t col) const {
  if (row >= rows() || col >= cols()) throw ShapeError("entry index out of range");
  auto rs = column_rows(col);
  auto it = std::lower_bound(rs.begin(), rs.end(), static_cast<std::uint32_t>(row));
  if (it == rs.end() || *it != row) return field_.zero();
  return vals_[colptr_[col] + static_cast<std::size_t>(it - rs.begin())];
}

std::vector<std::vector<Scalar>> LinMap::to_dense() const {
  std::vector<std::vector<Scalar>> out(rows(), std::vector<Scalar>(cols(), field_.zero()));
  for (std::size_t j = 0; j < cols(); ++j) {
    for (std::size_t k = colptr_[j]; k < colptr_[j + 1]; ++k) out[rows_[k]][j] = vals_[k];
  }
  return out;
}

bool LinMap::is_identity() const {
  if (rows() != cols()) return false;
  for (std::size_t j = 0; j < cols(); ++j) {
    if (colptr_[j + 1] - colptr_[j] != 1 || rows_[colptr_[j]] != j || !vals_[colptr_[j]].is_one()) {
      return false;
    }
  }
  return true;
}

LinMap LinMap::transpose() const {
  std::vector<Triplet> t;
  t.reserve(nnz());
  for (std::size_t j = 0; j < cols(); ++j) {
    for (std::size_t k = colptr_[j]; k < colptr_[j + 1]; ++k) t.push_back({j, rows_[k], vals_[k]});
  }
  return from_triplets(cod_, dom_, field_, std::move(t));
}

LinMap LinMap::relabel(Space dom, Space cod) const {
  if (dom.dim() != dom_.dim() || cod.dim() != cod_.dim()) {
    throw DimensionMismatch("relabel " + shape_of(*this) + " as " + dom.to_string() + " -> " +
                            cod.to_string());
  }
  LinMap out = *this;
  out.dom_ = std::move(dom);
  out.cod_ = std::move(cod);
  return out;
}

LinMap LinMap::scaled(const Scalar& c) const {
  require_field(c.field(), field_);
  if (c.is_zero()) return LinMap(dom_, cod_, field_);
  LinMap out = *this;
  for (auto& v : out.vals_) v *= c;
  return out;
}

std::optional<LinMap> LinMap::inverse() const {
  const std::size_t n = rows();
  if (n != cols()) return std::nullopt;
  using Row = std::vector<std::pair<std::uint32_t, Scalar>>;
  // Augmented rows [M | I] with identity columns offset by n.
  std::vector<Row> m(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = colptr_[j]; k < colptr_[j + 1]; ++k) {
      m[rows_[k]].emplace_back(static_cast<std::uint32_t>(j), vals_[k]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) m[i].emplace_back(static_cast<std::uint32_t>(n + i), field_.one());

  auto value_at = [](const Row& r, std::uint32_t c) -> const Scalar* {
    auto it = std::lower_bound(r.begin(), r.end(), c,
                               [](const auto& e, std::uint32_t key) { return e.first < key; });
    return (it != r.end() && it->first == c) ? &it->second : nullptr;
  };
  auto axpy = [&](Row& target, const Row& src, const Scalar& factor) {
    Row out;
    out.reserve(target.size() + src.size());
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < target.size() || b < src.size()) {
      if (b == src.size() || (a < target.size() && target[a].first < src[b].first)) {
        out.push_back(std::move(target[a++]));
      } else if (a == target.size() || src[b].first < target[a].first) {
        out.emplace_back(src[b].first, -(factor * src[b].second));
        ++b;
      } else {
        Scalar v = target[a].second - factor * src[b].second;
        if (!v.is_zero()) out.emplace_back(target[a].first, std::move(v));
        ++a;
        ++b;
      }
    }
    target = std::move(out);
  };

  std::vector<char> used(n, 0);
  std::vector<std::size_t> pivot_row(n);
  for (std::uint32_t c = 0; c < n; ++c) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i] || value_at(m[i], c) == nullptr) continue;
      if (best == n || m[i].size() < m[best].size()) best = i;
    }
    if (best == n) return std::nullopt;
    used[best] = 1;
    pivot_row[c] = best;
    Scalar inv = value_at(m[best], c)->inverse();
    for (auto& e : m[best]) e.second *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == best) continue;
      const Scalar* v = value_at(m[i], c);
      if (v == nullptr) continue;
      Scalar factor = *v;
      axpy(m[i], m[best], factor);
    }
  }
  std::vector<Triplet> t;
  for (std::uint32_t c = 0; c < n; ++c) {
    for (const auto& [col, v] : m[pivot_row[c]]) {
      if (col >= n) t.push_back({c, col - n, v});
    }
  }
  return from_triplets(cod_, dom_, field_, std::move(t));
}

bool operator==(const LinMap& a, const LinMap& b) {
  return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.field_ == b.field_ && a.colptr_ == b.colptr_ &&
         a.rows_ == b.rows_ && a.vals_ == b.vals_;
}

// ---------------------------------------------------------------- free functions

LinMap compose(const LinMap& g, const LinMap& f) {
  if (!(f.cod() == g.dom())) {
    throw DimensionMismatch("cannot compose (" + shape_of(g) + ") after (" + shape_of(f) + ")");
  }
  require_field(f.field(), g.field());
  const Field field = f.field();
  LinMap::Builder b(f.dom(), g.cod(), field);
  std::vector<Scalar> acc(g.rows(), field.zero());
  std::vector<char> touched(g.rows(), 0);
  std::vector<std::uint32_t> hit;
  for (std::size_t j = 0; j < f.cols(); ++j) {
    auto fr = f.column_rows(j);
    auto fv = f.column_values(j);
    for (std::size_t k = 0; k < fr.size(); ++k) {
      auto gr = g.column_rows(fr[k]);
      auto gv = g.column_values(fr[k]);
      for (std::size_t t = 0; t < gr.size(); ++t) {
        if (!touched[gr[t]]) {
          touched[gr[t]] = 1;
          hit.push_back(gr[t]);
          acc[gr[t]] = gv[t] * fv[k];
        } else {
          acc[gr[t]] += gv[t] * fv[k];
        }
      }
    }
    for (auto r : hit) {
      b.add(r, acc[r]);
      touched[r] = 0;
    }
    hit.clear();
    b.finish_column();
  }
  return std::move(b).build();
}

LinMap path(std::initializer_list<LinMap> steps) {
  if (steps.size() == 0) throw ShapeError("empty diagram path");
  auto it = steps.begin();
  LinMap acc = *it;
  for (++it; it != steps.end(); ++it) acc = compose(*it, acc);
  return acc;
}

LinMap tensor_map(const LinMap& f, const LinMap& g) {
  require_field(f.field(), g.field());
  LinMap::Builder b(Space::tensor(f.dom(), g.dom()), Space::tensor(f.cod(), g.cod()), f.field());
  const std::size_t grows = g.rows();
  for (std::size_t jf = 0; jf < f.cols(); ++jf) {
    auto fr = f.column_rows(jf);
    auto fv = f.column_values(jf);
    for (std::size_t jg = 0; jg < g.cols(); ++jg) {
      auto gr = g.column_rows(jg);
      auto gv = g.column_values(jg);
      for (std::size_t a = 0; a < fr.size(); ++a) {
        for (std::size_t c = 0; c < gr.size(); ++c) b.add(fr[a] * grows + gr[c], fv[a] * gv[c]);
      }
      b.finish_column();
    }
  }
  return std::move(b).build();
}

LinMap tensor_map(std::initializer_list<LinMap> fs) {
  if (fs.size() == 0) throw ShapeError("empty tensor product of maps");
  auto it = fs.begin();
  LinMap acc = *it;
  for (++it; it != fs.end(); ++it) acc = tensor_map(acc, *it);
  return acc;
}

namespace {

LinMap combine(const LinMap& a, const LinMap& b, bool subtract) {
  if (!(a.dom() == b.dom()) || !(a.cod() == b.cod())) {
    throw DimensionMismatch("adding (" + shape_of(a) + ") and (" + shape_of(b) + ")");
  }
  require_field(a.field(), b.field());
  LinMap::Builder out(a.dom(), a.cod(), a.field());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    auto ar = a.column_rows(j);
    auto av = a.column_values(j);
    for (std::size_t k = 0; k < ar.size(); ++k) out.add(ar[k], av[k]);
    auto br = b.column_rows(j);
    auto bv = b.column_values(j);
    for (std::size_t k = 0; k < br.size(); ++k) out.add(br[k], subtract ? -bv[k] : bv[k]);
    out.finish_column();
  }
  return std::move(out).build();
}

}  // namespace

LinMap operator+(const LinMap& a, const LinMap& b) { return combine(a, b, false); }
LinMap operator-(const LinMap& a, const LinMap& b) { return combine(a, b, true); }

std::optional<EntryDifference> first_difference(const LinMap& a, const LinMap& b) {
  if (!(a.dom() == b.dom()) || !(a.cod() == b.cod())) {
    throw DimensionMismatch("comparing (" + shape_of(a) + ") with (" + shape_of(b) + ")");
  }
  const Scalar zero = a.field().zero();
  for (std::size_t j = 0; j < a.cols(); ++j) {
    auto ar = a.column_rows(j);
    auto av = a.column_values(j);
    auto br = b.column_rows(j);
    auto bv = b.column_values(j);
    std::size_t p = 0;
    std::size_t q = 0;
    while (p < ar.size() || q < br.size()) {
      if (q == br.size() || (p < ar.size() && ar[p] < br[q])) return EntryDifference{ar[p], j, av[p], zero};
      if (p == ar.size() || br[q] < ar[p]) return EntryDifference{br[q], j, zero, bv[q]};
      if (!(av[p] == bv[q])) return EntryDifference{ar[p], j, av[p], bv[q]};
      ++p;
      ++q;
    }
  }
  return std::nullopt;
}

LinMap permute_factors(const std::vector<Space>& parts, const std::vector<std::size_t>& order,
                       Field field) {
  const std::size_t k = parts.size();
  if (order.size() != k) throw ShapeError("permutation length does not match factor count");
  std::vector<char> seen(k, 0);
  for (auto o : order) {
    if (o >= k || seen[o]) throw ShapeError("order is not a permutation");
    seen[o] = 1;
  }
  std::vector<Space> out_parts;
  out_parts.reserve(k);
  for (auto o : order) out_parts.push_back(parts[o]);
  Space dom = Space::tensor(parts);
  Space cod = Space::tensor(out_parts);

  std::vector<std::size_t> dims(k);
  for (std::size_t i = 0; i < k; ++i) dims[i] = parts[i].dim();
  // Strides of each source factor inside the codomain index.
  std::vector<std::size_t> cod_stride(k, 1);
  {
    std::size_t s = 1;
    for (std::size_t pos = k; pos-- > 0;) {
      cod_stride[order[pos]] = s;
      s *= dims[order[pos]];
    }
  }
  LinMap::Builder b(dom, cod, field);
  const Scalar one = field.one();
  std::vector<std::size_t> idx(k, 0);
  for (std::size_t j = 0; j < dom.dim(); ++j) {
    std::size_t row = 0;
    for (std::size_t i = 0; i < k; ++i) row += idx[i] * cod_stride[i];
    b.add(row, one);
    b.finish_column();
    for (std::size_t i = k; i-- > 0;) {
      if (++idx[i] < dims[i]) break;
      idx[i] = 0;
    }
  }
  return std::move(b).build();
}

LinMap flip(const Space& v, const Space& w, Field field) { return permute_factors({v, w}, {1, 0}, field); }

LinMap curry(const LinMap& f, const Space& a) {
  if (!f.dom().ends_with(a)) {
    throw NotATensorDomain("cannot curry " + shape_of(f) + " along '" + a.to_string() + "'");
  }
  Space x = f.dom().strip_suffix(a);
  Space h = Space::hom(a, f.cod());
  const std::size_t da = a.dim();
  std::vector<Triplet> t;
  t.reserve(f.nnz());
  for (std::size_t j = 0; j < f.cols(); ++j) {
    auto rs = f.column_rows(j);
    auto vs = f.column_values(j);
    for (std::size_t k = 0; k < rs.size(); ++k) t.push_back({rs[k] * da + j % da, j / da, vs[k]});
  }
  return LinMap::from_triplets(x, h, f.field(), std::move(t));
}

LinMap uncurry(const LinMap& g) {
  const Space& h = g.cod();
  const Space& a = h.hom_domain();
  const Space& b = h.hom_codomain();
  const std::size_t da = a.dim();
  std::vector<Triplet> t;
  t.reserve(g.nnz());
  for (std::size_t x = 0; x < g.cols(); ++x) {
    auto rs = g.column_rows(x);
    auto vs = g.column_values(x);
    for (std::size_t k = 0; k < rs.size(); ++k) t.push_back({rs[k] / da, x * da + rs[k] % da, vs[k]});
  }
  return LinMap::from_triplets(Space::tensor(g.dom(), a), b, g.field(), std::move(t));
}

LinMap evaluation(const Space& v, const Space& w, Field field) {
  Space h = Space::hom(v, w);
  return uncurry(LinMap::identity(h, field));
}

LinMap hom_map(const LinMap& pre, const LinMap& post) {
  LinMap k = tensor_map(post, pre.transpose());
  return k.relabel(Space::hom(pre.cod(), post.dom()), Space::hom(pre.dom(), post.cod()));
}

}  // namespace skewverify
