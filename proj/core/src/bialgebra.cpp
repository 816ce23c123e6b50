#include "skewverify/bialgebra.hpp"

#include <array>

namespace skewverify {

namespace {

void require_shape(const LinMap& f, const Space& dom, const Space& cod, const char* what) {
  if (!(f.dom() == dom) || !(f.cod() == cod)) {
    throw ShapeError(std::string(what) + " has shape " + f.dom().to_string() + " -> " +
                     f.cod().to_string() + ", expected " + dom.to_string() + " -> " +
                     cod.to_string());
  }
}

// (a₁, a₂, b₁, b₂) -> (a₁, b₁, a₂, b₂)
LinMap middle_swap(const Space& b, Field f) { return permute_factors({b, b, b, b}, {0, 2, 1, 3}, f); }

LinMap coproduct_of_pair(const Bialgebra& b) {
  return compose(middle_swap(b.space, b.field()), tensor_map(b.delta, b.delta));
}

}  // namespace

AxiomReport check_bialgebra(const Bialgebra& b) {
  const Space& B = b.space;
  const Space K = Space::unit();
  const Field f = b.field();
  require_shape(b.mu, B * B, B, "multiplication");
  require_shape(b.eta, K, B, "unit");
  require_shape(b.delta, B, B * B, "comultiplication");
  require_shape(b.eps, B, K, "counit");
  const LinMap id = LinMap::identity(B, f);

  AxiomReport rep;
  rep.suite = "bialgebra";
  rep.probes.push_back("B=" + B.to_string());

  LawCheck assoc("assoc");
  assoc.compare("", compose(b.mu, tensor_map(b.mu, id)), compose(b.mu, tensor_map(id, b.mu)));
  LawCheck unit_l("unit-l");
  unit_l.compare("", compose(b.mu, tensor_map(b.eta, id)), id);
  LawCheck unit_r("unit-r");
  unit_r.compare("", compose(b.mu, tensor_map(id, b.eta)), id);
  LawCheck coassoc("coassoc");
  coassoc.compare("", compose(tensor_map(b.delta, id), b.delta), compose(tensor_map(id, b.delta), b.delta));
  LawCheck counit_l("counit-l");
  counit_l.compare("", compose(tensor_map(b.eps, id), b.delta), id);
  LawCheck counit_r("counit-r");
  counit_r.compare("", compose(tensor_map(id, b.eps), b.delta), id);

  LawCheck compat("compat");
  compat.compare("delta.mu", compose(b.delta, b.mu),
                 compose(tensor_map(b.mu, b.mu), coproduct_of_pair(b)));
  compat.compare("eps.mu", compose(b.eps, b.mu), tensor_map(b.eps, b.eps));
  compat.compare("delta.eta", compose(b.delta, b.eta), tensor_map(b.eta, b.eta));
  compat.compare("eps.eta", compose(b.eps, b.eta), LinMap::identity(K, f));

  for (const auto* c : {&assoc, &unit_l, &unit_r, &coassoc, &counit_l, &counit_r, &compat}) {
    rep.laws.push_back(c->result());
  }
  return rep;
}

Bialgebra group_algebra(const std::vector<std::vector<std::size_t>>& table, std::size_t unit_index,
                        Field field, std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroup("empty multiplication table");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw NotAGroup("row " + std::to_string(i) + " has the wrong length");
    for (auto v : table[i]) {
      if (v >= n) throw NotAGroup("product out of range in row " + std::to_string(i));
    }
  }
  if (unit_index >= n) throw NotAGroup("unit index out of range");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[unit_index][i] != i || table[i][unit_index] != i) {
      throw NotAGroup("element " + std::to_string(unit_index) + " is not a unit for " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (table[table[i][j]][k] != table[i][table[j][k]]) {
          throw NotAGroup("associativity fails on (" + std::to_string(i) + ", " + std::to_string(j) +
                          ", " + std::to_string(k) + ")");
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool has_inverse = false;
    for (std::size_t j = 0; j < n && !has_inverse; ++j) {
      has_inverse = table[i][j] == unit_index && table[j][i] == unit_index;
    }
    if (!has_inverse) throw NotAGroup("element " + std::to_string(i) + " has no inverse");
  }

  Space B = Space::generator("B", n, std::move(names));
  const Space K = Space::unit();
  const Scalar one = field.one();
  std::vector<Triplet> mu, delta, eps;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mu.push_back({table[i][j], i * n + j, one});
    delta.push_back({i * n + i, i, one});
    eps.push_back({0, i, one});
  }
  return Bialgebra{B, LinMap::from_triplets(B * B, B, field, std::move(mu)),
                   LinMap::from_triplets(K, B, field, {{unit_index, 0, one}}),
                   LinMap::from_triplets(B, B * B, field, std::move(delta)),
                   LinMap::from_triplets(B, K, field, std::move(eps))};
}

Bialgebra cyclic_group_algebra(std::size_t n, Field field) {
  if (n == 0) throw NotAGroup("cyclic group of order 0");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    names.push_back(i == 0 ? "e" : i == 1 ? "g" : "g^" + std::to_string(i));
  }
  return group_algebra(table, 0, field, names);
}

Bialgebra symmetric_group3_algebra(Field field) {
  // Permutations of {0,1,2} as image triples; product is composition, (στ)(x) = σ(τ(x)).
  const std::vector<std::array<std::size_t, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> names = {"e", "(12)", "(23)", "(13)", "(123)", "(132)"};
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<std::size_t, 3> p{};
      for (std::size_t x = 0; x < 3; ++x) p[x] = perms[i][perms[j][x]];
      for (std::size_t k = 0; k < 6; ++k) {
        if (perms[k] == p) table[i][j] = k;
      }
    }
  }
  return group_algebra(table, 0, field, names);
}

Bialgebra trivial_bialgebra(Field field) { return cyclic_group_algebra(1, field); }

Bialgebra sweedler_bialgebra(Field field) {
  Space B = Space::generator("B", 4, {"1", "g", "x", "gx"});
  const Space K = Space::unit();
  // Basis element i is g^(i&1) x^(i>>1); x g = -g x, x² = 0.
  std::vector<Triplet> mu;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      std::size_t a = i & 1U, b = i >> 1U, c = j & 1U, d = j >> 1U;
      if (b + d > 1) continue;
      long long sign = (b * c) % 2 == 1 ? -1 : 1;
      mu.push_back({((a + c) % 2) | ((b + d) << 1U), i * 4 + j, field.from_int(sign)});
    }
  }
  const Scalar one = field.one();
  auto t = [&](std::size_t l, std::size_t r) { return l * 4 + r; };
  std::vector<Triplet> delta = {
      {t(0, 0), 0, one}, {t(1, 1), 1, one},  // 1, g group-like
      {t(2, 0), 2, one}, {t(1, 2), 2, one},  // Δx = x⊗1 + g⊗x
      {t(3, 1), 3, one}, {t(0, 3), 3, one},  // Δ(gx) = gx⊗g + 1⊗gx
  };
  return Bialgebra{B, LinMap::from_triplets(B * B, B, field, std::move(mu)),
                   LinMap::from_triplets(K, B, field, {{0, 0, one}}),
                   LinMap::from_triplets(B, B * B, field, std::move(delta)),
                   LinMap::from_triplets(B, K, field, {{0, 0, one}, {0, 1, one}})};
}

LinMap counit_pair(const Bialgebra& b) { return tensor_map(b.eps, b.eps); }

LinMap convolution(const Bialgebra& b, const LinMap& f, const LinMap& g) {
  return compose(tensor_map(f, g), coproduct_of_pair(b));
}

std::optional<LinMap> convolution_inverse(const Bialgebra& b, const LinMap& f) {
  // f*g = g∘M with M = (f⊗1)∘Δ_{B⊗B}; M is invertible exactly when f is.
  const Space BB = b.space * b.space;
  LinMap m = compose(tensor_map(f, LinMap::identity(BB, b.field())), coproduct_of_pair(b));
  auto mi = m.inverse();
  if (!mi) return std::nullopt;
  LinMap g = compose(counit_pair(b), *mi);
  if (!(convolution(b, g, f) == counit_pair(b))) return std::nullopt;
  return g;
}

AxiomReport check_cobraiding(const Bialgebra& b, const Cobraiding& c) {
  const Space& B = b.space;
  const Field f = b.field();
  require_shape(c.r, B * B, Space::unit(), "cobraiding r");
  require_shape(c.rbar, B * B, Space::unit(), "cobraiding rbar");
  const LinMap id = LinMap::identity(B, f);
  const LinMap& r = c.r;

  AxiomReport rep;
  rep.suite = "cobraiding";
  rep.probes.push_back("B=" + B.to_string());

  LawCheck inv("inv");
  inv.compare("r*rbar", convolution(b, r, c.rbar), counit_pair(b));
  inv.compare("rbar*r", convolution(b, c.rbar, r), counit_pair(b));

  LawCheck cb1("CB1");
  cb1.compare("", compose(r, tensor_map(b.mu, id)),
              path({tensor_map({id, id, b.delta}), permute_factors({B, B, B, B}, {1, 2, 0, 3}, f),
                    tensor_map(r, r)}));
  LawCheck cb2("CB2");
  cb2.compare("", compose(r, tensor_map(id, b.mu)),
              path({tensor_map({b.delta, id, id}), middle_swap(B, f), tensor_map(r, r)}));
  LawCheck cb3("CB3");
  cb3.compare("",
              path({tensor_map(b.delta, b.delta), permute_factors({B, B, B, B}, {0, 2, 3, 1}, f),
                    tensor_map(r, b.mu)}),
              path({tensor_map(b.delta, b.delta), middle_swap(B, f), tensor_map(b.mu, r)}));

  for (const auto* l : {&inv, &cb1, &cb2, &cb3}) rep.laws.push_back(l->result());
  return rep;
}

Cobraiding make_cobraiding(const Bialgebra& b, LinMap r) {
  auto rbar = convolution_inverse(b, r);
  if (!rbar) throw NotInvertible("cobraiding functional is not convolution invertible");
  return Cobraiding{std::move(r), std::move(*rbar)};
}

Cobraiding trivial_cobraiding(const Bialgebra& b) {
  return Cobraiding{counit_pair(b), counit_pair(b)};
}

Cobraiding bicharacter_cobraiding(std::size_t n, const Scalar& zeta, Field field) {
  if (zeta.field() != field) throw FieldMismatch("root of unity lives in " + zeta.field().name());
  if (n == 0 || !zeta.pow(static_cast<long long>(n)).is_one()) {
    throw NotARootOfUnity(zeta.to_string() + " is not an " + std::to_string(n) + "-th root of unity in " +
                          field.name());
  }
  Bialgebra b = cyclic_group_algebra(n, field);
  const Space BB = b.space * b.space;
  std::vector<Triplet> r, rbar;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto e = static_cast<long long>((i * j) % n);
      r.push_back({0, i * n + j, zeta.pow(e)});
      rbar.push_back({0, i * n + j, zeta.pow(-e)});
    }
  }
  return Cobraiding{LinMap::from_triplets(BB, Space::unit(), field, std::move(r)),
                    LinMap::from_triplets(BB, Space::unit(), field, std::move(rbar))};
}

Cobraiding sweedler_cobraiding(const Scalar& lambda) {
  const Field f = lambda.field();
  Bialgebra b = sweedler_bialgebra(f);
  const Scalar one = f.one();
  // rows a, columns b over (1, g, x, gx)
  const std::vector<std::vector<Scalar>> table = {{one, one, f.zero(), f.zero()},
                                                  {one, -one, f.zero(), f.zero()},
                                                  {f.zero(), f.zero(), lambda, -lambda},
                                                  {f.zero(), f.zero(), lambda, lambda}};
  std::vector<Triplet> r;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) r.push_back({0, i * 4 + j, table[i][j]});
  }
  return make_cobraiding(b, LinMap::from_triplets(b.space * b.space, Space::unit(), f, std::move(r)));
}

}  // namespace skewverify
