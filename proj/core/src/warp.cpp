#include "skewverify/warp.hpp"

#include <memory>

namespace skewverify {

// ---------------------------------------------------------------- comonad

LinMap MonoidalComonad::G(const LinMap& f) const {
  return tensor_map(LinMap::identity(b_.space, field()), f);
}

LinMap MonoidalComonad::delta(const Space& x) const {
  return tensor_map(b_.delta, LinMap::identity(x, field()));
}

LinMap MonoidalComonad::eps(const Space& x) const {
  return tensor_map(b_.eps, LinMap::identity(x, field()));
}

LinMap MonoidalComonad::G2(const Space& x, const Space& y) const {
  const Space& B = b_.space;
  const Field f = field();
  return compose(tensor_map({b_.mu, LinMap::identity(x, f), LinMap::identity(y, f)}),
                 permute_factors({B, x, B, y}, {0, 2, 1, 3}, f));
}

LinMap Cowarping::v(const Space& x, const Space& y) const {
  return compose(g_.G2(x, g_.G(y)),
                 tensor_map(LinMap::identity(g_.G(x), g_.field()), g_.delta(y)));
}

MonoidalComonad comonad_from_bialgebra(const Bialgebra& b) {
  auto rep = check_bialgebra(b);
  if (!rep.failing().empty()) {
    throw BialgebraAxiomFailure("bialgebra law '" + rep.failing().front() + "' fails");
  }
  return MonoidalComonad(b);
}

// ---------------------------------------------------------------- braiding

BraidingOnComonad::BraidingOnComonad(Space carrier, LinMap core)
    : b_(std::move(carrier)), core_(std::move(core)) {
  const Space bb = b_ * b_;
  if (!(core_.dom() == bb) || !(core_.cod() == bb)) {
    throw ShapeError("braiding core must be an endomorphism of " + bb.to_string());
  }
  core_inv_ = core_.inverse();
}

LinMap BraidingOnComonad::y(const Space& x, const Space& yy) const {
  const Field f = core_.field();
  return path({permute_factors({b_, x, b_, yy}, {0, 2, 1, 3}, f),
               tensor_map({core_, LinMap::identity(x, f), LinMap::identity(yy, f)}),
               permute_factors({b_, b_, x, yy}, {0, 3, 1, 2}, f)});
}

LinMap BraidingOnComonad::y_inv(const Space& x, const Space& yy) const {
  if (!core_inv_) throw NotInvertible("braiding core is singular");
  const Field f = core_.field();
  return path({permute_factors({b_, b_, x, yy}, {0, 3, 1, 2}, f).transpose(),
               tensor_map({*core_inv_, LinMap::identity(x, f), LinMap::identity(yy, f)}),
               permute_factors({b_, x, b_, yy}, {0, 2, 1, 3}, f).transpose()});
}

BraidingOnComonad y_from_cobraiding(const Bialgebra& b, const Cobraiding& c) {
  const Space& B = b.space;
  const Field f = b.field();
  // core(b⊗b') = Σ r(b₁⊗b'₁) b'₂⊗b₂
  LinMap core = path({tensor_map(b.delta, b.delta), permute_factors({B, B, B, B}, {0, 2, 3, 1}, f),
                      tensor_map({c.r, LinMap::identity(B, f), LinMap::identity(B, f)})});
  return BraidingOnComonad(B, std::move(core));
}

LinMap cobraiding_from_y(const Bialgebra& b, const BraidingOnComonad& y) {
  return compose(counit_pair(b), y.core());
}

// ---------------------------------------------------------------- Vect[B]

SkewMonCat skewmon_from_cowarp(const Cowarping& w) {
  auto cw = std::make_shared<const Cowarping>(w);
  const Field f = w.comonad().field();
  const Space B = w.comonad().carrier();
  SkewMonCat c;
  c.name = "Vect[" + B.to_string() + "]";
  c.field = f;
  c.unit = Space::unit();
  c.tensor = [B](const Space& x, const Space& y) { return x * B * y; };
  c.tensor_map = [B, f](const LinMap& g, const LinMap& h) {
    return tensor_map({g, LinMap::identity(B, f), h});
  };
  c.assoc = [cw, f](const Space& x, const Space& y, const Space& z) {
    return tensor_map(LinMap::identity(x, f), cw->v(y, z));
  };
  c.left_unit = [cw](const Space& x) { return cw->k(x); };
  c.right_unit = [cw, f](const Space& x) {
    return tensor_map(LinMap::identity(x, f), cw->v0());
  };
  return c;
}

SkewMonCat s_from_y(const SkewMonCat& vect_b, const BraidingOnComonad& y) {
  auto yy = std::make_shared<const BraidingOnComonad>(y);
  SkewMonCat c = vect_b;
  const Field f = c.field;
  c.braid = [yy, f](const Space& x, const Space& a, const Space& b) {
    return tensor_map(LinMap::identity(x, f), yy->y(a, b));
  };
  if (y.invertible()) {
    c.braid_inv = [yy, f](const Space& x, const Space& a, const Space& b) {
      return tensor_map(LinMap::identity(x, f), yy->y_inv(b, a));
    };
  }
  return c;
}

BraidingOnComonad y_from_s(const SkewMonCat& c, const Space& carrier) {
  const Space& I = c.unit;
  return BraidingOnComonad(carrier, c.braid(I, I, I).relabel(carrier * carrier, carrier * carrier));
}

// ---------------------------------------------------------------- checks

namespace {

/// v built entry by entry from the structure constants.
LinMap v_from_constants(const Bialgebra& b, const Space& x, const Space& y) {
  const std::size_t n = b.dim(), dx = x.dim(), dy = y.dim();
  const Space& B = b.space;
  LinMap::Builder out(B * x * B * y, B * x * B * y, b.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t xi = 0; xi < dx; ++xi)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t yi = 0; yi < dy; ++yi) {
          auto dr = b.delta.column_rows(j);
          auto dv = b.delta.column_values(j);
          for (std::size_t k = 0; k < dr.size(); ++k) {
            std::size_t j1 = dr[k] / n, j2 = dr[k] % n;
            auto mr = b.mu.column_rows(i * n + j1);
            auto mv = b.mu.column_values(i * n + j1);
            for (std::size_t t = 0; t < mr.size(); ++t) {
              out.add(((mr[t] * dx + xi) * n + j2) * dy + yi, dv[k] * mv[t]);
            }
          }
          out.finish_column();
        }
  return std::move(out).build();
}

}  // namespace

AxiomReport check_monoidal_comonad(const Cowarping& w, const ProbeFamily& probes) {
  const MonoidalComonad& g = w.comonad();
  const Field f = g.field();
  auto id = [&](const Space& s) { return LinMap::identity(s, f); };
  const Space K = Space::unit();

  AxiomReport rep;
  rep.suite = "comonad";
  rep.probes = probes.summary();

  LawCheck coassoc("comonad-coassoc"), counit("comonad-counit"), g2assoc("G2-assoc"), g2unit("G2-unit"),
      dmon("delta-monoidal"), emon("eps-monoidal"), vform("v-formula"), vhor("v-horizontal");

  for (const auto& t : y_probe_triples(probes)) {
    const Space &x = t[0], &y = t[1], &z = t[2];
    const std::string p = probes.describe({"X", "Y", "Z"}, {x, y, z});
    if (y == K && z == K) {
      coassoc.compare(p, compose(g.delta(g.G(x)), g.delta(x)), compose(g.G(g.delta(x)), g.delta(x)));
      counit.compare(p, compose(g.eps(g.G(x)), g.delta(x)), id(g.G(x)));
      counit.compare(p, compose(g.G(g.eps(x)), g.delta(x)), id(g.G(x)));
      g2unit.compare(p, compose(g.G2(K, x), tensor_map(g.G0(), id(g.G(x)))), id(g.G(x)));
      g2unit.compare(p, compose(g.G2(x, K), tensor_map(id(g.G(x)), g.G0())), id(g.G(x)));
    }
    if (z == K) {
      dmon.compare(p, compose(g.delta(x * y), g.G2(x, y)),
                   path({tensor_map(g.delta(x), g.delta(y)), g.G2(g.G(x), g.G(y)), g.G(g.G2(x, y))}));
      emon.compare(p, compose(g.eps(x * y), g.G2(x, y)), tensor_map(g.eps(x), g.eps(y)));
      vform.compare(p, w.v(x, y), v_from_constants(g.bialgebra(), x, y));
    }
    g2assoc.compare(p, compose(g.G2(x * y, z), tensor_map(g.G2(x, y), id(g.G(z)))),
                    compose(g.G2(x, y * z), tensor_map(id(g.G(x)), g.G2(y, z))));
    vhor.compare(p, compose(w.v(x * g.G(y), z), tensor_map(w.v(x, y), id(g.G(z)))),
                 path({tensor_map({id(g.G(x)), g.delta(y), g.delta(z)}),
                       tensor_map(id(g.G(x)), g.G2(g.G(y), g.G(z))), g.G2(x, g.G(y) * g.G(z))}));
  }
  dmon.compare("unit", compose(g.delta(K), g.G0()), compose(g.G(g.G0()), g.G0()));
  emon.compare("unit", compose(g.eps(K), g.G0()), id(K));

  for (const auto* l : {&coassoc, &counit, &g2assoc, &g2unit, &dmon, &emon, &vform, &vhor}) {
    rep.laws.push_back(l->result());
  }
  return rep;
}

std::vector<std::array<Space, 3>> y_probe_triples(const ProbeFamily& probes) {
  const auto& gens = probes.generators();
  const std::vector<Space> pool = {probes.unit(), gens[0], gens[1], gens[2]};
  std::vector<std::array<Space, 3>> out;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c) {
        if ((a == b && a != 0) || (a == c && a != 0) || (b == c && b != 0)) continue;
        out.push_back({pool[a], pool[b], pool[c]});
      }
  return out;
}

AxiomReport check_y_axioms(const Cowarping& w, const BraidingOnComonad& y, const ProbeFamily& probes) {
  const MonoidalComonad& g = w.comonad();
  const Field f = g.field();
  const Space& B = g.carrier();
  auto id = [&](const Space& s) { return LinMap::identity(s, f); };
  auto G = [&](const Space& s) { return g.G(s); };

  AxiomReport rep;
  rep.suite = "y-axioms";
  rep.probes = probes.summary();
  LawCheck eq1("eq:1"), eq1a("eq:1a"), eq1b("eq:1b"), funny("eq:funny");

  for (const auto& t : y_probe_triples(probes)) {
    const Space &x = t[0], &yy = t[1], &z = t[2];
    const std::string p = probes.describe({"X", "Y", "Z"}, {x, yy, z});
    eq1.compare(p,
                path({tensor_map(id(G(x)), y.y(yy, z)), tensor_map(y.y(x, z), id(G(yy))),
                      tensor_map(id(G(z)), y.y(x, yy))}),
                path({tensor_map(y.y(x, yy), id(G(z))), tensor_map(id(G(yy)), y.y(x, z)),
                      tensor_map(y.y(yy, z), id(G(x)))}));
    eq1a.compare(p,
                 path({tensor_map(y.y(x, yy), id(G(z))), tensor_map(id(G(yy)), y.y(x, z)),
                       tensor_map(w.v(yy, z), id(G(x)))}),
                 compose(y.y(x, yy * G(z)), tensor_map(id(G(x)), w.v(yy, z))));
    eq1b.compare(p,
                 path({tensor_map(id(G(x)), y.y(yy, z)), tensor_map(y.y(x, z), id(G(yy))),
                       tensor_map(id(G(z)), w.v(x, yy))}),
                 compose(y.y(x * G(yy), z), tensor_map(w.v(x, yy), id(G(z)))));
    funny.compare(p,
                  path({tensor_map(w.v(x, yy), id(G(z))), w.v(x * G(yy), z),
                        tensor_map({id(B), id(x), y.y(yy, z)})}),
                  path({tensor_map(id(G(x)), y.y(yy, z)), tensor_map(w.v(x, z), id(G(yy))),
                        w.v(x * G(z), yy)}));
  }
  for (const auto* l : {&eq1, &eq1a, &eq1b, &funny}) rep.laws.push_back(l->result());
  return rep;
}

}  // namespace skewverify
