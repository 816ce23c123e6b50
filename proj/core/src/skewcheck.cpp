#include "skewverify/skewcheck.hpp"

#include <memory>

namespace skewverify {

namespace {

std::size_t generator_index(const ProbeFamily& probes, const Space& s) {
  const auto& g = probes.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == s) return i;
  }
  return g.size();
}

void push_all(AxiomReport& rep, std::initializer_list<const LawCheck*> checks) {
  for (const auto* c : checks) rep.laws.push_back(c->result());
}

}  // namespace

AxiomReport check_skew_axioms(const SkewMonCat& c, const ProbeFamily& probes) {
  const Space& I = c.unit;
  AxiomReport rep;
  rep.suite = "skew";
  rep.probes = probes.summary();
  LawCheck m1("M1"), m2("M2"), m3("M3"), m4("M4"), m5("M5");

  for (const auto& q : probes.quadruples()) {
    const Space &a = q[0], &b = q[1], &cc = q[2], &d = q[3];
    m1.compare(probes.describe({"A", "B", "C", "D"}, {a, b, cc, d}),
               compose(c.assoc(a, b, c.t(cc, d)), c.assoc(c.t(a, b), cc, d)),
               path({c.tm(c.assoc(a, b, cc), c.id(d)), c.assoc(a, c.t(b, cc), d),
                     c.tm(c.id(a), c.assoc(b, cc, d))}));
  }
  for (const auto& p : probes.pairs()) {
    const Space &a = p[0], &b = p[1];
    const std::string name = probes.describe({"A", "B"}, {a, b});
    m2.compare(name, compose(c.left_unit(c.t(a, b)), c.assoc(I, a, b)), c.tm(c.left_unit(a), c.id(b)));
    m3.compare(name, compose(c.assoc(a, b, I), c.right_unit(c.t(a, b))), c.tm(c.id(a), c.right_unit(b)));
    m4.compare(name,
               path({c.tm(c.right_unit(a), c.id(b)), c.assoc(a, I, b), c.tm(c.id(a), c.left_unit(b))}),
               c.id(c.t(a, b)));
  }
  m5.compare("", compose(c.left_unit(I), c.right_unit(I)), c.id(I));
  push_all(rep, {&m1, &m2, &m3, &m4, &m5});
  return rep;
}

AxiomReport check_naturality(const SkewMonCat& c, const ProbeFamily& probes, std::uint64_t seed) {
  const Space& I = c.unit;
  std::vector<Space> targets;
  for (std::size_t i = 0; i < probes.generators().size(); ++i) {
    targets.push_back(Space::generator("Q" + std::to_string(i + 1), probes.generators()[i].dim()));
  }
  std::uint64_t counter = 0;
  // Three seeded maps out of each generator appearing in a probe.
  auto maps_from = [&](const Space& p) {
    std::vector<LinMap> out;
    std::size_t k = generator_index(probes, p);
    if (k == targets.size()) return out;
    for (int n = 0; n < 3; ++n) out.push_back(random_map(seed * 1000003ULL + counter++, p, targets[k], c.field));
    return out;
  };

  AxiomReport rep;
  rep.suite = "naturality";
  rep.probes = probes.summary();
  rep.probes.push_back("naturality maps per variable:3 seed:" + std::to_string(seed));
  LawCheck na("nat-a"), nl("nat-l"), nr("nat-r"), ns("nat-s");

  for (const auto& t : probes.triples()) {
    const Space &x = t[0], &a = t[1], &b = t[2];
    const std::string p = probes.describe({"A", "B", "C"}, {x, a, b});
    auto idx = c.id(x), ida = c.id(a), idb = c.id(b);
    for (const auto& f : maps_from(x)) {
      const Space& y = f.cod();
      na.compare(p, compose(c.assoc(y, a, b), c.tm(c.tm(f, ida), idb)),
                 compose(c.tm(f, c.tm(ida, idb)), c.assoc(x, a, b)));
      if (c.braided()) {
        ns.compare(p, compose(c.braid(y, a, b), c.tm(c.tm(f, ida), idb)),
                   compose(c.tm(c.tm(f, idb), ida), c.braid(x, a, b)));
      }
    }
    for (const auto& f : maps_from(a)) {
      const Space& y = f.cod();
      na.compare(p, compose(c.assoc(x, y, b), c.tm(c.tm(idx, f), idb)),
                 compose(c.tm(idx, c.tm(f, idb)), c.assoc(x, a, b)));
      if (c.braided()) {
        ns.compare(p, compose(c.braid(x, y, b), c.tm(c.tm(idx, f), idb)),
                   compose(c.tm(c.tm(idx, idb), f), c.braid(x, a, b)));
      }
    }
    for (const auto& f : maps_from(b)) {
      const Space& y = f.cod();
      na.compare(p, compose(c.assoc(x, a, y), c.tm(c.tm(idx, ida), f)),
                 compose(c.tm(idx, c.tm(ida, f)), c.assoc(x, a, b)));
      if (c.braided()) {
        ns.compare(p, compose(c.braid(x, a, y), c.tm(c.tm(idx, ida), f)),
                   compose(c.tm(c.tm(idx, f), ida), c.braid(x, a, b)));
      }
    }
  }
  for (const auto& g : probes.generators()) {
    for (const auto& f : maps_from(g)) {
      const Space& y = f.cod();
      const std::string p = "A=" + probes.name(g);
      nl.compare(p, compose(c.left_unit(y), c.tm(c.id(I), f)), compose(f, c.left_unit(g)));
      nr.compare(p, compose(c.right_unit(y), f), compose(c.tm(f, c.id(I)), c.right_unit(g)));
    }
  }
  push_all(rep, {&na, &nl, &nr});
  if (c.braided()) rep.laws.push_back(ns.result());
  return rep;
}

namespace {

void require_invertible_braiding(const SkewMonCat& c, const ProbeFamily& probes) {
  for (const auto& t : probes.triples()) {
    const Space &x = t[0], &a = t[1], &b = t[2];
    LinMap s = c.braid(x, a, b);
    bool ok = false;
    if (c.braid_inv) {
      LinMap si = c.braid_inv(x, b, a);
      ok = compose(si, s).is_identity() && compose(s, si).is_identity();
    } else {
      ok = s.inverse().has_value();
    }
    if (!ok) {
      throw NotInvertible("braiding component s at " + probes.describe({"X", "A", "B"}, {x, a, b}) +
                          " is not invertible");
    }
  }
}

}  // namespace

AxiomReport check_braiding_axioms(const SkewMonCat& c, const ProbeFamily& probes) {
  if (!c.braided()) throw std::invalid_argument("category has no braiding");
  require_invertible_braiding(c, probes);
  auto s = [&](const Space& x, const Space& a, const Space& b) { return c.braid(x, a, b); };
  auto a = [&](const Space& x, const Space& y, const Space& z) { return c.assoc(x, y, z); };
  auto T = [&](const Space& x, const Space& y) { return c.t(x, y); };
  auto one = [&](const Space& x) { return c.id(x); };

  AxiomReport rep;
  rep.suite = "braiding";
  rep.probes = probes.summary();
  LawCheck s2("S2"), s3a("S3a"), s3b("S3b"), sstar("Sstar"), s1("S1", true);

  for (const auto& q : probes.quadruples()) {
    const Space &X = q[0], &A = q[1], &B = q[2], &C = q[3];
    const std::string p = probes.describe({"X", "A", "B", "C"}, {X, A, B, C});
    s2.compare(p, path({s(T(X, A), B, C), c.tm(s(X, A, C), one(B)), s(T(X, C), A, B)}),
               path({c.tm(s(X, A, B), one(C)), s(T(X, B), A, C), c.tm(s(X, B, C), one(A))}));
    s3a.compare(p, path({c.tm(s(X, A, B), one(C)), s(T(X, B), A, C), c.tm(a(X, B, C), one(A))}),
                compose(s(X, A, T(B, C)), a(T(X, A), B, C)));
    s3b.compare(p, path({s(T(X, A), B, C), c.tm(s(X, A, C), one(B)), a(T(X, C), A, B)}),
                compose(s(X, T(A, B), C), c.tm(a(X, A, B), one(C))));
    sstar.compare(p, path({c.tm(a(X, A, B), one(C)), a(X, T(A, B), C), c.tm(one(X), s(A, B, C))}),
                  path({s(T(X, A), B, C), c.tm(a(X, A, C), one(B)), a(X, T(A, C), B)}));
  }
  for (const auto& t : probes.triples()) {
    const Space &X = t[0], &A = t[1], &B = t[2];
    s1.compare(probes.describe({"X", "A", "B"}, {X, A, B}), compose(s(X, B, A), s(X, A, B)),
               one(T(T(X, A), B)));
  }
  push_all(rep, {&s2, &s3a, &s3b, &sstar, &s1});
  return rep;
}

AxiomReport check_derived_properties(const SkewMonCat& c, const ProbeFamily& probes,
                                     const AxiomReport* braiding) {
  if (!c.braided()) throw std::invalid_argument("category has no braiding");
  const Space& I = c.unit;
  auto s = [&](const Space& x, const Space& a, const Space& b) { return c.braid(x, a, b); };
  auto a = [&](const Space& x, const Space& y, const Space& z) { return c.assoc(x, y, z); };
  auto l = [&](const Space& x) { return c.left_unit(x); };
  auto r = [&](const Space& x) { return c.right_unit(x); };
  auto T = [&](const Space& x, const Space& y) { return c.t(x, y); };
  auto one = [&](const Space& x) { return c.id(x); };

  AxiomReport rep;
  rep.suite = "derived";
  rep.probes = probes.summary();
  LawCheck lsr("Lsr"), psr("Psr"), pslr("Pslr"), psar1("Psar1"), psr1a("Psr1a"), psr1b("Psr1b");

  for (const auto& t : probes.triples()) {
    const Space &W = t[0], &A = t[1], &B = t[2];
    const std::string p = probes.describe({"X", "A", "B"}, {W, A, B});
    lsr.compare(p, path({r(T(T(W, B), A)), s(T(W, B), A, I), c.tm(a(W, B, I), one(A))}),
                c.tm(c.tm(one(W), r(B)), one(A)));
    psar1.compare(p, path({c.tm(r(T(W, A)), one(B)), a(T(W, A), I, B), s(W, A, T(I, B))}),
                  path({s(W, A, B), c.tm(c.tm(r(W), one(B)), one(A)), c.tm(a(W, I, B), one(A))}));
    psr1b.compare(p,
                  path({c.tm(c.tm(r(W), one(A)), one(B)), c.tm(a(W, I, A), one(B)), s(W, T(I, A), B)}),
                  path({s(W, A, B), c.tm(r(T(W, B)), one(A)), a(T(W, B), I, A)}));
  }
  for (const auto& pr : probes.pairs()) {
    const Space &W = pr[0], &A = pr[1];
    const std::string p = probes.describe({"X", "A"}, {W, A});
    psr.compare(p, compose(s(W, A, I), r(T(W, A))), c.tm(r(W), one(A)));
    pslr.compare(p, path({r(T(W, A)), s(W, A, I), a(W, I, A), c.tm(one(W), l(A))}), one(T(W, A)));
    psr1a.compare(p, compose(s(W, I, A), c.tm(r(W), one(A))), r(T(W, A)));
  }

  std::vector<LawResult> results;
  for (const auto* ch : {&lsr, &psr, &pslr, &psar1}) {
    LawResult res = ch->result();
    if (braiding && braiding->find("S3a") && braiding->passed("S3a") && res.status == LawStatus::fail) {
      res.status = LawStatus::inconsistent;
    }
    results.push_back(res);
  }
  for (const auto* ch : {&psr1a, &psr1b}) {
    LawResult res = ch->result();
    if (braiding && braiding->find("S3b") && braiding->passed("S3b") && res.status == LawStatus::fail) {
      res.status = LawStatus::inconsistent;
    }
    results.push_back(res);
  }
  rep.laws = std::move(results);
  return rep;
}

SkewMonCat inverse_braiding(const SkewMonCat& c) {
  if (!c.braided()) throw std::invalid_argument("category has no braiding");
  SkewMonCat out = c;
  out.name = c.name + " (inverse braiding)";
  if (c.braid_inv) {
    out.braid = c.braid_inv;
  } else {
    auto s = c.braid;
    out.braid = [s](const Space& x, const Space& a, const Space& b) {
      auto inv = s(x, b, a).inverse();
      if (!inv) throw NotInvertible("braiding component is singular");
      return *inv;
    };
  }
  out.braid_inv = c.braid;
  return out;
}

SkewMonCat mutate_braiding(const SkewMonCat& c, const Space& x, const Space& a, const Space& b,
                           const Scalar& factor) {
  if (!c.braided()) throw std::invalid_argument("category has no braiding");
  SkewMonCat out = c;
  out.name = c.name + " (mutated braiding)";
  auto s = c.braid;
  out.braid = [s, x, a, b, factor](const Space& X, const Space& A, const Space& B) {
    LinMap m = s(X, A, B);
    return (X == x && A == a && B == b) ? m.scaled(factor) : m;
  };
  if (c.braid_inv) {
    auto si = c.braid_inv;
    const Scalar inv = factor.inverse();
    out.braid_inv = [si, x, a, b, inv](const Space& X, const Space& A, const Space& B) {
      LinMap m = si(X, A, B);
      return (X == x && B == a && A == b) ? m.scaled(inv) : m;
    };
  }
  return out;
}

SkewMonCat scale_braiding(const SkewMonCat& c, const Scalar& factor) {
  if (!c.braided()) throw std::invalid_argument("category has no braiding");
  SkewMonCat out = c;
  auto s = c.braid;
  out.braid = [s, factor](const Space& X, const Space& A, const Space& B) { return s(X, A, B).scaled(factor); };
  if (c.braid_inv) {
    auto si = c.braid_inv;
    const Scalar inv = factor.inverse();
    out.braid_inv = [si, inv](const Space& X, const Space& A, const Space& B) { return si(X, A, B).scaled(inv); };
  }
  return out;
}

ClassicalBraiding classical_braiding_from_s(const SkewMonCat& c, const ProbeFamily& probes) {
  if (!c.braided()) throw std::invalid_argument("category has no braiding");
  const Space& I = c.unit;
  std::vector<Space> objects = probes.generators();
  objects.push_back(I);
  for (const auto& o : objects) {
    if (!c.left_unit(o).inverse()) {
      throw NotLeftNormal("left unit at " + probes.name(o) + " is not invertible");
    }
  }
  auto cat = std::make_shared<const SkewMonCat>(c);
  ClassicalBraiding out;
  out.c = [cat](const Space& b, const Space& cc) {
    const SkewMonCat& k = *cat;
    auto lb = k.tm(k.left_unit(b), k.id(cc)).inverse();
    if (!lb) throw NotLeftNormal("left unit is not invertible");
    return path({*lb, k.braid(k.unit, b, cc), k.tm(k.left_unit(cc), k.id(b))});
  };
  auto br = out.c;
  auto a = [&](const Space& x, const Space& y, const Space& z) { return c.assoc(x, y, z); };
  auto T = [&](const Space& x, const Space& y) { return c.t(x, y); };
  auto one = [&](const Space& x) { return c.id(x); };

  AxiomReport& rep = out.report;
  rep.suite = "classical";
  rep.probes = probes.summary();
  LawCheck h1("hexagon-1"), h2("hexagon-2"), s1("S1", true), ainv("a-invertible"), rinv("r-invertible");

  for (const auto& t : probes.triples()) {
    const Space &A = t[0], &B = t[1], &C = t[2];
    const std::string p = probes.describe({"A", "B", "C"}, {A, B, C});
    auto ai = a(A, B, C).inverse();
    if (!ai) ainv.fail(p, "associator is singular");
    h1.compare(p, path({a(A, B, C), br(A, T(B, C)), a(B, C, A)}),
               path({c.tm(br(A, B), one(C)), a(B, A, C), c.tm(one(B), br(A, C))}));
    auto i1 = a(A, B, C).inverse(), i2 = a(C, A, B).inverse(), i3 = a(A, C, B).inverse();
    if (i1 && i2 && i3) {
      h2.compare(p, path({*i1, br(T(A, B), C), *i2}), path({c.tm(one(A), br(B, C)), *i3, c.tm(br(A, C), one(B))}));
    } else {
      h2.fail(p, "associator is singular");
    }
    s1.compare(p, compose(br(B, A), br(A, B)), one(T(A, B)));
  }
  for (const auto& o : objects) {
    if (!c.right_unit(o).inverse()) rinv.fail("A=" + probes.name(o), "right unit is singular");
  }
  push_all(rep, {&h1, &h2, &s1, &ainv, &rinv});
  return out;
}

}  // namespace skewverify
