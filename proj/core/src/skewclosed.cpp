#include "skewverify/skewclosed.hpp"

namespace skewverify {

ClosedStructure::ClosedStructure(SkewMonCat c) : c_(std::move(c)) {
  const Space x = Space::generator("closed_test", 2);
  for (const Space& a : {c_.unit, x}) {
    if (!(c_.tensor(x, a) == x * action(a))) {
      throw ShapeError("tensor is not a right action: " + c_.tensor(x, a).to_string() + " vs " +
                       (x * action(a)).to_string());
    }
  }
}

Space ClosedStructure::action(const Space& a) const { return c_.tensor(Space::unit(), a); }

Space ClosedStructure::hom(const Space& a, const Space& y) const { return Space::hom(action(a), y); }

LinMap ClosedStructure::hom_map(const LinMap& f, const LinMap& g) const {
  return skewverify::hom_map(c_.tm(c_.id(Space::unit()), f), g);
}

LinMap ClosedStructure::hom_post(const Space& a, const LinMap& g) const { return hom_map(c_.id(a), g); }

LinMap ClosedStructure::transpose(const LinMap& f, const Space& a) const { return curry(f, action(a)); }

LinMap ClosedStructure::untranspose(const LinMap& g) const { return uncurry(g); }

LinMap ClosedStructure::counit(const Space& a, const Space& y) const {
  return evaluation(action(a), y, c_.field);
}

LinMap ClosedStructure::unit(const Space& x, const Space& a) const {
  return transpose(c_.id(c_.tensor(x, a)), a);
}

LinMap ClosedStructure::L(const Space& a, const Space& b, const Space& c) const {
  const Space bc = hom(b, c), ab = hom(a, b);
  LinMap f = path({c_.assoc(bc, ab, a), c_.tm(c_.id(bc), counit(a, b)), counit(b, c)});
  return transpose(transpose(f, a), ab);
}

LinMap ClosedStructure::i(const Space& a) const {
  const Space& I = c_.unit;
  return compose(counit(I, a), c_.right_unit(hom(I, a)));
}

LinMap ClosedStructure::j(const Space& a) const { return transpose(c_.left_unit(a), a); }

LinMap ClosedStructure::t(const Space& a, const Space& b, const Space& y) const {
  const Space h = hom(c_.tensor(a, b), y);
  LinMap f = compose(counit(c_.tensor(a, b), y), c_.assoc(h, a, b));
  return transpose(transpose(f, b), a);
}

LinMap ClosedStructure::t_from_L(const Space& a, const Space& b, const Space& y) const {
  return compose(hom_map(unit(a, b), c_.id(hom(b, y))), L(b, c_.tensor(a, b), y));
}

LinMap ClosedStructure::L_from_t(const Space& a, const Space& b, const Space& c) const {
  return compose(t(hom(a, b), a, c), hom_map(counit(a, b), c_.id(c)));
}

ClosedBraiding mate_s_to_sprime(const ClosedStructure& cs) {
  return [cs](const Space& a, const Space& b, const Space& y) {
    const SkewMonCat& c = cs.category();
    if (!c.braided()) throw ShapeError("mate of a missing braiding");
    const Space ay = cs.hom(a, y);
    const Space x = cs.hom(b, ay);
    LinMap ev2 = compose(cs.counit(a, y), c.tm(cs.counit(b, ay), c.id(a)));
    return cs.transpose(cs.transpose(compose(ev2, c.braid(x, a, b)), b), a);
  };
}

SkewMonCat::Component3 mate_sprime_to_s(const ClosedStructure& cs, ClosedBraiding sprime) {
  return [cs, sprime](const Space& x, const Space& a, const Space& b) {
    const SkewMonCat& c = cs.category();
    const Space z = c.t(x, b, a);
    LinMap u2 = cs.transpose(cs.transpose(c.id(z), a), b);
    LinMap s = cs.untranspose(cs.untranspose(compose(sprime(a, b, z), u2)));
    return s.relabel(c.t(x, a, b), z);
  };
}

AxiomReport check_closed_structure(const ClosedStructure& cs, const ProbeFamily& probes, std::uint64_t seed) {
  const SkewMonCat& c = cs.category();
  AxiomReport rep;
  rep.suite = "closed-structure";
  rep.probes = probes.summary();
  LawCheck adj1("adjunction-1"), adj2("adjunction-2"), tcur("t-curry"), tl("t-from-L"), lt("L-from-t"),
      msq("mate-square"), mrt("mate-roundtrip");
  std::uint64_t counter = 0;

  for (const auto& p : probes.pairs()) {
    const Space &x = p[0], &a = p[1];
    const std::string name = probes.describe({"X", "A"}, {x, a});
    adj1.compare(name, compose(cs.counit(a, c.t(x, a)), c.tm(cs.unit(x, a), c.id(a))), c.id(c.t(x, a)));
    adj2.compare(name, compose(cs.hom_post(a, cs.counit(a, x)), cs.unit(cs.hom(a, x), a)), c.id(cs.hom(a, x)));
  }

  ClosedBraiding sprime;
  SkewMonCat::Component3 s_back;
  if (c.braided()) {
    sprime = mate_s_to_sprime(cs);
    s_back = mate_sprime_to_s(cs, sprime);
  }
  for (const auto& tr : probes.triples()) {
    const Space &x = tr[0], &a = tr[1], &b = tr[2];
    const std::string name = probes.describe({"X", "A", "B"}, {x, a, b});
    LinMap g = random_map(seed * 1000003ULL + counter++, c.t(x, c.t(a, b)), x, c.field);
    tcur.compare(name, compose(cs.t(a, b, x), cs.transpose(g, c.t(a, b))),
                 cs.transpose(cs.transpose(compose(g, c.assoc(x, a, b)), b), a));
    tl.compare(name, cs.t(a, b, x), cs.t_from_L(a, b, x));
    lt.compare(name, cs.L(a, b, x), cs.L_from_t(a, b, x));
    if (c.braided()) {
      LinMap h = random_map(seed * 1000003ULL + counter++, c.t(x, b, a), x, c.field);
      msq.compare(name, cs.transpose(cs.transpose(compose(h, c.braid(x, a, b)), b), a),
                  compose(sprime(a, b, x), cs.transpose(cs.transpose(h, a), b)));
      mrt.compare(name, s_back(x, a, b), c.braid(x, a, b));
    }
  }
  for (const LawCheck* l : {&adj1, &adj2, &tcur, &tl, &lt}) rep.laws.push_back(l->result());
  if (c.braided()) {
    rep.laws.push_back(msq.result());
    rep.laws.push_back(mrt.result());
  }
  return rep;
}

AxiomReport check_closed_braiding_axioms(const ClosedStructure& cs, const ClosedBraiding& sprime,
                                         const ProbeFamily& probes) {
  const SkewMonCat& c = cs.category();
  auto H = [&](const Space& a, const Space& y) { return cs.hom(a, y); };
  auto post = [&](const Space& a, const LinMap& g) { return cs.hom_post(a, g); };
  // s′ with its source named: [outer,[inner,Y]] → [inner,[outer,Y]]
  auto sp = [&](const Space& outer, const Space& inner, const Space& y) { return sprime(inner, outer, y); };

  AxiomReport rep;
  rep.suite = "closed-braiding";
  rep.probes = probes.summary();
  LawCheck s2("bourkeS2"), s3("bourkeS3"), s3b("bourkeS3b"), sstar("bourkeSstar"), s1("bourkeS1", true),
      spr("s'r"), red("cor:red");

  for (const auto& q : probes.quadruples()) {
    const Space &y = q[0], &a = q[1], &b = q[2], &cc = q[3];
    const std::string name = probes.describe({"Y", "A", "B", "C"}, {y, a, b, cc});
    s2.compare(name,
               path({sp(cc, b, H(a, y)), post(b, sp(cc, a, y)), sp(b, a, H(cc, y))}),
               path({post(cc, sp(b, a, y)), sp(cc, a, H(b, y)), post(a, sp(cc, b, y))}));
    s3.compare(name, compose(post(a, cs.L(cc, b, y)), sp(b, a, y)),
               path({cs.L(cc, b, H(a, y)), post(H(cc, b), sp(cc, a, y)), sp(H(cc, b), a, H(cc, y))}));
    s3b.compare(name, compose(cs.L(cc, a, H(b, y)), sp(b, a, y)),
                path({post(b, cs.L(cc, a, y)), sp(b, H(cc, a), H(cc, y)), post(H(cc, a), sp(b, cc, y))}));
    // bourkeSstar reads the quadruple as (Y, X, B, C)
    const Space& x = a;
    sstar.compare(probes.describe({"Y", "X", "B", "C"}, {y, x, b, cc}),
                  path({cs.L(cc, x, y), cs.L(b, H(cc, x), H(cc, y)), post(H(b, H(cc, x)), sp(b, cc, y))}),
                  path({cs.L(b, x, y), cs.L(cc, H(b, x), H(b, y)),
                        cs.hom_map(sp(b, cc, x), c.id(H(cc, H(b, y))))}));
  }
  for (const auto& tr : probes.triples()) {
    const Space &y = tr[0], &a = tr[1], &b = tr[2];
    s1.compare(probes.describe({"Y", "A", "B"}, {y, a, b}), compose(sp(a, b, y), sp(b, a, y)), c.id(H(b, H(a, y))));
  }
  const Space& I = c.unit;
  for (const auto& p : probes.pairs()) {
    const Space &cc = p[0], &b = p[1];
    const std::string name = probes.describe({"C", "B"}, {cc, b});
    spr.compare(name, compose(post(b, cs.i(cc)), sp(I, b, cc)), cs.i(H(b, cc)));
    red.compare(name,
                path({cs.L(b, b, cc), cs.hom_map(cs.j(b), c.id(H(b, cc))), sp(I, b, cc), post(b, cs.i(cc))}),
                c.id(H(b, cc)));
  }
  for (const LawCheck* l : {&s2, &s3, &s3b, &sstar, &s1, &spr, &red}) rep.laws.push_back(l->result());
  return rep;
}

}  // namespace skewverify
