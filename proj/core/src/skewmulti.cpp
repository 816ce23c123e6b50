#include "skewverify/skewmulti.hpp"

#include <random>

namespace skewverify {

SkewMulticategory::SkewMulticategory(SkewMonCat c) : c_(std::move(c)) {}

Space SkewMulticategory::bracket(const std::vector<Space>& sources, Tightness t) const {
  if (t == Tightness::tight) {
    if (sources.empty()) throw ShapeError("tight multimaps are not nullary");
    Space acc = sources[0];
    for (std::size_t k = 1; k < sources.size(); ++k) acc = c_.t(acc, sources[k]);
    return acc;
  }
  Space acc = c_.unit;
  for (const auto& s : sources) acc = c_.t(acc, s);
  return acc;
}

Multimap SkewMulticategory::make(std::vector<Space> sources, Tightness t, LinMap payload) const {
  const Space dom = bracket(sources, t);
  if (!(payload.dom() == dom)) {
    throw ShapeError("multimap payload starts at " + payload.dom().to_string() + ", expected " + dom.to_string());
  }
  Space target = payload.cod();
  return Multimap{std::move(sources), std::move(target), t, std::move(payload)};
}

Multimap SkewMulticategory::identity(const Space& a) const { return make({a}, Tightness::tight, c_.id(a)); }

Multimap SkewMulticategory::universal(const Space& a, const Space& b) const {
  return make({a, b}, Tightness::tight, c_.id(c_.t(a, b)));
}

LinMap SkewMulticategory::lift(const LinMap& phi, const std::vector<Space>& rest) const {
  LinMap out = phi;
  for (const auto& r : rest) out = c_.tm(out, c_.id(r));
  return out;
}

// ((X a₁)…aₖ) → X(((I a₁)…)aₖ), from r_X and associators
LinMap SkewMulticategory::pad_unit(const Space& x, const std::vector<Space>& as) const {
  LinMap nu = c_.right_unit(x);
  Space inner = c_.unit;
  for (const auto& a : as) {
    nu = compose(c_.assoc(x, inner, a), c_.tm(nu, c_.id(a)));
    inner = c_.t(inner, a);
  }
  return nu;
}

// ((X a₁)…aₖ) → X((a₁…)aₖ), k ≥ 1
LinMap SkewMulticategory::split_prefix(const Space& x, const std::vector<Space>& as) const {
  LinMap mu = c_.id(c_.t(x, as.at(0)));
  Space inner = as[0];
  for (std::size_t k = 1; k < as.size(); ++k) {
    mu = compose(c_.assoc(x, inner, as[k]), c_.tm(mu, c_.id(as[k])));
    inner = c_.t(inner, as[k]);
  }
  return mu;
}

Multimap SkewMulticategory::j(const Multimap& f) const {
  if (!f.tight()) throw InvalidSubstitution("j applies to tight multimaps");
  std::vector<Space> rest(f.sources.begin() + 1, f.sources.end());
  return make(f.sources, Tightness::loose, compose(f.payload, lift(c_.left_unit(f.sources[0]), rest)));
}

Multimap SkewMulticategory::substitute(const Multimap& f, const std::vector<Multimap>& gs) const {
  const std::size_t n = f.arity();
  if (gs.size() != n) {
    throw InvalidSubstitution(std::to_string(gs.size()) + " multimaps into arity " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(gs[i].target == f.sources[i])) {
      throw InvalidSubstitution("position " + std::to_string(i + 1) + " expects " + f.sources[i].to_string() +
                                ", got " + gs[i].target.to_string());
    }
    if (i > 0 && gs[i].tight()) {
      throw InvalidSubstitution("position " + std::to_string(i + 1) + " takes a loose multimap");
    }
  }
  if (n == 0) return f;

  const Multimap& g1 = gs[0];
  std::vector<Space> sources = g1.sources;
  const Space s1 = bracket(g1.sources, g1.tightness);
  // φ: bracketed result source → T,  ψ: T → source of f
  LinMap phi = c_.id(s1), psi = g1.payload;
  Space tt = s1;
  if (!f.tight()) {
    phi = g1.tight() ? split_prefix(c_.unit, g1.sources) : pad_unit(c_.unit, g1.sources);
    psi = c_.tm(c_.id(c_.unit), g1.payload);
    tt = c_.t(c_.unit, s1);
  }
  for (std::size_t i = 1; i < n; ++i) {
    const Multimap& g = gs[i];
    phi = compose(pad_unit(tt, g.sources), lift(phi, g.sources));
    psi = c_.tm(psi, g.payload);
    tt = c_.t(tt, bracket(g.sources, Tightness::loose));
    sources.insert(sources.end(), g.sources.begin(), g.sources.end());
  }
  const Tightness t = f.tight() && g1.tight() ? Tightness::tight : Tightness::loose;
  return make(std::move(sources), t, compose(f.payload, compose(psi, phi)));
}

Multimap SkewMulticategory::substitute_at(const Multimap& f, std::size_t i, const Multimap& g) const {
  std::vector<Multimap> gs;
  for (std::size_t k = 1; k <= f.arity(); ++k) {
    if (k == i) {
      gs.push_back(g);
    } else {
      const Multimap id = identity(f.sources[k - 1]);
      gs.push_back(k == 1 ? id : j(id));
    }
  }
  return substitute(f, gs);
}

LinMap SkewMulticategory::braid_inverse(const Space& x, const Space& a, const Space& b) const {
  if (c_.braid_inv) return c_.braid_inv(x, a, b);
  auto inv = c_.braid(x, b, a).inverse();
  if (!inv) throw NotInvertible("s is singular at " + c_.t(x, b, a).to_string());
  return *inv;
}

Multimap SkewMulticategory::act(const BraidWord& w, const Multimap& f) const {
  if (w.strands() != f.arity()) {
    throw StrandMismatch("B" + std::to_string(w.strands()) + " on arity " + std::to_string(f.arity()));
  }
  if (w.empty()) return f;
  if (!c_.braided()) throw ShapeError("braid action on an unbraided category");
  Multimap out = f;
  for (const auto& l : w.letters()) {
    const std::size_t i = l.index;
    if (out.tight() && i == 1) throw TightSigmaOne("σ1 does not act on tight multimaps");
    const std::vector<Space> prefix(out.sources.begin(), out.sources.begin() + static_cast<long>(i - 1));
    const std::vector<Space> rest(out.sources.begin() + static_cast<long>(i + 1), out.sources.end());
    const Space x = bracket(prefix, out.tightness);
    const Space &a = out.sources[i - 1], &b = out.sources[i];
    // both maps run (Xb)a → (Xa)b
    LinMap m = l.sign > 0 ? c_.braid(x, b, a) : braid_inverse(x, b, a);
    out.payload = compose(out.payload, lift(m, rest));
    std::swap(out.sources[i - 1], out.sources[i]);
  }
  return make(out.sources, out.tightness, out.payload);
}

Multimap random_multimap(const SkewMulticategory& m, std::uint64_t seed, std::vector<Space> sources,
                         const Space& target, Tightness t) {
  const Space dom = m.bracket(sources, t);
  return m.make(std::move(sources), t, random_map(seed, dom, target, m.category().field));
}

namespace {

class Sampler {
 public:
  Sampler(const SkewMulticategory& m, const ProbeFamily& probes, std::uint64_t seed)
      : m_(m), probes_(probes), rng_(seed), seed_(seed) {
    pool_ = probes.generators();
    pool_.push_back(probes.unit());
  }

  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
  bool coin() { return (rng_() & 1U) != 0; }
  const Space& object() { return pool_[below(pool_.size())]; }
  std::vector<Space> objects(std::size_t n) {
    std::vector<Space> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(object());
    return out;
  }
  /// Distinct generators where possible, so swapped sources stay visible.
  std::vector<Space> spread(std::size_t n) {
    std::vector<Space> out;
    const auto& gens = probes_.generators();
    for (std::size_t k = 0; k < n; ++k) out.push_back(gens[k % gens.size()]);
    return out;
  }
  Multimap map(std::vector<Space> sources, const Space& target, Tightness t) {
    return random_multimap(m_, seed_ * 7919ULL + counter_++, std::move(sources), target, t);
  }
  BraidWord word(std::size_t strands, std::size_t max_len, bool b1) {
    std::vector<int> ls;
    const std::size_t lo = b1 ? 2 : 1;
    if (strands > lo) {
      const std::size_t len = below(max_len + 1);
      for (std::size_t k = 0; k < len; ++k) {
        const int g = static_cast<int>(lo + below(strands - lo));
        ls.push_back(coin() ? g : -g);
      }
    }
    return b1 ? b1_word(ls, strands) : BraidWord::from_signed(strands, ls);
  }

  std::string describe(const Multimap& f) const {
    std::string out = f.tight() ? "tight(" : "loose(";
    for (std::size_t k = 0; k < f.sources.size(); ++k) out += (k ? "," : "") + probes_.name(f.sources[k]);
    return out + ";" + probes_.name(f.target) + ")";
  }

 private:
  const SkewMulticategory& m_;
  const ProbeFamily& probes_;
  std::mt19937_64 rng_;
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  std::vector<Space> pool_;
};

Tightness tightness_of(bool tight) { return tight ? Tightness::tight : Tightness::loose; }

bool same(LawCheck& law, const std::string& probe, const Multimap& lhs, const Multimap& rhs) {
  if (lhs.sources != rhs.sources || lhs.tightness != rhs.tightness) {
    law.fail(probe, "source lists or tightness differ");
    return false;
  }
  return law.compare(probe, lhs.payload, rhs.payload);
}

}  // namespace

AxiomReport check_multicategory(const SkewMulticategory& m, const ProbeFamily& probes, std::uint64_t seed) {
  AxiomReport rep;
  rep.suite = "multicategory";
  rep.probes = probes.summary();
  LawCheck ident("identity"), assoc("assoc"), tight("tightness");
  Sampler sm(m, probes, seed);

  for (int trial = 0; trial < 16; ++trial) {
    const bool f_tight = trial % 2 == 0;
    const std::size_t n = f_tight ? 1 + sm.below(3) : sm.below(4);
    Multimap f = sm.map(sm.objects(n), sm.object(), tightness_of(f_tight));
    const std::string fname = sm.describe(f);

    // units on both sides
    std::vector<Multimap> ids;
    for (std::size_t k = 0; k < n; ++k) {
      const Multimap id = m.identity(f.sources[k]);
      ids.push_back(k == 0 ? id : m.j(id));
    }
    ident.compare(fname + " f(1,…,1)", m.substitute(f, ids).payload, f.payload);
    if (n > 0 && !f_tight) {
      ids[0] = m.j(ids[0]);
      ident.compare(fname + " f(j1,…,1)", m.substitute(f, ids).payload, f.payload);
    }
    ident.compare(fname + " 1(f)", m.substitute(m.identity(f.target), {f}).payload, f.payload);
    if (!f_tight) {
      ident.compare(fname + " j1(f)", m.substitute(m.j(m.identity(f.target)), {f}).payload, f.payload);
    }

    // gᵢ then hₖ, total arity ≤ 3
    std::vector<Multimap> gs;
    std::vector<std::size_t> garity;
    std::size_t budget = 3;
    for (std::size_t i = 0; i < n; ++i) {
      const bool g_tight = i == 0 && sm.coin() && budget > 0;
      std::size_t a = std::min(budget, sm.below(3));
      if (g_tight && a == 0) a = 1;
      budget -= a;
      gs.push_back(sm.map(sm.objects(a), f.sources[i], tightness_of(g_tight)));
    }
    Multimap fg = m.substitute(f, gs);
    const std::string gname = fname + " ∘ " + std::to_string(n) + " maps";
    if (n > 0 && fg.tight() != (f.tight() && gs[0].tight())) tight.fail(gname, "tightness of f(g) is wrong");
    if (n > 1) {
      auto bad = gs;
      bad[1] = sm.map({f.sources[1]}, f.sources[1], Tightness::tight);
      try {
        (void)m.substitute(f, bad);
        tight.fail(gname, "a tight multimap was accepted off the first position");
      } catch (const InvalidSubstitution&) {
      }
    }

    std::vector<Multimap> hs;
    std::vector<std::vector<Multimap>> blocks(n);
    {
      std::size_t pos = 0;
      std::size_t hb = 2;
      for (std::size_t i = 0; i < n; ++i) {
        for (const auto& src : gs[i].sources) {
          const bool h_tight = pos == 0 && sm.coin();
          std::size_t a = std::min(hb, sm.below(2));
          if (h_tight && a == 0) a = 1;
          hb -= a;
          hs.push_back(sm.map(sm.objects(a), src, tightness_of(h_tight)));
          blocks[i].push_back(hs.back());
          ++pos;
        }
      }
    }
    std::vector<Multimap> inner;
    for (std::size_t i = 0; i < n; ++i) inner.push_back(m.substitute(gs[i], blocks[i]));
    same(assoc, gname, m.substitute(fg, hs), m.substitute(f, inner));
  }
  for (const LawCheck* l : {&ident, &assoc, &tight}) rep.laws.push_back(l->result());
  return rep;
}

AxiomReport check_braided_multicat(const SkewMulticategory& m, const ProbeFamily& probes, std::uint64_t seed) {
  AxiomReport rep;
  rep.suite = "braided-multicategory";
  rep.probes = probes.summary();
  LawCheck act_eq("action-eq"), eq_loose("equivariance-loose"), eq_tight("equivariance-tight"),
      closure("tight-closure"), sym("symmetry-cond", true);
  Sampler sm(m, probes, seed);
  auto W = [](std::size_t n, std::vector<int> ls) { return BraidWord::from_signed(n, std::move(ls)); };
  const Space target = probes.generators()[0];

  // relations of Bₙ act trivially
  struct Relation {
    Tightness t;
    std::size_t n;
    std::vector<int> u, v;
  };
  const std::vector<Relation> relations = {
      {Tightness::loose, 3, {1, 2, 1}, {2, 1, 2}},    {Tightness::loose, 3, {-1, -2, -1}, {-2, -1, -2}},
      {Tightness::loose, 4, {1, 3}, {3, 1}},          {Tightness::loose, 4, {1, -3}, {-3, 1}},
      {Tightness::tight, 4, {2, 3, 2}, {3, 2, 3}},    {Tightness::tight, 4, {-2, -3, -2}, {-3, -2, -3}},
      {Tightness::tight, 5, {2, 4}, {4, 2}},          {Tightness::loose, 4, {2, 3, 2}, {3, 2, 3}},
  };
  for (const auto& r : relations) {
    Multimap f = sm.map(sm.spread(r.n), target, r.t);
    act_eq.compare(sm.describe(f) + " " + W(r.n, r.u).to_string() + " ~ " + W(r.n, r.v).to_string(),
                   m.act(W(r.n, r.u), f).payload, m.act(W(r.n, r.v), f).payload);
  }
  for (int trial = 0; trial < 6; ++trial) {
    const bool t = trial % 2 == 0;
    const std::size_t n = 3;
    Multimap f = sm.map(sm.spread(n), target, tightness_of(t));
    const std::string name = sm.describe(f);
    for (std::size_t i = t ? 2 : 1; i < n; ++i) {
      const int g = static_cast<int>(i);
      same(act_eq, name + " σ" + std::to_string(i) + " then inverse", m.act(W(n, {-g}), m.act(W(n, {g}), f)), f);
      same(act_eq, name + " inverse then σ" + std::to_string(i), m.act(W(n, {g}), m.act(W(n, {-g}), f)), f);
    }
    auto u = sm.word(n, 3, t), v = sm.word(n, 3, t);
    same(act_eq, name + " (f" + u.to_string() + ")" + v.to_string(), m.act(v, m.act(u, f)), m.act(u * v, f));
    same(act_eq, name + " identity", m.act(BraidWord(n), f), f);
  }

  auto equivariance = [&](LawCheck& law, bool tight_f) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 1 + sm.below(3);
      Multimap f = sm.map(sm.objects(n), target, tightness_of(tight_f));
      BraidWord s = sm.word(n, 3, tight_f);
      std::vector<Multimap> gs;
      std::vector<BraidWord> ts;
      std::size_t budget = 4;
      for (std::size_t i = 0; i < n; ++i) {
        const bool g_tight = tight_f && i == 0;
        std::size_t a = std::min(budget, sm.below(3));
        if (g_tight && a == 0) a = 1;
        budget -= a;
        gs.push_back(sm.map(sm.objects(a), f.sources[i], tightness_of(g_tight)));
        ts.push_back(sm.word(a, 2, g_tight));
      }
      const Permutation back = braid_to_perm(s).inverse();
      std::vector<Multimap> hs;
      for (std::size_t q = 1; q <= n; ++q) {
        const std::size_t i = back(q) - 1;
        hs.push_back(m.act(ts[i], gs[i]));
      }
      std::string name = sm.describe(f) + " s=" + s.to_string();
      for (const auto& t : ts) name += " t=" + t.to_string();
      same(law, name, m.act(operad_subst(s, ts), m.substitute(f, gs)), m.substitute(m.act(s, f), hs));
    }
  };
  equivariance(eq_loose, false);
  equivariance(eq_tight, true);

  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 2 + sm.below(3);
    Multimap f = sm.map(sm.spread(n), target, Tightness::tight);
    BraidWord w = sm.word(n, 3, true);
    const std::string name = sm.describe(f) + " " + w.to_string();
    Multimap fw = m.act(w, f);
    if (!fw.tight()) closure.fail(name, "action left the tight maps");
    same(closure, name + " j(fw) = j(f)w", m.j(fw), m.act(w, m.j(f)));
    try {
      (void)m.act(W(n, {1}), f);
      closure.fail(name, "σ1 acted on a tight multimap");
    } catch (const TightSigmaOne&) {
    }
  }

  // same permutation, same action
  struct SymPair {
    Tightness t;
    std::size_t n;
    std::vector<int> u, v;
  };
  const std::vector<SymPair> pairs = {
      {Tightness::loose, 2, {1, 1}, {}},       {Tightness::tight, 3, {2, 2}, {}},
      {Tightness::loose, 3, {1, 2}, {-1, -2}}, {Tightness::tight, 4, {2, 3}, {-2, -3}},
  };
  for (const auto& p : pairs) {
    Multimap f = sm.map(sm.spread(p.n), target, p.t);
    sym.compare(sm.describe(f) + " " + W(p.n, p.u).to_string() + " ~ " + W(p.n, p.v).to_string(),
                m.act(W(p.n, p.u), f).payload, m.act(W(p.n, p.v), f).payload);
  }

  for (const LawCheck* l : {&act_eq, &eq_loose, &eq_tight, &closure, &sym}) rep.laws.push_back(l->result());
  return rep;
}

namespace {

// e_{AB,C} ∘₁ e_{A,B} with sources (A, B, C)
Multimap universal_ternary(const SkewMulticategory& m, const Space& a, const Space& b, const Space& c) {
  const SkewMonCat& cat = m.category();
  return m.substitute(m.universal(cat.t(a, b), c), {m.universal(a, b), m.j(m.identity(c))});
}

}  // namespace

ExtractedBraiding extract_braiding(const SkewMulticategory& m, const ProbeFamily& probes) {
  const SkewMonCat& c = m.category();
  if (!c.braided()) throw ShapeError("extraction needs a braided multicategory");
  const BraidWord s2 = BraidWord::generator(3, 2), s2inv = BraidWord::generator(3, 2, -1);

  ExtractedBraiding out{c, {}};
  out.category.name = c.name + " (from multimaps)";
  out.category.braid = [m, s2](const Space& x, const Space& a, const Space& b) {
    return m.act(s2, universal_ternary(m, x, b, a)).payload;
  };
  out.category.braid_inv = [m, s2inv](const Space& x, const Space& a, const Space& b) {
    return m.act(s2inv, universal_ternary(m, x, b, a)).payload;
  };

  AxiomReport& rep = out.report;
  rep.suite = "braiding-extraction";
  rep.probes = probes.summary();
  LawCheck ut("universal-ternary"), rt("extract-roundtrip"), us("universal-symmetry");
  for (const auto& tr : probes.triples()) {
    const Space &x = tr[0], &a = tr[1], &b = tr[2];
    const std::string name = probes.describe({"X", "A", "B"}, {x, a, b});
    const Multimap e3 = universal_ternary(m, x, a, b);
    ut.compare(name, e3.payload, c.id(c.t(x, a, b)));
    rt.compare(name, out.category.braid(x, a, b), c.braid(x, a, b));
    if (c.braid_inv) rt.compare(name + " inverse", out.category.braid_inv(x, a, b), c.braid_inv(x, a, b));
    us.compare(name, compose(c.braid(x, a, b), e3.payload), m.act(s2, universal_ternary(m, x, b, a)).payload);
  }
  for (const LawCheck* l : {&ut, &rt, &us}) rep.laws.push_back(l->result());
  if (!rep.failing().empty()) {
    const auto& bad = rep.at(rep.failing().front());
    throw ExtractionMismatch("braiding read off the multimaps disagrees (" + bad.id +
                             (bad.witness ? " at " + bad.witness->probe : std::string()) + ")");
  }
  return out;
}

}  // namespace skewverify
