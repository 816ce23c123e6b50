#include "skewverify/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "skewverify/comodule.hpp"
#include "skewverify/skewcheck.hpp"
#include "skewverify/skewclosed.hpp"
#include "skewverify/skewmulti.hpp"
#include "skewverify/warp.hpp"

namespace skewverify {

namespace {

using Task = std::function<AxiomReport()>;

// nesting [C,[B,[A,Y]]] grows like dim³ per factor
constexpr std::size_t kClosedProbeDim = 2;

struct Context {
  const BialgebraSpec& spec;
  const SuiteConfig& cfg;
  ProbeFamily probes;
  // empty when the spec fails the bialgebra laws
  std::optional<Cowarping> warp_;
  std::optional<SkewMonCat> vect_;
  std::optional<Cobraiding> cob;
  std::optional<BraidingOnComonad> y;
  std::optional<SkewMonCat> braided;

  Context(const BialgebraSpec& sp, const SuiteConfig& c, bool structures)
      : spec(sp), cfg(c), probes(c.probe_dims, Space::unit()) {
    if (!structures) return;
    warp_.emplace(comonad_from_bialgebra(sp.bialgebra));
    vect_ = skewmon_from_cowarp(*warp_);
    if (sp.has_cobraiding()) {
      cob = sp.cobraiding();
      y = y_from_cobraiding(sp.bialgebra, *cob);
      braided = s_from_y(*vect_, *y);
    }
  }

  const Cowarping& warp() const { return *warp_; }
  const SkewMonCat& best() const { return braided ? *braided : *vect_; }

  ProbeFamily closed_probes() const {
    auto d = cfg.probe_dims;
    for (auto& x : d) x = std::min(x, kClosedProbeDim);
    return ProbeFamily(d, Space::unit());
  }
};

AxiomReport named(std::string suite, AxiomReport r) {
  r.suite = std::move(suite);
  return r;
}

// A missing inverse becomes a failed law instead of aborting the run.
Task guarded(std::string suite, std::string law, std::function<AxiomReport()> f) {
  return [suite, law, f] {
    try {
      return named(suite, f());
    } catch (const NotInvertible& e) {
      AxiomReport r;
      r.suite = suite;
      LawCheck c(law);
      c.fail("", e.what());
      r.laws.push_back(c.result());
      return r;
    }
  };
}

bool same_components(LawCheck& law, const ProbeFamily& p, const SkewMonCat::Component3& lhs,
                     const SkewMonCat::Component3& rhs) {
  for (const auto& [x, a, b] : p.triples()) {
    if (!law.compare(p.describe({"X", "A", "B"}, {x, a, b}), lhs(x, a, b), rhs(x, a, b))) return false;
  }
  return true;
}

// Round trips are theorems for any input; a mismatch is our bug, not the spec's.
LawResult as_consistency(const LawCheck& c) {
  LawResult r = c.result();
  if (r.status == LawStatus::fail) r.status = LawStatus::inconsistent;
  return r;
}

AxiomReport roundtrip(const Context& cx) {
  const Bialgebra& b = cx.spec.bialgebra;
  const LinMap& r = cx.cob->r;
  const SkewMonCat& s = *cx.braided;
  const ProbeFamily& p = cx.probes;
  AxiomReport rep;
  rep.probes = p.summary();

  LawCheck ryr("r-y-r");
  ryr.compare("r", cobraiding_from_y(b, *cx.y), r);

  LawCheck ysy("y-s-y");
  ysy.compare("core", y_from_s(s, b.space).core(), cx.y->core());

  ClosedStructure cs(s);
  const ClosedBraiding sprime = mate_s_to_sprime(cs);
  const auto s_back = mate_sprime_to_s(cs, sprime);
  LawCheck sms("s-mate-s");
  const ProbeFamily cp = cx.closed_probes();
  same_components(sms, cp, s_back, s.braid);

  LawCheck ses("s-extract-s");
  LawCheck chain("r-y-s-s'-s-extract-y-r");
  try {
    SkewMonCat via_mate = s;
    via_mate.braid = s_back;
    const SkewMonCat ex = extract_braiding(SkewMulticategory(s), p).category;
    same_components(ses, p, ex.braid, s.braid);
    const SkewMonCat ex2 = extract_braiding(SkewMulticategory(via_mate), cp).category;
    chain.compare("r", cobraiding_from_y(b, y_from_s(ex2, b.space)), r);
  } catch (const ExtractionMismatch& e) {
    ses.fail("", e.what());
    chain.fail("", e.what());
  }
  for (const LawCheck* c : {&ryr, &ysy, &sms, &ses, &chain}) rep.laws.push_back(as_consistency(*c));
  return rep;
}

AxiomReport multicat(const Context& cx) {
  SkewMulticategory m(cx.best());
  AxiomReport rep = check_multicategory(m, cx.probes, cx.cfg.seed);
  if (!cx.braided) return rep;
  rep.append(check_braided_multicat(m, cx.probes, cx.cfg.seed));
  try {
    rep.append(extract_braiding(m, cx.probes).report);
  } catch (const ExtractionMismatch& e) {
    LawCheck c("extraction");
    c.fail("", e.what());
    rep.laws.push_back(c.result());
  }
  return rep;
}

AxiomReport comodules(const Context& cx) {
  const Bialgebra& b = cx.spec.bialgebra;
  const auto ms = probe_comodules(b);
  AxiomReport rep;
  for (const auto& m : ms) {
    AxiomReport one = check_comodule(b, m);
    for (auto& l : one.laws) l.id = m.name + ":" + l.id;
    rep.append(one);
  }
  if (cx.y) rep.append(check_comodule_braiding(cx.warp().comonad(), *cx.y, ms, cx.cfg.seed));
  return rep;
}

bool needs_r(const std::string& id) {
  return id == "cobraiding" || id == "y-axioms" || id == "braiding" || id == "derived" || id == "roundtrip";
}

std::vector<Task> tasks_for(const std::string& id, const Context& cx) {
  const ProbeFamily& p = cx.probes;
  const std::uint64_t seed = cx.cfg.seed;
  if (id == "bialgebra") return {[&cx] { return named("bialgebra", check_bialgebra(cx.spec.bialgebra)); }};
  if (id == "cobraiding") {
    return {[&cx] { return named("cobraiding", check_cobraiding(cx.spec.bialgebra, *cx.cob)); }};
  }
  if (id == "y-axioms") {
    return {[&cx, &p] {
      return named("y-axioms", check_y_axioms(cx.warp(), *cx.y, p));
    }};
  }
  if (id == "skew") {
    return {[&cx, &p] { return named("skew", check_monoidal_comonad(cx.warp(), p)); },
            [&cx, &p] { return named("skew", check_skew_axioms(cx.best(), p)); },
            [&cx, &p, seed] { return named("skew", check_naturality(cx.best(), p, seed)); }};
  }
  if (id == "braiding") {
    return {guarded("braiding", "s-invertible", [&cx, &p] { return check_braiding_axioms(*cx.braided, p); })};
  }
  if (id == "derived") {
    return {guarded("derived", "s-invertible", [&cx, &p] {
      const AxiomReport br = check_braiding_axioms(*cx.braided, p);
      return check_derived_properties(*cx.braided, p, &br);
    }),
            [&cx, &p] {
              const AxiomReport ya = check_y_axioms(cx.warp(), *cx.y, p);
              return named("derived", check_comonad_braiding_consequences(cx.warp().comonad(), *cx.y, p, &ya));
            }};
  }
  if (id == "closed") {
    return {[&cx, seed] {
      ClosedStructure cs(cx.best());
      const ProbeFamily cp = cx.closed_probes();
      AxiomReport rep = check_closed_structure(cs, cp, seed);
      if (cx.braided) rep.append(check_closed_braiding_axioms(cs, mate_s_to_sprime(cs), cp));
      rep.probes = cp.summary();
      return named("closed", rep);
    }};
  }
  if (id == "comodules") return {[&cx] { return named("comodules", comodules(cx)); }};
  if (id == "multicat") return {[&cx] { return named("multicat", multicat(cx)); }};
  if (id == "roundtrip") return {[&cx] { return named("roundtrip", roundtrip(cx)); }};
  throw ValidationError("unknown suite '" + id + "'");
}

// Runs tasks on up to `jobs` threads; results keep task order.
std::vector<std::pair<AxiomReport, double>> run_pool(const std::vector<Task>& tasks, std::size_t jobs) {
  std::vector<std::pair<AxiomReport, double>> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      try {
        out[k].first = tasks[k]();
      } catch (...) {
        errors[k] = std::current_exception();
      }
      out[k].second = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const std::size_t n = std::min(std::max<std::size_t>(jobs, 1), tasks.size());
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < n; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {"bialgebra", "cobraiding", "y-axioms", "skew",     "braiding", "derived",
                                               "closed",    "comodules",  "multicat", "roundtrip", "all"};
  return ids;
}

int combined_exit_code(const std::vector<AxiomReport>& reports) {
  int code = 0;
  for (const auto& r : reports) code = std::max(code, r.exit_code());
  return code;
}

SuiteRun run_suite(const BialgebraSpec& spec, const SuiteConfig& cfg) {
  if (std::find(suite_ids().begin(), suite_ids().end(), cfg.suite) == suite_ids().end()) {
    throw ValidationError("unknown suite '" + cfg.suite + "'");
  }
  for (std::size_t d : cfg.probe_dims) {
    if (d < 1 || d > kMaxProbeDim) {
      throw ValidationError("probe dims must lie in 1.." + std::to_string(kMaxProbeDim));
    }
  }
  if (cfg.suite != "all" && needs_r(cfg.suite) && !spec.has_cobraiding()) {
    throw ValidationError("suite '" + cfg.suite + "' needs a cobraiding table r in " + spec.name);
  }
  std::vector<std::string> ids;
  if (cfg.suite == "all") {
    for (const auto& id : suite_ids()) {
      if (id != "all" && (spec.has_cobraiding() || !needs_r(id))) ids.push_back(id);
    }
  } else {
    ids.push_back(cfg.suite);
  }
  // everything past the bialgebra suite is built from a genuine bialgebra
  if (ids != std::vector<std::string>{"bialgebra"}) {
    const AxiomReport b = check_bialgebra(spec.bialgebra);
    if (b.exit_code() != 0) {
      if (cfg.suite != "all") {
        throw ValidationError(spec.name + " is not a bialgebra (" + b.failing().front() + " fails)");
      }
      ids = {"bialgebra"};
    }
  }
  const Context cx(spec, cfg, ids.size() > 1 || ids.front() != "bialgebra");
  std::vector<Task> tasks;
  std::vector<std::size_t> owner;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    for (auto& t : tasks_for(ids[k], cx)) {
      tasks.push_back(std::move(t));
      owner.push_back(k);
    }
  }
  auto results = run_pool(tasks, cfg.jobs);

  SuiteRun run;
  run.reports.resize(ids.size());
  run.elapsed_ms.assign(ids.size(), 0.0);
  for (std::size_t k = 0; k < ids.size(); ++k) run.reports[k].suite = ids[k];
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    AxiomReport& r = run.reports[owner[t]];
    r.append(results[t].first);
    run.elapsed_ms[owner[t]] += results[t].second;
  }
  for (auto& r : run.reports) {
    if (r.probes.empty()) r.probes = cx.probes.summary();
  }
  run.exit_code = combined_exit_code(run.reports);
  return run;
}

namespace {

nlohmann::ordered_json law_json(const LawResult& l) {
  nlohmann::ordered_json j;
  j["id"] = l.id;
  j["status"] = to_string(l.status);
  j["optional"] = l.optional;
  j["probes_checked"] = l.probes_checked;
  if (l.witness) {
    const Witness& w = *l.witness;
    nlohmann::ordered_json wj;
    wj["probe"] = w.probe;
    if (w.note.empty()) {
      wj["row"] = w.row;
      wj["col"] = w.col;
      wj["row_label"] = w.row_label;
      wj["col_label"] = w.col_label;
    } else {
      wj["note"] = w.note;
    }
    j["witness"] = wj;
    if (w.note.empty()) {
      j["lhs"] = w.lhs;
      j["rhs"] = w.rhs;
    }
  }
  return j;
}

nlohmann::ordered_json report_json(const AxiomReport& r, const SuiteConfig& cfg, double ms) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["laws"] = nlohmann::ordered_json::array();
  for (const auto& l : r.laws) j["laws"].push_back(law_json(l));
  j["probes"] = r.probes;
  j["seed"] = cfg.seed;
  if (cfg.timing) j["elapsed_ms"] = ms;
  return j;
}

}  // namespace

std::string render_json(const BialgebraSpec& spec, const SuiteConfig& cfg, const SuiteRun& run) {
  nlohmann::ordered_json j;
  if (cfg.suite != "all" && run.reports.size() == 1) {
    j = report_json(run.reports[0], cfg, run.elapsed_ms[0]);
  } else {
    j["suite"] = cfg.suite;
    j["reports"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < run.reports.size(); ++k) {
      j["reports"].push_back(report_json(run.reports[k], cfg, run.elapsed_ms[k]));
    }
    j["seed"] = cfg.seed;
  }
  j["spec"] = spec.name;
  j["exit_code"] = run.exit_code;
  return j.dump(2) + "\n";
}

std::string render_human(const BialgebraSpec& spec, const SuiteConfig& cfg, const SuiteRun& run) {
  std::ostringstream os;
  os << "spec " << spec.name << "  suite " << cfg.suite << "  seed " << cfg.seed << "  probe dims "
     << cfg.probe_dims[0] << "," << cfg.probe_dims[1] << "," << cfg.probe_dims[2] << "," << cfg.probe_dims[3]
     << "\n";
  for (std::size_t k = 0; k < run.reports.size(); ++k) {
    const AxiomReport& r = run.reports[k];
    os << "\n[" << r.suite << "]";
    if (cfg.timing) os << "  " << static_cast<long long>(run.elapsed_ms[k]) << " ms";
    os << "\n";
    for (const auto& l : r.laws) {
      os << "  " << (l.status == LawStatus::pass ? "ok  " : l.status == LawStatus::fail ? "FAIL" : "BUG ") << " "
         << l.id << (l.optional ? " (optional)" : "") << "  [" << l.probes_checked << " probes]\n";
      if (!l.witness) continue;
      const Witness& w = *l.witness;
      os << "        at " << (w.probe.empty() ? "-" : w.probe);
      if (w.note.empty()) {
        os << ", entry (" << w.row_label << ", " << w.col_label << "): " << w.lhs << " vs " << w.rhs;
      } else {
        os << ": " << w.note;
      }
      os << "\n";
    }
  }
  os << "\nexit " << run.exit_code << "\n";
  return os.str();
}

}  // namespace skewverify
