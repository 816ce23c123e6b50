#include <benchmark/benchmark.h>

#include "skewverify/braid.hpp"
#include "skewverify/skewcheck.hpp"
#include "skewverify/skewclosed.hpp"
#include "skewverify/skewmulti.hpp"
#include "skewverify/spec_io.hpp"
#include "skewverify/warp.hpp"

using namespace skewverify;

namespace {

const char* const kFixtures[] = {"trivial", "z2_sign", "z4_f5", "s3_flip", "sweedler_lambda1"};

SkewMonCat braided(const std::string& name) {
  const BialgebraSpec spec = parse_spec(fixture_path(name));
  const SkewMonCat vect = skewmon_from_cowarp(Cowarping(comonad_from_bialgebra(spec.bialgebra)));
  return s_from_y(vect, y_from_cobraiding(spec.bialgebra, spec.cobraiding()));
}

void BM_SkewAxioms(benchmark::State& st) {
  const SkewMonCat c = braided(kFixtures[st.range(0)]);
  const ProbeFamily p({1, static_cast<std::size_t>(st.range(1)), 1, 1}, Space::unit());
  for (auto _ : st) benchmark::DoNotOptimize(check_skew_axioms(c, p));
  st.SetLabel(kFixtures[st.range(0)]);
}
BENCHMARK(BM_SkewAxioms)->ArgsProduct({{0, 1, 2, 3, 4}, {1, 2}})->Unit(benchmark::kMillisecond);

void BM_BraidingAxioms(benchmark::State& st) {
  const SkewMonCat c = braided(kFixtures[st.range(0)]);
  const ProbeFamily p({1, 1, 1, 1}, Space::unit());
  for (auto _ : st) benchmark::DoNotOptimize(check_braiding_axioms(c, p));
  st.SetLabel(kFixtures[st.range(0)]);
}
BENCHMARK(BM_BraidingAxioms)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_ClosedBraiding(benchmark::State& st) {
  const ClosedStructure cs(braided(kFixtures[st.range(0)]));
  const ProbeFamily p({1, 1, 1, 1}, Space::unit());
  for (auto _ : st) benchmark::DoNotOptimize(check_closed_braiding_axioms(cs, mate_s_to_sprime(cs), p));
  st.SetLabel(kFixtures[st.range(0)]);
}
BENCHMARK(BM_ClosedBraiding)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Extraction(benchmark::State& st) {
  const SkewMulticategory m(braided(kFixtures[st.range(0)]));
  const ProbeFamily p({1, 1, 1, 1}, Space::unit());
  for (auto _ : st) benchmark::DoNotOptimize(extract_braiding(m, p));
  st.SetLabel(kFixtures[st.range(0)]);
}
BENCHMARK(BM_Extraction)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

// Δ² words of growing length in Bₙ against their conjugates
void BM_BraidEqual(benchmark::State& st) {
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  std::vector<int> half;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = n - 1; j >= i; --j) half.push_back(static_cast<int>(j));
  }
  std::vector<int> twist = half;
  twist.insert(twist.end(), half.begin(), half.end());
  const BraidWord delta2 = BraidWord::from_signed(n, twist);
  const BraidWord s1 = BraidWord::generator(n, 1);
  for (auto _ : st) benchmark::DoNotOptimize(braid_equal(s1 * delta2 * s1.inverse(), delta2));
}
BENCHMARK(BM_BraidEqual)->DenseRange(3, 6);

void BM_OperadSubst(benchmark::State& st) {
  const BraidWord s = BraidWord::from_signed(3, {1, -2, 1});
  const std::vector<BraidWord> ts = {BraidWord::from_signed(2, {1}), BraidWord::from_signed(2, {-1, -1}),
                                     BraidWord::from_signed(2, {1})};
  for (auto _ : st) benchmark::DoNotOptimize(operad_subst(s, ts));
}
BENCHMARK(BM_OperadSubst);

}  // namespace

BENCHMARK_MAIN();
