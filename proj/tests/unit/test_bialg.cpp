#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "skewverify/bialgebra.hpp"

using namespace skewverify;

namespace {

const Field Q = Field::rational();
const Field F5 = Field::prime(5);

long long as_int(const Scalar& s) {
  if (s.field().is_rational()) {
    const auto& q = s.rational_value();
    REQUIRE(q.get_den() == 1);
    return q.get_num().get_si();
  }
  return static_cast<long long>(s.residue());
}

oracle::Form form_of(const LinMap& r, std::size_t n) {
  return [r, n](int a, int b) { return as_int(r.entry(0, static_cast<std::size_t>(a) * n + b)); };
}

LinMap functional(const Bialgebra& b, const std::vector<std::vector<long long>>& t) {
  std::vector<Triplet> e;
  const std::size_t n = b.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e.push_back({0, i * n + j, b.field().from_int(t[i][j])});
  return LinMap::from_triplets(b.space * b.space, Space::unit(), b.field(), e);
}

LinMap random_functional(std::mt19937_64& rng, const Bialgebra& b) {
  std::uniform_int_distribution<int> d(-2, 2);
  std::vector<std::vector<long long>> t(b.dim(), std::vector<long long>(b.dim()));
  for (auto& row : t)
    for (auto& v : row) v = d(rng);
  return functional(b, t);
}

/// Library structure constants agree with the hand-written oracle tables.
void same_structure(const Bialgebra& b, const oracle::SmallBialgebra& o) {
  REQUIRE(b.dim() == static_cast<std::size_t>(o.n));
  const std::size_t n = b.dim();
  for (int a = 0; a < o.n; ++a) {
    for (int c = 0; c < o.n; ++c)
      for (int k = 0; k < o.n; ++k)
        CHECK(o.ring.norm(as_int(b.mu.entry(k, a * n + c))) == o.ring.norm(o.mu[a][c][k]));
    std::vector<long long> d(n * n, 0);
    for (const auto& t : o.delta[a]) d[t.left * n + t.right] += t.coeff;
    for (std::size_t k = 0; k < n * n; ++k) CHECK(as_int(b.delta.entry(k, a)) == o.ring.norm(d[k]));
    CHECK(as_int(b.eps.entry(0, a)) == o.eps[a]);
  }
}

bool all_pass(const AxiomReport& r) { return r.failing().empty(); }

}  // namespace

TEST_CASE("fixture bialgebras match the hand tables and pass every law") {
  same_structure(cyclic_group_algebra(2, Q), oracle::cyclic(2));
  same_structure(cyclic_group_algebra(4, F5), oracle::cyclic(4, 5));
  same_structure(symmetric_group3_algebra(Q), oracle::s3());
  same_structure(sweedler_bialgebra(Q), oracle::sweedler());
  for (const auto& b : {trivial_bialgebra(Q), cyclic_group_algebra(2, Q), cyclic_group_algebra(4, F5),
                        symmetric_group3_algebra(Q), sweedler_bialgebra(Q)}) {
    auto rep = check_bialgebra(b);
    CHECK(rep.laws.size() == 7);
    CHECK(all_pass(rep));
  }
}

TEST_CASE("broken comultiplication is caught by counit-l with witness g") {
  Bialgebra b = cyclic_group_algebra(2, Q);
  const Scalar one = Q.one();
  // Δ(e) = e⊗e, Δ(g) = g⊗e
  b.delta = LinMap::from_triplets(b.space, b.space * b.space, Q, {{0, 0, one}, {2, 1, one}});
  auto rep = check_bialgebra(b);
  const auto& law = rep.at("counit-l");
  REQUIRE(law.status == LawStatus::fail);
  CHECK(law.witness->col_label == "g");
  CHECK(law.witness->row_label == "e");
  CHECK(rep.passed("counit-r"));
}

TEST_CASE("shape errors and group validation") {
  Bialgebra b = cyclic_group_algebra(2, Q);
  b.eps = LinMap::identity(b.space, Q);
  CHECK_THROWS_AS(check_bialgebra(b), ShapeError);

  CHECK_THROWS_AS(group_algebra({{0, 1}, {1, 1}}, 0, Q), NotAGroup);
  CHECK_THROWS_AS(group_algebra({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}, 0, Q), NotAGroup);
  CHECK_THROWS_AS(group_algebra({{0, 2}, {1, 0}}, 0, Q), NotAGroup);
  auto z2 = cyclic_group_algebra(2, Q);
  CHECK(z2.dim() == 2);
  CHECK(z2.mu.entry(0, 3) == Q.one());  // g·g = e
  auto s3 = symmetric_group3_algebra(Q);
  CHECK_FALSE(s3.mu == compose(s3.mu, flip(s3.space, s3.space, Q)));
}

TEST_CASE("convolution is a monoid with unit eps⊗eps") {
  for (const auto& b : {cyclic_group_algebra(4, F5), sweedler_bialgebra(Q)}) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 3; ++i) {
      LinMap f = random_functional(rng, b), g = random_functional(rng, b), h = random_functional(rng, b);
      CHECK(convolution(b, convolution(b, f, g), h) == convolution(b, f, convolution(b, g, h)));
      CHECK(convolution(b, counit_pair(b), f) == f);
      CHECK(convolution(b, f, counit_pair(b)) == f);
      // against the Sweedler-sum oracle
      auto o = b.dim() == 4 && b.field().is_rational() ? oracle::sweedler() : oracle::cyclic(4, 5);
      LinMap fg = convolution(b, f, g);
      for (int a = 0; a < o.n; ++a)
        for (int c = 0; c < o.n; ++c)
          CHECK(as_int(fg.entry(0, a * o.n + c)) ==
                oracle::convolve(o, form_of(f, b.dim()), form_of(g, b.dim()), a, c));
    }
  }
}

TEST_CASE("sign bicharacter and its inverse") {
  auto b = cyclic_group_algebra(2, Q);
  auto c = bicharacter_cobraiding(2, Q.from_int(-1), Q);
  CHECK(c.r.entry(0, 3) == Q.from_int(-1));
  CHECK(convolution(b, c.r, c.rbar) == counit_pair(b));
  auto solved = convolution_inverse(b, c.r);
  REQUIRE(solved.has_value());
  CHECK(*solved == c.rbar);
  CHECK(all_pass(check_cobraiding(b, c)));
  CHECK_FALSE(convolution_inverse(b, LinMap(b.space * b.space, Space::unit(), Q)).has_value());
}

TEST_CASE("bicharacter fixtures pass and agree with the oracle") {
  CHECK(all_pass(check_cobraiding(trivial_bialgebra(Q), bicharacter_cobraiding(1, Q.one(), Q))));
  auto b4 = cyclic_group_algebra(4, F5);
  auto c4 = bicharacter_cobraiding(4, F5.from_int(2), F5);
  CHECK(all_pass(check_cobraiding(b4, c4)));
  auto o4 = oracle::cyclic(4, 5);
  auto r4 = form_of(c4.r, 4);
  CHECK(oracle::cb1(o4, r4));
  CHECK(oracle::cb2(o4, r4));
  CHECK(oracle::cb3(o4, r4));
  CHECK_THROWS_AS(bicharacter_cobraiding(2, F5.from_int(2), F5), NotARootOfUnity);
  CHECK_THROWS_AS(bicharacter_cobraiding(2, Q.from_int(2), Q), NotARootOfUnity);
}

TEST_CASE("trivial cobraiding on S3 fails exactly CB3 at a non-commuting pair") {
  auto b = symmetric_group3_algebra(Q);
  auto rep = check_cobraiding(b, trivial_cobraiding(b));
  CHECK(rep.failing() == std::vector<std::string>{"CB3"});
  const auto& w = *rep.at("CB3").witness;
  auto dot = w.col_label.find('.');
  REQUIRE(dot != std::string::npos);
  std::string x = w.col_label.substr(0, dot), y = w.col_label.substr(dot + 1);
  // the witness pair really does not commute
  const std::vector<std::string> names = {"e", "(12)", "(23)", "(13)", "(123)", "(132)"};
  auto idx = [&](const std::string& s) { return std::find(names.begin(), names.end(), s) - names.begin(); };
  auto o = oracle::s3();
  CHECK(o.mu[idx(x)][idx(y)] != o.mu[idx(y)][idx(x)]);
  CHECK_FALSE(oracle::cb3(o, [](int, int) { return 1LL; }));

  auto z2 = cyclic_group_algebra(2, Q);
  CHECK(all_pass(check_cobraiding(z2, trivial_cobraiding(z2))));
}

TEST_CASE("Sweedler cobraiding table is the unique small solution") {
  // Fix r(1,-) = ε, r(g,g) = -1, r(x,x) = 1, r(g,x) = r(x,g) = 0; search the rest in {-1,0,1}.
  auto o = oracle::sweedler();
  std::vector<std::vector<int>> mask(4, std::vector<int>(4, 0));
  std::vector<std::vector<long long>> fixed(4, std::vector<long long>(4, 0));
  for (int j = 0; j < 4; ++j) {
    mask[0][j] = 1;
    fixed[0][j] = o.eps[j];
  }
  mask[1][1] = mask[2][2] = mask[1][2] = mask[2][1] = 1;
  fixed[1][1] = -1;
  fixed[2][2] = 1;
  auto sols = oracle::solve_small_cobraidings(o, mask, fixed);
  REQUIRE(sols.size() == 1);

  for (long long lambda : {1, 2, -3}) {
    auto c = sweedler_cobraiding(Q.from_int(lambda));
    if (lambda == 1) {
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(as_int(c.r.entry(0, a * 4 + b)) == sols[0][a][b]);
    }
    auto b = sweedler_bialgebra(Q);
    CHECK(all_pass(check_cobraiding(b, c)));
    auto r = form_of(c.r, 4);
    CHECK(oracle::cb1(o, r));
    CHECK(oracle::cb2(o, r));
    CHECK(oracle::cb3(o, r));
  }
}

TEST_CASE("library cobraiding verdicts agree with the oracle on random forms") {
  // Every form with entries in {-1,0,1}; includes genuine cobraidings and failures.
  auto b = cyclic_group_algebra(2, Q);
  auto o = oracle::cyclic(2);
  for (int i = 0; i < 81; ++i) {
    std::vector<std::vector<long long>> t = {{1, 1}, {1, 1}};
    int code = i;
    for (auto& row : t)
      for (auto& v : row) {
        v = code % 3 - 1;
        code /= 3;
      }
    LinMap r = functional(b, t);
    Cobraiding c{r, r};
    auto rep = check_cobraiding(b, c);
    auto f = form_of(r, 2);
    CHECK(rep.passed("CB1") == oracle::cb1(o, f));
    CHECK(rep.passed("CB2") == oracle::cb2(o, f));
    CHECK(rep.passed("CB3") == oracle::cb3(o, f));
  }
}
