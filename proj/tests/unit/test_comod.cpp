#include <algorithm>

#include "doctest.h"
#include "skewverify/comodule.hpp"
#include "skewverify/skewcheck.hpp"

using namespace skewverify;

namespace {

const Field Q = Field::rational();
const Field F5 = Field::prime(5);

struct Fixture {
  std::string name;
  Bialgebra b;
  Cobraiding r;
};

std::vector<Fixture> cobraided() {
  return {{"trivial", trivial_bialgebra(Q), trivial_cobraiding(trivial_bialgebra(Q))},
          {"z2_sign", cyclic_group_algebra(2, Q), bicharacter_cobraiding(2, Q.from_int(-1), Q)},
          {"z4_f5", cyclic_group_algebra(4, F5), bicharacter_cobraiding(4, F5.from_int(2), F5)},
          {"sweedler", sweedler_bialgebra(Q), sweedler_cobraiding(Q.one())}};
}

}  // namespace

TEST_CASE("cofree comodules") {
  auto z2 = cyclic_group_algebra(2, Q);
  auto m = cofree(z2, Space::unit());
  CHECK(m.carrier.dim() == 2);
  // α(gᵃ) = gᵃ⊗gᵃ
  for (std::size_t a = 0; a < 2; ++a) {
    CHECK(m.coaction.entry(a * 2 + a, a) == Q.one());
    CHECK(m.coaction.column_rows(a).size() == 1);
  }
  for (const auto& f : cobraided()) CHECK(check_comodule(f.b, cofree(f.b, Space::generator("V", 2))).failing().empty());
  auto s3 = symmetric_group3_algebra(Q);
  auto big = cofree(s3, Space::generator("V", 2));
  CHECK(big.carrier.dim() == 12);
  CHECK(check_comodule(s3, big).failing().empty());
}

TEST_CASE("grouplike comodules need group-likes") {
  auto sw = sweedler_bialgebra(Q);
  CHECK_NOTHROW(grouplike_comodule(sw, 1, Space::unit()));
  CHECK_THROWS_AS(grouplike_comodule(sw, 2, Space::unit()), InvalidComodule);
  Comodule bad{"bad", Space::unit(), LinMap::from_triplets(Space::unit(), sw.space, Q, {{2, 0, Q.one()}}), std::nullopt};
  CHECK(check_comodule(sw, bad).at("counit").status == LawStatus::fail);
  CHECK_THROWS_AS(tensor_comodules(sw, bad, trivial_comodule(sw, Space::unit())), InvalidComodule);
}

TEST_CASE("lifted tensor product") {
  auto z2 = cyclic_group_algebra(2, Q);
  auto k = cofree(z2, Space::unit());
  auto t = tensor_comodules(z2, k, k);
  // gᵃ⊗gᵇ ↦ gᵃ⁺ᵇ⊗gᵃ⊗gᵇ
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      CHECK(t.coaction.entry(((a + b) % 2) * 4 + a * 2 + b, a * 2 + b) == Q.one());
      CHECK(t.coaction.column_rows(a * 2 + b).size() == 1);
    }
  }
  CHECK(check_comodule(z2, t).failing().empty());

  for (const auto& f : cobraided()) {
    const auto comods = probe_comodules(f.b);
    auto unit = trivial_comodule(f.b, Space::unit());
    for (const auto& m : comods) {
      CHECK(tensor_comodules(f.b, unit, m).coaction == m.coaction);
      CHECK(tensor_comodules(f.b, m, unit).coaction == m.coaction);
      for (const auto& n : comods) {
        for (const auto& p : comods) {
          if (m.carrier.dim() * n.carrier.dim() * p.carrier.dim() > 64) continue;
          CHECK(tensor_comodules(f.b, tensor_comodules(f.b, m, n), p).coaction ==
                tensor_comodules(f.b, m, tensor_comodules(f.b, n, p)).coaction);
        }
      }
    }
  }
}

TEST_CASE("Koszul signs from the sign cobraiding") {
  auto z2 = cyclic_group_algebra(2, Q);
  MonoidalComonad g(z2);
  auto y = y_from_cobraiding(z2, bicharacter_cobraiding(2, Q.from_int(-1), Q));
  Comodule even = grouplike_comodule(z2, 0, Space::unit()), odd = grouplike_comodule(z2, 1, Space::unit());
  std::vector<long long> signs;
  for (const auto* a : {&even, &odd}) {
    for (const auto* b : {&even, &odd}) {
      LinMap c = braiding_on_comodules(g, y, *a, *b);
      REQUIRE(c.rows() == 1);
      REQUIRE(c.cols() == 1);
      signs.push_back(c.entry(0, 0) == Q.one() ? 1 : c.entry(0, 0) == Q.from_int(-1) ? -1 : 0);
    }
  }
  CHECK(signs == std::vector<long long>{1, 1, 1, -1});
  // graded spaces of higher dimension: c(a⊗b) = (−1)^{|a||b|} b⊗a
  Space v = Space::generator("V", 2), w = Space::generator("W", 3);
  LinMap c = braiding_on_comodules(g, y, grouplike_comodule(z2, 1, v), grouplike_comodule(z2, 1, w));
  CHECK(c == -flip(v, w, Q));
}

TEST_CASE("plain flip on trivially graded comodules") {
  auto s3 = symmetric_group3_algebra(Q);
  MonoidalComonad g(s3);
  BraidingOnComonad y(s3.space, flip(s3.space, s3.space, Q));
  Space v = Space::generator("V", 2), w = Space::generator("W", 2);
  CHECK(braiding_on_comodules(g, y, trivial_comodule(s3, v), trivial_comodule(s3, w)) == flip(v, w, Q));
}

TEST_CASE("on cofree comodules c is y, and r comes back") {
  for (const auto& f : cobraided()) {
    CAPTURE(f.name);
    MonoidalComonad g(f.b);
    auto y = y_from_cobraiding(f.b, f.r);
    auto k = cofree(f.b, Space::unit());
    LinMap c = braiding_on_comodules(g, y, k, k);
    CHECK(c == y.y(Space::unit(), Space::unit()));
    CHECK(cobraiding_from_y(f.b, BraidingOnComonad(f.b.space, c)) == f.r.r);
  }
}

TEST_CASE("braidings on comodules for every cobraiding fixture") {
  for (const auto& f : cobraided()) {
    CAPTURE(f.name);
    MonoidalComonad g(f.b);
    auto y = y_from_cobraiding(f.b, f.r);
    auto rep = check_comodule_braiding(g, y, probe_comodules(f.b), 3);
    auto required = rep.failing();
    required.erase(std::remove(required.begin(), required.end(), "symmetry"), required.end());
    CHECK(required.empty());
    // symmetry transfers from s
    auto s = s_from_y(skewmon_from_cowarp(Cowarping(g)), y);
    auto br = check_braiding_axioms(s, ProbeFamily({1, 1, 1, 1}, Space::unit()));
    CHECK(br.passed("S1") == rep.passed("symmetry"));
  }
}

TEST_CASE("a map that is not a braiding does not restrict to comodules") {
  auto z2 = cyclic_group_algebra(2, Q);
  MonoidalComonad g(z2);
  // identity core: degrees stay put while the carriers swap
  BraidingOnComonad y(z2.space, LinMap::identity(z2.space * z2.space, Q));
  Comodule even = grouplike_comodule(z2, 0, Space::unit()), odd = grouplike_comodule(z2, 1, Space::unit());
  CHECK_NOTHROW(braiding_on_comodules(g, y, even, even));
  CHECK_THROWS_AS(braiding_on_comodules(g, y, odd, even), EqualizerSquareFailure);
  auto rep = check_comodule_braiding(g, y, {even, odd}, 1);
  CHECK(rep.at("square").status == LawStatus::fail);
}

TEST_CASE("consequences of the y-axioms on the comonad") {
  ProbeFamily p({1, 2, 1, 1}, Space::unit());
  for (const auto& f : cobraided()) {
    CAPTURE(f.name);
    MonoidalComonad g(f.b);
    auto y = y_from_cobraiding(f.b, f.r);
    auto ya = check_y_axioms(Cowarping(g), y, p);
    CHECK(check_comonad_braiding_consequences(g, y, p, &ya).failing().empty());
  }
  auto s3 = symmetric_group3_algebra(Q);
  MonoidalComonad g(s3);
  auto flip_y = y_from_cobraiding(s3, trivial_cobraiding(s3));
  auto ya = check_y_axioms(Cowarping(g), flip_y, p);
  auto rep = check_comonad_braiding_consequences(g, flip_y, p, &ya);
  CHECK(rep.failing() == std::vector<std::string>{"y-coalg"});
  CHECK(rep.at("y-coalg").status == LawStatus::fail);
  CHECK(rep.exit_code() == 1);

  // a report that claims eq:funny passed makes the same failure an inconsistency
  AxiomReport claimed = ya;
  for (auto& l : claimed.laws) l.status = LawStatus::pass;
  auto flagged = check_comonad_braiding_consequences(g, flip_y, p, &claimed);
  CHECK(flagged.at("y-coalg").status == LawStatus::inconsistent);
  CHECK(flagged.exit_code() == 3);
}
