#include <random>

#include "doctest.h"
#include "skewverify/linmap.hpp"

using namespace skewverify;

namespace {

const Field Q = Field::rational();

LinMap mat(const Space& dom, const Space& cod, std::vector<std::vector<long long>> rows) {
  return LinMap::from_ints(dom, cod, Q, rows);
}

Scalar random_scalar(std::mt19937_64& rng, const Field& f) {
  std::uniform_int_distribution<long long> num(-20, 20);
  std::uniform_int_distribution<long long> den(1, 9);
  if (f.is_rational()) return f.from_fraction(num(rng), den(rng));
  return f.from_int(num(rng));
}

LinMap random_map(std::mt19937_64& rng, const Space& dom, const Space& cod, const Field& f) {
  std::uniform_int_distribution<int> d(-2, 2);
  std::vector<std::vector<long long>> rows(cod.dim(), std::vector<long long>(dom.dim()));
  for (auto& r : rows) {
    for (auto& v : r) v = d(rng);
  }
  return LinMap::from_ints(dom, cod, f, rows);
}

}  // namespace

TEST_CASE("scalar field axioms on seeded triples") {
  for (const Field f : {Field::rational(), Field::prime(5), Field::prime(7)}) {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
      Scalar a = random_scalar(rng, f);
      Scalar b = random_scalar(rng, f);
      Scalar c = random_scalar(rng, f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a + f.zero() == a);
      CHECK(a * f.one() == a);
      CHECK(a + (-a) == f.zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
    }
  }
}

TEST_CASE("scalar parsing and errors") {
  CHECK(Q.parse("6/4") == Q.from_fraction(3, 2));
  CHECK(Q.parse("-3") == Q.from_int(-3));
  CHECK(Field::prime(5).parse("-1") == Field::prime(5).from_int(4));
  CHECK_THROWS_AS(Q.parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Q.parse("abc"), ScalarParseError);
  CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
  CHECK_THROWS_AS(Q.one() + Field::prime(5).one(), FieldMismatch);
  CHECK_THROWS_AS(Q.zero().inverse(), DivisionByZero);
  CHECK(Field::prime(5).from_int(2).pow(4).is_one());
}

TEST_CASE("rationals past the int64 range stay exact") {
  const long big = 3037000499L;  // floor(sqrt(2^63 - 1))
  Scalar x = Q.from_int(big);
  Scalar sq = x * x * x;
  CHECK(sq.rational_value() == mpq_class(mpz_class(big) * big * big));
  CHECK(sq / x / x == x);
  CHECK((sq - sq).is_zero());
  Scalar top = Q.from_int(9223372036854775807LL);
  CHECK((top + Q.one()).to_string() == "9223372036854775808");
  CHECK((top + Q.one() - Q.one()) == top);
  CHECK(-(top + Q.one()) + Q.one() == -top);
  Scalar tiny = Q.one() / (top + Q.one());
  CHECK((tiny * (top + Q.one())).is_one());
  CHECK(Q.parse("-18446744073709551616/4") == Q.parse("-4611686018427387904"));
  CHECK(Q.from_fraction(6, -4).to_string() == "-3/2");
  CHECK(Q.from_fraction(6, -4).inverse() == Q.from_fraction(-2, 3));
}

TEST_CASE("compose swaps rows") {
  Space v = Space::generator("V", 2);
  LinMap swap = mat(v, v, {{0, 1}, {1, 0}});
  LinMap m = mat(v, v, {{1, 2}, {3, 4}});
  CHECK(compose(swap, m) == mat(v, v, {{3, 4}, {1, 2}}));
}

TEST_CASE("Kronecker product layout") {
  Space v = Space::generator("V", 2);
  Space w = Space::generator("W", 2);
  LinMap k = tensor_map(mat(v, v, {{1, 1}, {0, 1}}), mat(w, w, {{0, 1}, {1, 0}}));
  CHECK(k == mat(v * w, v * w, {{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
}

TEST_CASE("compose rejects structurally different labels") {
  Space v = Space::generator("V", 2);
  Space w = Space::generator("W", 2);
  CHECK_THROWS_AS(compose(LinMap::identity(w, Q), LinMap::identity(v, Q)), DimensionMismatch);
  CHECK_THROWS_AS(first_difference(LinMap::identity(w, Q), LinMap::identity(v, Q)), DimensionMismatch);
}

TEST_CASE("interchange law for tensor and compose") {
  std::mt19937_64 rng(7);
  Space a = Space::generator("A", 2), b = Space::generator("B", 3), c = Space::generator("C", 2);
  Space x = Space::generator("X", 3), y = Space::generator("Y", 2), z = Space::generator("Z", 1);
  for (int i = 0; i < 10; ++i) {
    LinMap f = random_map(rng, a, b, Q), g = random_map(rng, b, c, Q);
    LinMap h = random_map(rng, x, y, Q), k = random_map(rng, y, z, Q);
    CHECK(compose(tensor_map(g, k), tensor_map(f, h)) == tensor_map(compose(g, f), compose(k, h)));
  }
}

TEST_CASE("curry of evaluation is the identity and uncurry inverts curry") {
  Space v = Space::generator("V", 2), w = Space::generator("W", 3);
  LinMap ev = evaluation(v, w, Q);
  CHECK(ev.dom() == Space::hom(v, w) * v);
  CHECK(curry(ev, v) == LinMap::identity(Space::hom(v, w), Q));

  std::mt19937_64 rng(3);
  Space x = Space::generator("X", 2);
  LinMap f = random_map(rng, x * v, w, Q);
  LinMap cf = curry(f, v);
  CHECK(uncurry(cf) == f);
  // ev ∘ (curry(f) ⊗ 1) = f
  CHECK(compose(ev, tensor_map(cf, LinMap::identity(v, Q))) == f);
  CHECK_THROWS_AS(curry(f, w), NotATensorDomain);
}

TEST_CASE("hom functor composes contravariantly in the first slot") {
  std::mt19937_64 rng(11);
  Space v = Space::generator("V", 2), v2 = Space::generator("V2", 3), w = Space::generator("W", 2),
        w2 = Space::generator("W2", 2);
  LinMap pre = random_map(rng, v2, v, Q);
  LinMap post = random_map(rng, w, w2, Q);
  LinMap phi = random_map(rng, v, w, Q);
  // Encode phi as a vector of Hom(V, W) via curry over K.
  LinMap name = curry(phi.relabel(Space::unit() * v, w), v);
  LinMap image = compose(hom_map(pre, post), name);
  LinMap expect = curry(path({pre, phi, post}), v2);
  CHECK(image == expect);
}

TEST_CASE("permute factors and inverse") {
  Space a = Space::generator("A", 2), b = Space::generator("B", 3), c = Space::generator("C", 2);
  LinMap p = permute_factors({a, b, c}, {2, 0, 1}, Q);
  CHECK(p.cod() == c * a * b);
  LinMap back = permute_factors({c, a, b}, {1, 2, 0}, Q);
  CHECK(compose(back, p).is_identity());
  auto inv = p.inverse();
  REQUIRE(inv.has_value());
  CHECK(*inv == back);

  std::mt19937_64 rng(5);
  Space v = Space::generator("V", 4);
  for (int i = 0; i < 20; ++i) {
    LinMap m = random_map(rng, v, v, Field::prime(7));
    auto mi = m.inverse();
    if (mi) CHECK(compose(*mi, m).is_identity());
  }
  CHECK_FALSE(mat(Space::generator("U", 2), Space::generator("U", 2), {{1, 2}, {2, 4}}).inverse());
}

TEST_CASE("first difference reports column-major position") {
  Space v = Space::generator("V", 2);
  auto d = first_difference(mat(v, v, {{1, 0}, {0, 1}}), mat(v, v, {{1, 0}, {5, 1}}));
  REQUIRE(d.has_value());
  CHECK(d->row == 1);
  CHECK(d->col == 0);
  CHECK(d->lhs == Q.zero());
  CHECK(d->rhs == Q.from_int(5));
}
