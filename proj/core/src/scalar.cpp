#include "skewverify/scalar.hpp"

#include <charconv>
#include <limits>

namespace skewverify {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t reduce_signed(long long v, std::uint64_t p) {
  long long m = v % static_cast<long long>(p);
  if (m < 0) m += static_cast<long long>(p);
  return static_cast<std::uint64_t>(m);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1U) acc = acc * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return acc;
}

long long parse_integer(std::string_view text) {
  long long v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ScalarParseError("not an integer literal: '" + std::string(text) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

using i128 = __int128;
using u128 = unsigned __int128;
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Reduces n/d (d > 0) and stores it when both parts fit.
bool reduce_into(i128 n, i128 d, std::int64_t& num, std::int64_t& den) {
  u128 g = gcd128(n < 0 ? -static_cast<u128>(n) : static_cast<u128>(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (n < -kMax || n > kMax || d > kMax) return false;
  num = static_cast<std::int64_t>(n);
  den = static_cast<std::int64_t>(d);
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32U) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic must be a prime below 2^32, got " +
                                std::to_string(p));
  }
  return Field{p};
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (is_rational()) {
    if (v < -kMax) return Scalar::rational(mpq_class(static_cast<long>(v)));
    return Scalar(*this, Scalar::Small{v, 1});
  }
  return Scalar(*this, reduce_signed(v, p_));
}

Scalar Field::from_fraction(long long num, long long den) const {
  if (den == 0) throw DivisionByZero("zero denominator");
  return from_int(num) / from_int(den);
}

Scalar Field::parse(std::string_view text) const {
  text = trim(text);
  if (text.empty()) throw ScalarParseError("empty scalar literal");
  if (is_rational()) {
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    auto slash = s.find('/');
    auto valid_int = [](const std::string& part) {
      std::size_t i = (!part.empty() && part.front() == '-') ? 1 : 0;
      if (i == part.size()) return false;
      for (; i < part.size(); ++i) {
        if (part[i] < '0' || part[i] > '9') return false;
      }
      return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
      throw ScalarParseError("not a rational literal: '" + std::string(text) + "'");
    }
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
    return Scalar::rational(mpq_class(n, d));
  }
  return from_int(parse_integer(text));
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(p_);
}

Scalar Scalar::rational(mpq_class q) {
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() >= -kMax) {
    return Scalar(Field::rational(), Small{n.get_si(), d.get_si()});
  }
  Scalar out;
  out.value_ = std::move(q);
  return out;
}

mpq_class Scalar::to_mpq() const {
  if (const auto* s = std::get_if<Small>(&value_)) {
    mpq_class q;
    mpq_set_si(q.get_mpq_t(), s->num, static_cast<unsigned long>(s->den));
    return q;
  }
  return std::get<mpq_class>(value_);
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_) {
    throw FieldMismatch("arithmetic across fields " + field_.name() + " and " + o.field_.name());
  }
}

bool Scalar::is_zero() const {
  if (const auto* s = std::get_if<Small>(&value_)) return s->num == 0;
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* s = std::get_if<Small>(&value_)) return s->num == 1 && s->den == 1;
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::operator-() const {
  if (const auto* s = std::get_if<Small>(&value_)) return Scalar(field_, Small{-s->num, s->den});
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) {
    return Scalar(field_, *r == 0 ? 0 : field_.characteristic() - *r);
  }
  return rational(-std::get<mpq_class>(value_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (!field_.is_rational()) {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + std::get<std::uint64_t>(o.value_)) % field_.characteristic();
    return *this;
  }
  auto* a = std::get_if<Small>(&value_);
  const auto* b = std::get_if<Small>(&o.value_);
  if (a != nullptr && b != nullptr) {
    if (a->den == 1 && b->den == 1) {
      std::int64_t n = 0;
      if (!__builtin_add_overflow(a->num, b->num, &n) && n >= -kMax) {
        a->num = n;
        return *this;
      }
    }
    i128 n = static_cast<i128>(a->num) * b->den + static_cast<i128>(b->num) * a->den;
    i128 d = static_cast<i128>(a->den) * b->den;
    if (reduce_into(n, d, a->num, a->den)) return *this;
  }
  *this = rational(to_mpq() + o.to_mpq());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (!field_.is_rational()) {
    auto& r = std::get<std::uint64_t>(value_);
    r = r * std::get<std::uint64_t>(o.value_) % field_.characteristic();
    return *this;
  }
  auto* a = std::get_if<Small>(&value_);
  const auto* b = std::get_if<Small>(&o.value_);
  if (a != nullptr && b != nullptr) {
    if (a->den == 1 && b->den == 1) {
      std::int64_t n = 0;
      if (!__builtin_mul_overflow(a->num, b->num, &n) && n >= -kMax) {
        a->num = n;
        return *this;
      }
    }
    i128 n = static_cast<i128>(a->num) * b->num;
    i128 d = static_cast<i128>(a->den) * b->den;
    if (reduce_into(n, d, a->num, a->den)) return *this;
  }
  *this = rational(to_mpq() * o.to_mpq());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (const auto* s = std::get_if<Small>(&value_)) {
    return s->num < 0 ? Scalar(field_, Small{-s->den, -s->num}) : Scalar(field_, Small{s->den, s->num});
  }
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) {
    auto p = field_.characteristic();
    return Scalar(field_, mod_pow(*r, p - 2, p));
  }
  return rational(1 / std::get<mpq_class>(value_));
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc = field_.one();
  Scalar base = *this;
  auto n = static_cast<unsigned long long>(e);
  while (n > 0) {
    if (n & 1U) acc *= base;
    base *= base;
    n >>= 1U;
  }
  return acc;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  if (!a.field_.is_rational()) return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
  const auto* x = std::get_if<Scalar::Small>(&a.value_);
  const auto* y = std::get_if<Scalar::Small>(&b.value_);
  if (x != nullptr && y != nullptr) return x->num == y->num && x->den == y->den;
  if (x == nullptr && y == nullptr) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return false;
}

std::string Scalar::to_string() const {
  if (const auto* s = std::get_if<Small>(&value_)) {
    return s->den == 1 ? std::to_string(s->num) : std::to_string(s->num) + "/" + std::to_string(s->den);
  }
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

mpq_class Scalar::rational_value() const {
  if (!field_.is_rational()) throw FieldMismatch("rational_value() on a prime-field scalar");
  return to_mpq();
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw FieldMismatch("residue() on a rational scalar");
  return std::get<std::uint64_t>(value_);
}

}  // namespace skewverify
