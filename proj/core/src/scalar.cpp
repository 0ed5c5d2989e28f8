#include "whq/scalar.hpp"

#include <limits>

#include "whq/errors.hpp"

namespace whq {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs(i128 v) { return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  std::uint64_t x = a < 0 ? -static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
  std::uint64_t y = b < 0 ? -static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
  while (y != 0) {
    std::uint64_t t = x % y;
    x = y;
    y = t;
  }
  return static_cast<std::int64_t>(x);
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class mpz_from_i128(i128 v) {
  const u128 u = uabs(v);
  mpz_class r(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  r <<= 64;
  r += static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  if (v < 0) r = -r;
  return r;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

void require_same(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field()))
    throw FieldMismatch("scalar arithmetic across fields " + a.field().name() + " and " +
                        b.field().name());
}

bool valid_integer_text(std::string_view t) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') return false;
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p > kMaxPrime) throw Error("field characteristic " + std::to_string(p) + " is too large");
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Scalar Scalar::zero(const Field& f) noexcept {
  Scalar s;
  s.p_ = f.characteristic();
  return s;
}

Scalar Scalar::one(const Field& f) noexcept {
  Scalar s = zero(f);
  s.num_ = 1;
  return s;
}

Scalar Scalar::from_int(const Field& f, std::int64_t v) {
  if (f.is_rational()) {
    Scalar s;
    s.num_ = v;
    return s;
  }
  const auto p = static_cast<std::int64_t>(f.characteristic());
  Scalar s = zero(f);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  s.num_ = r;
  return s;
}

Scalar Scalar::from_fraction(const Field& f, std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero();
  if (f.is_rational()) return from_i128(num, den);
  return from_int(f, num) / from_int(f, den);
}

Scalar Scalar::from_mpq(const Field& f, const mpq_class& q) {
  if (f.is_rational()) return normalize_big(q);
  const std::uint64_t p = f.characteristic();
  const std::uint64_t d = reduce_mod(q.get_den(), p);
  if (d == 0) throw DivisionByZero();
  Scalar s = zero(f);
  s.num_ = static_cast<std::int64_t>(reduce_mod(q.get_num(), p) * pow_mod(d, p - 2, p) % p);
  return s;
}

Scalar Scalar::from_i128(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Scalar();
  const u128 g = gcd128(uabs(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (fits64(num) && fits64(den)) {
    Scalar s;
    s.num_ = static_cast<std::int64_t>(num);
    s.den_ = static_cast<std::int64_t>(den);
    return s;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  Scalar s;
  s.big_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

Scalar Scalar::normalize_big(mpq_class q) {
  q.canonicalize();
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    Scalar s;
    s.num_ = q.get_num().get_si();
    s.den_ = q.get_den().get_si();
    return s;
  }
  Scalar s;
  s.big_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  const std::size_t slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed scalar \"" + std::string(text) + "\"");
  auto strip = [](std::string_view t) {
    return std::string(t[0] == '+' ? t.substr(1) : t);
  };
  mpz_class n(strip(num), 10);
  mpz_class d(strip(den), 10);
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  try {
    return from_mpq(f, mpq_class(n, d));
  } catch (const DivisionByZero&) {
    throw ParseError("denominator of \"" + std::string(text) + "\" vanishes in " + f.name());
  }
}

Field Scalar::field() const noexcept {
  return Field(p_);
}

bool Scalar::is_zero() const noexcept { return !big_ && num_ == 0; }

bool Scalar::is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }

std::string Scalar::to_string() const {
  if (big_) return big_->get_str(10);
  if (p_ != 0 || den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Scalar Scalar::convert(const Field& f) const {
  if (f == field()) return *this;
  if (p_ == 0) return from_mpq(f, to_mpq());
  throw FieldMismatch("cannot convert " + field().name() + " scalar to " + f.name());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (big_) {
    r.big_ = std::make_shared<const mpq_class>(-*big_);
  } else if (p_ != 0) {
    r.num_ = num_ == 0 ? 0 : static_cast<std::int64_t>(p_) - num_;
  } else if (num_ == std::numeric_limits<std::int64_t>::min()) {
    return from_i128(-static_cast<i128>(num_), den_);
  } else {
    r.num_ = -num_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (p_ != 0) {
    Scalar r = *this;
    r.num_ = static_cast<std::int64_t>(pow_mod(static_cast<std::uint64_t>(num_), p_ - 2, p_));
    return r;
  }
  if (big_) return normalize_big(1 / *big_);
  return from_i128(den_, num_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.p_ != 0) {
    Scalar r = a;
    r.num_ = static_cast<std::int64_t>((static_cast<std::uint64_t>(a.num_) +
                                        static_cast<std::uint64_t>(b.num_)) %
                                       a.p_);
    return r;
  }
  if (a.big_ || b.big_) return Scalar::normalize_big(a.to_mpq() + b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) return Scalar::from_i128(static_cast<i128>(a.num_) + b.num_, 1);
  return Scalar::from_i128(
                           static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                           static_cast<i128>(a.den_) * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.p_ != 0) {
    Scalar r = a;
    r.num_ = static_cast<std::int64_t>(static_cast<std::uint64_t>(a.num_) *
                                       static_cast<std::uint64_t>(b.num_) % a.p_);
    return r;
  }
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (a.big_ || b.big_) return Scalar::normalize_big(a.to_mpq() * b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) return Scalar::from_i128(static_cast<i128>(a.num_) * b.num_, 1);
  const std::int64_t g1 = gcd64(a.num_, b.den_);
  const std::int64_t g2 = gcd64(b.num_, a.den_);
  return Scalar::from_i128(static_cast<i128>(a.num_ / g1) * (b.num_ / g2),
                           static_cast<i128>(a.den_ / g2) * (b.den_ / g1));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace whq
