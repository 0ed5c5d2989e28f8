#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace whq {

/// The ground field: either the rationals or a prime field F_p.
class Field {
 public:
  /// Largest accepted characteristic; residues multiply without overflow in 64 bits.
  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 32) - 1;

  static Field rationals() noexcept { return Field(0); }
  /// Throws whq::Error unless `p` is a prime not exceeding kMaxPrime.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }

  /// "Q" or "F_p".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) noexcept : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/// An exact element of a Field.
///
/// Rationals are kept in canonical form (positive denominator, coprime
/// numerator and denominator). Values that fit in 64-bit words use an inline
/// representation; larger ones fall back to a shared immutable GMP rational.
class Scalar {
 public:
  /// Rational zero.
  Scalar() noexcept = default;

  static Scalar zero(const Field& f) noexcept;
  static Scalar one(const Field& f) noexcept;
  static Scalar from_int(const Field& f, std::int64_t v);
  /// Rational num/den; `den` must be nonzero. In F_p the quotient is reduced.
  static Scalar from_fraction(const Field& f, std::int64_t num, std::int64_t den);
  static Scalar from_mpq(const Field& f, const mpq_class& q);

  /// Parses "a", "-a" or "a/b". Throws ParseError on malformed input.
  static Scalar parse(const Field& f, std::string_view text);

  Field field() const noexcept;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Canonical text: "a" or "a/b" over Q, the residue in [0, p) over F_p.
  std::string to_string() const;
  mpq_class to_mpq() const;
  /// Image in `f`. Identity when `f` equals the current field; Q -> F_p reduces
  /// (throws DivisionByZero if p divides a denominator). Other conversions throw.
  Scalar convert(const Field& f) const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  static Scalar from_i128(__int128 num, __int128 den);
  static Scalar normalize_big(mpq_class q);

  // Over F_p only `num_` is used and holds the residue.
  std::uint64_t p_ = 0;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace whq
