#pragma once

// Dense reference arithmetic, independent of the library's sparse
// elimination and GMP-backed scalars. Over Q entries are boost cpp_rational;
// over F_p they are plain residues.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "whq/mor.hpp"
#include "whq/scalar.hpp"

namespace oracle {

using Rat = boost::multiprecision::cpp_rational;

/// An element of Q or F_p (p > 0): value is a rational, reduced into [0, p)
/// whenever p > 0.
struct Elt {
  Rat v;
  std::uint64_t p = 0;

  Elt() = default;
  Elt(Rat x, std::uint64_t prime) : v(std::move(x)), p(prime) { normalize(); }

  void normalize() {
    if (p == 0) return;
    using boost::multiprecision::cpp_int;
    cpp_int num = boost::multiprecision::numerator(v) % p;
    cpp_int den = boost::multiprecision::denominator(v) % p;
    if (num < 0) num += p;
    if (den < 0) den += p;
    // den^(p-2) by square and multiply.
    cpp_int inv = 1, base = den, e = p - 2;
    while (e > 0) {
      if ((e & 1) != 0) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    v = Rat(num * inv % p);
  }

  bool is_zero() const { return v == 0; }
  friend Elt operator+(const Elt& a, const Elt& b) { return Elt(a.v + b.v, a.p); }
  friend Elt operator-(const Elt& a, const Elt& b) { return Elt(a.v - b.v, a.p); }
  friend Elt operator*(const Elt& a, const Elt& b) { return Elt(a.v * b.v, a.p); }
  friend Elt operator/(const Elt& a, const Elt& b) {
    if (a.p == 0) return Elt(a.v / b.v, 0);
    Elt inv(Rat(1) / b.v, a.p);
    return a * inv;
  }
  friend bool operator==(const Elt& a, const Elt& b) { return a.v == b.v; }
};

/// Row-major dense matrix.
struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint64_t p = 0;
  std::vector<Elt> a;

  Dense(std::size_t r, std::size_t c, std::uint64_t prime) : rows(r), cols(c), p(prime), a(r * c, Elt(0, prime)) {}
  Elt& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Elt& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

inline Rat to_rat(const whq::Scalar& s) { return Rat(s.to_string()); }

inline Dense from_mor(const whq::Mor& m) {
  Dense d(m.dst(), m.src(), m.field().characteristic());
  for (std::size_t j = 0; j < m.src(); ++j)
    for (const whq::Entry& e : m.column(j)) d(e.index, j) = Elt(to_rat(e.value), d.p);
  return d;
}

inline whq::Mor to_mor(const Dense& d) {
  const whq::Field f = d.p == 0 ? whq::Field::rationals() : whq::Field::prime(d.p);
  std::vector<std::vector<whq::Scalar>> rows(d.rows, std::vector<whq::Scalar>(d.cols, whq::Scalar::zero(f)));
  for (std::size_t i = 0; i < d.rows; ++i)
    for (std::size_t j = 0; j < d.cols; ++j) {
      std::ostringstream ss;
      ss << d(i, j).v;
      rows[i][j] = whq::Scalar::parse(f, ss.str());
    }
  return whq::Mor::from_dense(f, d.cols, rows);
}

inline Dense mul(const Dense& x, const Dense& y) {
  Dense z(x.rows, y.cols, x.p);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < y.cols; ++j) z(i, j) = z(i, j) + x(i, k) * y(k, j);
    }
  return z;
}

inline Dense kron(const Dense& x, const Dense& y) {
  Dense z(x.rows * y.rows, x.cols * y.cols, x.p);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j)
      for (std::size_t k = 0; k < y.rows; ++k)
        for (std::size_t l = 0; l < y.cols; ++l) z(i * y.rows + k, j * y.cols + l) = x(i, j) * y(k, l);
  return z;
}

/// Rank by textbook Gaussian elimination on a copy.
inline std::size_t rank(Dense m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(r, j), m(piv, j));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (m(i, c).is_zero()) continue;
      const Elt factor = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) = m(i, j) - factor * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Gauss-Jordan inverse; returns false if singular.
inline bool inverse(Dense m, Dense& out) {
  const std::size_t n = m.rows;
  out = Dense(n, n, m.p);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Elt(1, m.p);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return false;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(c, j), m(piv, j));
      std::swap(out(c, j), out(piv, j));
    }
    const Elt d = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) = m(c, j) / d;
      out(c, j) = out(c, j) / d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c).is_zero()) continue;
      const Elt f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = m(i, j) - f * m(c, j);
        out(i, j) = out(i, j) - f * out(c, j);
      }
    }
  }
  return true;
}

inline Dense random_dense(std::mt19937_64& rng, std::size_t r, std::size_t c, std::uint64_t p, double density = 0.5,
                          int range = 3) {
  Dense d(r, c, p);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> val(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  for (auto& e : d.a)
    if (coin(rng) < density) e = Elt(p == 0 ? Rat(val(rng)) / den(rng) : Rat(val(rng)), p);
  return d;
}

/// A matrix of the given rank: a product of random r x k and k x c factors,
/// retried until the rank is exactly k.
inline Dense random_of_rank(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t k, std::uint64_t p) {
  for (;;) {
    Dense d = mul(random_dense(rng, r, k, p, 0.7), random_dense(rng, k, c, p, 0.7));
    if (rank(d) == k) return d;
  }
}

}  // namespace oracle
