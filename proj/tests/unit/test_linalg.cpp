#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "whq/errors.hpp"
#include "whq/linalg.hpp"

using namespace whq;

namespace {

constexpr int kSamples = 200;
constexpr std::size_t kMaxDim = 8;

Field field_of(std::uint64_t p) { return p == 0 ? Field::rationals() : Field::prime(p); }

/// e = X (Y X)^{-1} Y for random X (n x k), Y (k x n); idempotent of rank k.
Mor random_idempotent(std::mt19937_64& rng, std::size_t n, std::size_t k, std::uint64_t p) {
  for (;;) {
    const oracle::Dense x = oracle::random_dense(rng, n, k, p, 0.6);
    const oracle::Dense y = oracle::random_dense(rng, k, n, p, 0.6);
    oracle::Dense yx_inv(0, 0, p);
    if (!oracle::inverse(oracle::mul(y, x), yx_inv)) continue;
    return oracle::to_mor(oracle::mul(x, oracle::mul(yx_inv, y)));
  }
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rank agrees with textbook elimination") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::size_t> dim(0, kMaxDim);
    for (std::uint64_t p : {0ULL, 7ULL})
      for (int t = 0; t < kSamples; ++t) {
        const std::size_t r = dim(rng), c = dim(rng);
        const oracle::Dense d = oracle::random_dense(rng, r, c, p, 0.4);
        const Mor m = oracle::to_mor(d);
        CHECK(rank(m) == oracle::rank(d));
        CHECK(rank(m.transpose()) == oracle::rank(d));
      }
  }

  TEST_CASE("row echelon form does not depend on insertion order") {
    std::mt19937_64 rng(2);
    const Field q = Field::rationals();
    for (int t = 0; t < 50; ++t) {
      const Mor m = oracle::to_mor(oracle::random_of_rank(rng, 6, 5, 3, 0));
      const Rref a = row_echelon(m);
      std::vector<std::size_t> perm{5, 4, 3, 2, 1, 0};
      Rref b(q, 5);
      const Mor mt = m.transpose();
      for (std::size_t i : perm) {
        SparseVec row(mt.column(i).begin(), mt.column(i).end());
        b.insert(row);
      }
      CHECK(a.pivots() == b.pivots());
      CHECK(a.rows() == b.rows());
    }
  }

  TEST_CASE("split idempotent") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> dim(1, kMaxDim);
    for (std::uint64_t p : {0ULL, 7ULL}) {
      const Field f = field_of(p);
      for (int t = 0; t < kSamples; ++t) {
        const std::size_t n = dim(rng);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(0, n)(rng);
        const Mor e = random_idempotent(rng, n, k, p);
        REQUIRE(compose(e, e) == e);
        const SplitIdempotent s = split_idempotent(e);
        CHECK(s.rank == k);
        CHECK(compose(s.i, s.p) == e);
        CHECK(compose(s.p, s.i) == Mor::identity(f, k));
      }
    }
    const Mor bad = Mor::from_ints(Field::rationals(), {{1, 1}, {0, 2}});
    CHECK_THROWS_AS(split_idempotent(bad), NotIdempotent);
  }

  TEST_CASE("equalizer") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::size_t> dim(0, kMaxDim);
    for (std::uint64_t p : {0ULL, 7ULL}) {
      const Field f = field_of(p);
      for (int t = 0; t < kSamples; ++t) {
        const std::size_t s = dim(rng), d = dim(rng);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(0, std::min(s, d))(rng);
        const oracle::Dense fd = oracle::random_dense(rng, d, s, p);
        const oracle::Dense diff = oracle::random_of_rank(rng, d, s, k, p);
        oracle::Dense gd = fd;
        for (std::size_t i = 0; i < gd.a.size(); ++i) gd.a[i] = fd.a[i] - diff.a[i];
        const Mor fm = oracle::to_mor(fd), gm = oracle::to_mor(gd);
        const EqualizerDatum eq = equalizer(fm, gm);
        CHECK(eq.inclusion.src() == s - k);
        CHECK(compose(fm, eq.inclusion) == compose(gm, eq.inclusion));
        CHECK(compose(eq.retraction, eq.inclusion) == Mor::identity(f, s - k));
        // Universal property: anything equalizing factors uniquely.
        const Mor t1 = compose(eq.inclusion, oracle::to_mor(oracle::random_dense(rng, s - k, 2, p)));
        const auto fac = factor_through(eq, t1);
        REQUIRE(fac.has_value());
        CHECK(compose(eq.inclusion, *fac) == t1);
        if (k > 0) CHECK_FALSE(factor_through(eq, Mor::identity(f, s)).has_value());
      }
    }
  }

  TEST_CASE("coequalizer") {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<std::size_t> dim(0, kMaxDim);
    for (std::uint64_t p : {0ULL, 7ULL}) {
      const Field f = field_of(p);
      for (int t = 0; t < kSamples; ++t) {
        const std::size_t s = dim(rng), d = dim(rng);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(0, std::min(s, d))(rng);
        const oracle::Dense fd = oracle::random_dense(rng, d, s, p);
        const oracle::Dense diff = oracle::random_of_rank(rng, d, s, k, p);
        oracle::Dense gd = fd;
        for (std::size_t i = 0; i < gd.a.size(); ++i) gd.a[i] = fd.a[i] - diff.a[i];
        const Mor fm = oracle::to_mor(fd), gm = oracle::to_mor(gd);
        const CoequalizerDatum co = coequalizer(fm, gm);
        CHECK(co.quotient_dim == d - k);
        CHECK(co.n.src() == d);
        CHECK(compose(co.n, fm) == compose(co.n, gm));
        CHECK(rank(co.n) == d - k);
        CHECK(compose(co.n, co.section) == Mor::identity(f, d - k));
        CHECK(compose(fm - gm, co.witness) + compose(co.section, co.n) == Mor::identity(f, d));
        const Mor t1 = compose(oracle::to_mor(oracle::random_dense(rng, 3, d - k, p)), co.n);
        const auto fac = factor_through(co, t1);
        REQUIRE(fac.has_value());
        CHECK(compose(*fac, co.n) == t1);
        if (k > 0) CHECK_FALSE(factor_through(co, Mor::identity(f, d)).has_value());
        if (t % 20 == 0) CHECK(certifies_tensor_preservation(co, fm, gm, 3));
      }
    }
  }

  TEST_CASE("inverse") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> dim(0, kMaxDim);
    for (std::uint64_t p : {0ULL, 7ULL}) {
      const Field f = field_of(p);
      for (int t = 0; t < kSamples; ++t) {
        const std::size_t n = dim(rng);
        const oracle::Dense d = oracle::random_dense(rng, n, n, p, 0.6);
        oracle::Dense inv(0, 0, p);
        const Mor m = oracle::to_mor(d);
        if (oracle::inverse(d, inv)) {
          CHECK(inverse(m) == oracle::to_mor(inv));
          CHECK(compose(m, inverse(m)) == Mor::identity(f, n));
        } else {
          CHECK_THROWS_AS(inverse(m), NotInvertible);
        }
      }
    }
  }
}
