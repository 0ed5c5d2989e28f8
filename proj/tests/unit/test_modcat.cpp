#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "whq/errors.hpp"
#include "whq/generators.hpp"
#include "whq/hopfmod.hpp"
#include "whq/modcat.hpp"

using namespace whq;

namespace {

const Field Q = Field::rationals();

ContextPtr ctx_of(const char* name) { return Context::make(named_fixture(name, Q)); }

}  // namespace

TEST_SUITE("modcat") {
  TEST_CASE("right H_L-modules") {
    for (const char* name : {"s3", "discrete-3", "pair-2", "flagship"}) {
      CAPTURE(name);
      const ContextPtr c = ctx_of(name);
      CHECK(check_right_module(regular_hl_module(c)));
      CHECK(check_right_module(h_as_hl_module(c)));
      CHECK(check_right_module(free_hl_module(c, 2)));
      CHECK(free_hl_module(c, 1).action() == regular_hl_module(c).action());
      for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(check_right_module(random_hl_module(c, seed)));
    }
  }

  TEST_CASE("random actions are rarely module structures") {
    const ContextPtr c = ctx_of("pair-2");
    std::mt19937_64 rng(8);
    int rejected = 0;
    for (int t = 0; t < 20; ++t) {
      const RightHLModule n(c, oracle::to_mor(oracle::random_dense(rng, 2, 2 * c->r(), 0)));
      rejected += check_right_module(n) ? 0 : 1;
    }
    CHECK(rejected >= 18);
  }

  TEST_CASE("induction") {
    const ContextPtr c = ctx_of("pair-2");
    const InducedModule reg = induce(regular_hl_module(c));
    CHECK(reg.dim() == c->n());
    CHECK(reg.evidence.passed());
    CHECK(reg.evidence.find("(coequalizer-tensor-preservation)") != nullptr);
    CHECK(reg.evidence.find("(idem-strong)") != nullptr);

    const InducedModule zero = induce(RightHLModule(c, Mor(Q, 0, 0)));
    CHECK(zero.dim() == 0);

    const InducedModule f2 = induce(free_hl_module(c, 2));
    CHECK(f2.dim() == 2 * reg.dim());

    // n_N coequalizes psi (x) H and N (x) phi_H.
    const RightHLModule n = random_hl_module(c, 4);
    const InducedModule fn = induce(n);
    const Mor lhs = compose(fn.n(), kron(n.action(), Mor::identity(Q, c->n())));
    const Mor rhs = compose(fn.n(), kron(Mor::identity(Q, n.dim()), c->phi_h()));
    CHECK(lhs == rhs);

    const RightHLModule broken(c, Scalar::from_int(Q, 2) * regular_hl_module(c).action());
    CHECK_THROWS_AS(induce(broken), LawFailure);
  }

  TEST_CASE("induced morphisms") {
    const ContextPtr c = ctx_of("pair-2");
    const InducedModule one = induce(regular_hl_module(c));
    const InducedModule two = induce(free_hl_module(c, 2));
    CHECK(induce_morphism(Mor::identity(Q, c->r()), one, one) == Mor::identity(Q, one.dim()));
    CHECK(induce_morphism(Mor(Q, c->r(), c->r()), one, one).is_zero());
    const Mor proj = induce_morphism(free_projection(c, 2, 1), two, one);
    const Mor incl = induce_morphism(free_inclusion(c, 2, 1), one, two);
    CHECK(compose(proj, incl) == Mor::identity(Q, one.dim()));
    CHECK(is_hopf_module_morphism(proj, two.hopf, one.hopf));
    // Exchanging the two basis vectors of H_L = k^2 does not commute with the action.
    const Mor skew = Mor::from_ints(Q, {{0, 1}, {1, 0}});
    CHECK_FALSE(is_hl_linear(skew, regular_hl_module(c), regular_hl_module(c)));
    CHECK_THROWS_AS(induce_morphism(skew, one, one), NotEquivariant);
  }

  TEST_CASE("coinvariant functor") {
    const ContextPtr c = ctx_of("flagship");
    const RightHLModule g = coinv_functor(regular_hopf_module(c));
    CHECK(g.dim() == c->r());
    CHECK(g.action() == c->left.monoid.mul());
    CHECK(check_right_module(g));

    const InducedModule f = induce(random_hl_module(c, 9));
    CHECK(coinv_functor(f.hopf).dim() == random_hl_module(c, 9).dim());

    const HopfModule reg = regular_hopf_module(c);
    const HopfModule bad(c, Scalar::from_int(Q, 2) * reg.action(), reg.coaction());
    CHECK_THROWS_AS(coinv_functor(bad), NotStrong);
  }

  TEST_CASE("coinvariants of morphisms") {
    const ContextPtr c = ctx_of("pair-2");
    const HopfModule m = regular_hopf_module(c);
    CHECK(coinv_morphism(Mor::identity(Q, m.dim()), m, m) == Mor::identity(Q, c->r()));
    const CertifiedIso a = fundamental_theorem(m);
    const HopfModule x = cross_object(m).module;
    const Mor ga = coinv_morphism(a.forward, m, x);
    const Mor gb = coinv_morphism(a.backward, x, m);
    CHECK(compose(gb, ga) == Mor::identity(Q, c->r()));
    const Mor bent = Mor::identity(Q, 4) + Mor::from_ints(Q, {{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    CHECK_THROWS_AS(coinv_morphism(bent, m, m), NotMorphism);
  }

  TEST_CASE("the comparison isomorphism s_M") {
    for (const char* name : {"s3", "pair-2", "flagship"}) {
      CAPTURE(name);
      const ContextPtr c = ctx_of(name);
      for (const HopfModule& m : {regular_hopf_module(c), induce(random_hl_module(c, 2)).hopf}) {
        const SIso s = s_iso(m);
        CHECK(s.evidence.passed());
        CHECK(compose(s.s_inv, s.s) == Mor::identity(Q, s.induced.dim()));
        CHECK(compose(s.s, s.s_inv) == Mor::identity(Q, s.cross.dim()));
        CHECK(compose(s.s, s.induced.n()) == s.cross.split.p);
      }
    }
    const ContextPtr c = ctx_of("pair-2");
    const SIso z = s_iso(HopfModule(c, Mor(Q, 0, 0), Mor(Q, 0, 0)));
    CHECK(z.s.src() == 0);
  }

  TEST_CASE("equivalence certificates") {
    for (const char* name : {"s3", "discrete-3", "flagship"}) {
      CAPTURE(name);
      const ContextPtr c = ctx_of(name);
      const std::vector<RightHLModule> ns{regular_hl_module(c), free_hl_module(c, 2), h_as_hl_module(c),
                                          random_hl_module(c, 1)};
      const std::vector<HopfModule> ms{regular_hopf_module(c), induce(ns[1]).hopf, induce(ns[3]).hopf};
      const std::vector<SampleMorphism> fs{{1, 0, free_projection(c, 2, 0)}, {0, 1, free_inclusion(c, 2, 1)}};
      const std::vector<SampleHopfMorphism> gs{{0, 0, Mor::identity(Q, c->n())}};
      const EquivalenceCertificate cert = certify_equivalence(c, ns, ms, fs, gs);
      if (const Check* bad = cert.evidence.first_failure()) FAIL(bad->label << " " << bad->detail);
      CHECK(cert.units.size() == ns.size());
      CHECK(cert.counits.size() == ms.size());
      for (std::size_t k = 0; k < ns.size(); ++k) {
        CHECK(compose(cert.units[k].u, cert.units[k].x) == Mor::identity(Q, cert.units[k].u.dst()));
        CHECK(compose(cert.units[k].x, cert.units[k].u) == Mor::identity(Q, ns[k].dim()));
      }
      for (std::size_t k = 0; k < ms.size(); ++k)
        CHECK(compose(cert.counits[k].v, cert.counits[k].v_inv) == Mor::identity(Q, ms[k].dim()));
    }
  }

  TEST_CASE("a non-H_L-linear sample morphism is rejected") {
    const ContextPtr c = ctx_of("pair-2");
    const std::vector<RightHLModule> ns{regular_hl_module(c)};
    CHECK_THROWS_AS(certify_equivalence(c, ns, {}, {SampleMorphism{0, 0, Mor::from_ints(Q, {{0, 1}, {1, 0}})}}),
                    NotEquivariant);
  }
}
