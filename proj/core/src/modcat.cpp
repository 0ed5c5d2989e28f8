#include "whq/modcat.hpp"

#include <random>
#include <string>

#include "whq/errors.hpp"

namespace whq {

namespace {

void require_same_base(const RightHLModule& a, const RightHLModule& b) {
  if (a.context() != b.context()) throw MismatchedBase("H_L-modules over different weak Hopf quasigroups");
}

void check_shape(const Mor& f, std::size_t src, std::size_t dst) {
  if (f.src() != src) throw DimensionMismatch("morphism: src", src, f.src());
  if (f.dst() != dst) throw DimensionMismatch("morphism: dst", dst, f.dst());
}

std::string failure_detail(const Report& r) {
  const Check* bad = r.first_failure();
  return bad ? bad->label + (bad->detail.empty() ? "" : ": " + bad->detail) : "";
}

}  // namespace

RightHLModule::RightHLModule(ContextPtr ctx, const Mor& action) : ctx_(std::move(ctx)), action_(action) {
  if (!ctx_) throw Error("RightHLModule: missing context");
  const std::size_t d = action.dst();
  if (action.src() != d * ctx_->r()) throw DimensionMismatch("H_L-action: src", d * ctx_->r(), action.src());
  if (!(action.field() == ctx_->field())) throw FieldMismatch("H_L-action over a different field than H");
}

Report right_module_report(const RightHLModule& n) {
  const UnitalMagma& hl = n.context()->left.monoid;
  const Term N = ident(n.dim());
  const Term psi = n.action();
  Report r;
  r.expect_equal("(hl-module-unit)", psi * tensor(N, hl.unit()), Mor::identity(n.context()->field(), n.dim()));
  r.expect_equal("(hl-module-assoc)", psi * tensor(N, hl.mul()), psi * tensor(psi, ident(hl.dim())));
  return r;
}

bool check_right_module(const RightHLModule& n) { return right_module_report(n).passed(); }

bool is_hl_linear(const Mor& f, const RightHLModule& n, const RightHLModule& p) {
  require_same_base(n, p);
  check_shape(f, n.dim(), p.dim());
  return !first_difference(Term(p.action()) * tensor(f, ident(n.context()->r())), Term(f) * n.action());
}

InducedModule induce(const RightHLModule& base) {
  const ContextPtr& ctx = base.context();
  const Field& field = ctx->field();
  const std::size_t d = base.dim();
  const WeakHopfQuasigroup& h = ctx->h;
  const Term N = ident(d);
  const Term I = ident(h.dim());
  Report r;
  r.append(right_module_report(base));
  require(r);

  const Mor f = tensor(base.action(), I).eval(field);
  const Mor g = tensor(N, ctx->phi_h()).eval(field);
  CoequalizerDatum coeq = coequalizer(f, g);
  r.expect("(coequalizer-tensor-preservation)", certifies_tensor_preservation(coeq, f, g, h.dim()),
           "n (x) H is not certified as a coequalizer");
  const Term n = coeq.n;

  const Mor rho_lift = (tensor(n, I) * tensor(N, h.comul())).eval(field);
  const auto rho = factor_through(coeq, rho_lift);
  r.expect("(comodule)", rho.has_value(), "(n (x) H) o (N (x) delta) does not coequalize");
  require(r);

  const Mor phi = (n * tensor(N, h.mul()) * tensor(Term(coeq.section), I)).eval(field);
  r.expect_equal("(quasi-module)", Term(phi) * tensor(n, I), n * tensor(N, h.mul()));
  require(r);

  HopfModule hopf(ctx, phi, *rho);
  r.append(check_hopf_module(hopf));
  require(r);
  r.expect("(c1)", is_strong(hopf));
  const CoinvariantSplit coinv = coinvariants(hopf);
  r.expect_equal("(idem-strong)", Term(coinv.q) * n, n * tensor(N, Term(ctx->pi.pi_l)));
  r.expect_equal("(action-induction)", phi_alpha(hopf, coinv.q), phi);
  require(r);
  return InducedModule{base, std::move(coeq), std::move(hopf), std::move(r)};
}

Mor induce_morphism(const Mor& f, const InducedModule& n, const InducedModule& p) {
  require_same_base(n.base, p.base);
  if (!is_hl_linear(f, n.base, p.base))
    throw NotEquivariant("(mor-induction)", "f is not a morphism of right H_L-modules");
  const Field& field = f.field();
  const Mor lift = (Term(p.n()) * tensor(f, ident(n.hopf.h().dim()))).eval(field);
  const auto fh = factor_through(n.coeq, lift);
  if (!fh) throw LawFailure("(mor-induction)", "n_P o (f (x) H) does not factor through n_N");
  if (!is_hopf_module_morphism(*fh, n.hopf, p.hopf))
    throw LawFailure("(mor-induction)", "f (x)_{H_L} H is not a Hopf-module morphism");
  return *fh;
}

RightHLModule coinv_functor(const HopfModule& m, const CoinvariantSplit& coinv) {
  if (!is_strong(m)) throw NotStrong("phi o ((phi o (M (x) i_L)) (x) H) != phi o (M (x) phi_H)");
  const ContextPtr& ctx = m.context();
  const Mor psi =
      (Term(coinv.p()) * m.action() * tensor(Term(coinv.i()), Term(ctx->left.i()))).eval(ctx->field());
  RightHLModule g(ctx, psi);
  const Report r = right_module_report(g);
  if (!r.passed()) throw LawFailure("(coinvariant-module)", failure_detail(r));
  return g;
}

RightHLModule coinv_functor(const HopfModule& m) {
  if (!is_strong(m)) throw NotStrong("phi o ((phi o (M (x) i_L)) (x) H) != phi o (M (x) phi_H)");
  return coinv_functor(m, coinvariants(m));
}

Mor coinv_morphism(const Mor& g, const HopfModule& m, const HopfModule& t) {
  require_same_base(m, t);
  check_shape(g, m.dim(), t.dim());
  if (!is_hopf_module_morphism(g, m, t))
    throw NotMorphism("(coinv-morphism)", "g is not a morphism of Hopf modules");
  const CoinvariantSplit cm = coinvariants(m);
  const CoinvariantSplit ct = coinvariants(t);
  const Mor gco = compose(ct.p(), compose(g, cm.i()));
  if (compose(ct.i(), gco) != compose(g, cm.i()))
    throw NotMorphism("(coinv-morphism)", "g o i_M does not factor through i_T");
  if (compose(gco, cm.p()) != compose(ct.p(), g))
    throw NotMorphism("(coinv-morphism-1)", "g^coH o p_M != p_T o g");
  if (!is_hl_linear(gco, coinv_functor(m, cm), coinv_functor(t, ct)))
    throw NotMorphism("(coinv-morphism)", "g^coH is not H_L-linear");
  return gco;
}

SIso s_iso(const HopfModule& m) {
  const ContextPtr& ctx = m.context();
  const CoinvariantSplit coinv = coinvariants(m);
  CrossObject cross = cross_object(m, coinv);
  const RightHLModule g = coinv_functor(m, coinv);
  InducedModule induced = induce(g);
  const Term I = ident(m.h().dim());
  const Term px = cross.split.p;
  Report r;
  r.expect_equal("(iso-aux-coequalizes)", px * tensor(g.action(), I),
                 px * tensor(ident(g.dim()), ctx->phi_h()));
  const auto s = factor_through(induced.coeq, cross.split.p);
  r.expect("(iso-aux)", s.has_value(), "p_{M^coH (x) H} does not factor through n_{M^coH}");
  require(r);
  r.expect_equal("(iso-aux)", compose(*s, induced.n()), cross.split.p);
  Mor s_inv;
  try {
    s_inv = inverse(*s);
  } catch (const NotInvertible& e) {
    throw LawFailure("(iso-aux)", std::string("s_M is not invertible: ") + e.what());
  }
  r.expect("(s-comodule-morphism)", is_comodule_morphism(*s, induced.hopf, cross.module));
  r.expect("(s-quasilinear)", is_quasilinear(*s, induced.hopf, cross.module));
  require(r);
  return SIso{std::move(induced), std::move(cross), *s, std::move(s_inv), std::move(r)};
}

namespace {

UnitData unit_data(const InducedModule& fn, const CoinvariantSplit& coinv, const RightHLModule& gfn,
                   Report& r, const std::string& tag) {
  const RightHLModule& n = fn.base;
  const ContextPtr& ctx = n.context();
  const Field& field = ctx->field();
  const Term N = ident(n.dim());
  const Mor lift = (Term(fn.n()) * tensor(N, ctx->h.unit())).eval(field);
  const Mor u = compose(coinv.p(), lift);
  r.expect_equal(tag + " (unit)", compose(coinv.i(), u), lift);
  r.expect(tag + " (unit-linear)", is_hl_linear(u, n, gfn));
  const Mor mn = (Term(n.action()) * tensor(N, ctx->left.p())).eval(field);
  const auto m = factor_through(fn.coeq, mn);
  r.expect(tag + " (mn)", m.has_value(), "psi_N o (N (x) p_L) does not factor through n_N");
  if (!m) throw LawFailure(tag + " (mn)", "psi_N o (N (x) p_L) does not factor through n_N");
  r.expect_equal(tag + " (mn)", compose(*m, fn.n()), mn);
  const Mor x = compose(*m, coinv.i());
  r.expect_equal(tag + " (unit-iso-xu)", compose(x, u), Mor::identity(field, n.dim()));
  r.expect_equal(tag + " (unit-iso-ux)", compose(u, x), Mor::identity(field, coinv.dim()));
  return UnitData{u, *m, x};
}

}  // namespace

EquivalenceCertificate certify_equivalence(const ContextPtr& ctx, const std::vector<RightHLModule>& modules,
                                           const std::vector<HopfModule>& hopf_modules,
                                           const std::vector<SampleMorphism>& morphisms,
                                           const std::vector<SampleHopfMorphism>& hopf_morphisms) {
  EquivalenceCertificate cert;
  Report& r = cert.evidence;
  const Field& field = ctx->field();

  std::vector<InducedModule> induced;
  for (std::size_t k = 0; k < modules.size(); ++k) {
    const RightHLModule& n = modules[k];
    if (n.context() != ctx) throw MismatchedBase("sample module over a different weak Hopf quasigroup");
    const std::string tag = "N" + std::to_string(k);
    induced.push_back(induce(n));
    const InducedModule& fn = induced.back();
    const CoinvariantSplit coinv = coinvariants(fn.hopf);
    const RightHLModule gfn = coinv_functor(fn.hopf, coinv);
    cert.units.push_back(unit_data(fn, coinv, gfn, r, tag));

    // v_{F(N)} o F(u_N) = id_{F(N)}.
    const SIso si = s_iso(fn.hopf);
    const Mor v = compose(si.cross.alpha_inv, si.s);
    const Mor fu = induce_morphism(cert.units.back().u, fn, si.induced);
    r.expect_equal(tag + " (triangle-1)", compose(v, fu), Mor::identity(field, fn.dim()));
  }
  for (const SampleMorphism& sm : morphisms) {
    const std::string tag = "f" + std::to_string(sm.from) + "->" + std::to_string(sm.to);
    const InducedModule& a = induced.at(sm.from);
    const InducedModule& b = induced.at(sm.to);
    const Mor ff = induce_morphism(sm.f, a, b);
    const Mor gff = coinv_morphism(ff, a.hopf, b.hopf);
    r.expect_equal(tag + " (unit-natural)", compose(gff, cert.units[sm.from].u),
                   compose(cert.units[sm.to].u, sm.f));
  }

  std::vector<SIso> sisos;
  for (std::size_t k = 0; k < hopf_modules.size(); ++k) {
    const HopfModule& m = hopf_modules[k];
    if (m.context() != ctx) throw MismatchedBase("sample Hopf module over a different weak Hopf quasigroup");
    const std::string tag = "M" + std::to_string(k);
    sisos.push_back(s_iso(m));
    const SIso& si = sisos.back();
    r.append(si.evidence);
    const Mor v = compose(si.cross.alpha_inv, si.s);
    const Mor v_inv = compose(si.s_inv, si.cross.alpha);
    const CoinvariantSplit coinv = coinvariants(m);
    r.expect_equal(tag + " (counit)", compose(v, si.induced.n()),
                   (Term(m.action()) * tensor(Term(coinv.i()), ident(m.h().dim()))).eval(field));
    r.expect_equal(tag + " (counit-iso-vv')", compose(v, v_inv), Mor::identity(field, m.dim()));
    r.expect_equal(tag + " (counit-iso-v'v)", compose(v_inv, v), Mor::identity(field, si.induced.dim()));
    r.expect(tag + " (counit-morphism)", is_hopf_module_morphism(v, si.induced.hopf, m));

    // G(v_M) o u_{G(M)} = id_{G(M)}.
    const CoinvariantSplit cf = coinvariants(si.induced.hopf);
    const RightHLModule gf = coinv_functor(si.induced.hopf, cf);
    const UnitData ud = unit_data(si.induced, cf, gf, r, tag);
    const Mor gv = coinv_morphism(v, si.induced.hopf, m);
    r.expect_equal(tag + " (triangle-2)", compose(gv, ud.u), Mor::identity(field, coinv.dim()));
    cert.counits.push_back(CounitData{si.s, v, v_inv});
  }
  for (const SampleHopfMorphism& sm : hopf_morphisms) {
    const std::string tag = "g" + std::to_string(sm.from) + "->" + std::to_string(sm.to);
    const SIso& a = sisos.at(sm.from);
    const SIso& b = sisos.at(sm.to);
    const Mor gco = coinv_morphism(sm.g, hopf_modules[sm.from], hopf_modules[sm.to]);
    const Mor fg = induce_morphism(gco, a.induced, b.induced);
    r.expect_equal(tag + " (counit-natural)", compose(cert.counits[sm.to].v, fg),
                   compose(sm.g, cert.counits[sm.from].v));
  }
  return cert;
}

RightHLModule regular_hl_module(const ContextPtr& ctx) { return RightHLModule(ctx, ctx->left.monoid.mul()); }

RightHLModule random_hl_module(const ContextPtr& ctx, std::uint64_t seed, std::size_t k) {
  const Field& field = ctx->field();
  const std::size_t r = ctx->r();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);

  const Mor free_psi = kron(Mor::identity(field, k), ctx->left.monoid.mul());
  const std::size_t d = k * r;
  if (d == 0) return RightHLModule(ctx, free_psi);
  SparseVec v;
  for (std::size_t j = 0; j < d; ++j) {
    const int c = coeff(rng);
    if (c != 0) v.push_back({static_cast<std::uint32_t>(j), Scalar::from_int(field, c)});
  }
  const Mor gen = Mor::from_columns(field, 1, d, {v});
  const Mor sub = (Term(free_psi) * tensor(Term(gen), ident(r))).eval(field);
  const CoequalizerDatum q = coequalizer(sub, Mor::zero(field, r, d));
  const Mor psi_q = (Term(q.n) * free_psi * tensor(Term(q.section), ident(r))).eval(field);

  // Random change of basis P = L U with unit diagonals.
  const std::size_t t = q.quotient_dim;
  std::vector<std::vector<Scalar>> lo(t, std::vector<Scalar>(t, Scalar::zero(field)));
  std::vector<std::vector<Scalar>> up = lo;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      if (i == j) {
        lo[i][j] = Scalar::one(field);
        up[i][j] = Scalar::one(field);
      } else if (i > j) {
        lo[i][j] = Scalar::from_int(field, coeff(rng));
      } else {
        up[i][j] = Scalar::from_int(field, coeff(rng));
      }
    }
  const Mor p = compose(Mor::from_dense(field, t, lo), Mor::from_dense(field, t, up));
  const Mor psi = (Term(p) * psi_q * tensor(Term(inverse(p)), ident(r))).eval(field);
  RightHLModule out(ctx, psi);
  const Report rep = right_module_report(out);
  if (!rep.passed()) throw LawFailure("(hl-module)", "random module: " + failure_detail(rep));
  return out;
}

}  // namespace whq
