#include "whq/whq.hpp"

#include "whq/errors.hpp"

namespace whq {

namespace {

// Short names for the structure maps of H as terms.
struct Sym {
  std::size_t n;
  Term I, eta, mu, eps, delta, lam, c, ci;
  Term eps_mu, delta_eta;

  explicit Sym(const WeakHopfQuasigroup& h)
      : n(h.dim()),
        I(ident(h.dim())),
        eta(h.unit()),
        mu(h.mul()),
        eps(h.counit()),
        delta(h.comul()),
        lam(h.antipode()),
        c(h.c()),
        ci(h.c_inv()),
        eps_mu(Term(h.counit()) * h.mul()),
        delta_eta(Term(h.comul()) * h.unit()) {}

  Term conv(const Term& f, const Term& g) const { return mu * tensor(f, g) * delta; }
};

void require_square(const char* what, const Mor& m, std::size_t n) {
  if (m.src() != n) throw DimensionMismatch(std::string(what) + ": src", n, m.src());
  if (m.dst() != n) throw DimensionMismatch(std::string(what) + ": dst", n, m.dst());
}

// One report entry: the first expression against the first one that differs from it.
void expect_all_equal(Report& r, const std::string& label, const std::vector<Mor>& xs) {
  for (std::size_t k = 1; k < xs.size(); ++k)
    if (first_difference(xs[0], xs[k]) || k + 1 == xs.size()) {
      r.expect_equal(label, xs[0], xs[k]);
      return;
    }
}

}  // namespace

WeakHopfQuasigroup WeakHopfQuasigroup::unchecked(const UnitalMagma& magma, const Comonoid& comonoid,
                                                 const Mor& antipode,
                                                 std::optional<Braiding> braiding) {
  const std::size_t n = magma.dim();
  if (comonoid.dim() != n) throw DimensionMismatch("comonoid dim", n, comonoid.dim());
  require_square("antipode", antipode, n);
  if (!(magma.field() == comonoid.field()) || !(magma.field() == antipode.field()))
    throw FieldMismatch("structure maps over different fields");
  if (braiding) {
    require_square("braiding", braiding->c, n * n);
    require_square("inverse braiding", braiding->c_inv, n * n);
    if (!(braiding->c.field() == magma.field()) || !(braiding->c_inv.field() == magma.field()))
      throw FieldMismatch("braiding over a different field");
  }
  return WeakHopfQuasigroup(magma, comonoid, antipode, std::move(braiding));
}

WeakHopfQuasigroup WeakHopfQuasigroup::make(const UnitalMagma& magma, const Comonoid& comonoid,
                                            const Mor& antipode, std::optional<Braiding> braiding) {
  WeakHopfQuasigroup h = unchecked(magma, comonoid, antipode, std::move(braiding));
  const Report r = check_axioms(h);
  if (const Check* bad = r.first_failure()) throw AxiomViolation(bad->label, bad->detail);
  return h;
}

Term WeakHopfQuasigroup::c() const {
  return braiding_ ? Term(braiding_->c) : braid(dim(), dim());
}

Term WeakHopfQuasigroup::c_inv() const {
  return braiding_ ? Term(braiding_->c_inv) : braid(dim(), dim());
}

Mor WeakHopfQuasigroup::convolve(const Mor& f, const Mor& g) const {
  return convolution(f, g, comonoid_, magma_);
}

AxiomReport check_axioms(const WeakHopfQuasigroup& h) {
  const Sym s(h);
  const Term& I = s.I;
  Report r;
  r.append(h.magma().check());
  r.append(h.comonoid().check());
  if (h.braiding()) {
    const Mor id2 = Mor::identity(h.field(), s.n * s.n);
    r.expect("(braiding-inverse)",
             compose(h.braiding()->c, h.braiding()->c_inv) == id2 &&
                 compose(h.braiding()->c_inv, h.braiding()->c) == id2,
             "c o c^-1 != id");
  }

  r.expect_equal("(a1)", s.delta * s.mu,
                 tensor(s.mu, s.mu) * tensor(I, s.c, I) * tensor(s.delta, s.delta));

  {
    const Mor e1 = (s.eps_mu * tensor(s.mu, I)).eval(h.field());
    const Mor e2 = (s.eps_mu * tensor(I, s.mu)).eval(h.field());
    const Mor e3 = (tensor(s.eps_mu, s.eps_mu) * tensor(I, s.delta, I)).eval(h.field());
    const Mor e4 = (tensor(s.eps_mu, s.eps_mu) * tensor(I, s.ci * s.delta, I)).eval(h.field());
    expect_all_equal(r, "(a2)", {e1, e2, e3, e4});
  }

  {
    const Term dede = tensor(s.delta_eta, s.delta_eta);
    const Mor x1 = (tensor(s.delta, I) * s.delta_eta).eval(h.field());
    const Mor x2 = (tensor(I, s.mu, I) * dede).eval(h.field());
    const Mor x3 = (tensor(I, s.mu * s.ci, I) * dede).eval(h.field());
    expect_all_equal(r, "(a3)", {x1, x2, x3});
  }

  const Term pi_l = s.conv(I, s.lam);
  const Term pi_r = s.conv(s.lam, I);
  r.expect_equal("(a4-1)", pi_l, tensor(s.eps_mu, I) * tensor(I, s.c) * tensor(s.delta_eta, I));
  r.expect_equal("(a4-2)", pi_r, tensor(I, s.eps_mu) * tensor(s.c, I) * tensor(I, s.delta_eta));
  {
    const Mor a = s.conv(s.lam, pi_l).eval(h.field());
    const Mor b = s.conv(pi_r, s.lam).eval(h.field());
    expect_all_equal(r, "(a4-3)", {h.antipode(), a, b});
  }
  r.expect_equal("(a4-4)", s.mu * tensor(s.lam, s.mu) * tensor(s.delta, I), s.mu * tensor(pi_r, I));
  r.expect_equal("(a4-5)", s.mu * tensor(I, s.mu) * tensor(I, s.lam, I) * tensor(s.delta, I),
                 s.mu * tensor(pi_l, I));
  r.expect_equal("(a4-6)", s.mu * tensor(s.mu, s.lam) * tensor(I, s.delta), s.mu * tensor(I, pi_l));
  r.expect_equal("(a4-7)", s.mu * tensor(s.mu, I) * tensor(I, s.lam, I) * tensor(I, s.delta),
                 s.mu * tensor(I, pi_r));
  return r;
}

ProjectionSet projections(const WeakHopfQuasigroup& h) {
  const Sym s(h);
  const Term& I = s.I;
  const Field& f = h.field();
  ProjectionSet p;
  p.pi_l = (tensor(s.eps_mu, I) * tensor(I, s.c) * tensor(s.delta_eta, I)).eval(f);
  p.pi_r = (tensor(I, s.eps_mu) * tensor(s.c, I) * tensor(I, s.delta_eta)).eval(f);
  p.pi_bar_l = (tensor(I, s.eps_mu) * tensor(s.delta_eta, I)).eval(f);
  p.pi_bar_r = (tensor(s.eps_mu, I) * tensor(I, s.delta_eta)).eval(f);
  const Mor conv_l = h.convolve(Mor::identity(f, s.n), h.antipode());
  const Mor conv_r = h.convolve(h.antipode(), Mor::identity(f, s.n));
  if (auto w = first_difference(conv_l, p.pi_l)) throw AxiomViolation("(a4-1)", w->to_string());
  if (auto w = first_difference(conv_r, p.pi_r)) throw AxiomViolation("(a4-2)", w->to_string());
  return p;
}

IdentityReport identity_suite(const WeakHopfQuasigroup& h) {
  const Sym s(h);
  const Term& I = s.I;
  const Field& f = h.field();
  const ProjectionSet p = projections(h);
  const Term pl = p.pi_l, pr = p.pi_r, bl = p.pi_bar_l, br = p.pi_bar_r;
  const Mor id = Mor::identity(f, s.n);
  Report r;

  r.expect_equal("(pi-l)", s.conv(pl, I), id);
  r.expect_equal("(pi-l)", s.conv(I, pr), id);
  r.expect("(lambda-eta)", compose(h.antipode(), h.unit()) == h.unit(), "lambda o eta != eta");
  r.expect("(epsilon-lambda)", compose(h.counit(), h.antipode()) == h.counit(),
           "eps o lambda != eps");
  r.expect_equal("(lambda-antimultiplicative)", s.lam * s.mu, s.mu * tensor(s.lam, s.lam) * s.c);
  r.expect_equal("(lambda-anticomultiplicative)", s.delta * s.lam,
                 s.c * tensor(s.lam, s.lam) * s.delta);

  const Mor* names[] = {&p.pi_l, &p.pi_r, &p.pi_bar_l, &p.pi_bar_r};
  for (const Mor* m : names) r.expect_equal("(pi-idempotent)", compose(*m, *m), *m);

  r.expect_equal("(mu-pi-l)", s.mu * tensor(I, pl), tensor(s.eps_mu, I) * tensor(I, s.c) * tensor(s.delta, I));
  r.expect_equal("(mu-pi-r)", s.mu * tensor(pr, I), tensor(I, s.eps_mu) * tensor(s.c, I) * tensor(I, s.delta));
  r.expect_equal("(mu-pi-l-var)", s.mu * tensor(I, bl), tensor(I, s.eps_mu) * tensor(s.delta, I));
  r.expect_equal("(mu-pi-r-var)", s.mu * tensor(br, I), tensor(s.eps_mu, I) * tensor(I, s.delta));
  r.expect_equal("(delta-pi-l)", tensor(I, pl) * s.delta,
                 tensor(s.mu, I) * tensor(I, s.c) * tensor(s.delta_eta, I));
  r.expect_equal("(delta-pi-r)", tensor(pr, I) * s.delta,
                 tensor(I, s.mu) * tensor(s.c, I) * tensor(I, s.delta_eta));
  r.expect_equal("(delta-pi-l-var)", tensor(bl, I) * s.delta, tensor(I, s.mu) * tensor(s.delta_eta, I));
  r.expect_equal("(delta-pi-r-var)", tensor(I, br) * s.delta, tensor(s.mu, I) * tensor(I, s.delta_eta));

  r.expect_equal("(pi-composition-1)", compose(p.pi_l, p.pi_bar_l), p.pi_l);
  r.expect_equal("(pi-composition-1)", compose(p.pi_l, p.pi_bar_r), p.pi_bar_r);
  r.expect_equal("(pi-composition-1)", compose(p.pi_bar_l, p.pi_l), p.pi_bar_l);
  r.expect_equal("(pi-composition-1)", compose(p.pi_bar_r, p.pi_l), p.pi_l);
  r.expect_equal("(pi-composition-3)", compose(p.pi_r, p.pi_bar_l), p.pi_bar_l);
  r.expect_equal("(pi-composition-3)", compose(p.pi_r, p.pi_bar_r), p.pi_r);
  r.expect_equal("(pi-composition-3)", compose(p.pi_bar_l, p.pi_r), p.pi_r);
  r.expect_equal("(pi-composition-3)", compose(p.pi_bar_r, p.pi_r), p.pi_bar_r);

  const Mor& lam = h.antipode();
  r.expect_equal("(pi-antipode-composition-1)", compose(p.pi_l, lam), compose(p.pi_l, p.pi_r));
  r.expect_equal("(pi-antipode-composition-1)", compose(p.pi_l, p.pi_r), compose(lam, p.pi_r));
  r.expect_equal("(pi-antipode-composition-1)", compose(p.pi_r, lam), compose(p.pi_r, p.pi_l));
  r.expect_equal("(pi-antipode-composition-1)", compose(p.pi_r, p.pi_l), compose(lam, p.pi_l));
  r.expect_equal("(pi-antipode-composition-3)", p.pi_l, compose(p.pi_bar_r, lam));
  r.expect_equal("(pi-antipode-composition-3)", p.pi_l, compose(lam, p.pi_bar_l));
  r.expect_equal("(pi-antipode-composition-3)", p.pi_r, compose(p.pi_bar_l, lam));
  r.expect_equal("(pi-antipode-composition-3)", p.pi_r, compose(lam, p.pi_bar_r));

  r.expect_equal("(mu-assoc-1)", s.mu * tensor(s.mu, I) * tensor(I, tensor(pl, I) * s.delta), s.mu);
  r.expect_equal("(mu-assoc-1)", s.mu * tensor(s.mu, pr) * tensor(I, s.delta), s.mu);
  r.expect_equal("(mu-assoc-2)", s.mu * tensor(pl, s.mu) * tensor(s.delta, I), s.mu);
  r.expect_equal("(mu-assoc-2)", s.mu * tensor(I, s.mu * tensor(pr, I)) * tensor(s.delta, I), s.mu);

  const Term il = split_idempotent(p.pi_l).i;
  const Term ir = split_idempotent(p.pi_r).i;
  r.expect_equal("(aux-1-monoid-hl)", s.delta * s.mu * tensor(il, I), tensor(s.mu, I) * tensor(il, s.delta));
  r.expect_equal("(aux-2-monoid-hl)", s.delta * s.mu * tensor(I, il),
                 tensor(s.mu, I) * tensor(I, s.c) * tensor(s.delta, il));
  const auto monoid = [&](const char* l1, const char* l2, const char* l3, const Term& i) {
    r.expect_equal(l1, s.mu * tensor(s.mu * tensor(i, I), I), s.mu * tensor(i, s.mu));
    r.expect_equal(l2, s.mu * tensor(I, s.mu * tensor(i, I)), s.mu * tensor(s.mu * tensor(I, i), I));
    r.expect_equal(l3, s.mu * tensor(I, s.mu * tensor(I, i)), s.mu * tensor(s.mu, i));
  };
  monoid("(monoid-hl-1)", "(monoid-hl-2)", "(monoid-hl-3)", il);
  monoid("(monoid-hr-1)", "(monoid-hr-2)", "(monoid-hr-3)", ir);
  return r;
}

std::optional<std::array<std::size_t, 3>> associativity_witness(const WeakHopfQuasigroup& h) {
  const std::size_t n = h.dim();
  const Term mu = h.mul();
  const auto w = first_difference(mu * tensor(mu, ident(n)), mu * tensor(ident(n), mu));
  if (!w) return std::nullopt;
  return std::array<std::size_t, 3>{w->column / (n * n), (w->column / n) % n, w->column % n};
}

BaseObject base_object(const WeakHopfQuasigroup& h, Side side) {
  const Sym s(h);
  const Term& I = s.I;
  const Field& f = h.field();
  const ProjectionSet ps = projections(h);
  const Mor& pi = side == Side::L ? ps.pi_l : ps.pi_r;
  const std::string tag = side == Side::L ? "hl" : "hr";
  SplitIdempotent split = split_idempotent(pi);
  const Term i = split.i;
  const Term p = split.p;
  Report r;

  // (H_B, i) equalizes delta and (H (x) Pi^L) o delta, resp. (Pi^R (x) H) o delta.
  const Mor other_delta =
      (side == Side::L ? tensor(I, Term(pi)) * s.delta : tensor(Term(pi), I) * s.delta).eval(f);
  const EqualizerDatum eq = equalizer(h.comul(), other_delta);
  r.expect("(" + tag + "-equalizer)",
           compose(h.comul(), split.i) == compose(other_delta, split.i) &&
               same_column_space(eq.inclusion, split.i),
           "i does not present the equalizer");
  // (H_B, p) coequalizes mu and mu o (H (x) Pi^L), resp. mu o (Pi^R (x) H).
  const Mor other_mu =
      (side == Side::L ? s.mu * tensor(I, Term(pi)) : s.mu * tensor(Term(pi), I)).eval(f);
  const CoequalizerDatum coeq = coequalizer(h.mul(), other_mu);
  bool coeq_ok = compose(split.p, h.mul()) == compose(split.p, other_mu) &&
                 coeq.quotient_dim == split.rank;
  if (coeq_ok) {
    const auto t = factor_through(coeq, split.p);
    coeq_ok = t.has_value() && rank(*t) == split.rank;
  }
  r.expect("(" + tag + "-coequalizer)", coeq_ok, "p does not present the coequalizer");

  UnitalMagma monoid = UnitalMagma::unchecked(compose(split.p, h.unit()),
                                              (p * s.mu * tensor(i, i)).eval(f));
  Comonoid comonoid = Comonoid::unchecked(compose(h.counit(), split.i),
                                          (tensor(p, p) * s.delta * i).eval(f));
  const Report monoid_laws = monoid.check();
  const Report comonoid_laws = comonoid.check();
  for (const Check& c : monoid_laws.checks())
    r.expect("(" + tag + "-magma" + c.label.substr(1), c.passed, c.detail);
  for (const Check& c : comonoid_laws.checks())
    r.expect("(" + tag + "-comonoid" + c.label.substr(1), c.passed, c.detail);
  r.expect("(" + tag + "-monoid)", monoid.is_associative(), "mu_B is not associative");

  const Term pl = p * s.lam;
  const Mor casimir = ((side == Side::L ? tensor(pl, p) : tensor(p, pl)) * s.delta_eta).eval(f);
  BaseObject b{side, std::move(split), std::move(monoid), std::move(comonoid), casimir};
  r.append(casimir_report(b));
  require(r);
  return b;
}

Report casimir_report(const BaseObject& b) {
  const std::size_t n = b.dim();
  const Term B = ident(n);
  const Term mu = b.monoid.mul();
  const Term q = b.casimir;
  const Mor delta = b.comonoid.comul();
  const Field& f = b.monoid.field();
  Report r;
  if (b.casimir.src() != 1 || b.casimir.dst() != n * n) {
    r.expect("(casimir)", false, "Casimir has the wrong shape");
    return r;
  }
  r.expect_equal("(casimir-delta)", (tensor(mu, B) * tensor(B, q)).eval(f), delta);
  r.expect_equal("(casimir-delta)", (tensor(B, mu) * tensor(q, B)).eval(f), delta);
  r.expect_equal("(casimir-unit)", mu * q, b.monoid.unit());
  r.expect_equal("(frobenius)", tensor(B, b.comonoid.counit()) * q, b.monoid.unit());
  r.expect_equal("(frobenius)", tensor(b.comonoid.counit(), B) * q, b.monoid.unit());
  return r;
}

bool casimir_check(const BaseObject& b) { return casimir_report(b).passed(); }

}  // namespace whq
