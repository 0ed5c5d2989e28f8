#include "whq/hopfmod.hpp"

#include "whq/errors.hpp"

namespace whq {

namespace {

struct ModSym {
  std::size_t m, n;
  Term M, I, phi, rho, eta, mu, eps, delta, lam, c, pl, pr, pbr;

  explicit ModSym(const HopfModule& mod)
      : m(mod.dim()),
        n(mod.h().dim()),
        M(ident(mod.dim())),
        I(ident(mod.h().dim())),
        phi(mod.action()),
        rho(mod.coaction()),
        eta(mod.h().unit()),
        mu(mod.h().mul()),
        eps(mod.h().counit()),
        delta(mod.h().comul()),
        lam(mod.h().antipode()),
        c(mod.h().c()),
        pl(mod.context()->pi.pi_l),
        pr(mod.context()->pi.pi_r),
        pbr(mod.context()->pi.pi_bar_r) {}
};

}  // namespace

std::shared_ptr<const Context> Context::make(const WeakHopfQuasigroup& h) {
  ProjectionSet pi = projections(h);
  BaseObject left = base_object(h, Side::L);
  return std::make_shared<const Context>(Context{h, std::move(pi), std::move(left)});
}

Mor Context::phi_h() const {
  return (Term(h.mul()) * tensor(left.i(), ident(n()))).eval(field());
}

HopfModule::HopfModule(ContextPtr ctx, const Mor& action, const Mor& coaction)
    : ctx_(std::move(ctx)), action_(action), coaction_(coaction) {
  if (!ctx_) throw Error("HopfModule: missing context");
  const std::size_t m = coaction.src();
  const std::size_t n = ctx_->n();
  if (coaction.dst() != m * n) throw DimensionMismatch("coaction: dst", m * n, coaction.dst());
  if (action.src() != m * n) throw DimensionMismatch("action: src", m * n, action.src());
  if (action.dst() != m) throw DimensionMismatch("action: dst", m, action.dst());
  if (!(action.field() == ctx_->field()) || !(coaction.field() == ctx_->field()))
    throw FieldMismatch("module maps over a different field than H");
}

void require_same_base(const HopfModule& a, const HopfModule& b) {
  if (a.context() != b.context()) throw MismatchedBase("modules over different weak Hopf quasigroups");
}

HopfModule direct_sum(const HopfModule& a, const HopfModule& b) {
  require_same_base(a, b);
  const std::size_t ma = a.dim();
  const std::size_t mb = b.dim();
  const std::size_t n = a.h().dim();
  const Field& f = a.h().field();
  std::vector<SparseVec> act((ma + mb) * n);
  for (std::size_t x = 0; x < ma + mb; ++x)
    for (std::size_t h = 0; h < n; ++h) {
      const bool first = x < ma;
      const auto col = first ? a.action().column(x * n + h) : b.action().column((x - ma) * n + h);
      for (const Entry& e : col)
        act[x * n + h].push_back({static_cast<std::uint32_t>(first ? e.index : e.index + ma), e.value});
    }
  std::vector<SparseVec> coact(ma + mb);
  for (std::size_t x = 0; x < ma + mb; ++x) {
    const bool first = x < ma;
    const auto col = first ? a.coaction().column(x) : b.coaction().column(x - ma);
    for (const Entry& e : col) {
      const std::size_t y = e.index / n + (first ? 0 : ma);
      coact[x].push_back({static_cast<std::uint32_t>(y * n + e.index % n), e.value});
    }
  }
  return HopfModule(a.context(), Mor::from_columns(f, (ma + mb) * n, ma + mb, std::move(act)),
                    Mor::from_columns(f, ma + mb, (ma + mb) * n, std::move(coact)));
}

AxiomReport check_hopf_module(const HopfModule& mod) {
  const ModSym s(mod);
  const Term& M = s.M;
  const Term& I = s.I;
  const Mor id = Mor::identity(mod.h().field(), s.m);
  Report r;
  r.expect_equal("(b1)", tensor(M, s.eps) * s.rho, id);
  r.expect_equal("(b1)", tensor(s.rho, I) * s.rho, tensor(M, s.delta) * s.rho);
  r.expect_equal("(b2-1)", s.phi * tensor(M, s.eta), id);
  r.expect_equal("(b2-2)", s.rho * s.phi,
                 tensor(s.phi, s.mu) * tensor(M, s.c, I) * tensor(s.rho, s.delta));
  r.expect_equal("(b3)", s.phi * tensor(s.phi, s.lam) * tensor(M, s.delta), s.phi * tensor(M, s.pl));
  r.expect_equal("(b4)", s.phi * tensor(s.phi, I) * tensor(M, s.lam, I) * tensor(M, s.delta),
                 s.phi * tensor(M, s.pr));
  r.expect_equal("(b5)", s.phi * tensor(s.phi, I) * tensor(M, s.pl, I) * tensor(M, s.delta), s.phi);
  r.expect_equal("(b5-equivalent)", s.phi * tensor(s.phi, s.pr) * tensor(M, s.delta), s.phi);
  r.expect_equal("(phi-pi-r-rho)", s.phi * tensor(M, s.pr) * s.rho, id);
  return r;
}

CoinvariantSplit coinvariants(const HopfModule& mod) {
  const ModSym s(mod);
  const Term& M = s.M;
  const Term& I = s.I;
  const Field& f = mod.h().field();
  const Mor q = (s.phi * tensor(M, s.lam) * s.rho).eval(f);
  Report r;
  r.expect_equal("(q-coinvariant)", s.rho * q, tensor(M, s.pl) * s.rho * q);
  r.expect_equal("(q-idempotent)", compose(q, q), q);
  require(r);
  SplitIdempotent split = split_idempotent(q);
  const Term i = split.i;
  const Term p = split.p;

  const Mor rho_pl = (tensor(M, s.pl) * s.rho).eval(f);
  const Mor rho_pbr = (tensor(M, s.pbr) * s.rho).eval(f);
  const EqualizerDatum eq_l = equalizer(mod.coaction(), rho_pl);
  const EqualizerDatum eq_r = equalizer(mod.coaction(), rho_pbr);
  r.expect("(coinvariants-equalizer-pi-l)", same_column_space(eq_l.inclusion, split.i),
           "image of q_M differs from the equalizer of rho and (M (x) Pi^L) o rho");
  r.expect("(coinvariants-equalizer-pi-bar-r)", same_column_space(eq_r.inclusion, split.i),
           "image of q_M differs from the equalizer of rho and (M (x) Pi-bar^R) o rho");
  r.expect_equal("(new-c5-2-1)", s.phi * tensor(Term(q), I) * s.rho, Mor::identity(f, s.m));
  r.expect_equal("(new-c5-2-2)", s.rho * s.phi * tensor(i, I), tensor(s.phi, I) * tensor(i, s.delta));
  r.expect_equal("(new-c5-2-3)", p * s.phi * tensor(i, I), p * s.phi * tensor(i, s.pl));
  require(r);
  return CoinvariantSplit{q, std::move(split), std::move(r)};
}

CrossObject cross_object(const HopfModule& mod, const CoinvariantSplit& coinv) {
  const ModSym s(mod);
  const Term& I = s.I;
  const Field& f = mod.h().field();
  const std::size_t rk = coinv.dim();
  const Term R = ident(rk);
  const Term i = coinv.i();
  const Term p = coinv.p();
  Report r;

  const Mor omega = (s.phi * tensor(i, I)).eval(f);
  const Mor omega_prime = (tensor(p, I) * s.rho).eval(f);
  const Mor nabla = compose(omega_prime, omega);
  r.expect_equal("(tensor-idempotent-1)", nabla, (tensor(p * s.phi, I) * tensor(i, s.delta)).eval(f));
  r.expect_equal("(tensor-idempotent-2)", tensor(R, s.delta) * nabla, tensor(Term(nabla), I) * tensor(R, s.delta));
  r.expect_equal("(omega)", compose(omega, omega_prime), Mor::identity(f, s.m));
  r.expect_equal("(nabla-idempotent)", compose(nabla, nabla), nabla);
  require(r);

  SplitIdempotent split = split_idempotent(nabla);
  const Term px = split.p;
  const Term ix = split.i;
  const Mor alpha = compose(split.p, omega_prime);
  const Mor alpha_inv = compose(omega, split.i);
  r.expect_equal("(alpha-inverse)", compose(alpha_inv, alpha), Mor::identity(f, s.m));
  r.expect_equal("(alpha-inverse)", compose(alpha, alpha_inv), Mor::identity(f, split.rank));
  const Mor rho_x = (tensor(px, I) * tensor(R, s.delta) * ix).eval(f);
  const Mor phi_x = (px * tensor(R, s.mu) * tensor(ix, I)).eval(f);
  r.expect_equal("(alpha-comodule)", compose(rho_x, alpha), (tensor(Term(alpha), I) * s.rho).eval(f));
  HopfModule cross(mod.context(), phi_x, rho_x);
  const Report cross_axioms = check_hopf_module(cross);
  const Check* bad = cross_axioms.first_failure();
  r.expect("(cross-hopf-module)", bad == nullptr, bad ? bad->label + ": " + bad->detail : "");
  require(r);
  return CrossObject{nabla, std::move(split), omega, omega_prime, alpha, alpha_inv, std::move(cross), std::move(r)};
}

CrossObject cross_object(const HopfModule& m) { return cross_object(m, coinvariants(m)); }

Mor phi_alpha(const HopfModule& mod, const Mor& q) {
  const ModSym s(mod);
  return (s.phi * tensor(Term(q), s.mu) * tensor(s.rho, s.I)).eval(mod.h().field());
}

Mor phi_alpha(const HopfModule& m) { return phi_alpha(m, coinvariants(m).q); }

Report phi_alpha_report(const HopfModule& mod, const CoinvariantSplit& coinv, const CrossObject& cross) {
  const ModSym s(mod);
  const Field& f = mod.h().field();
  const Term& I = s.I;
  const Mor pa = phi_alpha(mod, coinv.q);
  const HopfModule twisted(mod.context(), pa, mod.coaction());
  const Term i = coinv.i();
  Report r;
  r.expect_equal("(phi-alpha)", pa,
                 (Term(cross.alpha_inv) * cross.module.action() * tensor(Term(cross.alpha), I)).eval(f));
  const Mor q_alpha = (Term(pa) * tensor(s.M, s.lam) * s.rho).eval(f);
  r.expect_equal("(idemp-m-alfa)", q_alpha, coinv.q);
  const Mor nabla_alpha = (tensor(Term(coinv.p()), I) * s.rho * pa * tensor(i, I)).eval(f);
  r.expect_equal("(nabla-alpha)", nabla_alpha, cross.nabla);
  r.expect_equal("(phi-alpha-alpha)", phi_alpha(twisted, q_alpha), pa);
  r.expect_equal("(coinv-morphism-2)", s.phi * tensor(i, I), Term(pa) * tensor(i, I));
  return r;
}

bool is_strong(const HopfModule& mod) {
  const ModSym s(mod);
  const Term il = mod.context()->left.i();
  return !first_difference(s.phi * tensor(s.phi * tensor(s.M, il), s.I),
                           s.phi * tensor(s.M, s.mu * tensor(il, s.I)));
}

bool check_c2(const HopfModule& mod, const CoinvariantSplit& coinv, const CrossObject& cross) {
  const ModSym s(mod);
  const Term lhs = s.phi * tensor(Term(coinv.i()), s.mu);
  return !first_difference(lhs, lhs * tensor(Term(cross.nabla), s.I));
}

bool check_c2(const HopfModule& m) {
  const CoinvariantSplit coinv = coinvariants(m);
  return check_c2(m, coinv, cross_object(m, coinv));
}

bool is_comodule_morphism(const Mor& f, const HopfModule& m, const HopfModule& n) {
  require_same_base(m, n);
  if (f.src() != m.dim()) throw DimensionMismatch("morphism: src", m.dim(), f.src());
  if (f.dst() != n.dim()) throw DimensionMismatch("morphism: dst", n.dim(), f.dst());
  return compose(n.coaction(), f) == (tensor(f, ident(m.h().dim())) * m.coaction()).eval(f.field());
}

bool is_quasilinear(const Mor& f, const HopfModule& m, const HopfModule& n) {
  require_same_base(m, n);
  if (f.src() != m.dim()) throw DimensionMismatch("morphism: src", m.dim(), f.src());
  if (f.dst() != n.dim()) throw DimensionMismatch("morphism: dst", n.dim(), f.dst());
  const Term I = ident(m.h().dim());
  return !first_difference(Term(phi_alpha(n)) * tensor(f, I), Term(f) * phi_alpha(m));
}

bool is_hopf_module_morphism(const Mor& f, const HopfModule& m, const HopfModule& n) {
  return is_comodule_morphism(f, m, n) && is_quasilinear(f, m, n);
}

CertifiedIso fundamental_theorem(const HopfModule& m) {
  require(check_hopf_module(m));
  const CoinvariantSplit coinv = coinvariants(m);
  const CrossObject cross = cross_object(m, coinv);
  Report evidence;
  evidence.append(coinv.evidence);
  evidence.append(cross.evidence);
  evidence.append(phi_alpha_report(m, coinv, cross));
  const HopfModule& x = cross.module;
  const Mor px_alpha = phi_alpha(x);
  evidence.expect_equal("(quasilineal-1)", px_alpha, x.action());
  evidence.expect("(alpha-comodule-morphism)", is_comodule_morphism(cross.alpha, m, x));
  evidence.expect("(alpha-quasilinear)", is_quasilinear(cross.alpha, m, x));
  evidence.expect("(alpha-inverse-comodule-morphism)", is_comodule_morphism(cross.alpha_inv, x, m));
  evidence.expect("(alpha-inverse-quasilinear)", is_quasilinear(cross.alpha_inv, x, m));
  evidence.expect("(c2)", check_c2(m, coinv, cross));
  return CertifiedIso{cross.alpha, cross.alpha_inv, std::move(evidence)};
}

}  // namespace whq
