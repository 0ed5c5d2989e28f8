#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "whq/hopfmod.hpp"
#include "whq/linalg.hpp"
#include "whq/report.hpp"

namespace whq {

/// (N, psi_N) with psi_N : N (x) H_L -> N.
class RightHLModule {
 public:
  /// Shape checks only.
  RightHLModule(ContextPtr ctx, const Mor& action);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t dim() const noexcept { return action_.dst(); }
  const Mor& action() const noexcept { return action_; }

 private:
  ContextPtr ctx_;
  Mor action_;
};

/// Associativity and unit of psi_N.
Report right_module_report(const RightHLModule& n);
bool check_right_module(const RightHLModule& n);

/// psi_P o (f (x) H_L) = f o psi_N.
bool is_hl_linear(const Mor& f, const RightHLModule& n, const RightHLModule& p);

/// F(N) = N (x)_{H_L} H.
struct InducedModule {
  RightHLModule base;
  CoequalizerDatum coeq;
  HopfModule hopf;
  Report evidence;

  const Mor& n() const noexcept { return coeq.n; }
  std::size_t dim() const noexcept { return hopf.dim(); }
};

/// Builds the coequalizer of (psi_N (x) H, N (x) phi_H), factors rho and phi
/// through it and re-checks the Hopf module axioms, (c1), (idem-strong) and
/// (action-induction). Throws LawFailure.
InducedModule induce(const RightHLModule& n);

/// f (x)_{H_L} H. Throws NotEquivariant if f is not H_L-linear.
Mor induce_morphism(const Mor& f, const InducedModule& n, const InducedModule& p);

/// G(M) = (M^coH, p_M o phi_M o (i_M (x) i_L)). Throws NotStrong.
RightHLModule coinv_functor(const HopfModule& m, const CoinvariantSplit& coinv);
RightHLModule coinv_functor(const HopfModule& m);

/// g^coH with i_T o g^coH = g o i_M. Throws NotMorphism unless g is a
/// Hopf-module morphism whose restriction lands in T^coH and is H_L-linear.
Mor coinv_morphism(const Mor& g, const HopfModule& m, const HopfModule& t);

/// s_M : M^coH (x)_{H_L} H -> M^coH x H with s_M o n = p_{M^coH (x) H}.
struct SIso {
  InducedModule induced;  // F(G(M))
  CrossObject cross;
  Mor s;
  Mor s_inv;
  Report evidence;
};

/// Throws NotStrong or LawFailure.
SIso s_iso(const HopfModule& m);

struct UnitData {
  Mor u;
  Mor m;
  Mor x;
};

struct CounitData {
  Mor s;
  Mor v;
  Mor v_inv;
};

/// An H_L-linear map between two sample modules, given by index.
struct SampleMorphism {
  std::size_t from;
  std::size_t to;
  Mor f;
};

/// A Hopf-module morphism between two sample Hopf modules, given by index.
struct SampleHopfMorphism {
  std::size_t from;
  std::size_t to;
  Mor g;
};

struct EquivalenceCertificate {
  std::vector<UnitData> units;
  std::vector<CounitData> counits;
  Report evidence;

  bool passed() const { return evidence.passed(); }
};

/// Unit and counit isomorphisms, naturality and both triangle identities on
/// the given samples. Failed identities are recorded in the evidence;
/// construction failures (including non-equivariant sample morphisms) throw.
EquivalenceCertificate certify_equivalence(const ContextPtr& ctx,
                                           const std::vector<RightHLModule>& modules,
                                           const std::vector<HopfModule>& hopf_modules,
                                           const std::vector<SampleMorphism>& morphisms = {},
                                           const std::vector<SampleHopfMorphism>& hopf_morphisms = {});

/// H_L itself with psi = mu_{H_L}.
RightHLModule regular_hl_module(const ContextPtr& ctx);

/// A quotient of a free module H_L^k by a random submodule, in a random basis.
RightHLModule random_hl_module(const ContextPtr& ctx, std::uint64_t seed, std::size_t k = 2);

}  // namespace whq
