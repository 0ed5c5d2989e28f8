#pragma once

#include <cstddef>
#include <memory>

#include "whq/linalg.hpp"
#include "whq/report.hpp"
#include "whq/whq.hpp"

namespace whq {

/// A weak Hopf quasigroup together with its projections and H_L. Modules
/// hold a shared pointer to one Context; modules over different contexts do
/// not mix.
struct Context {
  WeakHopfQuasigroup h;
  ProjectionSet pi;
  BaseObject left;

  /// Computes projections and H_L; throws LawFailure if H is not valid enough for that.
  static std::shared_ptr<const Context> make(const WeakHopfQuasigroup& h);

  std::size_t n() const noexcept { return h.dim(); }
  std::size_t r() const noexcept { return left.dim(); }
  const Field& field() const noexcept { return h.field(); }
  /// phi_H = mu o (i_L (x) H): H_L (x) H -> H.
  Mor phi_h() const;
};

using ContextPtr = std::shared_ptr<const Context>;

/// (M, phi_M, rho_M) over a fixed H. Construction checks shapes only.
class HopfModule {
 public:
  HopfModule(ContextPtr ctx, const Mor& action, const Mor& coaction);

  const ContextPtr& context() const noexcept { return ctx_; }
  const WeakHopfQuasigroup& h() const noexcept { return ctx_->h; }
  std::size_t dim() const noexcept { return coaction_.src(); }
  const Mor& action() const noexcept { return action_; }
  const Mor& coaction() const noexcept { return coaction_; }

 private:
  ContextPtr ctx_;
  Mor action_;
  Mor coaction_;
};

/// Throws MismatchedBase unless both live over the same context.
void require_same_base(const HopfModule& a, const HopfModule& b);

/// Block sum with the induced action and coaction.
HopfModule direct_sum(const HopfModule& a, const HopfModule& b);

/// (b1)-(b5), the equivalent form of (b5) and phi o (M (x) Pi^R) o rho = id.
AxiomReport check_hopf_module(const HopfModule& m);

struct CoinvariantSplit {
  Mor q;
  SplitIdempotent split;
  Report evidence;

  std::size_t dim() const noexcept { return split.rank; }
  const Mor& p() const noexcept { return split.p; }
  const Mor& i() const noexcept { return split.i; }
};

/// q_M, its splitting, both equalizer characterizations and (new-c5-2-1..3).
/// Throws LawFailure.
CoinvariantSplit coinvariants(const HopfModule& m);

struct CrossObject {
  Mor nabla;
  SplitIdempotent split;  // p_{M^coH (x) H}, i_{M^coH (x) H}
  Mor omega;
  Mor omega_prime;
  Mor alpha;
  Mor alpha_inv;
  HopfModule module;  // (M^coH x H, phi_x, rho_x)
  Report evidence;

  std::size_t dim() const noexcept { return split.rank; }
};

/// Throws LawFailure.
CrossObject cross_object(const HopfModule& m, const CoinvariantSplit& coinv);
CrossObject cross_object(const HopfModule& m);

/// phi^alpha = phi o (q (x) mu) o (rho (x) H).
Mor phi_alpha(const HopfModule& m, const Mor& q);
Mor phi_alpha(const HopfModule& m);
/// (idemp-m-alfa), nabla^alpha = nabla, (phi^alpha)^alpha = phi^alpha,
/// (coinv-morphism-2) and phi^alpha = alpha^-1 o phi_x o (alpha (x) H).
Report phi_alpha_report(const HopfModule& m, const CoinvariantSplit& coinv, const CrossObject& cross);

/// (c1).
bool is_strong(const HopfModule& m);
/// (c2).
bool check_c2(const HopfModule& m, const CoinvariantSplit& coinv, const CrossObject& cross);
bool check_c2(const HopfModule& m);

bool is_comodule_morphism(const Mor& f, const HopfModule& m, const HopfModule& n);
bool is_quasilinear(const Mor& f, const HopfModule& m, const HopfModule& n);
bool is_hopf_module_morphism(const Mor& f, const HopfModule& m, const HopfModule& n);

/// An isomorphism with the list of displays that were verified for it.
struct CertifiedIso {
  Mor forward;
  Mor backward;
  Report evidence;

  bool certified() const { return evidence.passed(); }
};

/// alpha_M : M -> M^coH x H with its evidence. Throws LawFailure if M is not
/// a Hopf module or a construction step fails.
CertifiedIso fundamental_theorem(const HopfModule& m);

}  // namespace whq
