#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "whq/linalg.hpp"
#include "whq/mor.hpp"
#include "whq/report.hpp"
#include "whq/structures.hpp"
#include "whq/term.hpp"

namespace whq {

/// The braiding c_{H,H} and its inverse as explicit matrices.
struct Braiding {
  Mor c;
  Mor c_inv;
};

/// A unital magma and comonoid on the same space together with an antipode.
class WeakHopfQuasigroup {
 public:
  /// Runs check_axioms and throws AxiomViolation naming the first failed axiom.
  static WeakHopfQuasigroup make(const UnitalMagma& magma, const Comonoid& comonoid,
                                 const Mor& antipode,
                                 std::optional<Braiding> braiding = std::nullopt);
  /// Shape checks only; for deliberately broken fixtures.
  static WeakHopfQuasigroup unchecked(const UnitalMagma& magma, const Comonoid& comonoid,
                                      const Mor& antipode,
                                      std::optional<Braiding> braiding = std::nullopt);

  std::size_t dim() const noexcept { return magma_.dim(); }
  const Field& field() const noexcept { return magma_.field(); }
  const UnitalMagma& magma() const noexcept { return magma_; }
  const Comonoid& comonoid() const noexcept { return comonoid_; }
  const Mor& unit() const noexcept { return magma_.unit(); }
  const Mor& mul() const noexcept { return magma_.mul(); }
  const Mor& counit() const noexcept { return comonoid_.counit(); }
  const Mor& comul() const noexcept { return comonoid_.comul(); }
  const Mor& antipode() const noexcept { return antipode_; }

  /// nullopt for the default symmetric braiding.
  const std::optional<Braiding>& braiding() const noexcept { return braiding_; }
  Term c() const;
  Term c_inv() const;

  /// Convolution f * g = mu o (f (x) g) o delta.
  Mor convolve(const Mor& f, const Mor& g) const;

 private:
  WeakHopfQuasigroup(UnitalMagma m, Comonoid c, Mor l, std::optional<Braiding> b)
      : magma_(std::move(m)), comonoid_(std::move(c)), antipode_(std::move(l)), braiding_(std::move(b)) {}

  UnitalMagma magma_;
  Comonoid comonoid_;
  Mor antipode_;
  std::optional<Braiding> braiding_;
};

using AxiomReport = Report;
using IdentityReport = Report;

/// Unit, counit, coassociativity and (a1)-(a4-7), one entry per label.
AxiomReport check_axioms(const WeakHopfQuasigroup& h);

struct ProjectionSet {
  Mor pi_l;
  Mor pi_r;
  Mor pi_bar_l;
  Mor pi_bar_r;
};

/// The four projections from their closed formulas. Throws AxiomViolation
/// "(a4-1)" / "(a4-2)" if the closed forms disagree with id * lambda, lambda * id.
ProjectionSet projections(const WeakHopfQuasigroup& h);

/// The derived identities of H, one entry per displayed label.
IdentityReport identity_suite(const WeakHopfQuasigroup& h);

/// A basis triple (a, b, c) with (ab)c != a(bc), if any.
std::optional<std::array<std::size_t, 3>> associativity_witness(const WeakHopfQuasigroup& h);

enum class Side { L, R };

/// H_L or H_R with its monoid, comonoid and Casimir.
struct BaseObject {
  Side side = Side::L;
  SplitIdempotent split;
  UnitalMagma monoid;
  Comonoid comonoid;
  Mor casimir;  // K -> B (x) B

  std::size_t dim() const noexcept { return split.rank; }
  const Mor& p() const noexcept { return split.p; }
  const Mor& i() const noexcept { return split.i; }
};

/// Splits Pi^L or Pi^R and verifies the equalizer, coequalizer, monoid and
/// Casimir statements; throws LawFailure on the first violated display.
BaseObject base_object(const WeakHopfQuasigroup& h, Side side);

/// Separability and Frobenius displays for a base object.
Report casimir_report(const BaseObject& b);
bool casimir_check(const BaseObject& b);

}  // namespace whq
