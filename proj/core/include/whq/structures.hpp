#pragma once

#include <cstddef>

#include "whq/mor.hpp"
#include "whq/report.hpp"

namespace whq {

/// (A, eta, mu) with eta: K -> A and mu: A (x) A -> A satisfying the unit law.
class UnitalMagma {
 public:
  /// Validates shapes and the unit law; throws LawFailure("unit", ...).
  static UnitalMagma make(const Mor& unit, const Mor& mul);
  /// Validates shapes only.
  static UnitalMagma unchecked(const Mor& unit, const Mor& mul);

  std::size_t dim() const noexcept { return unit_.dst(); }
  const Field& field() const noexcept { return unit_.field(); }
  const Mor& unit() const noexcept { return unit_; }
  const Mor& mul() const noexcept { return mul_; }

  Report check() const;
  /// mu o (mu (x) A) = mu o (A (x) mu).
  bool is_associative() const;

 private:
  UnitalMagma(Mor unit, Mor mul) : unit_(std::move(unit)), mul_(std::move(mul)) {}
  Mor unit_;
  Mor mul_;
};

/// (D, eps, delta): counital and coassociative.
class Comonoid {
 public:
  /// Validates shapes, counit and coassociativity; throws LawFailure.
  static Comonoid make(const Mor& counit, const Mor& comul);
  static Comonoid unchecked(const Mor& counit, const Mor& comul);

  std::size_t dim() const noexcept { return counit_.src(); }
  const Field& field() const noexcept { return counit_.field(); }
  const Mor& counit() const noexcept { return counit_; }
  const Mor& comul() const noexcept { return comul_; }

  Report check() const;

 private:
  Comonoid(Mor counit, Mor comul) : counit_(std::move(counit)), comul_(std::move(comul)) {}
  Mor counit_;
  Mor comul_;
};

/// f * g = mu_A o (f (x) g) o delta_D.
Mor convolution(const Mor& f, const Mor& g, const Comonoid& src, const UnitalMagma& dst);

bool is_magma_morphism(const Mor& f, const UnitalMagma& a, const UnitalMagma& b);
bool is_comonoid_morphism(const Mor& f, const Comonoid& d, const Comonoid& e);

/// mu_{A(x)B} = (mu_A (x) mu_B) o (A (x) c_{B,A} (x) B), eta = eta_A (x) eta_B.
UnitalMagma tensor_magma(const UnitalMagma& a, const UnitalMagma& b);
/// delta_{D(x)E} = (D (x) c_{D,E} (x) E) o (delta_D (x) delta_E), eps = eps_D (x) eps_E.
Comonoid tensor_comonoid(const Comonoid& d, const Comonoid& e);

}  // namespace whq
