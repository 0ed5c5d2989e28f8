#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "whq/hopfmod.hpp"
#include "whq/modcat.hpp"
#include "whq/whq.hpp"

namespace whq {

/// Multiplication table of a finite loop on {0, ..., k-1}.
class CayleyTable {
 public:
  /// Validates the Latin-square property and a two-sided identity; throws Error.
  static CayleyTable make(std::vector<std::vector<std::size_t>> table);

  static CayleyTable cyclic(std::size_t k);
  /// S_n on permutations in lexicographic order; (st)(i) = s(t(i)).
  static CayleyTable symmetric(std::size_t n);
  /// Direct product; (a, b) has index a * |B| + b.
  static CayleyTable product(const CayleyTable& a, const CayleyTable& b);

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }

  /// The two-sided inverse of x, if it exists.
  std::optional<std::size_t> inverse(std::size_t x) const;
  /// First triple (a, b, c) in lexicographic order with (ab)c != a(bc).
  std::optional<std::array<std::size_t, 3>> associativity_witness() const;
  /// First pair (x, y) violating x^-1(xy) = y = (yx)x^-1, or an element without inverse.
  std::optional<std::array<std::size_t, 2>> inverse_property_witness() const;
  bool is_group() const { return !associativity_witness() && !inverse_property_witness(); }

 private:
  explicit CayleyTable(std::vector<std::vector<std::size_t>> t, std::size_t e)
      : table_(std::move(t)), identity_(e) {}
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_;
};

/// M(G, 2): G and Gu with g.h = gh, g.(hu) = (hg)u, (gu).h = (gh^-1)u,
/// (gu).(hu) = h^-1 g. Element gu has index |G| + g.
CayleyTable chein_double(const CayleyTable& g);

/// A finite groupoid given by arrows with source and target objects.
class FiniteGroupoid {
 public:
  struct Arrow {
    std::size_t source;
    std::size_t target;
  };

  /// compose[f][g] is f o g when source(f) == target(g). Validates identities,
  /// associativity and inverses; throws InvalidGroupoid.
  static FiniteGroupoid make(std::size_t objects, std::vector<Arrow> arrows,
                             std::vector<std::vector<std::optional<std::size_t>>> compose);
  /// Only identity arrows.
  static FiniteGroupoid discrete(std::size_t objects);
  /// One arrow j -> i for every pair; arrow (i, j) has index i * k + j.
  static FiniteGroupoid pair(std::size_t objects);
  /// One object, arrows the elements of a group.
  static FiniteGroupoid from_group(const CayleyTable& g);

  std::size_t objects() const noexcept { return objects_; }
  std::size_t arrows() const noexcept { return arrows_.size(); }
  const Arrow& arrow(std::size_t f) const { return arrows_[f]; }
  std::optional<std::size_t> compose(std::size_t f, std::size_t g) const { return compose_[f][g]; }
  std::size_t identity(std::size_t object) const { return identities_[object]; }
  std::size_t inverse(std::size_t f) const { return inverses_[f]; }

 private:
  FiniteGroupoid() = default;
  std::size_t objects_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::optional<std::size_t>>> compose_;
  std::vector<std::size_t> identities_;
  std::vector<std::size_t> inverses_;
};

/// Group algebra with grouplike basis. Throws NotAssociative or NoInverse.
WeakHopfQuasigroup group_algebra(const CayleyTable& g, const Field& field);
/// Loop algebra of an I.P. loop. Throws NotIPLoop.
WeakHopfQuasigroup loop_algebra(const CayleyTable& g, const Field& field);
WeakHopfQuasigroup groupoid_algebra(const FiniteGroupoid& g, const Field& field);

/// A candidate structure together with its axiom report; callers branch on the report.
struct TensorCandidate {
  WeakHopfQuasigroup structure;
  AxiomReport report;
};

/// Tensor product structure with lambda = lambda_1 (x) lambda_2. Both inputs must
/// use the default symmetric braiding.
TensorCandidate tensor_whq(const WeakHopfQuasigroup& a, const WeakHopfQuasigroup& b);

/// (H, phi = mu, rho = delta).
HopfModule regular_hopf_module(const ContextPtr& ctx);
/// k copies of the regular right H_L-module.
RightHLModule free_hl_module(const ContextPtr& ctx, std::size_t k);
/// (H, psi_H = mu o (H (x) i_L)).
RightHLModule h_as_hl_module(const ContextPtr& ctx);

/// H_L-linear maps between free modules: the j-th coordinate projection
/// H_L^k -> H_L, the j-th inclusion H_L -> H_L^k, and left multiplication
/// by an element b of H_L (a column vector of length dim H_L).
Mor free_projection(const ContextPtr& ctx, std::size_t k, std::size_t j);
Mor free_inclusion(const ContextPtr& ctx, std::size_t k, std::size_t j);
Mor left_multiplication(const ContextPtr& ctx, const Mor& b);

/// Named fixtures: "c<k>", "s<n>" (n <= 6), "chein-c<k>", "chein-s<n>",
/// "discrete-<k>", "pair-<k>" and "flagship" (chein-s3 (x) discrete-2).
/// Throws Error for unknown names.
WeakHopfQuasigroup named_fixture(const std::string& name, const Field& field);

}  // namespace whq
