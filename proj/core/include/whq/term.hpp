#pragma once

#include <cstddef>
#include <memory>
#include <optional>

#include "whq/mor.hpp"

namespace whq {

/// A lazily evaluated string diagram: leaves are concrete morphisms,
/// identities or symmetric braidings, combined by composition and tensor
/// product.
///
/// Applying a term to a matrix never materializes tensor products. A tensor
/// node a (x) b acts as (a (x) id) o (id (x) b), each factor acting on
/// regrouped slices of the input, so the cost tracks the number of nonzeros
/// flowing through the diagram rather than the ambient dimensions.
class Term {
 public:
  Term(const Mor& m);  // NOLINT(google-explicit-constructor): leaves read naturally in formulas

  static Term identity(std::size_t n);
  static Term braid(std::size_t m, std::size_t n);

  std::size_t src() const noexcept;
  std::size_t dst() const noexcept;
  /// The field of the first concrete leaf; nullopt for purely structural terms.
  std::optional<Field> field() const noexcept;

  /// Materializes the term. Throws Error if the term has no concrete leaf.
  Mor eval() const;
  Mor eval(const Field& field) const;
  /// (*this) o x.
  Mor apply(const Mor& x) const;

  friend Term operator*(const Term& g, const Term& f);
  friend Term tensor(const Term& a, const Term& b);

  struct Node;

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Composition g o f.
Term operator*(const Term& g, const Term& f);
Term tensor(const Term& a, const Term& b);

template <typename... Rest>
Term tensor(const Term& a, const Term& b, const Term& c, const Rest&... rest) {
  return tensor(tensor(a, b), c, rest...);
}

inline Term ident(std::size_t n) { return Term::identity(n); }
inline Term braid(std::size_t m, std::size_t n) { return Term::braid(m, n); }

/// Evaluates both sides and compares them.
std::optional<Witness> first_difference(const Term& a, const Term& b);

}  // namespace whq
