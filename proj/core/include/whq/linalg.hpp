#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "whq/mor.hpp"

namespace whq {

/// Incremental reduced row echelon form of a family of sparse rows.
///
/// Rows are kept fully reduced at all times. Pivots are the leftmost nonzero
/// column of each row, so the result depends only on the span of the inserted
/// rows, not on their order. With `track` set, every stored row R_k carries
/// coefficients T_k with R_k = sum_i T_k[i] * input_i (inputs numbered in
/// insertion order, dependent ones included).
class Rref {
 public:
  Rref(const Field& field, std::size_t width, bool track = false);

  /// Returns true if `row` was independent of the rows inserted so far.
  bool insert(const SparseVec& row);
  /// `row` minus its projection onto the current row space along the pivots.
  SparseVec reduce(const SparseVec& row) const;

  const Field& field() const noexcept { return field_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t inserted() const noexcept { return inserted_; }

  /// Stored rows and their data, sorted by pivot column.
  std::vector<std::size_t> pivots() const;
  std::vector<SparseVec> rows() const;
  std::vector<SparseVec> transforms() const;
  /// For each column, the sorted row position holding it as pivot, or -1.
  std::vector<long> pivot_positions() const;

 private:
  std::vector<std::size_t> order() const;

  Field field_;
  std::size_t width_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> trans_;
  std::vector<std::size_t> pivot_;
  std::vector<long> row_of_pivot_;
};

/// Reduced echelon form of the row space of `m` (rows live in src coordinates).
Rref row_echelon(const Mor& m, bool track = false);
/// Reduced echelon form of the column space of `m` (vectors live in dst coordinates).
Rref column_echelon(const Mor& m, bool track = false);

std::size_t rank(const Mor& m);
bool same_column_space(const Mor& a, const Mor& b);

/// A chosen splitting e = i o p with p o i = id.
struct SplitIdempotent {
  std::size_t ambient = 0;
  std::size_t rank = 0;
  Mor p;  // ambient -> rank
  Mor i;  // rank -> ambient
};

/// Splits an idempotent endomorphism. i consists of the pivot columns of e
/// (leftmost-pivot elimination on the rows of e) and p of the nonzero rows of
/// the reduced echelon form, so e = i o p. Throws NotIdempotent.
SplitIdempotent split_idempotent(const Mor& e);

/// Kernel of f - g with a retraction.
struct EqualizerDatum {
  Mor inclusion;   // E -> src, f o inclusion = g o inclusion
  Mor retraction;  // src -> E, retraction o inclusion = id
};

EqualizerDatum equalizer(const Mor& f, const Mor& g);
/// The unique t' with inclusion o t' = t, or nullopt if t does not equalize.
std::optional<Mor> factor_through(const EqualizerDatum& eq, const Mor& t);

/// Cokernel of d = f - g, together with a section and a splitting witness.
///
/// With s the section and w the witness, d o w + s o n = id_dst. This makes
/// the coequalizer absolute: applying any linear functor, in particular
/// - (x) V, to (d, n, s, w) keeps the identity and hence the coequalizer.
struct CoequalizerDatum {
  std::size_t src = 0;           // dimension of the common target of f and g
  std::size_t quotient_dim = 0;
  Mor n;        // src -> quotient_dim
  Mor section;  // quotient_dim -> src, n o section = id
  Mor witness;  // src -> domain of f and g
};

CoequalizerDatum coequalizer(const Mor& f, const Mor& g);
/// The unique t' with t' o n = t, or nullopt if t does not coequalize.
std::optional<Mor> factor_through(const CoequalizerDatum& coeq, const Mor& t);

/// Checks d o w + s o n = id for the tensored datum (d (x) id_k, n (x) id_k, ...).
bool certifies_tensor_preservation(const CoequalizerDatum& coeq, const Mor& f, const Mor& g,
                                   std::size_t k);

/// Two-sided inverse. Throws NotInvertible.
Mor inverse(const Mor& a);

}  // namespace whq
