#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "whq/scalar.hpp"

namespace whq {

/// One stored coefficient of a sparse vector or matrix column.
struct Entry {
  std::uint32_t index;
  Scalar value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse vector: entries sorted by strictly increasing index, no zero values.
using SparseVec = std::vector<Entry>;

/// First position (deterministic column-major order) where two morphisms differ.
struct Witness {
  std::size_t column;  // source basis index
  std::size_t row;     // target basis index
  Scalar left;
  Scalar right;

  std::string to_string() const;
};

/// A linear map between finite-dimensional spaces over an exact field, stored
/// as a dst x src matrix in compressed sparse columns: column j is the image
/// of the j-th source basis vector.
///
/// Tensor products order bases row-major with the left factor major, i.e.
/// e_a (x) e_b sits at index a * dim(right) + b.
///
/// Values are immutable; copies share storage.
class Mor {
 public:
  /// The zero map 0 -> 0 over Q.
  Mor();
  /// The zero map src -> dst.
  Mor(const Field& field, std::size_t src, std::size_t dst);

  static Mor identity(const Field& field, std::size_t n);
  static Mor zero(const Field& field, std::size_t src, std::size_t dst) {
    return Mor(field, src, dst);
  }

  /// Columns may be unsorted and contain duplicates or zeros; they are canonicalized.
  static Mor from_columns(const Field& field, std::size_t src, std::size_t dst,
                          std::vector<SparseVec> columns);
  /// Same, but each vector is a row of the matrix.
  static Mor from_rows(const Field& field, std::size_t src, std::size_t dst,
                       const std::vector<SparseVec>& rows);
  /// Dense rows, dst x src. `src` is explicit so that dst = 0 is expressible.
  static Mor from_dense(const Field& field, std::size_t src,
                        const std::vector<std::vector<Scalar>>& rows);
  /// Integer literal rows; convenient for fixtures.
  static Mor from_ints(const Field& field,
                       std::initializer_list<std::initializer_list<std::int64_t>> rows);

  /// Trusted construction from already canonical compressed columns.
  static Mor from_canonical(const Field& field, std::size_t src, std::size_t dst,
                            std::vector<std::size_t> column_starts, std::vector<Entry> entries);

  const Field& field() const noexcept { return field_; }
  std::size_t src() const noexcept { return src_; }
  std::size_t dst() const noexcept { return dst_; }
  std::size_t nnz() const noexcept;
  bool is_zero() const noexcept { return nnz() == 0; }

  std::span<const Entry> column(std::size_t j) const;
  Scalar at(std::size_t row, std::size_t col) const;

  Mor transpose() const;
  std::vector<std::vector<Scalar>> to_dense() const;
  /// Re-expresses every coefficient in `target` (see Scalar::convert).
  Mor convert(const Field& target) const;

  friend bool operator==(const Mor& a, const Mor& b);

 private:
  struct Storage {
    std::vector<std::size_t> starts;  // size src + 1
    std::vector<Entry> entries;
  };

  Field field_;
  std::size_t src_ = 0;
  std::size_t dst_ = 0;
  std::shared_ptr<const Storage> data_;
};

/// g o f. Throws DimensionMismatch unless f.dst() == g.src().
Mor compose(const Mor& g, const Mor& f);
/// Kronecker product f (x) g.
Mor kron(const Mor& f, const Mor& g);
/// The symmetric braiding c_{m,n}: e_a (x) e_b -> e_b (x) e_a.
Mor swap(const Field& field, std::size_t m, std::size_t n);

Mor operator+(const Mor& a, const Mor& b);
Mor operator-(const Mor& a, const Mor& b);
Mor operator*(const Scalar& s, const Mor& a);

/// Block-diagonal sum a (+) b.
Mor direct_sum(const Mor& a, const Mor& b);

/// nullopt when equal. Throws DimensionMismatch when shapes differ.
std::optional<Witness> first_difference(const Mor& a, const Mor& b);

/// Dense human-readable rendering, one row per line.
std::string to_string(const Mor& m);

/// Appends a * x to y (both sorted sparse vectors).
void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);

}  // namespace whq
