#include "whq/mor.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "whq/errors.hpp"

namespace whq {

namespace {

void check_index_range(std::size_t n, const char* what) {
  if (n > std::numeric_limits<std::uint32_t>::max())
    throw Error(std::string(what) + ": dimension " + std::to_string(n) + " exceeds index range");
}

// Sorts by index, merges duplicates and drops zeros.
void canonicalize(SparseVec& v) {
  std::sort(v.begin(), v.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    Entry acc = v[i];
    std::size_t j = i + 1;
    for (; j < v.size() && v[j].index == acc.index; ++j) acc.value += v[j].value;
    if (!acc.value.is_zero()) v[out++] = std::move(acc);
    i = j;
  }
  v.resize(out);
}

}  // namespace

std::string Witness::to_string() const {
  return "input basis " + std::to_string(column) + ", output basis " + std::to_string(row) +
         ": " + left.to_string() + " != " + right.to_string();
}

Mor::Mor() : Mor(Field::rationals(), 0, 0) {}

Mor::Mor(const Field& field, std::size_t src, std::size_t dst)
    : field_(field), src_(src), dst_(dst) {
  check_index_range(dst, "Mor");
  auto s = std::make_shared<Storage>();
  s->starts.assign(src + 1, 0);
  data_ = std::move(s);
}

Mor Mor::identity(const Field& field, std::size_t n) {
  check_index_range(n, "identity");
  std::vector<std::size_t> starts(n + 1);
  std::vector<Entry> entries;
  entries.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    starts[j] = j;
    entries.push_back({static_cast<std::uint32_t>(j), Scalar::one(field)});
  }
  starts[n] = n;
  return from_canonical(field, n, n, std::move(starts), std::move(entries));
}

Mor Mor::from_columns(const Field& field, std::size_t src, std::size_t dst,
                      std::vector<SparseVec> columns) {
  check_index_range(dst, "from_columns");
  if (columns.size() != src) throw DimensionMismatch("from_columns: column count", src, columns.size());
  std::vector<std::size_t> starts(src + 1, 0);
  std::vector<Entry> entries;
  for (std::size_t j = 0; j < src; ++j) {
    for (const Entry& e : columns[j]) {
      if (e.index >= dst) throw DimensionMismatch("from_columns: row index", dst, e.index);
      if (!(e.value.field() == field))
        throw FieldMismatch("from_columns: entry over " + e.value.field().name() +
                            " in a map over " + field.name());
    }
    canonicalize(columns[j]);
    starts[j] = entries.size();
    for (Entry& e : columns[j]) entries.push_back(std::move(e));
  }
  starts[src] = entries.size();
  return from_canonical(field, src, dst, std::move(starts), std::move(entries));
}

Mor Mor::from_rows(const Field& field, std::size_t src, std::size_t dst,
                   const std::vector<SparseVec>& rows) {
  if (rows.size() != dst) throw DimensionMismatch("from_rows: row count", dst, rows.size());
  std::vector<SparseVec> columns(src);
  for (std::size_t i = 0; i < dst; ++i)
    for (const Entry& e : rows[i]) {
      if (e.index >= src) throw DimensionMismatch("from_rows: column index", src, e.index);
      columns[e.index].push_back({static_cast<std::uint32_t>(i), e.value});
    }
  return from_columns(field, src, dst, std::move(columns));
}

Mor Mor::from_dense(const Field& field, std::size_t src,
                    const std::vector<std::vector<Scalar>>& rows) {
  std::vector<SparseVec> columns(src);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != src) throw DimensionMismatch("from_dense: row length", src, rows[i].size());
    for (std::size_t j = 0; j < src; ++j)
      if (!rows[i][j].is_zero())
        columns[j].push_back({static_cast<std::uint32_t>(i), rows[i][j].convert(field)});
  }
  return from_columns(field, src, rows.size(), std::move(columns));
}

Mor Mor::from_ints(const Field& field,
                   std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t src = rows.size() == 0 ? 0 : rows.begin()->size();
  std::vector<std::vector<Scalar>> dense;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (std::int64_t v : r) row.push_back(Scalar::from_int(field, v));
    dense.push_back(std::move(row));
  }
  return from_dense(field, src, dense);
}

Mor Mor::from_canonical(const Field& field, std::size_t src, std::size_t dst,
                        std::vector<std::size_t> column_starts, std::vector<Entry> entries) {
  check_index_range(dst, "Mor");
  Mor m;
  m.field_ = field;
  m.src_ = src;
  m.dst_ = dst;
  auto s = std::make_shared<Storage>();
  s->starts = std::move(column_starts);
  s->entries = std::move(entries);
  m.data_ = std::move(s);
  return m;
}

std::size_t Mor::nnz() const noexcept { return data_->entries.size(); }

std::span<const Entry> Mor::column(std::size_t j) const {
  const auto& s = *data_;
  return {s.entries.data() + s.starts[j], s.starts[j + 1] - s.starts[j]};
}

Scalar Mor::at(std::size_t row, std::size_t col) const {
  if (row >= dst_ || col >= src_) throw Error("Mor::at: index out of range");
  const auto c = column(col);
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const Entry& e, std::size_t r) { return e.index < r; });
  if (it != c.end() && it->index == row) return it->value;
  return Scalar::zero(field_);
}

Mor Mor::transpose() const {
  std::vector<SparseVec> columns(dst_);
  for (std::size_t j = 0; j < src_; ++j)
    for (const Entry& e : column(j)) columns[e.index].push_back({static_cast<std::uint32_t>(j), e.value});
  // Row order within each new column is already increasing.
  std::vector<std::size_t> starts(dst_ + 1, 0);
  std::vector<Entry> entries;
  entries.reserve(nnz());
  for (std::size_t i = 0; i < dst_; ++i) {
    starts[i] = entries.size();
    for (Entry& e : columns[i]) entries.push_back(std::move(e));
  }
  starts[dst_] = entries.size();
  return from_canonical(field_, dst_, src_, std::move(starts), std::move(entries));
}

std::vector<std::vector<Scalar>> Mor::to_dense() const {
  std::vector<std::vector<Scalar>> rows(dst_, std::vector<Scalar>(src_, Scalar::zero(field_)));
  for (std::size_t j = 0; j < src_; ++j)
    for (const Entry& e : column(j)) rows[e.index][j] = e.value;
  return rows;
}

Mor Mor::convert(const Field& target) const {
  if (target == field_) return *this;
  std::vector<SparseVec> columns(src_);
  for (std::size_t j = 0; j < src_; ++j)
    for (const Entry& e : column(j)) columns[j].push_back({e.index, e.value.convert(target)});
  return from_columns(target, src_, dst_, std::move(columns));
}

bool operator==(const Mor& a, const Mor& b) {
  if (a.src_ != b.src_ || a.dst_ != b.dst_ || !(a.field_ == b.field_)) return false;
  if (a.data_ == b.data_) return true;
  const auto& x = *a.data_;
  const auto& y = *b.data_;
  if (x.starts != y.starts) return false;
  for (std::size_t i = 0; i < x.entries.size(); ++i)
    if (x.entries[i].index != y.entries[i].index || x.entries[i].value != y.entries[i].value)
      return false;
  return true;
}

Mor compose(const Mor& g, const Mor& f) {
  if (f.dst() != g.src()) throw DimensionMismatch("compose(g, f): g.src vs f.dst", g.src(), f.dst());
  if (!(f.field() == g.field()))
    throw FieldMismatch("compose over " + g.field().name() + " and " + f.field().name());
  const Field& field = f.field();
  std::vector<std::size_t> starts(f.src() + 1, 0);
  std::vector<Entry> entries;
  SparseVec buffer;
  for (std::size_t j = 0; j < f.src(); ++j) {
    starts[j] = entries.size();
    buffer.clear();
    for (const Entry& fe : f.column(j))
      for (const Entry& ge : g.column(fe.index)) buffer.push_back({ge.index, ge.value * fe.value});
    canonicalize(buffer);
    for (Entry& e : buffer) entries.push_back(std::move(e));
  }
  starts[f.src()] = entries.size();
  return Mor::from_canonical(field, f.src(), g.dst(), std::move(starts), std::move(entries));
}

Mor kron(const Mor& f, const Mor& g) {
  if (!(f.field() == g.field()))
    throw FieldMismatch("kron over " + f.field().name() + " and " + g.field().name());
  const std::size_t src = f.src() * g.src();
  const std::size_t dst = f.dst() * g.dst();
  std::vector<std::size_t> starts(src + 1, 0);
  std::vector<Entry> entries;
  entries.reserve(f.nnz() * g.nnz());
  for (std::size_t a = 0; a < f.src(); ++a)
    for (std::size_t b = 0; b < g.src(); ++b) {
      starts[a * g.src() + b] = entries.size();
      for (const Entry& fe : f.column(a))
        for (const Entry& ge : g.column(b))
          entries.push_back({static_cast<std::uint32_t>(fe.index * g.dst() + ge.index),
                             fe.value * ge.value});
    }
  starts[src] = entries.size();
  return Mor::from_canonical(f.field(), src, dst, std::move(starts), std::move(entries));
}

Mor swap(const Field& field, std::size_t m, std::size_t n) {
  std::vector<SparseVec> columns(m * n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b)
      columns[a * n + b].push_back({static_cast<std::uint32_t>(b * m + a), Scalar::one(field)});
  return Mor::from_columns(field, m * n, m * n, std::move(columns));
}

Mor operator+(const Mor& a, const Mor& b) {
  if (a.src() != b.src()) throw DimensionMismatch("sum: src", a.src(), b.src());
  if (a.dst() != b.dst()) throw DimensionMismatch("sum: dst", a.dst(), b.dst());
  if (!(a.field() == b.field())) throw FieldMismatch("sum across fields");
  std::vector<std::size_t> starts(a.src() + 1, 0);
  std::vector<Entry> entries;
  for (std::size_t j = 0; j < a.src(); ++j) {
    starts[j] = entries.size();
    SparseVec col(a.column(j).begin(), a.column(j).end());
    SparseVec other(b.column(j).begin(), b.column(j).end());
    axpy(col, Scalar::one(a.field()), other);
    for (Entry& e : col) entries.push_back(std::move(e));
  }
  starts[a.src()] = entries.size();
  return Mor::from_canonical(a.field(), a.src(), a.dst(), std::move(starts), std::move(entries));
}

Mor operator*(const Scalar& s, const Mor& a) {
  const Scalar k = s.convert(a.field());
  std::vector<SparseVec> columns(a.src());
  if (!k.is_zero())
    for (std::size_t j = 0; j < a.src(); ++j)
      for (const Entry& e : a.column(j)) columns[j].push_back({e.index, k * e.value});
  return Mor::from_columns(a.field(), a.src(), a.dst(), std::move(columns));
}

Mor operator-(const Mor& a, const Mor& b) { return a + (Scalar::from_int(b.field(), -1) * b); }

Mor direct_sum(const Mor& a, const Mor& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("direct_sum across fields");
  std::vector<SparseVec> columns;
  columns.reserve(a.src() + b.src());
  for (std::size_t j = 0; j < a.src(); ++j) columns.emplace_back(a.column(j).begin(), a.column(j).end());
  for (std::size_t j = 0; j < b.src(); ++j) {
    SparseVec col;
    for (const Entry& e : b.column(j))
      col.push_back({static_cast<std::uint32_t>(e.index + a.dst()), e.value});
    columns.push_back(std::move(col));
  }
  return Mor::from_columns(a.field(), a.src() + b.src(), a.dst() + b.dst(), std::move(columns));
}

std::optional<Witness> first_difference(const Mor& a, const Mor& b) {
  if (a.src() != b.src()) throw DimensionMismatch("comparison: src", a.src(), b.src());
  if (a.dst() != b.dst()) throw DimensionMismatch("comparison: dst", a.dst(), b.dst());
  if (!(a.field() == b.field())) throw FieldMismatch("comparison across fields");
  const Scalar zero = Scalar::zero(a.field());
  for (std::size_t j = 0; j < a.src(); ++j) {
    const auto x = a.column(j);
    const auto y = b.column(j);
    std::size_t p = 0;
    std::size_t q = 0;
    while (p < x.size() || q < y.size()) {
      const std::size_t rx = p < x.size() ? x[p].index : std::numeric_limits<std::size_t>::max();
      const std::size_t ry = q < y.size() ? y[q].index : std::numeric_limits<std::size_t>::max();
      if (rx == ry) {
        if (x[p].value != y[q].value) return Witness{j, rx, x[p].value, y[q].value};
        ++p;
        ++q;
      } else if (rx < ry) {
        return Witness{j, rx, x[p].value, zero};
      } else {
        return Witness{j, ry, zero, y[q].value};
      }
    }
  }
  return std::nullopt;
}

std::string to_string(const Mor& m) {
  std::ostringstream os;
  const auto rows = m.to_dense();
  os << "[" << m.dst() << "x" << m.src() << "]";
  for (const auto& row : rows) {
    os << "\n  [";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "]";
  }
  return os.str();
}

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a.is_zero() || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t p = 0;
  std::size_t q = 0;
  while (p < y.size() || q < x.size()) {
    if (q == x.size() || (p < y.size() && y[p].index < x[q].index)) {
      out.push_back(std::move(y[p++]));
    } else if (p == y.size() || x[q].index < y[p].index) {
      out.push_back({x[q].index, a * x[q].value});
      ++q;
    } else {
      Scalar v = y[p].value + a * x[q].value;
      if (!v.is_zero()) out.push_back({y[p].index, std::move(v)});
      ++p;
      ++q;
    }
  }
  y = std::move(out);
}

}  // namespace whq
