#include "whq/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "whq/errors.hpp"

namespace whq {

namespace {

const Scalar* find(const SparseVec& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  return it != v.end() && it->index == index ? &it->value : nullptr;
}

void scale(SparseVec& v, const Scalar& k) {
  for (Entry& e : v) e.value *= k;
}

SparseVec unit(const Field& f, std::size_t index) {
  return {{static_cast<std::uint32_t>(index), Scalar::one(f)}};
}

}  // namespace

Rref::Rref(const Field& field, std::size_t width, bool track)
    : field_(field), width_(width), track_(track), row_of_pivot_(width, -1) {}

SparseVec Rref::reduce(const SparseVec& row) const {
  SparseVec out = row;
  // Stored rows vanish on every other pivot, so each pivot coefficient of the
  // input is cleared by exactly one subtraction.
  for (const Entry& e : row) {
    const long k = row_of_pivot_[e.index];
    if (k >= 0) axpy(out, -e.value, rows_[static_cast<std::size_t>(k)]);
  }
  return out;
}

bool Rref::insert(const SparseVec& row) {
  const std::size_t input = inserted_++;
  SparseVec r = row;
  SparseVec t;
  if (track_) t = unit(field_, input);
  for (const Entry& e : row) {
    const long k = row_of_pivot_[e.index];
    if (k < 0) continue;
    axpy(r, -e.value, rows_[static_cast<std::size_t>(k)]);
    if (track_) axpy(t, -e.value, trans_[static_cast<std::size_t>(k)]);
  }
  if (r.empty()) return false;
  const Scalar inv = r.front().value.inverse();
  scale(r, inv);
  if (track_) scale(t, inv);
  const std::size_t pivot = r.front().index;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar* c = find(rows_[k], pivot);
    if (c == nullptr) continue;
    const Scalar coeff = -*c;
    axpy(rows_[k], coeff, r);
    if (track_) axpy(trans_[k], coeff, t);
  }
  row_of_pivot_[pivot] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(r));
  pivot_.push_back(pivot);
  if (track_) trans_.push_back(std::move(t));
  return true;
}

std::vector<std::size_t> Rref::order() const {
  std::vector<std::size_t> idx(rows_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pivot_[a] < pivot_[b]; });
  return idx;
}

std::vector<std::size_t> Rref::pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t k : order()) out.push_back(pivot_[k]);
  return out;
}

std::vector<SparseVec> Rref::rows() const {
  std::vector<SparseVec> out;
  for (std::size_t k : order()) out.push_back(rows_[k]);
  return out;
}

std::vector<SparseVec> Rref::transforms() const {
  if (!track_) throw Error("Rref: transforms were not tracked");
  std::vector<SparseVec> out;
  for (std::size_t k : order()) out.push_back(trans_[k]);
  return out;
}

std::vector<long> Rref::pivot_positions() const {
  std::vector<long> out(width_, -1);
  const auto idx = order();
  for (std::size_t pos = 0; pos < idx.size(); ++pos)
    out[pivot_[idx[pos]]] = static_cast<long>(pos);
  return out;
}

Rref row_echelon(const Mor& m, bool track) { return column_echelon(m.transpose(), track); }

Rref column_echelon(const Mor& m, bool track) {
  Rref r(m.field(), m.dst(), track);
  for (std::size_t j = 0; j < m.src(); ++j) {
    const auto col = m.column(j);
    r.insert(SparseVec(col.begin(), col.end()));
  }
  return r;
}

std::size_t rank(const Mor& m) {
  // Eliminate along the shorter side.
  return m.src() <= m.dst() ? column_echelon(m).rank() : row_echelon(m).rank();
}

bool same_column_space(const Mor& a, const Mor& b) {
  if (a.dst() != b.dst()) throw DimensionMismatch("same_column_space: dst", a.dst(), b.dst());
  Rref r = column_echelon(a);
  const std::size_t ra = r.rank();
  for (std::size_t j = 0; j < b.src(); ++j) {
    const auto col = b.column(j);
    if (!r.reduce(SparseVec(col.begin(), col.end())).empty()) return false;
  }
  return rank(b) == ra;
}

SplitIdempotent split_idempotent(const Mor& e) {
  if (e.src() != e.dst()) throw DimensionMismatch("split_idempotent: square", e.src(), e.dst());
  if (compose(e, e) != e) throw NotIdempotent("split_idempotent: e o e != e");
  const Rref r = row_echelon(e);
  const auto pivots = r.pivots();
  const std::size_t n = e.src();
  const std::size_t k = pivots.size();
  std::vector<SparseVec> icols;
  icols.reserve(k);
  for (std::size_t j : pivots) {
    const auto col = e.column(j);
    icols.emplace_back(col.begin(), col.end());
  }
  SplitIdempotent s;
  s.ambient = n;
  s.rank = k;
  s.i = Mor::from_columns(e.field(), k, n, std::move(icols));
  s.p = Mor::from_rows(e.field(), n, k, r.rows());
  if (compose(s.i, s.p) != e || compose(s.p, s.i) != Mor::identity(e.field(), k))
    throw Error("split_idempotent: internal splitting check failed");
  return s;
}

EqualizerDatum equalizer(const Mor& f, const Mor& g) {
  if (f.src() != g.src()) throw DimensionMismatch("equalizer: src", f.src(), g.src());
  if (f.dst() != g.dst()) throw DimensionMismatch("equalizer: dst", f.dst(), g.dst());
  const Mor d = f - g;
  const Rref r = row_echelon(d);
  const auto pos = r.pivot_positions();
  const auto rows = r.rows();
  const auto pivots = r.pivots();
  const std::size_t n = d.src();
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (pos[c] < 0) free.push_back(c);
  // Kernel vector for free column c: e_c - sum_k R_k[c] e_{pivot_k}.
  std::vector<SparseVec> incl(free.size());
  for (std::size_t a = 0; a < free.size(); ++a) incl[a].push_back({static_cast<std::uint32_t>(free[a]), Scalar::one(d.field())});
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (const Entry& e : rows[k]) {
      if (e.index == pivots[k]) continue;
      const auto a = static_cast<std::size_t>(
          std::lower_bound(free.begin(), free.end(), e.index) - free.begin());
      incl[a].push_back({static_cast<std::uint32_t>(pivots[k]), -e.value});
    }
  std::vector<SparseVec> retr(free.size());
  for (std::size_t a = 0; a < free.size(); ++a) retr[a] = unit(d.field(), free[a]);
  EqualizerDatum out;
  out.inclusion = Mor::from_columns(d.field(), free.size(), n, std::move(incl));
  out.retraction = Mor::from_rows(d.field(), n, free.size(), retr);
  return out;
}

std::optional<Mor> factor_through(const EqualizerDatum& eq, const Mor& t) {
  Mor candidate = compose(eq.retraction, t);
  if (compose(eq.inclusion, candidate) != t) return std::nullopt;
  return candidate;
}

CoequalizerDatum coequalizer(const Mor& f, const Mor& g) {
  if (f.src() != g.src()) throw DimensionMismatch("coequalizer: src", f.src(), g.src());
  if (f.dst() != g.dst()) throw DimensionMismatch("coequalizer: dst", f.dst(), g.dst());
  const Mor d = f - g;
  const Field& field = d.field();
  const Rref r = column_echelon(d, true);
  const auto pos = r.pivot_positions();
  const auto rows = r.rows();
  const auto trans = r.transforms();
  const auto pivots = r.pivots();
  const std::size_t m = d.dst();
  std::vector<long> free_pos(m, -1);
  std::size_t q = 0;
  for (std::size_t c = 0; c < m; ++c)
    if (pos[c] < 0) free_pos[c] = static_cast<long>(q++);

  // n(e_c) = e_c for free c; n(e_{pivot_k}) = -R_k restricted to free coordinates.
  std::vector<SparseVec> ncols(m);
  std::vector<SparseVec> scols(q);
  for (std::size_t c = 0; c < m; ++c)
    if (free_pos[c] >= 0) {
      ncols[c] = unit(field, static_cast<std::size_t>(free_pos[c]));
      scols[static_cast<std::size_t>(free_pos[c])] = unit(field, c);
    }
  std::vector<SparseVec> wcols(m);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (const Entry& e : rows[k])
      if (e.index != pivots[k])
        ncols[pivots[k]].push_back({static_cast<std::uint32_t>(free_pos[e.index]), -e.value});
    wcols[pivots[k]] = trans[k];
  }
  CoequalizerDatum out;
  out.src = m;
  out.quotient_dim = q;
  out.n = Mor::from_columns(field, m, q, std::move(ncols));
  out.section = Mor::from_columns(field, q, m, std::move(scols));
  out.witness = Mor::from_columns(field, m, d.src(), std::move(wcols));
  return out;
}

std::optional<Mor> factor_through(const CoequalizerDatum& coeq, const Mor& t) {
  Mor candidate = compose(t, coeq.section);
  if (compose(candidate, coeq.n) != t) return std::nullopt;
  return candidate;
}

bool certifies_tensor_preservation(const CoequalizerDatum& coeq, const Mor& f, const Mor& g,
                                   std::size_t k) {
  const Field& field = f.field();
  const Mor id = Mor::identity(field, k);
  const Mor d = kron(f - g, id);
  const Mor lhs = compose(d, kron(coeq.witness, id)) + compose(kron(coeq.section, id), kron(coeq.n, id));
  const Mor n = kron(coeq.n, id);
  return lhs == Mor::identity(field, coeq.src * k) && compose(n, kron(f, id)) == compose(n, kron(g, id));
}

Mor inverse(const Mor& a) {
  if (a.src() != a.dst()) throw NotInvertible("inverse: map is not square");
  const Rref r = row_echelon(a, true);
  if (r.rank() != a.src()) throw NotInvertible("inverse: map is singular");
  // Fully reduced and full rank: the echelon form is the identity, so the
  // tracked row operations assemble the inverse.
  Mor inv = Mor::from_rows(a.field(), a.src(), a.src(), r.transforms());
  if (compose(inv, a) != Mor::identity(a.field(), a.src()))
    throw Error("inverse: internal check failed");
  return inv;
}

}  // namespace whq
