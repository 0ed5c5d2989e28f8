#include "whq/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "whq/errors.hpp"

namespace whq {

CayleyTable CayleyTable::make(std::vector<std::vector<std::size_t>> table) {
  const std::size_t k = table.size();
  if (k == 0) throw Error("Cayley table: empty");
  for (const auto& row : table) {
    if (row.size() != k) throw Error("Cayley table: not square");
    std::vector<bool> seen(k, false);
    for (std::size_t v : row) {
      if (v >= k) throw Error("Cayley table: entry out of range");
      if (seen[v]) throw Error("Cayley table: a row is not a permutation");
      seen[v] = true;
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<bool> seen(k, false);
    for (std::size_t i = 0; i < k; ++i) {
      if (seen[table[i][j]]) throw Error("Cayley table: a column is not a permutation");
      seen[table[i][j]] = true;
    }
  }
  for (std::size_t e = 0; e < k; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < k && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) return CayleyTable(std::move(table), e);
  }
  throw Error("Cayley table: no two-sided identity");
}

CayleyTable CayleyTable::cyclic(std::size_t k) {
  std::vector<std::vector<std::size_t>> t(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) t[a][b] = (a + b) % k;
  return make(std::move(t));
}

CayleyTable CayleyTable::symmetric(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  std::vector<std::vector<std::size_t>> t(perms.size(), std::vector<std::size_t>(perms.size()));
  std::vector<std::size_t> st(n);
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      for (std::size_t i = 0; i < n; ++i) st[i] = perms[a][perms[b][i]];
      t[a][b] = index.at(st);
    }
  return make(std::move(t));
}

CayleyTable CayleyTable::product(const CayleyTable& a, const CayleyTable& b) {
  const std::size_t m = a.order();
  const std::size_t n = b.order();
  std::vector<std::vector<std::size_t>> t(m * n, std::vector<std::size_t>(m * n));
  for (std::size_t x = 0; x < m * n; ++x)
    for (std::size_t y = 0; y < m * n; ++y) t[x][y] = a.mul(x / n, y / n) * n + b.mul(x % n, y % n);
  return make(std::move(t));
}

std::optional<std::size_t> CayleyTable::inverse(std::size_t x) const {
  for (std::size_t y = 0; y < order(); ++y)
    if (mul(x, y) == identity_ && mul(y, x) == identity_) return y;
  return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> CayleyTable::associativity_witness() const {
  const std::size_t k = order();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return std::array<std::size_t, 3>{a, b, c};
  return std::nullopt;
}

std::optional<std::array<std::size_t, 2>> CayleyTable::inverse_property_witness() const {
  const std::size_t k = order();
  for (std::size_t x = 0; x < k; ++x) {
    const auto inv = inverse(x);
    if (!inv) return std::array<std::size_t, 2>{x, x};
    for (std::size_t y = 0; y < k; ++y)
      if (mul(*inv, mul(x, y)) != y || mul(mul(y, x), *inv) != y) return std::array<std::size_t, 2>{x, y};
  }
  return std::nullopt;
}

CayleyTable chein_double(const CayleyTable& g) {
  if (g.associativity_witness()) throw NotAssociative("Chein double: input is not a group");
  const std::size_t m = g.order();
  std::vector<std::size_t> inv(m);
  for (std::size_t x = 0; x < m; ++x) {
    const auto i = g.inverse(x);
    if (!i) throw NoInverse("Chein double: input is not a group");
    inv[x] = *i;
  }
  std::vector<std::vector<std::size_t>> t(2 * m, std::vector<std::size_t>(2 * m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      t[a][b] = g.mul(a, b);
      t[a][m + b] = m + g.mul(b, a);
      t[m + a][b] = m + g.mul(a, inv[b]);
      t[m + a][m + b] = g.mul(inv[b], a);
    }
  return CayleyTable::make(std::move(t));
}

FiniteGroupoid FiniteGroupoid::make(std::size_t objects, std::vector<Arrow> arrows,
                                    std::vector<std::vector<std::optional<std::size_t>>> compose) {
  const std::size_t k = arrows.size();
  if (compose.size() != k) throw InvalidGroupoid("composition table has the wrong size");
  for (const Arrow& a : arrows)
    if (a.source >= objects || a.target >= objects) throw InvalidGroupoid("arrow endpoint out of range");
  for (std::size_t f = 0; f < k; ++f) {
    if (compose[f].size() != k) throw InvalidGroupoid("composition table has the wrong size");
    for (std::size_t g = 0; g < k; ++g) {
      const bool composable = arrows[f].source == arrows[g].target;
      const auto& fg = compose[f][g];
      if (composable != fg.has_value())
        throw InvalidGroupoid("composition defined exactly when source(f) = target(g)");
      if (fg && (*fg >= k || arrows[*fg].source != arrows[g].source || arrows[*fg].target != arrows[f].target))
        throw InvalidGroupoid("composite has the wrong endpoints");
    }
  }
  for (std::size_t f = 0; f < k; ++f)
    for (std::size_t g = 0; g < k; ++g)
      for (std::size_t h = 0; h < k; ++h) {
        if (!compose[f][g] || !compose[g][h]) continue;
        if (compose[*compose[f][g]][h] != compose[f][*compose[g][h]]) throw InvalidGroupoid("not associative");
      }

  FiniteGroupoid out;
  out.objects_ = objects;
  out.identities_.assign(objects, k);
  for (std::size_t o = 0; o < objects; ++o)
    for (std::size_t e = 0; e < k && out.identities_[o] == k; ++e) {
      if (arrows[e].source != o || arrows[e].target != o) continue;
      bool ok = true;
      for (std::size_t f = 0; f < k && ok; ++f) {
        if (arrows[f].target == o) ok = compose[e][f] == f;
        if (ok && arrows[f].source == o) ok = compose[f][e] == f;
      }
      if (ok) out.identities_[o] = e;
    }
  for (std::size_t o = 0; o < objects; ++o)
    if (out.identities_[o] == k) throw InvalidGroupoid("object without identity arrow");
  out.inverses_.assign(k, k);
  for (std::size_t f = 0; f < k; ++f)
    for (std::size_t g = 0; g < k && out.inverses_[f] == k; ++g)
      if (compose[f][g] == out.identities_[arrows[f].target] && compose[g][f] == out.identities_[arrows[f].source])
        out.inverses_[f] = g;
  for (std::size_t f = 0; f < k; ++f)
    if (out.inverses_[f] == k) throw InvalidGroupoid("arrow without inverse");
  out.arrows_ = std::move(arrows);
  out.compose_ = std::move(compose);
  return out;
}

FiniteGroupoid FiniteGroupoid::discrete(std::size_t objects) {
  std::vector<Arrow> arrows(objects);
  std::vector<std::vector<std::optional<std::size_t>>> c(objects, std::vector<std::optional<std::size_t>>(objects));
  for (std::size_t i = 0; i < objects; ++i) {
    arrows[i] = {i, i};
    c[i][i] = i;
  }
  return make(objects, std::move(arrows), std::move(c));
}

FiniteGroupoid FiniteGroupoid::pair(std::size_t objects) {
  const std::size_t k = objects;
  std::vector<Arrow> arrows(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) arrows[i * k + j] = {j, i};
  std::vector<std::vector<std::optional<std::size_t>>> c(k * k, std::vector<std::optional<std::size_t>>(k * k));
  for (std::size_t f = 0; f < k * k; ++f)
    for (std::size_t g = 0; g < k * k; ++g)
      if (f % k == g / k) c[f][g] = (f / k) * k + g % k;
  return make(objects, std::move(arrows), std::move(c));
}

FiniteGroupoid FiniteGroupoid::from_group(const CayleyTable& g) {
  const std::size_t k = g.order();
  std::vector<Arrow> arrows(k, Arrow{0, 0});
  std::vector<std::vector<std::optional<std::size_t>>> c(k, std::vector<std::optional<std::size_t>>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) c[a][b] = g.mul(a, b);
  return make(1, std::move(arrows), std::move(c));
}

namespace {

// Grouplike basis: delta(x) = x (x) x, eps(x) = 1, lambda(x) = inv(x).
WeakHopfQuasigroup grouplike(std::size_t k, const Field& field, const SparseVec& unit,
                             const std::function<std::optional<std::size_t>(std::size_t, std::size_t)>& mul,
                             const std::function<std::size_t(std::size_t)>& inv) {
  const Scalar one = Scalar::one(field);
  std::vector<SparseVec> mcols(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (const auto ab = mul(a, b)) mcols[a * k + b].push_back({static_cast<std::uint32_t>(*ab), one});
  std::vector<SparseVec> ecols(k, SparseVec{{0, one}});
  std::vector<SparseVec> dcols(k);
  std::vector<SparseVec> lcols(k);
  for (std::size_t x = 0; x < k; ++x) {
    dcols[x].push_back({static_cast<std::uint32_t>(x * k + x), one});
    lcols[x].push_back({static_cast<std::uint32_t>(inv(x)), one});
  }
  const UnitalMagma magma = UnitalMagma::make(Mor::from_columns(field, 1, k, {unit}),
                                              Mor::from_columns(field, k * k, k, std::move(mcols)));
  const Comonoid comonoid = Comonoid::make(Mor::from_columns(field, k, 1, std::move(ecols)),
                                           Mor::from_columns(field, k, k * k, std::move(dcols)));
  return WeakHopfQuasigroup::make(magma, comonoid, Mor::from_columns(field, k, k, std::move(lcols)));
}

WeakHopfQuasigroup table_algebra(const CayleyTable& g, const Field& field) {
  const SparseVec unit{{static_cast<std::uint32_t>(g.identity()), Scalar::one(field)}};
  return grouplike(
      g.order(), field, unit, [&](std::size_t a, std::size_t b) { return std::optional<std::size_t>(g.mul(a, b)); },
      [&](std::size_t x) { return *g.inverse(x); });
}

}  // namespace

WeakHopfQuasigroup group_algebra(const CayleyTable& g, const Field& field) {
  if (const auto w = g.associativity_witness())
    throw NotAssociative("(" + std::to_string((*w)[0]) + " " + std::to_string((*w)[1]) + ") " +
                         std::to_string((*w)[2]) + " != " + std::to_string((*w)[0]) + " (" +
                         std::to_string((*w)[1]) + " " + std::to_string((*w)[2]) + ")");
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!g.inverse(x)) throw NoInverse("element " + std::to_string(x) + " has no inverse");
  return table_algebra(g, field);
}

WeakHopfQuasigroup loop_algebra(const CayleyTable& g, const Field& field) {
  if (const auto w = g.inverse_property_witness())
    throw NotIPLoop("inverse property fails at x = " + std::to_string((*w)[0]) + ", y = " + std::to_string((*w)[1]));
  return table_algebra(g, field);
}

WeakHopfQuasigroup groupoid_algebra(const FiniteGroupoid& g, const Field& field) {
  SparseVec unit;
  for (std::size_t o = 0; o < g.objects(); ++o)
    unit.push_back({static_cast<std::uint32_t>(g.identity(o)), Scalar::one(field)});
  return grouplike(
      g.arrows(), field, unit, [&](std::size_t a, std::size_t b) { return g.compose(a, b); },
      [&](std::size_t x) { return g.inverse(x); });
}

TensorCandidate tensor_whq(const WeakHopfQuasigroup& a, const WeakHopfQuasigroup& b) {
  if (a.braiding() || b.braiding()) throw Error("tensor_whq: only the default symmetric braiding is supported");
  if (!(a.field() == b.field())) throw FieldMismatch("tensor_whq: factors over different fields");
  WeakHopfQuasigroup h = WeakHopfQuasigroup::unchecked(tensor_magma(a.magma(), b.magma()),
                                                       tensor_comonoid(a.comonoid(), b.comonoid()),
                                                       kron(a.antipode(), b.antipode()));
  AxiomReport report = check_axioms(h);
  return TensorCandidate{std::move(h), std::move(report)};
}

HopfModule regular_hopf_module(const ContextPtr& ctx) { return HopfModule(ctx, ctx->h.mul(), ctx->h.comul()); }

RightHLModule free_hl_module(const ContextPtr& ctx, std::size_t k) {
  return RightHLModule(ctx, kron(Mor::identity(ctx->field(), k), ctx->left.monoid.mul()));
}

RightHLModule h_as_hl_module(const ContextPtr& ctx) {
  return RightHLModule(ctx, (Term(ctx->h.mul()) * tensor(ident(ctx->n()), ctx->left.i())).eval(ctx->field()));
}

Mor free_projection(const ContextPtr& ctx, std::size_t k, std::size_t j) {
  const std::size_t r = ctx->r();
  if (j >= k) throw Error("free_projection: index out of range");
  std::vector<SparseVec> cols(k * r);
  for (std::size_t a = 0; a < r; ++a) cols[j * r + a].push_back({static_cast<std::uint32_t>(a), Scalar::one(ctx->field())});
  return Mor::from_columns(ctx->field(), k * r, r, std::move(cols));
}

Mor free_inclusion(const ContextPtr& ctx, std::size_t k, std::size_t j) {
  return free_projection(ctx, k, j).transpose();
}

Mor left_multiplication(const ContextPtr& ctx, const Mor& b) {
  const std::size_t r = ctx->r();
  if (b.src() != 1) throw DimensionMismatch("left_multiplication: src", 1, b.src());
  if (b.dst() != r) throw DimensionMismatch("left_multiplication: dst", r, b.dst());
  return (Term(ctx->left.monoid.mul()) * tensor(Term(b), ident(r))).eval(ctx->field());
}

namespace {

std::optional<std::size_t> suffix_number(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  std::size_t v = 0;
  for (std::size_t k = prefix.size(); k < name.size(); ++k) {
    if (name[k] < '0' || name[k] > '9' || v > 1000) return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(name[k] - '0');
  }
  return v;
}

}  // namespace

WeakHopfQuasigroup named_fixture(const std::string& name, const Field& field) {
  if (name == "flagship") {
    TensorCandidate t = tensor_whq(named_fixture("chein-s3", field),
                                   groupoid_algebra(FiniteGroupoid::discrete(2), field));
    if (const Check* bad = t.report.first_failure()) throw AxiomViolation(bad->label, bad->detail);
    return std::move(t.structure);
  }
  if (auto k = suffix_number(name, "chein-s")) return loop_algebra(chein_double(CayleyTable::symmetric(*k)), field);
  if (auto k = suffix_number(name, "chein-c")) return loop_algebra(chein_double(CayleyTable::cyclic(*k)), field);
  if (auto k = suffix_number(name, "discrete-")) return groupoid_algebra(FiniteGroupoid::discrete(*k), field);
  if (auto k = suffix_number(name, "pair-")) return groupoid_algebra(FiniteGroupoid::pair(*k), field);
  if (auto k = suffix_number(name, "c"); k && *k > 0) return group_algebra(CayleyTable::cyclic(*k), field);
  if (auto k = suffix_number(name, "s"); k && *k > 0 && *k <= 6)
    return group_algebra(CayleyTable::symmetric(*k), field);
  throw Error("unknown fixture '" + name + "'");
}

}  // namespace whq
