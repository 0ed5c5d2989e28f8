#include "whq/term.hpp"

#include <algorithm>
#include <tuple>

#include "whq/errors.hpp"

namespace whq {

struct Term::Node {
  enum class Kind { Leaf, Identity, Braid, Compose, Tensor };

  Kind kind;
  std::size_t src;
  std::size_t dst;
  std::optional<Field> field;
  Mor mor;                     // Leaf
  std::size_t left_dim = 0;    // Braid: c_{left,right}
  std::size_t right_dim = 0;
  std::shared_ptr<const Node> a;  // Compose: outer g; Tensor: left factor
  std::shared_ptr<const Node> b;  // Compose: inner f; Tensor: right factor
};

namespace {

using Node = Term::Node;
using NodePtr = std::shared_ptr<const Node>;

std::optional<Field> merge_fields(const std::optional<Field>& x, const std::optional<Field>& y) {
  if (x && y && !(*x == *y))
    throw FieldMismatch("term combines " + x->name() + " and " + y->name());
  return x ? x : y;
}

Mor apply_node(const Node& n, const Mor& x);

// Column-major staging area for building a Mor column by column.
struct ColumnBuilder {
  std::vector<std::size_t> starts;
  std::vector<Entry> entries;

  void open() { starts.push_back(entries.size()); }
  Mor finish(const Field& f, std::size_t src, std::size_t dst) {
    starts.push_back(entries.size());
    return Mor::from_canonical(f, src, dst, std::move(starts), std::move(entries));
  }
};

// (id_left (x) B) x, where x's rows index pairs (i, j) with j < B.src.
Mor apply_right_factor(const Node& right, std::size_t left_dim, const Mor& x) {
  const std::size_t bs = right.src;
  const std::size_t bd = right.dst;
  // One batch column per (input column, left index) group.
  ColumnBuilder batch;
  std::vector<std::uint32_t> group_left;
  std::vector<std::size_t> group_count(x.src(), 0);
  for (std::size_t k = 0; k < x.src(); ++k) {
    const auto col = x.column(k);
    std::size_t p = 0;
    while (p < col.size()) {
      const std::uint32_t i = static_cast<std::uint32_t>(col[p].index / bs);
      batch.open();
      for (; p < col.size() && col[p].index / bs == i; ++p)
        batch.entries.push_back({static_cast<std::uint32_t>(col[p].index % bs), col[p].value});
      group_left.push_back(i);
      ++group_count[k];
    }
  }
  const std::size_t groups = group_left.size();
  const Mor image = apply_node(right, batch.finish(x.field(), groups, bs));
  ColumnBuilder out;
  std::size_t g = 0;
  for (std::size_t k = 0; k < x.src(); ++k) {
    out.open();
    for (std::size_t c = 0; c < group_count[k]; ++c, ++g)
      for (const Entry& e : image.column(g))
        out.entries.push_back(
            {static_cast<std::uint32_t>(group_left[g] * bd + e.index), e.value});
  }
  return out.finish(x.field(), x.src(), left_dim * bd);
}

// (A (x) id_right) x, where x's rows index pairs (i, j) with j < right_dim.
Mor apply_left_factor(const Node& left, std::size_t right_dim, const Mor& x) {
  const std::size_t ad = left.dst;
  ColumnBuilder batch;
  std::vector<std::uint32_t> group_right;
  std::vector<std::size_t> group_count(x.src(), 0);
  std::vector<std::tuple<std::uint32_t, std::uint32_t, const Scalar*>> scratch;
  for (std::size_t k = 0; k < x.src(); ++k) {
    scratch.clear();
    for (const Entry& e : x.column(k))
      scratch.emplace_back(static_cast<std::uint32_t>(e.index % right_dim),
                           static_cast<std::uint32_t>(e.index / right_dim), &e.value);
    std::sort(scratch.begin(), scratch.end(), [](const auto& u, const auto& v) {
      return std::tie(std::get<0>(u), std::get<1>(u)) < std::tie(std::get<0>(v), std::get<1>(v));
    });
    std::size_t p = 0;
    while (p < scratch.size()) {
      const std::uint32_t j = std::get<0>(scratch[p]);
      batch.open();
      for (; p < scratch.size() && std::get<0>(scratch[p]) == j; ++p)
        batch.entries.push_back({std::get<1>(scratch[p]), *std::get<2>(scratch[p])});
      group_right.push_back(j);
      ++group_count[k];
    }
  }
  const std::size_t groups = group_right.size();
  const Mor image = apply_node(left, batch.finish(x.field(), groups, left.src));
  ColumnBuilder out;
  std::vector<Entry> column;
  std::size_t g = 0;
  for (std::size_t k = 0; k < x.src(); ++k) {
    out.open();
    column.clear();
    for (std::size_t c = 0; c < group_count[k]; ++c, ++g)
      for (const Entry& e : image.column(g))
        column.push_back({static_cast<std::uint32_t>(e.index * right_dim + group_right[g]), e.value});
    // Distinct (i', j) pairs never collide, so sorting suffices.
    std::sort(column.begin(), column.end(),
              [](const Entry& u, const Entry& v) { return u.index < v.index; });
    for (Entry& e : column) out.entries.push_back(std::move(e));
  }
  return out.finish(x.field(), x.src(), ad * right_dim);
}

Mor apply_braid(std::size_t m, std::size_t n, const Mor& x) {
  ColumnBuilder out;
  std::vector<Entry> column;
  for (std::size_t k = 0; k < x.src(); ++k) {
    out.open();
    column.clear();
    for (const Entry& e : x.column(k)) {
      const std::size_t a = e.index / n;
      const std::size_t b = e.index % n;
      column.push_back({static_cast<std::uint32_t>(b * m + a), e.value});
    }
    std::sort(column.begin(), column.end(),
              [](const Entry& u, const Entry& v) { return u.index < v.index; });
    for (Entry& e : column) out.entries.push_back(std::move(e));
  }
  return out.finish(x.field(), x.src(), m * n);
}

Mor apply_node(const Node& n, const Mor& x) {
  if (x.dst() != n.src) throw DimensionMismatch("term application", n.src, x.dst());
  if (n.field && !(*n.field == x.field()))
    throw FieldMismatch("term over " + n.field->name() + " applied to " + x.field().name());
  switch (n.kind) {
    case Node::Kind::Leaf:
      return compose(n.mor, x);
    case Node::Kind::Identity:
      return x;
    case Node::Kind::Braid:
      return apply_braid(n.left_dim, n.right_dim, x);
    case Node::Kind::Compose:
      return apply_node(*n.a, apply_node(*n.b, x));
    case Node::Kind::Tensor: {
      const Node& left = *n.a;
      const Node& right = *n.b;
      Mor y = right.kind == Node::Kind::Identity ? x : apply_right_factor(right, left.src, x);
      if (left.kind == Node::Kind::Identity) return y;
      return apply_left_factor(left, right.dst, y);
    }
  }
  throw Error("unreachable term kind");
}

Mor eval_node(const Node& n, const Field& f) {
  switch (n.kind) {
    case Node::Kind::Leaf:
      return n.mor;
    case Node::Kind::Identity:
      return Mor::identity(f, n.src);
    case Node::Kind::Braid:
      return swap(f, n.left_dim, n.right_dim);
    case Node::Kind::Compose:
      return apply_node(*n.a, eval_node(*n.b, f));
    case Node::Kind::Tensor:
      return kron(eval_node(*n.a, f), eval_node(*n.b, f));
  }
  throw Error("unreachable term kind");
}

NodePtr make_identity(std::size_t n) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Identity;
  node->src = node->dst = n;
  return node;
}

}  // namespace

Term::Term(const Mor& m) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Leaf;
  node->src = m.src();
  node->dst = m.dst();
  node->field = m.field();
  node->mor = m;
  node_ = std::move(node);
}

Term Term::identity(std::size_t n) { return Term(make_identity(n)); }

Term Term::braid(std::size_t m, std::size_t n) {
  if (m == 1 || n == 1) return identity(m * n);
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Braid;
  node->src = node->dst = m * n;
  node->left_dim = m;
  node->right_dim = n;
  return Term(std::move(node));
}

std::size_t Term::src() const noexcept { return node_->src; }
std::size_t Term::dst() const noexcept { return node_->dst; }
std::optional<Field> Term::field() const noexcept { return node_->field; }

Mor Term::eval() const {
  if (!node_->field) throw Error("cannot evaluate a term without a concrete leaf; pass a field");
  return eval_node(*node_, *node_->field);
}

Mor Term::eval(const Field& field) const {
  if (node_->field && !(*node_->field == field))
    throw FieldMismatch("term over " + node_->field->name() + " evaluated over " + field.name());
  return eval_node(*node_, field);
}

Mor Term::apply(const Mor& x) const { return apply_node(*node_, x); }

Term operator*(const Term& g, const Term& f) {
  if (g.src() != f.dst()) throw DimensionMismatch("compose(g, f): g.src vs f.dst", g.src(), f.dst());
  auto field = merge_fields(g.field(), f.field());
  if (g.node_->kind == Node::Kind::Identity) return f;
  if (f.node_->kind == Node::Kind::Identity) return g;
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Compose;
  node->src = f.src();
  node->dst = g.dst();
  node->field = field;
  node->a = g.node_;
  node->b = f.node_;
  return Term(std::move(node));
}

Term tensor(const Term& a, const Term& b) {
  auto field = merge_fields(a.field(), b.field());
  const bool a_id = a.node_->kind == Node::Kind::Identity;
  const bool b_id = b.node_->kind == Node::Kind::Identity;
  if (a_id && b_id) return Term::identity(a.src() * b.src());
  if (a_id && a.src() == 1) return b;
  if (b_id && b.src() == 1) return a;
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Tensor;
  node->src = a.src() * b.src();
  node->dst = a.dst() * b.dst();
  node->field = field;
  node->a = a.node_;
  node->b = b.node_;
  return Term(std::move(node));
}

std::optional<Witness> first_difference(const Term& a, const Term& b) {
  auto field = merge_fields(a.field(), b.field());
  if (!field) field = Field::rationals();
  return first_difference(a.eval(*field), b.eval(*field));
}

}  // namespace whq
