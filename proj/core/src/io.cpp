#include "whq/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "whq/errors.hpp"

namespace whq {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json field_json(const Field& f) {
  if (f.is_rational()) return "Q";
  ordered_json j;
  j["Fp"] = f.characteristic();
  return j;
}

Field parse_field(const json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.size() == 1 && j.contains("Fp") && j["Fp"].is_number_unsigned()) {
    try {
      return Field::prime(j["Fp"].get<std::uint64_t>());
    } catch (const Error& e) {
      throw ParseError(std::string("field: ") + e.what());
    }
  }
  throw ParseError("field: expected \"Q\" or {\"Fp\": p}");
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return j[key];
}

std::size_t parse_dim(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number_unsigned()) throw ParseError(std::string(key) + ": expected a nonnegative integer");
  return v.get<std::size_t>();
}

Scalar parse_scalar(const Field& f, const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": scalars must be strings");
  try {
    return Scalar::parse(f, j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

const json& array_of(const json& j, std::size_t size, const std::string& where) {
  if (!j.is_array() || j.size() != size)
    throw ParseError(where + ": expected an array of length " + std::to_string(size));
  return j;
}

// A dense array indexed [a][b] (or [a][b][c]) is read into the column / row
// positions chosen by `place(a, b, c)` -> (column, row).
template <class Place>
Mor parse_dense3(const Field& f, const json& j, std::size_t na, std::size_t nb, std::size_t nc,
                 std::size_t src, std::size_t dst, const std::string& where, Place place) {
  std::vector<SparseVec> cols(src);
  array_of(j, na, where);
  for (std::size_t a = 0; a < na; ++a) {
    array_of(j[a], nb, where);
    for (std::size_t b = 0; b < nb; ++b) {
      array_of(j[a][b], nc, where);
      for (std::size_t c = 0; c < nc; ++c) {
        const std::string at = where + "[" + std::to_string(a) + "][" + std::to_string(b) + "][" + std::to_string(c) + "]";
        const Scalar s = parse_scalar(f, j[a][b][c], at);
        if (s.is_zero()) continue;
        const auto [col, row] = place(a, b, c);
        cols[col].push_back({static_cast<std::uint32_t>(row), s});
      }
    }
  }
  return Mor::from_columns(f, src, dst, std::move(cols));
}

Mor parse_dense2(const Field& f, const json& j, std::size_t na, std::size_t nb, std::size_t src,
                 std::size_t dst, const std::string& where, bool a_is_column) {
  std::vector<SparseVec> cols(src);
  array_of(j, na, where);
  for (std::size_t a = 0; a < na; ++a) {
    array_of(j[a], nb, where);
    for (std::size_t b = 0; b < nb; ++b) {
      const Scalar s = parse_scalar(f, j[a][b], where + "[" + std::to_string(a) + "][" + std::to_string(b) + "]");
      if (s.is_zero()) continue;
      cols[a_is_column ? a : b].push_back({static_cast<std::uint32_t>(a_is_column ? b : a), s});
    }
  }
  return Mor::from_columns(f, src, dst, std::move(cols));
}

ordered_json dense_vector(const Mor& m, bool column) {
  ordered_json out = ordered_json::array();
  const std::size_t n = column ? m.dst() : m.src();
  for (std::size_t k = 0; k < n; ++k) out.push_back(column ? m.at(k, 0).to_string() : m.at(0, k).to_string());
  return out;
}

// out[a][b] = m.at(row, col) with (col, row) = place(a, b).
template <class Place>
ordered_json dense2(const Mor& m, std::size_t na, std::size_t nb, Place place) {
  ordered_json out = ordered_json::array();
  for (std::size_t a = 0; a < na; ++a) {
    ordered_json row = ordered_json::array();
    for (std::size_t b = 0; b < nb; ++b) {
      const auto [c, r] = place(a, b);
      row.push_back(m.at(r, c).to_string());
    }
    out.push_back(std::move(row));
  }
  return out;
}

template <class Place>
ordered_json dense3(const Mor& m, std::size_t na, std::size_t nb, std::size_t nc, Place place) {
  ordered_json out = ordered_json::array();
  for (std::size_t a = 0; a < na; ++a) {
    ordered_json mid = ordered_json::array();
    for (std::size_t b = 0; b < nb; ++b) {
      ordered_json row = ordered_json::array();
      for (std::size_t c = 0; c < nc; ++c) {
        const auto [col, r] = place(a, b, c);
        row.push_back(m.at(r, col).to_string());
      }
      mid.push_back(std::move(row));
    }
    out.push_back(std::move(mid));
  }
  return out;
}

json parse_document(std::string_view text, const char* format) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  const json& fmt = member(j, "format");
  if (!fmt.is_string() || fmt.get<std::string>() != format)
    throw ParseError(std::string("format: expected \"") + format + "\"");
  return j;
}

using Pair = std::pair<std::size_t, std::size_t>;

// Like dump(1), but arrays of scalars stay on one line.
void pretty(const ordered_json& j, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 1, ' ');
  if (j.is_object()) {
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
      out += inner + ordered_json(key).dump() + ": ";
      pretty(value, indent + 1, out);
      out += ++k < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else if (j.is_array() && !j.empty() && (j[0].is_array() || j[0].is_object())) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += inner;
      pretty(j[k], indent + 1, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += j.dump();
  }
}

std::string pretty(const ordered_json& j) {
  std::string out;
  pretty(j, 0, out);
  return out + "\n";
}

}  // namespace

std::string save_structure(const WeakHopfQuasigroup& h) {
  const std::size_t n = h.dim();
  ordered_json j;
  j["format"] = "whq-structure";
  j["field"] = field_json(h.field());
  j["dim"] = n;
  j["unit"] = dense_vector(h.unit(), true);
  j["mul"] = dense3(h.mul(), n, n, n, [n](std::size_t a, std::size_t b, std::size_t c) { return Pair{a * n + b, c}; });
  j["counit"] = dense_vector(h.counit(), false);
  j["comul"] = dense3(h.comul(), n, n, n, [n](std::size_t a, std::size_t b, std::size_t c) { return Pair{a, b * n + c}; });
  j["antipode"] = dense2(h.antipode(), n, n, [](std::size_t a, std::size_t b) { return Pair{a, b}; });
  if (const auto& b = h.braiding()) {
    const auto place = [](std::size_t a, std::size_t c) { return Pair{a, c}; };
    j["braiding"]["c"] = dense2(b->c, n * n, n * n, place);
    j["braiding"]["c_inv"] = dense2(b->c_inv, n * n, n * n, place);
  }
  return pretty(j);
}

WeakHopfQuasigroup load_structure(std::string_view text) {
  const json j = parse_document(text, "whq-structure");
  const Field f = parse_field(member(j, "field"));
  const std::size_t n = parse_dim(j, "dim");
  const Mor unit = parse_dense2(f, json::array({member(j, "unit")}), 1, n, 1, n, "unit", true);
  const Mor counit = parse_dense2(f, json::array({member(j, "counit")}), 1, n, n, 1, "counit", false);
  const Mor mul = parse_dense3(f, member(j, "mul"), n, n, n, n * n, n, "mul",
                               [n](std::size_t a, std::size_t b, std::size_t c) { return Pair{a * n + b, c}; });
  const Mor comul = parse_dense3(f, member(j, "comul"), n, n, n, n, n * n, "comul",
                                 [n](std::size_t a, std::size_t b, std::size_t c) { return Pair{a, b * n + c}; });
  const Mor antipode = parse_dense2(f, member(j, "antipode"), n, n, n, n, "antipode", true);
  std::optional<Braiding> braiding;
  if (j.contains("braiding")) {
    const json& b = j["braiding"];
    braiding = Braiding{parse_dense2(f, member(b, "c"), n * n, n * n, n * n, n * n, "braiding.c", true),
                        parse_dense2(f, member(b, "c_inv"), n * n, n * n, n * n, n * n, "braiding.c_inv", true)};
  }
  return WeakHopfQuasigroup::unchecked(UnitalMagma::unchecked(unit, mul), Comonoid::unchecked(counit, comul),
                                       antipode, braiding);
}

std::string save_hopf_module(const HopfModule& m) {
  const std::size_t d = m.dim();
  const std::size_t n = m.h().dim();
  ordered_json j;
  j["format"] = "whq-hopf-module";
  j["field"] = field_json(m.h().field());
  j["dim"] = d;
  j["action"] = dense3(m.action(), d, n, d, [n](std::size_t x, std::size_t h, std::size_t y) { return Pair{x * n + h, y}; });
  j["coaction"] = dense3(m.coaction(), d, d, n, [n](std::size_t x, std::size_t y, std::size_t h) { return Pair{x, y * n + h}; });
  return pretty(j);
}

HopfModule load_hopf_module(std::string_view text, const ContextPtr& ctx) {
  const json j = parse_document(text, "whq-hopf-module");
  const Field f = parse_field(member(j, "field"));
  if (!(f == ctx->field())) throw FieldMismatch("module file over " + f.name() + ", structure over " + ctx->field().name());
  const std::size_t d = parse_dim(j, "dim");
  const std::size_t n = ctx->n();
  const Mor action = parse_dense3(f, member(j, "action"), d, n, d, d * n, d, "action",
                                  [n](std::size_t x, std::size_t h, std::size_t y) { return Pair{x * n + h, y}; });
  const Mor coaction = parse_dense3(f, member(j, "coaction"), d, d, n, d, d * n, "coaction",
                                    [n](std::size_t x, std::size_t y, std::size_t h) { return Pair{x, y * n + h}; });
  return HopfModule(ctx, action, coaction);
}

std::string save_hl_module(const RightHLModule& m) {
  const std::size_t d = m.dim();
  const std::size_t r = m.context()->r();
  ordered_json j;
  j["format"] = "whq-hl-module";
  j["field"] = field_json(m.context()->field());
  j["dim"] = d;
  j["action"] = dense3(m.action(), d, r, d, [r](std::size_t x, std::size_t b, std::size_t y) { return Pair{x * r + b, y}; });
  return pretty(j);
}

RightHLModule load_hl_module(std::string_view text, const ContextPtr& ctx) {
  const json j = parse_document(text, "whq-hl-module");
  const Field f = parse_field(member(j, "field"));
  if (!(f == ctx->field())) throw FieldMismatch("module file over " + f.name() + ", structure over " + ctx->field().name());
  const std::size_t d = parse_dim(j, "dim");
  const std::size_t r = ctx->r();
  return RightHLModule(ctx, parse_dense3(f, member(j, "action"), d, r, d, d * r, d, "action",
                                         [r](std::size_t x, std::size_t b, std::size_t y) { return Pair{x * r + b, y}; }));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

std::string render_text(const Report& r) {
  std::string out;
  for (const Check& c : r.checks()) {
    out += c.passed ? "PASS " : "FAIL ";
    out += c.label;
    if (!c.passed && !c.detail.empty()) out += "  " + c.detail;
    out += '\n';
  }
  return out;
}

std::string render_json(const Report& r) {
  ordered_json j;
  j["passed"] = r.passed();
  j["checks"] = ordered_json::array();
  for (const Check& c : r.checks()) {
    ordered_json e;
    e["label"] = c.label;
    e["passed"] = c.passed;
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (c.witness)
      e["witness"] = {{"input", c.witness->column},
                      {"output", c.witness->row},
                      {"lhs", c.witness->left.to_string()},
                      {"rhs", c.witness->right.to_string()}};
    j["checks"].push_back(std::move(e));
  }
  return pretty(j);
}

}  // namespace whq
