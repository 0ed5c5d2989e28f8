#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "whq/hopfmod.hpp"
#include "whq/modcat.hpp"
#include "whq/report.hpp"
#include "whq/whq.hpp"

namespace whq {

// Files are JSON with every scalar written as a string: "3", "-1/2", or a
// residue in [0, p). Tensor basis vectors e_i (x) e_j are addressed by index
// pairs, never flattened.
//
//   {"format": "whq-structure", "field": "Q" | {"Fp": p}, "dim": n,
//    "unit": [n], "mul": c[i][j][k], "counit": [n], "comul": d[i][j][k],
//    "antipode": a[i][j], "braiding": {"c": [[..]], "c_inv": [[..]]}?}
//
// with e_i e_j = sum_k c[i][j][k] e_k, delta(e_i) = sum d[i][j][k] e_j (x) e_k,
// lambda(e_i) = sum_j a[i][j] e_j and c, c_inv indexed [source][target] over
// the n*n basis of H (x) H.
//
//   {"format": "whq-hopf-module", "field": .., "dim": m,
//    "action": f[x][h][y], "coaction": r[x][y][h]}
//   {"format": "whq-hl-module", "field": .., "dim": d, "action": f[x][b][y]}
//
// with phi(e_x (x) e_h) = sum_y f[x][h][y] e_y, rho(e_x) = sum r[x][y][h] e_y (x) e_h.
// H_L-module actions use the basis of H_L produced by splitting Pi^L.

std::string save_structure(const WeakHopfQuasigroup& h);
/// Shape checks only; run check_axioms on the result. Throws ParseError.
WeakHopfQuasigroup load_structure(std::string_view text);

std::string save_hopf_module(const HopfModule& m);
/// Throws ParseError, or FieldMismatch if the file's field differs from H's.
HopfModule load_hopf_module(std::string_view text, const ContextPtr& ctx);

std::string save_hl_module(const RightHLModule& n);
RightHLModule load_hl_module(std::string_view text, const ContextPtr& ctx);

/// Throws ParseError if the file cannot be read.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

/// One line per check: "PASS (a1)" or "FAIL (a1)  <detail>".
std::string render_text(const Report& r);
/// {"passed": bool, "checks": [{"label", "passed", "detail"?, "witness"?}]}
std::string render_json(const Report& r);

}  // namespace whq
