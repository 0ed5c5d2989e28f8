#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "whq/errors.hpp"
#include "whq/generators.hpp"
#include "whq/hopfmod.hpp"
#include "whq/io.hpp"
#include "whq/modcat.hpp"
#include "whq/whq.hpp"

namespace {

using namespace whq;
using nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kLawFailure = 1;
constexpr int kParseError = 2;

struct Options {
  std::string report = "text";
  std::string field;
  std::uint64_t seed = 1;
};

// Everything a command prints, kept in order so text and JSON agree.
class Output {
 public:
  explicit Output(std::string command) : command_(std::move(command)) {}

  void fact(const std::string& key, const std::string& value) { facts_.emplace_back(key, value); }
  void section(const std::string& name, const Report& r) { sections_.emplace_back(name, r); }
  bool passed() const {
    for (const auto& s : sections_)
      if (!s.second.passed()) return false;
    return true;
  }

  int finish(const Options& opt) const {
    const bool ok = passed();
    if (opt.report == "json") {
      ordered_json j;
      j["command"] = command_;
      j["passed"] = ok;
      j["facts"] = ordered_json::object();
      for (const auto& [k, v] : facts_) j["facts"][k] = v;
      j["reports"] = ordered_json::object();
      for (const auto& [name, r] : sections_) j["reports"][name] = ordered_json::parse(render_json(r));
      std::cout << j.dump(1) << "\n";
    } else {
      for (const auto& [k, v] : facts_) std::cout << k << ": " << v << "\n";
      for (const auto& [name, r] : sections_) std::cout << "[" << name << "]\n" << render_text(r);
      std::cout << command_ << ": ";
      if (ok) {
        std::size_t n = 0;
        for (const auto& s : sections_) n += s.second.size();
        std::cout << "PASS (" << n << " checks)\n";
      } else {
        for (const auto& s : sections_)
          if (const Check* bad = s.second.first_failure()) {
            std::cout << "FAIL " << bad->label << "\n";
            break;
          }
      }
    }
    return ok ? kPass : kLawFailure;
  }

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> facts_;
  std::vector<std::pair<std::string, Report>> sections_;
};

Field parse_field_flag(const std::string& text) {
  if (text == "Q" || text == "q") return Field::rationals();
  std::string digits = text;
  if (digits.rfind("F", 0) == 0) digits = digits.substr(digits.find_first_of("0123456789") == std::string::npos
                                                            ? digits.size()
                                                            : digits.find_first_of("0123456789"));
  try {
    std::size_t used = 0;
    const unsigned long long p = std::stoull(digits, &used);
    if (used == digits.size()) return Field::prime(p);
  } catch (const std::logic_error&) {
  }
  throw ParseError("--field: expected Q or a prime, got \"" + text + "\"");
}

Mor to_field(const Mor& m, const Field& f) { return m.convert(f); }

WeakHopfQuasigroup convert(const WeakHopfQuasigroup& h, const Field& f) {
  if (h.field() == f) return h;
  std::optional<Braiding> b;
  if (h.braiding()) b = Braiding{to_field(h.braiding()->c, f), to_field(h.braiding()->c_inv, f)};
  return WeakHopfQuasigroup::unchecked(
      UnitalMagma::unchecked(to_field(h.unit(), f), to_field(h.mul(), f)),
      Comonoid::unchecked(to_field(h.counit(), f), to_field(h.comul(), f)), to_field(h.antipode(), f), b);
}

WeakHopfQuasigroup load(const std::string& path, const Options& opt) {
  WeakHopfQuasigroup h = load_structure(read_file(path));
  if (!opt.field.empty()) h = convert(h, parse_field_flag(opt.field));
  return h;
}

// Validates H and builds its context; on failure the axiom report is returned instead.
std::optional<ContextPtr> context_or_report(const WeakHopfQuasigroup& h, Output& out) {
  const Report axioms = check_axioms(h);
  if (!axioms.passed()) {
    out.section("axioms", axioms);
    return std::nullopt;
  }
  return Context::make(h);
}

std::string dims(const Mor& m) { return std::to_string(m.dst()) + "x" + std::to_string(m.src()); }

int cmd_validate(const std::string& path, const Options& opt) {
  const WeakHopfQuasigroup h = load(path, opt);
  Output out("validate");
  out.fact("field", h.field().name());
  out.fact("dim H", std::to_string(h.dim()));
  const Report axioms = check_axioms(h);
  out.section("axioms", axioms);
  if (axioms.passed()) out.section("identities", identity_suite(h));
  return out.finish(opt);
}

int cmd_derive(const std::string& path, const Options& opt) {
  const WeakHopfQuasigroup h = load(path, opt);
  Output out("derive");
  out.fact("field", h.field().name());
  out.fact("dim H", std::to_string(h.dim()));
  const auto ctx = context_or_report(h, out);
  if (!ctx) return out.finish(opt);
  const ProjectionSet& pi = (*ctx)->pi;
  const Mor eta_eps = compose(h.unit(), h.counit());
  out.fact("Pi^L", to_string(pi.pi_l));
  out.fact("Pi^R", to_string(pi.pi_r));
  out.fact("Pi-bar^L", to_string(pi.pi_bar_l));
  out.fact("Pi-bar^R", to_string(pi.pi_bar_r));
  out.fact("Π^L = η∘ε", pi.pi_l == eta_eps ? "yes" : "no");
  out.fact("Π^R = η∘ε", pi.pi_r == eta_eps ? "yes" : "no");
  const BaseObject& left = (*ctx)->left;
  const BaseObject right = base_object(h, Side::R);
  out.fact("dim H_L", std::to_string(left.dim()));
  out.fact("dim H_R", std::to_string(right.dim()));
  out.fact("Casimir q_L", to_string(left.casimir));
  out.fact("Casimir q_R", to_string(right.casimir));
  if (const auto w = associativity_witness(h))
    out.fact("associativity", "H nonassociative: witness (" + std::to_string((*w)[0]) + "," +
                                  std::to_string((*w)[1]) + "," + std::to_string((*w)[2]) + ")");
  else
    out.fact("associativity", "H associative");
  out.section("identities", identity_suite(h));
  out.section("H_L Frobenius", casimir_report(left));
  out.section("H_R Frobenius", casimir_report(right));
  return out.finish(opt);
}

int cmd_fundamental(const std::string& path, const std::string& module_path, const Options& opt) {
  const WeakHopfQuasigroup h = load(path, opt);
  Output out("fundamental");
  const auto ctx = context_or_report(h, out);
  if (!ctx) return out.finish(opt);
  const HopfModule m = module_path.empty() ? regular_hopf_module(*ctx)
                                           : load_hopf_module(read_file(module_path), *ctx);
  out.fact("module", module_path.empty() ? "regular (H, mu, delta)" : module_path);
  out.fact("dim M", std::to_string(m.dim()));
  const Report axioms = check_hopf_module(m);
  out.section("Hopf module", axioms);
  if (!axioms.passed()) return out.finish(opt);
  const CertifiedIso iso = fundamental_theorem(m);
  out.fact("alpha_M", dims(iso.forward));
  out.fact("dim M^coH", std::to_string(coinvariants(m).dim()));
  out.fact("strong (c1)", is_strong(m) ? "yes" : "no");
  out.section("evidence", iso.evidence);
  return out.finish(opt);
}

int cmd_equivalence(const std::string& path, const std::vector<std::string>& hl_paths,
                    const std::vector<std::string>& hopf_paths, const Options& opt) {
  const WeakHopfQuasigroup h = load(path, opt);
  Output out("equivalence");
  const auto maybe_ctx = context_or_report(h, out);
  if (!maybe_ctx) return out.finish(opt);
  const ContextPtr& ctx = *maybe_ctx;
  const Field& f = ctx->field();

  std::vector<RightHLModule> hl{regular_hl_module(ctx), free_hl_module(ctx, 2), h_as_hl_module(ctx),
                                random_hl_module(ctx, opt.seed, 2)};
  std::vector<SampleMorphism> morphisms{{1, 0, free_projection(ctx, 2, 0)}, {0, 1, free_inclusion(ctx, 2, 1)}};
  if (ctx->r() > 0) {
    std::vector<SparseVec> b{{{0, Scalar::one(f)}}};
    morphisms.push_back({0, 0, left_multiplication(ctx, Mor::from_columns(f, 1, ctx->r(), b))});
  }
  for (const std::string& p : hl_paths) hl.push_back(load_hl_module(read_file(p), ctx));

  std::vector<HopfModule> hopf{regular_hopf_module(ctx), induce(hl[0]).hopf, induce(hl[1]).hopf,
                               induce(hl[3]).hopf};
  std::vector<SampleHopfMorphism> hopf_morphisms{
      {2, 1, induce_morphism(free_projection(ctx, 2, 0), induce(hl[1]), induce(hl[0]))},
      {0, 0, Mor::identity(f, h.dim())}};
  for (const std::string& p : hopf_paths) hopf.push_back(load_hopf_module(read_file(p), ctx));

  Report samples;
  for (std::size_t k = 0; k < hl.size(); ++k) {
    const Report r = right_module_report(hl[k]);
    for (const Check& c : r.checks()) samples.expect("N" + std::to_string(k) + " " + c.label, c.passed, c.detail);
  }
  for (std::size_t k = 0; k < hopf.size(); ++k) {
    const Report r = check_hopf_module(hopf[k]);
    for (const Check& c : r.checks()) samples.expect("M" + std::to_string(k) + " " + c.label, c.passed, c.detail);
    samples.expect("M" + std::to_string(k) + " (c1)", is_strong(hopf[k]), "sample is not a strong Hopf module");
  }
  out.fact("H_L-module samples", std::to_string(hl.size()));
  out.fact("Hopf module samples", std::to_string(hopf.size()));
  out.section("samples", samples);
  if (!samples.passed()) return out.finish(opt);
  const EquivalenceCertificate cert = certify_equivalence(ctx, hl, hopf, morphisms, hopf_morphisms);
  out.section("certificate", cert.evidence);
  return out.finish(opt);
}

int cmd_gen(const std::string& name, const std::string& module, const std::string& output, const Options& opt) {
  const Field f = opt.field.empty() ? Field::rationals() : parse_field_flag(opt.field);
  const WeakHopfQuasigroup h = named_fixture(name, f);
  std::string text;
  if (module.empty()) {
    text = save_structure(h);
  } else {
    const ContextPtr ctx = Context::make(h);
    if (module == "regular") {
      text = save_hopf_module(regular_hopf_module(ctx));
    } else if (module == "mutated") {
      const HopfModule m = regular_hopf_module(ctx);
      text = save_hopf_module(HopfModule(ctx, Scalar::from_int(f, 2) * m.action(), m.coaction()));
    } else if (module == "random-hl") {
      text = save_hl_module(random_hl_module(ctx, opt.seed, 2));
    } else {
      throw Error("unknown module kind '" + module + "' (regular, mutated, random-hl)");
    }
  }
  if (output.empty() || output == "-")
    std::cout << text;
  else
    write_file(output, text);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of weak Hopf quasigroups and their Hopf modules"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--report", opt.report, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--field", opt.field, "Q or a prime p; structures over Q are reduced mod p");
  app.add_option("--seed", opt.seed, "Seed for random module samples");

  std::string path;
  std::string module_path;
  std::vector<std::string> hl_paths;
  std::vector<std::string> hopf_paths;
  std::string name;
  std::string module_kind;
  std::string output;

  auto* validate = app.add_subcommand("validate", "Axioms (a1)-(a4-7) and the derived identities");
  validate->add_option("structure", path)->required();
  auto* derive = app.add_subcommand("derive", "Projections, H_L, H_R, Casimir and Frobenius data");
  derive->add_option("structure", path)->required();
  auto* fundamental = app.add_subcommand("fundamental", "Certify M ~ M^coH x H");
  fundamental->add_option("structure", path)->required();
  fundamental->add_option("--module", module_path, "Hopf module file (default: the regular module)");
  auto* equivalence = app.add_subcommand("equivalence", "Certify SM^H_H ~ C_{H_L} on sample modules");
  equivalence->add_option("structure", path)->required();
  equivalence->add_option("--hl-module", hl_paths, "Extra right H_L-module samples");
  equivalence->add_option("--hopf-module", hopf_paths, "Extra Hopf module samples");
  auto* gen = app.add_subcommand("gen", "Emit a generated structure or module file");
  gen->add_option("name", name, "c<k>, s<n>, chein-c<k>, chein-s<n>, discrete-<k>, pair-<k>, flagship")
      ->required();
  gen->add_option("--module", module_kind, "regular, mutated or random-hl");
  gen->add_option("-o,--output", output, "Output file (default stdout)");

  for (auto* sub : {validate, derive, fundamental, equivalence, gen}) {
    sub->add_option("--report", opt.report, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--field", opt.field, "Q or a prime p");
    sub->add_option("--seed", opt.seed, "Seed for random module samples");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  try {
    if (*validate) return cmd_validate(path, opt);
    if (*derive) return cmd_derive(path, opt);
    if (*fundamental) return cmd_fundamental(path, module_path, opt);
    if (*equivalence) return cmd_equivalence(path, hl_paths, hopf_paths, opt);
    return cmd_gen(name, module_kind, output, opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const LawFailure& e) {
    std::cout << "FAIL " << e.label() << ": " << e.what() << "\n";
    return kLawFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLawFailure;
  }
}
