#include <doctest.h>

#include <filesystem>
#include <functional>

#include <json.hpp>

#include "whq/errors.hpp"
#include "whq/generators.hpp"
#include "whq/io.hpp"

using namespace whq;

namespace {

const Field Q = Field::rationals();
const std::filesystem::path kFixtures = WHQ_FIXTURE_DIR;

bool same_structure(const WeakHopfQuasigroup& a, const WeakHopfQuasigroup& b) {
  return a.field() == b.field() && a.unit() == b.unit() && a.mul() == b.mul() && a.counit() == b.counit() &&
         a.comul() == b.comul() && a.antipode() == b.antipode();
}

std::string c2_text() { return read_file(kFixtures / "c2.whq"); }

std::string edit(const std::string& text, const std::function<void(nlohmann::json&)>& f) {
  nlohmann::json j = nlohmann::json::parse(text);
  f(j);
  return j.dump();
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("structure fixtures round trip byte for byte") {
    for (const char* name : {"c2", "c3", "s3", "chein-s3", "discrete-3", "pair-2", "broken-antipode", "empty"}) {
      CAPTURE(name);
      const std::string text = read_file(kFixtures / (std::string(name) + ".whq"));
      CHECK(save_structure(load_structure(text)) == text);
    }
  }

  TEST_CASE("generated structures round trip") {
    for (const char* name : {"flagship", "chein-c3", "s4"})
      for (const Field& f : {Q, Field::prime(7), Field::prime(4'294'967'291ULL)}) {
        CAPTURE(name);
        const WeakHopfQuasigroup h = named_fixture(name, f);
        const std::string text = save_structure(h);
        const WeakHopfQuasigroup back = load_structure(text);
        CHECK(same_structure(h, back));
        CHECK(save_structure(back) == text);
      }
  }

  TEST_CASE("the stored fixtures are the generated ones") {
    for (const char* name : {"c2", "c3", "s3", "chein-s3", "discrete-3", "pair-2"}) {
      CAPTURE(name);
      CHECK(save_structure(named_fixture(name, Q)) == read_file(kFixtures / (std::string(name) + ".whq")));
    }
  }

  TEST_CASE("braidings are kept") {
    const WeakHopfQuasigroup c2 = named_fixture("c2", Q);
    const Mor s = swap(Q, 2, 2);
    const WeakHopfQuasigroup b = WeakHopfQuasigroup::make(c2.magma(), c2.comonoid(), c2.antipode(), Braiding{s, s});
    const WeakHopfQuasigroup back = load_structure(save_structure(b));
    REQUIRE(back.braiding().has_value());
    CHECK(back.braiding()->c == s);
    CHECK(back.braiding()->c_inv == s);
  }

  TEST_CASE("non-integral scalars") {
    const std::string text = edit(c2_text(), [](nlohmann::json& j) { j["antipode"][0][1] = "-3/6"; });
    const WeakHopfQuasigroup h = load_structure(text);
    CHECK(h.antipode().at(1, 0) == Scalar::from_fraction(Q, -1, 2));
    CHECK(save_structure(h).find("\"-1/2\"") != std::string::npos);
    CHECK_FALSE(check_axioms(h).passed());
  }

  TEST_CASE("modules round trip") {
    const ContextPtr c = Context::make(named_fixture("s3", Q));
    const std::string text = read_file(kFixtures / "s3-regular.hopf.json");
    const HopfModule m = load_hopf_module(text, c);
    CHECK(m.action() == c->h.mul());
    CHECK(m.coaction() == c->h.comul());
    CHECK(save_hopf_module(m) == text);

    const ContextPtr p = Context::make(named_fixture("pair-2", Q));
    const std::string hl = read_file(kFixtures / "pair-2-random.hl.json");
    const RightHLModule n = load_hl_module(hl, p);
    CHECK(n.action() == random_hl_module(p, 3).action());
    CHECK(save_hl_module(n) == hl);
    const std::string mutated = read_file(kFixtures / "pair-2-mutated.hopf.json");
    CHECK(save_hopf_module(load_hopf_module(mutated, p)) == mutated);
  }

  TEST_CASE("malformed input") {
    const std::string good = c2_text();
    CHECK_THROWS_AS(load_structure("{"), ParseError);
    CHECK_THROWS_AS(load_structure("[]"), ParseError);
    CHECK_THROWS_AS(load_structure(edit(good, [](nlohmann::json& j) { j["format"] = "other"; })), ParseError);
    CHECK_THROWS_AS(load_structure(edit(good, [](nlohmann::json& j) { j.erase("mul"); })), ParseError);
    CHECK_THROWS_AS(load_structure(edit(good, [](nlohmann::json& j) { j["dim"] = 3; })), ParseError);
    CHECK_THROWS_AS(load_structure(edit(good, [](nlohmann::json& j) { j["unit"][0] = "x"; })), ParseError);
    CHECK_THROWS_AS(load_structure(edit(good, [](nlohmann::json& j) { j["unit"][0] = 1; })), ParseError);
    CHECK_THROWS_AS(load_structure(edit(good, [](nlohmann::json& j) { j["unit"][0] = "1/0"; })), ParseError);
    CHECK_THROWS_AS(load_structure(edit(good, [](nlohmann::json& j) { j["field"] = {{"Fp", 4}}; })), ParseError);
    CHECK_THROWS_AS(load_structure(edit(good, [](nlohmann::json& j) { j["field"] = "R"; })), ParseError);
    CHECK_THROWS_AS(load_structure(edit(good, [](nlohmann::json& j) { j["comul"][0].erase(0); })), ParseError);
    CHECK_THROWS_AS(read_file(kFixtures / "does-not-exist.whq"), ParseError);
  }

  TEST_CASE("module files must match the base field") {
    const ContextPtr c = Context::make(named_fixture("s3", Field::prime(5)));
    CHECK_THROWS_AS(load_hopf_module(read_file(kFixtures / "s3-regular.hopf.json"), c), FieldMismatch);
    const ContextPtr small = Context::make(named_fixture("c3", Q));
    CHECK_THROWS_AS(load_hopf_module(read_file(kFixtures / "s3-regular.hopf.json"), small), ParseError);
  }

  TEST_CASE("report rendering") {
    Report r;
    r.expect("(a1)", true);
    r.expect_equal("(a2)", Mor::identity(Q, 1), Scalar::from_int(Q, 2) * Mor::identity(Q, 1));
    const std::string text = render_text(r);
    CHECK(text.find("PASS (a1)") != std::string::npos);
    CHECK(text.find("FAIL (a2)") != std::string::npos);
    const nlohmann::json j = nlohmann::json::parse(render_json(r));
    CHECK(j["passed"] == false);
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][1]["label"] == "(a2)");
    CHECK(j["checks"][1].contains("witness"));
  }
}
