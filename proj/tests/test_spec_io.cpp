#include <doctest.h>

#include <random>

#include "padic_fixvec/spec_io.hpp"

using namespace padic_fixvec;

namespace {

std::string error_path(std::string_view text) {
  try {
    parse_spec(text);
  } catch (const SpecError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("parse every representation type") {
  const auto induced = parse_spec(R"({"field":{"p":3,"f":1},"rep":{"type":"induced","blocks":[{"n":2,"conductor":3},{"n":1,"conductor":1}]}})");
  CHECK(induced.field.q() == 3);
  CHECK(rep_type_name(induced) == "induced");
  const auto& g = std::get<GenericRepresentation>(induced.rep);
  REQUIRE(g.blocks().size() == 2);
  CHECK(g.blocks()[0] == SquareIntegrableBlock{2, 3});
  CHECK(g.n() == 3);

  const auto ps = parse_spec(R"({"field":{"p":2,"f":3},"rep":{"type":"principal-series","c1":1,"c2":0}})");
  CHECK(ps.field.q() == 8);
  CHECK(std::get<GL2Representation>(ps.rep) == GL2Representation{PrincipalSeries{1, 0}});

  const auto st = parse_spec(R"({"field":{"p":5},"rep":{"type":"steinberg-twist","c_chi":2}})");
  CHECK(st.field.f() == 1);
  CHECK(std::get<GL2Representation>(st.rep) == GL2Representation{SteinbergTwist{2}});

  const auto sc = parse_spec(R"({"rep":{"type":"supercuspidal","minimal_conductor":3},"field":{"p":3}})");
  CHECK(std::get<GL2Representation>(sc.rep) == GL2Representation{Supercuspidal{3, 0}});
  CHECK(rep_type_name(sc) == "supercuspidal");
}

TEST_CASE("schema violations carry a field path") {
  CHECK(error_path("{") == "$");
  CHECK(error_path("[]") == "$");
  CHECK(error_path(R"({"rep":{"type":"steinberg-twist","c_chi":0}})") == "$.field");
  CHECK(error_path(R"({"field":{"p":4},"rep":{"type":"steinberg-twist","c_chi":0}})") == "$.field");
  CHECK(error_path(R"({"field":{"p":3,"g":1},"rep":{"type":"steinberg-twist","c_chi":0}})") == "$.field.g");
  CHECK(error_path(R"({"field":{"p":3},"rep":{"type":"steinberg-twist"}})") == "$.rep.c_chi");
  CHECK(error_path(R"({"field":{"p":3},"rep":{"type":"steinberg-twist","c_chi":-1}})") == "$.rep.c_chi");
  CHECK(error_path(R"({"field":{"p":3},"rep":{"type":"steinberg-twist","c_chi":1.5}})") == "$.rep.c_chi");
  CHECK(error_path(R"({"field":{"p":3},"rep":{"type":"mystery"}})") == "$.rep.type");
  CHECK(error_path(R"({"field":{"p":3},"rep":{"c1":0}})") == "$.rep.type");
  CHECK(error_path(R"({"field":{"p":3},"rep":{"type":"induced","blocks":[]}})") == "$.rep.blocks");
  CHECK(error_path(R"({"field":{"p":3},"rep":{"type":"induced","blocks":[{"n":1,"conductor":0},{"n":2,"conductor":"x"}]}})") ==
        "$.rep.blocks[1].conductor");
  CHECK(error_path(R"({"field":{"p":3},"rep":{"type":"induced","blocks":[{"n":0,"conductor":0}]}})") ==
        "$.rep.blocks[0].n");
  CHECK(error_path(R"({"field":{"p":3},"rep":{"type":"supercuspidal","minimal_conductor":1}})") ==
        "$.rep.minimal_conductor");
  CHECK(error_path(R"({"field":{"p":3},"rep":{"type":"principal-series","c1":0,"c2":0},"extra":1})") == "$.extra");
}

TEST_CASE("emit is canonical and re-parses identically") {
  const std::string text = R"({"rep":{"c2":1,"c1":0,"type":"principal-series"},"field":{"f":2,"p":3}})";
  const auto spec = parse_spec(text);
  const auto emitted = emit_spec(spec, -1);
  CHECK(emitted == R"({"field":{"p":3,"f":2},"rep":{"type":"principal-series","c1":0,"c2":1}})");
  CHECK(parse_spec(emitted) == spec);
  CHECK(emit_spec(parse_spec(emitted)) == emit_spec(spec));
}

TEST_CASE("round trip over random specs") {
  std::mt19937_64 rng(20240601);
  const std::uint64_t primes[] = {2, 3, 5, 7, 11};
  auto pick = [&](std::uint32_t hi) { return static_cast<std::uint32_t>(rng() % (hi + 1)); };
  for (int trial = 0; trial < 500; ++trial) {
    const LocalFieldParams field(primes[rng() % 5], 1 + pick(3));
    RepresentationSpec spec{field, GL2Representation{PrincipalSeries{}}};
    switch (trial % 4) {
      case 0: {
        std::vector<SquareIntegrableBlock> blocks(1 + pick(4));
        for (auto& b : blocks) b = {1 + pick(4), pick(20)};
        spec.rep = GenericRepresentation(blocks);
        break;
      }
      case 1: spec.rep = GL2Representation{PrincipalSeries{pick(6), pick(6)}}; break;
      case 2: spec.rep = GL2Representation{SteinbergTwist{pick(6)}}; break;
      default: spec.rep = GL2Representation{Supercuspidal{2 + pick(6), pick(6)}}; break;
    }
    const auto text = emit_spec(spec);
    const auto back = parse_spec(text);
    CHECK(back == spec);
    CHECK(emit_spec(back) == text);
  }
}
