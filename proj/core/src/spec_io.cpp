#include "padic_fixvec/spec_io.hpp"

#include <initializer_list>

#include <json.hpp>

#include "overloaded.hpp"

namespace padic_fixvec {

namespace {

using detail::overloaded;
using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw SpecError(path, "expected an object");
  return j;
}

void reject_unknown_keys(const json& j, const std::string& path, std::initializer_list<std::string_view> keys) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto k : keys) known = known || key == k;
    if (!known) throw SpecError(path + "." + key, "unknown field");
  }
}

std::uint64_t require_uint(const json& parent, const std::string& key, const std::string& path,
                           std::uint64_t max = UINT32_MAX) {
  const std::string here = path + "." + key;
  if (!parent.contains(key)) throw SpecError(here, "missing required field");
  const json& v = parent.at(key);
  if (v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    const auto x = v.get<std::uint64_t>();
    if (x > max) throw SpecError(here, "value " + std::to_string(x) + " is out of range");
    return x;
  }
  throw SpecError(here, "expected a non-negative integer");
}

LocalFieldParams parse_field(const json& root) {
  if (!root.contains("field")) throw SpecError("$.field", "missing required field");
  const json& field = require_object(root.at("field"), "$.field");
  reject_unknown_keys(field, "$.field", {"p", "f"});
  const auto p = require_uint(field, "p", "$.field", UINT64_MAX);
  const auto f = field.contains("f") ? require_uint(field, "f", "$.field") : 1;
  try {
    return LocalFieldParams(p, static_cast<std::uint32_t>(f));
  } catch (const InvalidParameter& e) {
    throw SpecError("$.field", e.what());
  }
}

std::variant<GenericRepresentation, GL2Representation> parse_rep(const json& root) {
  if (!root.contains("rep")) throw SpecError("$.rep", "missing required field");
  const json& rep = require_object(root.at("rep"), "$.rep");
  if (!rep.contains("type")) throw SpecError("$.rep.type", "missing required field");
  if (!rep.at("type").is_string()) throw SpecError("$.rep.type", "expected a string");
  const auto type = rep.at("type").get<std::string>();

  if (type == "induced") {
    reject_unknown_keys(rep, "$.rep", {"type", "blocks"});
    if (!rep.contains("blocks")) throw SpecError("$.rep.blocks", "missing required field");
    const json& blocks = rep.at("blocks");
    if (!blocks.is_array()) throw SpecError("$.rep.blocks", "expected an array");
    if (blocks.empty()) throw SpecError("$.rep.blocks", "expected at least one block");
    std::vector<SquareIntegrableBlock> parsed;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const std::string path = "$.rep.blocks[" + std::to_string(i) + "]";
      const json& b = require_object(blocks[i], path);
      reject_unknown_keys(b, path, {"n", "conductor"});
      const auto n = require_uint(b, "n", path);
      if (n == 0) throw SpecError(path + ".n", "block size must be >= 1");
      const auto c = require_uint(b, "conductor", path);
      parsed.push_back({static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(c)});
    }
    return GenericRepresentation(std::move(parsed));
  }
  if (type == "principal-series") {
    reject_unknown_keys(rep, "$.rep", {"type", "c1", "c2"});
    return GL2Representation{PrincipalSeries{static_cast<std::uint32_t>(require_uint(rep, "c1", "$.rep")),
                                             static_cast<std::uint32_t>(require_uint(rep, "c2", "$.rep"))}};
  }
  if (type == "steinberg-twist") {
    reject_unknown_keys(rep, "$.rep", {"type", "c_chi"});
    return GL2Representation{SteinbergTwist{static_cast<std::uint32_t>(require_uint(rep, "c_chi", "$.rep"))}};
  }
  if (type == "supercuspidal") {
    reject_unknown_keys(rep, "$.rep", {"type", "minimal_conductor", "twist_conductor"});
    const auto s = require_uint(rep, "minimal_conductor", "$.rep");
    if (s < 2) throw SpecError("$.rep.minimal_conductor", "a supercuspidal has minimal conductor >= 2");
    const auto c = rep.contains("twist_conductor") ? require_uint(rep, "twist_conductor", "$.rep") : 0;
    return GL2Representation{Supercuspidal{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(c)}};
  }
  throw SpecError("$.rep.type", "unknown representation type '" + type + "'");
}

}  // namespace

SpecError::SpecError(std::string path, const std::string& message)
    : InvalidParameter(path + ": " + message), path_(std::move(path)) {}

RepresentationSpec parse_spec(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SpecError("$", std::string("malformed JSON: ") + e.what());
  }
  require_object(root, "$");
  reject_unknown_keys(root, "$", {"field", "rep"});
  auto field = parse_field(root);
  auto rep = parse_rep(root);
  return RepresentationSpec{field, std::move(rep)};
}

std::string emit_spec(const RepresentationSpec& spec, int indent) {
  ordered_json root;
  root["field"]["p"] = spec.field.p();
  root["field"]["f"] = spec.field.f();
  ordered_json rep;
  std::visit(overloaded{
                 [&](const GenericRepresentation& g) {
                   rep["type"] = "induced";
                   rep["blocks"] = ordered_json::array();
                   for (const auto& b : g.blocks()) {
                     ordered_json block;
                     block["n"] = b.n_block;
                     block["conductor"] = b.conductor;
                     rep["blocks"].push_back(block);
                   }
                 },
                 [&](const GL2Representation& r) {
                   std::visit(overloaded{
                                  [&](const PrincipalSeries& ps) {
                                    rep["type"] = "principal-series";
                                    rep["c1"] = ps.c1;
                                    rep["c2"] = ps.c2;
                                  },
                                  [&](const SteinbergTwist& st) {
                                    rep["type"] = "steinberg-twist";
                                    rep["c_chi"] = st.c_chi;
                                  },
                                  [&](const Supercuspidal& sc) {
                                    rep["type"] = "supercuspidal";
                                    rep["minimal_conductor"] = sc.s;
                                    rep["twist_conductor"] = sc.c_chi;
                                  },
                              },
                              r);
                 },
             },
             spec.rep);
  root["rep"] = rep;
  return root.dump(indent);
}

std::string rep_type_name(const RepresentationSpec& spec) {
  if (std::holds_alternative<GenericRepresentation>(spec.rep)) return "induced";
  return std::visit(overloaded{
                        [](const PrincipalSeries&) { return std::string("principal-series"); },
                        [](const SteinbergTwist&) { return std::string("steinberg-twist"); },
                        [](const Supercuspidal&) { return std::string("supercuspidal"); },
                    },
                    std::get<GL2Representation>(spec.rep));
}

}  // namespace padic_fixvec
