#pragma once

// JSON representation specs:
//
//   { "field": {"p": 3, "f": 1},
//     "rep": {"type": "induced", "blocks": [{"n": 2, "conductor": 3}, ...]} }
//
// with "rep" alternatively one of
//   {"type": "principal-series", "c1": int, "c2": int}
//   {"type": "steinberg-twist", "c_chi": int}
//   {"type": "supercuspidal", "minimal_conductor": int, "twist_conductor": int}

#include <string>
#include <string_view>
#include <variant>

#include "padic_fixvec/errors.hpp"
#include "padic_fixvec/finite_ring.hpp"
#include "padic_fixvec/gl2_dims.hpp"
#include "padic_fixvec/representations.hpp"

namespace padic_fixvec {

struct RepresentationSpec {
  LocalFieldParams field;
  std::variant<GenericRepresentation, GL2Representation> rep;

  friend bool operator==(const RepresentationSpec&, const RepresentationSpec&) = default;
};

/// A schema violation, located by a JSON path such as "$.rep.blocks[1].conductor".
class SpecError : public InvalidParameter {
 public:
  SpecError(std::string path, const std::string& message);
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

RepresentationSpec parse_spec(std::string_view json_text);

/// Canonical JSON with a fixed key order; parse_spec(emit_spec(s)) == s.
std::string emit_spec(const RepresentationSpec& spec, int indent = 2);

/// "induced", "principal-series", "steinberg-twist" or "supercuspidal".
std::string rep_type_name(const RepresentationSpec& spec);

}  // namespace padic_fixvec
