#pragma once

#include "pomlab/directoid.hpp"
#include "pomlab/dm.hpp"
#include "pomlab/effect_algebra.hpp"
#include "pomlab/forbidden.hpp"
#include "pomlab/poset.hpp"

#include <variant>

namespace pomlab {

using Structure = std::variant<Poset, Directoid, EffectAlgebra>;

/// Parses a JSON document (// comments allowed) and validates it. The
/// "kind" field selects the structure:
///   {"kind":"poset","size":n,"hasse":[[i,j],..] or "le":[[bool,..],..],
///    "inv":[..],"bottom":i,"top":j,"labels":[..]?}
///   {"kind":"directoid","size":n,"meet":[[..]],"inv":[..],"zero":i,"one":j}
///   {"kind":"effect_algebra","size":n,"oplus":[[entry|null,..]],"zero":i,"one":j}
/// Exactly one of "hasse"/"le" must be present for posets.
Structure parse_structure(const std::string& json_text);
Structure load_structure(const std::string& path);

std::string to_json_string(const Poset& p, bool pretty = true);
std::string to_json_string(const Directoid& d, bool pretty = true);
std::string to_json_string(const EffectAlgebra& a, bool pretty = true);

/// {"roles":{"0":i,"a":..,"b":..,"b'":..,"a'":..,"1":..}}
std::string to_json_string(const B6Witness& w, bool pretty = true);

/// Completion poset document plus {"embedding":[index of L(x) per x]}.
std::string completion_to_json_string(const DmCompletion& dm, bool pretty = true);

/// Hasse diagram in DOT, involution drawn as dashed undirected edges.
std::string to_dot(const Poset& p);

}  // namespace pomlab
