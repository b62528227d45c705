#ifndef QUANDLEKIT_IO_HPP_
#define QUANDLEKIT_IO_HPP_

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "quandlekit/cocycle.hpp"
#include "quandlekit/construct.hpp"
#include "quandlekit/envgroup.hpp"
#include "quandlekit/perm.hpp"
#include "quandlekit/quandle.hpp"

namespace quandlekit {

using Json = nlohmann::ordered_json;

// Every reader throws ParseError on malformed documents; semantic checks
// (axioms, cocycle conditions) raise the library's own errors.

Json perm_to_json(Perm const& p);
Perm perm_from_json(Json const& j);

/// {"kind": "quandle", "order": n, "table": [[...]], "labels": [...]}.
Json quandle_to_json(Quandle const& q);
Quandle quandle_from_json(Json const& j);

/// {"kind": "presentation", "ngens": n, "relators": [[+1, -2, ...]]}, 1-based signed.
Json presentation_to_json(Presentation const& p);
Presentation presentation_from_json(Json const& j);

/// {"kind": "cocycle", "base": <quandle>, "fiber": s, "table": [[perm]]}.
Json cocycle_to_json(ConstantCocycle const& alpha);
ConstantCocycle cocycle_from_json(Json const& j);

/// {"kind": "abelian_cocycle", "base": <quandle>, "coefficients": [m...],
/// "table": [[[a...]]]}.
Json abelian_cocycle_to_json(AbelianCocycle const& mu);
AbelianCocycle abelian_cocycle_from_json(Json const& j);

/// {"kind": "union", "q1": <quandle>, "q2": <quandle>, "sigma": [perm], "tau": [perm]}.
Json union_spec_to_json(UnionSpec const& spec);
UnionSpec union_spec_from_json(Json const& j);

using Document = std::variant<Quandle, Presentation, ConstantCocycle, AbelianCocycle, UnionSpec>;

/// "kind" when present, otherwise inferred from the keys.
std::string document_kind(Json const& j);
Document document_from_json(Json const& j);

Json read_json_file(std::string const& path);

}  // namespace quandlekit

#endif  // QUANDLEKIT_IO_HPP_
