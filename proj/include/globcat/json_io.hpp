#pragma once

// JSON forms of the value types. Readers throw InputError on malformed or
// inconsistent input.

#include <string>
#include <vector>

#include "json.hpp"

#include "globcat/enrich.hpp"
#include "globcat/freecat.hpp"
#include "globcat/glob.hpp"
#include "globcat/multitensor.hpp"
#include "globcat/operad.hpp"
#include "globcat/report.hpp"
#include "globcat/setmt.hpp"
#include "globcat/tree.hpp"

namespace globcat {

using Json = nlohmann::json;

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

// {"trunc": N, "cells": {"0": [ids], ...}, "src": {id: id}, "tgt": {id: id}}
Json to_json(const GlobSet& x);
GlobSet globset_from_json(const Json& j);

// {"from": ref, "to": ref, "map": {"0": {id: id}, ...}}
Json map_to_json(const GlobSet& from, const GlobSet& to, const Label& f,
                 const std::string& from_ref = "from", const std::string& to_ref = "to");
Label map_from_json(const Json& j, const GlobSet& from, const GlobSet& to);

// {"dim": n, "kids": [...]}, no "kids" at dimension 0.
Json to_json(const Tree& t);
Tree tree_from_json(const Json& j);

// {"tree": Tree, "label": map from glob(tree)}
Json to_json(const GlobSet& x, const FreeCell& c);
FreeCell freecell_from_json(const Json& j, const GlobSet& x);

// {"tree": Tree, "cells": {glob cell id: FreeCell}}, a map glob(tree) -> TX.
Json to_json(const GlobSet& x, const FreeOverFree& f);
FreeOverFree free_over_free_from_json(const Json& j, const GlobSet& x);

// {"cells": GlobSet, "identities": {id: id}, "composites": {"d,k": [[a, b, a;b], ...]}}
Json to_json(const CompositionTables& ct);
CompositionTables tables_from_json(const Json& j);

// {"name", "ops": {"0": [..], ...}, "unit": id, "subst": {"(k;n1,..,nk)": {"outer,in1,..": id}}}
Json to_json(const SetOperad& o);
SetOperad set_operad_from_json(const Json& j);

// {"name", "trunc", "ops": {"1": [{"id", "arity", "src", "tgt"}], ...}}
Json to_json(const Collection& c);
Collection collection_from_json(const Json& j);
// Collection fields plus "support", "units": {d: id} and
// "subst": [{"outer", "labelling": {cell: id}, "result"}]; 0-cells carry "*".
Json to_json(const Operad& a);
Operad operad_from_json(const Json& j);

// Same layout with arity a list of trees and inner labellings per argument.
Json to_json(const MTTable& t);
MTTable mt_table_from_json(const Json& j);

// {"kind": "tcross", "trunc": n}, or a tabulation within the bounds.
Json multitensor_to_json(const MTOperad& e, int max_arity, int max_size);
MTOperadPtr multitensor_from_json(const Json& j);

Json to_json(const ECat& c);
ECat ecat_from_json(const Json& j);

// The view is recorded alongside so that operation arities can be read back.
Json to_json(const MTOperad& view, const AlgebraTable& a, const ECatBounds& b);
struct ViewedAlgebra {
  MTOperadPtr view;
  ECatBounds bounds;
  AlgebraTable alg;
};
ViewedAlgebra algebra_from_json(const Json& j);

Json to_json(const AlgCat& d);
AlgCat algcat_from_json(const Json& j);

Json to_json(const Report& r);

}  // namespace globcat
