#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "rootforge/abstract_roots.hpp"
#include "rootforge/coxeter_matrix.hpp"
#include "rootforge/orders.hpp"
#include "rootforge/real_roots.hpp"
#include "rootforge/twisting.hpp"

namespace rootforge::io {

using nlohmann::json;

// Parse errors and schema violations are reported as InputError.
json parse(const std::string& text);
json read_file(const std::string& path);

// {"generators": [...], "matrix": [[...]]} with 0 for infinity, or {"type": "B2"}.
CoxeterMatrix read_coxeter_matrix(const json& j);
json to_json(const CoxeterMatrix& m);

// {"labels": [...], "ngcm": [[...]]}
Ngcm read_ngcm(const json& j);
json to_json(const Ngcm& a);

// NGCM fields plus "roots" and "coroots"; "pairing" defaults to the identity matrix.
// Without "roots" the datum is the one built from the NGCM on unit vectors.
BasedRootDatum read_datum(const json& j);
json to_json(const BasedRootDatum& b);

// {"refl": "srs", "sign": 1}
AbstractRoot read_root(const CoxeterGroup& g, const json& j);
json to_json(const CoxeterGroup& g, const AbstractRoot& a);
// A bare array of roots, or {"roots": [...], "window": L}.
std::vector<AbstractRoot> read_roots(const CoxeterGroup& g, const json& j);
json to_json(const CoxeterGroup& g, const std::vector<AbstractRoot>& roots);
// Window length stored alongside the roots, if any.
std::size_t read_window_length(const json& j, std::size_t fallback);

// {"J": [...], "K": [...], "L": [...], "M": [...]} with generator names.
TwistSpec read_twist_spec(const CoxeterMatrix& m, const json& j);
json to_json(const CoxeterMatrix& m, const TwistSpec& spec);
// Twisted matrix as a group document plus "w_K", "words" and "in_J".
json to_json(const CoxeterGroup& g, const TwistResult& t);

// A bare array of reflection words, or {"A": [...]}.
ReflectionSet read_twist_set(const CoxeterGroup& g, const json& j);
json twist_set_to_json(const CoxeterGroup& g, const ReflectionSet& A);

json to_json(const CocycleProvider& p, const OrderRelation& rel);
OrderRelation read_order_relation(const json& j);

json to_json(const RootSlice& slice);
RootSlice read_root_slice(const json& j);
// One row per root: depth, root coordinates, coroot coordinates, positive flag.
std::string to_tsv(const RootSlice& slice);

// Deterministic text: two-space indentation and a trailing newline.
std::string dump(const json& j);

}  // namespace rootforge::io
