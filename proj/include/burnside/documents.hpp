#pragma once

#include <string>

#include <json.hpp>

#include "burnside/biset.hpp"
#include "burnside/mackey.hpp"
#include "burnside/permcat.hpp"
#include "burnside/spans.hpp"

namespace burnside::docs {

using nlohmann::json;

// {"preset": "cyclic:3"} | {"order": n, "mul": [[...]]} | {"perm_gens": [[...]]}
// A bare string is treated as a preset name.
GroupPtr parse_group(const json& doc);
bool looks_like_group(const json& doc);

// {"objects", "morphisms", "compose", "identities"} | {"classifying": g} |
// {"coproduct": [...]}
GroupoidPtr parse_groupoid(const json& doc);
// group documents are wrapped as classifying groupoids
GroupoidPtr parse_endpoint(const json& doc);

// "finset:N" | "free:<group>:N" (group preset name or JSON) | full tables
PermCatPtr parse_category(const json& doc);

Biset parse_biset(const json& doc);
json biset_json(const Biset& X);

// {"source", "target", "apex", "faithful": {"obj": [...], "mor": [...]},
//  "free": {...}}
Span parse_span(const json& doc);

// generators in cycle notation resolved inside the group
Subgroup parse_subgroup_cycles(const GroupPtr& G, const std::string& text,
                               int points);

CatMor parse_cat_mor(const PermutativeCategory& C, int object, const json& doc);
json cat_mor_json(const PermutativeCategory& C, const CatMor& m);

json class_list_json(const BisetClass& c);
json matrix_json(const IntMat& m);
json report_json(const EvaluationReport& r);

}  // namespace burnside::docs
