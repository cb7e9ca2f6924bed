#pragma once

#include "lattice_waves/abelian_group.hpp"
#include "lattice_waves/supported_function.hpp"
#include "lattice_waves/tree.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace lattice_waves::io {

using Json = nlohmann::json;

// {"rank": int, "moduli": [int...]}
Json to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);

// {"free": [int...], "torsion": [int...]}
Json to_json(const GroupElement& x);
GroupElement element_from_json(const GroupSpec& g, const Json& j);
std::vector<GroupElement> elements_from_json(const GroupSpec& g, const Json& j);

// {"group": {...}, "values": [{"elem": {...}, "num": "...", "den": "..."}]}
Json to_json(const SupportedFunction& f);
// The embedded group, when present, must equal `g` (GroupMismatch otherwise).
SupportedFunction function_from_json(const GroupSpec& g, const Json& j);
SupportedFunction function_from_json(const Json& j);

// Tree vertices are arrays of 1-based letters, e.g. [1, 2, 1].
Json to_json(const TreeVertex& v);
TreeVertex vertex_from_json(const Json& j, int k);
// {"k": int, "values": [{"vertex": [...], "num": "...", "den": "..."}]}
Json to_json(const TreeFunction& f);
TreeFunction tree_function_from_json(int k, const Json& j);

// Accepts "num"/"den" as decimal strings or JSON integers; "den" defaults to 1.
Rational rational_from_json(const Json& entry);

// CSV with an optional leading "# ..." comment line, a header row
// `<key_column>,num,den`, and one row per entry in sorted order. Keys are
// semicolon-joined coordinates (or tree letters; the root is empty).
void write_csv(std::ostream& out, const SupportedFunction& f, const std::string& comment,
               const std::string& key_column = "vertex");
void write_csv(std::ostream& out, const TreeFunction& f, const std::string& comment);
// Rows for exactly the given keys, zeros included.
void write_csv_rows(std::ostream& out, const SupportedFunction& f,
                    const std::vector<GroupElement>& keys, const std::string& comment);
void write_csv_rows(std::ostream& out, const TreeFunction& f,
                    const std::vector<TreeVertex>& keys, const std::string& comment);

SupportedFunction read_csv(std::istream& in, const GroupSpec& g);
TreeFunction read_tree_csv(std::istream& in, int k);

} // namespace lattice_waves::io
