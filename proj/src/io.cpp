#include "lattice_waves/io.hpp"

#include "lattice_waves/error.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace lattice_waves::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::vector<std::int64_t> int_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) bad(std::string(what) + " must be an array of integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

std::string scalar_text(const Json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  bad(std::string(what) + " must be a decimal string or an integer");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<std::int64_t> parse_key(const std::string& key) {
  std::vector<std::int64_t> out;
  if (key.empty()) return out;
  for (const auto& part : split(key, ';')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoll(part, &pos));
      if (pos != part.size()) bad("bad coordinate '" + part + "'");
    } catch (const std::logic_error&) {
      bad("bad coordinate '" + part + "'");
    }
  }
  return out;
}

template <typename Emit>
void read_rows(std::istream& in, Emit emit) {
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header) {
      header = true;
      continue;
    }
    auto cols = split(line, ',');
    if (cols.size() != 3) bad("CSV row needs 3 columns: '" + line + "'");
    emit(cols[0], make_rational(cols[1], cols[2]));
  }
}

void write_comment(std::ostream& out, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
}

void write_row(std::ostream& out, const std::string& key, const Rational& v) {
  out << key << ',' << numerator_string(v) << ',' << denominator_string(v) << '\n';
}

} // namespace

Json to_json(const GroupSpec& g) {
  return Json{{"rank", g.rank()}, {"moduli", g.moduli()}};
}

GroupSpec group_from_json(const Json& j) {
  const Json& rank = field(j, "rank");
  if (!rank.is_number_integer()) bad("group rank must be an integer");
  std::vector<std::int64_t> moduli;
  if (j.contains("moduli")) moduli = int_list(j.at("moduli"), "moduli");
  return make_group(rank.get<long>(), std::move(moduli));
}

Json to_json(const GroupElement& x) {
  return Json{{"free", std::vector<std::int64_t>(x.free().begin(), x.free().end())},
              {"torsion", std::vector<std::int64_t>(x.torsion().begin(), x.torsion().end())}};
}

GroupElement element_from_json(const GroupSpec& g, const Json& j) {
  if (j.is_array()) return g.element_from_coords(int_list(j, "element"));
  std::vector<std::int64_t> free, torsion;
  if (j.contains("free")) free = int_list(j.at("free"), "free");
  if (j.contains("torsion")) torsion = int_list(j.at("torsion"), "torsion");
  if (!j.is_object()) bad("element must be an object or a coordinate array");
  return g.element(free, torsion);
}

std::vector<GroupElement> elements_from_json(const GroupSpec& g, const Json& j) {
  if (!j.is_array()) bad("expected an array of elements");
  std::vector<GroupElement> out;
  for (const auto& e : j) out.push_back(element_from_json(g, e));
  return out;
}

Rational rational_from_json(const Json& entry) {
  const std::string num = scalar_text(field(entry, "num"), "num");
  const std::string den = entry.contains("den") ? scalar_text(entry.at("den"), "den") : "1";
  return make_rational(num, den);
}

Json to_json(const SupportedFunction& f) {
  Json values = Json::array();
  for (const auto& [x, v] : f.sorted_entries())
    values.push_back({{"elem", to_json(x)}, {"num", numerator_string(v)}, {"den", denominator_string(v)}});
  return Json{{"group", to_json(f.group())}, {"values", std::move(values)}};
}

SupportedFunction function_from_json(const GroupSpec& g, const Json& j) {
  if (j.contains("group") && !(group_from_json(j.at("group")) == g))
    throw Error(ErrorCode::GroupMismatch, "function group differs from the problem group");
  SupportedFunction f(g);
  const Json& values = field(j, "values");
  if (!values.is_array()) bad("'values' must be an array");
  for (const auto& entry : values) f.add(element_from_json(g, field(entry, "elem")), rational_from_json(entry));
  return f;
}

SupportedFunction function_from_json(const Json& j) {
  return function_from_json(group_from_json(field(j, "group")), j);
}

Json to_json(const TreeVertex& v) { return Json(v.letters()); }

TreeVertex vertex_from_json(const Json& j, int k) {
  if (!j.is_array()) bad("tree vertex must be an array of letters");
  std::vector<int> letters;
  for (const auto& c : j) {
    if (!c.is_number_integer()) bad("tree vertex letters must be integers");
    letters.push_back(c.get<int>());
  }
  return TreeVertex::from_letters(letters, k);
}

Json to_json(const TreeFunction& f) {
  Json values = Json::array();
  for (const auto& [x, v] : f.sorted_entries())
    values.push_back({{"vertex", to_json(x)}, {"num", numerator_string(v)}, {"den", denominator_string(v)}});
  return Json{{"k", f.k()}, {"values", std::move(values)}};
}

TreeFunction tree_function_from_json(int k, const Json& j) {
  if (j.contains("k") && j.at("k") != k)
    throw Error(ErrorCode::GroupMismatch, "tree function degree differs from the problem degree");
  TreeFunction f(k);
  const Json& values = field(j, "values");
  if (!values.is_array()) bad("'values' must be an array");
  for (const auto& entry : values) f.add(vertex_from_json(field(entry, "vertex"), k), rational_from_json(entry));
  return f;
}

void write_csv(std::ostream& out, const SupportedFunction& f, const std::string& comment,
               const std::string& key_column) {
  write_comment(out, comment);
  out << key_column << ",num,den\n";
  for (const auto& [x, v] : f.sorted_entries()) write_row(out, x.to_string(), v);
}

void write_csv(std::ostream& out, const TreeFunction& f, const std::string& comment) {
  write_comment(out, comment);
  out << "vertex,num,den\n";
  for (const auto& [x, v] : f.sorted_entries()) write_row(out, x.to_string(), v);
}

void write_csv_rows(std::ostream& out, const SupportedFunction& f,
                    const std::vector<GroupElement>& keys, const std::string& comment) {
  write_comment(out, comment);
  out << "vertex,num,den\n";
  for (const auto& x : keys) write_row(out, x.to_string(), f(x));
}

void write_csv_rows(std::ostream& out, const TreeFunction& f, const std::vector<TreeVertex>& keys,
                    const std::string& comment) {
  write_comment(out, comment);
  out << "vertex,num,den\n";
  for (const auto& x : keys) write_row(out, x.to_string(), f(x));
}

SupportedFunction read_csv(std::istream& in, const GroupSpec& g) {
  SupportedFunction f(g);
  read_rows(in, [&](const std::string& key, const Rational& v) {
    f.add(g.element_from_coords(parse_key(key)), v);
  });
  return f;
}

TreeFunction read_tree_csv(std::istream& in, int k) {
  TreeFunction f(k);
  read_rows(in, [&](const std::string& key, const Rational& v) {
    std::vector<int> letters;
    for (std::int64_t c : parse_key(key)) letters.push_back(static_cast<int>(c));
    f.add(TreeVertex::from_letters(letters, k), v);
  });
  return f;
}

} // namespace lattice_waves::io
