#include "galois_kit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "galois_kit/error.hpp"

namespace galois_kit::io {

namespace fs = std::filesystem;

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json read_json_file(const fs::path& path) {
  const std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

namespace {

const json& field(const json& doc, const char* name, const char* where) {
  if (!doc.is_object()) throw IoError(std::string(where) + " must be a JSON object");
  auto it = doc.find(name);
  if (it == doc.end())
    throw IoError(std::string("missing field '") + name + "' in " + where);
  return *it;
}

const json& array_field(const json& doc, const char* name, const char* where) {
  const json& v = field(doc, name, where);
  if (!v.is_array()) throw IoError(std::string("field '") + name + "' in " + where +
                                   " must be an array");
  return v;
}

std::string label_text(const json& v, const std::string& what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  throw IoError(what + " must be a label string or number");
}

std::vector<std::string> names(const json& doc, const char* name, const char* where) {
  std::vector<std::string> out;
  for (const json& v : array_field(doc, name, where)) {
    if (!v.is_string()) throw IoError(std::string("field '") + name + "' in " + where +
                                      " must list strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

Element element_of(const LatticeSpec& A, const json& v, const std::string& what) {
  const std::string text = label_text(v, what);
  try {
    return A.element(text);
  } catch (const PreconditionError& e) {
    throw PreconditionError(what + ": " + e.what());
  }
}

Lattice lattice_reference(const json& doc, const std::optional<Lattice>& given,
                          const fs::path& base_dir, const char* where) {
  auto it = doc.find("lattice");
  if (it == doc.end()) {
    if (!given) throw IoError(std::string("missing field 'lattice' in ") + where +
                              " and no --lattice given");
    return *given;
  }
  Lattice own = it->is_string() ? load_lattice(base_dir / it->get<std::string>())
                                : lattice_from_json(*it);
  if (given && !(**given == *own))
    throw PreconditionError(std::string("lattice mismatch: ") + where +
                            " declares a different lattice than --lattice");
  return given ? *given : own;
}

Table read_table(const json& tables, const char* name, const std::vector<Rational>& labels) {
  const json& rows = array_field(tables, name, "lattice tables");
  Table t;
  for (const json& row : rows) {
    if (!row.is_array()) throw IoError(std::string("table '") + name + "' rows must be arrays");
    std::vector<std::size_t> cells;
    for (const json& cell : row) {
      const Rational value = Rational::parse(label_text(cell, std::string("table '") + name + "'"));
      auto pos = std::find(labels.begin(), labels.end(), value);
      if (pos == labels.end())
        throw PreconditionError(std::string("table '") + name + "' entry " + value.str() +
                                " is not in the carrier");
      cells.push_back(static_cast<std::size_t>(pos - labels.begin()));
    }
    t.push_back(std::move(cells));
  }
  return t;
}

}  // namespace

LatticeDraft lattice_draft_from_json(const json& doc) {
  const json& kind_field = field(doc, "kind", "lattice");
  if (!kind_field.is_string()) throw IoError("field 'kind' in lattice must be a string");
  const LatticeKind kind = parse_lattice_kind(kind_field.get<std::string>());

  std::vector<Rational> labels;
  for (const json& v : array_field(doc, "labels", "lattice"))
    labels.push_back(Rational::parse(label_text(v, "lattice label")));

  const auto tables = doc.find("tables");
  if (kind != LatticeKind::custom) {
    if (labels.size() < 2) throw PreconditionError("a chain needs at least two labels");
    const int k = static_cast<int>(labels.size());
    const Lattice chain =
        kind == LatticeKind::lukasiewicz_chain ? make_lukasiewicz_chain(k) : make_goedel_chain(k);
    if (labels != chain->labels())
      throw PreconditionError("labels do not match the " + std::string(to_string(kind)) +
                              " chain with " + std::to_string(k) + " elements");
    LatticeDraft draft = chain->draft();
    if (tables != doc.end()) {
      // Explicit tables on a chain are taken as written, so validation can catch corruption.
      draft.join = read_table(*tables, "join", labels);
      draft.meet = read_table(*tables, "meet", labels);
      draft.prod = read_table(*tables, "prod", labels);
      draft.impl = read_table(*tables, "impl", labels);
    }
    return draft;
  }
  if (tables == doc.end()) throw IoError("missing field 'tables' in custom lattice");
  LatticeDraft draft;
  draft.kind = LatticeKind::custom;
  draft.labels = labels;
  draft.join = read_table(*tables, "join", labels);
  draft.meet = read_table(*tables, "meet", labels);
  draft.prod = read_table(*tables, "prod", labels);
  draft.impl = read_table(*tables, "impl", labels);
  return draft;
}

Lattice lattice_from_json(const json& doc) {
  LatticeDraft draft = lattice_draft_from_json(doc);
  if (draft.kind != LatticeKind::custom) {
    const int k = static_cast<int>(draft.labels.size());
    Lattice chain = draft.kind == LatticeKind::lukasiewicz_chain ? make_lukasiewicz_chain(k)
                                                                 : make_goedel_chain(k);
    const LatticeDraft ref = chain->draft();
    if (draft.join != ref.join || draft.meet != ref.meet || draft.prod != ref.prod ||
        draft.impl != ref.impl)
      throw LawViolation("tables do not match the " + std::string(to_string(draft.kind)) +
                         " chain operations");
    return chain;
  }
  return make_custom_lattice(draft);
}

LatticeDraft load_lattice_draft(const fs::path& path) {
  return lattice_draft_from_json(read_json_file(path));
}

Lattice load_lattice(const fs::path& path) { return lattice_from_json(read_json_file(path)); }

json lattice_to_json(const LatticeSpec& A) {
  json doc;
  doc["kind"] = std::string(to_string(A.kind()));
  doc["labels"] = json::array();
  for (const Rational& r : A.labels()) doc["labels"].push_back(r.str());
  if (A.kind() == LatticeKind::custom) {
    const LatticeDraft d = A.draft();
    auto table = [&](const Table& t) {
      json rows = json::array();
      for (const auto& row : t) {
        json cells = json::array();
        for (std::size_t c : row) cells.push_back(A.labels()[c].str());
        rows.push_back(std::move(cells));
      }
      return rows;
    };
    doc["tables"] = {{"join", table(d.join)},
                     {"meet", table(d.meet)},
                     {"prod", table(d.prod)},
                     {"impl", table(d.impl)}};
  }
  return doc;
}

FuzzyRelation relation_from_json(const json& doc, const std::optional<Lattice>& lattice,
                                 const fs::path& base_dir) {
  const Lattice A = lattice_reference(doc, lattice, base_dir, "relation");
  IndexSet domain(names(doc, "domain", "relation"));
  IndexSet codomain(names(doc, "codomain", "relation"));
  std::vector<RelationEntry> entries;
  if (auto it = doc.find("entries"); it != doc.end()) {
    if (!it->is_array()) throw IoError("field 'entries' in relation must be an array");
    for (const json& e : *it) {
      const json& i = field(e, "i", "relation entry");
      const json& j = field(e, "j", "relation entry");
      if (!i.is_string() || !j.is_string())
        throw IoError("relation entry fields 'i' and 'j' must be strings");
      entries.push_back({i.get<std::string>(), j.get<std::string>(),
                         label_text(field(e, "v", "relation entry"), "relation entry 'v'")});
    }
  }
  return build_relation(A, std::move(domain), std::move(codomain), entries);
}

FuzzyRelation load_relation(const fs::path& path, const std::optional<Lattice>& lattice) {
  return relation_from_json(read_json_file(path), lattice, path.parent_path());
}

json relation_to_json(const FuzzyRelation& R) {
  const LatticeSpec& A = *R.lattice();
  json doc;
  doc["lattice"] = lattice_to_json(A);
  doc["domain"] = R.domain().names();
  doc["codomain"] = R.codomain().names();
  doc["entries"] = json::array();
  for (std::size_t i = 0; i < R.domain().size(); ++i)
    for (std::size_t j = 0; j < R.codomain().size(); ++j)
      doc["entries"].push_back({{"i", R.domain().name(i)},
                                {"j", R.codomain().name(j)},
                                {"v", A.label_str(R.at(i, j))}});
  return doc;
}

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

FuzzyContext load_context(const fs::path& path, const std::optional<Lattice>& lattice) {
  if (path.extension() == ".json") return FuzzyContext(load_relation(path, lattice));
  if (!lattice) throw IoError("a CSV context needs --lattice");
  std::stringstream text(read_text_file(path));
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(text, line))
    if (!trim(line).empty()) rows.push_back(split_csv(line));
  if (rows.size() < 2) throw IoError("context '" + path.string() + "' needs a header and a row");
  const std::vector<std::string> attrs(rows[0].begin() + 1, rows[0].end());
  if (attrs.empty()) throw IoError("context header lists no attributes");
  std::vector<std::string> objects;
  std::vector<RelationEntry> entries;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != attrs.size() + 1)
      throw IoError("context row " + std::to_string(r + 1) + " has " +
                    std::to_string(rows[r].size()) + " cells, expected " +
                    std::to_string(attrs.size() + 1));
    objects.push_back(rows[r][0]);
    for (std::size_t c = 0; c < attrs.size(); ++c)
      entries.push_back({rows[r][0], attrs[c], rows[r][c + 1]});
  }
  return FuzzyContext(build_relation(*lattice, IndexSet(objects), IndexSet(attrs), entries));
}

OperatorTable operator_from_json(const json& doc, const std::optional<Lattice>& lattice,
                                 const fs::path& base_dir) {
  const Lattice A = lattice_reference(doc, lattice, base_dir, "operator");
  IndexSet in(names(doc, "in_index", "operator"));
  IndexSet out(names(doc, "out_index", "operator"));
  Provenance provenance = Provenance::explicit_table;
  if (auto it = doc.find("provenance"); it != doc.end()) {
    if (!it->is_string()) throw IoError("field 'provenance' in operator must be a string");
    provenance = parse_provenance(it->get<std::string>());
  }
  std::vector<Values> rows;
  for (const json& row : array_field(doc, "rows", "operator")) {
    if (!row.is_array()) throw IoError("operator rows must be arrays");
    Values v;
    for (const json& cell : row) v.push_back(element_of(*A, cell, "operator row"));
    rows.push_back(std::move(v));
  }
  return OperatorTable(A, std::move(in), std::move(out), std::move(rows), provenance);
}

OperatorTable load_operator(const fs::path& path, const std::optional<Lattice>& lattice) {
  return operator_from_json(read_json_file(path), lattice, path.parent_path());
}

json values_to_json(const Values& v, const LatticeSpec& A) {
  json out = json::array();
  for (Element e : v) out.push_back(A.label_str(e));
  return out;
}

json operator_to_json(const OperatorTable& op) {
  const LatticeSpec& A = *op.lattice();
  json doc;
  doc["lattice"] = lattice_to_json(A);
  doc["in_index"] = op.in_index().names();
  doc["out_index"] = op.out_index().names();
  doc["provenance"] = std::string(to_string(op.provenance()));
  doc["rows"] = json::array();
  for (const auto& row : op.rows()) doc["rows"].push_back(values_to_json(row, A));
  return doc;
}

json vector_to_json(const FuzzyVector& v) {
  json out = json::object();
  for (std::size_t i = 0; i < v.index().size(); ++i)
    out[v.index().name(i)] = v.lattice()->label_str(v.at(i));
  return out;
}

json witness_to_json(const Witness& w, const LatticeSpec& A) {
  json out;
  if (w.scalar) out["scalar"] = A.label_str(*w.scalar);
  out["vectors"] = json::array();
  for (const auto& v : w.vectors) out["vectors"].push_back(values_to_json(v, A));
  return out;
}

}  // namespace galois_kit::io
