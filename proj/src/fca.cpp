#include "galois_kit/fca.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "galois_kit/error.hpp"

namespace galois_kit {

std::string_view to_string(DeriveSide s) {
  return s == DeriveSide::objects_to_attrs ? "objects_to_attrs" : "attrs_to_objects";
}

DeriveSide parse_derive_side(std::string_view text) {
  if (text == "objects_to_attrs") return DeriveSide::objects_to_attrs;
  if (text == "attrs_to_objects") return DeriveSide::attrs_to_objects;
  throw PreconditionError("unknown side '" + std::string(text) +
                          "' (expected objects_to_attrs or attrs_to_objects)");
}

namespace {

InducedKind kind_of(DeriveSide side) {
  return side == DeriveSide::objects_to_attrs ? InducedKind::delta : InducedKind::epsilon;
}

}  // namespace

FuzzyVector derive(const FuzzyContext& ctx, DeriveSide side, const FuzzyVector& x) {
  return apply_induced(kind_of(side), ctx.incidence(), x);
}

OperatorTable derivation_operator(const FuzzyContext& ctx, DeriveSide side, const Budget& budget) {
  return induced_operator(kind_of(side), ctx.incidence(), budget);
}

ConceptSet::ConceptSet(std::vector<Concept> concepts) : concepts_(std::move(concepts)) {
  if (concepts_.empty()) throw PreconditionError("a concept set cannot be empty");
  const VectorSpace space(concepts_.front().extent.lattice(), concepts_.front().extent.index().size());
  std::sort(concepts_.begin(), concepts_.end(), [&](const Concept& a, const Concept& b) {
    return space.rank(a.extent.values()) < space.rank(b.extent.values());
  });
  const std::size_t n = concepts_.size();
  order_.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) order_[a][b] = concepts_[a].extent.leq(concepts_[b].extent);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !order_[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (c != a && c != b && order_[a][c] && order_[c][b]) cover = false;
      if (cover) covers_.emplace_back(a, b);
    }
}

ConceptSet enumerate_concepts(const FuzzyContext& ctx, const Budget& budget) {
  const OperatorTable d = derivation_operator(ctx, DeriveSide::objects_to_attrs, budget);
  const VectorSpace& G = d.in_space();
  std::map<std::size_t, Concept> by_extent;
  for (std::size_t r = 0; r < G.count(); ++r) {
    const Values& intent = d.rows()[r];
    Values extent = evaluate_induced(InducedKind::epsilon, ctx.incidence(), intent);
    const std::size_t key = G.rank(extent);
    if (by_extent.count(key)) continue;
    by_extent.emplace(key, Concept{FuzzyVector(ctx.lattice(), ctx.objects(), std::move(extent)),
                                   FuzzyVector(ctx.lattice(), ctx.attributes(), intent)});
  }
  std::vector<Concept> out;
  out.reserve(by_extent.size());
  for (auto& [key, c] : by_extent) out.push_back(std::move(c));
  return ConceptSet(std::move(out));
}

ExportFormat parse_export_format(std::string_view text) {
  if (text == "dot") return ExportFormat::dot;
  if (text == "json") return ExportFormat::json;
  throw PreconditionError("unknown format '" + std::string(text) + "' (expected json or dot)");
}

namespace {

nlohmann::json label_map(const FuzzyVector& v) {
  const LatticeSpec& A = *v.lattice();
  nlohmann::json m = nlohmann::json::object();
  for (std::size_t i = 0; i < v.index().size(); ++i) m[v.index().name(i)] = A.label_str(v.at(i));
  return m;
}

}  // namespace

std::string export_lattice(const ConceptSet& cs, ExportFormat format) {
  if (format == ExportFormat::dot) {
    std::ostringstream os;
    os << "digraph concepts {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const Concept& c = cs.concepts()[i];
      os << "  c" << i << " [label=\"" << c.extent.str() << '|' << c.intent.str() << "\"];\n";
    }
    for (const auto& [lo, hi] : cs.covers()) os << "  c" << lo << " -> c" << hi << ";\n";
    os << "}\n";
    return os.str();
  }
  nlohmann::json doc;
  doc["concepts"] = nlohmann::json::array();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Concept& c = cs.concepts()[i];
    doc["concepts"].push_back(
        {{"id", i}, {"extent", label_map(c.extent)}, {"intent", label_map(c.intent)}});
  }
  doc["covers"] = nlohmann::json::array();
  for (const auto& [lo, hi] : cs.covers()) doc["covers"].push_back({lo, hi});
  return doc.dump(2) + "\n";
}

}  // namespace galois_kit
