#include "galois_kit/relation.hpp"

#include <algorithm>
#include <set>

#include "galois_kit/error.hpp"

namespace galois_kit {

IndexSet::IndexSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw PreconditionError("index set must not be empty");
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw PreconditionError("duplicate index name '" + n + "'");
}

IndexSet IndexSet::numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return IndexSet(std::move(names));
}

std::optional<std::size_t> IndexSet::position(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

FuzzyRelation::FuzzyRelation(Lattice lattice, IndexSet domain, IndexSet codomain,
                             std::vector<Element> values)
    : lattice_(std::move(lattice)),
      domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      values_(std::move(values)) {
  if (!lattice_) throw PreconditionError("relation requires a lattice");
  if (domain_.size() == 0 || codomain_.size() == 0)
    throw PreconditionError("relation index sets must not be empty");
  if (values_.size() != domain_.size() * codomain_.size())
    throw PreconditionError("relation table must have |domain| x |codomain| entries");
  for (Element v : values_)
    if (v.idx >= lattice_->size()) throw PreconditionError("relation entry is not a carrier index");
}

bool operator==(const FuzzyRelation& a, const FuzzyRelation& b) {
  return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.values_ == b.values_ &&
         same_lattice(a.lattice_, b.lattice_);
}

FuzzyRelation build_relation(Lattice lattice, IndexSet domain, IndexSet codomain,
                             std::span<const RelationEntry> entries) {
  std::vector<Element> values(domain.size() * codomain.size(), lattice->bottom());
  for (const auto& e : entries) {
    auto i = domain.position(e.i);
    if (!i) throw PreconditionError("unknown domain index '" + e.i + "'");
    auto j = codomain.position(e.j);
    if (!j) throw PreconditionError("unknown codomain index '" + e.j + "'");
    values[*i * codomain.size() + *j] = lattice->element(e.value);
  }
  return FuzzyRelation(std::move(lattice), std::move(domain), std::move(codomain),
                       std::move(values));
}

FuzzyRelation transpose(const FuzzyRelation& R) {
  const std::size_t n = R.domain().size(), m = R.codomain().size();
  std::vector<Element> values(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) values[j * n + i] = R.at(i, j);
  return FuzzyRelation(R.lattice(), R.codomain(), R.domain(), std::move(values));
}

RelationReport relation_properties(const FuzzyRelation& R, bool square_properties) {
  const LatticeSpec& A = *R.lattice();
  RelationReport r;

  r.boolean_valued = true;
  for (std::size_t i = 0; i < R.domain().size() && r.boolean_valued; ++i)
    for (std::size_t j = 0; j < R.codomain().size(); ++j) {
      Element v = R.at(i, j);
      if (v != A.bottom() && v != A.top()) {
        r.boolean_valued = false;
        r.witnesses["boolean_valued"] = {R.domain().name(i), R.codomain().name(j)};
        break;
      }
    }
  if (!square_properties) return r;
  if (!R.is_square())
    throw PreconditionError(
        "reflexivity, symmetry and transitivity require a relation with domain = codomain");

  const IndexSet& T = R.domain();
  const std::size_t n = T.size();
  r.reflexive = r.symmetric = r.transitive = true;
  for (std::size_t i = 0; i < n && r.reflexive; ++i)
    if (R.at(i, i) != A.top()) {
      r.reflexive = false;
      r.witnesses["reflexive"] = {T.name(i)};
    }
  for (std::size_t i = 0; i < n && r.symmetric; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (R.at(i, j) != R.at(j, i)) {
        r.symmetric = false;
        r.witnesses["symmetric"] = {T.name(i), T.name(j)};
        break;
      }
  for (std::size_t i = 0; i < n && r.transitive; ++i)
    for (std::size_t j = 0; j < n && r.transitive; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!A.leq(A.prod(R.at(i, j), R.at(j, k)), R.at(i, k))) {
          r.transitive = false;
          r.witnesses["transitive"] = {T.name(i), T.name(j), T.name(k)};
          break;
        }
  r.fuzzy_equivalence = r.reflexive && r.symmetric && r.transitive;
  return r;
}

void for_each_relation(const Lattice& lattice, const IndexSet& domain, const IndexSet& codomain,
                       const std::function<void(const FuzzyRelation&)>& fn, std::size_t budget) {
  const std::size_t cells = domain.size() * codomain.size();
  const std::size_t n = lattice->size();
  std::size_t total = 1;
  for (std::size_t c = 0; c < cells; ++c) {
    if (total > budget / n) throw BudgetExceeded("relation enumeration exceeds the budget");
    total *= n;
  }
  std::vector<Element> values(cells, lattice->bottom());
  for (std::size_t count = 0; count < total; ++count) {
    fn(FuzzyRelation(lattice, domain, codomain, values));
    // Increment as a base-n counter, last cell fastest.
    for (std::size_t c = cells; c-- > 0;) {
      if (values[c].idx + 1 < n) {
        ++values[c].idx;
        break;
      }
      values[c] = lattice->bottom();
    }
  }
}

}  // namespace galois_kit
