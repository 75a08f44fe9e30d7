#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "galois_kit/lattice.hpp"

namespace galois_kit {

/// Finite, non-empty, ordered set of distinct names (objects, attributes, time points, ...).
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<std::string> names);
  /// {prefix1, ..., prefixN}.
  static IndexSet numbered(const std::string& prefix, std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> position(const std::string& name) const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

/// Lattice-valued relation R: I x J -> A stored as a dense row-major table.
class FuzzyRelation {
 public:
  /// values.size() must equal |domain| * |codomain| and every value must be a carrier element.
  FuzzyRelation(Lattice lattice, IndexSet domain, IndexSet codomain, std::vector<Element> values);

  const Lattice& lattice() const noexcept { return lattice_; }
  const IndexSet& domain() const noexcept { return domain_; }
  const IndexSet& codomain() const noexcept { return codomain_; }
  Element at(std::size_t i, std::size_t j) const { return values_[i * codomain_.size() + j]; }
  const std::vector<Element>& values() const noexcept { return values_; }
  bool is_square() const { return domain_ == codomain_; }

  friend bool operator==(const FuzzyRelation& a, const FuzzyRelation& b);

 private:
  Lattice lattice_;
  IndexSet domain_;
  IndexSet codomain_;
  std::vector<Element> values_;
};

struct RelationEntry {
  std::string i;
  std::string j;
  std::string value;  // rational carrier label
};

/// Dense relation from sparse entries; unspecified pairs are 0.
FuzzyRelation build_relation(Lattice lattice, IndexSet domain, IndexSet codomain,
                             std::span<const RelationEntry> entries);

/// R^-1(j, i) = R(i, j).
FuzzyRelation transpose(const FuzzyRelation& R);

struct RelationReport {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  bool boolean_valued = false;
  bool fuzzy_equivalence = false;
  /// Lexicographically first violating index tuple (by name) per failing property.
  std::map<std::string, std::vector<std::string>> witnesses;
};

/// Exhaustive property check. With square_properties = true the relation must be square
/// (a PreconditionError otherwise); with false only boolean_valued is computed.
RelationReport relation_properties(const FuzzyRelation& R, bool square_properties = true);

/// Calls fn on every relation I x J -> A in lexicographic order of the value table.
/// Refuses enumerations of more than `budget` relations.
void for_each_relation(const Lattice& lattice, const IndexSet& domain, const IndexSet& codomain,
                       const std::function<void(const FuzzyRelation&)>& fn,
                       std::size_t budget = 1'000'000);

}  // namespace galois_kit
