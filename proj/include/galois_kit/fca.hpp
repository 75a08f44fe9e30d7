#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galois_kit/operator.hpp"

namespace galois_kit {

/// Objects G, attributes M and a lattice-valued incidence over G x M.
class FuzzyContext {
 public:
  explicit FuzzyContext(FuzzyRelation incidence) : incidence_(std::move(incidence)) {}

  const IndexSet& objects() const noexcept { return incidence_.domain(); }
  const IndexSet& attributes() const noexcept { return incidence_.codomain(); }
  const FuzzyRelation& incidence() const noexcept { return incidence_; }
  const Lattice& lattice() const noexcept { return incidence_.lattice(); }

 private:
  FuzzyRelation incidence_;
};

/// objects_to_attrs: d(x)(m) = inf_g (x(g) -> I(g,m)).
/// attrs_to_objects: h(y)(g) = inf_m (y(m) -> I(g,m)).
enum class DeriveSide { objects_to_attrs, attrs_to_objects };
std::string_view to_string(DeriveSide s);
DeriveSide parse_derive_side(std::string_view text);

FuzzyVector derive(const FuzzyContext& ctx, DeriveSide side, const FuzzyVector& x);
OperatorTable derivation_operator(const FuzzyContext& ctx, DeriveSide side,
                                  const Budget& budget = {});

struct Concept {
  FuzzyVector extent;
  FuzzyVector intent;
};

class ConceptSet {
 public:
  /// Sorts by extent rank and computes the order and its covers.
  explicit ConceptSet(std::vector<Concept> concepts);

  const std::vector<Concept>& concepts() const noexcept { return concepts_; }
  std::size_t size() const noexcept { return concepts_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return order_[a][b]; }
  /// (lower, upper) pairs of the Hasse diagram, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept {
    return covers_;
  }

 private:
  std::vector<Concept> concepts_;
  std::vector<std::vector<bool>> order_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

/// The pairs (hd(x), d(x)) over all x in A^G.
ConceptSet enumerate_concepts(const FuzzyContext& ctx, const Budget& budget = {});

enum class ExportFormat { dot, json };
ExportFormat parse_export_format(std::string_view text);

/// DOT: Hasse diagram drawn bottom-up, node labels "extent|intent".
/// JSON: concepts with extent/intent label maps plus cover edges.
std::string export_lattice(const ConceptSet& cs, ExportFormat format);

}  // namespace galois_kit
