#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "galois_kit/operator.hpp"

namespace galois_kit {

/// A set of time points with a lattice-valued accessibility relation.
class TimeFrame {
 public:
  explicit TimeFrame(FuzzyRelation rel);

  const IndexSet& times() const noexcept { return rel_.domain(); }
  const FuzzyRelation& relation() const noexcept { return rel_; }
  const Lattice& lattice() const noexcept { return rel_.lattice(); }

 private:
  FuzzyRelation rel_;
};

/// G and H are endo maps on A^T. F = not G not and P = not H not are present on MV lattices.
struct TenseStructure {
  Lattice lattice;
  OperatorTable G;
  OperatorTable H;
  std::optional<OperatorTable> F;
  std::optional<OperatorTable> P;
};

/// G = phi_R, H = phi_{R^-1}. A frame written with the opposite orientation can be transposed
/// first.
TenseStructure tense_from_frame(const TimeFrame& frame, const Budget& budget = {});
/// Assembles a structure from explicit tables, attaching F and P on MV lattices.
TenseStructure make_tense_structure(OperatorTable G, OperatorTable H);

enum class AxiomSuite { boolean_B, mv_T, pavelka_PT, monadic_new, monadic_original };
std::string_view to_string(AxiomSuite s);
AxiomSuite parse_axiom_suite(std::string_view text);

struct AxiomReport {
  AxiomSuite suite = AxiomSuite::pavelka_PT;
  std::map<std::string, bool> results;
  std::map<std::string, Witness> witnesses;
  /// Extra evaluations that do not count towards all_pass(), e.g. a variant of an axiom as it
  /// appears in some sources.
  std::map<std::string, bool> informational;

  bool all_pass() const;
};

/// boolean_B needs a Boolean algebra, mv_T and pavelka_PT an MV lattice. Constants in PT2 range
/// over the whole carrier.
AxiomReport check_axioms(const TenseStructure& ts, AxiomSuite suite);

struct CorrespondenceRow {
  bool frame = false;     // property of the relation
  bool operators = false; // property of G and H
  bool agrees() const { return frame == operators; }
};

struct FrameCorrespondence {
  CorrespondenceRow reflexive;   // R reflexive  vs  G <= id and H <= id
  CorrespondenceRow symmetric;   // R symmetric  vs  G = H
  CorrespondenceRow transitive;  // R transitive vs  G <= GG and H <= HH
  std::map<std::string, Witness> witnesses;

  bool all_agree() const {
    return reflexive.agrees() && symmetric.agrees() && transitive.agrees();
  }
};

FrameCorrespondence frame_correspondence(const TimeFrame& frame, const Budget& budget = {});

struct MonadicStructure {
  OperatorTable exists;
  std::optional<OperatorTable> forall;  // not exists not, on MV lattices
};

/// exists = rho_R for a fuzzy equivalence R.
MonadicStructure monadic_from_equivalence(const TimeFrame& frame, const Budget& budget = {});
MonadicStructure make_monadic_structure(OperatorTable exists);

/// monadic_new: closure operator with E not E = not E and r * E(x) = E(r * x).
/// monadic_original: E1-E6 with E6 read as E(x*x) = Ex * Ex; the form E(x*x) = Ex + Ex is
/// reported under informational.
AxiomReport check_monadic(const MonadicStructure& m, AxiomSuite suite);

struct BridgeReport {
  bool is_closure = false;
  bool monadic_new = false;
  bool pavelka_pt = false;  // (A, forall, forall)
  bool agree() const { return monadic_new == pavelka_pt; }
  /// The equivalence is only claimed for closure operators.
  bool holds() const { return !is_closure || agree(); }
};

BridgeReport monadic_tense_bridge(const OperatorTable& exists);

struct StrongAdjointReport {
  bool reversed = false;
  /// Covariant: "f" is r -> f(x) = f(r -> x), "g" is r * g(x) = g(r * x).
  /// Reversed: "d" is r -> d(x) = d(r * x), "h" is r -> h(x) = h(r * x).
  std::map<std::string, bool> laws;
  std::map<std::string, Witness> witnesses;
  bool equivalent = false;
  bool holds() const;
};

StrongAdjointReport strong_adjoint_check(const OperatorTable& f, const OperatorTable& g,
                                         bool reversed);

}  // namespace galois_kit
