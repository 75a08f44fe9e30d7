#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galois_kit/lattice.hpp"
#include "galois_kit/relation.hpp"
#include "galois_kit/vector.hpp"

namespace galois_kit {

/// The four relation-induced operators for R: I x J -> A.
///   phi_R:     A^I -> A^J, phi_R(x)(j) = inf_i (R(i,j) -> x(i))
///   rho_R:     A^J -> A^I, rho_R(y)(i) = sup_j (R(i,j) * y(j))
///   delta_R:   A^I -> A^J, delta_R(x)(j) = inf_i (x(i) -> R(i,j))
///   epsilon_R: A^J -> A^I, epsilon_R(y)(i) = inf_j (y(j) -> R(i,j))
enum class InducedKind { phi, rho, delta, epsilon };

std::string_view to_string(InducedKind kind);
InducedKind parse_induced_kind(std::string_view text);

enum class Provenance { induced_phi, induced_rho, induced_delta, induced_epsilon, explicit_table };

std::string_view to_string(Provenance p);
Provenance parse_provenance(std::string_view text);

/// An explicit function A^in -> A^out stored as one output row per input vector, in canonical
/// order (see VectorSpace).
class OperatorTable {
 public:
  OperatorTable(Lattice lattice, IndexSet in_index, IndexSet out_index, std::vector<Values> rows,
                Provenance provenance = Provenance::explicit_table,
                std::optional<FuzzyRelation> source = std::nullopt);

  /// Evaluates fn on every input vector. Budget-checked on |A|^|in|.
  static OperatorTable tabulate(Lattice lattice, IndexSet in_index, IndexSet out_index,
                                const std::function<Values(const Values&)>& fn,
                                const Budget& budget = {});

  const Values& operator()(const Values& x) const { return rows_[in_space_.rank(x)]; }
  FuzzyVector apply(const FuzzyVector& x) const;

  const Lattice& lattice() const noexcept { return lattice_; }
  const IndexSet& in_index() const noexcept { return in_index_; }
  const IndexSet& out_index() const noexcept { return out_index_; }
  const VectorSpace& in_space() const noexcept { return in_space_; }
  const VectorSpace& out_space() const noexcept { return out_space_; }
  const std::vector<Values>& rows() const noexcept { return rows_; }
  Provenance provenance() const noexcept { return provenance_; }
  const std::optional<FuzzyRelation>& source() const noexcept { return source_; }
  bool is_endo() const { return in_index_ == out_index_; }

  /// Same lattice, index sets and rows; provenance is ignored.
  bool same_function(const OperatorTable& other) const;

 private:
  Lattice lattice_;
  IndexSet in_index_;
  IndexSet out_index_;
  VectorSpace in_space_;
  VectorSpace out_space_;
  std::vector<Values> rows_;
  Provenance provenance_;
  std::optional<FuzzyRelation> source_;
};

/// outer . inner
OperatorTable compose(const OperatorTable& outer, const OperatorTable& inner);
OperatorTable identity_operator(const Lattice& lattice, const IndexSet& index,
                                const Budget& budget = {});
/// x -> not op(not x). Requires an MV lattice.
OperatorTable negation_conjugate(const OperatorTable& op);

/// Pointwise evaluation of an induced operator on raw coordinates.
Values evaluate_induced(InducedKind kind, const FuzzyRelation& R, const Values& x);
FuzzyVector apply_induced(InducedKind kind, const FuzzyRelation& R, const FuzzyVector& x);
OperatorTable induced_operator(InducedKind kind, const FuzzyRelation& R, const Budget& budget = {});

/// A violating instance: an optional diagonal scalar and the vectors involved.
struct Witness {
  std::optional<Element> scalar;
  std::vector<Values> vectors;
};
std::string describe(const Witness& w, const LatticeSpec& A);

struct GaloisReport {
  bool reversed = false;
  /// x <= f(y) iff g(x) <= y (covariant) or x <= d(y) iff y <= h(x) (reversed), over all pairs.
  bool biconditional = false;
  /// Both maps monotone (covariant) or both antitone (reversed).
  bool order_condition = false;
  /// gf <= id and id <= fg (covariant), or id <= hd and id <= dh (reversed).
  bool unit_counit = false;
  /// biconditional == (order_condition && unit_counit), the two characterisations agree.
  bool characterisations_agree = false;
  std::optional<Witness> biconditional_witness;
  std::optional<Witness> unit_counit_witness;

  bool passed() const { return biconditional && characterisations_agree; }
};

/// f: A^I -> A^J, g: A^J -> A^I over the same lattice.
GaloisReport verify_galois(const OperatorTable& f, const OperatorTable& g, bool reversed);

enum class MappingType { phi_type, rho_type, delta_type, none };
std::string_view to_string(MappingType t);

struct MappingTypeReport {
  bool monotone = false;
  bool antitone = false;
  /// On a finite carrier every infimum is a finite meet or the empty meet, so infima preservation
  /// is op(1) = 1 plus binary-meet preservation; likewise for suprema.
  bool infima_preserving = false;
  bool suprema_preserving = false;
  bool suprema_reversing = false;
  bool diag_impl_law = false;   // d -> op(x) = op(d -> x)
  bool diag_prod_law = false;   // d * op(x) = op(d * x)
  bool diag_mixed_law = false;  // d -> op(x) = op(d * x)
  bool is_phi_type = false;
  bool is_rho_type = false;
  bool is_delta_type = false;
  /// First of phi, rho, delta that holds.
  MappingType type_class = MappingType::none;
  std::map<std::string, Witness> witnesses;
};

MappingTypeReport classify_mapping(const OperatorTable& op);

/// Which partner compute_adjoint constructs, under x <= f(y) iff g(x) <= y.
enum class AdjointDirection {
  left_of_monotone,   // op = f infima-preserving; returns g(x) = inf{a | x <= f(a)}
  right_of_monotone,  // op = g suprema-preserving; returns f(x) = sup{b | g(b) <= x}
  reversed_partner,   // op = d suprema-reversing; returns h(x) = sup{a | x <= d(a)}
};
std::string_view to_string(AdjointDirection d);
AdjointDirection parse_adjoint_direction(std::string_view text);

OperatorTable compute_adjoint(const OperatorTable& op, AdjointDirection direction,
                              const Budget& budget = {});

enum class RecoveryKind { from_phi, from_delta, from_rho };
std::string_view to_string(RecoveryKind k);
RecoveryKind parse_recovery_kind(std::string_view text);

/// The unique relation inducing op:
///   from_phi:   R(i,j) = inf_a (op(a)(j) -> a(i))
///   from_delta: R(i,j) = sup_a (op(a)(j) * a(i))
///   from_rho:   R(i,j) = op(unit_j)(i), cross-checked against from_phi of the right adjoint.
/// The result is verified to reproduce op exactly.
FuzzyRelation recover_relation(const OperatorTable& op, RecoveryKind kind,
                               const Budget& budget = {});

struct ClosureReport {
  bool monotone = false;
  bool extensive = false;    // x <= op(x)
  bool contractive = false;  // op(x) <= x
  bool idempotent = false;
  bool scalar_law = false;   // d * op(x) <= op(d * x)
  bool is_closure = false;
  bool is_interior = false;
  bool has_scalar_law_closure = false;
  bool has_scalar_law_interior = false;
  std::map<std::string, Witness> witnesses;
};

ClosureReport closure_interior_check(const OperatorTable& op);

enum class DecompositionMode { interior, closure };
std::string_view to_string(DecompositionMode m);
DecompositionMode parse_decomposition_mode(std::string_view text);

struct Decomposition {
  FuzzyRelation relation;  // over I x J, R(i, c) = c(i)
  IndexSet fixpoints;      // J: the distinct images op(a), named by their tuples
};

/// Expresses an interior operator as rho_R . phi_R, or a closure operator as
/// epsilon_R . delta_R, provided the scalar law holds.
Decomposition decompose_operator(const OperatorTable& op, DecompositionMode mode);

struct ConjugateReport {
  bool neg_phi_neg_is_rho_inverse = false;  // not phi_R not = rho_{R^-1}
  bool neg_rho_neg_is_phi_inverse = false;  // not rho_R not = phi_{R^-1}
  std::optional<Witness> witness;
  bool passed() const { return neg_phi_neg_is_rho_inverse && neg_rho_neg_is_phi_inverse; }
};

ConjugateReport conjugate_check(const FuzzyRelation& R, const Budget& budget = {});

struct BooleanCriterionReport {
  bool submultiplicative = false;  // phi_R(x) * phi_R(y) <= phi_R(x * y) for all x, y
  bool boolean_valued = false;
  bool equivalent = false;
  std::optional<Witness> witness;
};

BooleanCriterionReport boolean_criterion_check(const FuzzyRelation& R, const Budget& budget = {});

}  // namespace galois_kit
