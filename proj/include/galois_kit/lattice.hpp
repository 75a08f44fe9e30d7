#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galois_kit/rational.hpp"

namespace galois_kit {

/// An element of a finite carrier, identified by its index (0 = bottom, n-1 = top).
struct Element {
  std::uint32_t idx = 0;
  friend constexpr auto operator<=>(Element, Element) = default;
};

enum class LatticeKind { lukasiewicz_chain, goedel_chain, custom };

std::string_view to_string(LatticeKind kind);
LatticeKind parse_lattice_kind(std::string_view text);

/// Raw n x n operation table of element indices. Entries are not yet known to be closed.
using Table = std::vector<std::vector<std::size_t>>;

/// Unvalidated description of a residuated lattice, the input to validation and construction.
struct LatticeDraft {
  std::vector<Rational> labels;
  Table join;
  Table meet;
  Table prod;
  Table impl;
  LatticeKind kind = LatticeKind::custom;
};

class LatticeSpec;
using Lattice = std::shared_ptr<const LatticeSpec>;

/// A finite commutative bounded integral residuated lattice (A, v, ^, *, ->, 0, 1).
///
/// Instances are immutable and can only be obtained from the factory functions below, each of
/// which guarantees that `validate_residuated_lattice` passes. All operations are table lookups.
class LatticeSpec {
 public:
  std::size_t size() const noexcept { return n_; }
  Element bottom() const noexcept { return Element{0}; }
  Element top() const noexcept { return Element{static_cast<std::uint32_t>(n_ - 1)}; }
  std::vector<Element> elements() const;

  Element join(Element a, Element b) const { return join_[a.idx * n_ + b.idx]; }
  Element meet(Element a, Element b) const { return meet_[a.idx * n_ + b.idx]; }
  Element prod(Element a, Element b) const { return prod_[a.idx * n_ + b.idx]; }
  Element impl(Element a, Element b) const { return impl_[a.idx * n_ + b.idx]; }
  /// Residuated negation x -> 0.
  Element neg(Element a) const { return impl(a, bottom()); }
  /// Lattice order: a <= b iff a ^ b = a.
  bool leq(Element a, Element b) const { return meet(a, b) == a; }

  LatticeKind kind() const noexcept { return kind_; }
  const Rational& label(Element e) const { return labels_.at(e.idx); }
  const std::vector<Rational>& labels() const noexcept { return labels_; }
  std::string label_str(Element e) const { return label(e).str(); }

  std::optional<Element> find(const Rational& label) const;
  /// Parses a rational label and maps it to its element; throws if it is not in the carrier.
  Element element(std::string_view label) const;

  LatticeDraft draft() const;

  friend bool operator==(const LatticeSpec& a, const LatticeSpec& b);

 private:
  explicit LatticeSpec(const LatticeDraft& draft);
  friend Lattice make_validated(const LatticeDraft& draft);

  std::size_t n_ = 0;
  LatticeKind kind_ = LatticeKind::custom;
  std::vector<Rational> labels_;
  std::vector<Element> join_, meet_, prod_, impl_;
};

/// True when both handles denote the same lattice (by identity or by content).
bool same_lattice(const Lattice& a, const Lattice& b);

/// Łukasiewicz chain {0, 1/(k-1), ..., 1} with x*y = max{x+y-1, 0} and x->y = min{1-x+y, 1}.
Lattice make_lukasiewicz_chain(int k);

/// Gödel chain {0, 1/(k-1), ..., 1} with x*y = min{x, y} and x->y = 1 if x <= y, else y.
Lattice make_goedel_chain(int k);

/// Validates the draft and returns it as a lattice, or throws with the failing law and witness.
Lattice make_custom_lattice(const LatticeDraft& draft);

struct Counterexample {
  std::string law;
  std::vector<Element> witness;
};

struct LatticeReport {
  bool is_bounded_lattice = false;
  bool is_comm_monoid = false;
  bool has_adjointness = false;
  // Filled by classify_lattice only.
  bool classified = false;
  bool has_divisibility = false;
  bool has_prelinearity = false;
  bool has_double_negation = false;
  bool is_bl = false;
  bool is_mv = false;
  std::vector<Counterexample> counterexamples;

  bool is_residuated() const { return is_bounded_lattice && is_comm_monoid && has_adjointness; }
  const Counterexample* find(std::string_view law) const;
};

/// Exhaustive check of the bounded-lattice, commutative-monoid and adjointness laws over all
/// triples. Reports the lexicographically first witness of each failing law.
LatticeReport validate_residuated_lattice(const LatticeDraft& draft);
LatticeReport validate_residuated_lattice(const LatticeSpec& spec);

/// Validation plus divisibility, prelinearity and double negation; sets is_bl and is_mv.
LatticeReport classify_lattice(const LatticeSpec& spec);

/// MV-algebra operations derived from a residuated lattice with double negation.
class MvOperations {
 public:
  explicit MvOperations(Lattice lattice);

  const Lattice& lattice() const noexcept { return lattice_; }
  Element neg(Element a) const { return neg_[a.idx]; }
  /// x (+) y = not(not x * not y).
  Element oplus(Element a, Element b) const { return oplus_[a.idx * lattice_->size() + b.idx]; }
  /// Exhaustive check of x <= y iff not x (+) y = 1.
  bool order_matches_oplus() const;

 private:
  Lattice lattice_;
  std::vector<Element> neg_;
  std::vector<Element> oplus_;
};

/// Throws PreconditionError (unsupported structure) when the lattice is not an MV-algebra.
MvOperations mv_extend(const Lattice& lattice);

struct DistributionReport {
  bool product_over_join = true;      // x * sup M = sup {x * m}
  bool implication_from_join = true;  // (sup M) -> x = inf {m -> x}
  bool implication_into_meet = true;  // x -> inf M = inf {x -> m}
  std::size_t subsets_checked = 0;
  std::vector<Counterexample> counterexamples;  // witness = (x, m1, ..., mk)

  bool passed() const { return product_over_join && implication_from_join && implication_into_meet; }
};

/// Checks the residuation distribution identities for every x and every non-empty subset M of
/// the carrier with |M| <= max_subset.
DistributionReport check_residuation_distribution(const LatticeSpec& spec, std::size_t max_subset);

}  // namespace galois_kit
