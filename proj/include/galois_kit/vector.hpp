#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "galois_kit/lattice.hpp"
#include "galois_kit/relation.hpp"

namespace galois_kit {

/// Raw coordinates of an element of A^I.
using Values = std::vector<Element>;

inline constexpr std::size_t kDefaultBudget = 10'000;

/// Upper bound on |A|^|I| for any enumeration of a vector space.
struct Budget {
  std::size_t max_rows = kDefaultBudget;
};

/// The power A^d with pointwise operations.
///
/// Canonical enumeration order is lexicographic by element index with the first coordinate most
/// significant, so rank(x) = sum_i x[i] * |A|^(d-1-i). Table rows, golden files and witnesses all
/// follow this order.
class VectorSpace {
 public:
  VectorSpace(Lattice lattice, std::size_t dim);

  const Lattice& lattice() const noexcept { return lattice_; }
  std::size_t dim() const noexcept { return dim_; }
  /// |A|^d, saturated at SIZE_MAX.
  std::size_t count() const noexcept { return count_; }

  /// Throws BudgetExceeded when count() exceeds the budget.
  void require_within(const Budget& budget, std::string_view what) const;

  std::size_t rank(const Values& x) const;
  Values unrank(std::size_t r) const;
  /// Every vector in canonical order (budget-checked).
  std::vector<Values> all(const Budget& budget) const;

  Values diagonal(Element d) const { return Values(dim_, d); }
  Values top() const { return diagonal(lattice_->top()); }
  Values bottom() const { return diagonal(lattice_->bottom()); }
  /// Crisp unit vector: top at coordinate j, bottom elsewhere.
  Values unit(std::size_t j) const;

  Values meet(const Values& a, const Values& b) const;
  Values join(const Values& a, const Values& b) const;
  Values prod(const Values& a, const Values& b) const;
  Values impl(const Values& a, const Values& b) const;
  Values neg(const Values& a) const;
  /// d^I * x.
  Values scale(Element d, const Values& x) const;
  /// d^I -> x.
  Values shift(Element d, const Values& x) const;
  bool leq(const Values& a, const Values& b) const;

 private:
  Lattice lattice_;
  std::size_t dim_ = 0;
  std::size_t count_ = 1;
};

/// An element of A^I: one carrier element per index name.
class FuzzyVector {
 public:
  FuzzyVector(Lattice lattice, IndexSet index, Values values);
  /// Comma-separated carrier labels, one per index in order: "0,1/2,1".
  static FuzzyVector parse(Lattice lattice, IndexSet index, std::string_view labels);

  const Lattice& lattice() const noexcept { return lattice_; }
  const IndexSet& index() const noexcept { return index_; }
  const Values& values() const noexcept { return values_; }
  Element at(std::size_t i) const { return values_.at(i); }
  /// Pointwise order.
  bool leq(const FuzzyVector& other) const;
  std::string str() const;

  friend bool operator==(const FuzzyVector& a, const FuzzyVector& b);

 private:
  Lattice lattice_;
  IndexSet index_;
  Values values_;
};

/// "a,b,c" from raw values.
std::string format_values(const Values& v, const LatticeSpec& A);
/// "(a,b,c)".
std::string format_tuple(const Values& v, const LatticeSpec& A);

}  // namespace galois_kit
