#pragma once

#include <string>
#include <vector>

#include "galois_kit/lattice.hpp"
#include "galois_kit/operator.hpp"
#include "galois_kit/relation.hpp"
#include "galois_kit/vector.hpp"

namespace testing {

using namespace galois_kit;

inline Element el(const Lattice& A, const std::string& label) { return A->element(label); }

inline Values vals(const Lattice& A, const std::vector<std::string>& labels) {
  Values v;
  for (const auto& l : labels) v.push_back(A->element(l));
  return v;
}

/// Relation from a row-major grid of labels, indexed i1.. and j1.. (or t1.. when square_names).
inline FuzzyRelation grid(const Lattice& A, const std::vector<std::vector<std::string>>& rows,
                          const char* dom = "i", const char* cod = "j") {
  const std::size_t ni = rows.size(), nj = rows.front().size();
  std::vector<Element> cells;
  for (const auto& row : rows)
    for (const auto& l : row) cells.push_back(A->element(l));
  return FuzzyRelation(A, IndexSet::numbered(dom, ni), IndexSet::numbered(cod, nj), cells);
}

inline FuzzyRelation frame_grid(const Lattice& A, const std::vector<std::vector<std::string>>& rows) {
  return grid(A, rows, "t", "t");
}

/// Every relation on numbered index sets of the given sizes.
inline std::vector<FuzzyRelation> all_relations(const Lattice& A, std::size_t ni, std::size_t nj,
                                                const char* dom = "i", const char* cod = "j") {
  std::vector<FuzzyRelation> out;
  for_each_relation(A, IndexSet::numbered(dom, ni), IndexSet::numbered(cod, nj),
                    [&](const FuzzyRelation& R) { out.push_back(R); });
  return out;
}

/// A finite lattice given by its order, with prod = meet and the residuum found by search:
/// a Heyting algebra whenever the lattice is distributive.
inline LatticeDraft heyting_from_order(std::vector<Rational> labels,
                                       const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = labels.size();
  LatticeDraft d;
  d.labels = std::move(labels);
  d.kind = LatticeKind::custom;
  d.join.assign(n, std::vector<std::size_t>(n));
  d.meet.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // least upper bound and greatest lower bound by exhaustive search
      std::size_t lub = n, glb = n;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[a][c] && leq[b][c] && (lub == n || leq[c][lub])) lub = c;
        if (leq[c][a] && leq[c][b] && (glb == n || leq[glb][c])) glb = c;
      }
      d.join[a][b] = lub;
      d.meet[a][b] = glb;
    }
  d.prod = d.meet;
  d.impl.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t best = n;
      for (std::size_t z = 0; z < n; ++z)
        if (leq[d.meet[z][a]][b] && (best == n || leq[best][z])) best = z;
      d.impl[a][b] = best;
    }
  return d;
}

/// 0 < a, b < 1 with a, b incomparable: the four-element Boolean algebra.
inline Lattice boolean_square() {
  // labels: 0, a=1/3, b=2/3, 1
  std::vector<std::vector<bool>> leq = {{true, true, true, true},
                                        {false, true, false, true},
                                        {false, false, true, true},
                                        {false, false, false, true}};
  return make_custom_lattice(
      heyting_from_order({Rational(0), Rational(1, 3), Rational(2, 3), Rational(1)}, leq));
}

/// 0 < a, b < c < 1: distributive, hence Heyting, but not prelinear.
inline Lattice heyting_diamond() {
  std::vector<std::vector<bool>> leq = {{true, true, true, true, true},
                                        {false, true, false, true, true},
                                        {false, false, true, true, true},
                                        {false, false, false, true, true},
                                        {false, false, false, false, true}};
  return make_custom_lattice(heyting_from_order(
      {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}, leq));
}

inline Lattice boolean() { return make_lukasiewicz_chain(2); }

}  // namespace testing
