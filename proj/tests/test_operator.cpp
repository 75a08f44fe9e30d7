#include <doctest.h>

#include <set>

#include "galois_kit/error.hpp"
#include "helpers.hpp"

using namespace galois_kit;
using namespace testing;

namespace {

// Real-valued Łukasiewicz connectives, evaluated on labels.
Rational lprod(Rational a, Rational b) {
  const Rational s = a + b - Rational(1);
  return s < Rational(0) ? Rational(0) : s;
}
Rational limpl(Rational a, Rational b) {
  const Rational s = Rational(1) - a + b;
  return Rational(1) < s ? Rational(1) : s;
}

std::vector<Rational> oracle(InducedKind kind, const FuzzyRelation& R, const Values& x) {
  const LatticeSpec& A = *R.lattice();
  const std::size_t ni = R.domain().size(), nj = R.codomain().size();
  auto L = [&](Element e) { return A.label(e); };
  std::vector<Rational> out;
  if (kind == InducedKind::phi || kind == InducedKind::delta) {
    for (std::size_t j = 0; j < nj; ++j) {
      Rational acc(1);
      for (std::size_t i = 0; i < ni; ++i) {
        const Rational v = kind == InducedKind::phi ? limpl(L(R.at(i, j)), L(x[i]))
                                                    : limpl(L(x[i]), L(R.at(i, j)));
        if (v < acc) acc = v;
      }
      out.push_back(acc);
    }
  } else {
    for (std::size_t i = 0; i < ni; ++i) {
      Rational acc(kind == InducedKind::rho ? 0 : 1);
      for (std::size_t j = 0; j < nj; ++j) {
        if (kind == InducedKind::rho) {
          const Rational v = lprod(L(R.at(i, j)), L(x[j]));
          if (acc < v) acc = v;
        } else {
          const Rational v = limpl(L(x[j]), L(R.at(i, j)));
          if (v < acc) acc = v;
        }
      }
      out.push_back(acc);
    }
  }
  return out;
}

std::vector<Rational> labels_of(const Values& v, const LatticeSpec& A) {
  std::vector<Rational> out;
  for (Element e : v) out.push_back(A.label(e));
  return out;
}

// Every function A^in -> A^out as a table.
std::vector<OperatorTable> all_functions(const Lattice& A, std::size_t in, std::size_t out,
                                        const char* out_prefix = "j") {
  const VectorSpace src(A, in), dst(A, out);
  const IndexSet I = IndexSet::numbered("i", in), J = IndexSet::numbered(out_prefix, out);
  std::vector<OperatorTable> fns;
  std::vector<std::size_t> choice(src.count(), 0);
  while (true) {
    std::vector<Values> rows;
    for (std::size_t c : choice) rows.push_back(dst.unrank(c));
    fns.emplace_back(A, I, J, rows);
    std::size_t k = choice.size();
    while (k > 0 && ++choice[k - 1] == dst.count()) choice[--k] = 0;
    if (k == 0) break;
  }
  return fns;
}

OperatorTable endo(const Lattice& A, const std::vector<std::vector<std::string>>& rows) {
  std::vector<Values> vs;
  for (const auto& r : rows) vs.push_back(vals(A, r));
  const IndexSet I = IndexSet::numbered("i", rows.front().size());
  return OperatorTable(A, I, I, vs);
}

// Compares a table with a composite evaluated one vector at a time; the intermediate space can
// be far larger than the table itself.
template <class Fn>
bool pointwise(const OperatorTable& op, const Fn& fn) {
  for (std::size_t r = 0; r < op.rows().size(); ++r)
    if (fn(op.in_space().unrank(r)) != op.rows()[r]) return false;
  return true;
}

const InducedKind kAllKinds[] = {InducedKind::phi, InducedKind::rho, InducedKind::delta,
                                 InducedKind::epsilon};

}  // namespace

TEST_CASE("induced operators match the real-valued formulas") {
  const Lattice A = make_lukasiewicz_chain(3);
  for (const FuzzyRelation& R : all_relations(A, 2, 2))
    for (InducedKind k : kAllKinds) {
      const VectorSpace V(A, 2);
      for (std::size_t r = 0; r < V.count(); ++r) {
        const Values x = V.unrank(r);
        CHECK(labels_of(evaluate_induced(k, R, x), *A) == oracle(k, R, x));
      }
    }
  // non-square shape exercises the index orientation
  const Lattice L5 = make_lukasiewicz_chain(5);
  const FuzzyRelation R = grid(L5, {{"1/4", "1", "0"}, {"3/4", "1/2", "1/4"}});
  const Values x2 = vals(L5, {"1/2", "3/4"});
  const Values x3 = vals(L5, {"1/4", "0", "1"});
  CHECK(labels_of(evaluate_induced(InducedKind::phi, R, x2), *L5) ==
        oracle(InducedKind::phi, R, x2));
  CHECK(labels_of(evaluate_induced(InducedKind::delta, R, x2), *L5) ==
        oracle(InducedKind::delta, R, x2));
  CHECK(labels_of(evaluate_induced(InducedKind::rho, R, x3), *L5) ==
        oracle(InducedKind::rho, R, x3));
  CHECK(labels_of(evaluate_induced(InducedKind::epsilon, R, x3), *L5) ==
        oracle(InducedKind::epsilon, R, x3));
}

TEST_CASE("induced operator examples") {
  const Lattice A = make_lukasiewicz_chain(3);
  const FuzzyRelation zero = grid(A, {{"0", "0"}, {"0", "0"}});
  const VectorSpace V(A, 2);
  for (std::size_t r = 0; r < V.count(); ++r) {
    CHECK(evaluate_induced(InducedKind::phi, zero, V.unrank(r)) == V.top());
  }

  const Lattice B = boolean();
  const FuzzyRelation col = grid(B, {{"1"}, {"0"}});
  const FuzzyVector x(B, col.domain(), vals(B, {"0", "1"}));
  CHECK(apply_induced(InducedKind::phi, col, x).values() == vals(B, {"0"}));

  const FuzzyRelation half = grid(A, {{"1/2"}});
  const FuzzyVector y(A, half.codomain(), vals(A, {"1/2"}));
  CHECK(apply_induced(InducedKind::rho, half, y).values() == vals(A, {"0"}));
}

TEST_CASE("induced operators check index sets and lattices") {
  const Lattice A = make_lukasiewicz_chain(3);
  const FuzzyRelation R = grid(A, {{"1", "0"}});
  const FuzzyVector over_j(A, R.codomain(), vals(A, {"0", "1"}));
  CHECK_THROWS_AS(apply_induced(InducedKind::phi, R, over_j), PreconditionError);
  CHECK_NOTHROW(apply_induced(InducedKind::rho, R, over_j));
  const FuzzyVector other(make_goedel_chain(3), R.domain(), vals(make_goedel_chain(3), {"0"}));
  CHECK_THROWS_AS(apply_induced(InducedKind::phi, R, other), PreconditionError);
}

TEST_CASE("boundary values of induced operators") {
  for (const Lattice& A : {make_lukasiewicz_chain(3), make_goedel_chain(3)})
    for (const FuzzyRelation& R : all_relations(A, 2, 2)) {
      const VectorSpace I(A, 2), J(A, 2);
      CHECK(evaluate_induced(InducedKind::phi, R, I.top()) == J.top());
      CHECK(evaluate_induced(InducedKind::rho, R, J.bottom()) == I.bottom());
      CHECK(evaluate_induced(InducedKind::delta, R, I.bottom()) == J.top());
      CHECK(evaluate_induced(InducedKind::epsilon, R, J.bottom()) == I.top());
    }
}

TEST_CASE("tables enumerate in canonical order and respect the budget") {
  const Lattice A = make_lukasiewicz_chain(3);
  const VectorSpace V(A, 2);
  CHECK(V.unrank(0) == vals(A, {"0", "0"}));
  CHECK(V.unrank(1) == vals(A, {"0", "1/2"}));
  CHECK(V.unrank(3) == vals(A, {"1/2", "0"}));
  for (std::size_t r = 0; r < V.count(); ++r) CHECK(V.rank(V.unrank(r)) == r);
  const FuzzyRelation R = grid(A, {{"1", "1", "1", "1", "1", "1", "1", "1", "1"}}, "i", "j");
  CHECK_THROWS_AS(induced_operator(InducedKind::delta, transpose(R)), BudgetExceeded);
  CHECK_NOTHROW(induced_operator(InducedKind::phi, transpose(R), Budget{20000}));
  CHECK_THROWS_AS(OperatorTable(A, IndexSet::numbered("i", 1), IndexSet::numbered("i", 1),
                                {vals(A, {"0"})}),
                  PreconditionError);
}

TEST_CASE("induced pairs form Galois connections") {
  std::vector<Lattice> lattices = {make_lukasiewicz_chain(3), make_lukasiewicz_chain(4),
                                   make_goedel_chain(4), boolean_square()};
  for (const Lattice& A : lattices)
    for (const FuzzyRelation& R : all_relations(A, 2, 2)) {
      const GaloisReport cov = verify_galois(induced_operator(InducedKind::phi, R),
                                             induced_operator(InducedKind::rho, R), false);
      CHECK(cov.passed());
      CHECK(cov.unit_counit);
      CHECK(cov.order_condition);
      const GaloisReport rev = verify_galois(induced_operator(InducedKind::delta, R),
                                             induced_operator(InducedKind::epsilon, R), true);
      CHECK(rev.passed());
      CHECK(rev.unit_counit);
    }
  // a non-chain, non-prelinear carrier on a non-square shape
  const Lattice H = heyting_diamond();
  for (const FuzzyRelation& R : all_relations(H, 1, 2)) {
    CHECK(verify_galois(induced_operator(InducedKind::phi, R),
                        induced_operator(InducedKind::rho, R), false)
              .passed());
    CHECK(verify_galois(induced_operator(InducedKind::delta, R),
                        induced_operator(InducedKind::epsilon, R), true)
              .passed());
  }
}

TEST_CASE("identity is its own adjoint") {
  const Lattice A = make_lukasiewicz_chain(3);
  const OperatorTable id = identity_operator(A, IndexSet::numbered("i", 2));
  CHECK(verify_galois(id, id, false).passed());
  CHECK_FALSE(verify_galois(id, id, true).biconditional);
}

TEST_CASE("mismatched pairs are rejected with a witness") {
  const Lattice A = make_lukasiewicz_chain(3);
  const FuzzyRelation R = grid(A, {{"1", "0"}, {"1/2", "1"}});
  const FuzzyRelation S = grid(A, {{"1", "1"}, {"1/2", "1"}});
  const GaloisReport r = verify_galois(induced_operator(InducedKind::phi, R),
                                       induced_operator(InducedKind::rho, S), false);
  CHECK_FALSE(r.passed());
  REQUIRE(r.biconditional_witness.has_value());
  CHECK(r.biconditional_witness->vectors.size() == 2);
  CHECK(r.characterisations_agree);
  const OperatorTable wide = induced_operator(InducedKind::phi, grid(A, {{"1", "0"}}));
  CHECK_THROWS_AS(verify_galois(wide, wide, false), PreconditionError);
}

TEST_CASE("the two characterisations of a Galois connection agree on every pair") {
  const Lattice A = make_lukasiewicz_chain(3);
  const auto fns = all_functions(A, 1, 1, "i");
  REQUIRE(fns.size() == 27);
  std::size_t connections = 0;
  for (const auto& f : fns)
    for (const auto& g : fns) {
      const GaloisReport cov = verify_galois(f, g, false);
      const GaloisReport rev = verify_galois(f, g, true);
      CHECK(cov.characterisations_agree);
      CHECK(rev.characterisations_agree);
      connections += cov.passed();
    }
  // Each infima-preserving f has exactly one partner.
  std::size_t meet_preserving = 0;
  for (const auto& f : fns) meet_preserving += classify_mapping(f).infima_preserving;
  CHECK(connections == meet_preserving);
}

TEST_CASE("induced operators have their mapping types") {
  const Lattice A = make_lukasiewicz_chain(3);
  for (const FuzzyRelation& R : all_relations(A, 2, 2)) {
    CHECK(classify_mapping(induced_operator(InducedKind::phi, R)).is_phi_type);
    CHECK(classify_mapping(induced_operator(InducedKind::rho, R)).is_rho_type);
    const MappingTypeReport d = classify_mapping(induced_operator(InducedKind::delta, R));
    CHECK(d.is_delta_type);
    CHECK(d.antitone);
  }
}

TEST_CASE("the constant top map is phi-type") {
  const Lattice A = make_lukasiewicz_chain(3);
  const OperatorTable one = endo(A, {{"1"}, {"1"}, {"1"}});
  const MappingTypeReport r = classify_mapping(one);
  CHECK(r.type_class == MappingType::phi_type);
  CHECK(r.is_delta_type);
  CHECK(one.same_function(induced_operator(InducedKind::phi, grid(A, {{"0"}}, "i", "i"))));
}

TEST_CASE("joining a constant on a three-element chain is not phi-type") {
  const Lattice A = make_lukasiewicz_chain(3);
  const OperatorTable op = endo(A, {{"1/2"}, {"1/2"}, {"1"}});
  const MappingTypeReport r = classify_mapping(op);
  // monotone on a chain, so meets and the top are preserved; the diagonal law fails
  CHECK(r.infima_preserving);
  CHECK_FALSE(r.diag_impl_law);
  CHECK_FALSE(r.is_phi_type);
  CHECK(describe(r.witnesses.at("diag_impl_law"), *A) == "d=1/2 (0)");
}

TEST_CASE("joining a constant on a Boolean algebra is induced by a crisp relation") {
  const Lattice B = boolean();
  const VectorSpace V(B, 2);
  const Values c = vals(B, {"1", "0"});
  const OperatorTable op = OperatorTable::tabulate(
      B, IndexSet::numbered("i", 2), IndexSet::numbered("i", 2),
      [&](const Values& x) { return V.join(x, c); });
  CHECK(classify_mapping(op).is_phi_type);
  const FuzzyRelation R = recover_relation(op, RecoveryKind::from_phi);
  CHECK(induced_operator(InducedKind::phi, R).same_function(op));
}

TEST_CASE("a map that is not meet-preserving has no adjoint") {
  const Lattice B = boolean();
  // (0,0) -> (0,0), everything else -> (1,1)
  const OperatorTable op = endo(B, {{"0", "0"}, {"1", "1"}, {"1", "1"}, {"1", "1"}});
  const MappingTypeReport r = classify_mapping(op);
  CHECK_FALSE(r.infima_preserving);
  CHECK(r.monotone);
  CHECK(r.witnesses.at("infima_preserving").vectors ==
        std::vector<Values>{vals(B, {"0", "1"}), vals(B, {"1", "0"})});
  CHECK_THROWS_AS(compute_adjoint(op, AdjointDirection::left_of_monotone), PreconditionError);
  try {
    compute_adjoint(op, AdjointDirection::left_of_monotone);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("not adjointable") != std::string::npos);
  }
}

TEST_CASE("adjoints of induced operators are the induced partners") {
  const Lattice A = make_lukasiewicz_chain(3);
  for (const FuzzyRelation& R : all_relations(A, 2, 2)) {
    const OperatorTable phi = induced_operator(InducedKind::phi, R);
    const OperatorTable rho = induced_operator(InducedKind::rho, R);
    const OperatorTable delta = induced_operator(InducedKind::delta, R);
    const OperatorTable eps = induced_operator(InducedKind::epsilon, R);
    CHECK(compute_adjoint(phi, AdjointDirection::left_of_monotone).same_function(rho));
    CHECK(compute_adjoint(rho, AdjointDirection::right_of_monotone).same_function(phi));
    CHECK(compute_adjoint(delta, AdjointDirection::reversed_partner).same_function(eps));
    CHECK(compute_adjoint(eps, AdjointDirection::reversed_partner).same_function(delta));
  }
  const OperatorTable id = identity_operator(A, IndexSet::numbered("i", 2));
  CHECK(compute_adjoint(id, AdjointDirection::left_of_monotone).same_function(id));
  CHECK(compute_adjoint(id, AdjointDirection::right_of_monotone).same_function(id));
  CHECK_THROWS_AS(compute_adjoint(id, AdjointDirection::reversed_partner), PreconditionError);
}

TEST_CASE("recovery returns the inducing relation") {
  for (const Lattice& A : {make_lukasiewicz_chain(3), boolean()}) {
    std::size_t count = 0;
    for (const FuzzyRelation& R : all_relations(A, 2, 2)) {
      CHECK(recover_relation(induced_operator(InducedKind::phi, R), RecoveryKind::from_phi) == R);
      CHECK(recover_relation(induced_operator(InducedKind::delta, R), RecoveryKind::from_delta) ==
            R);
      CHECK(recover_relation(induced_operator(InducedKind::rho, R), RecoveryKind::from_rho) == R);
      ++count;
    }
    CHECK(count == (A->size() == 3 ? 81u : 16u));
  }
  const Lattice A = make_lukasiewicz_chain(3);
  const FuzzyRelation wide = grid(A, {{"1/2", "0", "1"}});
  CHECK(recover_relation(induced_operator(InducedKind::phi, wide), RecoveryKind::from_phi) == wide);
  CHECK(recover_relation(induced_operator(InducedKind::rho, wide), RecoveryKind::from_rho) == wide);
}

TEST_CASE("the constant top map is induced by the zero relation") {
  const Lattice A = make_lukasiewicz_chain(3);
  const OperatorTable one = endo(A, {{"1"}, {"1"}, {"1"}});
  const FuzzyRelation R = recover_relation(one, RecoveryKind::from_phi);
  CHECK(R.at(0, 0) == A->bottom());
}

TEST_CASE("recovery refuses the wrong type and oversized inputs") {
  const Lattice A = make_lukasiewicz_chain(3);
  const FuzzyRelation R = grid(A, {{"1/2", "1"}, {"0", "1"}});
  CHECK_THROWS_AS(recover_relation(induced_operator(InducedKind::delta, R), RecoveryKind::from_phi),
                  PreconditionError);
  CHECK_THROWS_AS(recover_relation(induced_operator(InducedKind::phi, R), RecoveryKind::from_delta),
                  PreconditionError);
  CHECK_THROWS_AS(recover_relation(induced_operator(InducedKind::phi, R), RecoveryKind::from_phi,
                                   Budget{4}),
                  BudgetExceeded);
}

TEST_CASE("phi-type maps are exactly the induced ones") {
  const Lattice B = boolean();
  for (std::size_t n : {1u, 2u}) {
    std::vector<OperatorTable> phis, deltas, rhos;
    for (const FuzzyRelation& R : all_relations(B, n, n)) {
      phis.push_back(induced_operator(InducedKind::phi, R));
      deltas.push_back(induced_operator(InducedKind::delta, R));
      rhos.push_back(induced_operator(InducedKind::rho, transpose(R)));
    }
    auto member = [](const std::vector<OperatorTable>& set, const OperatorTable& op) {
      for (const auto& s : set)
        if (s.rows() == op.rows()) return true;
      return false;
    };
    std::size_t phi_count = 0;
    for (const OperatorTable& op : all_functions(B, n, n)) {
      const MappingTypeReport r = classify_mapping(op);
      CHECK(r.is_phi_type == member(phis, op));
      CHECK(r.is_delta_type == member(deltas, op));
      CHECK(r.is_rho_type == member(rhos, op));
      phi_count += r.is_phi_type;
    }
    CHECK(phi_count == (n == 1 ? 2u : 16u));
  }
}

TEST_CASE("an operator determines its inducing relation") {
  const Lattice A = make_lukasiewicz_chain(3);
  const auto rels = all_relations(A, 1, 2);
  std::set<std::vector<Values>> phi_tables, delta_tables;
  for (const FuzzyRelation& R : rels) {
    phi_tables.insert(induced_operator(InducedKind::phi, R).rows());
    delta_tables.insert(induced_operator(InducedKind::delta, R).rows());
  }
  CHECK(phi_tables.size() == rels.size());
  CHECK(delta_tables.size() == rels.size());
}

TEST_CASE("composites of induced pairs are closure and interior operators") {
  const Lattice A = make_lukasiewicz_chain(3);
  for (const FuzzyRelation& R : all_relations(A, 2, 2)) {
    const OperatorTable phi = induced_operator(InducedKind::phi, R);
    const OperatorTable rho = induced_operator(InducedKind::rho, R);
    const ClosureReport interior = closure_interior_check(compose(rho, phi));
    CHECK(interior.has_scalar_law_interior);
    const ClosureReport closure = closure_interior_check(compose(phi, rho));
    CHECK(closure.is_closure);
    const OperatorTable ed = compose(induced_operator(InducedKind::epsilon, R),
                                     induced_operator(InducedKind::delta, R));
    CHECK(closure_interior_check(ed).has_scalar_law_closure);
  }
  const ClosureReport id = closure_interior_check(identity_operator(A, IndexSet::numbered("i", 2)));
  CHECK(id.is_closure);
  CHECK(id.is_interior);
  CHECK_THROWS_AS(closure_interior_check(induced_operator(InducedKind::phi, grid(A, {{"1", "0"}}))),
                  PreconditionError);
}

TEST_CASE("fixpoints of composites are the images of the outer operator") {
  const Lattice A = make_lukasiewicz_chain(3);
  for (const FuzzyRelation& R : all_relations(A, 2, 2)) {
    const OperatorTable phi = induced_operator(InducedKind::phi, R);
    const OperatorTable rho = induced_operator(InducedKind::rho, R);
    const OperatorTable delta = induced_operator(InducedKind::delta, R);
    const OperatorTable eps = induced_operator(InducedKind::epsilon, R);
    auto image = [](const OperatorTable& op) {
      return std::set<std::vector<Element>>(op.rows().begin(), op.rows().end());
    };
    auto fixpoints = [](const OperatorTable& op) {
      std::set<std::vector<Element>> out;
      for (std::size_t r = 0; r < op.rows().size(); ++r) {
        const Values x = op.in_space().unrank(r);
        if (op(x) == x) out.insert(x);
      }
      return out;
    };
    CHECK(image(rho) == fixpoints(compose(rho, phi)));
    CHECK(image(eps) == fixpoints(compose(eps, delta)));
  }
}

TEST_CASE("decomposition reproduces closure and interior operators") {
  const Lattice A = make_lukasiewicz_chain(3);
  const OperatorTable id = identity_operator(A, IndexSet::numbered("i", 2));
  const Decomposition d = decompose_operator(id, DecompositionMode::interior);
  CHECK(d.fixpoints.size() == 9);
  CHECK(d.fixpoints.name(0) == "(0,0)");
  CHECK(decompose_operator(id, DecompositionMode::closure).fixpoints.size() == 9);

  for (const FuzzyRelation& R : all_relations(A, 2, 2)) {
    const OperatorTable ed = compose(induced_operator(InducedKind::epsilon, R),
                                     induced_operator(InducedKind::delta, R));
    const Decomposition c = decompose_operator(ed, DecompositionMode::closure);
    CHECK(pointwise(ed, [&](const Values& x) {
      return evaluate_induced(InducedKind::epsilon, c.relation,
                              evaluate_induced(InducedKind::delta, c.relation, x));
    }));
    const OperatorTable rp = compose(induced_operator(InducedKind::rho, R),
                                     induced_operator(InducedKind::phi, R));
    const Decomposition i = decompose_operator(rp, DecompositionMode::interior);
    CHECK(pointwise(rp, [&](const Values& x) {
      return evaluate_induced(InducedKind::rho, i.relation,
                              evaluate_induced(InducedKind::phi, i.relation, x));
    }));
  }
}

TEST_CASE("joining a constant vector is always decomposable") {
  const Lattice A = make_lukasiewicz_chain(3);
  const VectorSpace V(A, 2);
  const Values c = vals(A, {"1/2", "0"});
  const OperatorTable op = OperatorTable::tabulate(
      A, IndexSet::numbered("i", 2), IndexSet::numbered("i", 2),
      [&](const Values& x) { return V.join(x, c); });
  CHECK(closure_interior_check(op).has_scalar_law_closure);
  CHECK(decompose_operator(op, DecompositionMode::closure).fixpoints.size() == 6);
}

TEST_CASE("closure and interior operators without the scalar law are not decomposable") {
  const Lattice A = make_lukasiewicz_chain(3);
  const OperatorTable closure = endo(A, {{"0"}, {"1"}, {"1"}});
  const ClosureReport c = closure_interior_check(closure);
  CHECK(c.is_closure);
  CHECK_FALSE(c.scalar_law);
  CHECK(describe(c.witnesses.at("scalar_law"), *A) == "d=1/2 (1/2)");
  CHECK_THROWS_WITH_AS(decompose_operator(closure, DecompositionMode::closure),
                       doctest::Contains("d=1/2 (1/2)"), PreconditionError);

  const OperatorTable interior = endo(A, {{"0"}, {"0"}, {"1"}});
  const ClosureReport i = closure_interior_check(interior);
  CHECK(i.is_interior);
  CHECK(describe(i.witnesses.at("scalar_law"), *A) == "d=1/2 (1)");
  CHECK_THROWS_AS(decompose_operator(interior, DecompositionMode::interior), PreconditionError);
  CHECK_THROWS_AS(decompose_operator(interior, DecompositionMode::closure), PreconditionError);
}

TEST_CASE("negation conjugates swap to the inverse relation") {
  for (const Lattice& A : {boolean(), make_lukasiewicz_chain(3)}) {
    for (const FuzzyRelation& R : all_relations(A, 2, 2)) CHECK(conjugate_check(R).passed());
    CHECK(conjugate_check(grid(A, {{"1", "0"}})).passed());
  }
  CHECK(conjugate_check(grid(boolean_square(), {{"1/3", "2/3"}})).passed());
  CHECK_THROWS_AS(conjugate_check(grid(make_goedel_chain(3), {{"1"}})), PreconditionError);
}

TEST_CASE("submultiplicativity characterises boolean relations") {
  const Lattice A = make_lukasiewicz_chain(3);
  const BooleanCriterionReport half = boolean_criterion_check(grid(A, {{"1/2"}}));
  CHECK_FALSE(half.submultiplicative);
  CHECK_FALSE(half.boolean_valued);
  CHECK(half.equivalent);
  REQUIRE(half.witness.has_value());
  CHECK(half.witness->vectors == std::vector<Values>{vals(A, {"1/2"}), vals(A, {"1/2"})});

  for (std::size_t rows : {1u, 2u})
    for (const FuzzyRelation& R : all_relations(A, rows, 1)) {
      const BooleanCriterionReport r = boolean_criterion_check(R);
      CHECK(r.equivalent);
    }
  CHECK(boolean_criterion_check(grid(A, {{"1", "0"}, {"0", "1"}})).submultiplicative);
  CHECK_THROWS_AS(boolean_criterion_check(grid(make_goedel_chain(3), {{"1"}})), PreconditionError);
}

TEST_CASE("composition and conjugation of tables") {
  const Lattice A = make_lukasiewicz_chain(3);
  const FuzzyRelation R = grid(A, {{"1/2", "1"}, {"0", "1/2"}});
  const OperatorTable phi = induced_operator(InducedKind::phi, R);
  const OperatorTable id = identity_operator(A, R.codomain());
  CHECK(compose(id, phi).same_function(phi));
  CHECK(negation_conjugate(negation_conjugate(phi)).same_function(phi));
  CHECK_THROWS_AS(compose(phi, phi), PreconditionError);
  CHECK_THROWS_AS(negation_conjugate(identity_operator(make_goedel_chain(3), R.domain())),
                  PreconditionError);
}

TEST_CASE("enum names round trip") {
  for (InducedKind k : kAllKinds) CHECK(parse_induced_kind(to_string(k)) == k);
  for (auto d : {AdjointDirection::left_of_monotone, AdjointDirection::right_of_monotone,
                 AdjointDirection::reversed_partner})
    CHECK(parse_adjoint_direction(to_string(d)) == d);
  for (auto k : {RecoveryKind::from_phi, RecoveryKind::from_delta, RecoveryKind::from_rho})
    CHECK(parse_recovery_kind(to_string(k)) == k);
  CHECK(parse_provenance("explicit") == Provenance::explicit_table);
  CHECK_THROWS_AS(parse_induced_kind("sigma"), PreconditionError);
}
