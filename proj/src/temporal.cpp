#include "galois_kit/temporal.hpp"

#include <functional>

#include "galois_kit/error.hpp"

namespace galois_kit {

namespace {

using Pred1 = std::function<bool(const Values&)>;
using Pred2 = std::function<bool(const Values&, const Values&)>;
using PredScalar = std::function<bool(Element, const Values&)>;

std::optional<Witness> first_failure(const VectorSpace& V, const Pred1& p) {
  for (std::size_t a = 0; a < V.count(); ++a) {
    Values x = V.unrank(a);
    if (!p(x)) return Witness{std::nullopt, {std::move(x)}};
  }
  return std::nullopt;
}

std::optional<Witness> first_failure(const VectorSpace& V, const Pred2& p) {
  for (std::size_t a = 0; a < V.count(); ++a) {
    const Values x = V.unrank(a);
    for (std::size_t b = 0; b < V.count(); ++b) {
      Values y = V.unrank(b);
      if (!p(x, y)) return Witness{std::nullopt, {x, std::move(y)}};
    }
  }
  return std::nullopt;
}

std::optional<Witness> first_failure(const VectorSpace& V, const PredScalar& p) {
  for (Element d : V.lattice()->elements())
    for (std::size_t a = 0; a < V.count(); ++a) {
      Values x = V.unrank(a);
      if (!p(d, x)) return Witness{d, {std::move(x)}};
    }
  return std::nullopt;
}

void record(AxiomReport& r, const std::string& id, const std::optional<Witness>& w) {
  r.results[id] = !w.has_value();
  if (w) r.witnesses.emplace(id, *w);
}

// Both halves of a two-operator axiom; the first failing half supplies the witness.
template <class Pred>
std::optional<Witness> both(const VectorSpace& V, const Pred& for_G, const Pred& for_H) {
  if (auto w = first_failure(V, for_G)) return w;
  return first_failure(V, for_H);
}

bool is_mv(const LatticeSpec& A) { return classify_lattice(A).is_mv; }

bool is_boolean_algebra(const LatticeSpec& A) {
  if (!is_mv(A)) return false;
  for (Element x : A.elements())
    if (A.prod(x, x) != x) return false;
  return true;
}

Values oplus(const VectorSpace& V, const Values& a, const Values& b) {
  return V.neg(V.prod(V.neg(a), V.neg(b)));
}

// not A not B (x) <= x
bool conjugate_below(const VectorSpace& V, const OperatorTable& A, const OperatorTable& B,
                     const Values& x) {
  return V.leq(V.neg(A(V.neg(B(x)))), x);
}

}  // namespace

TimeFrame::TimeFrame(FuzzyRelation rel) : rel_(std::move(rel)) {
  if (!rel_.is_square()) throw PreconditionError("a time frame needs domain = codomain");
}

TenseStructure make_tense_structure(OperatorTable G, OperatorTable H) {
  if (!same_lattice(G.lattice(), H.lattice())) throw PreconditionError("lattice mismatch");
  if (!G.is_endo() || !H.is_endo() || !(G.in_index() == H.in_index()))
    throw PreconditionError("G and H must be endo maps on the same A^T");
  Lattice A = G.lattice();
  TenseStructure ts{A, std::move(G), std::move(H), std::nullopt, std::nullopt};
  if (is_mv(*A)) {
    ts.F = negation_conjugate(ts.G);
    ts.P = negation_conjugate(ts.H);
  }
  return ts;
}

TenseStructure tense_from_frame(const TimeFrame& frame, const Budget& budget) {
  return make_tense_structure(induced_operator(InducedKind::phi, frame.relation(), budget),
                              induced_operator(InducedKind::phi, transpose(frame.relation()),
                                               budget));
}

std::string_view to_string(AxiomSuite s) {
  switch (s) {
    case AxiomSuite::boolean_B: return "boolean_B";
    case AxiomSuite::mv_T: return "mv_T";
    case AxiomSuite::pavelka_PT: return "pavelka_PT";
    case AxiomSuite::monadic_new: return "monadic_new";
    case AxiomSuite::monadic_original: return "monadic_original";
  }
  return "pavelka_PT";
}

AxiomSuite parse_axiom_suite(std::string_view text) {
  for (AxiomSuite s : {AxiomSuite::boolean_B, AxiomSuite::mv_T, AxiomSuite::pavelka_PT,
                       AxiomSuite::monadic_new, AxiomSuite::monadic_original})
    if (text == to_string(s)) return s;
  throw PreconditionError("unknown suite '" + std::string(text) +
                          "' (expected boolean_B, mv_T, pavelka_PT, monadic_new or "
                          "monadic_original)");
}

bool AxiomReport::all_pass() const {
  for (const auto& [id, ok] : results)
    if (!ok) return false;
  return true;
}

AxiomReport check_axioms(const TenseStructure& ts, AxiomSuite suite) {
  const LatticeSpec& A = *ts.lattice;
  const OperatorTable& G = ts.G;
  const OperatorTable& H = ts.H;
  const VectorSpace& V = G.in_space();
  AxiomReport r;
  r.suite = suite;

  auto preserves_top = [&](const Values&) { return G(V.top()) == V.top() && H(V.top()) == V.top(); };
  auto meets = [&](const OperatorTable& O) {
    return Pred2([&](const Values& x, const Values& y) {
      return O(V.meet(x, y)) == V.meet(O(x), O(y));
    });
  };
  auto b3 = [&](const Values& x) {
    return conjugate_below(V, G, H, x) && conjugate_below(V, H, G, x);
  };

  switch (suite) {
    case AxiomSuite::boolean_B: {
      if (!is_boolean_algebra(A))
        throw PreconditionError("lattice/suite mismatch: boolean_B requires a Boolean algebra");
      record(r, "B1", preserves_top(V.top()) ? std::nullopt
                                             : std::optional<Witness>(Witness{{}, {V.top()}}));
      record(r, "B2", both(V, meets(G), meets(H)));
      record(r, "B3", first_failure(V, Pred1(b3)));
      break;
    }
    case AxiomSuite::mv_T: {
      if (!is_mv(A)) throw PreconditionError("lattice/suite mismatch: mv_T requires an MV lattice");
      auto sub_prod = [&](const OperatorTable& O) {
        return Pred2([&](const Values& x, const Values& y) {
          return V.leq(V.prod(O(x), O(y)), O(V.prod(x, y)));
        });
      };
      auto sub_oplus = [&](const OperatorTable& O) {
        return Pred2([&](const Values& x, const Values& y) {
          return V.leq(oplus(V, O(x), O(y)), O(oplus(V, x, y)));
        });
      };
      auto sq_prod = [&](const OperatorTable& O) {
        return Pred1([&](const Values& x) { return V.prod(O(x), O(x)) == O(V.prod(x, x)); });
      };
      auto sq_oplus = [&](const OperatorTable& O) {
        return Pred1([&](const Values& x) { return oplus(V, O(x), O(x)) == O(oplus(V, x, x)); });
      };
      record(r, "T1", preserves_top(V.top()) ? std::nullopt
                                             : std::optional<Witness>(Witness{{}, {V.top()}}));
      record(r, "T2", both(V, sub_prod(G), sub_prod(H)));
      record(r, "T3", both(V, sub_oplus(G), sub_oplus(H)));
      record(r, "T4", both(V, sq_prod(G), sq_prod(H)));
      record(r, "T5", both(V, sq_oplus(G), sq_oplus(H)));
      record(r, "T6", first_failure(V, Pred1(b3)));
      break;
    }
    case AxiomSuite::pavelka_PT: {
      if (!is_mv(A))
        throw PreconditionError("lattice/suite mismatch: pavelka_PT requires an MV lattice");
      auto constants = [&](const OperatorTable& O) {
        return PredScalar([&](Element d, const Values& x) {
          return V.shift(d, O(x)) == O(V.shift(d, x));
        });
      };
      record(r, "PT1", both(V, meets(G), meets(H)));
      record(r, "PT2", both(V, constants(G), constants(H)));
      record(r, "PT3", first_failure(V, Pred1(b3)));
      break;
    }
    case AxiomSuite::monadic_new:
    case AxiomSuite::monadic_original:
      throw PreconditionError("lattice/suite mismatch: monadic suites apply to monadic "
                              "structures (use check_monadic)");
  }
  return r;
}

FrameCorrespondence frame_correspondence(const TimeFrame& frame, const Budget& budget) {
  const TenseStructure ts = tense_from_frame(frame, budget);
  const RelationReport props = relation_properties(frame.relation());
  const OperatorTable& G = ts.G;
  const OperatorTable& H = ts.H;
  const VectorSpace& V = G.in_space();
  FrameCorrespondence c;

  c.reflexive.frame = props.reflexive;
  c.symmetric.frame = props.symmetric;
  c.transitive.frame = props.transitive;

  auto below_id = [&](const OperatorTable& O) {
    return Pred1([&](const Values& x) { return V.leq(O(x), x); });
  };
  auto below_square = [&](const OperatorTable& O) {
    return Pred1([&](const Values& x) { return V.leq(O(x), O(O(x))); });
  };
  auto note = [&](CorrespondenceRow& row, const std::string& id, std::optional<Witness> w) {
    row.operators = !w.has_value();
    if (w) c.witnesses.emplace(id, std::move(*w));
  };
  note(c.reflexive, "reflexive", both(V, below_id(G), below_id(H)));
  note(c.symmetric, "symmetric",
       first_failure(V, Pred1([&](const Values& x) { return G(x) == H(x); })));
  note(c.transitive, "transitive", both(V, below_square(G), below_square(H)));
  return c;
}

MonadicStructure make_monadic_structure(OperatorTable exists) {
  if (!exists.is_endo()) throw PreconditionError("a monadic operator must be an endo map");
  std::optional<OperatorTable> forall;
  if (is_mv(*exists.lattice())) forall = negation_conjugate(exists);
  return MonadicStructure{std::move(exists), std::move(forall)};
}

MonadicStructure monadic_from_equivalence(const TimeFrame& frame, const Budget& budget) {
  const RelationReport props = relation_properties(frame.relation());
  if (!props.fuzzy_equivalence) {
    std::string law = !props.reflexive ? "reflexive" : !props.symmetric ? "symmetric" : "transitive";
    std::string msg = "not an equivalence: relation is not " + law;
    if (auto it = props.witnesses.find(law); it != props.witnesses.end()) {
      msg += " (witness";
      for (const auto& n : it->second) msg += " " + n;
      msg += ")";
    }
    throw PreconditionError(msg);
  }
  return make_monadic_structure(induced_operator(InducedKind::rho, frame.relation(), budget));
}

AxiomReport check_monadic(const MonadicStructure& m, AxiomSuite suite) {
  const OperatorTable& E = m.exists;
  const LatticeSpec& A = *E.lattice();
  if (!is_mv(A)) throw PreconditionError("lattice mismatch: monadic suites require an MV lattice");
  const VectorSpace& V = E.in_space();
  AxiomReport r;
  r.suite = suite;

  auto e_not_e = Pred1([&](const Values& x) { return E(V.neg(E(x))) == V.neg(E(x)); });
  switch (suite) {
    case AxiomSuite::monadic_new: {
      const ClosureReport cl = closure_interior_check(E);
      std::optional<Witness> closure_w;
      if (!cl.is_closure) {
        for (const char* law : {"monotone", "extensive", "idempotent"})
          if (auto it = cl.witnesses.find(law); it != cl.witnesses.end()) {
            closure_w = it->second;
            break;
          }
      }
      record(r, "closure", closure_w);
      record(r, "exists_not_exists", first_failure(V, e_not_e));
      record(r, "constant_product", first_failure(V, PredScalar([&](Element d, const Values& x) {
                                                     return V.scale(d, E(x)) == E(V.scale(d, x));
                                                   })));
      break;
    }
    case AxiomSuite::monadic_original: {
      record(r, "E1", first_failure(V, Pred1([&](const Values& x) { return V.leq(x, E(x)); })));
      record(r, "E2", first_failure(V, Pred2([&](const Values& x, const Values& y) {
                                      return E(V.join(x, y)) == V.join(E(x), E(y));
                                    })));
      record(r, "E3", first_failure(V, e_not_e));
      record(r, "E4", first_failure(V, Pred2([&](const Values& x, const Values& y) {
                                      const Values s = oplus(V, E(x), E(y));
                                      return E(s) == s;
                                    })));
      record(r, "E5", first_failure(V, Pred1([&](const Values& x) {
                                      return E(oplus(V, x, x)) == oplus(V, E(x), E(x));
                                    })));
      record(r, "E6", first_failure(V, Pred1([&](const Values& x) {
                                      return E(V.prod(x, x)) == V.prod(E(x), E(x));
                                    })));
      r.informational["E6_as_printed"] = !first_failure(V, Pred1([&](const Values& x) {
                                            return E(V.prod(x, x)) == oplus(V, E(x), E(x));
                                          }));
      break;
    }
    default:
      throw PreconditionError("lattice/suite mismatch: check_monadic takes monadic_new or "
                              "monadic_original");
  }
  return r;
}

BridgeReport monadic_tense_bridge(const OperatorTable& exists) {
  if (!is_mv(*exists.lattice()))
    throw PreconditionError("lattice mismatch: the bridge requires an MV lattice");
  const MonadicStructure m = make_monadic_structure(exists);
  BridgeReport b;
  b.is_closure = closure_interior_check(exists).is_closure;
  b.monadic_new = check_monadic(m, AxiomSuite::monadic_new).all_pass();
  const TenseStructure ts = make_tense_structure(*m.forall, *m.forall);
  b.pavelka_pt = check_axioms(ts, AxiomSuite::pavelka_PT).all_pass();
  return b;
}

bool StrongAdjointReport::holds() const {
  for (const auto& [id, ok] : laws)
    if (!ok) return false;
  return true;
}

StrongAdjointReport strong_adjoint_check(const OperatorTable& f, const OperatorTable& g,
                                         bool reversed) {
  if (!verify_galois(f, g, reversed).passed())
    throw PreconditionError(std::string("not a Galois pair: the maps do not form a ") +
                            (reversed ? "reversed " : "") + "Galois connection");
  StrongAdjointReport r;
  r.reversed = reversed;
  auto check = [&](const std::string& id, const OperatorTable& O, bool impl_outside,
                   bool impl_inside) {
    const VectorSpace& in = O.in_space();
    const VectorSpace& out = O.out_space();
    auto w = first_failure(in, PredScalar([&](Element d, const Values& x) {
      const Values lhs = impl_outside ? out.shift(d, O(x)) : out.scale(d, O(x));
      const Values rhs = O(impl_inside ? in.shift(d, x) : in.scale(d, x));
      return lhs == rhs;
    }));
    r.laws[id] = !w.has_value();
    if (w) r.witnesses.emplace(id, std::move(*w));
  };
  if (reversed) {
    check("d", f, true, false);
    check("h", g, true, false);
    r.equivalent = r.laws["d"] == r.laws["h"];
  } else {
    check("f", f, true, true);
    check("g", g, false, false);
    r.equivalent = r.laws["f"] == r.laws["g"];
  }
  return r;
}

}  // namespace galois_kit
