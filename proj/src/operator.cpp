#include "galois_kit/operator.hpp"

#include <algorithm>
#include <set>

#include "galois_kit/error.hpp"

namespace galois_kit {

namespace {

template <class Map>
void note(Map& witnesses, const std::string& law, Witness w) {
  witnesses.emplace(law, std::move(w));
}

void require_same_lattice(const Lattice& a, const Lattice& b) {
  if (!same_lattice(a, b)) throw PreconditionError("lattice mismatch");
}

bool lattice_is_mv(const LatticeSpec& A) { return classify_lattice(A).is_mv; }

std::string witness_suffix(const Witness& w, const LatticeSpec& A) {
  return " (witness " + describe(w, A) + ")";
}

}  // namespace

std::string_view to_string(InducedKind kind) {
  switch (kind) {
    case InducedKind::phi: return "phi";
    case InducedKind::rho: return "rho";
    case InducedKind::delta: return "delta";
    case InducedKind::epsilon: return "epsilon";
  }
  return "phi";
}

InducedKind parse_induced_kind(std::string_view text) {
  if (text == "phi") return InducedKind::phi;
  if (text == "rho") return InducedKind::rho;
  if (text == "delta") return InducedKind::delta;
  if (text == "epsilon") return InducedKind::epsilon;
  throw PreconditionError("unknown operator kind '" + std::string(text) +
                          "' (expected phi, rho, delta or epsilon)");
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::induced_phi: return "induced_phi";
    case Provenance::induced_rho: return "induced_rho";
    case Provenance::induced_delta: return "induced_delta";
    case Provenance::induced_epsilon: return "induced_epsilon";
    case Provenance::explicit_table: return "explicit";
  }
  return "explicit";
}

Provenance parse_provenance(std::string_view text) {
  if (text == "induced_phi") return Provenance::induced_phi;
  if (text == "induced_rho") return Provenance::induced_rho;
  if (text == "induced_delta") return Provenance::induced_delta;
  if (text == "induced_epsilon") return Provenance::induced_epsilon;
  if (text == "explicit") return Provenance::explicit_table;
  throw PreconditionError("unknown provenance '" + std::string(text) + "'");
}

std::string_view to_string(MappingType t) {
  switch (t) {
    case MappingType::phi_type: return "phi_type";
    case MappingType::rho_type: return "rho_type";
    case MappingType::delta_type: return "delta_type";
    case MappingType::none: return "none";
  }
  return "none";
}

std::string_view to_string(AdjointDirection d) {
  switch (d) {
    case AdjointDirection::left_of_monotone: return "left_of_monotone";
    case AdjointDirection::right_of_monotone: return "right_of_monotone";
    case AdjointDirection::reversed_partner: return "reversed_partner";
  }
  return "left_of_monotone";
}

AdjointDirection parse_adjoint_direction(std::string_view text) {
  if (text == "left_of_monotone") return AdjointDirection::left_of_monotone;
  if (text == "right_of_monotone") return AdjointDirection::right_of_monotone;
  if (text == "reversed_partner") return AdjointDirection::reversed_partner;
  throw PreconditionError("unknown adjoint direction '" + std::string(text) + "'");
}

std::string_view to_string(RecoveryKind k) {
  switch (k) {
    case RecoveryKind::from_phi: return "from_phi";
    case RecoveryKind::from_delta: return "from_delta";
    case RecoveryKind::from_rho: return "from_rho";
  }
  return "from_phi";
}

RecoveryKind parse_recovery_kind(std::string_view text) {
  if (text == "from_phi") return RecoveryKind::from_phi;
  if (text == "from_delta") return RecoveryKind::from_delta;
  if (text == "from_rho") return RecoveryKind::from_rho;
  throw PreconditionError("unknown recovery kind '" + std::string(text) +
                          "' (expected from_phi, from_delta or from_rho)");
}

std::string_view to_string(DecompositionMode m) {
  return m == DecompositionMode::interior ? "interior" : "closure";
}

DecompositionMode parse_decomposition_mode(std::string_view text) {
  if (text == "interior") return DecompositionMode::interior;
  if (text == "closure") return DecompositionMode::closure;
  throw PreconditionError("unknown decomposition mode '" + std::string(text) + "'");
}

std::string describe(const Witness& w, const LatticeSpec& A) {
  std::string out;
  if (w.scalar) out = "d=" + A.label_str(*w.scalar);
  for (const auto& v : w.vectors) {
    if (!out.empty()) out += ' ';
    out += format_tuple(v, A);
  }
  return out;
}

// ---------------------------------------------------------------------------------------------
// OperatorTable

OperatorTable::OperatorTable(Lattice lattice, IndexSet in_index, IndexSet out_index,
                             std::vector<Values> rows, Provenance provenance,
                             std::optional<FuzzyRelation> source)
    : lattice_(std::move(lattice)),
      in_index_(std::move(in_index)),
      out_index_(std::move(out_index)),
      in_space_(lattice_, in_index_.size()),
      out_space_(lattice_, out_index_.size()),
      rows_(std::move(rows)),
      provenance_(provenance),
      source_(std::move(source)) {
  if (rows_.size() != in_space_.count())
    throw PreconditionError("operator table needs " + std::to_string(in_space_.count()) +
                            " rows, got " + std::to_string(rows_.size()));
  for (const auto& row : rows_) {
    if (row.size() != out_index_.size())
      throw PreconditionError("operator table row has the wrong width");
    for (Element e : row)
      if (e.idx >= lattice_->size())
        throw PreconditionError("operator table entry is not a carrier index");
  }
}

OperatorTable OperatorTable::tabulate(Lattice lattice, IndexSet in_index, IndexSet out_index,
                                      const std::function<Values(const Values&)>& fn,
                                      const Budget& budget) {
  VectorSpace in(lattice, in_index.size());
  in.require_within(budget, "operator table");
  std::vector<Values> rows;
  rows.reserve(in.count());
  for (std::size_t r = 0; r < in.count(); ++r) rows.push_back(fn(in.unrank(r)));
  return OperatorTable(std::move(lattice), std::move(in_index), std::move(out_index),
                       std::move(rows));
}

FuzzyVector OperatorTable::apply(const FuzzyVector& x) const {
  require_same_lattice(lattice_, x.lattice());
  if (!(x.index() == in_index_)) throw PreconditionError("index-set mismatch");
  return FuzzyVector(lattice_, out_index_, (*this)(x.values()));
}

bool OperatorTable::same_function(const OperatorTable& other) const {
  return in_index_ == other.in_index_ && out_index_ == other.out_index_ &&
         rows_ == other.rows_ && same_lattice(lattice_, other.lattice_);
}

OperatorTable compose(const OperatorTable& outer, const OperatorTable& inner) {
  require_same_lattice(outer.lattice(), inner.lattice());
  if (!(inner.out_index() == outer.in_index()))
    throw PreconditionError("composition index-set mismatch");
  std::vector<Values> rows;
  rows.reserve(inner.rows().size());
  for (const auto& mid : inner.rows()) rows.push_back(outer(mid));
  return OperatorTable(inner.lattice(), inner.in_index(), outer.out_index(), std::move(rows));
}

OperatorTable identity_operator(const Lattice& lattice, const IndexSet& index,
                                const Budget& budget) {
  return OperatorTable::tabulate(lattice, index, index, [](const Values& x) { return x; }, budget);
}

OperatorTable negation_conjugate(const OperatorTable& op) {
  if (!lattice_is_mv(*op.lattice()))
    throw PreconditionError("unsupported structure: negation conjugate requires an MV lattice");
  const VectorSpace& in = op.in_space();
  const VectorSpace& out = op.out_space();
  std::vector<Values> rows;
  rows.reserve(op.rows().size());
  for (std::size_t r = 0; r < op.rows().size(); ++r) rows.push_back(out.neg(op(in.neg(in.unrank(r)))));
  return OperatorTable(op.lattice(), op.in_index(), op.out_index(), std::move(rows));
}

// ---------------------------------------------------------------------------------------------
// Induced operators

Values evaluate_induced(InducedKind kind, const FuzzyRelation& R, const Values& x) {
  const LatticeSpec& A = *R.lattice();
  const std::size_t ni = R.domain().size(), nj = R.codomain().size();
  const bool from_domain = kind == InducedKind::phi || kind == InducedKind::delta;
  if (x.size() != (from_domain ? ni : nj))
    throw PreconditionError(std::string("index-set mismatch: ") + std::string(to_string(kind)) +
                            " expects a vector over the " +
                            (from_domain ? "domain" : "codomain"));
  switch (kind) {
    case InducedKind::phi: {
      Values out(nj, A.top());
      for (std::size_t j = 0; j < nj; ++j)
        for (std::size_t i = 0; i < ni; ++i) out[j] = A.meet(out[j], A.impl(R.at(i, j), x[i]));
      return out;
    }
    case InducedKind::rho: {
      Values out(ni, A.bottom());
      for (std::size_t i = 0; i < ni; ++i)
        for (std::size_t j = 0; j < nj; ++j) out[i] = A.join(out[i], A.prod(R.at(i, j), x[j]));
      return out;
    }
    case InducedKind::delta: {
      Values out(nj, A.top());
      for (std::size_t j = 0; j < nj; ++j)
        for (std::size_t i = 0; i < ni; ++i) out[j] = A.meet(out[j], A.impl(x[i], R.at(i, j)));
      return out;
    }
    case InducedKind::epsilon: {
      Values out(ni, A.top());
      for (std::size_t i = 0; i < ni; ++i)
        for (std::size_t j = 0; j < nj; ++j) out[i] = A.meet(out[i], A.impl(x[j], R.at(i, j)));
      return out;
    }
  }
  return {};
}

FuzzyVector apply_induced(InducedKind kind, const FuzzyRelation& R, const FuzzyVector& x) {
  require_same_lattice(R.lattice(), x.lattice());
  const bool from_domain = kind == InducedKind::phi || kind == InducedKind::delta;
  const IndexSet& source = from_domain ? R.domain() : R.codomain();
  const IndexSet& target = from_domain ? R.codomain() : R.domain();
  if (!(x.index() == source))
    throw PreconditionError("index-set mismatch: vector is not indexed by the operator's source");
  return FuzzyVector(R.lattice(), target, evaluate_induced(kind, R, x.values()));
}

OperatorTable induced_operator(InducedKind kind, const FuzzyRelation& R, const Budget& budget) {
  const bool from_domain = kind == InducedKind::phi || kind == InducedKind::delta;
  const IndexSet& source = from_domain ? R.domain() : R.codomain();
  const IndexSet& target = from_domain ? R.codomain() : R.domain();
  OperatorTable raw = OperatorTable::tabulate(
      R.lattice(), source, target, [&](const Values& x) { return evaluate_induced(kind, R, x); },
      budget);
  static constexpr Provenance provenance[] = {Provenance::induced_phi, Provenance::induced_rho,
                                              Provenance::induced_delta,
                                              Provenance::induced_epsilon};
  return OperatorTable(R.lattice(), source, target, raw.rows(),
                       provenance[static_cast<int>(kind)], R);
}

// ---------------------------------------------------------------------------------------------
// Galois connections

GaloisReport verify_galois(const OperatorTable& f, const OperatorTable& g, bool reversed) {
  require_same_lattice(f.lattice(), g.lattice());
  if (!(f.in_index() == g.out_index()) || !(f.out_index() == g.in_index()))
    throw PreconditionError("shape mismatch: need f: A^I -> A^J and g: A^J -> A^I");

  const VectorSpace& A_I = f.in_space();
  const VectorSpace& A_J = f.out_space();
  GaloisReport r;
  r.reversed = reversed;
  r.biconditional = true;
  r.order_condition = true;
  r.unit_counit = true;

  // y ranges over A^I, x over A^J.
  for (std::size_t yr = 0; yr < A_I.count() && r.biconditional; ++yr) {
    const Values y = A_I.unrank(yr);
    for (std::size_t xr = 0; xr < A_J.count(); ++xr) {
      const Values x = A_J.unrank(xr);
      const bool lhs = A_J.leq(x, f(y));
      const bool rhs = reversed ? A_I.leq(y, g(x)) : A_I.leq(g(x), y);
      if (lhs != rhs) {
        r.biconditional = false;
        r.biconditional_witness = Witness{std::nullopt, {y, x}};
        break;
      }
    }
  }

  auto order_ok = [&](const OperatorTable& op) {
    const VectorSpace& in = op.in_space();
    const VectorSpace& out = op.out_space();
    for (std::size_t a = 0; a < in.count(); ++a)
      for (std::size_t b = 0; b < in.count(); ++b) {
        const Values x = in.unrank(a), y = in.unrank(b);
        if (!in.leq(x, y)) continue;
        if (reversed ? !out.leq(op(y), op(x)) : !out.leq(op(x), op(y))) return false;
      }
    return true;
  };
  r.order_condition = order_ok(f) && order_ok(g);

  for (std::size_t yr = 0; yr < A_I.count() && r.unit_counit; ++yr) {
    const Values y = A_I.unrank(yr);
    const bool ok = reversed ? A_I.leq(y, g(f(y))) : A_I.leq(g(f(y)), y);
    if (!ok) {
      r.unit_counit = false;
      r.unit_counit_witness = Witness{std::nullopt, {y}};
    }
  }
  for (std::size_t xr = 0; xr < A_J.count() && r.unit_counit; ++xr) {
    const Values x = A_J.unrank(xr);
    if (!A_J.leq(x, f(g(x)))) {
      r.unit_counit = false;
      r.unit_counit_witness = Witness{std::nullopt, {x}};
    }
  }
  r.characterisations_agree = r.biconditional == (r.order_condition && r.unit_counit);
  return r;
}

// ---------------------------------------------------------------------------------------------
// Mapping types

MappingTypeReport classify_mapping(const OperatorTable& op) {
  const LatticeSpec& A = *op.lattice();
  const VectorSpace& in = op.in_space();
  const VectorSpace& out = op.out_space();
  MappingTypeReport r;
  auto& w = r.witnesses;

  bool mono = true, anti = true, inf = true, sup = true, rev = true;
  if (op(in.top()) != out.top()) {
    inf = false;
    note(w, "infima_preserving", Witness{std::nullopt, {in.top()}});
  }
  if (op(in.bottom()) != out.bottom()) {
    sup = false;
    note(w, "suprema_preserving", Witness{std::nullopt, {in.bottom()}});
  }
  if (op(in.bottom()) != out.top()) {
    rev = false;
    note(w, "suprema_reversing", Witness{std::nullopt, {in.bottom()}});
  }
  for (std::size_t a = 0; a < in.count(); ++a) {
    const Values x = in.unrank(a);
    const Values& fx = op(x);
    for (std::size_t b = 0; b < in.count(); ++b) {
      const Values y = in.unrank(b);
      const Values& fy = op(y);
      const Witness pair{std::nullopt, {x, y}};
      if (in.leq(x, y)) {
        if (mono && !out.leq(fx, fy)) {
          mono = false;
          note(w, "monotone", pair);
        }
        if (anti && !out.leq(fy, fx)) {
          anti = false;
          note(w, "antitone", pair);
        }
      }
      if (inf && op(in.meet(x, y)) != out.meet(fx, fy)) {
        inf = false;
        note(w, "infima_preserving", pair);
      }
      const Values& f_join = op(in.join(x, y));
      if (sup && f_join != out.join(fx, fy)) {
        sup = false;
        note(w, "suprema_preserving", pair);
      }
      if (rev && f_join != out.meet(fx, fy)) {
        rev = false;
        note(w, "suprema_reversing", pair);
      }
    }
  }

  bool d_impl = true, d_prod = true, d_mixed = true;
  for (Element d : A.elements()) {
    for (std::size_t a = 0; a < in.count(); ++a) {
      const Values x = in.unrank(a);
      const Values& fx = op(x);
      const Witness wit{d, {x}};
      if (d_impl && out.shift(d, fx) != op(in.shift(d, x))) {
        d_impl = false;
        note(w, "diag_impl_law", wit);
      }
      if (d_prod && out.scale(d, fx) != op(in.scale(d, x))) {
        d_prod = false;
        note(w, "diag_prod_law", wit);
      }
      if (d_mixed && out.shift(d, fx) != op(in.scale(d, x))) {
        d_mixed = false;
        note(w, "diag_mixed_law", wit);
      }
    }
  }

  r.monotone = mono;
  r.antitone = anti;
  r.infima_preserving = inf;
  r.suprema_preserving = sup;
  r.suprema_reversing = rev;
  r.diag_impl_law = d_impl;
  r.diag_prod_law = d_prod;
  r.diag_mixed_law = d_mixed;
  r.is_phi_type = inf && d_impl;
  r.is_rho_type = sup && d_prod;
  r.is_delta_type = rev && d_mixed;
  r.type_class = r.is_phi_type   ? MappingType::phi_type
                 : r.is_rho_type ? MappingType::rho_type
                 : r.is_delta_type ? MappingType::delta_type
                                   : MappingType::none;
  return r;
}

// ---------------------------------------------------------------------------------------------
// Adjoints

OperatorTable compute_adjoint(const OperatorTable& op, AdjointDirection direction,
                              const Budget& budget) {
  const LatticeSpec& A = *op.lattice();
  const MappingTypeReport cls = classify_mapping(op);
  auto refuse = [&](const char* law) {
    std::string msg = std::string("not adjointable: operator is not ") + law;
    if (auto it = cls.witnesses.find(law); it != cls.witnesses.end())
      msg += witness_suffix(it->second, A);
    throw PreconditionError(msg);
  };

  const VectorSpace& in = op.in_space();
  const VectorSpace& out = op.out_space();
  out.require_within(budget, "adjoint table");
  std::vector<Values> rows;
  rows.reserve(out.count());

  switch (direction) {
    case AdjointDirection::left_of_monotone: {
      if (!cls.monotone) refuse("monotone");
      if (!cls.infima_preserving) refuse("infima_preserving");
      for (std::size_t xr = 0; xr < out.count(); ++xr) {
        const Values x = out.unrank(xr);
        Values acc = in.top();
        for (std::size_t a = 0; a < in.count(); ++a) {
          const Values av = in.unrank(a);
          if (out.leq(x, op(av))) acc = in.meet(acc, av);
        }
        rows.push_back(std::move(acc));
      }
      break;
    }
    case AdjointDirection::right_of_monotone: {
      if (!cls.suprema_preserving) refuse("suprema_preserving");
      for (std::size_t xr = 0; xr < out.count(); ++xr) {
        const Values x = out.unrank(xr);
        Values acc = in.bottom();
        for (std::size_t b = 0; b < in.count(); ++b) {
          const Values bv = in.unrank(b);
          if (out.leq(op(bv), x)) acc = in.join(acc, bv);
        }
        rows.push_back(std::move(acc));
      }
      break;
    }
    case AdjointDirection::reversed_partner: {
      if (!cls.suprema_reversing) refuse("suprema_reversing");
      for (std::size_t xr = 0; xr < out.count(); ++xr) {
        const Values x = out.unrank(xr);
        Values acc = in.bottom();
        for (std::size_t a = 0; a < in.count(); ++a) {
          const Values av = in.unrank(a);
          if (out.leq(x, op(av))) acc = in.join(acc, av);
        }
        rows.push_back(std::move(acc));
      }
      break;
    }
  }

  OperatorTable partner(op.lattice(), op.out_index(), op.in_index(), std::move(rows));
  const GaloisReport check =
      direction == AdjointDirection::right_of_monotone
          ? verify_galois(partner, op, false)
          : verify_galois(op, partner, direction == AdjointDirection::reversed_partner);
  if (!check.passed()) throw LawViolation("constructed adjoint does not form a Galois connection");
  return partner;
}

// ---------------------------------------------------------------------------------------------
// Relation recovery

namespace {

FuzzyRelation recover_phi_or_delta(const OperatorTable& op, bool phi) {
  const LatticeSpec& A = *op.lattice();
  const VectorSpace& in = op.in_space();
  const std::size_t ni = op.in_index().size(), nj = op.out_index().size();
  std::vector<Element> values(ni * nj, phi ? A.top() : A.bottom());
  for (std::size_t r = 0; r < in.count(); ++r) {
    const Values a = in.unrank(r);
    const Values& fa = op(a);
    for (std::size_t i = 0; i < ni; ++i)
      for (std::size_t j = 0; j < nj; ++j) {
        Element& cell = values[i * nj + j];
        cell = phi ? A.meet(cell, A.impl(fa[j], a[i])) : A.join(cell, A.prod(fa[j], a[i]));
      }
  }
  return FuzzyRelation(op.lattice(), op.in_index(), op.out_index(), std::move(values));
}

}  // namespace

FuzzyRelation recover_relation(const OperatorTable& op, RecoveryKind kind, const Budget& budget) {
  op.in_space().require_within(budget, "relation recovery");
  const MappingTypeReport cls = classify_mapping(op);
  switch (kind) {
    case RecoveryKind::from_phi: {
      if (!cls.is_phi_type) throw PreconditionError("wrong type class: operator is not phi-type");
      FuzzyRelation R = recover_phi_or_delta(op, true);
      if (!induced_operator(InducedKind::phi, R, budget).same_function(op))
        throw LawViolation("recovered relation does not reproduce the operator");
      return R;
    }
    case RecoveryKind::from_delta: {
      if (!cls.is_delta_type)
        throw PreconditionError("wrong type class: operator is not delta-type");
      FuzzyRelation R = recover_phi_or_delta(op, false);
      if (!induced_operator(InducedKind::delta, R, budget).same_function(op))
        throw LawViolation("recovered relation does not reproduce the operator");
      return R;
    }
    case RecoveryKind::from_rho: {
      if (!cls.is_rho_type) throw PreconditionError("wrong type class: operator is not rho-type");
      // op: A^J -> A^I, so the relation lives on out_index x in_index.
      const std::size_t ni = op.out_index().size(), nj = op.in_index().size();
      std::vector<Element> values(ni * nj);
      for (std::size_t j = 0; j < nj; ++j) {
        const Values& column = op(op.in_space().unit(j));
        for (std::size_t i = 0; i < ni; ++i) values[i * nj + j] = column[i];
      }
      FuzzyRelation R(op.lattice(), op.out_index(), op.in_index(), std::move(values));
      const OperatorTable phi = compute_adjoint(op, AdjointDirection::right_of_monotone, budget);
      if (!(recover_phi_or_delta(phi, true) == R))
        throw LawViolation("unit-vector recovery disagrees with recovery from the adjoint");
      if (!induced_operator(InducedKind::rho, R, budget).same_function(op))
        throw LawViolation("recovered relation does not reproduce the operator");
      return R;
    }
  }
  throw PreconditionError("unknown recovery kind");
}

// ---------------------------------------------------------------------------------------------
// Closure and interior operators

ClosureReport closure_interior_check(const OperatorTable& op) {
  if (!op.is_endo()) throw PreconditionError("closure/interior check requires an endo map");
  const LatticeSpec& A = *op.lattice();
  const VectorSpace& V = op.in_space();
  ClosureReport r;
  auto& w = r.witnesses;
  bool mono = true, ext = true, con = true, idem = true, scalar = true;
  for (std::size_t a = 0; a < V.count(); ++a) {
    const Values x = V.unrank(a);
    const Values& fx = op(x);
    if (ext && !V.leq(x, fx)) {
      ext = false;
      note(w, "extensive", Witness{std::nullopt, {x}});
    }
    if (con && !V.leq(fx, x)) {
      con = false;
      note(w, "contractive", Witness{std::nullopt, {x}});
    }
    if (idem && op(fx) != fx) {
      idem = false;
      note(w, "idempotent", Witness{std::nullopt, {x}});
    }
    for (std::size_t b = 0; b < V.count() && mono; ++b) {
      const Values y = V.unrank(b);
      if (V.leq(x, y) && !V.leq(fx, op(y))) {
        mono = false;
        note(w, "monotone", Witness{std::nullopt, {x, y}});
      }
    }
  }
  for (Element d : A.elements())
    for (std::size_t a = 0; a < V.count() && scalar; ++a) {
      const Values x = V.unrank(a);
      if (!V.leq(V.scale(d, op(x)), op(V.scale(d, x)))) {
        scalar = false;
        note(w, "scalar_law", Witness{d, {x}});
      }
    }
  r.monotone = mono;
  r.extensive = ext;
  r.contractive = con;
  r.idempotent = idem;
  r.scalar_law = scalar;
  r.is_closure = mono && ext && idem;
  r.is_interior = mono && con && idem;
  r.has_scalar_law_closure = r.is_closure && scalar;
  r.has_scalar_law_interior = r.is_interior && scalar;
  return r;
}

Decomposition decompose_operator(const OperatorTable& op, DecompositionMode mode) {
  const LatticeSpec& A = *op.lattice();
  const ClosureReport check = closure_interior_check(op);
  const bool interior = mode == DecompositionMode::interior;
  if (interior ? !check.is_interior : !check.is_closure)
    throw PreconditionError(std::string("not decomposable: operator is not ") +
                            (interior ? "an interior" : "a closure") + " operator");
  if (!check.scalar_law)
    throw PreconditionError("not decomposable: scalar law d*O(x) <= O(d*x) fails" +
                            witness_suffix(check.witnesses.at("scalar_law"), A));

  const VectorSpace& V = op.in_space();
  std::set<std::size_t> image_ranks;
  for (const auto& row : op.rows()) image_ranks.insert(V.rank(row));
  std::vector<Values> images;
  std::vector<std::string> names;
  for (std::size_t r : image_ranks) {
    images.push_back(V.unrank(r));
    names.push_back(format_tuple(images.back(), A));
  }

  const std::size_t ni = op.in_index().size(), nj = images.size();
  std::vector<Element> values(ni * nj);
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t c = 0; c < nj; ++c) values[i * nj + c] = images[c][i];
  IndexSet J(std::move(names));
  FuzzyRelation R(op.lattice(), op.in_index(), J, std::move(values));

  for (std::size_t a = 0; a < V.count(); ++a) {
    const Values x = V.unrank(a);
    const Values rebuilt =
        interior ? evaluate_induced(InducedKind::rho, R, evaluate_induced(InducedKind::phi, R, x))
                 : evaluate_induced(InducedKind::epsilon, R,
                                    evaluate_induced(InducedKind::delta, R, x));
    if (rebuilt != op(x))
      throw LawViolation("decomposition does not reproduce the operator at " + format_tuple(x, A));
  }
  return Decomposition{std::move(R), std::move(J)};
}

// ---------------------------------------------------------------------------------------------
// Negation conjugates and the boolean criterion

ConjugateReport conjugate_check(const FuzzyRelation& R, const Budget& budget) {
  if (!lattice_is_mv(*R.lattice()))
    throw PreconditionError("unsupported structure: conjugation requires an MV lattice");
  const FuzzyRelation Rinv = transpose(R);
  ConjugateReport r;
  const OperatorTable lhs1 = negation_conjugate(induced_operator(InducedKind::phi, R, budget));
  const OperatorTable rhs1 = induced_operator(InducedKind::rho, Rinv, budget);
  const OperatorTable lhs2 = negation_conjugate(induced_operator(InducedKind::rho, R, budget));
  const OperatorTable rhs2 = induced_operator(InducedKind::phi, Rinv, budget);
  r.neg_phi_neg_is_rho_inverse = lhs1.same_function(rhs1);
  r.neg_rho_neg_is_phi_inverse = lhs2.same_function(rhs2);
  auto first_diff = [](const OperatorTable& a, const OperatorTable& b) {
    for (std::size_t k = 0; k < a.rows().size(); ++k)
      if (a.rows()[k] != b.rows()[k]) return Witness{std::nullopt, {a.in_space().unrank(k)}};
    return Witness{};
  };
  if (!r.neg_phi_neg_is_rho_inverse) r.witness = first_diff(lhs1, rhs1);
  else if (!r.neg_rho_neg_is_phi_inverse) r.witness = first_diff(lhs2, rhs2);
  return r;
}

BooleanCriterionReport boolean_criterion_check(const FuzzyRelation& R, const Budget& budget) {
  if (!lattice_is_mv(*R.lattice()))
    throw PreconditionError("unsupported structure: boolean criterion requires an MV lattice");
  const OperatorTable f = induced_operator(InducedKind::phi, R, budget);
  const VectorSpace& in = f.in_space();
  const VectorSpace& out = f.out_space();
  BooleanCriterionReport r;
  r.submultiplicative = true;
  for (std::size_t a = 0; a < in.count() && r.submultiplicative; ++a) {
    const Values x = in.unrank(a);
    for (std::size_t b = 0; b < in.count(); ++b) {
      const Values y = in.unrank(b);
      if (!out.leq(out.prod(f(x), f(y)), f(in.prod(x, y)))) {
        r.submultiplicative = false;
        r.witness = Witness{std::nullopt, {x, y}};
        break;
      }
    }
  }
  r.boolean_valued = relation_properties(R, false).boolean_valued;
  r.equivalent = r.submultiplicative == r.boolean_valued;
  return r;
}

}  // namespace galois_kit
