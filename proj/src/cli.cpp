#include "galois_kit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "galois_kit/error.hpp"
#include "galois_kit/fca.hpp"
#include "galois_kit/io.hpp"
#include "galois_kit/temporal.hpp"

namespace galois_kit::cli {

using nlohmann::json;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::law_violation: return "law_violation";
    case Status::precondition_error: return "precondition_error";
    case Status::budget_exceeded: return "budget_exceeded";
    case Status::io_error: return "io_error";
  }
  return "ok";
}

int exit_code(Status s) { return static_cast<int>(s); }

namespace {

// Every option a subcommand may declare. Unset strings are empty.
struct Options {
  std::string lattice, relation, context, op, partner, vector;
  std::string kind, suite, direction, mode, side, format;
  std::string domain, codomain, entries;
  bool reversed = false;
  std::size_t max_subset = 0;
  int size = 0;
  std::optional<std::size_t> budget;
  std::string out;
};

enum Flag : unsigned {
  kLattice = 1u << 0,
  kRelation = 1u << 1,
  kContext = 1u << 2,
  kOp = 1u << 3,
  kPartner = 1u << 4,
  kVector = 1u << 5,
  kKind = 1u << 6,
  kSuite = 1u << 7,
  kDirection = 1u << 8,
  kMode = 1u << 9,
  kSide = 1u << 10,
  kReversed = 1u << 11,
  kFormat = 1u << 12,
  kMaxSubset = 1u << 13,
  kSize = 1u << 14,
  kBuild = 1u << 15,  // --domain, --codomain, --entries
};

using Handler = std::function<CommandResult(const Options&)>;

struct Command {
  CommandInfo info;
  std::string summary;
  unsigned flags;
  Handler handler;
};

// ---------------------------------------------------------------------------------------------
// Inputs

Budget budget_of(const Options& o) {
  if (o.budget) return Budget{*o.budget};
  if (const char* env = std::getenv("GALOIS_KIT_BUDGET")) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return Budget{static_cast<std::size_t>(v)};
    } catch (const std::exception&) {
    }
    throw PreconditionError("GALOIS_KIT_BUDGET must be a non-negative integer");
  }
  return Budget{};
}

std::optional<Lattice> lattice_opt(const Options& o) {
  if (o.lattice.empty()) return std::nullopt;
  return io::load_lattice(o.lattice);
}

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) throw PreconditionError(std::string("missing required option ") + flag);
  return value;
}

FuzzyRelation relation_of(const Options& o) {
  return io::load_relation(need(o.relation, "--relation"), lattice_opt(o));
}

// --op FILE, or --relation FILE with --kind naming the induced operator.
OperatorTable operator_of(const Options& o, std::optional<InducedKind> kind = std::nullopt) {
  if (!o.op.empty()) return io::load_operator(o.op, lattice_opt(o));
  if (o.relation.empty()) throw PreconditionError("missing required option --op or --relation");
  if (!kind) kind = parse_induced_kind(need(o.kind, "--kind"));
  return induced_operator(*kind, relation_of(o), budget_of(o));
}

FuzzyVector vector_of(const Options& o, const Lattice& A, const IndexSet& index) {
  return FuzzyVector::parse(A, index, need(o.vector, "--vector"));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

// ---------------------------------------------------------------------------------------------
// Payloads

CommandResult ok(json payload) { return CommandResult{Status::ok, std::move(payload), {}, {}, {}}; }

CommandResult verdict(bool passed, json payload, const std::string& failure) {
  CommandResult r = ok(std::move(payload));
  if (!passed) {
    r.status = Status::law_violation;
    r.diagnostics.push_back(failure);
  }
  return r;
}

json labels_json(const std::vector<Element>& es, const LatticeSpec& A) {
  json out = json::array();
  for (Element e : es) out.push_back(A.label_str(e));
  return out;
}

json counterexamples_json(const std::vector<Counterexample>& cs, const LatticeSpec* A,
                          const std::vector<Rational>& labels) {
  json out = json::array();
  for (const auto& c : cs) {
    json w = json::array();
    for (Element e : c.witness) w.push_back(A ? A->label_str(e) : labels.at(e.idx).str());
    out.push_back({{"law", c.law}, {"witness", w}});
  }
  return out;
}

json witnesses_json(const std::map<std::string, Witness>& ws, const LatticeSpec& A) {
  json out = json::object();
  for (const auto& [law, w] : ws) out[law] = io::witness_to_json(w, A);
  return out;
}

json axiom_json(const AxiomReport& r, const LatticeSpec& A) {
  return {{"suite", std::string(to_string(r.suite))},
          {"all_pass", r.all_pass()},
          {"results", r.results},
          {"informational", r.informational},
          {"witnesses", witnesses_json(r.witnesses, A)}};
}

json mapping_json(const MappingTypeReport& r, const LatticeSpec& A) {
  return {{"monotone", r.monotone},
          {"antitone", r.antitone},
          {"infima_preserving", r.infima_preserving},
          {"suprema_preserving", r.suprema_preserving},
          {"suprema_reversing", r.suprema_reversing},
          {"diag_impl_law", r.diag_impl_law},
          {"diag_prod_law", r.diag_prod_law},
          {"diag_mixed_law", r.diag_mixed_law},
          {"is_phi_type", r.is_phi_type},
          {"is_rho_type", r.is_rho_type},
          {"is_delta_type", r.is_delta_type},
          {"type_class", std::string(to_string(r.type_class))},
          {"witnesses", witnesses_json(r.witnesses, A)}};
}

json galois_json(const GaloisReport& r, const LatticeSpec& A) {
  json out = {{"reversed", r.reversed},
              {"biconditional", r.biconditional},
              {"order_condition", r.order_condition},
              {"unit_counit", r.unit_counit},
              {"characterisations_agree", r.characterisations_agree},
              {"passed", r.passed()}};
  if (r.biconditional_witness)
    out["biconditional_witness"] = io::witness_to_json(*r.biconditional_witness, A);
  if (r.unit_counit_witness)
    out["unit_counit_witness"] = io::witness_to_json(*r.unit_counit_witness, A);
  return out;
}

json lattice_report_json(const LatticeReport& r, const LatticeSpec* A,
                         const std::vector<Rational>& labels) {
  json out = {{"bounded_lattice", r.is_bounded_lattice},
              {"commutative_monoid", r.is_comm_monoid},
              {"adjointness", r.has_adjointness},
              {"residuated", r.is_residuated()},
              {"counterexamples", counterexamples_json(r.counterexamples, A, labels)}};
  if (r.classified) {
    out["divisibility"] = r.has_divisibility;
    out["prelinearity"] = r.has_prelinearity;
    out["double_negation"] = r.has_double_negation;
    out["is_bl"] = r.is_bl;
    out["is_mv"] = r.is_mv;
  }
  return out;
}

// Two-operator inputs: --relation with --kind phi|delta, or --op with --partner.
std::pair<OperatorTable, OperatorTable> pair_of(const Options& o, bool& reversed) {
  if (!o.op.empty()) {
    reversed = o.reversed;
    return {io::load_operator(o.op, lattice_opt(o)),
            io::load_operator(need(o.partner, "--partner"), lattice_opt(o))};
  }
  const InducedKind k = parse_induced_kind(o.kind.empty() ? "phi" : o.kind);
  const FuzzyRelation R = relation_of(o);
  const Budget b = budget_of(o);
  if (k == InducedKind::phi) {
    reversed = false;
    return {induced_operator(InducedKind::phi, R, b), induced_operator(InducedKind::rho, R, b)};
  }
  if (k == InducedKind::delta) {
    reversed = true;
    return {induced_operator(InducedKind::delta, R, b),
            induced_operator(InducedKind::epsilon, R, b)};
  }
  throw PreconditionError("--kind must be phi (phi/rho pair) or delta (delta/epsilon pair)");
}

TimeFrame frame_of(const Options& o) { return TimeFrame(relation_of(o)); }

// ---------------------------------------------------------------------------------------------
// Handlers

CommandResult lattice_validate(const Options& o) {
  const LatticeDraft draft = io::load_lattice_draft(need(o.lattice, "--lattice"));
  const LatticeReport r = validate_residuated_lattice(draft);
  json payload = lattice_report_json(r, nullptr, draft.labels);
  payload["kind"] = std::string(to_string(draft.kind));
  payload["size"] = draft.labels.size();
  return verdict(r.is_residuated(), payload, "not a residuated lattice");
}

CommandResult lattice_classify(const Options& o) {
  const Lattice A = io::load_lattice(need(o.lattice, "--lattice"));
  json payload = lattice_report_json(classify_lattice(*A), A.get(), A->labels());
  payload["kind"] = std::string(to_string(A->kind()));
  payload["size"] = A->size();
  return ok(payload);
}

CommandResult lattice_mv(const Options& o) {
  const Lattice A = io::load_lattice(need(o.lattice, "--lattice"));
  const MvOperations mv = mv_extend(A);
  json neg = json::object();
  json oplus = json::array();
  for (Element a : A->elements()) {
    neg[A->label_str(a)] = A->label_str(mv.neg(a));
    json row = json::array();
    for (Element b : A->elements()) row.push_back(A->label_str(mv.oplus(a, b)));
    oplus.push_back(row);
  }
  return ok({{"labels", labels_json(A->elements(), *A)},
             {"neg", neg},
             {"oplus", oplus},
             {"order_matches_oplus", mv.order_matches_oplus()}});
}

CommandResult lattice_distribution(const Options& o) {
  const Lattice A = io::load_lattice(need(o.lattice, "--lattice"));
  const std::size_t k = o.max_subset ? o.max_subset : A->size();
  const DistributionReport r = check_residuation_distribution(*A, k);
  json payload = {{"product_over_join", r.product_over_join},
                  {"implication_from_join", r.implication_from_join},
                  {"implication_into_meet", r.implication_into_meet},
                  {"subsets_checked", r.subsets_checked},
                  {"max_subset", k},
                  {"passed", r.passed()},
                  {"counterexamples", counterexamples_json(r.counterexamples, A.get(), {})}};
  return verdict(r.passed(), payload, "a distribution law fails");
}

CommandResult lattice_build(const Options& o) {
  const LatticeKind kind = parse_lattice_kind(need(o.kind, "--kind"));
  if (kind == LatticeKind::custom)
    return ok(io::lattice_to_json(*make_custom_lattice(io::load_lattice_draft(
        need(o.lattice, "--lattice")))));
  if (o.size == 0) throw PreconditionError("missing required option --size");
  const Lattice A = kind == LatticeKind::lukasiewicz_chain ? make_lukasiewicz_chain(o.size)
                                                           : make_goedel_chain(o.size);
  return ok(io::lattice_to_json(*A));
}

CommandResult relation_build(const Options& o) {
  const Lattice A = io::load_lattice(need(o.lattice, "--lattice"));
  std::vector<RelationEntry> entries;
  for (const std::string& e : split(o.entries, ',')) {
    const auto parts = split(e, ':');
    if (parts.size() != 3) throw PreconditionError("entry '" + e + "' must look like i:j:value");
    entries.push_back({parts[0], parts[1], parts[2]});
  }
  const IndexSet dom(split(need(o.domain, "--domain"), ','));
  const IndexSet cod(split(need(o.codomain, "--codomain"), ','));
  return ok(io::relation_to_json(build_relation(A, dom, cod, entries)));
}

CommandResult relation_props(const Options& o) {
  const FuzzyRelation R = relation_of(o);
  const RelationReport r = relation_properties(R, R.is_square());
  json payload = {{"square", R.is_square()},
                  {"boolean_valued", r.boolean_valued},
                  {"witnesses", r.witnesses}};
  if (R.is_square()) {
    payload["reflexive"] = r.reflexive;
    payload["symmetric"] = r.symmetric;
    payload["transitive"] = r.transitive;
    payload["fuzzy_equivalence"] = r.fuzzy_equivalence;
  }
  return ok(payload);
}

CommandResult relation_transpose(const Options& o) {
  return ok(io::relation_to_json(transpose(relation_of(o))));
}

CommandResult op_apply(const Options& o) {
  const InducedKind k = parse_induced_kind(need(o.kind, "--kind"));
  const FuzzyRelation R = relation_of(o);
  if (o.vector.empty()) return ok(io::operator_to_json(induced_operator(k, R, budget_of(o))));
  const bool from_domain = k == InducedKind::phi || k == InducedKind::delta;
  const FuzzyVector x = vector_of(o, R.lattice(), from_domain ? R.domain() : R.codomain());
  return ok({{"kind", std::string(to_string(k))},
             {"input", io::vector_to_json(x)},
             {"output", io::vector_to_json(apply_induced(k, R, x))}});
}

CommandResult op_galois(const Options& o) {
  bool reversed = false;
  const auto [f, g] = pair_of(o, reversed);
  const GaloisReport r = verify_galois(f, g, reversed);
  return verdict(r.passed(), galois_json(r, *f.lattice()), "not a Galois connection");
}

CommandResult op_classify(const Options& o) {
  const OperatorTable op = operator_of(o);
  return ok(mapping_json(classify_mapping(op), *op.lattice()));
}

CommandResult op_adjoint(const Options& o) {
  const OperatorTable op = operator_of(o);
  const AdjointDirection d =
      parse_adjoint_direction(o.direction.empty() ? "left_of_monotone" : o.direction);
  return ok(io::operator_to_json(compute_adjoint(op, d, budget_of(o))));
}

CommandResult op_recover(const Options& o) {
  const RecoveryKind k = parse_recovery_kind(need(o.kind, "--kind"));
  const InducedKind inducer = k == RecoveryKind::from_phi     ? InducedKind::phi
                              : k == RecoveryKind::from_delta ? InducedKind::delta
                                                              : InducedKind::rho;
  const OperatorTable op = operator_of(o, inducer);
  return ok(io::relation_to_json(recover_relation(op, k, budget_of(o))));
}

CommandResult op_decompose(const Options& o) {
  const OperatorTable op = operator_of(o);
  const DecompositionMode m = parse_decomposition_mode(need(o.mode, "--mode"));
  const Decomposition d = decompose_operator(op, m);
  return ok({{"mode", std::string(to_string(m))},
             {"fixpoints", d.fixpoints.names()},
             {"relation", io::relation_to_json(d.relation)}});
}

CommandResult op_closure(const Options& o) {
  const OperatorTable op = operator_of(o);
  const ClosureReport r = closure_interior_check(op);
  return ok({{"monotone", r.monotone},
             {"extensive", r.extensive},
             {"contractive", r.contractive},
             {"idempotent", r.idempotent},
             {"scalar_law", r.scalar_law},
             {"is_closure", r.is_closure},
             {"is_interior", r.is_interior},
             {"has_scalar_law_closure", r.has_scalar_law_closure},
             {"has_scalar_law_interior", r.has_scalar_law_interior},
             {"witnesses", witnesses_json(r.witnesses, *op.lattice())}});
}

CommandResult op_conjugate(const Options& o) {
  const FuzzyRelation R = relation_of(o);
  const ConjugateReport r = conjugate_check(R, budget_of(o));
  json payload = {{"neg_phi_neg_is_rho_inverse", r.neg_phi_neg_is_rho_inverse},
                  {"neg_rho_neg_is_phi_inverse", r.neg_rho_neg_is_phi_inverse},
                  {"passed", r.passed()}};
  if (r.witness) payload["witness"] = io::witness_to_json(*r.witness, *R.lattice());
  return verdict(r.passed(), payload, "negation conjugates do not match");
}

CommandResult op_boolean(const Options& o) {
  const FuzzyRelation R = relation_of(o);
  const BooleanCriterionReport r = boolean_criterion_check(R, budget_of(o));
  json payload = {{"submultiplicative", r.submultiplicative},
                  {"boolean_valued", r.boolean_valued},
                  {"equivalent", r.equivalent}};
  if (r.witness) payload["witness"] = io::witness_to_json(*r.witness, *R.lattice());
  return verdict(r.equivalent, payload, "submultiplicativity and boolean values disagree");
}

CommandResult op_strong(const Options& o) {
  bool reversed = false;
  const auto [f, g] = pair_of(o, reversed);
  const StrongAdjointReport r = strong_adjoint_check(f, g, reversed);
  return verdict(r.equivalent,
                 {{"reversed", r.reversed},
                  {"laws", r.laws},
                  {"strong", r.holds()},
                  {"equivalent", r.equivalent},
                  {"witnesses", witnesses_json(r.witnesses, *f.lattice())}},
                 "the two constant-exchange laws disagree");
}

FuzzyContext context_of(const Options& o) {
  return io::load_context(need(o.context, "--context"), lattice_opt(o));
}

CommandResult fca_derive(const Options& o) {
  const FuzzyContext ctx = context_of(o);
  const DeriveSide side = parse_derive_side(o.side.empty() ? "objects_to_attrs" : o.side);
  const FuzzyVector x = vector_of(
      o, ctx.lattice(), side == DeriveSide::objects_to_attrs ? ctx.objects() : ctx.attributes());
  return ok({{"side", std::string(to_string(side))},
             {"input", io::vector_to_json(x)},
             {"output", io::vector_to_json(derive(ctx, side, x))}});
}

CommandResult fca_concepts(const Options& o) {
  const ConceptSet cs = enumerate_concepts(context_of(o), budget_of(o));
  if (!o.format.empty() && parse_export_format(o.format) == ExportFormat::dot) {
    CommandResult r = ok(json());
    r.text = export_lattice(cs, ExportFormat::dot);
    return r;
  }
  json list = json::array();
  for (const Concept& c : cs.concepts())
    list.push_back({{"extent", io::vector_to_json(c.extent)},
                    {"intent", io::vector_to_json(c.intent)}});
  return ok({{"count", cs.size()}, {"concepts", list}});
}

CommandResult fca_export(const Options& o) {
  const ConceptSet cs = enumerate_concepts(context_of(o), budget_of(o));
  const ExportFormat f = parse_export_format(o.format.empty() ? "dot" : o.format);
  CommandResult r = ok(json());
  if (f == ExportFormat::dot)
    r.text = export_lattice(cs, f);
  else
    r.payload = json::parse(export_lattice(cs, f));
  return r;
}

CommandResult tense_operators(const Options& o) {
  const TenseStructure ts = tense_from_frame(frame_of(o), budget_of(o));
  json payload = {{"G", io::operator_to_json(ts.G)}, {"H", io::operator_to_json(ts.H)}};
  if (ts.F) payload["F"] = io::operator_to_json(*ts.F);
  if (ts.P) payload["P"] = io::operator_to_json(*ts.P);
  return ok(payload);
}

CommandResult tense_check(const Options& o) {
  const TenseStructure ts = tense_from_frame(frame_of(o), budget_of(o));
  const AxiomReport r =
      check_axioms(ts, parse_axiom_suite(o.suite.empty() ? "pavelka_PT" : o.suite));
  return verdict(r.all_pass(), axiom_json(r, *ts.lattice), "an axiom fails");
}

CommandResult tense_correspondence(const Options& o) {
  const TimeFrame frame = frame_of(o);
  const FrameCorrespondence c = frame_correspondence(frame, budget_of(o));
  auto row = [](const CorrespondenceRow& r) {
    return json{{"frame", r.frame}, {"operators", r.operators}, {"agrees", r.agrees()}};
  };
  return verdict(c.all_agree(),
                 {{"reflexive", row(c.reflexive)},
                  {"symmetric", row(c.symmetric)},
                  {"transitive", row(c.transitive)},
                  {"all_agree", c.all_agree()},
                  {"witnesses", witnesses_json(c.witnesses, *frame.lattice())}},
                 "a frame correspondence fails");
}

MonadicStructure monadic_of(const Options& o) {
  if (!o.op.empty()) return make_monadic_structure(io::load_operator(o.op, lattice_opt(o)));
  return monadic_from_equivalence(frame_of(o), budget_of(o));
}

CommandResult monadic_operators(const Options& o) {
  const MonadicStructure m = monadic_from_equivalence(frame_of(o), budget_of(o));
  json payload = {{"exists", io::operator_to_json(m.exists)}};
  if (m.forall) payload["forall"] = io::operator_to_json(*m.forall);
  return ok(payload);
}

CommandResult monadic_check(const Options& o) {
  const MonadicStructure m = monadic_of(o);
  const AxiomReport r =
      check_monadic(m, parse_axiom_suite(o.suite.empty() ? "monadic_new" : o.suite));
  return verdict(r.all_pass(), axiom_json(r, *m.exists.lattice()), "an axiom fails");
}

CommandResult monadic_bridge(const Options& o) {
  const MonadicStructure m = monadic_of(o);
  const BridgeReport b = monadic_tense_bridge(m.exists);
  return verdict(b.holds(),
                 {{"is_closure", b.is_closure},
                  {"monadic_new", b.monadic_new},
                  {"pavelka_PT", b.pavelka_pt},
                  {"agree", b.agree()},
                  {"holds", b.holds()}},
                 "monadic and tense readings disagree on a closure operator");
}

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {{"lattice", "build", {"make_lukasiewicz_chain", "make_goedel_chain", "make_custom_lattice"}},
       "Build a chain (--kind lukasiewicz|goedel --size k) or validate a custom table file",
       kKind | kSize | kLattice, lattice_build},
      {{"lattice", "validate", {"validate_residuated_lattice"}},
       "Check the residuated-lattice laws of a lattice file", kLattice, lattice_validate},
      {{"lattice", "classify", {"classify_lattice"}},
       "Report divisibility, prelinearity, double negation, BL and MV", kLattice,
       lattice_classify},
      {{"lattice", "mv", {"mv_extend"}}, "Print negation and the MV sum of an MV lattice",
       kLattice, lattice_mv},
      {{"lattice", "distribution", {"check_residuation_distribution"}},
       "Check residuation against joins and meets of small subsets", kLattice | kMaxSubset,
       lattice_distribution},
      {{"relation", "build", {"build_relation"}},
       "Build a relation from --domain, --codomain and --entries i:j:v,...", kLattice | kBuild,
       relation_build},
      {{"relation", "properties", {"relation_properties"}},
       "Reflexive, symmetric, transitive, boolean and equivalence flags", kLattice | kRelation,
       relation_props},
      {{"relation", "transpose", {"transpose"}}, "Print the inverse relation",
       kLattice | kRelation, relation_transpose},
      {{"op", "apply", {"apply_induced"}},
       "Apply phi, rho, delta or epsilon to --vector, or print the whole table",
       kLattice | kRelation | kKind | kVector, op_apply},
      {{"op", "galois", {"verify_galois"}},
       "Verify a Galois connection (--relation with --kind phi|delta, or --op and --partner)",
       kLattice | kRelation | kKind | kOp | kPartner | kReversed, op_galois},
      {{"op", "classify", {"classify_mapping"}}, "Report the mapping type of an operator",
       kLattice | kRelation | kKind | kOp, op_classify},
      {{"op", "adjoint", {"compute_adjoint"}},
       "Construct the Galois partner (--direction left_of_monotone|right_of_monotone|"
       "reversed_partner)",
       kLattice | kRelation | kKind | kOp | kDirection, op_adjoint},
      {{"op", "recover", {"recover_relation"}},
       "Recover the inducing relation (--kind from_phi|from_delta|from_rho)",
       kLattice | kRelation | kKind | kOp, op_recover},
      {{"op", "decompose", {"decompose_operator"}},
       "Write an interior or closure operator as a composite of induced operators",
       kLattice | kRelation | kKind | kOp | kMode, op_decompose},
      {{"op", "closure", {"closure_interior_check"}},
       "Check closure, interior and scalar-law properties", kLattice | kRelation | kKind | kOp,
       op_closure},
      {{"op", "conjugate", {"conjugate_check"}},
       "Check that negation conjugates phi and rho into the inverse relation's operators",
       kLattice | kRelation, op_conjugate},
      {{"op", "boolean", {"boolean_criterion_check"}},
       "Check submultiplicativity of phi against boolean values of the relation",
       kLattice | kRelation, op_boolean},
      {{"op", "strong", {"strong_adjoint_check"}},
       "Check the constant-exchange laws of a Galois pair",
       kLattice | kRelation | kKind | kOp | kPartner | kReversed, op_strong},
      {{"fca", "derive", {"derive"}}, "Apply a derivation operator to --vector",
       kLattice | kContext | kSide | kVector, fca_derive},
      {{"fca", "concepts", {"enumerate_concepts"}}, "List all formal concepts",
       kLattice | kContext | kFormat, fca_concepts},
      {{"fca", "export", {"export_lattice"}}, "Export the concept lattice as DOT or JSON",
       kLattice | kContext | kFormat, fca_export},
      {{"tense", "operators", {"tense_from_frame"}},
       "Print G = phi_R and H = phi_{R^-1} (and F, P on MV lattices); transpose the frame "
       "for the opposite orientation",
       kLattice | kRelation, tense_operators},
      {{"tense", "check", {"check_axioms"}},
       "Check an axiom suite (--suite boolean_B|mv_T|pavelka_PT)",
       kLattice | kRelation | kSuite, tense_check},
      {{"tense", "correspondence", {"frame_correspondence"}},
       "Compare frame properties with operator inequalities", kLattice | kRelation,
       tense_correspondence},
      {{"monadic", "operators", {"monadic_from_equivalence"}},
       "Print the quantifiers of a fuzzy equivalence", kLattice | kRelation, monadic_operators},
      {{"monadic", "check", {"check_monadic"}},
       "Check a monadic suite (--suite monadic_new|monadic_original)",
       kLattice | kRelation | kOp | kSuite, monadic_check},
      {{"monadic", "bridge", {"monadic_tense_bridge"}},
       "Compare the monadic and tense axioms of an existential operator",
       kLattice | kRelation | kOp, monadic_bridge},
  };
  return table;
}

const std::map<std::string, std::string>& group_help() {
  static const std::map<std::string, std::string> help = {
      {"lattice", "Finite residuated lattices"},
      {"relation", "Fuzzy relations"},
      {"op", "Relation-induced operators"},
      {"fca", "Fuzzy formal concept analysis"},
      {"tense", "Tense operators over time frames"},
      {"monadic", "Monadic operators"},
  };
  return help;
}

void declare(CLI::App& sub, unsigned flags, Options& o) {
  if (flags & kLattice) sub.add_option("--lattice", o.lattice, "Lattice JSON file");
  if (flags & kRelation) sub.add_option("--relation", o.relation, "Relation (or frame) JSON file");
  if (flags & kContext) sub.add_option("--context", o.context, "Context CSV or JSON file");
  if (flags & kOp) sub.add_option("--op", o.op, "Operator table JSON file");
  if (flags & kPartner) sub.add_option("--partner", o.partner, "Second operator table file");
  if (flags & kVector) sub.add_option("--vector", o.vector, "Comma-separated labels, e.g. 0,1/2");
  if (flags & kKind) sub.add_option("--kind", o.kind, "Operator, recovery or lattice kind");
  if (flags & kSuite) sub.add_option("--suite", o.suite, "Axiom suite");
  if (flags & kDirection) sub.add_option("--direction", o.direction, "Adjoint direction");
  if (flags & kMode) sub.add_option("--mode", o.mode, "interior or closure");
  if (flags & kSide) sub.add_option("--side", o.side, "objects_to_attrs or attrs_to_objects");
  if (flags & kReversed) sub.add_flag("--reversed", o.reversed, "Treat the pair as reversed");
  if (flags & kFormat) sub.add_option("--format", o.format, "json or dot");
  if (flags & kMaxSubset) sub.add_option("--max-subset", o.max_subset, "Largest subset size");
  if (flags & kSize) sub.add_option("--size", o.size, "Number of chain elements");
  if (flags & kBuild) {
    sub.add_option("--domain", o.domain, "Comma-separated domain names");
    sub.add_option("--codomain", o.codomain, "Comma-separated codomain names");
    sub.add_option("--entries", o.entries, "Comma-separated i:j:value entries");
  }
  sub.add_option("--budget", o.budget,
                 "Row budget for exhaustive enumeration (default 10000, or GALOIS_KIT_BUDGET)");
  sub.add_option("--out", o.out, "Write output to FILE instead of stdout");
}

Status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::law_violation: return Status::law_violation;
    case ErrorKind::precondition: return Status::precondition_error;
    case ErrorKind::budget_exceeded: return Status::budget_exceeded;
    case ErrorKind::io: return Status::io_error;
  }
  return Status::precondition_error;
}

CommandResult failure(Status s, const std::string& message) {
  CommandResult r;
  r.status = s;
  r.payload = {{"status", std::string(to_string(s))}, {"error", message}};
  r.diagnostics.push_back(message);
  return r;
}

}  // namespace

std::vector<CommandInfo> command_table() {
  std::vector<CommandInfo> out;
  for (const auto& c : commands()) out.push_back(c.info);
  return out;
}

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact checks for operators induced by fuzzy relations on finite residuated "
               "lattices.\nExit codes: 0 ok, 1 law_violation, 2 precondition_error, "
               "3 budget_exceeded, 4 io_error."};
  app.name("galois_kit");
  app.require_subcommand(1);
  Options o;
  std::map<std::string, CLI::App*> groups;
  std::vector<std::pair<CLI::App*, const Command*>> leaves;
  for (const auto& [name, help] : group_help()) {
    groups[name] = app.add_subcommand(name, help);
    groups[name]->require_subcommand(1);
  }
  for (const auto& c : commands()) {
    CLI::App* sub = groups.at(c.info.group)->add_subcommand(c.info.name, c.summary);
    declare(*sub, c.flags, o);
    leaves.emplace_back(sub, &c);
  }

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream os;
    app.exit(e, os, os);
    CommandResult r;
    r.text = os.str();
    return r;
  } catch (const CLI::ParseError& e) {
    return failure(Status::precondition_error, e.what());
  }

  for (const auto& [sub, cmd] : leaves) {
    if (!sub->parsed()) continue;
    CommandResult r;
    try {
      r = cmd->handler(o);
    } catch (const Error& e) {
      r = failure(status_of(e.kind()), e.what());
    } catch (const nlohmann::json::exception& e) {
      r = failure(Status::io_error, e.what());
    } catch (const std::exception& e) {
      r = failure(Status::precondition_error, e.what());
    }
    r.out_file = o.out;
    return r;
  }
  return failure(Status::precondition_error, "no subcommand given");
}

std::string render(const CommandResult& result) {
  if (!result.text.empty()) return result.text;
  return result.payload.dump(2) + "\n";
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandResult r = run(args);
  const std::string text = render(r);
  if (r.out_file.empty()) {
    out << text;
  } else {
    std::ofstream file(r.out_file, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write '" << r.out_file << "'\n";
      return exit_code(Status::io_error);
    }
  }
  for (const auto& line : r.diagnostics) err << to_string(r.status) << ": " << line << '\n';
  return exit_code(r.status);
}

}  // namespace galois_kit::cli
