#include "galois_kit/lattice.hpp"

#include <algorithm>
#include <map>

#include "galois_kit/error.hpp"

namespace galois_kit {

Lattice make_validated(const LatticeDraft& draft);

std::string_view to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::lukasiewicz_chain: return "lukasiewicz";
    case LatticeKind::goedel_chain: return "goedel";
    case LatticeKind::custom: return "custom";
  }
  return "custom";
}

LatticeKind parse_lattice_kind(std::string_view text) {
  if (text == "lukasiewicz") return LatticeKind::lukasiewicz_chain;
  if (text == "goedel") return LatticeKind::goedel_chain;
  if (text == "custom") return LatticeKind::custom;
  throw PreconditionError("unknown lattice kind '" + std::string(text) + "'");
}

namespace {

Element el(std::size_t i) { return Element{static_cast<std::uint32_t>(i)}; }

std::vector<Element> flatten(const Table& t) {
  std::vector<Element> out;
  out.reserve(t.size() * t.size());
  for (const auto& row : t)
    for (std::size_t v : row) out.push_back(el(v));
  return out;
}

Table unflatten(const std::vector<Element>& flat, std::size_t n) {
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flat[i * n + j].idx;
  return t;
}

void check_shape(const LatticeDraft& d) {
  const std::size_t n = d.labels.size();
  if (n < 2) throw PreconditionError("carrier must have at least two elements");
  const std::pair<const char*, const Table*> tables[] = {
      {"join", &d.join}, {"meet", &d.meet}, {"prod", &d.prod}, {"impl", &d.impl}};
  for (auto [name, t] : tables) {
    if (t->size() != n)
      throw PreconditionError(std::string("table '") + name + "' must have " + std::to_string(n) +
                              " rows");
    for (std::size_t i = 0; i < n; ++i) {
      if ((*t)[i].size() != n)
        throw PreconditionError(std::string("table '") + name + "' row " + std::to_string(i) +
                                " must have " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j)
        if ((*t)[i][j] >= n)
          throw PreconditionError(std::string("table '") + name + "' entry (" + std::to_string(i) +
                                  "," + std::to_string(j) + ") = " +
                                  std::to_string((*t)[i][j]) + " is not a carrier index");
    }
  }
  if (d.labels.front() != Rational(0) || d.labels.back() != Rational(1))
    throw PreconditionError("labels must start with 0 and end with 1");
  std::vector<Rational> sorted = d.labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("carrier labels must be distinct");
}

/// Records only the first witness of each law, in enumeration order.
class Recorder {
 public:
  explicit Recorder(std::vector<Counterexample>& out) : out_(out) {}
  bool fail(const std::string& law, std::vector<Element> witness) {
    if (seen_.emplace(law, true).second) out_.push_back({law, std::move(witness)});
    return false;
  }

 private:
  std::vector<Counterexample>& out_;
  std::map<std::string, bool> seen_;
};

Lattice chain(int k, LatticeKind kind) {
  if (k < 2) throw PreconditionError("chain size must be at least 2, got " + std::to_string(k));
  const std::size_t n = static_cast<std::size_t>(k);
  LatticeDraft d;
  d.kind = kind;
  for (std::size_t i = 0; i < n; ++i) d.labels.emplace_back(static_cast<std::int64_t>(i), k - 1);
  d.join = d.meet = d.prod = d.impl = Table(n, std::vector<std::size_t>(n));
  // On the uniform chain i/(k-1) the Łukasiewicz operations are index arithmetic.
  const std::size_t top = n - 1;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      d.join[x][y] = std::max(x, y);
      d.meet[x][y] = std::min(x, y);
      if (kind == LatticeKind::lukasiewicz_chain) {
        d.prod[x][y] = x + y > top ? x + y - top : 0;
        d.impl[x][y] = x <= y ? top : top - x + y;
      } else {
        d.prod[x][y] = std::min(x, y);
        d.impl[x][y] = x <= y ? top : y;
      }
    }
  }
  return make_validated(d);
}

}  // namespace

Lattice make_validated(const LatticeDraft& draft) {
  return Lattice(new LatticeSpec(draft));
}

LatticeSpec::LatticeSpec(const LatticeDraft& d)
    : n_(d.labels.size()),
      kind_(d.kind),
      labels_(d.labels),
      join_(flatten(d.join)),
      meet_(flatten(d.meet)),
      prod_(flatten(d.prod)),
      impl_(flatten(d.impl)) {}

std::vector<Element> LatticeSpec::elements() const {
  std::vector<Element> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = el(i);
  return out;
}

std::optional<Element> LatticeSpec::find(const Rational& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return el(static_cast<std::size_t>(it - labels_.begin()));
}

Element LatticeSpec::element(std::string_view label) const {
  auto found = find(Rational::parse(label));
  if (!found) throw PreconditionError("label '" + std::string(label) + "' is not in the carrier");
  return *found;
}

LatticeDraft LatticeSpec::draft() const {
  return LatticeDraft{labels_, unflatten(join_, n_), unflatten(meet_, n_), unflatten(prod_, n_),
                      unflatten(impl_, n_), kind_};
}

bool operator==(const LatticeSpec& a, const LatticeSpec& b) {
  return a.labels_ == b.labels_ && a.join_ == b.join_ && a.meet_ == b.meet_ &&
         a.prod_ == b.prod_ && a.impl_ == b.impl_;
}

bool same_lattice(const Lattice& a, const Lattice& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Lattice make_lukasiewicz_chain(int k) { return chain(k, LatticeKind::lukasiewicz_chain); }

Lattice make_goedel_chain(int k) { return chain(k, LatticeKind::goedel_chain); }

Lattice make_custom_lattice(const LatticeDraft& draft) {
  LatticeReport report = validate_residuated_lattice(draft);
  if (!report.is_residuated()) {
    const Counterexample& c = report.counterexamples.front();
    std::string msg = "not a residuated lattice: law '" + c.law + "' fails at (";
    for (std::size_t i = 0; i < c.witness.size(); ++i)
      msg += (i ? "," : "") + draft.labels[c.witness[i].idx].str();
    throw LawViolation(msg + ")");
  }
  return make_validated(draft);
}

const Counterexample* LatticeReport::find(std::string_view law) const {
  for (const auto& c : counterexamples)
    if (c.law == law) return &c;
  return nullptr;
}

LatticeReport validate_residuated_lattice(const LatticeDraft& d) {
  check_shape(d);
  const std::size_t n = d.labels.size();
  const std::size_t bot = 0, top = n - 1;
  auto J = [&](std::size_t a, std::size_t b) { return d.join[a][b]; };
  auto M = [&](std::size_t a, std::size_t b) { return d.meet[a][b]; };
  auto P = [&](std::size_t a, std::size_t b) { return d.prod[a][b]; };
  auto I = [&](std::size_t a, std::size_t b) { return d.impl[a][b]; };
  auto leq = [&](std::size_t a, std::size_t b) { return M(a, b) == a; };

  LatticeReport r;
  Recorder rec(r.counterexamples);
  bool lattice_ok = true, monoid_ok = true, adj_ok = true;

  for (std::size_t x = 0; x < n; ++x) {
    if (J(x, x) != x || M(x, x) != x) lattice_ok = rec.fail("idempotent", {el(x)});
    if (J(bot, x) != x || M(bot, x) != bot) lattice_ok = rec.fail("bottom", {el(x)});
    if (M(top, x) != x || J(top, x) != top) lattice_ok = rec.fail("top", {el(x)});
    if (P(x, top) != x) monoid_ok = rec.fail("prod_unit", {el(x)});
    for (std::size_t y = 0; y < n; ++y) {
      if (J(x, y) != J(y, x)) lattice_ok = rec.fail("join_commutative", {el(x), el(y)});
      if (M(x, y) != M(y, x)) lattice_ok = rec.fail("meet_commutative", {el(x), el(y)});
      if (J(x, M(x, y)) != x || M(x, J(x, y)) != x)
        lattice_ok = rec.fail("absorption", {el(x), el(y)});
      if (P(x, y) != P(y, x)) monoid_ok = rec.fail("prod_commutative", {el(x), el(y)});
      for (std::size_t z = 0; z < n; ++z) {
        if (J(J(x, y), z) != J(x, J(y, z)))
          lattice_ok = rec.fail("join_associative", {el(x), el(y), el(z)});
        if (M(M(x, y), z) != M(x, M(y, z)))
          lattice_ok = rec.fail("meet_associative", {el(x), el(y), el(z)});
        if (P(P(x, y), z) != P(x, P(y, z)))
          monoid_ok = rec.fail("prod_associative", {el(x), el(y), el(z)});
        if (leq(P(x, y), z) != leq(x, I(y, z)))
          adj_ok = rec.fail("adjointness", {el(x), el(y), el(z)});
      }
    }
  }
  r.is_bounded_lattice = lattice_ok;
  r.is_comm_monoid = monoid_ok;
  r.has_adjointness = adj_ok;
  return r;
}

LatticeReport validate_residuated_lattice(const LatticeSpec& spec) {
  return validate_residuated_lattice(spec.draft());
}

LatticeReport classify_lattice(const LatticeSpec& A) {
  LatticeReport r = validate_residuated_lattice(A);
  if (!r.is_residuated())
    throw PreconditionError("classification requires a valid residuated lattice");
  Recorder rec(r.counterexamples);
  bool div = true, prelin = true, dn = true;
  for (Element x : A.elements()) {
    if (A.neg(A.neg(x)) != x) dn = rec.fail("double_negation", {x});
    for (Element y : A.elements()) {
      if (A.prod(x, A.impl(x, y)) != A.meet(x, y)) div = rec.fail("divisibility", {x, y});
      if (A.join(A.impl(x, y), A.impl(y, x)) != A.top()) prelin = rec.fail("prelinearity", {x, y});
    }
  }
  r.classified = true;
  r.has_divisibility = div;
  r.has_prelinearity = prelin;
  r.has_double_negation = dn;
  r.is_bl = r.is_residuated() && div && prelin;
  r.is_mv = r.is_bl && dn;
  return r;
}

MvOperations::MvOperations(Lattice lattice) : lattice_(std::move(lattice)) {
  const LatticeSpec& A = *lattice_;
  const std::size_t n = A.size();
  neg_.resize(n);
  oplus_.resize(n * n);
  for (Element x : A.elements()) neg_[x.idx] = A.neg(x);
  for (Element x : A.elements())
    for (Element y : A.elements()) oplus_[x.idx * n + y.idx] = A.neg(A.prod(A.neg(x), A.neg(y)));
}

bool MvOperations::order_matches_oplus() const {
  const LatticeSpec& A = *lattice_;
  for (Element x : A.elements())
    for (Element y : A.elements())
      if (A.leq(x, y) != (oplus(neg(x), y) == A.top())) return false;
  return true;
}

MvOperations mv_extend(const Lattice& lattice) {
  if (!classify_lattice(*lattice).is_mv)
    throw PreconditionError("unsupported structure: lattice is not an MV-algebra");
  MvOperations ops(lattice);
  if (!ops.order_matches_oplus())
    throw LawViolation("MV order x <= y iff not x (+) y = 1 fails");
  return ops;
}

DistributionReport check_residuation_distribution(const LatticeSpec& A, std::size_t max_subset) {
  const std::size_t n = A.size();
  if (n > 20) throw BudgetExceeded("subset enumeration over more than 20 elements refused");
  DistributionReport r;
  Recorder rec(r.counterexamples);
  // Subsets as bitmasks in increasing order; witnesses are therefore deterministic.
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Element> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(el(i));
    if (subset.size() > max_subset) continue;
    ++r.subsets_checked;
    Element sup = A.bottom(), inf = A.top();
    for (Element m : subset) {
      sup = A.join(sup, m);
      inf = A.meet(inf, m);
    }
    for (Element x : A.elements()) {
      Element sup_prod = A.bottom(), inf_from = A.top(), inf_into = A.top();
      for (Element m : subset) {
        sup_prod = A.join(sup_prod, A.prod(x, m));
        inf_from = A.meet(inf_from, A.impl(m, x));
        inf_into = A.meet(inf_into, A.impl(x, m));
      }
      std::vector<Element> witness{x};
      witness.insert(witness.end(), subset.begin(), subset.end());
      if (A.prod(x, sup) != sup_prod) r.product_over_join = rec.fail("product_over_join", witness);
      if (A.impl(sup, x) != inf_from)
        r.implication_from_join = rec.fail("implication_from_join", witness);
      if (A.impl(x, inf) != inf_into)
        r.implication_into_meet = rec.fail("implication_into_meet", witness);
    }
  }
  return r;
}

}  // namespace galois_kit
