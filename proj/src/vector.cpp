#include "galois_kit/vector.hpp"

#include <limits>

#include "galois_kit/error.hpp"

namespace galois_kit {

VectorSpace::VectorSpace(Lattice lattice, std::size_t dim)
    : lattice_(std::move(lattice)), dim_(dim) {
  const std::size_t n = lattice_->size();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (count_ > std::numeric_limits<std::size_t>::max() / n) {
      count_ = std::numeric_limits<std::size_t>::max();
      break;
    }
    count_ *= n;
  }
}

void VectorSpace::require_within(const Budget& budget, std::string_view what) const {
  if (count_ > budget.max_rows)
    throw BudgetExceeded(std::string(what) + ": |A|^|I| = " + std::to_string(lattice_->size()) +
                         "^" + std::to_string(dim_) + " exceeds the budget of " +
                         std::to_string(budget.max_rows) + " rows");
}

std::size_t VectorSpace::rank(const Values& x) const {
  if (x.size() != dim_) throw PreconditionError("vector has the wrong dimension");
  const std::size_t n = lattice_->size();
  std::size_t r = 0;
  for (Element e : x) r = r * n + e.idx;
  return r;
}

Values VectorSpace::unrank(std::size_t r) const {
  const std::size_t n = lattice_->size();
  Values x(dim_);
  for (std::size_t i = dim_; i-- > 0;) {
    x[i] = Element{static_cast<std::uint32_t>(r % n)};
    r /= n;
  }
  return x;
}

std::vector<Values> VectorSpace::all(const Budget& budget) const {
  require_within(budget, "vector enumeration");
  std::vector<Values> out;
  out.reserve(count_);
  for (std::size_t r = 0; r < count_; ++r) out.push_back(unrank(r));
  return out;
}

Values VectorSpace::unit(std::size_t j) const {
  Values x = bottom();
  x.at(j) = lattice_->top();
  return x;
}

namespace {

template <class Op>
Values pointwise(const Values& a, const Values& b, Op op) {
  Values out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return out;
}

}  // namespace

Values VectorSpace::meet(const Values& a, const Values& b) const {
  return pointwise(a, b, [&](Element x, Element y) { return lattice_->meet(x, y); });
}
Values VectorSpace::join(const Values& a, const Values& b) const {
  return pointwise(a, b, [&](Element x, Element y) { return lattice_->join(x, y); });
}
Values VectorSpace::prod(const Values& a, const Values& b) const {
  return pointwise(a, b, [&](Element x, Element y) { return lattice_->prod(x, y); });
}
Values VectorSpace::impl(const Values& a, const Values& b) const {
  return pointwise(a, b, [&](Element x, Element y) { return lattice_->impl(x, y); });
}

Values VectorSpace::neg(const Values& a) const {
  Values out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = lattice_->neg(a[i]);
  return out;
}

Values VectorSpace::scale(Element d, const Values& x) const {
  Values out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = lattice_->prod(d, x[i]);
  return out;
}

Values VectorSpace::shift(Element d, const Values& x) const {
  Values out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = lattice_->impl(d, x[i]);
  return out;
}

bool VectorSpace::leq(const Values& a, const Values& b) const {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!lattice_->leq(a[i], b[i])) return false;
  return true;
}

FuzzyVector::FuzzyVector(Lattice lattice, IndexSet index, Values values)
    : lattice_(std::move(lattice)), index_(std::move(index)), values_(std::move(values)) {
  if (values_.size() != index_.size())
    throw PreconditionError("vector needs one value per index (" + std::to_string(index_.size()) +
                            "), got " + std::to_string(values_.size()));
  for (Element e : values_)
    if (e.idx >= lattice_->size()) throw PreconditionError("vector entry is not a carrier index");
}

FuzzyVector FuzzyVector::parse(Lattice lattice, IndexSet index, std::string_view labels) {
  Values values;
  while (true) {
    auto comma = labels.find(',');
    values.push_back(lattice->element(labels.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    labels.remove_prefix(comma + 1);
  }
  return FuzzyVector(std::move(lattice), std::move(index), std::move(values));
}

bool FuzzyVector::leq(const FuzzyVector& other) const {
  if (!(index_ == other.index_)) throw PreconditionError("index-set mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!lattice_->leq(values_[i], other.values_[i])) return false;
  return true;
}

std::string FuzzyVector::str() const { return format_values(values_, *lattice_); }

bool operator==(const FuzzyVector& a, const FuzzyVector& b) {
  return a.index_ == b.index_ && a.values_ == b.values_ && same_lattice(a.lattice_, b.lattice_);
}

std::string format_values(const Values& v, const LatticeSpec& A) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += A.label_str(v[i]);
  }
  return out;
}

std::string format_tuple(const Values& v, const LatticeSpec& A) {
  return "(" + format_values(v, A) + ")";
}

}  // namespace galois_kit
