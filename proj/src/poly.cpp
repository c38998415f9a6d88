#include "polydom/poly.hpp"

#include <algorithm>

namespace polydom {

std::string to_string(Representation rep) {
  return rep == Representation::SortedPairs ? "sorted_pairs" : "keyed_table";
}

Representation representation_from_name(std::string_view name) {
  if (name == "sorted_pairs") {
    return Representation::SortedPairs;
  }
  if (name == "keyed_table") {
    return Representation::KeyedTable;
  }
  throw Error("unknown representation: '" + std::string(name) +
              "' (expected sorted_pairs or keyed_table)");
}

namespace detail {

std::size_t ExpVecHash::operator()(const ExpVec& v) const {
  std::size_t h = v.is_sentinel() ? 0x9e3779b97f4a7c15ull : 0;
  for (std::size_t i = 0; i < v.arity(); ++i) {
    h ^= std::hash<unsigned>()(v[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace detail

// --- Polynomial --------------------------------------------------------------

Polynomial::Polynomial(std::shared_ptr<const detail::RingState> ring) : ring_(std::move(ring)) {
  if (ring_->rep == Representation::SortedPairs) {
    monos_.push_back(ExpVec::sentinel(ring_->base.arity()));
  }
}

bool Polynomial::is_null() const { return term_count() == 0; }

std::size_t Polynomial::term_count() const {
  return ring_->rep == Representation::SortedPairs ? monos_.size() - 1 : keys_.size();
}

ExpVec Polynomial::monomial_at(std::size_t i) const {
  if (i == 0) {
    throw Error("monomial index is 1-based");
  }
  const std::size_t n = term_count();
  if (i > n) {
    return ExpVec::sentinel(ring_->base.arity());
  }
  return ring_->rep == Representation::SortedPairs ? monos_[i - 1] : keys_[i - 1];
}

Coef Polynomial::coef_at(std::size_t i) const {
  if (i == 0) {
    throw Error("coefficient index is 1-based");
  }
  if (i > term_count()) {
    return ring_->domain->zero();
  }
  if (ring_->rep == Representation::SortedPairs) {
    return coefs_[i - 1];
  }
  return table_.at(keys_[i - 1]);
}

std::size_t Polynomial::index_of(const ExpVec& v) const {
  const std::size_t n = term_count();
  for (std::size_t i = 1; i <= n; ++i) {
    if (monomial_at(i) == v) {
      return i;
    }
  }
  throw NotFoundError("monomial not present in polynomial");
}

ExpVec Polynomial::leading_monomial() const {
  if (is_null()) {
    throw EmptyPolynomialError("null polynomial has no leading monomial");
  }
  return monomial_at(term_count());
}

Coef Polynomial::leading_coef() const {
  if (is_null()) {
    throw EmptyPolynomialError("null polynomial has no leading coefficient");
  }
  return coef_at(term_count());
}

PolynomialRing Polynomial::ring() const { return PolynomialRing(ring_); }

const std::vector<ExpVec>& Polynomial::monomial_sequence() const {
  return ring_->rep == Representation::SortedPairs ? monos_ : keys_;
}

void Polynomial::add_term(const ExpVec& v, const Coef& c) {
  const CoefficientDomain& domain = *ring_->domain;
  if (domain.is_zero(c)) {
    return;
  }
  auto less = [](const ExpVec& a, const ExpVec& b) { return compare(a, b) < 0; };
  if (ring_->rep == Representation::SortedPairs) {
    auto pos = std::lower_bound(monos_.begin(), monos_.end(), v, less);
    const auto idx = static_cast<std::size_t>(pos - monos_.begin());
    if (pos != monos_.end() && *pos == v) {
      Coef combined = domain.add(coefs_[idx], c);
      if (domain.is_zero(combined)) {
        monos_.erase(pos);
        coefs_.erase(coefs_.begin() + static_cast<std::ptrdiff_t>(idx));
      } else {
        coefs_[idx] = std::move(combined);
      }
    } else {
      monos_.insert(pos, v);
      coefs_.insert(coefs_.begin() + static_cast<std::ptrdiff_t>(idx), c);
    }
    return;
  }
  auto found = table_.find(v);
  if (found != table_.end()) {
    Coef combined = domain.add(found->second, c);
    if (domain.is_zero(combined)) {
      table_.erase(found);
      keys_.erase(std::lower_bound(keys_.begin(), keys_.end(), v, less));
    } else {
      found->second = std::move(combined);
    }
  } else {
    table_.emplace(v, c);
    keys_.insert(std::lower_bound(keys_.begin(), keys_.end(), v, less), v);
  }
}

void Polynomial::append_term(ExpVec v, Coef c) {
  if (ring_->rep == Representation::SortedPairs) {
    monos_.insert(monos_.end() - 1, std::move(v));
    coefs_.push_back(std::move(c));
  } else {
    keys_.push_back(v);
    table_.emplace(std::move(v), std::move(c));
  }
}

// --- PolynomialRing ----------------------------------------------------------

PolynomialRing::PolynomialRing(std::shared_ptr<const CoefficientDomain> domain, VariableBase base,
                               Representation rep)
    : state_(std::make_shared<detail::RingState>(
          detail::RingState{std::move(domain), std::move(base), rep})) {
  if (!state_->domain) {
    throw Error("polynomial ring needs a coefficient domain");
  }
}

bool PolynomialRing::compatible(const PolynomialRing& other) const {
  if (state_ == other.state_) {
    return true;
  }
  return state_->rep == other.state_->rep && state_->base == other.state_->base &&
         state_->domain->descriptor() == other.state_->domain->descriptor();
}

const Polynomial& PolynomialRing::check_attached(const Polynomial& p) const {
  if (!compatible(p.ring())) {
    throw RingError("polynomial belongs to an incompatible ring (" +
                    p.ring().domain().descriptor() + " vs " + domain().descriptor() + ")");
  }
  return p;
}

void PolynomialRing::check_arity(const ExpVec& v) const {
  if (v.arity() != arity()) {
    throw ArityError("exponent vector arity " + std::to_string(v.arity()) +
                     " does not match ring arity " + std::to_string(arity()));
  }
}

Polynomial PolynomialRing::zero() const { return Polynomial(state_); }

Polynomial PolynomialRing::monomial(const ExpVec& v, const Coef& c) const {
  return add_monomial(zero(), v, c);
}

Polynomial PolynomialRing::copy(const Polynomial& p) const { return check_attached(p); }

Polynomial PolynomialRing::from_ascending_terms(std::vector<ExpVec> monomials,
                                                std::vector<Coef> coefs) const {
  if (monomials.size() != coefs.size()) {
    throw Error("monomial and coefficient sequences differ in length");
  }
  const CoefficientDomain& dom = domain();
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    check_arity(monomials[i]);
    if (monomials[i].is_sentinel()) {
      throw Error("sentinel in term sequence");
    }
    if (i > 0 && compare(monomials[i - 1], monomials[i]) >= 0) {
      throw Error("term sequence is not strictly ascending");
    }
    if (dom.is_zero(coefs[i])) {
      throw Error("zero coefficient in term sequence");
    }
  }
  Polynomial out = zero();
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    out.append_term(std::move(monomials[i]), std::move(coefs[i]));
  }
  return out;
}

Polynomial PolynomialRing::add_monomial(const Polynomial& p, const ExpVec& v,
                                        const Coef& c) const {
  check_attached(p);
  check_arity(v);
  if (v.is_sentinel()) {
    throw Error("cannot add a sentinel monomial");
  }
  Polynomial out = p;
  out.add_term(v, c);
  return out;
}

Polynomial PolynomialRing::add(const Polynomial& a, const Polynomial& b) const {
  check_attached(a);
  check_attached(b);
  const CoefficientDomain& dom = domain();
  Polynomial out = zero();
  const std::size_t n1 = a.term_count();
  const std::size_t n2 = b.term_count();
  std::size_t i = 1;
  std::size_t j = 1;
  // Sentinel-terminated merge: monomial_at past the end yields the sentinel,
  // which compares above everything.
  while (i <= n1 || j <= n2) {
    const ExpVec v1 = a.monomial_at(i);
    const ExpVec v2 = b.monomial_at(j);
    const int rel = compare(v1, v2);
    if (rel == 0) {
      Coef combined = dom.add(a.coef_at(i), b.coef_at(j));
      if (!dom.is_zero(combined)) {
        out.append_term(v1, combined);
      }
      ++i;
      ++j;
    } else if (rel < 0) {
      out.append_term(v1, a.coef_at(i));
      ++i;
    } else {
      out.append_term(v2, b.coef_at(j));
      ++j;
    }
  }
  return out;
}

Polynomial PolynomialRing::sub(const Polynomial& a, const Polynomial& b) const {
  return add(a, scalar_mul(domain().from_int(-1), b));
}

Polynomial PolynomialRing::mul(const Polynomial& a, const Polynomial& b) const {
  check_attached(a);
  check_attached(b);
  const CoefficientDomain& dom = domain();
  Polynomial out = zero();
  const std::size_t n1 = a.term_count();
  const std::size_t n2 = b.term_count();
  for (std::size_t i = 1; i <= n1; ++i) {
    const ExpVec v1 = a.monomial_at(i);
    const Coef c1 = a.coef_at(i);
    for (std::size_t j = 1; j <= n2; ++j) {
      // Coefficient product order is (a's coefficient) * (b's coefficient);
      // matrix coefficients make this order observable.
      out.add_term(v1 + b.monomial_at(j), dom.mul(c1, b.coef_at(j)));
    }
  }
  return out;
}

Polynomial PolynomialRing::scalar_mul(const Coef& c, const Polynomial& p) const {
  check_attached(p);
  const CoefficientDomain& dom = domain();
  Polynomial out = zero();
  if (dom.is_zero(c)) {
    return out;
  }
  const std::size_t n = p.term_count();
  for (std::size_t i = 1; i <= n; ++i) {
    Coef scaled = dom.mul(c, p.coef_at(i));
    if (!dom.is_zero(scaled)) {
      out.append_term(p.monomial_at(i), scaled);
    }
  }
  return out;
}

Polynomial PolynomialRing::divide_by_monomial(const Polynomial& p, const ExpVec& v,
                                              const Coef& c) const {
  check_attached(p);
  check_arity(v);
  const CoefficientDomain& dom = domain();
  if (dom.is_zero(c)) {
    throw DivisionByZeroError("monomial divisor has zero coefficient");
  }
  Polynomial out = zero();
  const std::size_t n = p.term_count();
  for (std::size_t i = 1; i <= n; ++i) {
    // operator- raises NonDivisibleError, exact_div raises InexactDivisionError.
    out.append_term(p.monomial_at(i) - v, dom.exact_div(p.coef_at(i), c));
  }
  return out;
}

bool PolynomialRing::monomial_divides(const ExpVec& v, const Polynomial& p) const {
  check_attached(p);
  const std::size_t n = p.term_count();
  for (std::size_t i = 1; i <= n; ++i) {
    if (divides(v, p.monomial_at(i))) {
      return true;
    }
  }
  return false;
}

Polynomial PolynomialRing::convert(const Polynomial& p, Representation target) const {
  check_attached(p);
  PolynomialRing sibling(
      target == state_->rep
          ? state_
          : std::make_shared<detail::RingState>(detail::RingState{state_->domain, state_->base,
                                                                  target}));
  Polynomial out = sibling.zero();
  const std::size_t n = p.term_count();
  for (std::size_t i = 1; i <= n; ++i) {
    out.append_term(p.monomial_at(i), p.coef_at(i));
  }
  return out;
}

bool PolynomialRing::equal(const Polynomial& a, const Polynomial& b) const {
  const std::size_t n = a.term_count();
  if (n != b.term_count()) {
    return false;
  }
  const CoefficientDomain& dom = domain();
  for (std::size_t i = 1; i <= n; ++i) {
    if (!(a.monomial_at(i) == b.monomial_at(i)) || !dom.eq(a.coef_at(i), b.coef_at(i))) {
      return false;
    }
  }
  return true;
}

bool is_canonical(const Polynomial& p) {
  const detail::RingState& ring = *p.ring_;
  const CoefficientDomain& dom = *ring.domain;
  if (ring.rep == Representation::SortedPairs) {
    if (p.monos_.empty() || !p.monos_.back().is_sentinel()) {
      return false;
    }
    if (p.coefs_.size() + 1 != p.monos_.size()) {
      return false;
    }
    for (std::size_t i = 0; i + 1 < p.monos_.size(); ++i) {
      if (p.monos_[i].is_sentinel() || p.monos_[i].arity() != ring.base.arity()) {
        return false;
      }
      if (compare(p.monos_[i], p.monos_[i + 1]) >= 0) {
        return false;
      }
      if (dom.is_zero(p.coefs_[i])) {
        return false;
      }
    }
    return true;
  }
  if (p.keys_.size() != p.table_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < p.keys_.size(); ++i) {
    if (p.keys_[i].is_sentinel() || p.keys_[i].arity() != ring.base.arity()) {
      return false;
    }
    if (i + 1 < p.keys_.size() && compare(p.keys_[i], p.keys_[i + 1]) >= 0) {
      return false;
    }
    auto found = p.table_.find(p.keys_[i]);
    if (found == p.table_.end() || dom.is_zero(found->second)) {
      return false;
    }
  }
  return true;
}

}  // namespace polydom
