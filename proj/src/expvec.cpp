#include "polydom/expvec.hpp"

#include <algorithm>
#include <set>

namespace polydom {

VariableBase::VariableBase(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw Error("variable base must contain at least one identifier");
  }
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) {
      throw Error("variable names must be non-empty");
    }
    if (!seen.insert(n).second) {
      throw Error("duplicate variable name: " + n);
    }
  }
}

std::optional<std::size_t> VariableBase::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      return i;
    }
  }
  return std::nullopt;
}

PrimeTable::PrimeTable() : primes_{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31} {}

unsigned long PrimeTable::prime(std::size_t i) {
  while (i >= primes_.size()) {
    unsigned long candidate = primes_.back() + 2;
    for (;;) {
      bool is_prime = true;
      for (unsigned long p : primes_) {
        if (p * p > candidate) {
          break;
        }
        if (candidate % p == 0) {
          is_prime = false;
          break;
        }
      }
      if (is_prime) {
        break;
      }
      candidate += 2;
    }
    primes_.push_back(candidate);
  }
  return primes_[i];
}

ExpVec::ExpVec(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) {
    throw ArityError("exponent vector must have arity >= 1");
  }
}

ExpVec ExpVec::zero(std::size_t arity) {
  return ExpVec(std::vector<unsigned>(arity, 0u));
}

ExpVec ExpVec::sentinel(std::size_t arity) {
  return ExpVec(std::vector<unsigned>(arity, 0u), true);
}

const std::vector<unsigned>& ExpVec::exponents() const {
  if (sentinel_) {
    throw Error("the sentinel has no exponents");
  }
  return exps_;
}

bool ExpVec::is_zero() const {
  return !sentinel_ && std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
}

namespace {

void require_same_arity(const ExpVec& u, const ExpVec& v) {
  if (u.arity() != v.arity()) {
    throw ArityError("exponent vector arities differ: " + std::to_string(u.arity()) + " vs " +
                     std::to_string(v.arity()));
  }
}

void require_canonical(const ExpVec& u) {
  if (u.is_sentinel()) {
    throw Error("operation requires a canonical (non-sentinel) exponent vector");
  }
}

}  // namespace

int compare(const ExpVec& u, const ExpVec& v) {
  require_same_arity(u, v);
  if (u.is_sentinel() || v.is_sentinel()) {
    if (u.is_sentinel() && v.is_sentinel()) {
      return 0;
    }
    return u.is_sentinel() ? 1 : -1;
  }
  for (std::size_t i = 0; i < u.arity(); ++i) {
    if (u[i] != v[i]) {
      return u[i] < v[i] ? -1 : 1;
    }
  }
  return 0;
}

ExpVec operator+(const ExpVec& u, const ExpVec& v) {
  require_canonical(u);
  require_canonical(v);
  require_same_arity(u, v);
  std::vector<unsigned> out(u.arity());
  for (std::size_t i = 0; i < u.arity(); ++i) {
    out[i] = u[i] + v[i];
  }
  return ExpVec(std::move(out));
}

ExpVec operator-(const ExpVec& u, const ExpVec& v) {
  require_canonical(u);
  require_canonical(v);
  require_same_arity(u, v);
  std::vector<unsigned> out(u.arity());
  for (std::size_t i = 0; i < u.arity(); ++i) {
    if (v[i] > u[i]) {
      throw NonDivisibleError("exponent vector difference has a negative coordinate");
    }
    out[i] = u[i] - v[i];
  }
  return ExpVec(std::move(out));
}

ExpVec gcd(const ExpVec& u, const ExpVec& v) {
  require_canonical(u);
  require_canonical(v);
  require_same_arity(u, v);
  std::vector<unsigned> out(u.arity());
  for (std::size_t i = 0; i < u.arity(); ++i) {
    out[i] = std::min(u[i], v[i]);
  }
  return ExpVec(std::move(out));
}

ExpVec lcm(const ExpVec& u, const ExpVec& v) {
  require_canonical(u);
  require_canonical(v);
  require_same_arity(u, v);
  std::vector<unsigned> out(u.arity());
  for (std::size_t i = 0; i < u.arity(); ++i) {
    out[i] = std::max(u[i], v[i]);
  }
  return ExpVec(std::move(out));
}

bool divides(const ExpVec& u, const ExpVec& v) {
  if (u.is_sentinel() || v.is_sentinel()) {
    return false;
  }
  if (u.arity() > v.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < u.arity(); ++i) {
    if (u[i] > v[i]) {
      return false;
    }
  }
  return true;
}

bool all_positive(const ExpVec& u) {
  if (u.is_sentinel()) {
    return false;
  }
  for (std::size_t i = 0; i < u.arity(); ++i) {
    if (u[i] == 0) {
      return false;
    }
  }
  return true;
}

Integer encode(const ExpVec& u, PrimeTable& primes) {
  require_canonical(u);
  Integer product = 1;
  for (std::size_t i = 0; i < u.arity(); ++i) {
    if (u[i] == 0) {
      continue;
    }
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), primes.prime(i), u[i]);
    product *= power;
  }
  return product;
}

ExpVec decode(const Integer& value, std::size_t arity, PrimeTable& primes) {
  if (arity == 0) {
    throw ArityError("decode requires arity >= 1");
  }
  if (value < 1) {
    throw DecodeError("encoded vector must be a positive integer");
  }
  Integer rest = value;
  std::vector<unsigned> out(arity, 0u);
  for (std::size_t i = 0; i < arity && rest > 1; ++i) {
    const unsigned long p = primes.prime(i);
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      out[i] += 1;
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  if (rest != 1) {
    throw DecodeError("value has a prime factor outside the first " + std::to_string(arity) +
                      " primes");
  }
  return ExpVec(std::move(out));
}

ExpVec gcd_encoded(const ExpVec& u, const ExpVec& v, PrimeTable& primes) {
  require_same_arity(u, v);
  Integer g;
  mpz_gcd(g.get_mpz_t(), encode(u, primes).get_mpz_t(), encode(v, primes).get_mpz_t());
  return decode(g, u.arity(), primes);
}

ExpVec lcm_encoded(const ExpVec& u, const ExpVec& v, PrimeTable& primes) {
  require_same_arity(u, v);
  Integer l;
  mpz_lcm(l.get_mpz_t(), encode(u, primes).get_mpz_t(), encode(v, primes).get_mpz_t());
  return decode(l, u.arity(), primes);
}

std::string to_string(const ExpVec& u, const VariableBase& base) {
  require_canonical(u);
  if (u.arity() != base.arity()) {
    throw ArityError("exponent vector arity does not match the variable base");
  }
  std::string out;
  for (std::size_t i = 0; i < u.arity(); ++i) {
    if (u[i] == 0) {
      continue;
    }
    if (!out.empty()) {
      out += '*';
    }
    out += base.name(i);
    if (u[i] > 1) {
      out += '^';
      out += std::to_string(u[i]);
    }
  }
  return out.empty() ? "1" : out;
}

}  // namespace polydom
