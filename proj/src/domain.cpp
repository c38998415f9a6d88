#include "polydom/domain.hpp"

#include <charconv>

namespace polydom {

Coef CoefficientDomain::exact_div(const Coef&, const Coef&) const {
  throw UnsupportedOpError(descriptor() + " does not support exact division");
}

Coef CoefficientDomain::quotient(const Coef&, const Coef&) const {
  throw UnsupportedOpError(descriptor() + " does not support quotient");
}

Coef CoefficientDomain::mod(const Coef&, const Coef&) const {
  throw UnsupportedOpError(descriptor() + " does not support mod");
}

Coef CoefficientDomain::gcd(const Coef&, const Coef&) const {
  throw UnsupportedOpError(descriptor() + " does not support gcd");
}

Coef CoefficientDomain::lcm(const Coef&, const Coef&) const {
  throw UnsupportedOpError(descriptor() + " does not support lcm");
}

namespace {

long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  const auto span = static_cast<unsigned long long>(hi - lo + 1);
  return lo + static_cast<long long>(rng() % span);
}

}  // namespace

// --- IntegerDomain ---------------------------------------------------------

Coef IntegerDomain::add(const Coef& a, const Coef& b) const {
  return Coef(mpz_class(a.integer() + b.integer()));
}

Coef IntegerDomain::sub(const Coef& a, const Coef& b) const {
  return Coef(mpz_class(a.integer() - b.integer()));
}

Coef IntegerDomain::neg(const Coef& a) const { return Coef(mpz_class(-a.integer())); }

Coef IntegerDomain::mul(const Coef& a, const Coef& b) const {
  return Coef(mpz_class(a.integer() * b.integer()));
}

bool IntegerDomain::eq(const Coef& a, const Coef& b) const {
  return a.integer() == b.integer();
}

Coef IntegerDomain::exact_div(const Coef& a, const Coef& b) const {
  if (b.integer() == 0) {
    throw DivisionByZeroError("integer division by zero");
  }
  if (!mpz_divisible_p(a.integer().get_mpz_t(), b.integer().get_mpz_t())) {
    throw InexactDivisionError(a.integer().get_str() + " is not divisible by " +
                               b.integer().get_str());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.integer().get_mpz_t(), b.integer().get_mpz_t());
  return Coef(q);
}

Coef IntegerDomain::quotient(const Coef& a, const Coef& b) const {
  if (b.integer() == 0) {
    throw DivisionByZeroError("integer division by zero");
  }
  mpz_class q;
  // Floor division pairs with mod below: a = b*q + r.
  mpz_fdiv_q(q.get_mpz_t(), a.integer().get_mpz_t(), b.integer().get_mpz_t());
  return Coef(q);
}

Coef IntegerDomain::mod(const Coef& a, const Coef& b) const {
  if (b.integer() == 0) {
    throw DivisionByZeroError("integer division by zero");
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.integer().get_mpz_t(), b.integer().get_mpz_t());
  return Coef(r);
}

Coef IntegerDomain::gcd(const Coef& a, const Coef& b) const {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.integer().get_mpz_t(), b.integer().get_mpz_t());
  return Coef(g);
}

Coef IntegerDomain::lcm(const Coef& a, const Coef& b) const {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.integer().get_mpz_t(), b.integer().get_mpz_t());
  return Coef(l);
}

std::string IntegerDomain::render(const Coef& c) const { return c.integer().get_str(); }

Coef IntegerDomain::random_element(std::mt19937_64& rng) const {
  return Coef(static_cast<long>(draw(rng, -50, 50)));
}

// --- ModularDomain ---------------------------------------------------------

namespace {

bool trial_division_prime(unsigned long n) {
  if (n < 2) {
    return false;
  }
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

ModularDomain::ModularDomain(unsigned long modulus)
    : modulus_(modulus), prime_(trial_division_prime(modulus)) {
  if (modulus < 2) {
    throw InvalidModulusError("modulus must be >= 2, got " + std::to_string(modulus));
  }
}

Coef ModularDomain::from_integer(const mpz_class& v) const {
  mpz_class r;
  mpz_class n(static_cast<unsigned long>(modulus_));
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  return Coef(r);
}

Coef ModularDomain::add(const Coef& a, const Coef& b) const {
  if (small()) {
    return Coef(mpz_class((residue(a) + residue(b)) % modulus_));
  }
  return from_integer(a.integer() + b.integer());
}

Coef ModularDomain::sub(const Coef& a, const Coef& b) const {
  // Mod[n + n1 - n2, n]
  if (small()) {
    return Coef(mpz_class((modulus_ + residue(a) - residue(b)) % modulus_));
  }
  return from_integer(mpz_class(modulus_) + a.integer() - b.integer());
}

Coef ModularDomain::neg(const Coef& a) const {
  if (small()) {
    return Coef(mpz_class((modulus_ - residue(a)) % modulus_));
  }
  return from_integer(mpz_class(modulus_) - a.integer());
}

Coef ModularDomain::mul(const Coef& a, const Coef& b) const {
  if (small()) {
    return Coef(mpz_class((residue(a) * residue(b)) % modulus_));
  }
  return from_integer(a.integer() * b.integer());
}

bool ModularDomain::eq(const Coef& a, const Coef& b) const {
  return a.integer() == b.integer();
}

Coef ModularDomain::exact_div(const Coef& a, const Coef& b) const {
  return quotient(a, b);
}

Coef ModularDomain::quotient(const Coef& a, const Coef& b) const {
  if (small()) {
    // The paper's method on machine words: exhaustive search for x with
    // b*x = a (mod n).
    const unsigned long bv = residue(b);
    if (bv == 0) {
      throw DivisionByZeroError("modular division by zero");
    }
    const unsigned long av = residue(a);
    for (unsigned long x = 0; x < modulus_; ++x) {
      if ((bv * x) % modulus_ == av) {
        return Coef(mpz_class(x));
      }
    }
    throw DivisionByZeroError("no modular quotient of " + std::to_string(av) + " by " +
                              std::to_string(bv) + " mod " + std::to_string(modulus_));
  }
  return Coef(modular_quotient(a.integer(), b.integer(), mpz_class(modulus_)));
}

Coef ModularDomain::mod(const Coef& a, const Coef& b) const {
  if (small()) {
    const unsigned long c = residue(quotient(a, b).integer());
    const unsigned long prod = (residue(b) * c) % modulus_;
    return Coef(mpz_class((modulus_ + residue(a) - prod) % modulus_));
  }
  return Coef(modular_mod(a.integer(), b.integer(), mpz_class(modulus_)));
}

Coef ModularDomain::gcd(const Coef& a, const Coef& b) const {
  // Over a prime modulus the first remainder of an invertible divisor is
  // already zero, so the Euclid loop returns its first argument.
  if (prime_ && !is_zero(b)) {
    return a;
  }
  return Coef(modular_gcd(a.integer(), b.integer(), mpz_class(modulus_)));
}

Coef ModularDomain::lcm(const Coef& a, const Coef& b) const {
  if (small()) {
    return quotient(mul(a, b), gcd(a, b));
  }
  return Coef(modular_lcm(a.integer(), b.integer(), mpz_class(modulus_)));
}

std::string ModularDomain::render(const Coef& c) const { return c.integer().get_str(); }

Coef ModularDomain::random_element(std::mt19937_64& rng) const {
  return Coef(static_cast<long>(rng() % modulus_));
}

mpz_class modular_quotient(const mpz_class& a, const mpz_class& b, const mpz_class& n) {
  if (b == 0) {
    throw DivisionByZeroError("modular division by zero");
  }
  for (mpz_class x = 0; x < n; ++x) {
    if (mpz_class(b * x) % n == a) {
      return x;
    }
  }
  throw DivisionByZeroError("no modular quotient of " + a.get_str() + " by " + b.get_str() +
                            " mod " + n.get_str());
}

mpz_class modular_mod(const mpz_class& a, const mpz_class& b, const mpz_class& n) {
  mpz_class c = modular_quotient(a, b, n);
  mpz_class r;
  mpz_class t(a - b * c);
  mpz_fdiv_r(r.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
  return r;
}

mpz_class modular_gcd(const mpz_class& a, const mpz_class& b, const mpz_class& n) {
  // Euclid loop over the modular mod operation. Over a prime modulus the
  // first remainder of an invertible divisor is already zero, so this
  // returns its first argument: a unit multiple of the true gcd.
  mpz_class x = a;
  mpz_class y = b;
  mpz_class r = modular_mod(x, y, n);
  while (r != 0) {
    x = y;
    y = r;
    r = modular_mod(x, y, n);
  }
  return x;
}

mpz_class modular_lcm(const mpz_class& a, const mpz_class& b, const mpz_class& n) {
  mpz_class product;
  mpz_class t(a * b);
  mpz_fdiv_r(product.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
  return modular_quotient(product, modular_gcd(a, b, n), n);
}

// --- MatrixDomain ----------------------------------------------------------

MatrixDomain::MatrixDomain(std::size_t order) : order_(order) {
  if (order < 1) {
    throw Error("matrix order must be >= 1");
  }
}

const RatMatrix& MatrixDomain::entries(const Coef& c) const {
  const RatMatrix& m = c.matrix();
  if (m.order() != order_) {
    throw Error("matrix coefficient order mismatch");
  }
  return m;
}

Coef MatrixDomain::from_integer(const mpz_class& v) const {
  RatMatrix m(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    m.at(i, i) = Rational(v);
  }
  return Coef(std::move(m));
}

Coef MatrixDomain::add(const Coef& a, const Coef& b) const {
  return Coef(entries(a) + entries(b));
}

Coef MatrixDomain::sub(const Coef& a, const Coef& b) const {
  return Coef(entries(a) - entries(b));
}

Coef MatrixDomain::neg(const Coef& a) const { return Coef(-entries(a)); }

Coef MatrixDomain::mul(const Coef& a, const Coef& b) const {
  return Coef(entries(a) * entries(b));
}

bool MatrixDomain::eq(const Coef& a, const Coef& b) const { return entries(a) == entries(b); }

Coef MatrixDomain::exact_div(const Coef& a, const Coef& b) const {
  return Coef(entries(b).inverse() * entries(a));
}

Coef MatrixDomain::inverse(const Coef& a) const { return Coef(entries(a).inverse()); }

Coef MatrixDomain::transpose(const Coef& a) const { return Coef(entries(a).transpose()); }

Rational MatrixDomain::determinant(const Coef& a) const { return entries(a).determinant(); }

std::string MatrixDomain::render(const Coef& c) const {
  const RatMatrix& m = entries(c);
  std::string out = "[";
  for (std::size_t i = 0; i < order_; ++i) {
    if (i > 0) {
      out += ';';
    }
    for (std::size_t j = 0; j < order_; ++j) {
      if (j > 0) {
        out += ',';
      }
      out += m.at(i, j).get_str();
    }
  }
  out += ']';
  return out;
}

Coef MatrixDomain::random_element(std::mt19937_64& rng) const {
  RatMatrix m(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      m.at(i, j) = Rational(static_cast<long>(draw(rng, -9, 9)));
    }
  }
  return Coef(std::move(m));
}

// --- Factories --------------------------------------------------------------

std::shared_ptr<const CoefficientDomain> make_integer_domain() {
  return std::make_shared<IntegerDomain>();
}

std::shared_ptr<const CoefficientDomain> make_modular_domain(unsigned long n) {
  return std::make_shared<ModularDomain>(n);
}

std::shared_ptr<const CoefficientDomain> make_matrix_domain(std::size_t order) {
  return std::make_shared<MatrixDomain>(order);
}

namespace {

unsigned long parse_positive(std::string_view text, std::string_view what) {
  unsigned long value = 0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::shared_ptr<const CoefficientDomain> domain_from_descriptor(std::string_view descriptor) {
  if (descriptor == "z") {
    return make_integer_domain();
  }
  if (descriptor.starts_with("zmod:")) {
    return make_modular_domain(parse_positive(descriptor.substr(5), "modulus"));
  }
  if (descriptor.starts_with("mat:")) {
    return make_matrix_domain(parse_positive(descriptor.substr(4), "matrix order"));
  }
  throw Error("unknown domain descriptor: '" + std::string(descriptor) +
              "' (expected z, zmod:<n> or mat:<n>)");
}

}  // namespace polydom
