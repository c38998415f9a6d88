#include "polydom/textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace polydom {

namespace {

// Recursive-descent parser over a byte cursor.
class PolyParser {
 public:
  PolyParser(std::string_view text, const PolynomialRing& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial result = ring_.zero();
    skip_ws();
    if (at_end()) {
      throw ParseError("empty polynomial text", pos_);
    }
    bool negative = consume_sign();
    for (;;) {
      parse_term(result, negative);
      skip_ws();
      if (at_end()) {
        break;
      }
      if (peek() == '+') {
        ++pos_;
        negative = false;
      } else if (peek() == '-') {
        ++pos_;
        negative = true;
      } else {
        throw ParseError(std::string("expected '+' or '-', found '") + peek() + "'", pos_);
      }
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  bool consume_sign() {
    skip_ws();
    if (!at_end() && peek() == '-') {
      ++pos_;
      return true;
    }
    if (!at_end() && peek() == '+') {
      ++pos_;
    }
    return false;
  }

  // term := coefficient | coefficient '*' monomial | monomial
  void parse_term(Polynomial& accum, bool negative) {
    skip_ws();
    if (at_end()) {
      throw ParseError("expected a term", pos_);
    }
    const CoefficientDomain& dom = ring_.domain();
    Coef coef = dom.one();
    bool saw_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = dom.from_integer(parse_integer());
      saw_coef = true;
    } else if (peek() == '[') {
      coef = parse_matrix();
      saw_coef = true;
    }
    if (negative) {
      coef = dom.neg(coef);
    }

    ExpVec mono = ExpVec::zero(ring_.arity());
    bool saw_mono = false;
    if (saw_coef) {
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        mono = parse_monomial();
        saw_mono = true;
      }
    } else {
      mono = parse_monomial();
      saw_mono = true;
    }
    (void)saw_mono;
    accum = ring_.add_monomial(accum, mono, coef);
  }

  // monomial := factor ('*' factor)*
  ExpVec parse_monomial() {
    ExpVec mono = parse_factor();
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') {
        return mono;
      }
      ++pos_;
      mono = mono + parse_factor();
    }
  }

  // factor := identifier ['^' positive-integer]
  ExpVec parse_factor() {
    skip_ws();
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      throw ParseError("expected a variable name", pos_);
    }
    const std::size_t start = pos_;
    while (!at_end() &&
           (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      ++pos_;
    }
    const std::string name(text_.substr(start, pos_ - start));
    auto index = ring_.base().index_of(name);
    if (!index) {
      throw ParseError("unknown variable '" + name + "'", start);
    }
    unsigned exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      exponent = parse_exponent();
    }
    std::vector<unsigned> exps(ring_.arity(), 0u);
    exps[*index] = exponent;
    return ExpVec(std::move(exps));
  }

  unsigned parse_exponent() {
    skip_ws();
    const std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("malformed exponent", pos_);
    }
    unsigned long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned long>(peek() - '0');
      if (value > 1000000) {
        throw ParseError("exponent too large", start);
      }
      ++pos_;
    }
    if (value == 0) {
      throw ParseError("exponent must be a positive integer", start);
    }
    return static_cast<unsigned>(value);
  }

  mpz_class parse_integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError("expected an integer", pos_);
    }
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Rational parse_rational_entry() {
    skip_ws();
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
    }
    mpz_class numer = parse_integer();
    mpz_class denom = 1;
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      const std::size_t dstart = pos_;
      denom = parse_integer();
      if (denom == 0) {
        throw ParseError("zero denominator", dstart);
      }
    }
    Rational value(negative ? mpz_class(-numer) : numer, denom);
    value.canonicalize();
    return value;
  }

  Coef parse_matrix() {
    const std::size_t open = pos_;
    const auto* mat_domain = dynamic_cast<const MatrixDomain*>(&ring_.domain());
    if (mat_domain == nullptr) {
      throw ParseError("matrix literal in a scalar coefficient domain", open);
    }
    ++pos_;  // '['
    std::vector<std::vector<Rational>> rows;
    for (;;) {
      std::vector<Rational> row;
      row.push_back(parse_rational_entry());
      skip_ws();
      while (!at_end() && peek() == ',') {
        ++pos_;
        row.push_back(parse_rational_entry());
        skip_ws();
      }
      rows.push_back(std::move(row));
      if (at_end()) {
        throw ParseError("unterminated matrix literal", open);
      }
      if (peek() == ';') {
        ++pos_;
        continue;
      }
      if (peek() == ']') {
        ++pos_;
        break;
      }
      throw ParseError(std::string("expected ',', ';' or ']', found '") + peek() + "'", pos_);
    }
    const std::size_t order = mat_domain->order();
    if (rows.size() != order) {
      throw ParseError("matrix literal has " + std::to_string(rows.size()) + " rows, expected " +
                           std::to_string(order),
                       open);
    }
    RatMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) {
      if (rows[i].size() != order) {
        throw ParseError("matrix row has " + std::to_string(rows[i].size()) +
                             " entries, expected " + std::to_string(order),
                         open);
      }
      for (std::size_t j = 0; j < order; ++j) {
        m.at(i, j) = rows[i][j];
      }
    }
    return Coef(std::move(m));
  }

  std::string_view text_;
  const PolynomialRing& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolynomialRing& ring) {
  return PolyParser(text, ring).parse();
}

std::string render_polynomial(const Polynomial& p) {
  if (p.is_null()) {
    return "0";
  }
  const PolynomialRing ring = p.ring();
  const CoefficientDomain& dom = ring.domain();
  std::string out;
  for (std::size_t i = p.term_count(); i >= 1; --i) {
    Coef c = p.coef_at(i);
    const bool negative = dom.negative(c);
    if (negative) {
      c = dom.neg(c);
    }
    const ExpVec mono = p.monomial_at(i);
    std::string piece;
    if (mono.is_zero()) {
      piece = dom.render(c);
    } else if (dom.is_one(c)) {
      piece = to_string(mono, ring.base());
    } else {
      piece = dom.render(c) + "*" + to_string(mono, ring.base());
    }
    if (out.empty()) {
      out = negative ? "-" + piece : piece;
    } else {
      out += negative ? " - " : " + ";
      out += piece;
    }
  }
  return out;
}

PolynomialSet set_to_internal(const PolynomialRing& ring, const std::vector<std::string>& texts) {
  PolynomialSet out;
  out.reserve(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      out.push_back(parse_polynomial(texts[i], ring));
    } catch (const ParseError& e) {
      throw ParseError("polynomial " + std::to_string(i + 1) + ": " + e.what(), e.offset());
    }
  }
  return out;
}

std::vector<std::string> set_to_external(const PolynomialSet& polys) {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const auto& p : polys) {
    out.push_back(render_polynomial(p));
  }
  return out;
}

namespace {

std::string strip(std::string line) {
  const auto comment = line.find('#');
  if (comment != std::string::npos) {
    line.erase(comment);
  }
  const auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = strip(item);
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

}  // namespace

Problem read_problem(std::istream& in, Representation rep) {
  std::optional<std::vector<std::string>> vars;
  std::optional<std::string> descriptor;
  std::vector<std::pair<std::size_t, std::string>> body;

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty()) {
      continue;
    }
    if (line.starts_with("vars:")) {
      if (vars) {
        throw FormatError("line " + std::to_string(lineno) + ": duplicate vars header");
      }
      vars = split_csv(line.substr(5));
      continue;
    }
    if (line.starts_with("domain:")) {
      if (descriptor) {
        throw FormatError("line " + std::to_string(lineno) + ": duplicate domain header");
      }
      descriptor = strip(line.substr(7));
      continue;
    }
    // Both headers must precede the first polynomial line.
    if (!vars || !descriptor) {
      throw FormatError("line " + std::to_string(lineno) +
                        ": polynomial before the vars/domain headers");
    }
    body.emplace_back(lineno, std::move(line));
  }

  if (!vars || vars->empty()) {
    throw FormatError("missing or empty 'vars:' header");
  }
  if (!descriptor || descriptor->empty()) {
    throw FormatError("missing 'domain:' header");
  }

  std::shared_ptr<const CoefficientDomain> domain;
  try {
    domain = domain_from_descriptor(*descriptor);
  } catch (const Error& e) {
    throw FormatError(std::string("domain header: ") + e.what());
  }
  VariableBase base(*vars);
  PolynomialRing ring(domain, base, rep);

  PolynomialSet polys;
  std::vector<std::string> texts;
  for (const auto& [line_no, text] : body) {
    try {
      polys.push_back(parse_polynomial(text, ring));
    } catch (const ParseError& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
    texts.push_back(text);
  }
  return Problem{std::move(base), std::move(domain), std::move(ring), std::move(polys),
                 std::move(texts)};
}

Problem read_problem_file(const std::filesystem::path& path, Representation rep) {
  std::ifstream in(path);
  if (!in) {
    throw FormatError("cannot open problem file: " + path.string());
  }
  return read_problem(in, rep);
}

std::string write_report_text(const RunReport& report) {
  std::ostringstream out;
  out << "vars: ";
  for (std::size_t i = 0; i < report.vars.size(); ++i) {
    out << (i ? "," : "") << report.vars[i];
  }
  out << "\n";
  out << "domain: " << report.domain << "\n";
  out << "input:\n";
  for (const auto& p : report.input) {
    out << "  " << p << "\n";
  }
  out << "basis:\n";
  for (const auto& p : report.basis) {
    out << "  " << p << "\n";
  }
  if (report.reduced_basis) {
    out << "reduced basis:\n";
    for (const auto& p : *report.reduced_basis) {
      out << "  " << p << "\n";
    }
  }
  out << "spoly_count: " << report.spoly_count << "\n";
  out << "reduction_steps: " << report.reduction_steps << "\n";
  out << "elapsed_ms: " << report.elapsed_ms << "\n";
  return out.str();
}

std::string write_report_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["vars"] = report.vars;
  j["domain"] = report.domain;
  j["input"] = report.input;
  j["basis"] = report.basis;
  if (report.reduced_basis) {
    j["reduced_basis"] = *report.reduced_basis;
  } else {
    j["reduced_basis"] = nullptr;
  }
  j["spoly_count"] = report.spoly_count;
  j["reduction_steps"] = report.reduction_steps;
  j["elapsed_ms"] = report.elapsed_ms;
  return j.dump(2) + "\n";
}

}  // namespace polydom
