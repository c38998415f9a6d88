#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polydom/poly.hpp"

namespace polydom {

using PolynomialSet = std::vector<Polynomial>;

/// Parses polynomial text over the ring's base and coefficient domain.
///
/// Grammar:
///   polynomial  := [sign] term (('+'|'-') term)*
///   term        := coefficient | coefficient '*' monomial | monomial
///   monomial    := factor ('*' factor)*
///   factor      := identifier ['^' positive-integer]
///   coefficient := integer                          (z, zmod domains)
///                | '[' row (';' row)* ']'           (mat domains)
///   row         := entry (',' entry)*               entries integer or p/q
///
/// Whitespace-insensitive; repeated variables in a monomial accumulate
/// exponents; modular literals are reduced mod n; unary minus binds to the
/// whole term. Errors carry the byte offset.
Polynomial parse_polynomial(std::string_view text, const PolynomialRing& ring);

/// Canonical rendering: terms in descending lex order joined by " + " / " - ",
/// coefficient omitted when it is the domain one; the null polynomial is "0".
/// parse(render(p)) == p and render(parse(t)) is a fixed point.
std::string render_polynomial(const Polynomial& p);

/// Element-wise parse / render preserving order. Parse failures are rewrapped
/// with the 1-based element index.
PolynomialSet set_to_internal(const PolynomialRing& ring, const std::vector<std::string>& texts);
std::vector<std::string> set_to_external(const PolynomialSet& polys);

/// A parsed problem file: header (variable base + domain descriptor) and one
/// polynomial per non-empty line; '#' starts a comment.
struct Problem {
  VariableBase base;
  std::shared_ptr<const CoefficientDomain> domain;
  PolynomialRing ring;
  PolynomialSet polynomials;
  std::vector<std::string> input_texts;  // as written, for report echoes
};

Problem read_problem(std::istream& in, Representation rep);
Problem read_problem_file(const std::filesystem::path& path, Representation rep);

/// Result of a groebner-style run, serialized as text or as JSON with the
/// stable field order vars, domain, input, basis, reduced_basis, spoly_count,
/// reduction_steps, elapsed_ms.
struct RunReport {
  std::vector<std::string> vars;
  std::string domain;
  std::vector<std::string> input;
  std::vector<std::string> basis;
  std::optional<std::vector<std::string>> reduced_basis;
  std::size_t spoly_count = 0;
  std::size_t reduction_steps = 0;
  double elapsed_ms = 0.0;
};

std::string write_report_text(const RunReport& report);
std::string write_report_json(const RunReport& report);

}  // namespace polydom
