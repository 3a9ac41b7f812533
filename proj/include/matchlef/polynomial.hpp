#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "matchlef/combinatorics.hpp"
#include "matchlef/numeric.hpp"

namespace matchlef {

enum class VariableFamily : std::uint8_t { vertex, edge };

/// A variable x_i (vertex family) or x_e (edge family). Vertex variables keep
/// lo == hi. Within a family variables are ordered by (lo, hi).
struct Variable {
  VariableFamily family = VariableFamily::vertex;
  Vertex lo = 0;
  Vertex hi = 0;

  static Variable vertex(Vertex v) { return {VariableFamily::vertex, v, v}; }
  static Variable edge(const Edge& e) { return {VariableFamily::edge, e.lo, e.hi}; }

  Edge as_edge() const { return Edge{lo, hi}; }

  auto operator<=>(const Variable&) const = default;
};

std::string to_string(const Variable& v);

/// Sparse power product; exponents are positive and sorted by variable.
class Monomial {
 public:
  using Factor = std::pair<Variable, unsigned>;

  Monomial() = default;
  /// Accepts factors in any order; merges repeats and drops zero exponents.
  explicit Monomial(std::vector<Factor> factors);

  static Monomial of(const Variable& v, unsigned exponent = 1);
  static Monomial of_matching(const Matching& m);
  static Monomial of_subset(std::span<const Vertex> s);

  const std::vector<Factor>& factors() const { return factors_; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  unsigned exponent(const Variable& v) const;
  std::optional<VariableFamily> family() const;
  bool square_free() const;

  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  /// prod b_v! / (b_v - a_v)! for this = a dividing b.
  Integer falling_factor(const Monomial& target) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

/// Graded lexicographic order, x[1,2] > x[1,3] > ... ; strict "greater".
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

std::string to_string(const Monomial& m);

/// Sparse polynomial with exact rational coefficients. Terms iterate in
/// descending graded-lex order; no zero coefficient is ever stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  static Polynomial constant(const Rational& c);
  static Polynomial variable(const Variable& v);
  static Polynomial term(const Monomial& m, const Rational& c = 1);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Degree of the leading term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Unset for constants (which combine with either family).
  std::optional<VariableFamily> family() const;
  std::vector<Variable> variables() const;
  Rational coefficient(const Monomial& m) const;

  /// Accumulates c * m, erasing the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator*=(const Rational& c);

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

 private:
  TermMap terms_;
};

/// Throws std::invalid_argument when p and q carry different variable families.
void require_same_family(const Polynomial& p, const Polynomial& q);

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial power(const Polynomial& p, unsigned n);

/// op(d) applied to target: each x_v in op becomes the partial derivative in x_v.
Polynomial apply_diff(const Polynomial& op, const Polynomial& target);
Polynomial apply_diff(const Monomial& op, const Polynomial& target);

using Point = std::map<Variable, Rational>;

/// Throws std::invalid_argument when a support variable has no value.
Rational evaluate(const Polynomial& p, const Point& point);
Rational eval_all_ones(const Polynomial& p);

/// "x[1,2]x[3,4] + 2*x[1,3]^2 - x[5]"; zero renders as "0".
std::string to_string(const Polynomial& p);

/// {"terms":[{"coefficient":"1","factors":[{"variable":[1,2],"exponent":1}]}]}
nlohmann::ordered_json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::ordered_json& j);

}  // namespace matchlef
