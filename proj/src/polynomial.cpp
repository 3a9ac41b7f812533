#include "matchlef/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace matchlef {

std::string to_string(const Variable& v) {
  if (v.family == VariableFamily::vertex) return "x[" + std::to_string(v.lo) + "]";
  return "x[" + std::to_string(v.lo) + "," + std::to_string(v.hi) + "]";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& [var, exp] : factors) {
    if (exp == 0) continue;
    if (!factors_.empty() && factors_.back().first == var) {
      factors_.back().second += exp;
    } else {
      if (!factors_.empty() && factors_.back().first.family != var.family) {
        throw std::invalid_argument("monomial mixes vertex and edge variables");
      }
      factors_.emplace_back(var, exp);
    }
    degree_ += exp;
  }
}

Monomial Monomial::of(const Variable& v, unsigned exponent) { return Monomial({{v, exponent}}); }

Monomial Monomial::of_matching(const Matching& m) {
  std::vector<Factor> factors;
  factors.reserve(m.size());
  for (const Edge& e : m) factors.emplace_back(Variable::edge(e), 1);
  return Monomial(std::move(factors));
}

Monomial Monomial::of_subset(std::span<const Vertex> s) {
  std::vector<Factor> factors;
  factors.reserve(s.size());
  for (Vertex v : s) factors.emplace_back(Variable::vertex(v), 1);
  return Monomial(std::move(factors));
}

unsigned Monomial::exponent(const Variable& v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const Variable& var) { return f.first < var; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

std::optional<VariableFamily> Monomial::family() const {
  if (factors_.empty()) return std::nullopt;
  return factors_.front().first.family;
}

bool Monomial::square_free() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second == 1; });
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto j = other.factors_.begin();
  for (const auto& [var, exp] : factors_) {
    while (j != other.factors_.end() && j->first < var) ++j;
    if (j == other.factors_.end() || j->first != var || j->second < exp) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  auto i = factors_.begin();
  for (const auto& [var, exp] : other.factors_) {
    while (i != factors_.end() && i->first < var) ++i;
    unsigned remaining = exp;
    if (i != factors_.end() && i->first == var) remaining -= i->second;
    if (remaining > 0) {
      out.factors_.emplace_back(var, remaining);
      out.degree_ += remaining;
    }
  }
  return out;
}

Integer Monomial::falling_factor(const Monomial& target) const {
  Integer out = 1;
  for (const auto& [var, exp] : factors_) {
    const unsigned b = target.exponent(var);
    for (unsigned t = 0; t < exp; ++t) out *= (b - t);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  if (!out.factors_.empty() && out.factors_.front().first.family != out.factors_.back().first.family) {
    throw std::invalid_argument("monomial mixes vertex and edge variables");
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  // equal degree and identical prefix implies identical monomials
  return false;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [var, exp] : m.factors()) {
    out += to_string(var);
    if (exp > 1) out += "^" + std::to_string(exp);
  }
  return out;
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(const Rational& c) { return term(Monomial(), c); }

Polynomial Polynomial::variable(const Variable& v) { return term(Monomial::of(v), 1); }

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial out;
  out.add_term(m, c);
  return out;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::optional<VariableFamily> Polynomial::family() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.family();
}

std::vector<Variable> Polynomial::variables() const {
  std::vector<Variable> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.push_back(f.first);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  // callers may hand in an unreduced p/q
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

void require_same_family(const Polynomial& p, const Polynomial& q) {
  const auto a = p.family();
  const auto b = q.family();
  if (a && b && *a != *b) throw std::invalid_argument("polynomials use different variable families");
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  require_same_family(*this, q);
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  Polynomial out(p);
  out += q;
  return out;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  require_same_family(p, q);
  Polynomial out;
  for (const auto& [a, ca] : p.terms_) {
    for (const auto& [b, cb] : q.terms_) out.add_term(a * b, ca * cb);
  }
  return out;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial power(const Polynomial& p, unsigned n) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial apply_diff(const Monomial& op, const Polynomial& target) {
  if (op.family() && target.family() && *op.family() != *target.family()) {
    throw std::invalid_argument("differential operator and target use different variable families");
  }
  Polynomial out;
  for (const auto& [m, c] : target.terms()) {
    if (!op.divides(m)) continue;
    out.add_term(op.quotient_of(m), c * Rational(op.falling_factor(m)));
  }
  return out;
}

Polynomial apply_diff(const Polynomial& op, const Polynomial& target) {
  require_same_family(op, target);
  Polynomial out;
  for (const auto& [a, ca] : op.terms()) {
    for (const auto& [b, cb] : target.terms()) {
      if (!a.divides(b)) continue;
      out.add_term(a.quotient_of(b), ca * cb * Rational(a.falling_factor(b)));
    }
  }
  return out;
}

Rational evaluate(const Polynomial& p, const Point& point) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational value = c;
    for (const auto& [var, exp] : m.factors()) {
      auto it = point.find(var);
      if (it == point.end()) throw std::invalid_argument("no value assigned to " + to_string(var));
      for (unsigned t = 0; t < exp; ++t) value *= it->second;
    }
    total += value;
  }
  return total;
}

Rational eval_all_ones(const Polynomial& p) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) total += c;
  return total;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += to_decimal(magnitude);
    } else {
      if (magnitude != 1) out += to_decimal(magnitude) + "*";
      out += to_string(m);
    }
  }
  return out;
}

nlohmann::ordered_json to_json(const Polynomial& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json factors = nlohmann::ordered_json::array();
    for (const auto& [var, exp] : m.factors()) {
      nlohmann::ordered_json ids = nlohmann::ordered_json::array();
      ids.push_back(var.lo);
      if (var.family == VariableFamily::edge) ids.push_back(var.hi);
      factors.push_back({{"variable", ids}, {"exponent", exp}});
    }
    terms.push_back({{"coefficient", to_decimal(c)}, {"factors", factors}});
  }
  return {{"terms", terms}};
}

Polynomial polynomial_from_json(const nlohmann::ordered_json& j) {
  Polynomial out;
  for (const auto& t : j.at("terms")) {
    std::vector<Monomial::Factor> factors;
    for (const auto& f : t.at("factors")) {
      const auto& ids = f.at("variable");
      Variable var;
      if (ids.size() == 1) {
        var = Variable::vertex(ids[0].get<Vertex>());
      } else if (ids.size() == 2) {
        var = Variable::edge(Edge::between(ids[0].get<Vertex>(), ids[1].get<Vertex>()));
      } else {
        throw std::invalid_argument("variable must list one vertex or two edge endpoints");
      }
      factors.emplace_back(var, f.at("exponent").get<unsigned>());
    }
    Polynomial term = Polynomial::term(Monomial(std::move(factors)), parse_rational(t.at("coefficient").get<std::string>()));
    out += term;
  }
  return out;
}

}  // namespace matchlef
