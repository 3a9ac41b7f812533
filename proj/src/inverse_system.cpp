#include "matchlef/inverse_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "matchlef/generators.hpp"

namespace matchlef {

bool HilbertFunction::symmetric() const {
  for (std::size_t d = 0; d < dims.size(); ++d) {
    if (dims[d] != dims[dims.size() - 1 - d]) return false;
  }
  return true;
}

std::string to_string(const HilbertFunction& h) {
  std::string out = "(";
  for (std::size_t d = 0; d < h.dims.size(); ++d) {
    if (d) out += ",";
    out += std::to_string(h.dims[d]);
  }
  return out + ")";
}

std::string to_string(ColumnStrategy s) {
  return s == ColumnStrategy::all_monomials ? "all-monomials" : "matching-monomials";
}

bool is_annihilator_element(const Polynomial& f, const Polynomial& phi) { return apply_diff(f, phi).is_zero(); }

namespace {

void fill_monomials(std::span<const Variable> vars, std::size_t index, unsigned remaining,
                    std::vector<Monomial::Factor>& factors, std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.emplace_back(factors);
    return;
  }
  if (index == vars.size()) return;
  // larger exponents on earlier variables first gives descending graded-lex order
  for (unsigned e = remaining + 1; e-- > 0;) {
    if (e > 0) factors.emplace_back(vars[index], e);
    fill_monomials(vars, index + 1, remaining - e, factors, out);
    if (e > 0) factors.pop_back();
  }
}

void require_nonzero(const Polynomial& phi) {
  if (phi.is_zero()) throw std::invalid_argument("the generator must be a nonzero polynomial");
}

std::string vertex_key(std::span<const Vertex> vertices) {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += "-";
    out += std::to_string(vertices[i]);
  }
  return out;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::span<const Variable> variables, unsigned d) {
  std::vector<Variable> vars(variables.begin(), variables.end());
  std::sort(vars.begin(), vars.end());
  std::vector<Monomial> out;
  std::vector<Monomial::Factor> factors;
  fill_monomials(vars, 0, d, factors, out);
  return out;
}

std::vector<Monomial> matching_monomials(std::span<const Vertex> vertices, std::size_t d) {
  std::vector<Monomial> out;
  for (const Matching& m : matchings(vertices, d)) out.push_back(Monomial::of_matching(m));
  return out;
}

ExactMatrix catalecticant(const Polynomial& phi, unsigned d, std::span<const Monomial> columns) {
  require_nonzero(phi);
  if (!phi.is_homogeneous()) throw std::invalid_argument("catalecticant needs a homogeneous generator");
  const auto s = static_cast<unsigned>(phi.degree());
  if (d > s) throw std::invalid_argument("catalecticant degree exceeds the socle degree");

  std::vector<Polynomial> derivatives;
  derivatives.reserve(columns.size());
  std::set<Monomial, GrlexGreater> row_set;
  for (const Monomial& m : columns) {
    if (m.degree() != d) throw std::invalid_argument("catalecticant column " + to_string(m) + " has the wrong degree");
    derivatives.push_back(apply_diff(m, phi));
    for (const auto& [mono, c] : derivatives.back().terms()) row_set.insert(mono);
  }
  const std::vector<Monomial> rows(row_set.begin(), row_set.end());

  std::vector<std::string> row_labels;
  for (const Monomial& m : rows) row_labels.push_back(to_string(m));
  std::vector<std::string> col_labels;
  for (const Monomial& m : columns) col_labels.push_back(to_string(m));

  ExactMatrix out(std::move(row_labels), std::move(col_labels));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [mono, c] : derivatives[j].terms()) {
      const auto pos = static_cast<std::size_t>(
          std::lower_bound(rows.begin(), rows.end(), mono, GrlexGreater{}) - rows.begin());
      out.at(pos, j) = c;
    }
  }
  return out;
}

std::optional<MatchingGenerator> recognize_matching_generator(const Polynomial& phi) {
  if (phi.is_zero() || phi.family() != VariableFamily::edge || !phi.is_homogeneous()) return std::nullopt;
  std::vector<Vertex> ids;
  for (const Variable& v : phi.variables()) {
    ids.push_back(v.lo);
    ids.push_back(v.hi);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const auto k = static_cast<std::size_t>(phi.degree());
  if (2 * k > ids.size()) return std::nullopt;
  if (phi.size() != matching_count(ids.size(), k)) return std::nullopt;
  if (!(phi == matchlef::phi(ids, k))) return std::nullopt;
  return MatchingGenerator{std::move(ids), k};
}

HilbertFunction hilbert_function(const Polynomial& phi, ColumnStrategy strategy, MatrixStore* store) {
  require_nonzero(phi);
  if (!phi.is_homogeneous()) throw std::invalid_argument("the generator must be homogeneous");
  const auto s = static_cast<unsigned>(phi.degree());
  if (s == 0) return HilbertFunction{{1}};

  const auto generator = recognize_matching_generator(phi);
  if (strategy == ColumnStrategy::matching_monomials && !generator) {
    throw std::invalid_argument("the matching-monomial strategy needs a matching generator");
  }
  const std::vector<Variable> vars = phi.variables();

  HilbertFunction h;
  for (unsigned d = 0; d <= s; ++d) {
    auto compute = [&] {
      const std::vector<Monomial> columns = strategy == ColumnStrategy::matching_monomials
                                                ? matching_monomials(generator->vertices, d)
                                                : monomials_of_degree(vars, d);
      return catalecticant(phi, d, columns);
    };
    ExactMatrix cat;
    if (generator && store != nullptr) {
      const std::string key = "catalecticant_U" + vertex_key(generator->vertices) + "_k" +
                              std::to_string(generator->k) + "_d" + std::to_string(d) + "_" + to_string(strategy);
      cat = cached_matrix(store, key, compute);
    } else {
      cat = compute();
    }
    h.dims.push_back(rank(cat));
  }
  return h;
}

std::vector<Polynomial> annihilator_kernel_basis(const Polynomial& phi, unsigned d) {
  const std::vector<Variable> vars = phi.variables();
  return annihilator_kernel_basis(phi, d, vars);
}

std::vector<Polynomial> annihilator_kernel_basis(const Polynomial& phi, unsigned d,
                                                 std::span<const Variable> variables) {
  const std::vector<Monomial> columns = monomials_of_degree(variables, d);
  const ExactMatrix cat = catalecticant(phi, d, columns);
  std::vector<Polynomial> out;
  for (const auto& vec : kernel_basis(cat)) {
    Polynomial f;
    for (std::size_t j = 0; j < vec.size(); ++j) f.add_term(columns[j], vec[j]);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Monomial> quotient_basis(const Polynomial& phi, unsigned d) {
  const std::vector<Variable> vars = phi.variables();
  const std::vector<Monomial> columns = monomials_of_degree(vars, d);
  std::vector<Monomial> out;
  for (std::size_t c : pivot_columns(catalecticant(phi, d, columns))) out.push_back(columns[c]);
  return out;
}

Rational poincare_pairing(const Polynomial& f, const Polynomial& g, const Polynomial& phi) {
  require_nonzero(phi);
  if (f.is_zero() || g.is_zero()) return 0;
  if (!f.is_homogeneous() || !g.is_homogeneous() || f.degree() + g.degree() != phi.degree()) {
    throw std::invalid_argument("pairing degrees must add up to the socle degree");
  }
  return apply_diff(g, apply_diff(f, phi)).coefficient(Monomial());
}

ExactMatrix pairing_matrix(const Polynomial& phi, std::span<const Polynomial> left, std::span<const Polynomial> right) {
  std::vector<std::string> row_labels;
  for (const auto& f : left) row_labels.push_back(to_string(f));
  std::vector<std::string> col_labels;
  for (const auto& g : right) col_labels.push_back(to_string(g));
  ExactMatrix out(std::move(row_labels), std::move(col_labels));
  for (std::size_t i = 0; i < left.size(); ++i) {
    const Polynomial partial = apply_diff(left[i], phi);
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (left[i].degree() + right[j].degree() != phi.degree()) {
        throw std::invalid_argument("pairing degrees must add up to the socle degree");
      }
      out.at(i, j) = apply_diff(right[j], partial).coefficient(Monomial());
    }
  }
  return out;
}

namespace {

/// Coefficient matrix whose columns are the given polynomials.
ExactMatrix coefficient_matrix(std::span<const Polynomial> columns) {
  std::set<Monomial, GrlexGreater> row_set;
  for (const auto& p : columns) {
    for (const auto& [m, c] : p.terms()) row_set.insert(m);
  }
  const std::vector<Monomial> rows(row_set.begin(), row_set.end());
  ExactMatrix out(rows.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [m, c] : columns[j].terms()) {
      const auto pos =
          static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), m, GrlexGreater{}) - rows.begin());
      out.at(pos, j) = c;
    }
  }
  return out;
}

}  // namespace

RankOracleResult lefschetz_rank_oracle(const Polynomial& phi, const Polynomial& l, unsigned d,
                                       std::span<const Polynomial> basis) {
  require_nonzero(phi);
  const auto s = static_cast<unsigned>(phi.degree());
  if (2 * d > s) throw std::invalid_argument("the Lefschetz map needs 2d <= s");
  if (!l.is_zero() && (!l.is_homogeneous() || l.degree() != 1)) {
    throw std::invalid_argument("the Lefschetz element must be a linear form");
  }

  std::vector<Polynomial> images;
  images.reserve(basis.size());
  for (const Polynomial& f : basis) {
    if (f.is_zero() || !f.is_homogeneous() || f.degree() != static_cast<int>(d)) {
      throw std::invalid_argument("basis elements must be homogeneous of degree d");
    }
    images.push_back(apply_diff(f, phi));
  }
  if (rank(coefficient_matrix(images)) != basis.size()) {
    throw std::invalid_argument("basis images are linearly dependent in A^(d)");
  }

  // (l^{s-2d} f)(d) phi == l(d)^{s-2d} (f(d) phi): derivatives commute
  for (unsigned t = 0; t < s - 2 * d; ++t) {
    for (Polynomial& p : images) p = apply_diff(l, p);
  }
  const std::size_t r = rank(coefficient_matrix(images));
  return RankOracleResult{r == basis.size(), basis.size() - r};
}

std::vector<Polynomial> default_lefschetz_basis(const Polynomial& phi, unsigned d) {
  std::vector<Polynomial> out;
  if (const auto generator = recognize_matching_generator(phi)) {
    for (const VertexSet& v : k_subsets(generator->vertices, 2 * d)) out.push_back(matching_monomial(v));
    return out;
  }
  const std::vector<Variable> vars = phi.variables();
  for (const Monomial& m : monomials_of_degree(vars, d)) {
    if (m.square_free()) out.push_back(Polynomial::term(m));
  }
  return out;
}

}  // namespace matchlef
