#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matchlef/combinatorics.hpp"
#include "matchlef/exact_matrix.hpp"
#include "matchlef/matrix_store.hpp"
#include "matchlef/polynomial.hpp"

namespace matchlef {

/// Graded dimensions h_0..h_s of A = P/Ann(phi).
struct HilbertFunction {
  std::vector<std::size_t> dims;

  std::size_t socle_degree() const { return dims.empty() ? 0 : dims.size() - 1; }
  /// h_d == h_{s-d} for every d.
  bool symmetric() const;
  bool operator==(const HilbertFunction&) const = default;
};

/// "(1,15,1)"
std::string to_string(const HilbertFunction& h);

enum class ColumnStrategy { all_monomials, matching_monomials };

/// "all-monomials" / "matching-monomials"
std::string to_string(ColumnStrategy s);

/// f(d) phi == 0
bool is_annihilator_element(const Polynomial& f, const Polynomial& phi);

/// Every degree-d monomial in the given variables, descending graded-lex.
std::vector<Monomial> monomials_of_degree(std::span<const Variable> variables, unsigned d);

/// x^M for every M in M(U,d), in matching enumeration order.
std::vector<Monomial> matching_monomials(std::span<const Vertex> vertices, std::size_t d);

/// Rows: every degree-(s-d) monomial occurring in some column derivative
/// (descending graded-lex); columns: the given degree-d monomials;
/// entry = coefficient of the row monomial in column(d) phi.
ExactMatrix catalecticant(const Polynomial& phi, unsigned d, std::span<const Monomial> columns);

struct MatchingGenerator {
  VertexSet vertices;
  std::size_t k = 0;
};

/// Recognizes phi == Phi_{U,k} with U the vertices in the support (k >= 1).
std::optional<MatchingGenerator> recognize_matching_generator(const Polynomial& phi);

/// h_d = rank of the degree-d catalecticant. The matching-monomial strategy is
/// only accepted for matching generators; matrices are cached in `store` keyed
/// by (U, k, d, strategy) when phi is recognized as Phi_{U,k}.
HilbertFunction hilbert_function(const Polynomial& phi, ColumnStrategy strategy, MatrixStore* store = nullptr);

/// Basis of Ann(phi) in degree d, as kernel vectors of the all-monomial
/// catalecticant over phi's variables (or `variables` when given).
std::vector<Polynomial> annihilator_kernel_basis(const Polynomial& phi, unsigned d);
std::vector<Polynomial> annihilator_kernel_basis(const Polynomial& phi, unsigned d, std::span<const Variable> variables);

/// Monomials whose images form a basis of A^(d): the pivot columns of the
/// all-monomial catalecticant.
std::vector<Monomial> quotient_basis(const Polynomial& phi, unsigned d);

/// f(d) g(d) phi for deg f + deg g == deg phi.
Rational poincare_pairing(const Polynomial& f, const Polynomial& g, const Polynomial& phi);

/// Gram matrix of the pairing between two lists of homogeneous polynomials.
ExactMatrix pairing_matrix(const Polynomial& phi, std::span<const Polynomial> left, std::span<const Polynomial> right);

struct RankOracleResult {
  bool injective = false;
  std::size_t kernel_dim = 0;
};

/// Multiplication by l^{s-2d} on span(basis) inside A^(d), decided by the rank
/// of f -> (l^{s-2d} f)(d) phi. Throws std::invalid_argument when the basis
/// images in A^(d) are dependent.
RankOracleResult lefschetz_rank_oracle(const Polynomial& phi, const Polynomial& l, unsigned d,
                                       std::span<const Polynomial> basis);

/// x^{M(V)} for V in C(U,2d) when phi is a matching generator; otherwise the
/// square-free degree-d monomials in phi's variables.
std::vector<Polynomial> default_lefschetz_basis(const Polynomial& phi, unsigned d);

}  // namespace matchlef
