#pragma once

#include <span>

#include "matchlef/combinatorics.hpp"
#include "matchlef/polynomial.hpp"

namespace matchlef {

/// Sum of x^M over all k-edge matchings of K_U. Zero when 2k > |U|; 1 for k = 0.
Polynomial phi(std::span<const Vertex> vertices, std::size_t k);

/// e_k in the vertex variables x_i, i in U.
Polynomial elementary_symmetric(std::span<const Vertex> vertices, std::size_t k);

/// x^{M(V)} for the canonical matching of V; throws on odd |V|.
Polynomial matching_monomial(std::span<const Vertex> vertices);

/// x^M for an arbitrary matching (or any edge set).
Polynomial edge_monomial(const Matching& edges);

/// Sum of x_e over e in C(U,2); throws when |U| < 2.
Polynomial all_ones_form(std::span<const Vertex> vertices);

}  // namespace matchlef
