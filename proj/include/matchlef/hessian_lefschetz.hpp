#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "matchlef/combinatorics.hpp"
#include "matchlef/exact_matrix.hpp"
#include "matchlef/matrix_store.hpp"
#include "matchlef/polynomial.hpp"

namespace matchlef {

struct HessianParams {
  VertexSet vertices;
  std::size_t k = 0;
  std::size_t d = 0;
};

/// Symmetric matrix of polynomial entries F(d)F'(d) phi over a basis B.
class HessianMatrix {
 public:
  HessianMatrix(std::vector<std::string> labels, std::vector<Polynomial> entries,
                std::optional<HessianParams> params = std::nullopt);

  std::size_t size() const { return labels_.size(); }
  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::optional<HessianParams>& params() const { return params_; }
  bool is_symmetric() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Polynomial> entries_;
  std::optional<HessianParams> params_;
};

/// (F(d) F'(d) phi)_{F,F' in basis}; all basis elements must share one degree d with 2d <= deg phi.
HessianMatrix hessian_matrix(const Polynomial& phi, std::span<const Polynomial> basis);

/// H_{U,k,d} indexed by C(U,2d) with the canonical matchings M(V). Entries are
/// computed by differentiation and checked against Phi_{U\(V u V'),k-2d} (or 0
/// for intersecting V, V'); a mismatch throws std::logic_error.
HessianMatrix matching_hessian(std::span<const Vertex> vertices, std::size_t k, std::size_t d);

/// All-ones value of a disjoint-pair entry of H_{U,k,d}: the number of
/// (k-2d)-edge matchings on u-4d vertices, C(u-4d,2k-4d)(2k-4d-1)!!; 0 when
/// the pair intersects. Requires 2d <= k and 4d <= u.
Integer hessian_entry_value(std::size_t u, std::size_t k, std::size_t d, bool disjoint);

/// 0/1 matrix on the m-subsets of U; 1 exactly on disjoint pairs.
ExactMatrix disjointness_matrix(std::span<const Vertex> vertices, std::size_t m);

/// Entry-wise evaluation; throws std::invalid_argument on a missing variable.
ExactMatrix hessian_at_point(const HessianMatrix& h, const Point& point);

/// Coefficients a_e of the linear form l = sum a_e x_e over the edges of K_U.
struct EdgePoint {
  std::string label;
  std::map<Edge, Rational> values;

  Point as_point() const;
  Polynomial linear_form() const;
};

EdgePoint ones_point(std::span<const Vertex> vertices);
EdgePoint zero_point(std::span<const Vertex> vertices);
/// Reproducible rational point; values a/b with a in [-9,9], b in [1,7],
/// drawn from mt19937_64 seeded with (seed, index).
EdgePoint random_point(std::span<const Vertex> vertices, std::uint64_t seed, std::size_t index);

struct DegreeRecord {
  std::size_t d = 0;
  std::size_t power = 0;  // s - 2d
  Rational hessian_det;
  bool criterion_bijective = false;
  bool oracle_bijective = false;
  std::size_t oracle_kernel_dim = 0;
};

struct LefschetzReport {
  VertexSet vertices;
  std::size_t k = 0;
  std::size_t socle_degree = 0;
  std::string point_label;
  std::vector<DegreeRecord> degrees;
  bool overall = false;

  /// Criterion and rank oracle agree in every degree.
  bool verdicts_agree() const;
};

/// For every d with 2d <= k: det of H_{U,k,d} at the point (criterion) and the
/// rank of multiplication by l^{k-2d} (oracle). overall is the AND of the
/// criterion verdicts. Evaluated Hessians are cached in `store` when given.
LefschetzReport strong_lefschetz_check(std::span<const Vertex> vertices, std::size_t k, const EdgePoint& point,
                                       MatrixStore* store = nullptr);

/// {"u":..,"k":..,"point":..,"degrees":[{"d":0,"power":..,"det":"3","criterion":true,"oracle":true}],"strong_lefschetz":true}
nlohmann::ordered_json to_json(const LefschetzReport& r);

struct DetFactorization {
  Rational lhs;
  Integer constant;  // hessian_entry_value(u,k,d,true)^C(u,2d)
  Rational dmatrix_det;
  bool match = false;
};

/// det(H_{U,k,d} at ones) against constant * det(D(U,2d)).
DetFactorization det_factorization_check(std::span<const Vertex> vertices, std::size_t k, std::size_t d,
                                         MatrixStore* store = nullptr);

/// Evaluated H_{U,k,d} at `point`, cached under (U,k,d,point label).
ExactMatrix evaluated_matching_hessian(std::span<const Vertex> vertices, std::size_t k, std::size_t d,
                                       const EdgePoint& point, MatrixStore* store = nullptr);

}  // namespace matchlef
