#include "matchlef/hessian_lefschetz.hpp"

#include <random>
#include <stdexcept>

#include "matchlef/generators.hpp"
#include "matchlef/inverse_system.hpp"

namespace matchlef {

HessianMatrix::HessianMatrix(std::vector<std::string> labels, std::vector<Polynomial> entries,
                             std::optional<HessianParams> params)
    : labels_(std::move(labels)), entries_(std::move(entries)), params_(std::move(params)) {
  if (entries_.size() != labels_.size() * labels_.size()) throw std::invalid_argument("Hessian must be square");
}

bool HessianMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (!(at(i, j) == at(j, i))) return false;
    }
  }
  return true;
}

HessianMatrix hessian_matrix(const Polynomial& phi, std::span<const Polynomial> basis) {
  if (phi.is_zero()) throw std::invalid_argument("the generator must be a nonzero polynomial");
  std::optional<int> degree;
  for (const Polynomial& f : basis) {
    if (f.is_zero() || !f.is_homogeneous()) throw std::invalid_argument("basis elements must be nonzero and homogeneous");
    if (degree && *degree != f.degree()) throw std::invalid_argument("basis elements must share one degree");
    degree = f.degree();
  }
  if (degree && 2 * *degree > phi.degree()) throw std::invalid_argument("Hessian degree needs 2d <= deg phi");

  std::vector<std::string> labels;
  std::vector<Polynomial> partials;
  for (const Polynomial& f : basis) {
    labels.push_back(to_string(f));
    partials.push_back(apply_diff(f, phi));
  }
  std::vector<Polynomial> entries;
  entries.reserve(basis.size() * basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) entries.push_back(apply_diff(basis[j], partials[i]));
  }
  return HessianMatrix(std::move(labels), std::move(entries));
}

namespace {

void require_matching_params(std::size_t u, std::size_t k, std::size_t d) {
  if (2 * k > u) throw std::invalid_argument("need 2k <= |U|");
  if (2 * d > k) throw std::invalid_argument("need 2d <= k");
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

HessianMatrix matching_hessian(std::span<const Vertex> vertices, std::size_t k, std::size_t d) {
  require_matching_params(vertices.size(), k, d);
  const Polynomial generator = phi(vertices, k);
  const std::vector<VertexSet> index = k_subsets(vertices, 2 * d);

  std::vector<Monomial> ops;
  std::vector<Polynomial> partials;
  std::vector<std::string> labels;
  for (const VertexSet& v : index) {
    ops.push_back(Monomial::of_matching(canonical_matching(v)));
    partials.push_back(apply_diff(ops.back(), generator));
    labels.push_back(to_string(v));
  }

  std::vector<Polynomial> entries;
  entries.reserve(index.size() * index.size());
  for (std::size_t i = 0; i < index.size(); ++i) {
    for (std::size_t j = 0; j < index.size(); ++j) {
      Polynomial entry = apply_diff(ops[j], partials[i]);
      const Polynomial expected = disjoint(index[i], index[j])
                                      ? phi(set_difference(vertices, set_union(index[i], index[j])), k - 2 * d)
                                      : Polynomial();
      if (!(entry == expected)) {
        throw std::logic_error("Hessian entry at " + labels[i] + "," + labels[j] + " differs from its closed form");
      }
      entries.push_back(std::move(entry));
    }
  }
  return HessianMatrix(std::move(labels), std::move(entries),
                       HessianParams{VertexSet(vertices.begin(), vertices.end()), k, d});
}

Integer hessian_entry_value(std::size_t u, std::size_t k, std::size_t d, bool disjoint) {
  if (2 * d > k) throw std::invalid_argument("need 2d <= k");
  if (4 * d > u) throw std::invalid_argument("need 4d <= u");
  if (!disjoint) return 0;
  return binomial(u - 4 * d, 2 * k - 4 * d) * double_factorial(static_cast<long>(2 * k - 4 * d) - 1);
}

ExactMatrix disjointness_matrix(std::span<const Vertex> vertices, std::size_t m) {
  const std::vector<VertexSet> index = k_subsets(vertices, m);
  std::vector<std::string> labels;
  for (const VertexSet& s : index) labels.push_back(to_string(s));
  ExactMatrix out(labels, labels);
  for (std::size_t i = 0; i < index.size(); ++i) {
    for (std::size_t j = 0; j < index.size(); ++j) {
      if (disjoint(index[i], index[j])) out.at(i, j) = 1;
    }
  }
  return out;
}

ExactMatrix hessian_at_point(const HessianMatrix& h, const Point& point) {
  ExactMatrix out(h.labels(), h.labels());
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) out.at(i, j) = evaluate(h.at(i, j), point);
  }
  return out;
}

Point EdgePoint::as_point() const {
  Point out;
  for (const auto& [e, a] : values) out.emplace(Variable::edge(e), a);
  return out;
}

Polynomial EdgePoint::linear_form() const {
  Polynomial out;
  for (const auto& [e, a] : values) out.add_term(Monomial::of(Variable::edge(e)), a);
  return out;
}

EdgePoint ones_point(std::span<const Vertex> vertices) {
  EdgePoint out{"ones", {}};
  for (const Edge& e : all_edges(vertices)) out.values.emplace(e, 1);
  return out;
}

EdgePoint zero_point(std::span<const Vertex> vertices) {
  EdgePoint out{"zero", {}};
  for (const Edge& e : all_edges(vertices)) out.values.emplace(e, 0);
  return out;
}

EdgePoint random_point(std::span<const Vertex> vertices, std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 gen(seq);
  EdgePoint out{"random-s" + std::to_string(seed) + "-i" + std::to_string(index), {}};
  for (const Edge& e : all_edges(vertices)) {
    const long num = static_cast<long>(gen() % 19) - 9;
    const long den = static_cast<long>(gen() % 7) + 1;
    Rational value(num, den);
    value.canonicalize();
    out.values.emplace(e, value);
  }
  return out;
}

ExactMatrix evaluated_matching_hessian(std::span<const Vertex> vertices, std::size_t k, std::size_t d,
                                       const EdgePoint& point, MatrixStore* store) {
  const std::string key = "hessian_U" + vertex_key(vertices) + "_k" + std::to_string(k) + "_d" + std::to_string(d) +
                          "_" + point.label;
  return cached_matrix(store, key, [&] { return hessian_at_point(matching_hessian(vertices, k, d), point.as_point()); });
}

bool LefschetzReport::verdicts_agree() const {
  for (const DegreeRecord& r : degrees) {
    if (r.criterion_bijective != r.oracle_bijective) return false;
  }
  return true;
}

LefschetzReport strong_lefschetz_check(std::span<const Vertex> vertices, std::size_t k, const EdgePoint& point,
                                       MatrixStore* store) {
  require_matching_params(vertices.size(), k, 0);
  const Polynomial generator = phi(vertices, k);
  if (generator.is_zero()) throw std::invalid_argument("the generator must be a nonzero polynomial");
  const Polynomial l = point.linear_form();

  LefschetzReport report;
  report.vertices.assign(vertices.begin(), vertices.end());
  report.k = k;
  report.socle_degree = k;
  report.point_label = point.label;
  report.overall = true;
  for (std::size_t d = 0; 2 * d <= k; ++d) {
    DegreeRecord rec;
    rec.d = d;
    rec.power = k - 2 * d;
    rec.hessian_det = det_exact(evaluated_matching_hessian(vertices, k, d, point, store));
    rec.criterion_bijective = rec.hessian_det != 0;
    const std::vector<Polynomial> basis = default_lefschetz_basis(generator, static_cast<unsigned>(d));
    const RankOracleResult oracle = lefschetz_rank_oracle(generator, l, static_cast<unsigned>(d), basis);
    rec.oracle_bijective = oracle.injective;
    rec.oracle_kernel_dim = oracle.kernel_dim;
    report.overall = report.overall && rec.criterion_bijective;
    report.degrees.push_back(std::move(rec));
  }
  return report;
}

nlohmann::ordered_json to_json(const LefschetzReport& r) {
  nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
  for (const DegreeRecord& rec : r.degrees) {
    nlohmann::ordered_json j;
    j["d"] = rec.d;
    j["power"] = rec.power;
    j["det"] = to_decimal(rec.hessian_det);
    j["criterion"] = rec.criterion_bijective;
    j["oracle"] = rec.oracle_bijective;
    degrees.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["u"] = r.vertices.size();
  out["k"] = r.k;
  out["point"] = r.point_label;
  out["degrees"] = std::move(degrees);
  out["strong_lefschetz"] = r.overall;
  return out;
}

DetFactorization det_factorization_check(std::span<const Vertex> vertices, std::size_t k, std::size_t d,
                                         MatrixStore* store) {
  require_matching_params(vertices.size(), k, d);
  const std::size_t u = vertices.size();
  DetFactorization out;
  out.lhs = det_exact(evaluated_matching_hessian(vertices, k, d, ones_point(vertices), store));
  out.constant = pow(hessian_entry_value(u, k, d, true), binomial(u, 2 * d).get_ui());
  out.dmatrix_det = det_exact(disjointness_matrix(vertices, 2 * d));
  out.match = out.lhs == Rational(out.constant) * out.dmatrix_det;
  return out;
}

}  // namespace matchlef
