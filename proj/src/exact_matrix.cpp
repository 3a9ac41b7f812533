#include "matchlef/exact_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace matchlef {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols), row_labels_(rows), col_labels_(cols) {}

ExactMatrix::ExactMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels)
    : rows_(row_labels.size()),
      cols_(col_labels.size()),
      entries_(rows_ * cols_),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

bool ExactMatrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(col_labels_, row_labels_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

namespace {

/// Integer matrix in row echelon form produced by Bareiss elimination.
struct Echelon {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> a;
  std::vector<std::size_t> pivots;
  bool odd_swaps = false;
  Integer row_scale = 1;  // product of the per-row denominators cleared

  Integer& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

Echelon bareiss(const ExactMatrix& m) {
  Echelon e;
  e.rows = m.rows();
  e.cols = m.cols();
  e.a.resize(e.rows * e.cols);
  for (std::size_t i = 0; i < e.rows; ++i) {
    Integer lcm = 1;
    for (std::size_t j = 0; j < e.cols; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < e.cols; ++j) {
      const Rational& q = m.at(i, j);
      e.at(i, j) = q.get_num() * (lcm / q.get_den());
    }
    e.row_scale *= lcm;
  }

  Integer prev = 1;
  Integer tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < e.cols && r < e.rows; ++c) {
    std::size_t p = r;
    while (p < e.rows && e.at(p, c) == 0) ++p;
    if (p == e.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < e.cols; ++j) std::swap(e.at(p, j), e.at(r, j));
      e.odd_swaps = !e.odd_swaps;
    }
    const Integer& pivot = e.at(r, c);
    for (std::size_t i = r + 1; i < e.rows; ++i) {
      const Integer lead = e.at(i, c);
      for (std::size_t j = c + 1; j < e.cols; ++j) {
        tmp = pivot * e.at(i, j) - lead * e.at(r, j);
        mpz_divexact(e.at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      e.at(i, c) = 0;
    }
    prev = pivot;
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

Rational det_exact(const ExactMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  const Echelon e = bareiss(m);
  if (e.pivots.size() < m.rows()) return 0;
  Rational out(e.at(m.rows() - 1, m.cols() - 1), e.row_scale);
  out.canonicalize();
  return e.odd_swaps ? Rational(-out) : out;
}

std::size_t rank(const ExactMatrix& m) { return bareiss(m).pivots.size(); }

std::vector<std::size_t> pivot_columns(const ExactMatrix& m) { return bareiss(m).pivots; }

std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m) {
  const Echelon e = bareiss(m);
  std::vector<bool> is_pivot(e.cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> out;
  for (std::size_t free = 0; free < e.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(e.cols);
    x[free] = 1;
    // back substitution through the echelon rows
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
      const std::size_t pc = e.pivots[r];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < e.cols; ++j) {
        if (x[j] != 0 && e.at(r, j) != 0) s += Rational(e.at(r, j)) * x[j];
      }
      x[pc] = -s / Rational(e.at(r, pc));
    }
    // scale to a primitive integer vector
    Integer den_lcm = 1;
    for (const Rational& v : x) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
    Integer num_gcd = 0;
    for (Rational& v : x) {
      v *= den_lcm;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num_mpz_t());
    }
    for (Rational& v : x) v /= num_gcd;
    out.push_back(std::move(x));
  }
  return out;
}

nlohmann::ordered_json to_json(const ExactMatrix& m) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_decimal(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  nlohmann::ordered_json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["row_labels"] = m.row_labels();
  out["col_labels"] = m.col_labels();
  out["entries"] = std::move(entries);
  return out;
}

ExactMatrix exact_matrix_from_json(const nlohmann::ordered_json& j) {
  ExactMatrix out(j.at("row_labels").get<std::vector<std::string>>(), j.at("col_labels").get<std::vector<std::string>>());
  if (out.rows() != j.at("rows").get<std::size_t>() || out.cols() != j.at("cols").get<std::size_t>()) {
    throw std::invalid_argument("matrix dimensions disagree with label counts");
  }
  const auto& entries = j.at("entries");
  if (entries.size() != out.rows()) throw std::invalid_argument("matrix row count mismatch");
  for (std::size_t r = 0; r < out.rows(); ++r) {
    if (entries[r].size() != out.cols()) throw std::invalid_argument("matrix column count mismatch");
    for (std::size_t c = 0; c < out.cols(); ++c) out.at(r, c) = parse_rational(entries[r][c].get<std::string>());
  }
  return out;
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const ExactMatrix& m) {
  std::ostringstream os;
  for (const auto& label : m.col_labels()) os << "," << csv_cell(label);
  os << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << csv_cell(m.row_labels()[i]);
    for (std::size_t j = 0; j < m.cols(); ++j) os << "," << to_decimal(m.at(i, j));
    os << "\n";
  }
  return os.str();
}

std::string to_text(const ExactMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += " ";
      out += to_decimal(m.at(i, j));
    }
    out += "]\n";
  }
  return out;
}

}  // namespace matchlef
