#include "wpcas/graded_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace wpcas {

GradedMatrix::GradedMatrix(RingPtr ring, std::vector<int> row_degrees, std::vector<int> col_degrees)
    : ring_(std::move(ring)), row_deg_(std::move(row_degrees)), col_deg_(std::move(col_degrees)) {
  entries_.assign(row_deg_.size(), std::vector<Poly>(col_deg_.size(), Poly(ring_)));
}

GradedMatrix::GradedMatrix(RingPtr ring, std::vector<int> row_degrees, std::vector<int> col_degrees,
                           std::vector<std::vector<Poly>> entries)
    : ring_(std::move(ring)),
      row_deg_(std::move(row_degrees)),
      col_deg_(std::move(col_degrees)),
      entries_(std::move(entries)) {
  if (entries_.size() != row_deg_.size()) throw std::invalid_argument("graded matrix: row count mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].size() != col_deg_.size()) throw std::invalid_argument("graded matrix: column count mismatch");
    for (std::size_t j = 0; j < col_deg_.size(); ++j) {
      const Poly& e = entries_[i][j];
      require_same_ring(*e.ring(), *ring_);
      if (e.is_zero()) continue;
      const auto wd = e.weighted_degree();
      if (!wd.homogeneous || *wd.value != col_deg_[j] - row_deg_[i])
        throw std::invalid_argument("graded matrix: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") = " + e.to_string() + " does not have degree " +
                                    std::to_string(col_deg_[j] - row_deg_[i]));
    }
  }
}

GradedMatrix GradedMatrix::from_columns(RingPtr ring, std::vector<int> row_degrees,
                                        const std::vector<ModuleVector>& cols, std::vector<int> col_degrees) {
  if (cols.size() != col_degrees.size()) throw std::invalid_argument("from_columns: degree count mismatch");
  std::vector<std::vector<Poly>> entries(row_degrees.size(), std::vector<Poly>(cols.size(), Poly(ring)));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != row_degrees.size()) throw std::invalid_argument("from_columns: column length mismatch");
    for (std::size_t i = 0; i < row_degrees.size(); ++i) entries[i][j] = cols[j][i];
  }
  return GradedMatrix(std::move(ring), std::move(row_degrees), std::move(col_degrees), std::move(entries));
}

ModuleVector GradedMatrix::column(std::size_t j) const {
  ModuleVector v;
  v.reserve(rows());
  for (std::size_t i = 0; i < rows(); ++i) v.push_back(entries_[i].at(j));
  return v;
}

std::vector<ModuleVector> GradedMatrix::columns() const {
  std::vector<ModuleVector> out;
  for (std::size_t j = 0; j < cols(); ++j) out.push_back(column(j));
  return out;
}

bool GradedMatrix::is_zero() const {
  for (const auto& row : entries_)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> GradedMatrix::find_unit_entry() const {
  for (std::size_t j = 0; j < cols(); ++j)
    for (std::size_t i = 0; i < rows(); ++i)
      if (!entries_[i][j].is_zero() && entries_[i][j].is_constant()) return std::make_pair(i, j);
  return std::nullopt;
}

GradedMatrix GradedMatrix::transpose(int shift) const {
  std::vector<int> rdeg, cdeg;
  for (int d : col_deg_) rdeg.push_back(shift - d);
  for (int d : row_deg_) cdeg.push_back(shift - d);
  std::vector<std::vector<Poly>> e(cols(), std::vector<Poly>(rows(), Poly(ring_)));
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) e[j][i] = entries_[i][j];
  return GradedMatrix(ring_, std::move(rdeg), std::move(cdeg), std::move(e));
}

GradedMatrix GradedMatrix::permute_rows(const std::vector<std::size_t>& order) const {
  if (order.size() != rows()) throw std::invalid_argument("permute_rows: size mismatch");
  std::vector<int> rdeg;
  std::vector<std::vector<Poly>> e;
  for (auto i : order) {
    rdeg.push_back(row_deg_.at(i));
    e.push_back(entries_.at(i));
  }
  return GradedMatrix(ring_, std::move(rdeg), col_deg_, std::move(e));
}

GradedMatrix GradedMatrix::permute_cols(const std::vector<std::size_t>& order) const {
  if (order.size() != cols()) throw std::invalid_argument("permute_cols: size mismatch");
  std::vector<int> cdeg;
  for (auto j : order) cdeg.push_back(col_deg_.at(j));
  std::vector<std::vector<Poly>> e(rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (auto j : order) e[i].push_back(entries_[i].at(j));
  return GradedMatrix(ring_, row_deg_, std::move(cdeg), std::move(e));
}

GradedMatrix GradedMatrix::map_into(const RingPtr& target) const {
  std::vector<std::vector<Poly>> e(rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) e[i].push_back(entries_[i][j].map_into(target));
  return GradedMatrix(target, row_deg_, col_deg_, std::move(e));
}

RationalMatrix GradedMatrix::evaluate(const std::vector<Rational>& point) const {
  RationalMatrix m(rows(), std::vector<Rational>(cols()));
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) m[i][j] = entries_[i][j].evaluate(point);
  return m;
}

std::vector<std::vector<int>> GradedMatrix::weight_table() const {
  std::vector<std::vector<int>> t(rows(), std::vector<int>(cols(), -1));
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (!entries_[i][j].is_zero()) t[i][j] = col_deg_[j] - row_deg_[i];
  return t;
}

std::string GradedMatrix::to_string() const {
  std::ostringstream os;
  os << rows() << "x" << cols() << " rows(";
  for (std::size_t i = 0; i < rows(); ++i) os << (i ? "," : "") << row_deg_[i];
  os << ") cols(";
  for (std::size_t j = 0; j < cols(); ++j) os << (j ? "," : "") << col_deg_[j];
  os << ")\n";
  for (std::size_t i = 0; i < rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < cols(); ++j) os << (j ? ", " : "") << entries_[i][j].to_string();
    os << "]\n";
  }
  return os.str();
}

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_ring(*a.ring_, *b.ring_);
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  if (a.col_deg_ != b.row_deg_) throw std::invalid_argument("matrix product: degree data mismatch");
  std::vector<std::vector<Poly>> e(a.rows(), std::vector<Poly>(b.cols(), Poly(a.ring_)));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.entries_[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b.entries_[k][j].is_zero()) e[i][j] += a.entries_[i][k] * b.entries_[k][j];
    }
  return GradedMatrix(a.ring_, a.row_deg_, b.col_deg_, std::move(e));
}

bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
  return a.ring_->same_as(*b.ring_) && a.row_deg_ == b.row_deg_ && a.col_deg_ == b.col_deg_ &&
         a.entries_ == b.entries_;
}

}  // namespace wpcas
