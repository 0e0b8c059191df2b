#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ellft/cyclotomic.hpp"

namespace ellft {

/// Dense matrix of exact cyclotomic entries with optional row/column labels.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  CycMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels)
      : rows_(row_labels.size()),
        cols_(col_labels.size()),
        e_(rows_ * cols_),
        row_labels_(std::move(row_labels)),
        col_labels_(std::move(col_labels)) {}

  static CycMatrix identity(std::size_t n) {
    CycMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  void set_labels(std::vector<std::string> r, std::vector<std::string> c) {
    row_labels_ = std::move(r);
    col_labels_ = std::move(c);
  }

  Cyclotomic& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    CycMatrix r(a.rows_, b.cols_);
    r.row_labels_ = a.row_labels_;
    r.col_labels_ = b.col_labels_;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix difference: shape mismatch");
    CycMatrix r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
  }

  CycMatrix transpose() const {
    CycMatrix r(cols_, rows_);
    r.row_labels_ = col_labels_;
    r.col_labels_ = row_labels_;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  CycMatrix conjugate() const {
    CycMatrix r(*this);
    for (auto& x : r.e_) x = x.conj();
    return r;
  }

  CycMatrix conj_transpose() const { return conjugate().transpose(); }

  /// Entry-wise exact equality; labels are not compared.
  bool same_entries(const CycMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    return same_entries(identity(rows_));
  }

  bool is_symmetric() const { return same_entries(transpose()); }

  /// Exact rank via Gaussian elimination over Q^ab.
  std::size_t rank() const {
    std::vector<std::vector<Cyclotomic>> a(rows_, std::vector<Cyclotomic>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) a[i][j] = (*this)(i, j);
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols_ && r < rows_; ++j) {
      std::size_t piv = r;
      while (piv < rows_ && a[piv][j].is_zero()) ++piv;
      if (piv == rows_) continue;
      std::swap(a[piv], a[r]);
      Cyclotomic d = a[r][j].inv();
      for (std::size_t jj = j; jj < cols_; ++jj) a[r][jj] *= d;
      for (std::size_t i = r + 1; i < rows_; ++i) {
        if (a[i][j].is_zero()) continue;
        Cyclotomic f = a[i][j];
        for (std::size_t jj = j; jj < cols_; ++jj) a[i][jj] -= f * a[r][jj];
      }
      ++r;
    }
    return r;
  }

  /// Exact determinant via Gaussian elimination over Q^ab.
  Cyclotomic det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: matrix not square");
    std::vector<std::vector<Cyclotomic>> a(rows_, std::vector<Cyclotomic>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) a[i][j] = (*this)(i, j);
    Cyclotomic d = Cyclotomic::one();
    for (std::size_t j = 0; j < cols_; ++j) {
      std::size_t piv = j;
      while (piv < rows_ && a[piv][j].is_zero()) ++piv;
      if (piv == rows_) return Cyclotomic();
      if (piv != j) {
        std::swap(a[piv], a[j]);
        d = -d;
      }
      d *= a[j][j];
      Cyclotomic inv = a[j][j].inv();
      for (std::size_t i = j + 1; i < rows_; ++i) {
        if (a[i][j].is_zero()) continue;
        Cyclotomic f = a[i][j] * inv;
        for (std::size_t jj = j; jj < cols_; ++jj) a[i][jj] -= f * a[j][jj];
      }
    }
    return d;
  }

  nlohmann::json serialize() const {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < rows_; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < cols_; ++j) row.push_back((*this)(i, j).serialize());
      entries.push_back(row);
    }
    return {{"rows", row_labels_}, {"cols", col_labels_}, {"entries", entries}};
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Cyclotomic> e_;
  std::vector<std::string> row_labels_, col_labels_;
};

}  // namespace ellft
