#pragma once

// Small exact linear algebra over a FieldSpec: fixed 3x3 matrices for the
// geometry, plus a dense row-reduction routine for the linear systems that
// show up in the equivalence search.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubicdet/gf.hpp"

namespace cubicdet {

class Mat3 {
 public:
  Mat3() = default;
  explicit Mat3(const FieldSpec& field);
  Mat3(const FieldSpec& field, const std::array<std::array<long long, 3>, 3>& entries);
  explicit Mat3(const std::array<std::array<FieldElement, 3>, 3>& entries);

  static Mat3 identity(const FieldSpec& field);
  /// The matrix whose columns are c0, c1, c2.
  static Mat3 from_columns(const std::array<FieldElement, 3>& c0, const std::array<FieldElement, 3>& c1,
                           const std::array<FieldElement, 3>& c2);

  const FieldSpec& field() const { return e_[0][0].field(); }
  FieldElement& operator()(int r, int c) { return e_[r][c]; }
  const FieldElement& operator()(int r, int c) const { return e_[r][c]; }
  std::array<FieldElement, 3> column(int c) const { return {e_[0][c], e_[1][c], e_[2][c]}; }

  FieldElement det() const;
  bool is_invertible() const { return !det().is_zero(); }
  Mat3 inverse() const;
  Mat3 transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  int rank() const;

  std::array<FieldElement, 3> apply(const std::array<FieldElement, 3>& v) const;

  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend Mat3 operator+(const Mat3& a, const Mat3& b);
  friend Mat3 operator*(const FieldElement& s, const Mat3& a);
  friend bool operator==(const Mat3& a, const Mat3& b) = default;

 private:
  std::array<std::array<FieldElement, 3>, 3> e_{};
};

/// Row-major dense matrix over one field, entries stored as packed indices.
class DenseMatrix {
 public:
  DenseMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  const FieldSpec& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;

  /// Basis of {v : A v = 0}. One vector per free column, with a 1 in that
  /// column; the basis is therefore canonical for the row space.
  std::vector<std::vector<std::uint32_t>> nullspace() const;

 private:
  const FieldSpec* field_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> data_;
};

/// Solves A X = B (B with several right-hand sides). Returns one solution
/// (free variables set to zero) or nullopt if inconsistent.
std::optional<DenseMatrix> solve(const DenseMatrix& a, const DenseMatrix& b);

/// |GL_3(F_q)|.
std::uint64_t gl3_order(std::uint64_t q);

}  // namespace cubicdet
