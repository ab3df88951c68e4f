#include "cubicdet/linalg.hpp"

namespace cubicdet {

Mat3::Mat3(const FieldSpec& field) {
  for (auto& row : e_)
    for (auto& x : row) x = field.zero();
}

Mat3::Mat3(const FieldSpec& field, const std::array<std::array<long long, 3>, 3>& entries) {
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) e_[r][c] = field.from_int(entries[r][c]);
}

Mat3::Mat3(const std::array<std::array<FieldElement, 3>, 3>& entries) : e_(entries) {
  const FieldSpec* f = e_[0][0].field_ptr();
  for (const auto& row : e_)
    for (const auto& x : row)
      if (x.field_ptr() != f || !f) throw Error(ErrorCode::FieldMismatch, "matrix entries from different fields");
}

Mat3 Mat3::identity(const FieldSpec& field) {
  Mat3 m(field);
  for (int i = 0; i < 3; ++i) m.e_[i][i] = field.one();
  return m;
}

Mat3 Mat3::from_columns(const std::array<FieldElement, 3>& c0, const std::array<FieldElement, 3>& c1,
                        const std::array<FieldElement, 3>& c2) {
  std::array<std::array<FieldElement, 3>, 3> e;
  for (int r = 0; r < 3; ++r) e[r] = {c0[r], c1[r], c2[r]};
  return Mat3(e);
}

FieldElement Mat3::det() const {
  const auto& a = e_;
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3 Mat3::inverse() const {
  const FieldElement d = det();
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "matrix is singular");
  const auto& a = e_;
  Mat3 adj(field());
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      // cofactor of a[c][r] (transposed)
      const int r1 = (c + 1) % 3, r2 = (c + 2) % 3;
      const int c1 = (r + 1) % 3, c2 = (r + 2) % 3;
      adj.e_[r][c] = a[r1][c1] * a[r2][c2] - a[r1][c2] * a[r2][c1];
    }
  }
  return d.inverse() * adj;
}

Mat3 Mat3::transpose() const {
  Mat3 t(*this);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t.e_[r][c] = e_[c][r];
  return t;
}

bool Mat3::is_zero() const {
  for (const auto& row : e_)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

bool Mat3::is_symmetric() const {
  return e_[0][1] == e_[1][0] && e_[0][2] == e_[2][0] && e_[1][2] == e_[2][1];
}

int Mat3::rank() const {
  DenseMatrix d(field(), 3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) d.at(r, c) = e_[r][c].index();
  return static_cast<int>(d.rank());
}

std::array<FieldElement, 3> Mat3::apply(const std::array<FieldElement, 3>& v) const {
  std::array<FieldElement, 3> out;
  for (int r = 0; r < 3; ++r) out[r] = e_[r][0] * v[0] + e_[r][1] * v[1] + e_[r][2] * v[2];
  return out;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 out(a.field());
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out.e_[r][c] = a.e_[r][0] * b.e_[0][c] + a.e_[r][1] * b.e_[1][c] + a.e_[r][2] * b.e_[2][c];
  return out;
}

Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 out(a);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out.e_[r][c] += b.e_[r][c];
  return out;
}

Mat3 operator*(const FieldElement& s, const Mat3& a) {
  Mat3 out(a);
  for (auto& row : out.e_)
    for (auto& x : row) x = s * x;
  return out;
}

// ---------------------------------------------------------------------------

DenseMatrix::DenseMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

std::vector<std::size_t> DenseMatrix::rref() {
  const FieldSpec& f = *field_;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && at(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(row, c));
    const std::uint32_t inv = f.inv(at(row, col));
    for (std::size_t c = col; c < cols_; ++c) at(row, c) = f.mul(at(row, c), inv);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || at(r, col) == 0) continue;
      const std::uint32_t factor = at(r, col);
      for (std::size_t c = col; c < cols_; ++c) at(r, c) = f.sub(at(r, c), f.mul(factor, at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t DenseMatrix::rank() const {
  DenseMatrix copy(*this);
  return copy.rref().size();
}

std::vector<std::vector<std::uint32_t>> DenseMatrix::nullspace() const {
  DenseMatrix r(*this);
  const auto pivots = r.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(cols_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field_->neg(r.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<DenseMatrix> solve(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || &a.field() != &b.field())
    throw Error(ErrorCode::InvalidArgument, "incompatible linear system");
  const FieldSpec& f = a.field();
  const std::size_t n = a.cols(), k = b.cols();
  DenseMatrix aug(f, a.rows(), n + k);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < k; ++c) aug.at(r, n + c) = b.at(r, c);
  }
  const auto pivots = aug.rref();
  DenseMatrix x(f, n, k);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= n) return std::nullopt;
    for (std::size_t c = 0; c < k; ++c) x.at(pivots[i], c) = aug.at(i, n + c);
  }
  return x;
}

std::uint64_t gl3_order(std::uint64_t q) {
  const std::uint64_t q3 = q * q * q;
  return (q3 - 1) * (q3 - q) * (q3 - q * q);
}

}  // namespace cubicdet
