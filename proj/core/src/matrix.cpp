#include "grmlab/matrix.hpp"

#include <sstream>
#include <utility>

#include "grmlab/errors.hpp"

namespace grmlab {

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw DimensionMismatch("matrix data size mismatch");
  for (auto& x : data_) x %= field_.p();
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % field.p();
  return m;
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows,
                         std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.reduce(rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_vectors(PrimeField field, std::size_t cols, std::span<const Vector> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("vector length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  const auto p = static_cast<std::uint64_t>(field_.p());
  Matrix out(field_, rows_, o.cols_);
  std::vector<std::uint64_t> acc(o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(i, k);
      if (a == 0) continue;
      const Scalar* orow = o.data_.data() + k * o.cols_;
      for (std::size_t j = 0; j < o.cols_; ++j) acc[j] = (acc[j] + a * orow[j]) % p;
    }
    for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = static_cast<Scalar>(acc[j]);
  }
  return out;
}

Vector Matrix::operator*(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  const auto p = static_cast<std::uint64_t>(field_.p());
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < cols_; ++k) acc = (acc + std::uint64_t{(*this)(i, k)} * v[k]) % p;
    out[i] = static_cast<Scalar>(acc);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = field_.mul(x, s);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool Matrix::is_zero() const {
  for (auto x : data_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Matrix out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

RowEchelon reduce(const Matrix& m) {
  const auto& f = m.field();
  Matrix a = m;
  RowEchelon out{a, 0, {}};
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      auto rp = a.row(piv);
      auto rr = a.row(r);
      std::swap_ranges(rp.begin(), rp.end(), rr.begin());
    }
    const Scalar inv = f.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Scalar factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (a(r, j) != 0) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.rref = std::move(a);
  return out;
}

std::size_t rank(const Matrix& m) { return reduce(m).rank; }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(m.field(), n));
  auto e = reduce(aug);
  if (e.rank < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.rref.block(0, n, n, n);
}

std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i] % a.field().p();
  auto e = reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols(), 0);
  for (std::size_t i = 0; i < e.rank; ++i) x[e.pivots[i]] = e.rref(i, a.cols());
  return x;
}

// --- Subspace ---------------------------------------------------------------

Subspace::Subspace(PrimeField field, std::size_t ambient_dim) : basis_(field, 0, ambient_dim) {}

Subspace Subspace::full(PrimeField field, std::size_t n) {
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) piv[i] = i;
  return Subspace(Matrix::identity(field, n), std::move(piv));
}

Subspace Subspace::row_space(const Matrix& m) {
  auto e = reduce(m);
  return Subspace(e.rref.block(0, 0, e.rank, m.cols()), std::move(e.pivots));
}

Subspace Subspace::span(PrimeField field, std::size_t n, std::span<const Vector> vectors) {
  return row_space(Matrix::from_vectors(field, n, vectors));
}

Vector Subspace::reduce_vector(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("vector/subspace ambient mismatch");
  const auto& f = field();
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (c == 0) continue;
    auto b = basis_.row(i);
    for (std::size_t j = pivots_[i]; j < r.size(); ++j) {
      if (b[j] != 0) r[j] = f.sub(r[j], f.mul(c, b[j]));
    }
  }
  return r;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  auto r = reduce_vector(v);
  for (auto x : r)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimensionMismatch("subspace ambient mismatch");
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) throw DimensionMismatch("coordinates: vector not in subspace");
  Vector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::with(std::span<const Scalar> v) const {
  auto r = reduce_vector(v);
  bool zero = true;
  for (auto x : r) zero = zero && x == 0;
  if (zero) return *this;
  Matrix m(field(), dim() + 1, ambient_dim());
  m.set_block(0, 0, basis_);
  std::copy(r.begin(), r.end(), m.row(dim()).begin());
  return row_space(m);
}

Subspace kernel_basis(const Matrix& m) {
  auto e = reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> vecs;
  const auto& f = m.field();
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.rank; ++i) v[e.pivots[i]] = f.neg(e.rref(i, free));
    vecs.push_back(std::move(v));
  }
  return Subspace::span(f, n, vecs);
}

Subspace add(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("subspace ambient mismatch");
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  Matrix m(u.field(), u.dim() + v.dim(), u.ambient_dim());
  m.set_block(0, 0, u.basis());
  m.set_block(u.dim(), 0, v.basis());
  return Subspace::row_space(m);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("subspace ambient mismatch");
  const auto& f = u.field();
  const std::size_t n = u.ambient_dim();
  if (u.is_zero() || v.is_zero()) return Subspace(f, n);
  // x = a U = b V  <=>  [U^T | -V^T] (a; b) = 0.
  Matrix sys(f, n, u.dim() + v.dim());
  sys.set_block(0, 0, u.basis().transpose());
  sys.set_block(0, u.dim(), v.basis().transpose().scaled(f.neg(1)));
  auto ker = kernel_basis(sys);
  std::vector<Vector> out;
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    auto coeff = ker.basis().row(k);
    Vector x(n, 0);
    for (std::size_t i = 0; i < u.dim(); ++i) {
      if (coeff[i] == 0) continue;
      auto row = u.basis().row(i);
      for (std::size_t j = 0; j < n; ++j) x[j] = f.add(x[j], f.mul(coeff[i], row[j]));
    }
    out.push_back(std::move(x));
  }
  return Subspace::span(f, n, out);
}

MeetJoin subspace_meet_join(const Subspace& u, const Subspace& v) {
  return MeetJoin{intersect(u, v), add(u, v)};
}

QuotientData quotient_data(std::size_t ambient_dim, const Subspace& u) {
  if (u.ambient_dim() != ambient_dim) throw DimensionMismatch("quotient_data ambient mismatch");
  const auto& f = u.field();
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto c : u.pivots()) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) free.push_back(c);
  const std::size_t q = free.size();
  Matrix proj(f, q, ambient_dim);
  Matrix lift(f, ambient_dim, q);
  for (std::size_t j = 0; j < q; ++j) {
    proj(j, free[j]) = 1;
    lift(free[j], j) = 1;
    for (std::size_t i = 0; i < u.dim(); ++i) proj(j, u.pivots()[i]) = f.neg(u.basis()(i, free[j]));
  }
  return QuotientData{std::move(proj), std::move(lift)};
}

}  // namespace grmlab
