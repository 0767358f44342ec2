#include "orbicoh/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "orbicoh/error.hpp"

namespace orbicoh {

namespace {

void require_same_prime(const Matrix& a, const Matrix& b, const char* what) {
  if (a.prime() != b.prime())
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": matrices over different fields");
}

// row_dst += c * row_src on columns [from, cols)
inline void axpy_row(Scalar* dst, const Scalar* src, Scalar c, std::size_t from, std::size_t cols,
                     std::uint32_t p) {
  if (c == 0) return;
  if (p == 2) {
    for (std::size_t j = from; j < cols; ++j) dst[j] ^= src[j];
    return;
  }
  for (std::size_t j = from; j < cols; ++j)
    if (src[j] != 0) dst[j] = (dst[j] + c * src[j]) % p;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 16) || !is_prime(p))
    throw Error(ErrorCode::NotPrime, "characteristic " + std::to_string(p) + " is not a prime below 65536");
}

bool PrimeField::is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Scalar PrimeField::reduce(long long v) const noexcept {
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += p_;
  return static_cast<Scalar>(m);
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw Error(ErrorCode::InternalError, "inverse of zero");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p_;
  std::uint32_t e = p_ - 2;
  while (e) {
    if (e & 1u) result = result * base % p_;
    base = base * base % p_;
    e >>= 1u;
  }
  return static_cast<Scalar>(result);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, std::uint32_t p) {
  Matrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long long>>& rows, std::uint32_t p) {
  PrimeField f(p);
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), nc, p);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = f.reduce(rows[i][j]);
  }
  return m;
}

Matrix Matrix::column_vector(std::span<const Scalar> v, std::uint32_t p) {
  Matrix m(v.size(), 1, p);
  std::copy(v.begin(), v.end(), m.data_.begin());
  return m;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
}

bool Matrix::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::DimensionMismatch, "block out of range");
  Matrix b(nr, nc, p_);
  for (std::size_t i = 0; i < nr; ++i)
    std::copy_n(row(r0 + i) + c0, nc, b.row(i));
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    throw Error(ErrorCode::DimensionMismatch, "set_block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i) std::copy_n(b.row(i), b.cols(), row(r0 + i) + c0);
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& b, Scalar scale) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    throw Error(ErrorCode::DimensionMismatch, "add_block out of range");
  scale %= p_;
  if (scale == 0) return;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    Scalar* dst = row(r0 + i) + c0;
    const Scalar* src = b.row(i);
    for (std::size_t j = 0; j < b.cols(); ++j) dst[j] = (dst[j] + scale * src[j]) % p_;
  }
}

Matrix Matrix::columns(std::span<const std::size_t> idx) const {
  Matrix m(rows_, idx.size(), p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_prime(*this, rhs, "multiply");
  if (cols_ != rhs.rows_)
    throw Error(ErrorCode::DimensionMismatch, "multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                                  " by " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  Matrix out(rows_, rhs.cols_, p_);
  std::vector<std::uint64_t> acc(rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    const Scalar* a = row(i);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t aik = a[k];
      if (aik == 0) continue;
      const Scalar* b = rhs.row(k);
      for (std::size_t j = 0; j < rhs.cols_; ++j) acc[j] += aik * b[j];
    }
    Scalar* o = out.row(i);
    for (std::size_t j = 0; j < rhs.cols_; ++j) o[j] = static_cast<Scalar>(acc[j] % p_);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_prime(*this, rhs, "add");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::DimensionMismatch, "add shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + rhs.data_[i]) % p_;
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require_same_prime(*this, rhs, "subtract");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::DimensionMismatch, "subtract shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + p_ - rhs.data_[i]) % p_;
  return out;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix out(*this);
  s %= p_;
  for (auto& x : out.data_) x = (x * s) % p_;
  return out;
}

Matrix Matrix::hstack(std::span<const Matrix> parts, std::size_t rows, std::uint32_t p) {
  std::size_t total = 0;
  for (const auto& m : parts) {
    if (m.rows() != rows) throw Error(ErrorCode::DimensionMismatch, "hstack row mismatch");
    total += m.cols();
  }
  Matrix out(rows, total, p);
  std::size_t c = 0;
  for (const auto& m : parts) {
    out.set_block(0, c, m);
    c += m.cols();
  }
  return out;
}

Matrix Matrix::vstack(std::span<const Matrix> parts, std::size_t cols, std::uint32_t p) {
  std::size_t total = 0;
  for (const auto& m : parts) {
    if (m.cols() != cols) throw Error(ErrorCode::DimensionMismatch, "vstack column mismatch");
    total += m.rows();
  }
  Matrix out(total, cols, p);
  std::size_t r = 0;
  for (const auto& m : parts) {
    out.set_block(r, 0, m);
    r += m.rows();
  }
  return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  require_same_prime(a, b, "hstack");
  const Matrix parts[] = {a, b};
  return hstack(parts, a.rows(), a.prime());
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  require_same_prime(a, b, "vstack");
  const Matrix parts[] = {a, b};
  return vstack(parts, a.cols(), a.prime());
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  require_same_prime(a, b, "kron");
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.prime());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = (x * b(k, l)) % a.prime();
    }
  return out;
}

Matrix Matrix::direct_sum(std::span<const Matrix> blocks, std::uint32_t p) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix out(r, c, p);
  r = c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
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

RrefResult rref(Matrix a) {
  const std::uint32_t p = a.prime();
  PrimeField field(p);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) std::swap_ranges(a.row(piv), a.row(piv) + a.cols(), a.row(r));
    Scalar* prow = a.row(r);
    if (prow[c] != 1) {
      const Scalar inv = field.inv(prow[c]);
      for (std::size_t j = c; j < a.cols(); ++j) prow[j] = (prow[j] * inv) % p;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      Scalar* row = a.row(i);
      if (row[c] != 0) axpy_row(row, prow, field.neg(row[c]), c, a.cols(), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& a) {
  if (a.empty()) return 0;
  // Eliminate along the shorter side.
  if (a.rows() > a.cols()) return rref(a.transpose()).rank();
  return rref(a).rank();
}

Matrix kernel_basis(const Matrix& a) {
  const std::uint32_t p = a.prime();
  PrimeField field(p);
  const auto rr = rref(a);
  std::vector<char> is_pivot(a.cols(), 0);
  for (auto c : rr.pivots) is_pivot[c] = 1;
  const std::size_t nullity = a.cols() - rr.rank();
  Matrix k(a.cols(), nullity, p);
  std::size_t col = 0;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    k(f, col) = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) k(rr.pivots[i], col) = field.neg(rr.reduced(i, f));
    ++col;
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "solve: A has " + std::to_string(a.rows()) + " rows, B has " +
                                                  std::to_string(b.rows()));
  require_same_prime(a, b, "solve");
  const auto rr = rref(Matrix::hstack(a, b));
  Matrix x(a.cols(), b.cols(), a.prime());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    const std::size_t pc = rr.pivots[i];
    if (pc >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pc, j) = rr.reduced(i, a.cols() + j);
  }
  return x;
}

Matrix column_space_basis(const Matrix& a) {
  const auto rr = rref(a);
  return a.columns(rr.pivots);
}

EchelonSpan::EchelonSpan(std::size_t n, std::uint32_t p) : n_(n), field_(p) {}

std::vector<Scalar> EchelonSpan::reduce(std::span<const Scalar> v) const {
  std::vector<Scalar> w(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = w[pivots_[i]];
    if (c != 0) axpy_row(w.data(), rows_[i].data(), field_.neg(c), pivots_[i], n_, field_.p());
  }
  return w;
}

bool EchelonSpan::contains(std::span<const Scalar> v) const {
  const auto w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](Scalar x) { return x == 0; });
}

bool EchelonSpan::insert(std::span<const Scalar> v) {
  if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "EchelonSpan::insert length");
  auto w = reduce(v);
  std::size_t piv = 0;
  while (piv < n_ && w[piv] == 0) ++piv;
  if (piv == n_) return false;
  const Scalar inv = field_.inv(w[piv]);
  for (auto& x : w) x = field_.mul(x, inv);
  // keep existing rows fully reduced against the new pivot
  for (auto& row : rows_) {
    const Scalar c = row[piv];
    if (c != 0) axpy_row(row.data(), w.data(), field_.neg(c), 0, n_, field_.p());
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(w));
  return true;
}

bool EchelonSpan::insert_column(const Matrix& m, std::size_t c) {
  std::vector<Scalar> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, c);
  return insert(v);
}

}  // namespace orbicoh
