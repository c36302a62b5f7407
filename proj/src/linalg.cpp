#include "syzex/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace syzex {

bool is_prime(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field::Field(std::uint32_t p) : p_(p)
{
    if (p >= (1u << 16) || !is_prime(p))
        throw std::invalid_argument("field characteristic must be a prime below 65536, got " + std::to_string(p));
}

Scalar Field::inv(Scalar a) const
{
    if (a == 0)
        throw std::domain_error("inverse of zero in GF(" + std::to_string(p_) + ")");
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return reduce(t);
}

Matrix::Matrix(Field f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix shape");
}

Matrix::Matrix(Field f, int rows, int cols, std::vector<Scalar> entries)
    : field_(f), rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("matrix entry count does not match shape");
    for (auto& e : data_)
        e %= f.characteristic();
}

Matrix Matrix::identity(Field f, int n)
{
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(Field f, int rows, const std::vector<Vec>& cols)
{
    Matrix m(f, rows, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols_; ++c) {
        if (static_cast<int>(cols[c].size()) != rows)
            throw std::invalid_argument("column length mismatch");
        for (int r = 0; r < rows; ++r)
            m(r, c) = cols[c][r];
    }
    return m;
}

Vec Matrix::column(int c) const
{
    Vec v(rows_);
    for (int r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

bool Matrix::is_zero() const
{
    for (auto e : data_)
        if (e != 0)
            return false;
    return true;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(field_, rows_, o.cols_);
    const std::uint64_t p = field_.characteristic();
    std::vector<std::uint64_t> acc(o.cols_);
    for (int r = 0; r < rows_; ++r) {
        std::fill(acc.begin(), acc.end(), 0);
        for (int k = 0; k < cols_; ++k) {
            const std::uint64_t a = (*this)(r, k);
            if (a == 0)
                continue;
            const Scalar* orow = o.data_.data() + static_cast<std::size_t>(k) * o.cols_;
            for (int c = 0; c < o.cols_; ++c)
                acc[c] += a * orow[c];
            // keep the accumulators bounded: p < 2^16 so each term < 2^32
            if ((k & 0xff) == 0xff)
                for (auto& x : acc)
                    x %= p;
        }
        for (int c = 0; c < o.cols_; ++c)
            out(r, c) = static_cast<Scalar>(acc[c] % p);
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.add(data_[i], o.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.sub(data_[i], o.data_[i]);
    return out;
}

Matrix Matrix::scaled(Scalar s) const
{
    Matrix out(*this);
    for (auto& e : out.data_)
        e = field_.mul(e, s);
    return out;
}

Vec Matrix::apply(std::span<const Scalar> v) const
{
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("matrix-vector shape mismatch");
    Vec out(rows_, 0);
    for (int r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (int c = 0; c < cols_; ++c)
            acc += static_cast<std::uint64_t>((*this)(r, c)) * v[c];
        out[r] = static_cast<Scalar>(acc % field_.characteristic());
    }
    return out;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const
{
    Matrix out(field_, nr, nc);
    for (int r = 0; r < nr; ++r)
        for (int c = 0; c < nc; ++c)
            out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
}

void Matrix::set_block(int r0, int c0, const Matrix& b)
{
    for (int r = 0; r < b.rows_; ++r)
        for (int c = 0; c < b.cols_; ++c)
            (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::hstack(const Matrix& right) const
{
    if (rows_ != right.rows_)
        throw std::invalid_argument("hstack row mismatch");
    Matrix out(field_, rows_, cols_ + right.cols_);
    out.set_block(0, 0, *this);
    out.set_block(0, cols_, right);
    return out;
}

Matrix Matrix::vstack(const Matrix& below) const
{
    if (cols_ != below.cols_)
        throw std::invalid_argument("vstack column mismatch");
    Matrix out(field_, rows_ + below.rows_, cols_);
    out.set_block(0, 0, *this);
    out.set_block(rows_, 0, below);
    return out;
}

Matrix Matrix::block_diagonal(Field f, const std::vector<Matrix>& blocks)
{
    int nr = 0, nc = 0;
    for (const auto& b : blocks) {
        nr += b.rows_;
        nc += b.cols_;
    }
    Matrix out(f, nr, nc);
    int r = 0, c = 0;
    for (const auto& b : blocks) {
        out.set_block(r, c, b);
        r += b.rows_;
        c += b.cols_;
    }
    return out;
}

Matrix Matrix::power(unsigned long e) const
{
    if (!is_square())
        throw std::invalid_argument("power of a non-square matrix");
    Matrix result = identity(field_, rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

namespace {

// In-place reduction of rows [0, rows) restricted to columns [0, pivot_limit)
// for pivot search; row operations act on the full width.
int reduce_in_place(Matrix& m, int pivot_limit, std::vector<int>* pivots)
{
    const Field f = m.field();
    const int rows = m.rows();
    const int cols = m.cols();
    int rank = 0;
    for (int c = 0; c < pivot_limit && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != rank)
            for (int k = 0; k < cols; ++k)
                std::swap(m(piv, k), m(rank, k));
        const Scalar inv = f.inv(m(rank, c));
        if (inv != 1)
            for (int k = c; k < cols; ++k)
                m(rank, k) = f.mul(m(rank, k), inv);
        for (int r = 0; r < rows; ++r) {
            if (r == rank)
                continue;
            const Scalar factor = m(r, c);
            if (factor == 0)
                continue;
            const Scalar nf = f.neg(factor);
            for (int k = c; k < cols; ++k) {
                const Scalar pv = m(rank, k);
                if (pv != 0)
                    m(r, k) = f.add(m(r, k), f.mul(nf, pv));
            }
        }
        if (pivots)
            pivots->push_back(c);
        ++rank;
    }
    return rank;
}

} // namespace

int Matrix::rank() const
{
    Matrix copy = *this;
    return reduce_in_place(copy, cols_, nullptr);
}

std::optional<Matrix> Matrix::inverse() const
{
    if (!is_square())
        return std::nullopt;
    Matrix aug = hstack(identity(field_, rows_));
    int r = reduce_in_place(aug, cols_, nullptr);
    if (r < rows_)
        return std::nullopt;
    return aug.block(0, cols_, rows_, rows_);
}

RrefResult rref(const Matrix& m)
{
    RrefResult out;
    out.reduced = m;
    out.rank = reduce_in_place(out.reduced, m.cols(), &out.pivot_cols);
    return out;
}

Matrix kernel_basis(const Matrix& m)
{
    const Field f = m.field();
    auto rr = rref(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (int c : rr.pivot_cols)
        is_pivot[c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    Matrix k(f, m.cols(), static_cast<int>(free_cols.size()));
    for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
        const int fc = free_cols[j];
        k(fc, j) = 1;
        for (int r = 0; r < rr.rank; ++r)
            k(rr.pivot_cols[r], j) = f.neg(rr.reduced(r, fc));
    }
    return k;
}

std::optional<Vec> solve(const Matrix& m, std::span<const Scalar> b)
{
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("solve: right-hand side length mismatch");
    const Field f = m.field();
    Matrix aug(f, m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (int r = 0; r < m.rows(); ++r)
        aug(r, m.cols()) = b[r] % f.characteristic();
    std::vector<int> pivots;
    const int rank = reduce_in_place(aug, m.cols(), &pivots);
    for (int r = rank; r < m.rows(); ++r)
        if (aug(r, m.cols()) != 0)
            return std::nullopt;
    Vec x(m.cols(), 0);
    for (int r = 0; r < rank; ++r)
        x[pivots[r]] = aug(r, m.cols());
    return x;
}

Matrix column_space_basis(const Matrix& m)
{
    auto rr = rref(m);
    std::vector<Vec> cols;
    cols.reserve(rr.pivot_cols.size());
    for (int c : rr.pivot_cols)
        cols.push_back(m.column(c));
    return Matrix::from_columns(m.field(), m.rows(), cols);
}

QuotientMap quotient_map(const Matrix& span, int ambient_dim)
{
    const Field f = span.field();
    QuotientMap q;
    Matrix rows = span.cols() == 0 ? Matrix(f, 0, ambient_dim) : span.transpose();
    auto rr = rref(rows);
    q.sub_dim = rr.rank;
    std::vector<char> is_pivot(ambient_dim, 0);
    for (int c : rr.pivot_cols)
        is_pivot[c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    const int qd = static_cast<int>(free_cols.size());
    // v mod W: subtract v[pivot_r] * row_r for each pivot row, then read the
    // free coordinates.
    q.projection = Matrix(f, qd, ambient_dim);
    for (int j = 0; j < qd; ++j)
        q.projection(j, free_cols[j]) = 1;
    for (int r = 0; r < rr.rank; ++r) {
        const int pc = rr.pivot_cols[r];
        for (int j = 0; j < qd; ++j)
            q.projection(j, pc) = f.neg(rr.reduced(r, free_cols[j]));
    }
    q.section = Matrix(f, ambient_dim, qd);
    for (int j = 0; j < qd; ++j)
        q.section(free_cols[j], j) = 1;
    return q;
}

Coordinates::Coordinates(const Matrix& basis)
    : field_(basis.field()), ambient_(basis.rows()), dim_(basis.cols())
{
    Matrix aug = basis.hstack(Matrix::identity(field_, ambient_));
    reduced_ = aug;
    reduce_in_place(reduced_, dim_, &pivots_);
    if (static_cast<int>(pivots_.size()) != dim_)
        throw std::invalid_argument("Coordinates: basis columns are linearly dependent");
}

std::optional<Vec> Coordinates::of(std::span<const Scalar> v) const
{
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("Coordinates: vector length mismatch");
    const std::uint64_t p = field_.characteristic();
    Vec out(dim_, 0);
    for (int r = 0; r < ambient_; ++r) {
        std::uint64_t acc = 0;
        for (int c = 0; c < ambient_; ++c) {
            const Scalar e = reduced_(r, dim_ + c);
            if (e != 0)
                acc += static_cast<std::uint64_t>(e) * v[c];
        }
        const auto val = static_cast<Scalar>(acc % p);
        if (r < dim_)
            out[r] = val;
        else if (val != 0)
            return std::nullopt;
    }
    return out;
}

std::string to_string(const Matrix& m)
{
    std::ostringstream os;
    os << '[';
    for (int r = 0; r < m.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (int c = 0; c < m.cols(); ++c)
            os << (c ? "," : "") << m(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

} // namespace syzex
