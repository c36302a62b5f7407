#pragma once

// Dense linear algebra over prime fields GF(p).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace syzex {

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

/// Prime field GF(p). Characteristic is limited to p < 2^16 so that a
/// product of two residues fits in 32 bits.
class Field {
public:
    Field() = default;
    explicit Field(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }

    Scalar reduce(std::int64_t v) const
    {
        auto r = v % static_cast<std::int64_t>(p_);
        return static_cast<Scalar>(r < 0 ? r + p_ : r);
    }
    Scalar add(Scalar a, Scalar b) const
    {
        Scalar s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const { return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_); }
    Scalar inv(Scalar a) const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    std::uint32_t p_ = 2;
};

bool is_prime(std::uint32_t n);

/// An element of GF(p) that carries its characteristic.
class FieldElement {
public:
    FieldElement(Field f, std::int64_t v) : field_(f), value_(f.reduce(v)) {}

    Scalar value() const { return value_; }
    Field field() const { return field_; }

    FieldElement operator+(FieldElement o) const { return {field_, field_.add(value_, o.value_), raw_tag{}}; }
    FieldElement operator-(FieldElement o) const { return {field_, field_.sub(value_, o.value_), raw_tag{}}; }
    FieldElement operator*(FieldElement o) const { return {field_, field_.mul(value_, o.value_), raw_tag{}}; }
    FieldElement inverse() const { return {field_, field_.inv(value_), raw_tag{}}; }

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    struct raw_tag {};
    FieldElement(Field f, Scalar v, raw_tag) : field_(f), value_(v) {}
    Field field_;
    Scalar value_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, int rows, int cols);
    Matrix(Field f, int rows, int cols, std::vector<Scalar> entries);

    static Matrix identity(Field f, int n);
    static Matrix zero(Field f, int rows, int cols) { return Matrix(f, rows, cols); }
    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(Field f, int rows, const std::vector<Vec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Field field() const { return field_; }
    const std::vector<Scalar>& entries() const { return data_; }

    Scalar operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    Scalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::span<const Scalar> row(int r) const { return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }
    Vec column(int c) const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(Scalar s) const;
    Vec apply(std::span<const Scalar> v) const;

    /// Rows [r0, r0+nr) and columns [c0, c0+nc).
    Matrix block(int r0, int c0, int nr, int nc) const;
    void set_block(int r0, int c0, const Matrix& b);

    Matrix hstack(const Matrix& right) const;
    Matrix vstack(const Matrix& below) const;
    static Matrix block_diagonal(Field f, const std::vector<Matrix>& blocks);

    /// Power by repeated squaring; requires a square matrix.
    Matrix power(unsigned long e) const;

    int rank() const;
    std::optional<Matrix> inverse() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    Field field_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;
    int rank = 0;
    std::vector<int> pivot_cols;
};

/// Reduced row echelon form. Pivots are taken as the first nonzero entry in
/// column order, so the result is canonical for the row space.
RrefResult rref(const Matrix& m);

/// Basis of the null space {v : m v = 0}, as the columns of a cols() x k matrix.
/// The basis vector for free column f has a 1 in position f and zeros in the
/// other free positions.
Matrix kernel_basis(const Matrix& m);

/// Some x with m x = b if b is in the column space; free variables are zero.
std::optional<Vec> solve(const Matrix& m, std::span<const Scalar> b);

/// Basis (columns) of the column space, chosen as the pivot columns of m.
Matrix column_space_basis(const Matrix& m);

/// Linear data for the quotient V / W where W is spanned by the columns of
/// `span` inside V = GF(p)^n. `projection` is (n - dim W) x n, `section` is
/// n x (n - dim W) with projection * section = identity.
struct QuotientMap {
    Matrix projection;
    Matrix section;
    int sub_dim = 0;
};
QuotientMap quotient_map(const Matrix& span, int ambient_dim);

/// Coordinates of vectors in a fixed subspace basis (columns of `basis`).
/// Construct once, then query many vectors.
class Coordinates {
public:
    Coordinates() = default;
    explicit Coordinates(const Matrix& basis);
    /// Coordinates of v, or nullopt if v is not in the span.
    std::optional<Vec> of(std::span<const Scalar> v) const;
    int dim() const { return dim_; }

private:
    Field field_;
    int ambient_ = 0;
    int dim_ = 0;
    Matrix reduced_;   // rref of [basis^T | I]
    std::vector<int> pivots_;
};

std::string to_string(const Matrix& m);

} // namespace syzex
