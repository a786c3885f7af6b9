#pragma once

// Sparse exact vectors and matrices, Kronecker products and exact elimination.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weakore/scalar.hpp"

namespace weakore {

/// Sparse vector: sorted (index, value) pairs, no stored zeros.
class Vector {
public:
    using Entry = std::pair<std::size_t, Scalar>;

    Vector() = default;
    explicit Vector(std::size_t dim) : dim_(dim) {}
    /// Entries may be unsorted and repeated; they are summed and zeros dropped.
    Vector(std::size_t dim, std::vector<Entry> entries);

    static Vector unit(std::size_t dim, std::size_t i, const Scalar& value = Scalar(1));
    static Vector from_dense(std::span<const Scalar> values);

    std::size_t dim() const { return dim_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    Scalar operator[](std::size_t i) const;
    std::vector<Scalar> to_dense() const;

    Vector& add_scaled(const Vector& other, const Scalar& c);
    Vector& operator+=(const Vector& o) { return add_scaled(o, Scalar(1)); }
    Vector& operator-=(const Vector& o) { return add_scaled(o, Scalar(-1)); }
    Vector& operator*=(const Scalar& c);

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& c, Vector v) { return v *= c; }
    Vector operator-() const;

    friend bool operator==(const Vector& a, const Vector& b);
    friend bool canonical_less(const Vector& a, const Vector& b);

    /// Dot product with a functional given by coefficients on the same basis.
    Scalar dot(const Vector& other) const;

    /// Human-readable form, e.g. "E11 - 1/2*t"; falls back to b<i> labels.
    std::string to_string(std::span<const std::string> labels = {}) const;

private:
    std::size_t dim_ = 0;
    std::vector<Entry> entries_;
};

/// Outer product a ⊗ b with row-major pair index i*dim(b)+j.
Vector tensor(const Vector& a, const Vector& b);

/// Dense scratch space for summing many sparse contributions.
class Accumulator {
public:
    explicit Accumulator(std::size_t dim);
    void add(std::size_t i, const Scalar& c);
    void add_scaled(const Vector& v, const Scalar& c);
    /// Extracts the sum and resets the accumulator.
    Vector take();

private:
    std::size_t dim_;
    std::vector<Scalar> values_;
    std::vector<char> touched_;
    std::vector<std::size_t> order_;
};

/// Sparse matrix in canonical column-major triplet order, no stored zeros.
class Matrix {
public:
    struct Triplet {
        std::size_t row;
        std::size_t col;
        Scalar value;
    };

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Triplet> entries);

    static Matrix identity(std::size_t n, const Scalar& one = Scalar(1));
    static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);
    static Matrix from_rows(std::size_t cols, std::span<const Vector> rows);
    static Matrix from_dense(const std::vector<std::vector<Scalar>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Triplet>& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    Scalar at(std::size_t r, std::size_t c) const;
    Vector column(std::size_t c) const;
    std::vector<Vector> columns() const;
    std::vector<Vector> row_vectors() const;

    Vector apply(const Vector& x) const;
    Matrix transpose() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);

    /// First column index where a and b differ, if any.
    friend std::optional<std::size_t> first_differing_column(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Triplet> entries_;
};

/// Kronecker product; row (i,k) maps to i*b.rows()+k, column (j,l) to j*b.cols()+l.
Matrix kron(const Matrix& a, const Matrix& b);

/// Incremental exact row reduction producing a reduced row echelon form.
/// Pivots are chosen as the first nonzero column of each reduced row.
class RowReducer {
public:
    explicit RowReducer(std::size_t cols) : cols_(cols) {}

    /// Reduces `row` against the current pivots; adds it if independent.
    bool add_row(Vector row);
    /// Remainder of `v` after reduction; zero iff v is in the row space.
    Vector reduce(Vector v) const;
    bool in_span(const Vector& v) const { return reduce(v).is_zero(); }

    std::size_t rank() const { return pivot_rows_.size(); }
    std::size_t cols() const { return cols_; }
    /// Fully reduced basis of the row space, sorted by pivot column.
    std::vector<Vector> basis() const;
    std::vector<std::size_t> pivot_columns() const;
    /// Right null space basis of the accumulated rows, one vector per free column.
    std::vector<Vector> kernel() const;

private:
    std::size_t cols_;
    std::uint64_t modulus_ = 0;
    // pivot column -> row with a 1 at the pivot and zeros in every other pivot column
    std::vector<std::pair<std::size_t, Vector>> pivot_rows_;
};

/// Basis of the right null space of m (reduced column echelon convention).
std::vector<Vector> kernel_basis(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Reduced basis of the column space of m.
std::vector<Vector> image_basis(const Matrix& m);
/// Some x with m x = b, or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace weakore
