#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "stargate/rational.hpp"

namespace stargate {

/// Dense exact matrix over Q.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix zero(std::size_t n) { return RatMatrix(n, n); }
    /// Column matrix from a vector.
    static RatMatrix from_columns(const std::vector<RatVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RatVector row(std::size_t r) const;
    RatVector column(std::size_t c) const;
    std::vector<RatVector> columns() const;

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& rhs) const;
    RatMatrix operator+(const RatMatrix& rhs) const;
    RatMatrix operator-(const RatMatrix& rhs) const;
    RatMatrix scaled(const Rational& a) const;
    bool operator==(const RatMatrix& rhs) const = default;

    RatVector apply(const RatVector& v) const;

    bool is_zero() const;
    std::size_t rank() const;
    Rational determinant() const;
    /// Throws argument_error when singular.
    RatMatrix inverse() const;
    RatMatrix pow(unsigned e) const;

    /// Reduced row echelon form (in place on a copy), returns pivot columns.
    RatMatrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;

    /// Basis of the right kernel {v : Av = 0}, as column vectors.
    std::vector<RatVector> kernel_basis() const;
    /// Basis of the column space.
    std::vector<RatVector> image_basis() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// A subspace of Q^n kept in a canonical (column-RREF) basis so that
/// equality of subspaces is equality of representations.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
    Subspace(std::size_t ambient_dim, std::vector<RatVector> spanning);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<RatVector>& basis() const { return basis_; }

    bool contains(const RatVector& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& other) const = default;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    /// Image under a linear map.
    Subspace apply(const RatMatrix& m) const;

    static Subspace full(std::size_t n);
    static Subspace kernel_of(const RatMatrix& m);
    static Subspace image_of(const RatMatrix& m);

private:
    void canonicalize(std::vector<RatVector> spanning);

    std::size_t ambient_ = 0;
    std::vector<RatVector> basis_; // canonical: row-echelon over vector entries
};

RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector scaled(const RatVector& v, const Rational& a);
bool is_zero(const RatVector& v);

/// Solves Ax = b; throws argument_error when inconsistent or underdetermined
/// solutions are requested from a singular square system.
RatVector solve(const RatMatrix& a, const RatVector& b);

/// Any particular solution of Ax = b (free variables set to zero); throws
/// argument_error when the system is inconsistent.
RatVector solve_any(const RatMatrix& a, const RatVector& b);

} // namespace stargate
