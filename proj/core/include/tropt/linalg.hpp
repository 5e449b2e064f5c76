#pragma once

/// Dense vectors and matrices over an idempotent semifield, with the derived
/// constructs used throughout: conjugate row vectors, trace, the bounded
/// Kleene star A* = I (+) A (+) ... (+) A^{n-1}, and Tr(A) = (+)_m tr(A^m).
///
/// Containers carry the semifield; entries are plain doubles. Mixing tags in
/// one operation is a DomainError, shape mismatches are DimensionErrors.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "tropt/errors.hpp"
#include "tropt/semifield.hpp"

namespace tropt {

class Vector {
  public:
    Vector(Semifield sf, std::vector<double> entries);
    Vector(Semifield sf, std::initializer_list<double> entries);

    /// All-zero vector of length n.
    static Vector zeros(Semifield sf, std::size_t n);

    Semifield semifield() const { return sf_; }
    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    double& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<double>& entries() const { return entries_; }

    /// No zero components.
    bool regular() const;
    /// All components zero.
    bool all_zero() const;

    friend bool operator==(const Vector& a, const Vector& b);

  private:
    Semifield sf_;
    std::vector<double> entries_;
};

/// Row vector produced by conjugation: entry i is inv(x_i) for nonzero x_i,
/// zero otherwise.
class CoVector {
  public:
    CoVector(Semifield sf, std::vector<double> entries);

    Semifield semifield() const { return sf_; }
    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<double>& entries() const { return entries_; }

    bool regular() const;
    /// Indices of nonzero entries.
    std::vector<std::size_t> support() const;

    friend bool operator==(const CoVector& a, const CoVector& b);

  private:
    Semifield sf_;
    std::vector<double> entries_;
};

class Matrix {
  public:
    Matrix(Semifield sf, std::size_t rows, std::size_t cols, std::vector<double> data);
    Matrix(Semifield sf, std::initializer_list<std::initializer_list<double>> rows);
    Matrix(Semifield sf, const std::vector<std::vector<double>>& rows);

    static Matrix zeros(Semifield sf, std::size_t rows, std::size_t cols);
    static Matrix identity(Semifield sf, std::size_t n);

    Semifield semifield() const { return sf_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const std::vector<double>& data() const { return data_; }

    bool all_zero() const;
    bool row_regular() const;
    bool column_regular() const;
    /// Columns that are entirely zero.
    std::vector<std::size_t> zero_columns() const;

    Vector column(std::size_t j) const;
    /// Square submatrix at diagonal offset, e.g. a normal-form block.
    Matrix diagonal_block(std::size_t offset, std::size_t size) const;

    friend bool operator==(const Matrix& a, const Matrix& b);

  private:
    Semifield sf_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_; // row-major
};

// Entrywise (+).
Matrix add(const Matrix& a, const Matrix& b);
Vector add(const Vector& a, const Vector& b);

// (a b)_ij = (+)_k a_ik (*) b_kj.
Matrix multiply(const Matrix& a, const Matrix& b);
Vector multiply(const Matrix& a, const Vector& x);
CoVector multiply(const CoVector& y, const Matrix& a);
/// Scalar product y (*) x of a row and a column vector.
double multiply(const CoVector& y, const Vector& x);
/// Outer product x (*) y.
Matrix multiply(const Vector& x, const CoVector& y);

// Scalar multiple, entrywise.
Matrix scale(double c, const Matrix& a);
Vector scale(double c, const Vector& x);

/// Entrywise pseudo-inverse x^- of a nonzero vector; DomainError on the
/// all-zero vector.
CoVector conjugate(const Vector& x);
/// Conjugate of a row vector, giving back a column vector (as in (d^- A)^-).
Vector conjugate(const CoVector& y);

/// tr A = (+) of the diagonal.
double trace(const Matrix& a);

/// A* = I (+) A (+) ... (+) A^{n-1}, accumulated over n-1 multiplications.
Matrix bounded_star(const Matrix& a);

/// Tr(A) = (+)_{m=1..n} tr(A^m).
double tr_func(const Matrix& a);

} // namespace tropt
