#include "tropt/linalg.hpp"

#include <string>
#include <utility>

namespace tropt {

namespace {

void check_carrier(const Semifield& sf, const std::vector<double>& values) {
    for (double v : values) {
        if (!sf.in_carrier(v))
            throw DomainError("value " + std::to_string(v) + " outside the " + tag_name(sf.tag()) +
                              " carrier");
    }
}

void check_same_tag(const Semifield& a, const Semifield& b) {
    if (!(a == b)) throw DomainError("semifield tags do not match");
}

} // namespace

Vector::Vector(Semifield sf, std::vector<double> entries) : sf_(sf), entries_(std::move(entries)) {
    if (entries_.empty()) throw DimensionError("vector must have length >= 1");
    check_carrier(sf_, entries_);
}

Vector::Vector(Semifield sf, std::initializer_list<double> entries)
    : Vector(sf, std::vector<double>(entries)) {}

Vector Vector::zeros(Semifield sf, std::size_t n) {
    return Vector(sf, std::vector<double>(n, sf.zero()));
}

bool Vector::regular() const {
    for (double v : entries_)
        if (sf_.is_zero(v)) return false;
    return true;
}

bool Vector::all_zero() const {
    for (double v : entries_)
        if (!sf_.is_zero(v)) return false;
    return true;
}

bool operator==(const Vector& a, const Vector& b) {
    return a.sf_ == b.sf_ && a.entries_ == b.entries_;
}

CoVector::CoVector(Semifield sf, std::vector<double> entries)
    : sf_(sf), entries_(std::move(entries)) {
    if (entries_.empty()) throw DimensionError("covector must have length >= 1");
    check_carrier(sf_, entries_);
}

bool CoVector::regular() const {
    for (double v : entries_)
        if (sf_.is_zero(v)) return false;
    return true;
}

std::vector<std::size_t> CoVector::support() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!sf_.is_zero(entries_[i])) idx.push_back(i);
    return idx;
}

bool operator==(const CoVector& a, const CoVector& b) {
    return a.sf_ == b.sf_ && a.entries_ == b.entries_;
}

Matrix::Matrix(Semifield sf, std::size_t rows, std::size_t cols, std::vector<double> data)
    : sf_(sf), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix must have positive dimensions");
    if (data_.size() != rows_ * cols_) throw DimensionError("matrix data size mismatch");
    check_carrier(sf_, data_);
}

Matrix::Matrix(Semifield sf, std::initializer_list<std::initializer_list<double>> rows)
    : Matrix(sf, std::vector<std::vector<double>>(rows.begin(), rows.end())) {}

Matrix::Matrix(Semifield sf, const std::vector<std::vector<double>>& rows) : sf_(sf) {
    if (rows.empty() || rows.front().empty())
        throw DimensionError("matrix must have positive dimensions");
    rows_ = rows.size();
    cols_ = rows.front().size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionError("matrix rows have unequal lengths");
        data_.insert(data_.end(), row.begin(), row.end());
    }
    check_carrier(sf_, data_);
}

Matrix Matrix::zeros(Semifield sf, std::size_t rows, std::size_t cols) {
    return Matrix(sf, rows, cols, std::vector<double>(rows * cols, sf.zero()));
}

Matrix Matrix::identity(Semifield sf, std::size_t n) {
    Matrix m = zeros(sf, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = sf.one();
    return m;
}

bool Matrix::all_zero() const {
    for (double v : data_)
        if (!sf_.is_zero(v)) return false;
    return true;
}

bool Matrix::row_regular() const {
    for (std::size_t i = 0; i < rows_; ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < cols_ && !nonzero; ++j) nonzero = !sf_.is_zero((*this)(i, j));
        if (!nonzero) return false;
    }
    return true;
}

bool Matrix::column_regular() const { return zero_columns().empty(); }

std::vector<std::size_t> Matrix::zero_columns() const {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < cols_; ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < rows_ && !nonzero; ++i) nonzero = !sf_.is_zero((*this)(i, j));
        if (!nonzero) idx.push_back(j);
    }
    return idx;
}

Vector Matrix::column(std::size_t j) const {
    std::vector<double> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return Vector(sf_, std::move(out));
}

Matrix Matrix::diagonal_block(std::size_t offset, std::size_t size) const {
    if (!square() || offset + size > rows_) throw DimensionError("diagonal block out of range");
    Matrix out = zeros(sf_, size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) out(i, j) = (*this)(offset + i, offset + j);
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.sf_ == b.sf_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix add(const Matrix& a, const Matrix& b) {
    check_same_tag(a.semifield(), b.semifield());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("matrix add: shape mismatch");
    const Semifield sf = a.semifield();
    std::vector<double> out(a.data().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = sf.add(a.data()[k], b.data()[k]);
    return Matrix(sf, a.rows(), a.cols(), std::move(out));
}

Vector add(const Vector& a, const Vector& b) {
    check_same_tag(a.semifield(), b.semifield());
    if (a.size() != b.size()) throw DimensionError("vector add: length mismatch");
    const Semifield sf = a.semifield();
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = sf.add(a[i], b[i]);
    return Vector(sf, std::move(out));
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    check_same_tag(a.semifield(), b.semifield());
    if (a.cols() != b.rows()) throw DimensionError("matrix multiply: inner dimension mismatch");
    const Semifield sf = a.semifield();
    Matrix out = Matrix::zeros(sf, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (sf.is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) = sf.add(out(i, j), sf.mul(aik, b(k, j)));
        }
    return out;
}

Vector multiply(const Matrix& a, const Vector& x) {
    check_same_tag(a.semifield(), x.semifield());
    if (a.cols() != x.size()) throw DimensionError("matrix-vector multiply: dimension mismatch");
    const Semifield sf = a.semifield();
    std::vector<double> out(a.rows(), sf.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            out[i] = sf.add(out[i], sf.mul(a(i, k), x[k]));
    return Vector(sf, std::move(out));
}

CoVector multiply(const CoVector& y, const Matrix& a) {
    check_same_tag(y.semifield(), a.semifield());
    if (y.size() != a.rows()) throw DimensionError("covector-matrix multiply: dimension mismatch");
    const Semifield sf = a.semifield();
    std::vector<double> out(a.cols(), sf.zero());
    for (std::size_t k = 0; k < a.rows(); ++k) {
        const double yk = y[k];
        if (sf.is_zero(yk)) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) out[j] = sf.add(out[j], sf.mul(yk, a(k, j)));
    }
    return CoVector(sf, std::move(out));
}

double multiply(const CoVector& y, const Vector& x) {
    check_same_tag(y.semifield(), x.semifield());
    if (y.size() != x.size()) throw DimensionError("scalar product: length mismatch");
    const Semifield sf = x.semifield();
    double out = sf.zero();
    for (std::size_t i = 0; i < x.size(); ++i) out = sf.add(out, sf.mul(y[i], x[i]));
    return out;
}

Matrix multiply(const Vector& x, const CoVector& y) {
    check_same_tag(x.semifield(), y.semifield());
    const Semifield sf = x.semifield();
    Matrix out = Matrix::zeros(sf, x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) out(i, j) = sf.mul(x[i], y[j]);
    return out;
}

Matrix scale(double c, const Matrix& a) {
    const Semifield sf = a.semifield();
    if (!sf.in_carrier(c)) throw DomainError("scale: scalar outside carrier");
    std::vector<double> out(a.data().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = sf.mul(c, a.data()[k]);
    return Matrix(sf, a.rows(), a.cols(), std::move(out));
}

Vector scale(double c, const Vector& x) {
    const Semifield sf = x.semifield();
    if (!sf.in_carrier(c)) throw DomainError("scale: scalar outside carrier");
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = sf.mul(c, x[i]);
    return Vector(sf, std::move(out));
}

CoVector conjugate(const Vector& x) {
    if (x.all_zero()) throw DomainError("conjugate is undefined for the all-zero vector");
    const Semifield sf = x.semifield();
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = sf.is_zero(x[i]) ? sf.zero() : sf.inv(x[i]);
    return CoVector(sf, std::move(out));
}

Vector conjugate(const CoVector& y) {
    const Semifield sf = y.semifield();
    std::vector<double> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        out[i] = sf.is_zero(y[i]) ? sf.zero() : sf.inv(y[i]);
    return Vector(sf, std::move(out));
}

double trace(const Matrix& a) {
    if (!a.square()) throw DimensionError("trace requires a square matrix");
    const Semifield sf = a.semifield();
    double t = sf.zero();
    for (std::size_t i = 0; i < a.rows(); ++i) t = sf.add(t, a(i, i));
    return t;
}

Matrix bounded_star(const Matrix& a) {
    if (!a.square()) throw DimensionError("bounded_star requires a square matrix");
    const std::size_t n = a.rows();
    Matrix sum = Matrix::identity(a.semifield(), n);
    Matrix power = Matrix::identity(a.semifield(), n);
    for (std::size_t m = 1; m < n; ++m) {
        power = multiply(power, a);
        sum = add(sum, power);
    }
    return sum;
}

double tr_func(const Matrix& a) {
    if (!a.square()) throw DimensionError("Tr requires a square matrix");
    const Semifield sf = a.semifield();
    const std::size_t n = a.rows();
    double result = sf.zero();
    Matrix power = Matrix::identity(sf, n);
    for (std::size_t m = 1; m <= n; ++m) {
        power = multiply(power, a);
        result = sf.add(result, trace(power));
    }
    return result;
}

} // namespace tropt
