#ifndef EUTACTIC_LINALG_H
#define EUTACTIC_LINALG_H

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eutactic/errors.h"
#include "eutactic/scalar.h"

namespace eutactic {

/// Dense real vector over QuadScalar (exact) or double (float).
template <FieldScalar T>
class Vector {
   public:
    Vector() = default;
    explicit Vector(std::size_t dim) : entries_(dim, T(0)) {
    }
    explicit Vector(std::vector<T> entries) : entries_(std::move(entries)) {
    }
    Vector(std::initializer_list<T> entries) : entries_(entries) {
    }

    /// Standard basis vector e_index (0-based).
    static Vector unit(std::size_t dim, std::size_t index) {
        Vector v(dim);
        v.entries_.at(index) = T(1);
        return v;
    }

    std::size_t dim() const {
        return entries_.size();
    }
    const T &operator[](std::size_t i) const {
        return entries_[i];
    }
    T &operator[](std::size_t i) {
        return entries_[i];
    }
    std::span<const T> entries() const {
        return entries_;
    }
    bool is_zero(double tol = kDefaultTolerance) const {
        for (const T &x : entries_) {
            if (!ScalarTraits<T>::is_zero(x, tol)) {
                return false;
            }
        }
        return true;
    }

    Vector &operator+=(const Vector &o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < dim(); ++i) {
            entries_[i] += o.entries_[i];
        }
        return *this;
    }
    Vector &operator-=(const Vector &o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < dim(); ++i) {
            entries_[i] -= o.entries_[i];
        }
        return *this;
    }
    Vector &operator*=(const T &s) {
        for (T &x : entries_) {
            x *= s;
        }
        return *this;
    }
    friend Vector operator+(Vector a, const Vector &b) {
        return a += b;
    }
    friend Vector operator-(Vector a, const Vector &b) {
        return a -= b;
    }
    friend Vector operator*(const T &s, Vector v) {
        return v *= s;
    }
    friend bool operator==(const Vector &a, const Vector &b) = default;

   private:
    void require_same_dim(const Vector &o) const {
        if (o.dim() != dim()) {
            throw DimensionMismatch("vector dimensions " + std::to_string(dim()) + " and " + std::to_string(o.dim()));
        }
    }

    std::vector<T> entries_;
};

/// Dense row-major real matrix.
template <FieldScalar T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, T(0)) {
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto &row : rows) {
            if (row.size() != cols_) {
                throw DimensionMismatch("ragged matrix literal");
            }
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }
    static Matrix diagonal(const std::vector<T> &d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) {
            m(i, i) = d[i];
        }
        return m;
    }
    /// Matrix whose columns are the given vectors (all of equal dimension).
    static Matrix from_columns(std::span<const Vector<T>> columns, std::size_t rows) {
        Matrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].dim() != rows) {
                throw DimensionMismatch("column " + std::to_string(j) + " has dimension " +
                                        std::to_string(columns[j].dim()) + ", expected " + std::to_string(rows));
            }
            for (std::size_t i = 0; i < rows; ++i) {
                m(i, j) = columns[j][i];
            }
        }
        return m;
    }

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }
    const T &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    T &operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }

    Vector<T> row(std::size_t r) const {
        return Vector<T>(std::vector<T>(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_));
    }
    Vector<T> col(std::size_t c) const {
        Vector<T> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            v[r] = (*this)(r, c);
        }
        return v;
    }
    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                t(c, r) = (*this)(r, c);
            }
        }
        return t;
    }
    T trace() const {
        T t(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
            t += (*this)(i, i);
        }
        return t;
    }
    bool is_symmetric(double tol = kDefaultTolerance) const {
        if (!is_square()) {
            return false;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = r + 1; c < cols_; ++c) {
                if (!ScalarTraits<T>::is_zero((*this)(r, c) - (*this)(c, r), tol)) {
                    return false;
                }
            }
        }
        return true;
    }
    bool is_zero(double tol = kDefaultTolerance) const {
        for (const T &x : entries_) {
            if (!ScalarTraits<T>::is_zero(x, tol)) {
                return false;
            }
        }
        return true;
    }

    Matrix &operator+=(const Matrix &o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            entries_[i] += o.entries_[i];
        }
        return *this;
    }
    Matrix &operator-=(const Matrix &o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            entries_[i] -= o.entries_[i];
        }
        return *this;
    }
    Matrix &operator*=(const T &s) {
        for (T &x : entries_) {
            x *= s;
        }
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix &b) {
        return a += b;
    }
    friend Matrix operator-(Matrix a, const Matrix &b) {
        return a -= b;
    }
    friend Matrix operator*(const T &s, Matrix m) {
        return m *= s;
    }
    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        if (a.cols_ != b.rows_) {
            throw DimensionMismatch("matrix product of " + a.shape() + " and " + b.shape());
        }
        Matrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T &aik = a(i, k);
                if (ScalarTraits<T>::is_zero(aik, 0)) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    p(i, j) += aik * b(k, j);
                }
            }
        }
        return p;
    }
    friend Vector<T> operator*(const Matrix &a, const Vector<T> &v) {
        if (a.cols_ != v.dim()) {
            throw DimensionMismatch("matrix " + a.shape() + " times vector of dimension " + std::to_string(v.dim()));
        }
        Vector<T> out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                out[i] += a(i, k) * v[k];
            }
        }
        return out;
    }
    friend bool operator==(const Matrix &a, const Matrix &b) = default;

    std::string shape() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

   private:
    void require_same_shape(const Matrix &o) const {
        if (o.rows_ != rows_ || o.cols_ != cols_) {
            throw DimensionMismatch("matrix shapes " + shape() + " and " + o.shape());
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> entries_;
};

template <FieldScalar To, FieldScalar From>
Vector<To> convert(const Vector<From> &v) {
    Vector<To> out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if constexpr (std::same_as<To, From>) {
            out[i] = v[i];
        } else if constexpr (std::same_as<To, double>) {
            out[i] = v[i].to_double();
        } else {
            static_assert(std::same_as<To, double>, "float values cannot be converted to exact ones");
        }
    }
    return out;
}

template <FieldScalar To, FieldScalar From>
Matrix<To> convert(const Matrix<From> &m) {
    Matrix<To> out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if constexpr (std::same_as<To, From>) {
                out(r, c) = m(r, c);
            } else {
                out(r, c) = m(r, c).to_double();
            }
        }
    }
    return out;
}

template <FieldScalar T>
T inner(const Vector<T> &u, const Vector<T> &v) {
    if (u.dim() != v.dim()) {
        throw DimensionMismatch("inner product of dimensions " + std::to_string(u.dim()) + " and " +
                                std::to_string(v.dim()));
    }
    T sum(0);
    for (std::size_t i = 0; i < u.dim(); ++i) {
        sum += u[i] * v[i];
    }
    return sum;
}

template <FieldScalar T>
T squared_norm(const Vector<T> &v) {
    return inner(v, v);
}

/// Outer product v^T v: symmetric, rank at most one, trace = squared norm.
template <FieldScalar T>
Matrix<T> dyad(const Vector<T> &v) {
    Matrix<T> m(v.dim(), v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        for (std::size_t j = 0; j < v.dim(); ++j) {
            m(i, j) = v[i] * v[j];
        }
    }
    return m;
}

/// AB - BA for square matrices of equal shape.
template <FieldScalar T>
Matrix<T> commutator(const Matrix<T> &a, const Matrix<T> &b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
        throw DimensionMismatch("commutator of " + a.shape() + " and " + b.shape());
    }
    return a * b - b * a;
}

template <FieldScalar T>
T frobenius_squared(const Matrix<T> &m) {
    T sum(0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            sum += m(r, c) * m(r, c);
        }
    }
    return sum;
}

template <FieldScalar T>
double frobenius_norm(const Matrix<T> &m) {
    return std::sqrt(std::max(0.0, ScalarTraits<T>::to_double(frobenius_squared(m))));
}

/// Entrywise comparison: exact equality on the exact backend, |a-b| <= tol on floats.
template <FieldScalar T>
bool approx_equal(const Matrix<T> &a, const Matrix<T> &b, double tol = kDefaultTolerance) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    return (a - b).is_zero(tol);
}

template <FieldScalar T>
bool approx_equal(const Vector<T> &a, const Vector<T> &b, double tol = kDefaultTolerance) {
    if (a.dim() != b.dim()) {
        return false;
    }
    return (a - b).is_zero(tol);
}

/// A rotation angle: either an exact multiple k*pi/4 or an arbitrary float in radians.
class Angle {
   public:
    /// k * pi/4, normalized into (-pi, pi].
    static Angle quarter_turns(int k);
    static Angle radians(double theta) {
        Angle a;
        a.radians_ = theta;
        return a;
    }

    bool is_exact() const {
        return quarter_.has_value();
    }
    /// k with angle = k*pi/4, when exact.
    std::optional<int> quarter_count() const {
        return quarter_;
    }
    double to_radians() const;
    Angle operator-() const;

    /// (cos, sin). Throws NotRepresentable when T is exact and the angle is not a multiple of pi/4.
    template <FieldScalar T>
    std::pair<T, T> cos_sin() const;

    /// `k/8*pi` for exact angles, scientific radians otherwise.
    std::string str() const;
    static Angle parse(std::string_view text);

    friend bool operator==(const Angle &a, const Angle &b) = default;

   private:
    std::optional<int> quarter_;
    double radians_ = 0;
};

template <>
std::pair<double, double> Angle::cos_sin<double>() const;
template <>
std::pair<QuadScalar, QuadScalar> Angle::cos_sin<QuadScalar>() const;

/// A coordinate plane (first, second) with first < second, 0-based.
struct Plane {
    std::size_t first;
    std::size_t second;
    friend bool operator==(const Plane &, const Plane &) = default;
};

/// Identity except in the plane: x_i' = c x_i + s x_j, x_j' = -s x_i + c x_j.
template <FieldScalar T>
Matrix<T> rotation_matrix(std::size_t dim, Plane plane, const Angle &theta) {
    if (plane.first >= plane.second || plane.second >= dim) {
        throw DomainError("rotation plane (" + std::to_string(plane.first + 1) + "," +
                          std::to_string(plane.second + 1) + ") invalid for dimension " + std::to_string(dim));
    }
    auto [c, s] = theta.template cos_sin<T>();
    Matrix<T> r = Matrix<T>::identity(dim);
    r(plane.first, plane.first) = c;
    r(plane.first, plane.second) = s;
    r(plane.second, plane.first) = -s;
    r(plane.second, plane.second) = c;
    return r;
}

/// Eigenvalues of a symmetric float matrix by cyclic Jacobi rotations, ascending.
std::vector<double> symmetric_eigenvalues(const Matrix<double> &a, double off_diagonal_tol = 1e-12);

/// Sum of absolute eigenvalues of a symmetric float matrix. Throws DomainError if not symmetric.
double trace_norm_sym(const Matrix<double> &a);

}  // namespace eutactic

#endif
