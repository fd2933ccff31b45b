#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace stilde {

/// Raised when two operands live in spaces of different dimension.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an argument lies outside the set an operation is defined on
/// (point outside a domain, reflection pole, |a| >= 1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A point of R^n with finite coordinates, n >= 1.
class Point {
public:
    explicit Point(std::vector<double> coords);
    Point(std::initializer_list<double> coords);

    /// The origin of R^n.
    static Point zero(std::size_t dim);
    /// scale * e_axis in R^dim (axis is zero-based).
    static Point axis(std::size_t dim, std::size_t axis, double scale = 1.0);

    std::size_t dim() const { return coords_.size(); }
    std::span<const double> coords() const { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }

    double norm() const;
    double norm_squared() const;
    double dot(const Point& other) const;

    Point operator+(const Point& other) const;
    Point operator-(const Point& other) const;
    Point operator-() const;
    Point operator*(double s) const;
    Point operator/(double s) const;
    friend Point operator*(double s, const Point& p) { return p * s; }

    bool operator==(const Point& other) const = default;

    std::string to_string() const;

private:
    std::vector<double> coords_;
};

void require_same_dim(const Point& x, const Point& y);

/// |x - y|.
double euclid_dist(const Point& x, const Point& y);

/// Square matrix stored row-major; used for the orthogonal factor of ball
/// automorphisms.
class Matrix {
public:
    explicit Matrix(std::size_t n);
    static Matrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    Point apply(const Point& x) const;
    Matrix transposed() const;
    Matrix operator*(const Matrix& other) const;
    double determinant() const;
    /// max |(M M^T - I)_{ij}|
    double orthogonality_defect() const;

private:
    std::size_t n_;
    std::vector<double> data_;
};

}  // namespace stilde
