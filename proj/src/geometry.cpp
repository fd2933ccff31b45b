#include "stilde/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace stilde {

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
        throw std::invalid_argument("point must have at least one coordinate");
    }
    for (double v : coords_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("point coordinates must be finite");
        }
    }
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

Point Point::zero(std::size_t dim) {
    return Point(std::vector<double>(dim, 0.0));
}

Point Point::axis(std::size_t dim, std::size_t axis, double scale) {
    std::vector<double> v(dim, 0.0);
    v.at(axis) = scale;
    return Point(std::move(v));
}

double Point::norm_squared() const {
    return dot(*this);
}

double Point::norm() const {
    // hypot-style scaling keeps tiny and huge coordinates from under/overflowing
    double scale = 0.0;
    for (double v : coords_) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return 0.0;
    double sum = 0.0;
    for (double v : coords_) {
        double q = v / scale;
        sum += q * q;
    }
    return scale * std::sqrt(sum);
}

double Point::dot(const Point& other) const {
    require_same_dim(*this, other);
    double sum = 0.0;
    for (std::size_t i = 0; i < coords_.size(); ++i) sum += coords_[i] * other.coords_[i];
    return sum;
}

Point Point::operator+(const Point& other) const {
    require_same_dim(*this, other);
    std::vector<double> v(coords_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.coords_[i];
    return Point(std::move(v));
}

Point Point::operator-(const Point& other) const {
    require_same_dim(*this, other);
    std::vector<double> v(coords_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= other.coords_[i];
    return Point(std::move(v));
}

Point Point::operator-() const {
    return *this * -1.0;
}

Point Point::operator*(double s) const {
    std::vector<double> v(coords_);
    for (double& c : v) c *= s;
    return Point(std::move(v));
}

Point Point::operator/(double s) const {
    std::vector<double> v(coords_);
    for (double& c : v) c /= s;
    return Point(std::move(v));
}

std::string Point::to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << coords_[i];
    }
    os << ')';
    return os.str();
}

void require_same_dim(const Point& x, const Point& y) {
    if (x.dim() != y.dim()) {
        throw DimensionError("dimension mismatch: " + std::to_string(x.dim()) + " vs " +
                             std::to_string(y.dim()));
    }
}

double euclid_dist(const Point& x, const Point& y) {
    return (x - y).norm();
}

Matrix::Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Point Matrix::apply(const Point& x) const {
    if (x.dim() != n_) {
        throw DimensionError("matrix/point dimension mismatch");
    }
    std::vector<double> out(n_, 0.0);
    for (std::size_t r = 0; r < n_; ++r) {
        double sum = 0.0;
        for (std::size_t c = 0; c < n_; ++c) sum += (*this)(r, c) * x[c];
        out[r] = sum;
    }
    return Point(std::move(out));
}

Matrix Matrix::transposed() const {
    Matrix t(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (other.n_ != n_) throw DimensionError("matrix size mismatch");
    Matrix out(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t k = 0; k < n_; ++k)
            for (std::size_t c = 0; c < n_; ++c) out(r, c) += (*this)(r, k) * other(k, c);
    return out;
}

double Matrix::determinant() const {
    // Gaussian elimination with partial pivoting on a copy
    std::vector<double> a(data_);
    double det = 1.0;
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n_; ++r)
            if (std::abs(a[r * n_ + col]) > std::abs(a[pivot * n_ + col])) pivot = r;
        if (a[pivot * n_ + col] == 0.0) return 0.0;
        if (pivot != col) {
            for (std::size_t c = 0; c < n_; ++c) std::swap(a[pivot * n_ + c], a[col * n_ + c]);
            det = -det;
        }
        det *= a[col * n_ + col];
        for (std::size_t r = col + 1; r < n_; ++r) {
            double f = a[r * n_ + col] / a[col * n_ + col];
            for (std::size_t c = col; c < n_; ++c) a[r * n_ + c] -= f * a[col * n_ + c];
        }
    }
    return det;
}

double Matrix::orthogonality_defect() const {
    Matrix p = *this * transposed();
    double worst = 0.0;
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c)
            worst = std::max(worst, std::abs(p(r, c) - (r == c ? 1.0 : 0.0)));
    return worst;
}

}  // namespace stilde
