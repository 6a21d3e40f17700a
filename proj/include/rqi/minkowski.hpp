#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "rqi/numerics.hpp"

namespace rqi {

using Mat2 = Eigen::Matrix2cd;
using Vec3 = Eigen::Vector3d;

// Contravariant components, signature (+,-,-,-), natural units.
struct FourVector {
    std::array<double, 4> c{};

    double& operator[](int mu) { return c[mu]; }
    double operator[](int mu) const { return c[mu]; }

    double time() const { return c[0]; }
    Vec3 spatial() const { return {c[1], c[2], c[3]}; }

    FourVector operator+(const FourVector& o) const {
        return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]};
    }
    FourVector operator-(const FourVector& o) const {
        return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]};
    }
    FourVector operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
};

inline FourVector operator*(double a, const FourVector& x) {
    return {a * x[0], a * x[1], a * x[2], a * x[3]};
}

inline FourVector four_vector(double t, const Vec3& x) {
    return {t, x[0], x[1], x[2]};
}

inline double minkowski_dot(const FourVector& x, const FourVector& y) {
    return x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
}

// Index lowering with eta = diag(1,-1,-1,-1).
inline FourVector lower(const FourVector& x) {
    return {x[0], -x[1], -x[2], -x[3]};
}

inline const Mat2& pauli(int mu) {
    static const std::array<Mat2, 4> tau = [] {
        std::array<Mat2, 4> t;
        t[0] << 1, 0, 0, 1;
        t[1] << 0, 1, 1, 0;
        t[2] << 0, complexd(0, -1), complexd(0, 1), 0;
        t[3] << 1, 0, 0, -1;
        return t;
    }();
    return tau.at(mu);
}

// x -> x^mu tau_mu with upper indices: x^0 I + x.tau. Hermitian for real x.
inline Mat2 to_hermitian(const FourVector& x) {
    Mat2 h;
    h << complexd(x[0] + x[3], 0), complexd(x[1], -x[2]),
        complexd(x[1], x[2]), complexd(x[0] - x[3], 0);
    return h;
}

// Same map applied to the lowered vector: x^0 I - x.tau.
inline Mat2 to_hermitian_lowered(const FourVector& x) {
    return to_hermitian(lower(x));
}

inline FourVector from_hermitian(const Mat2& h, double tol = 1e-12) {
    if ((h - h.adjoint()).norm() > tol)
        throw std::invalid_argument("from_hermitian: matrix is not Hermitian");
    FourVector x;
    for (int mu = 0; mu < 4; ++mu)
        x[mu] = 0.5 * (h * pauli(mu)).trace().real();
    return x;
}

enum class Shell { plus, minus };

inline int shell_sign(Shell s) { return s == Shell::plus ? 1 : -1; }

inline FourVector rest_momentum(double m, Shell shell) {
    return {shell_sign(shell) * m, 0, 0, 0};
}

inline FourVector lift_to_shell(const Vec3& p, double m, Shell shell) {
    return four_vector(shell_sign(shell) * std::sqrt(m * m + p.squaredNorm()),
                       p);
}

inline double shell_residual(const FourVector& p, double m) {
    return std::abs(minkowski_dot(p, p) - m * m) / (m * m);
}

inline void require_on_shell(const FourVector& p, double m, Shell shell,
                             double tol = 1e-9) {
    const double r = shell_residual(p, m);
    if (r > tol)
        throw std::domain_error("momentum off shell, relative residual " +
                                std::to_string(r));
    if (shell_sign(shell) * p[0] <= 0)
        throw std::domain_error("momentum on the wrong shell half");
}

}  // namespace rqi
