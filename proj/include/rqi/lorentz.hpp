#pragma once

#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "rqi/minkowski.hpp"

namespace rqi {

using Mat4 = Eigen::Matrix4d;
using Mat4c = Eigen::Matrix4cd;
using Vec4c = Eigen::Vector4cd;

inline Mat2 sl2c_inverse(const Mat2& a) {
    Mat2 inv;
    inv << a(1, 1), -a(0, 1), -a(1, 0), a(0, 0);
    return inv;
}

inline void require_unimodular(const Mat2& a, double tol = 1e-12) {
    if (std::abs(a.determinant() - complexd(1, 0)) > tol)
        throw std::invalid_argument("matrix is not in SL(2,C): |det - 1| > tol");
}

// The 4x4 vector action induced by conjugation on Hermitian matrices,
// assembled column by column.
inline Mat4 lorentz_from_sl2c(const Mat2& a) {
    require_unimodular(a);
    Mat4 lam;
    for (int mu = 0; mu < 4; ++mu) {
        FourVector e{};
        e[mu] = 1.0;
        Mat2 h = a * to_hermitian(e) * a.adjoint();
        h = 0.5 * (h + h.adjoint().eval());
        const FourVector col = from_hermitian(h);
        for (int nu = 0; nu < 4; ++nu) lam(nu, mu) = col[nu];
    }
    return lam;
}

inline FourVector apply_lorentz(const Mat4& lam, const FourVector& x) {
    FourVector y{};
    for (int mu = 0; mu < 4; ++mu)
        y[mu] = lam(mu, 0) * x[0] + lam(mu, 1) * x[1] + lam(mu, 2) * x[2] +
                lam(mu, 3) * x[3];
    return y;
}

// Max violation among metric preservation, unit determinant and
// orthochronicity; zero for elements of the restricted Lorentz group.
inline double restricted_lorentz_defect(const Mat4& lam) {
    Mat4 eta = Mat4::Identity();
    eta(1, 1) = eta(2, 2) = eta(3, 3) = -1.0;
    double d = (lam.transpose() * eta * lam - eta).norm();
    d = std::max(d, std::abs(lam.determinant() - 1.0));
    if (lam(0, 0) <= 0.0) d = std::max(d, 1.0);
    return d;
}

// Positive Hermitian square root carrying the rest momentum to p,
// in closed form: (sign * tilde(p) + m I) / sqrt(2m(m + sign * p^0)).
inline Mat2 standard_boost(const FourVector& p, double m, Shell shell) {
    require_on_shell(p, m, shell);
    const double s = shell_sign(shell);
    const double denom = std::sqrt(2.0 * m * (m + s * p[0]));
    return (s * to_hermitian(p) + m * Mat2::Identity()) / denom;
}

// SU(2) element taking the z axis to the given unit direction.
inline Mat2 rotation_to(const Vec3& dir) {
    if (std::abs(dir.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("rotation_to: direction is not unit length");
    const double theta = std::acos(std::clamp(dir[2], -1.0, 1.0));
    const double phi = std::atan2(dir[1], dir[0]);
    Mat2 rz, ry;
    rz << std::exp(complexd(0, -phi / 2)), 0, 0, std::exp(complexd(0, phi / 2));
    ry << std::cos(theta / 2), -std::sin(theta / 2), std::sin(theta / 2),
        std::cos(theta / 2);
    return rz * ry;
}

// Diagonal positive boost along z reaching spatial momentum pmag from rest.
inline Mat2 boost_z(double m, double pmag) {
    if (pmag < 0) throw std::invalid_argument("boost_z: negative momentum");
    const double e = std::sqrt(m * m + pmag * pmag);
    Mat2 b;
    b << std::sqrt((e + pmag) / m), 0, 0, std::sqrt((e - pmag) / m);
    return b;
}

// Pure boost of given rapidity along a unit axis.
inline Mat2 rapidity_boost(const Vec3& axis, double xi) {
    if (std::abs(axis.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("rapidity_boost: axis is not unit length");
    const Mat2 ntau = axis[0] * pauli(1) + axis[1] * pauli(2) +
                      axis[2] * pauli(3);
    return std::cosh(xi / 2) * Mat2::Identity() + std::sinh(xi / 2) * ntau;
}

// Residual rotation after transporting p through the rest frame:
// L(Lambda p)^{-1} Lambda L(p), an element of SU(2).
inline Mat2 wigner_rotation(const Mat2& a, const FourVector& p, double m,
                            Shell shell) {
    require_on_shell(p, m, shell);
    const FourVector moved = apply_lorentz(lorentz_from_sl2c(a), p);
    Mat2 w = sl2c_inverse(standard_boost(moved, m, shell)) * a *
             standard_boost(p, m, shell);
    // the triple product drifts off unit determinant at large rapidity;
    // project back, but refuse anything that is not mere rounding
    const complexd det = w(0, 0) * w(1, 1) - w(0, 1) * w(1, 0);
    if (std::abs(det - 1.0) > 1e-6)
        throw std::domain_error(
            "wigner_rotation: product is far from unimodular");
    return w / std::sqrt(det);
}

struct PoincareElement {
    FourVector a;
    Mat2 A;
};

inline PoincareElement poincare_identity() {
    return {FourVector{0, 0, 0, 0}, Mat2::Identity()};
}

inline PoincareElement compose(const PoincareElement& g1,
                               const PoincareElement& g2) {
    return {g1.a + apply_lorentz(lorentz_from_sl2c(g1.A), g2.a), g1.A * g2.A};
}

inline PoincareElement inverse(const PoincareElement& g) {
    const Mat2 ainv = sl2c_inverse(g.A);
    return {-apply_lorentz(lorentz_from_sl2c(ainv), g.a), ainv};
}

template <typename Rng>
Mat2 random_su2(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::Vector4d q;
    do {
        q << n(rng), n(rng), n(rng), n(rng);
    } while (q.norm() < 1e-6);
    q.normalize();
    Mat2 u;
    u << complexd(q[0], q[1]), complexd(q[2], q[3]), complexd(-q[2], q[3]),
        complexd(q[0], -q[1]);
    return u;
}

// Rejects near-singular draws: unimodular rescaling of those produces
// huge entries whose determinants are no longer numerically one.
template <typename Rng>
Mat2 random_sl2c(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    while (true) {
        Mat2 a;
        a << complexd(n(rng), n(rng)), complexd(n(rng), n(rng)),
            complexd(n(rng), n(rng)), complexd(n(rng), n(rng));
        const complexd det = a.determinant();
        if (std::abs(det) < 0.25) continue;
        a /= std::sqrt(det);
        if (a.norm() > 4.0) continue;
        return a;
    }
}

}  // namespace rqi
