#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "rqi/spin_rep.hpp"

namespace rqi {

// |p_mu v^mu| / |v|, the defect of the spin-1 transversality constraint.
inline double transversality_residual(const FourVector& p, const Vec4c& v) {
    const double n = v.norm();
    if (!(n > 0))
        throw std::invalid_argument("transversality_residual: zero vector");
    const complexd c =
        p[0] * v[0] - p[1] * v[1] - p[2] * v[2] - p[3] * v[3];
    return std::abs(c) / n;
}

inline Vec4c embed_spatial(const Eigen::Vector3cd& v) {
    Vec4c z;
    z[0] = 0.0;
    z.tail<3>() = v;
    return z;
}

// The Lorentz matrix of the standard boost; maps {v0 = 0} onto the
// transverse fiber over p.
inline Mat4 proca_boost(const FourVector& p, double m,
                        Shell shell = Shell::plus) {
    return lorentz_from_sl2c(standard_boost(p, m, shell));
}

namespace detail {

inline void require_transverse(const char* who, const FourVector& p,
                               const Vec4c& v) {
    if (transversality_residual(p, v) > 1e-9)
        throw std::invalid_argument(std::string(who) +
                                    ": argument is not transverse to p");
}

}  // namespace detail

// Fiber metric on the transverse fiber: minus the Minkowski pairing, which
// is positive definite once the constraint holds.
inline complexd proca_metric(const FourVector& p, const Vec4c& v,
                             const Vec4c& w, double m) {
    require_on_shell(p, m,
                     p[0] > 0 ? Shell::plus : Shell::minus);
    detail::require_transverse("proca_metric", p, v);
    detail::require_transverse("proca_metric", p, w);
    return -std::conj(v[0]) * w[0] + std::conj(v[1]) * w[1] +
           std::conj(v[2]) * w[2] + std::conj(v[3]) * w[3];
}

// The same metric written through the boost image of p; agrees with
// proca_metric on the fiber.
inline complexd proca_metric_boost_form(const FourVector& p, const Vec4c& v,
                                        const Vec4c& w, double m) {
    detail::require_transverse("proca_metric_boost_form", p, v);
    detail::require_transverse("proca_metric_boost_form", p, w);
    Mat2 g = to_hermitian_lowered(p) / m;
    g /= std::sqrt(g.determinant());
    const Mat4c lam = lorentz_from_sl2c(g).cast<complexd>();
    return (v.adjoint() * lam * w)(0);
}

// Spin-1 angular momentum generators on spatial vectors:
// (J^a)_{jk} = -i eps_{ajk}.
inline Eigen::Matrix3cd vector_angular_momentum(int axis) {
    if (axis < 1 || axis > 3)
        throw std::invalid_argument(
            "vector_angular_momentum: axis out of range");
    Eigen::Matrix3cd j = Eigen::Matrix3cd::Zero();
    const int a = axis - 1;
    const int b = (a + 1) % 3, c = (a + 2) % 3;
    j(std::size_t(b), std::size_t(c)) = complexd(0, -1);
    j(std::size_t(c), std::size_t(b)) = complexd(0, 1);
    return j;
}

// Helicity-ordered polarization triple over p: boost images of the rest
// eigenvectors of the third angular momentum generator, weights 1, 0, -1.
inline std::array<Vec4c, 3> polarization_basis(const FourVector& p, double m,
                                               Shell shell = Shell::plus) {
    const Mat4 b = proca_boost(p, m, shell);
    const double r = 1.0 / std::sqrt(2.0);
    std::array<Vec4c, 3> rest{};
    rest[0] << 0.0, r, complexd(0, r), 0.0;
    rest[1] << 0.0, 0.0, 0.0, 1.0;
    rest[2] << 0.0, complexd(0, r), r, 0.0;
    std::array<Vec4c, 3> out{};
    for (int k = 0; k < 3; ++k)
        out[std::size_t(k)] = b.cast<complexd>() * rest[std::size_t(k)];
    return out;
}

}  // namespace rqi
