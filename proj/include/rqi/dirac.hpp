#pragma once

#include <cmath>
#include <stdexcept>

#include "rqi/bundle.hpp"

namespace rqi {

// Weyl-form Dirac matrices: the lowered-index Pauli block sits upper right.
inline const Mat4c& gamma_matrix(int mu) {
    static const std::array<Mat4c, 4> table = [] {
        std::array<Mat4c, 4> g{};
        for (int m = 0; m < 4; ++m) {
            g[std::size_t(m)].setZero();
            const double sign = m == 0 ? 1.0 : -1.0;
            g[std::size_t(m)].block<2, 2>(0, 2) = sign * pauli(m);
            g[std::size_t(m)].block<2, 2>(2, 0) = pauli(m);
        }
        return g;
    }();
    if (mu < 0 || mu > 3)
        throw std::invalid_argument("gamma_matrix: index out of range");
    return table[std::size_t(mu)];
}

// p_mu gamma^mu; the blocks collapse to the two Hermitian images of p.
inline Mat4c gamma_contraction(const FourVector& p) {
    Mat4c slash = Mat4c::Zero();
    slash.block<2, 2>(0, 2) = to_hermitian(p);
    slash.block<2, 2>(2, 0) = to_hermitian_lowered(p);
    return slash;
}

// The bispinor representation of SL(2,C): block diag(a, a^{-dagger}).
inline Mat4c bispinor_rep(const Mat2& a) {
    require_unimodular(a);
    Mat4c rep = Mat4c::Zero();
    rep.block<2, 2>(0, 0) = a;
    rep.block<2, 2>(2, 2) = sl2c_inverse(a).adjoint();
    return rep;
}

// Relative residual of the momentum-space Dirac equation at p.
inline double range_residual(const FourVector& p, const Vec4c& z, double m) {
    const double n = z.norm();
    if (!(n > 0))
        throw std::invalid_argument("range_residual: zero bispinor");
    return (gamma_contraction(p) * z - m * z).norm() / n;
}

// Defect of the chiral pairing (upper pair = +/- lower pair).
inline double chiral_pair_residual(const Vec4c& z, Shell shell) {
    return (z.head<2>() - shell_sign(shell) * z.tail<2>()).norm();
}

// Isometric embedding of a rest qubit into the chiral subspace V^+/-.
inline Vec4c embed_rest_qubit(const Eigen::Vector2cd& chi, Shell shell) {
    Vec4c z;
    z.head<2>() = chi / std::sqrt(2.0);
    z.tail<2>() = shell_sign(shell) * chi / std::sqrt(2.0);
    return z;
}

// Fiber metric on the range bundle; equals sign * v^dagger gamma^0 w, which
// on the fiber also equals (m/|p0|) v^dagger w.
inline complexd dirac_metric(const FourVector& p, const Vec4c& v,
                             const Vec4c& w, double m, Shell shell) {
    require_on_shell(p, m, shell);
    if (range_residual(p, v, m) > 1e-9 || range_residual(p, w, m) > 1e-9)
        throw std::invalid_argument(
            "dirac_metric: arguments are not in the range fiber");
    return double(shell_sign(shell)) * (v.adjoint() * gamma_matrix(0) * w)(0);
}

namespace detail {

inline void require_chiral(const Vec4c& z, Shell shell) {
    if (chiral_pair_residual(z, shell) > 1e-9 * z.norm())
        throw std::invalid_argument(
            "foldy_wouthuysen: input is not in the chiral subspace");
}

}  // namespace detail

// Pointwise Foldy-Wouthuysen map V^+/- -> range fiber over p.
inline Vec4c foldy_wouthuysen(const FourVector& p, const Vec4c& z, double m,
                              Shell shell) {
    require_on_shell(p, m, shell);
    detail::require_chiral(z, shell);
    const double denom =
        std::sqrt(2.0 * m * (m + shell_sign(shell) * p[0]));
    return (m * z + gamma_contraction(p) * z) / denom;
}

// Equivalent closed form of the same map, valid on chiral input only.
inline Vec4c foldy_wouthuysen_energy_form(const FourVector& p, const Vec4c& z,
                                          double m, Shell shell) {
    require_on_shell(p, m, shell);
    detail::require_chiral(z, shell);
    const double s = shell_sign(shell);
    Mat4c op = (m + s * p[0]) * Mat4c::Identity();
    for (int j = 1; j <= 3; ++j) op -= p[j] * gamma_matrix(j);
    return (op * z) / std::sqrt(2.0 * m * (m + s * p[0]));
}

// Spin direction encoded in the upper-left block of the outer product.
inline Vec3 bispinor_spin_direction(const Vec4c& c) {
    const double n = c.norm();
    if (!(n > 0))
        throw std::invalid_argument("bispinor_spin_direction: zero input");
    const Vec4c u = c / n;
    const Mat2 block = 4.0 * (u.head<2>() * u.head<2>().adjoint());
    Vec3 dir;
    for (int j = 1; j <= 3; ++j)
        dir[j - 1] = 0.5 * (pauli(j) * (block - Mat2::Identity()))
                               .trace()
                               .real();
    return dir;
}

// Pauli-Lubansky four-vector of a unit-metric range bispinor at p.
inline FourVector bispinor_pl_vector(const FourVector& p, const Vec4c& d,
                                     double m, Shell shell) {
    require_on_shell(p, m, shell);
    if (range_residual(p, d, m) > 1e-6)
        throw std::invalid_argument(
            "bispinor_pl_vector: input is not in the range fiber");
    const complexd h = dirac_metric(p, d, d, m, shell);
    if (std::abs(h - 1.0) > 1e-6)
        throw std::invalid_argument(
            "bispinor_pl_vector: input is not metric-normalized");
    const Mat2 block = d.head<2>() * d.head<2>().adjoint();
    const Mat2 hmat =
        2.0 * m * block - shell_sign(shell) * to_hermitian(p) / 2.0;
    return from_hermitian(hmat);
}

}  // namespace rqi
