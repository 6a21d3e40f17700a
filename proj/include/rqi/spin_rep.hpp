#pragma once

#include <vector>

#include <Eigen/Dense>

#include "rqi/lorentz.hpp"
#include "rqi/numerics.hpp"

namespace rqi {

using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

inline int spin_dim(int two_s) {
    if (two_s < 0) throw std::invalid_argument("spin_dim: negative weight");
    return two_s + 1;
}

// 2x2 exponential via the traceless closed form; a scalar trace part is
// split off so generic inputs still work.
inline Mat2 exp_traceless(const Mat2& b) {
    const complexd half_tr = 0.5 * b.trace();
    const Mat2 b0 = b - half_tr * Mat2::Identity();
    const complexd mu2 = -b0.determinant();
    const complexd mu = std::sqrt(mu2);
    complexd ch, shc;
    if (std::abs(mu) < 1e-4) {
        ch = 1.0 + mu2 / 2.0 + mu2 * mu2 / 24.0;
        shc = 1.0 + mu2 / 6.0 + mu2 * mu2 / 120.0;
    } else {
        ch = std::cosh(mu);
        shc = std::sinh(mu) / mu;
    }
    return std::exp(half_tr) * (ch * Mat2::Identity() + shc * b0);
}

// Matrix of the 2s-fold symmetric power in the orthonormal weight basis
// (highest weight first): basis vector j is sqrt(C(2s,j)) u^(2s-j) v^j
// with the generators acting by u -> a u + c v, v -> b u + d v.
inline MatX spin_matrix(int two_s, const Mat2& m) {
    require_unimodular(m);
    const int d = spin_dim(two_s);
    const complexd a = m(0, 0), b = m(0, 1), c = m(1, 0), dd = m(1, 1);

    std::vector<complexd> pa(d, 1), pb(d, 1), pc(d, 1), pd(d, 1);
    for (int i = 1; i < d; ++i) {
        pa[i] = pa[i - 1] * a;
        pb[i] = pb[i - 1] * b;
        pc[i] = pc[i - 1] * c;
        pd[i] = pd[i - 1] * dd;
    }

    MatX out(d, d);
    for (int j = 0; j < d; ++j) {
        const int p = two_s - j;  // power of (au+cv)
        const int q = j;          // power of (bu+dv)
        for (int r = 0; r < d; ++r) {
            complexd acc = 0;
            const int ilo = std::max(0, p - r);
            const int ihi = std::min(p, two_s - r);
            for (int i = ilo; i <= ihi; ++i) {
                const int l = two_s - r - i;  // power of u from the q factor
                acc += binomial(p, i) * binomial(q, l) * pa[i] * pc[p - i] *
                       pb[l] * pd[q - l];
            }
            out(r, j) =
                acc * std::sqrt(binomial(two_s, j) / binomial(two_s, r));
        }
    }
    return out;
}

// Differential of the symmetric power at the identity: the derivation
// action of a 2x2 generator, exact in the same weight basis.
inline MatX rep_derivative(int two_s, const Mat2& b) {
    const int d = spin_dim(two_s);
    MatX out = MatX::Zero(d, d);
    auto weight = [two_s](int j) { return std::sqrt(binomial(two_s, j)); };
    for (int j = 0; j < d; ++j) {
        out(j, j) = double(two_s - j) * b(0, 0) + double(j) * b(1, 1);
        if (j + 1 < d)
            out(j + 1, j) =
                double(two_s - j) * b(1, 0) * weight(j) / weight(j + 1);
        if (j - 1 >= 0)
            out(j - 1, j) = double(j) * b(0, 1) * weight(j) / weight(j - 1);
    }
    return out;
}

// Hermitian angular momentum component, axis in {1,2,3}.
inline MatX angular_momentum(int two_s, int axis) {
    if (axis < 1 || axis > 3)
        throw std::invalid_argument("angular_momentum: axis must be 1..3");
    return rep_derivative(two_s, Mat2(0.5 * pauli(axis)));
}

inline MatX ladder_raising(int two_s) {
    Mat2 b;
    b << 0, 1, 0, 0;
    return rep_derivative(two_s, b);
}

inline MatX ladder_lowering(int two_s) {
    Mat2 b;
    b << 0, 0, 1, 0;
    return rep_derivative(two_s, b);
}

}  // namespace rqi
