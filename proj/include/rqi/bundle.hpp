#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "rqi/lorentz.hpp"
#include "rqi/spin_rep.hpp"

namespace rqi {

enum class Description { perception, boosting };

// A single fiber element (p, v) of the spin bundle over the mass shell,
// tagged with the description the components refer to.
struct FiberVector {
    FourVector p;
    VecX v;
    Description desc;
    int two_s;
    Shell shell;
    double mass;
};

// Matrix of the momentum-dependent fiber inner product in the perception
// description: the symmetric-power image of the lowered momentum over m.
inline MatX perception_metric_matrix(int two_s, const FourVector& p,
                                     double m) {
    if (shell_residual(p, m) > 1e-6)
        throw std::domain_error("perception metric needs an on-shell base");
    Mat2 g = to_hermitian_lowered(p) / m;
    // base points arrive through chains of group actions; rescale away the
    // rounding drift so the determinant is exactly one
    g /= std::sqrt(g.determinant().real());
    return spin_matrix(two_s, g);
}

inline void require_same_fiber(const FiberVector& x, const FiberVector& y) {
    if (x.desc != y.desc)
        throw std::invalid_argument("fiber pairing across descriptions");
    if (x.two_s != y.two_s)
        throw std::invalid_argument("fiber pairing across spin weights");
    const double scale = std::max(1.0, std::abs(x.p[0]));
    for (int mu = 0; mu < 4; ++mu)
        if (std::abs(x.p[mu] - y.p[mu]) > 1e-9 * scale)
            throw std::invalid_argument("fiber pairing across base points");
}

inline complexd fiber_metric(const FiberVector& x, const FiberVector& y) {
    require_same_fiber(x, y);
    if (x.desc == Description::boosting) return (x.v.adjoint() * y.v)(0);
    const MatX g = perception_metric_matrix(x.two_s, x.p, x.mass);
    return (x.v.adjoint() * g * y.v)(0);
}

inline VecX normalize_flat(const VecX& v) {
    const double n = v.norm();
    if (n < 1e-12) throw std::invalid_argument("cannot normalize zero vector");
    return v / n;
}

inline VecX normalize_perception(int two_s, const FourVector& p, double m,
                                 const VecX& v) {
    const MatX g = perception_metric_matrix(two_s, p, m);
    const double h = ((v.adjoint() * g * v)(0)).real();
    if (h < 1e-12) throw std::invalid_argument("cannot normalize zero vector");
    return v / std::sqrt(h);
}

// Change of description: multiply by the (inverse) standard boost in the
// spin-s representation. An isometry onto the flat-metric description.
inline FiberVector to_boosting(const FiberVector& x) {
    if (x.desc != Description::boosting) {
        const Mat2 Linv =
            sl2c_inverse(standard_boost(x.p, x.mass, x.shell));
        return {x.p, spin_matrix(x.two_s, Linv) * x.v, Description::boosting,
                x.two_s, x.shell, x.mass};
    }
    return x;
}

inline FiberVector to_perception(const FiberVector& x) {
    if (x.desc != Description::perception) {
        const Mat2 L = standard_boost(x.p, x.mass, x.shell);
        return {x.p, spin_matrix(x.two_s, L) * x.v, Description::perception,
                x.two_s, x.shell, x.mass};
    }
    return x;
}

// The group action on fibers. Both descriptions share the translation
// phase at the moved base point; they differ in the matrix applied to the
// components: full spin matrix versus Wigner rotation.
inline FiberVector act(const PoincareElement& g, const FiberVector& x) {
    require_on_shell(x.p, x.mass, x.shell);
    const FourVector moved = apply_lorentz(lorentz_from_sl2c(g.A), x.p);
    const complexd phase = std::exp(complexd(0, -minkowski_dot(moved, g.a)));
    VecX v;
    if (x.desc == Description::perception) {
        v = spin_matrix(x.two_s, g.A) * x.v;
    } else {
        const Mat2 w = wigner_rotation(g.A, x.p, x.mass, x.shell);
        v = spin_matrix(x.two_s, w) * x.v;
    }
    return {moved, phase * v, x.desc, x.two_s, x.shell, x.mass};
}

// Internal angular momentum four-vector carried by a metric-normalized
// qubit in the perception description.
inline FourVector pl_vector_of_qubit(const FourVector& p, const VecX& chi,
                                     double m) {
    if (chi.size() != 2)
        throw std::invalid_argument("qubit expected (two components)");
    const FiberVector f{p, chi, Description::perception, 1, Shell::plus, m};
    const double h = fiber_metric(f, f).real();
    if (std::abs(h - 1.0) > 1e-6)
        throw std::invalid_argument("qubit is not metric-normalized");
    const Mat2 proj = chi * chi.adjoint();
    return from_hermitian(m * proj - 0.5 * to_hermitian(p));
}

// Rest-frame spin three-vector recovered from the angular momentum
// four-vector by undoing the standard boost.
inline Vec3 newton_wigner_spin(const FourVector& p, const FourVector& w,
                               double m) {
    require_on_shell(p, m, Shell::plus);
    const Vec3 ws = w.spatial();
    const Vec3 ps = p.spatial();
    return (ws - (w[0] / (m + p[0])) * ps) / m;
}

// Bloch vector of a qubit; scale-invariant in the component norm.
inline Vec3 spin_direction(const VecX& chi) {
    if (chi.size() != 2)
        throw std::invalid_argument("qubit expected (two components)");
    const double n2 = chi.squaredNorm();
    if (n2 < 1e-24) throw std::invalid_argument("zero qubit has no direction");
    Vec3 n;
    for (int j = 1; j <= 3; ++j)
        n[j - 1] = ((chi.adjoint() * pauli(j) * chi)(0)).real() / n2;
    return n;
}

// Spin component along the boosted z axis, acting on perception fibers:
// conjugate the third generator by the spin image of the standard boost.
inline MatX spin_observable(int two_s, const FourVector& p, double m,
                            Shell shell = Shell::plus) {
    const Mat2 L = standard_boost(p, m, shell);
    return spin_matrix(two_s, L) * angular_momentum(two_s, 3) *
           spin_matrix(two_s, sl2c_inverse(L));
}

}  // namespace rqi
