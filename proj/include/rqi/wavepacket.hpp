#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "rqi/bundle.hpp"
#include "rqi/numerics.hpp"

namespace rqi {

// Tensor-product Gauss-Legendre rule over a momentum box, lifted to a mass
// shell. Weights absorb the invariant measure d3p / |p0|.
struct ShellQuadrature {
    std::vector<FourVector> nodes;
    std::vector<double> weights;
    double mass = 1.0;
    Shell shell = Shell::plus;
};

inline ShellQuadrature build_quadrature(double mass, Shell shell,
                                        const Vec3& lo, const Vec3& hi,
                                        const std::array<int, 3>& orders) {
    if (!(mass > 0))
        throw std::invalid_argument("build_quadrature: mass must be positive");
    for (int i = 0; i < 3; ++i) {
        if (orders[std::size_t(i)] < 2)
            throw std::invalid_argument(
                "build_quadrature: order must be >= 2");
        if (!(hi[i] > lo[i]))
            throw std::invalid_argument("build_quadrature: empty box");
    }
    std::array<GaussLegendre, 3> axis;
    for (int i = 0; i < 3; ++i)
        axis[std::size_t(i)] =
            gauss_legendre(orders[std::size_t(i)], lo[i], hi[i]);
    ShellQuadrature q;
    q.mass = mass;
    q.shell = shell;
    const std::size_t ni = axis[0].nodes.size(), nj = axis[1].nodes.size(),
                      nk = axis[2].nodes.size();
    q.nodes.resize(ni * nj * nk);
    q.weights.resize(ni * nj * nk);
    parallel_for(ni * nj * nk, [&](std::size_t idx) {
        const std::size_t i = idx / (nj * nk), j = (idx / nk) % nj,
                          k = idx % nk;
        const Vec3 x(axis[0].nodes[i], axis[1].nodes[j], axis[2].nodes[k]);
        const FourVector p = lift_to_shell(x, mass, shell);
        q.nodes[idx] = p;
        q.weights[idx] = axis[0].weights[i] * axis[1].weights[j] *
                         axis[2].weights[k] / std::abs(p[0]);
    });
    return q;
}

inline ShellQuadrature build_quadrature(double mass, Shell shell,
                                        const Vec3& lo, const Vec3& hi,
                                        int order) {
    return build_quadrature(mass, shell, lo, hi, {order, order, order});
}

inline ShellQuadrature build_quadrature(double mass, Shell shell,
                                        const Vec3& center, double half_width,
                                        int order) {
    if (!(half_width > 0))
        throw std::invalid_argument(
            "build_quadrature: half width must be positive");
    const Vec3 h = Vec3::Constant(half_width);
    return build_quadrature(mass, shell, Vec3(center - h), Vec3(center + h),
                            order);
}

// f(index, node, weight) -> T, reduced with a fixed summation tree so the
// result is independent of the thread budget.
template <typename T, typename F>
T integrate_quadrature(const ShellQuadrature& q, const T& zero, F&& f) {
    return parallel_transform_sum(q.nodes.size(), zero, [&](std::size_t i) {
        return f(i, q.nodes[i], q.weights[i]);
    });
}

struct SupportBox {
    Vec3 lo = Vec3::Zero();
    Vec3 hi = Vec3::Zero();
};

// A one-particle wave function in momentum space. `value` returns the fiber
// components at a shell point. Integrals are taken over the image of the
// base box under `frame`: moving the rule with the state keeps boosted
// integrals exactly as well resolved as rest-frame ones, because the
// invariant measure leaves the weights untouched.
struct SingleParticleState {
    int two_s = 1;
    Shell shell = Shell::plus;
    double mass = 1.0;
    Description desc = Description::boosting;
    std::function<VecX(const FourVector&)> value;
    SupportBox base_box;
    std::array<int, 3> orders{24, 24, 24};
    Mat2 frame = Mat2::Identity();
};

inline ShellQuadrature state_quadrature(const SingleParticleState& st) {
    ShellQuadrature q = build_quadrature(st.mass, st.shell, st.base_box.lo,
                                         st.base_box.hi, st.orders);
    if (!st.frame.isIdentity(0.0)) {
        const Mat4 lam = lorentz_from_sl2c(st.frame);
        parallel_for(q.nodes.size(), [&](std::size_t i) {
            q.nodes[i] = apply_lorentz(lam, q.nodes[i]);
        });
    }
    return q;
}

// Point in the current momentum support; `frac` picks a spot in the unit
// cube of base-box coordinates.
inline FourVector support_point(const SingleParticleState& st,
                                const Vec3& frac) {
    const Vec3 x = st.base_box.lo.array() +
                   frac.array() * (st.base_box.hi - st.base_box.lo).array();
    const FourVector q = lift_to_shell(x, st.mass, st.shell);
    if (st.frame.isIdentity(0.0)) return q;
    return apply_lorentz(lorentz_from_sl2c(st.frame), q);
}

// Axis-aligned bounds of the moved support, from a 3x3x3 sample lattice
// with padding for the bulge the shell map can add between samples.
inline SupportBox support_bounds(const SingleParticleState& st) {
    Vec3 lo = Vec3::Constant(std::numeric_limits<double>::infinity());
    Vec3 hi = -lo;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const Vec3 y =
                    support_point(st, Vec3(0.5 * i, 0.5 * j, 0.5 * k))
                        .spatial();
                lo = lo.cwiseMin(y);
                hi = hi.cwiseMax(y);
            }
    const Vec3 pad = 0.1 * (hi - lo);
    return {Vec3(lo - pad), Vec3(hi + pad)};
}

// Gaussian momentum profile times a constant section. With `calibrated` the
// section is normalized, the profile gains a sqrt(|p0|) factor, and the
// squared norm is exactly one by a product of one-dimensional integrals.
inline SingleParticleState make_gaussian_state(
    int two_s, Shell shell, double mass, Description desc, const Vec3& center,
    double width, const VecX& section, int order, bool calibrated = false,
    double support_sigmas = 6.0) {
    if (section.size() != spin_dim(two_s))
        throw std::invalid_argument(
            "make_gaussian_state: section has the wrong dimension");
    if (!(width > 0))
        throw std::invalid_argument(
            "make_gaussian_state: width must be positive");
    SingleParticleState st;
    st.two_s = two_s;
    st.shell = shell;
    st.mass = mass;
    st.desc = desc;
    st.orders = {order, order, order};
    const Vec3 h = Vec3::Constant(support_sigmas * width);
    st.base_box.lo = center - h;
    st.base_box.hi = center + h;
    VecX sec = calibrated ? VecX(normalize_flat(section)) : section;
    const double amp =
        calibrated ? std::pow(2.0 * M_PI * width * width, -0.75) : 1.0;
    st.value = [sec, center, width, amp, calibrated](const FourVector& p) {
        const Vec3 x = p.spatial();
        double a = amp * std::exp(-(x - center).squaredNorm() /
                                  (4.0 * width * width));
        if (calibrated) a *= std::sqrt(std::abs(p[0]));
        return VecX(a * sec);
    };
    return st;
}

inline SingleParticleState scale_state(const SingleParticleState& st,
                                       complexd c) {
    SingleParticleState out = st;
    out.value = [inner = st.value, c](const FourVector& p) {
        return VecX(c * inner(p));
    };
    return out;
}

inline double norm_squared(const SingleParticleState& st) {
    const ShellQuadrature q = state_quadrature(st);
    if (st.desc == Description::boosting)
        return integrate_quadrature(
            q, 0.0, [&](std::size_t, const FourVector& p, double w) {
                return w * st.value(p).squaredNorm();
            });
    return integrate_quadrature(
        q, 0.0, [&](std::size_t, const FourVector& p, double w) {
            const VecX v = st.value(p);
            const MatX g = perception_metric_matrix(st.two_s, p, st.mass);
            return w * (v.adjoint() * g * v)(0).real();
        });
}

inline SingleParticleState normalized_copy(const SingleParticleState& st) {
    const double n2 = norm_squared(st);
    if (!(n2 > 1e-30))
        throw std::domain_error("normalized_copy: state has zero norm");
    return scale_state(st, 1.0 / std::sqrt(n2));
}

inline SingleParticleState apply_unitary(const SingleParticleState& st,
                                         const PoincareElement& g) {
    require_unimodular(g.A);
    const Mat4 lam_inv = lorentz_from_sl2c(sl2c_inverse(g.A));
    SingleParticleState out = st;
    out.frame = g.A * st.frame;
    if (st.desc == Description::perception) {
        const MatX rep = spin_matrix(st.two_s, g.A);
        out.value = [inner = st.value, a = g.a, rep,
                     lam_inv](const FourVector& p) {
            const FourVector q = apply_lorentz(lam_inv, p);
            const complexd phase =
                std::exp(complexd(0.0, -minkowski_dot(p, a)));
            return VecX(phase * (rep * inner(q)));
        };
    } else {
        out.value = [inner = st.value, g, lam_inv, two_s = st.two_s,
                     mass = st.mass, shell = st.shell](const FourVector& p) {
            const FourVector q = apply_lorentz(lam_inv, p);
            const complexd phase =
                std::exp(complexd(0.0, -minkowski_dot(p, g.a)));
            const Mat2 w = wigner_rotation(g.A, q, mass, shell);
            return VecX(phase * (spin_matrix(two_s, w) * inner(q)));
        };
    }
    return out;
}

// Fiberwise intertwiner between the two descriptions; the quadrature data
// are untouched because the base point does not move.
inline SingleParticleState change_description(const SingleParticleState& st,
                                              Description target) {
    if (st.desc == target) return st;
    SingleParticleState out = st;
    out.desc = target;
    out.value = [inner = st.value, target, two_s = st.two_s, mass = st.mass,
                 shell = st.shell](const FourVector& p) {
        const Mat2 boost = standard_boost(p, mass, shell);
        const Mat2 factor =
            target == Description::boosting ? sl2c_inverse(boost) : boost;
        return VecX(spin_matrix(two_s, factor) * inner(p));
    };
    return out;
}

namespace detail {

inline MatX outer_moment(const SingleParticleState& st) {
    const int d = spin_dim(st.two_s);
    const ShellQuadrature q = state_quadrature(st);
    return integrate_quadrature(
        q, MatX(MatX::Zero(d, d)),
        [&](std::size_t, const FourVector& p, double w) {
            const VecX v = st.value(p);
            return MatX(w * (v * v.adjoint()));
        });
}

}  // namespace detail

// Momentum-traced spin matrix. Only the boosting description carries a flat
// fiber metric, so only there does the plain outer product make sense.
inline MatX spin_reduced_density(const SingleParticleState& st) {
    if (st.desc != Description::boosting)
        throw std::invalid_argument(
            "spin_reduced_density: state must be in the boosting description");
    return detail::outer_moment(st);
}

// Momentum-traced matrix of the perception components; encodes the averaged
// spin four-vector rather than a density matrix.
inline MatX pauli_lubansky_reduced(const SingleParticleState& st) {
    if (st.desc != Description::perception)
        throw std::invalid_argument(
            "pauli_lubansky_reduced: state must be in the perception "
            "description");
    return detail::outer_moment(st);
}

inline double von_neumann_entropy_bits(const MatX& rho) {
    if (rho.rows() != rho.cols())
        throw std::invalid_argument("von_neumann_entropy_bits: not square");
    if ((rho - rho.adjoint()).norm() > 1e-8 * (1.0 + rho.norm()))
        throw std::invalid_argument("von_neumann_entropy_bits: not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-5)
        throw std::invalid_argument(
            "von_neumann_entropy_bits: trace is not one");
    Eigen::SelfAdjointEigenSolver<MatX> es(rho, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (int i = 0; i < rho.rows(); ++i) {
        const double lam = es.eigenvalues()(i);
        if (lam < -1e-9)
            throw std::domain_error(
                "von_neumann_entropy_bits: negative eigenvalue");
        if (lam > 0.0) s -= lam * std::log2(lam);
    }
    return std::max(s, 0.0);
}

// Superposition of at most four product wave functions; enough for the Bell
// family while keeping the reduced matrix a short sum of Kronecker products.
struct ProductTerm {
    complexd coeff = 1.0;
    SingleParticleState first;
    SingleParticleState second;
};

struct TwoParticleState {
    std::vector<ProductTerm> terms;
};

inline TwoParticleState apply_unitary(const TwoParticleState& st,
                                      const PoincareElement& g) {
    TwoParticleState out;
    out.terms.reserve(st.terms.size());
    for (const ProductTerm& t : st.terms)
        out.terms.push_back(
            {t.coeff, apply_unitary(t.first, g), apply_unitary(t.second, g)});
    return out;
}

namespace detail {

// Cross moments of one tensor slot: block (t, u) holds the integral of
// v_t v_u^dagger over a quadrature shared by all terms of that slot.
inline std::vector<MatX> slot_cross_moments(
    const std::vector<const SingleParticleState*>& states) {
    const SingleParticleState& ref = *states.front();
    if (ref.desc != Description::boosting)
        throw std::invalid_argument(
            "two_particle_spin_reduced: states must be in the boosting "
            "description");
    SingleParticleState merged = ref;
    for (const SingleParticleState* s : states) {
        if (s->two_s != ref.two_s || s->shell != ref.shell ||
            s->mass != ref.mass || s->desc != ref.desc)
            throw std::invalid_argument(
                "two_particle_spin_reduced: mismatched tensor factors");
        if ((s->frame - ref.frame).norm() > 1e-12)
            throw std::invalid_argument(
                "two_particle_spin_reduced: tensor factors carry different "
                "frames");
        merged.base_box.lo = merged.base_box.lo.cwiseMin(s->base_box.lo);
        merged.base_box.hi = merged.base_box.hi.cwiseMax(s->base_box.hi);
        for (int i = 0; i < 3; ++i)
            merged.orders[std::size_t(i)] = std::max(
                merged.orders[std::size_t(i)], s->orders[std::size_t(i)]);
    }
    const int d = spin_dim(ref.two_s);
    const int nt = int(states.size());
    const ShellQuadrature q = state_quadrature(merged);
    const MatX stacked = integrate_quadrature(
        q, MatX(MatX::Zero(nt * d, nt * d)),
        [&](std::size_t, const FourVector& p, double w) {
            VecX v(nt * d);
            for (int t = 0; t < nt; ++t)
                v.segment(t * d, d) = states[std::size_t(t)]->value(p);
            return MatX(w * (v * v.adjoint()));
        });
    std::vector<MatX> blocks(std::size_t(nt) * std::size_t(nt));
    for (int t = 0; t < nt; ++t)
        for (int u = 0; u < nt; ++u)
            blocks[std::size_t(t) * std::size_t(nt) + std::size_t(u)] =
                stacked.block(t * d, u * d, d, d);
    return blocks;
}

}  // namespace detail

inline MatX two_particle_spin_reduced(const TwoParticleState& st) {
    if (st.terms.empty())
        throw std::invalid_argument("two_particle_spin_reduced: no terms");
    if (st.terms.size() > 4)
        throw std::invalid_argument(
            "two_particle_spin_reduced: more than four product terms");
    const int nt = int(st.terms.size());
    std::vector<const SingleParticleState*> firsts, seconds;
    for (const ProductTerm& t : st.terms) {
        firsts.push_back(&t.first);
        seconds.push_back(&t.second);
    }
    const std::vector<MatX> ma = detail::slot_cross_moments(firsts);
    const std::vector<MatX> mb = detail::slot_cross_moments(seconds);
    const int d = spin_dim(st.terms.front().first.two_s);
    MatX tau = MatX::Zero(d * d, d * d);
    for (int t = 0; t < nt; ++t)
        for (int u = 0; u < nt; ++u) {
            const std::size_t i =
                std::size_t(t) * std::size_t(nt) + std::size_t(u);
            const complexd c =
                st.terms[std::size_t(t)].coeff *
                std::conj(st.terms[std::size_t(u)].coeff);
            tau += c * Eigen::kroneckerProduct(ma[i], mb[i]).eval();
        }
    return tau;
}

inline MatX partial_trace_second(const MatX& tau, int d1, int d2) {
    if (tau.rows() != d1 * d2 || tau.cols() != d1 * d2)
        throw std::invalid_argument("partial_trace_second: wrong dimensions");
    MatX out = MatX::Zero(d1, d1);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d1; ++j)
            for (int k = 0; k < d2; ++k)
                out(i, j) += tau(i * d2 + k, j * d2 + k);
    return out;
}

inline double entanglement_entropy_bits(const MatX& tau) {
    if (tau.rows() != 4 || tau.cols() != 4)
        throw std::invalid_argument(
            "entanglement_entropy_bits: expected a two-qubit matrix");
    return von_neumann_entropy_bits(partial_trace_second(tau, 2, 2));
}

// Two-qubit concurrence via the spin-flipped spectrum; the input is
// trace-normalized first.
inline double concurrence(const MatX& tau) {
    if (tau.rows() != 4 || tau.cols() != 4)
        throw std::invalid_argument("concurrence: expected a 4x4 matrix");
    const double tr = tau.trace().real();
    if (!(tr > 1e-12))
        throw std::invalid_argument("concurrence: trace is not positive");
    const MatX rho = tau / tr;
    const Mat2 sy = pauli(2);
    const MatX yy = Eigen::kroneckerProduct(sy, sy).eval();
    const MatX r = rho * yy * rho.conjugate() * yy;
    Eigen::ComplexEigenSolver<MatX> es(r, false);
    std::array<double, 4> lam{};
    for (int i = 0; i < 4; ++i)
        lam[std::size_t(i)] =
            std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
    std::sort(lam.begin(), lam.end(), std::greater<double>());
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

// Smallest conjugation defect over a deterministic rotation grid; a large
// value certifies that no single spin rotation links the two matrices.
inline double best_su2_fit_defect(const MatX& target, const MatX& source,
                                  int grid_per_axis = 22) {
    if (target.rows() != source.rows() || target.cols() != source.cols() ||
        target.rows() != target.cols())
        throw std::invalid_argument("best_su2_fit_defect: shape mismatch");
    const int two_s = int(target.rows()) - 1;
    const int n = grid_per_axis;
    if (n < 2)
        throw std::invalid_argument("best_su2_fit_defect: grid too small");
    double best = (target - source).norm();
    for (int ia = 0; ia < n; ++ia) {
        const double beta = M_PI * (ia + 0.5) / n;
        const double ch = std::cos(0.5 * beta), sh = std::sin(0.5 * beta);
        for (int it = 0; it < n; ++it) {
            const double theta = M_PI * (it + 0.5) / n;
            for (int ip = 0; ip < n; ++ip) {
                const double phi = 2.0 * M_PI * ip / n;
                const Vec3 axis(std::sin(theta) * std::cos(phi),
                                std::sin(theta) * std::sin(phi),
                                std::cos(theta));
                Mat2 w = ch * Mat2::Identity();
                w -= complexd(0, sh) *
                     (axis[0] * pauli(1) + axis[1] * pauli(2) +
                      axis[2] * pauli(3));
                const MatX rep = spin_matrix(two_s, w);
                best = std::min(
                    best, (target - rep * source * rep.adjoint()).norm());
            }
        }
    }
    return best;
}

}  // namespace rqi
