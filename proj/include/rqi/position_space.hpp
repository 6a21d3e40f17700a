#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rqi/dirac.hpp"
#include "rqi/proca.hpp"
#include "rqi/wavepacket.hpp"

namespace rqi {

enum class FieldKind { dirac, proca };

inline const char* field_kind_name(FieldKind k) {
    return k == FieldKind::dirac ? "dirac" : "proca";
}

inline int field_spin_doubled(FieldKind k) {
    return k == FieldKind::dirac ? 1 : 2;
}

// Uniform cubic grid; point (i, j, k) sits at origin + spacing * (i, j, k).
struct SpatialGrid {
    int n = 0;
    double spacing = 0.0;
    Vec3 origin = Vec3::Zero();

    double coordinate(int axis, int index) const {
        return origin[axis] + spacing * index;
    }
};

// Momentum-space input for field synthesis: four fiber components on the
// positive shell (range fiber for dirac, transverse fiber for proca) plus
// the box and per-axis orders of the product Gauss rule that resolves them.
struct MomentumSection {
    FieldKind kind = FieldKind::dirac;
    double mass = 1.0;
    std::function<Vec4c(const FourVector&)> value;
    SupportBox box;
    std::array<int, 3> orders{24, 24, 24};
    Vec3 momentum_width = Vec3::Ones();
    Vec3 position_center = Vec3::Zero();
};

namespace detail {

inline void check_section(const MomentumSection& sec) {
    if (!(sec.mass > 0))
        throw std::invalid_argument("momentum section: mass must be positive");
    if (!sec.value)
        throw std::invalid_argument("momentum section: missing value map");
    for (int a = 0; a < 3; ++a) {
        if (sec.orders[std::size_t(a)] < 2)
            throw std::invalid_argument(
                "momentum section: orders must be >= 2");
        if (!(sec.box.lo[a] < sec.box.hi[a]))
            throw std::invalid_argument("momentum section: empty box");
    }
}

inline std::complex<double> section_pairing(FieldKind kind, double mass,
                                            const FourVector& p,
                                            const Vec4c& v, const Vec4c& w) {
    if (kind == FieldKind::dirac) return (mass / p[0]) * v.dot(w);
    return -std::conj(v[0]) * w[0] + std::conj(v[1]) * w[1] +
           std::conj(v[2]) * w[2] + std::conj(v[3]) * w[3];
}

}  // namespace detail

// Gaussian profile times the boosted rest qubit, scaled so the section has
// unit norm in the pointwise pairing.
inline MomentumSection make_dirac_section(double mass, const Vec3& center,
                                          double width,
                                          const Eigen::Vector2cd& chi,
                                          int order,
                                          double support_sigmas = 6.0) {
    if (!(mass > 0) || !(width > 0))
        throw std::invalid_argument(
            "make_dirac_section: mass and width must be positive");
    if (chi.norm() == 0)
        throw std::invalid_argument("make_dirac_section: zero qubit");
    const Eigen::Vector2cd unit = chi / chi.norm();
    const double amp =
        std::pow(2.0 * std::numbers::pi * width * width, -0.75);
    MomentumSection sec;
    sec.kind = FieldKind::dirac;
    sec.mass = mass;
    sec.value = [mass, center, width, amp, unit](const FourVector& p) {
        const Vec3 k = p.spatial();
        const double g =
            amp * std::exp(-(k - center).squaredNorm() / (4.0 * width * width));
        const Vec4c rest = embed_rest_qubit(unit, Shell::plus);
        return Vec4c(std::sqrt(p[0]) * g *
                     foldy_wouthuysen(p, rest, mass, Shell::plus));
    };
    sec.box.lo = center - Vec3::Constant(support_sigmas * width);
    sec.box.hi = center + Vec3::Constant(support_sigmas * width);
    sec.orders = {order, order, order};
    sec.momentum_width = Vec3::Constant(width);
    return sec;
}

// Gaussian profile on one boosted polarization vector; helicity_index
// 0, 1, 2 selects the +1, 0, -1 member of the basis.
inline MomentumSection make_proca_section(double mass, const Vec3& center,
                                          double width, int helicity_index,
                                          int order,
                                          double support_sigmas = 6.0) {
    if (!(mass > 0) || !(width > 0))
        throw std::invalid_argument(
            "make_proca_section: mass and width must be positive");
    if (helicity_index < 0 || helicity_index > 2)
        throw std::invalid_argument(
            "make_proca_section: helicity index out of range");
    const double amp =
        std::pow(2.0 * std::numbers::pi * width * width, -0.75);
    MomentumSection sec;
    sec.kind = FieldKind::proca;
    sec.mass = mass;
    sec.value = [mass, center, width, amp, helicity_index](
                    const FourVector& p) {
        const Vec3 k = p.spatial();
        const double g =
            amp * std::exp(-(k - center).squaredNorm() / (4.0 * width * width));
        const std::array<Vec4c, 3> basis = polarization_basis(p, mass);
        return Vec4c(std::sqrt(p[0]) * g *
                     basis[std::size_t(helicity_index)]);
    };
    sec.box.lo = center - Vec3::Constant(support_sigmas * width);
    sec.box.hi = center + Vec3::Constant(support_sigmas * width);
    sec.orders = {order, order, order};
    sec.momentum_width = Vec3::Constant(width);
    return sec;
}

// Multiplies the section by the translation phase exp(-i<p, a>). A spatial
// translation moves the synthesized packet by -a in position space.
inline MomentumSection phase_translate(const MomentumSection& sec,
                                       const FourVector& a) {
    detail::check_section(sec);
    MomentumSection out = sec;
    const auto inner = sec.value;
    out.value = [inner, a](const FourVector& p) {
        const complexd phase =
            std::exp(complexd(0.0, -minkowski_dot(p, a)));
        return Vec4c(phase * inner(p));
    };
    out.position_center = sec.position_center - a.spatial();
    return out;
}

inline double momentum_norm_squared(const MomentumSection& sec) {
    detail::check_section(sec);
    const ShellQuadrature q = build_quadrature(
        sec.mass, Shell::plus, sec.box.lo, sec.box.hi, sec.orders);
    const double total = integrate_quadrature(
        q, 0.0,
        [&](std::size_t, const FourVector& p, double w) {
            const Vec4c v = sec.value(p);
            return w * detail::section_pairing(sec.kind, sec.mass, p, v, v)
                           .real();
        });
    return total;
}

// Sampled field on the grid: values are slice-major, then row-major in
// (i, j, k). coverage compares the grid half-extent against the section's
// nominal position spread; values below one set the warning flag.
struct SpacetimeField {
    FieldKind kind = FieldKind::dirac;
    double mass = 1.0;
    SpatialGrid grid;
    std::vector<double> times;
    std::vector<Vec4c> values;
    double coverage = 1.0;
    bool grid_warning = false;

    std::size_t index(std::size_t slice, std::size_t i, std::size_t j,
                      std::size_t k) const {
        const std::size_t n = std::size_t(grid.n);
        return ((slice * n + i) * n + j) * n + k;
    }
};

namespace detail {

inline double grid_coverage(const MomentumSection& sec,
                            const SpatialGrid& grid,
                            const std::vector<double>& times) {
    double t_max = 0.0;
    for (double t : times) t_max = std::max(t_max, std::abs(t));
    const double half = 0.5 * grid.spacing * grid.n;
    double cover = std::numeric_limits<double>::infinity();
    for (int a = 0; a < 3; ++a) {
        const double sigma_x = 1.0 / (2.0 * sec.momentum_width[a]);
        const double required = 4.0 * sigma_x + t_max;
        const double grid_center =
            grid.origin[a] + 0.5 * grid.spacing * (grid.n - 1);
        const double effective =
            half - std::abs(grid_center - sec.position_center[a]);
        cover = std::min(cover, std::max(0.0, effective) / required);
    }
    return cover;
}

}  // namespace detail

// Evaluates (2 pi)^(-3/2) * integral of exp(-i p0 t + i p.x) * weight * value
// over the shell, with weight sqrt(mass) for dirac and sqrt(p0) for proca.
// The plane-wave phases factor per axis, so each slice reduces to three
// dense matrix products instead of an O(n^3 N^3) direct sum.
inline SpacetimeField synthesize(const MomentumSection& sec,
                                 const std::vector<double>& times,
                                 const SpatialGrid& grid) {
    detail::check_section(sec);
    if (times.empty())
        throw std::invalid_argument("synthesize: need at least one time");
    if (grid.n < 1 || !(grid.spacing > 0))
        throw std::invalid_argument("synthesize: bad grid");

    const int n1 = sec.orders[0], n2 = sec.orders[1], n3 = sec.orders[2];
    const std::array<GaussLegendre, 3> axis = {
        gauss_legendre(n1, sec.box.lo[0], sec.box.hi[0]),
        gauss_legendre(n2, sec.box.lo[1], sec.box.hi[1]),
        gauss_legendre(n3, sec.box.lo[2], sec.box.hi[2])};

    // Fiber values times quadrature weight, invariant measure, and the
    // kind-dependent synthesis weight; energies drive the per-slice phase.
    const std::size_t nodes = std::size_t(n1) * n2 * n3;
    std::vector<std::array<complexd, 4>> base(nodes);
    std::vector<double> energy(nodes);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
            for (int k = 0; k < n3; ++k) {
                const Vec3 x(axis[0].nodes[std::size_t(i)],
                             axis[1].nodes[std::size_t(j)],
                             axis[2].nodes[std::size_t(k)]);
                const FourVector p = lift_to_shell(x, sec.mass, Shell::plus);
                const double w = axis[0].weights[std::size_t(i)] *
                                 axis[1].weights[std::size_t(j)] *
                                 axis[2].weights[std::size_t(k)] / p[0];
                const double amp = sec.kind == FieldKind::dirac
                                       ? std::sqrt(sec.mass)
                                       : std::sqrt(p[0]);
                const Vec4c v = w * amp * sec.value(p);
                const std::size_t id =
                    (std::size_t(i) * n2 + std::size_t(j)) * n3 +
                    std::size_t(k);
                for (int c = 0; c < 4; ++c) base[id][std::size_t(c)] = v[c];
                energy[id] = p[0];
            }

    const int N = grid.n;
    std::array<Eigen::MatrixXcd, 3> phase;
    for (int a = 0; a < 3; ++a) {
        const int n_a = sec.orders[std::size_t(a)];
        phase[std::size_t(a)].resize(n_a, N);
        for (int i = 0; i < n_a; ++i)
            for (int g = 0; g < N; ++g)
                phase[std::size_t(a)](i, g) = std::exp(complexd(
                    0.0, axis[std::size_t(a)].nodes[std::size_t(i)] *
                             grid.coordinate(a, g)));
    }

    SpacetimeField field;
    field.kind = sec.kind;
    field.mass = sec.mass;
    field.grid = grid;
    field.times = times;
    field.values.assign(times.size() * std::size_t(N) * N * N, Vec4c::Zero());
    const double scale =
        std::pow(2.0 * std::numbers::pi, -1.5);

    std::vector<complexd> g_component(nodes);
    for (std::size_t s = 0; s < times.size(); ++s) {
        std::vector<complexd> tick(nodes);
        for (std::size_t id = 0; id < nodes; ++id)
            tick[id] = std::exp(complexd(0.0, -energy[id] * times[s]));
        for (int c = 0; c < 4; ++c) {
            for (std::size_t id = 0; id < nodes; ++id)
                g_component[id] = base[id][std::size_t(c)] * tick[id];
            // Contract the x axis: rows run over (j, k), columns over i.
            Eigen::Map<const Eigen::MatrixXcd> m0(
                g_component.data(), std::ptrdiff_t(n2) * n3, n1);
            const Eigen::MatrixXcd a1 = m0 * phase[0];  // (jk) x N
            for (int a = 0; a < N; ++a) {
                Eigen::Map<const Eigen::MatrixXcd> col(
                    a1.col(a).data(), n3, n2);
                const Eigen::MatrixXcd b = col * phase[1];          // k x N
                const Eigen::MatrixXcd plane =
                    b.transpose() * phase[2];                       // N x N
                for (int bidx = 0; bidx < N; ++bidx)
                    for (int cidx = 0; cidx < N; ++cidx)
                        field.values[field.index(
                            s, std::size_t(a), std::size_t(bidx),
                            std::size_t(cidx))][c] =
                            scale * plane(bidx, cidx);
            }
        }
    }

    field.coverage = detail::grid_coverage(sec, grid, times);
    field.grid_warning = field.coverage < 1.0;
    return field;
}

// Spatial L2 norm of one slice in the kind's pairing: the plain Hermitian
// square for dirac, the time-flipped square for proca. Matches the momentum
// norm of the synthesized section when the grid resolves the packet.
inline double field_norm_squared(const SpacetimeField& f, std::size_t slice) {
    if (slice >= f.times.size())
        throw std::out_of_range("field_norm_squared: slice out of range");
    const std::size_t n = std::size_t(f.grid.n);
    const std::size_t per_slice = n * n * n;
    std::vector<double> terms(per_slice);
    const std::size_t offset = slice * per_slice;
    for (std::size_t id = 0; id < per_slice; ++id) {
        const Vec4c& v = f.values[offset + id];
        double pair = v.squaredNorm();
        if (f.kind == FieldKind::proca) pair -= 2.0 * std::norm(v[0]);
        terms[id] = pair;
    }
    const double h = f.grid.spacing;
    return pairwise_sum(terms) * h * h * h;
}

struct FieldResiduals {
    double dirac = 0.0;
    double divergence = 0.0;
    double klein_gordon = 0.0;
};

// Relative strength of the field equations under second-order central
// differences, evaluated on interior points. Dirac uses the first-order
// operator; proca reports the four-divergence and the wave operator, the
// latter in the form that vanishes for on-shell phases in this signature.
inline FieldResiduals pde_residual(const SpacetimeField& f) {
    if (f.times.size() < 3)
        throw std::invalid_argument("pde_residual: need >= 3 time slices");
    if (f.grid.n < 3)
        throw std::invalid_argument("pde_residual: need >= 3 grid points");
    const double dt = f.times[1] - f.times[0];
    if (!(dt > 0))
        throw std::invalid_argument("pde_residual: times must increase");
    for (std::size_t s = 1; s + 1 < f.times.size(); ++s)
        if (std::abs(f.times[s + 1] - f.times[s] - dt) > 1e-9 * std::abs(dt))
            throw std::invalid_argument("pde_residual: uneven time steps");

    const double h = f.grid.spacing;
    const double m = f.mass;
    const std::size_t n = std::size_t(f.grid.n);
    const std::array<Mat4c, 4> gamma = {gamma_matrix(0), gamma_matrix(1),
                                        gamma_matrix(2), gamma_matrix(3)};
    double num_dirac = 0.0, num_div = 0.0, num_kg = 0.0, den = 0.0;
    for (std::size_t s = 1; s + 1 < f.times.size(); ++s)
        for (std::size_t i = 1; i + 1 < n; ++i)
            for (std::size_t j = 1; j + 1 < n; ++j)
                for (std::size_t k = 1; k + 1 < n; ++k) {
                    const Vec4c& v = f.values[f.index(s, i, j, k)];
                    const Vec4c dts = (f.values[f.index(s + 1, i, j, k)] -
                                       f.values[f.index(s - 1, i, j, k)]) /
                                      (2.0 * dt);
                    const std::array<Vec4c, 3> dsp = {
                        Vec4c((f.values[f.index(s, i + 1, j, k)] -
                               f.values[f.index(s, i - 1, j, k)]) /
                              (2.0 * h)),
                        Vec4c((f.values[f.index(s, i, j + 1, k)] -
                               f.values[f.index(s, i, j - 1, k)]) /
                              (2.0 * h)),
                        Vec4c((f.values[f.index(s, i, j, k + 1)] -
                               f.values[f.index(s, i, j, k - 1)]) /
                              (2.0 * h))};
                    den += v.squaredNorm();
                    if (f.kind == FieldKind::dirac) {
                        Vec4c r = complexd(0, 1) * (gamma[0] * dts) - m * v;
                        for (int a = 0; a < 3; ++a)
                            r += complexd(0, 1) *
                                 (gamma[std::size_t(a) + 1] *
                                  dsp[std::size_t(a)]);
                        num_dirac += r.squaredNorm();
                    } else {
                        const complexd div =
                            dts[0] + dsp[0][1] + dsp[1][2] + dsp[2][3];
                        num_div += std::norm(div);
                        const Vec4c dtt =
                            (f.values[f.index(s + 1, i, j, k)] - 2.0 * v +
                             f.values[f.index(s - 1, i, j, k)]) /
                            (dt * dt);
                        Vec4c lap = Vec4c::Zero();
                        lap += (f.values[f.index(s, i + 1, j, k)] - 2.0 * v +
                                f.values[f.index(s, i - 1, j, k)]) /
                               (h * h);
                        lap += (f.values[f.index(s, i, j + 1, k)] - 2.0 * v +
                                f.values[f.index(s, i, j - 1, k)]) /
                               (h * h);
                        lap += (f.values[f.index(s, i, j, k + 1)] - 2.0 * v +
                                f.values[f.index(s, i, j, k - 1)]) /
                               (h * h);
                        const Vec4c r = dtt - lap + m * m * v;
                        num_kg += r.squaredNorm();
                    }
                }
    if (den == 0.0)
        throw std::invalid_argument("pde_residual: zero field");
    FieldResiduals out;
    if (f.kind == FieldKind::dirac) {
        out.dirac = std::sqrt(num_dirac / den) / m;
    } else {
        out.divergence = std::sqrt(num_div / den) / m;
        out.klein_gordon = std::sqrt(num_kg / den) / (m * m);
    }
    return out;
}

namespace detail {

inline std::string field_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

// RFC 4180 table: one record per grid point with the grid metadata repeated in
// leading columns so each row is self-describing.
inline void write_field_csv(const SpacetimeField& f, std::ostream& os) {
    os << "kind,mass,spin_doubled,grid_n,spacing,origin_x,origin_y,origin_z,"
          "t,i,j,k,re0,im0,re1,im1,re2,im2,re3,im3\r\n";
    const std::string meta =
        std::string(field_kind_name(f.kind)) + "," +
        detail::field_num(f.mass) + "," +
        std::to_string(field_spin_doubled(f.kind)) + "," +
        std::to_string(f.grid.n) + "," + detail::field_num(f.grid.spacing) +
        "," + detail::field_num(f.grid.origin[0]) + "," +
        detail::field_num(f.grid.origin[1]) + "," +
        detail::field_num(f.grid.origin[2]);
    const std::size_t n = std::size_t(f.grid.n);
    for (std::size_t s = 0; s < f.times.size(); ++s)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const Vec4c& v = f.values[f.index(s, i, j, k)];
                    os << meta << "," << detail::field_num(f.times[s]) << ","
                       << i << "," << j << "," << k;
                    for (int c = 0; c < 4; ++c)
                        os << "," << detail::field_num(v[c].real()) << ","
                           << detail::field_num(v[c].imag());
                    os << "\r\n";
                }
}

// JSON object with the grid metadata in the header and the samples as row-major
// arrays of interleaved real and imaginary parts.
inline void write_field_json(const SpacetimeField& f, std::ostream& os) {
    os << "{\"kind\":\"" << field_kind_name(f.kind) << "\"";
    os << ",\"mass\":" << detail::field_num(f.mass);
    os << ",\"spin_doubled\":" << field_spin_doubled(f.kind);
    os << ",\"grid\":{\"n\":" << f.grid.n
       << ",\"spacing\":" << detail::field_num(f.grid.spacing)
       << ",\"origin\":[" << detail::field_num(f.grid.origin[0]) << ","
       << detail::field_num(f.grid.origin[1]) << ","
       << detail::field_num(f.grid.origin[2]) << "]}";
    os << ",\"coverage\":" << detail::field_num(f.coverage);
    os << ",\"times\":[";
    for (std::size_t s = 0; s < f.times.size(); ++s)
        os << (s ? "," : "") << detail::field_num(f.times[s]);
    os << "],\"values\":[";
    for (std::size_t id = 0; id < f.values.size(); ++id) {
        os << (id ? ",[" : "[");
        for (int c = 0; c < 4; ++c)
            os << (c ? "," : "") << detail::field_num(f.values[id][c].real())
               << "," << detail::field_num(f.values[id][c].imag());
        os << "]";
    }
    os << "]}";
}

}  // namespace rqi
