#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "rqi/proca.hpp"

using namespace rqi;
using Catch::Matchers::WithinAbs;

namespace {

std::mt19937_64 rng(80804111);

Vec3 random_vec3(double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return Vec3(u(rng), u(rng), u(rng));
}

Eigen::Vector3cd random_spatial() {
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::Vector3cd v;
    for (int i = 0; i < 3; ++i) v[i] = complexd(n(rng), n(rng));
    return v;
}

Mat4c minkowski_metric4() {
    Mat4c e = Mat4c::Zero();
    e(0, 0) = 1;
    e(1, 1) = e(2, 2) = e(3, 3) = -1;
    return e;
}

}  // namespace

TEST_CASE("standard boost at rest fixes the spatial subspace") {
    const double m = 1.2;
    const Mat4 b = proca_boost(rest_momentum(m, Shell::plus), m, Shell::plus);
    CHECK((b - Mat4::Identity()).norm() < 1e-12);
    CHECK_THROWS(proca_boost(FourVector{1.0, 0.5, 0, 0}, m, Shell::plus));
}

TEST_CASE("boosted spatial vectors satisfy the transversality constraint") {
    const double m = 1.0;
    for (int i = 0; i < 200; ++i) {
        const FourVector p = lift_to_shell(random_vec3(3.0), m, Shell::plus);
        const Mat4 b = proca_boost(p, m, Shell::plus);
        const Vec4c v = b * embed_spatial(random_spatial());
        CHECK(transversality_residual(p, v) < 1e-11);
    }
}

TEST_CASE("the transverse fiber has rank three") {
    const double m = 1.0;
    const FourVector p = lift_to_shell(Vec3(0.7, -1.1, 0.4), m, Shell::plus);
    const Mat4 b = proca_boost(p, m, Shell::plus);
    Eigen::Matrix<complexd, 4, 3> span;
    for (int k = 0; k < 3; ++k) {
        Eigen::Vector3cd e = Eigen::Vector3cd::Zero();
        e[k] = 1.0;
        span.col(k) = b * embed_spatial(e);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(span);
    CHECK(svd.singularValues()(2) > 1e-6);
    CHECK(svd.rank() == 3);
}

TEST_CASE("proca metric agrees across both expressions and is positive") {
    const double m = 1.4;
    for (int i = 0; i < 200; ++i) {
        const FourVector p = lift_to_shell(random_vec3(2.5), m, Shell::plus);
        const Mat4 b = proca_boost(p, m, Shell::plus);
        const Vec4c v = b * embed_spatial(random_spatial());
        const Vec4c w = b * embed_spatial(random_spatial());
        const complexd direct = proca_metric(p, v, w, m);
        const complexd via_eta = -(v.adjoint() * minkowski_metric4() * w)(0);
        const complexd via_boost = proca_metric_boost_form(p, v, w, m);
        CHECK(std::abs(direct - via_eta) < 1e-10 * (1.0 + std::abs(direct)));
        CHECK(std::abs(direct - via_boost) <
              1e-10 * (1.0 + std::abs(direct)));
        CHECK(proca_metric(p, v, v, m).real() > 0.0);
        CHECK(std::abs(proca_metric(p, v, v, m).imag()) < 1e-12);
    }
}

TEST_CASE("proca metric at rest is the flat spatial product") {
    const double m = 1.0;
    const FourVector p = rest_momentum(m, Shell::plus);
    for (int i = 0; i < 50; ++i) {
        const Eigen::Vector3cd a = random_spatial(), b = random_spatial();
        const complexd got =
            proca_metric(p, embed_spatial(a), embed_spatial(b), m);
        const complexd expect = a.dot(b);  // Eigen dot conjugates the left
        CHECK(std::abs(got - expect) < 1e-12 * (1.0 + std::abs(expect)));
    }
}

TEST_CASE("proca metric rejects non-transverse arguments") {
    const double m = 1.0;
    const FourVector p = lift_to_shell(Vec3(0.4, 0.2, -0.3), m, Shell::plus);
    Vec4c along;
    for (int mu = 0; mu < 4; ++mu) along[mu] = p[mu];
    CHECK_THROWS(proca_metric(p, along, along, m));
    // the would-be metric on a momentum-parallel vector is non-positive,
    // which is why the constraint is needed in the first place
    const complexd bad = -(along.adjoint() * minkowski_metric4() * along)(0);
    CHECK(bad.real() <= 0.0);
    CHECK_THAT(bad.real(), WithinAbs(-m * m, 1e-10));
}

TEST_CASE("polarization basis diagonalizes the spin generator at rest") {
    const double m = 1.0;
    const auto basis = polarization_basis(rest_momentum(m, Shell::plus), m,
                                          Shell::plus);
    const Eigen::Matrix3cd j3 = vector_angular_momentum(3);
    const double weights[3] = {1.0, 0.0, -1.0};
    for (int k = 0; k < 3; ++k) {
        CHECK(std::abs(basis[std::size_t(k)][0]) < 1e-14);
        Eigen::Vector3cd spatial;
        for (int i = 0; i < 3; ++i)
            spatial[i] = basis[std::size_t(k)][i + 1];
        CHECK((j3 * spatial - weights[k] * spatial).norm() < 1e-13);
    }
}

TEST_CASE("polarization basis is orthonormal and transverse off rest") {
    const double m = 0.9;
    for (int i = 0; i < 100; ++i) {
        const FourVector p = lift_to_shell(random_vec3(2.5), m, Shell::plus);
        const auto basis = polarization_basis(p, m, Shell::plus);
        for (int a = 0; a < 3; ++a) {
            CHECK(transversality_residual(p, basis[std::size_t(a)]) < 1e-10);
            for (int b = 0; b < 3; ++b) {
                const complexd h = proca_metric(p, basis[std::size_t(a)],
                                                basis[std::size_t(b)], m);
                const complexd expect = a == b ? 1.0 : 0.0;
                CHECK(std::abs(h - expect) < 1e-10);
            }
        }
    }
    CHECK_THROWS(
        polarization_basis(FourVector{1.0, 0.2, 0, 0}, m, Shell::plus));
}

TEST_CASE("lorentz action moves transverse fibers onto each other") {
    const double m = 1.0;
    for (int i = 0; i < 100; ++i) {
        const FourVector p = lift_to_shell(random_vec3(2.0), m, Shell::plus);
        const Mat2 a = random_sl2c(rng);
        const Mat4 lam = lorentz_from_sl2c(a);
        const Vec4c v =
            proca_boost(p, m, Shell::plus) * embed_spatial(random_spatial());
        const FourVector moved = apply_lorentz(lam, p);
        CHECK(transversality_residual(moved, Vec4c(lam * v)) < 1e-10);
    }
}

TEST_CASE("the phased action preserves the proca metric") {
    const double m = 1.0;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const FourVector p = lift_to_shell(random_vec3(1.5), m, Shell::plus);
        const Mat2 a = random_sl2c(rng);
        const Mat4 lam = lorentz_from_sl2c(a);
        const FourVector trans{u(rng), u(rng), u(rng), u(rng)};
        const Mat4 b = proca_boost(p, m, Shell::plus);
        const Vec4c v = b * embed_spatial(random_spatial());
        const Vec4c w = b * embed_spatial(random_spatial());
        const FourVector moved = apply_lorentz(lam, p);
        const complexd phase =
            std::exp(complexd(0.0, -minkowski_dot(moved, trans)));
        const Vec4c mv = phase * (lam * v), mw = phase * (lam * w);
        const complexd before = proca_metric(p, v, w, m);
        const complexd after = proca_metric(moved, mv, mw, m);
        CHECK(std::abs(before - after) < 1e-9 * (1.0 + std::abs(before)));
    }
}

TEST_CASE("rotations act on the spatial fiber with spin one spectrum") {
    for (int i = 0; i < 50; ++i) {
        const Mat2 u = random_su2(rng);
        const Mat4 lam = lorentz_from_sl2c(u);
        // rotations leave the rest fiber invariant, block lower-right 3x3
        CHECK(std::abs(lam(0, 0) - 1.0) < 1e-12);
        CHECK(lam.row(0).tail<3>().norm() < 1e-12);
        CHECK(lam.col(0).tail<3>().norm() < 1e-12);
        const Eigen::Matrix3cd rot =
            lam.bottomRightCorner<3, 3>().cast<complexd>();
        Eigen::ComplexEigenSolver<Eigen::Matrix3cd> er(rot, false);
        Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(
            Eigen::Matrix3cd(spin_matrix(2, u)), false);
        std::array<double, 3> ra{}, sa{};
        for (int k = 0; k < 3; ++k) {
            ra[std::size_t(k)] = std::arg(er.eigenvalues()(k));
            sa[std::size_t(k)] = std::arg(es.eigenvalues()(k));
        }
        std::sort(ra.begin(), ra.end());
        std::sort(sa.begin(), sa.end());
        for (int k = 0; k < 3; ++k)
            CHECK_THAT(ra[std::size_t(k)],
                       WithinAbs(sa[std::size_t(k)], 1e-9));
    }
}

TEST_CASE("angular momentum generators obey the commutator algebra") {
    for (int a = 1; a <= 3; ++a) {
        const Eigen::Matrix3cd ja = vector_angular_momentum(a);
        CHECK((ja - ja.adjoint()).norm() < 1e-15);
    }
    const Eigen::Matrix3cd j1 = vector_angular_momentum(1);
    const Eigen::Matrix3cd j2 = vector_angular_momentum(2);
    const Eigen::Matrix3cd j3 = vector_angular_momentum(3);
    CHECK((j1 * j2 - j2 * j1 - complexd(0, 1) * j3).norm() < 1e-14);
    const Eigen::Matrix3cd casimir = j1 * j1 + j2 * j2 + j3 * j3;
    CHECK((casimir - 2.0 * Eigen::Matrix3cd::Identity()).norm() < 1e-14);
    CHECK_THROWS(vector_angular_momentum(0));
}
