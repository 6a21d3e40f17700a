#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rqi/minkowski.hpp"

using namespace rqi;
using Catch::Matchers::WithinAbs;

namespace {

std::mt19937_64 rng(20240815);

FourVector random_four_vector(double scale = 3.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return FourVector{u(rng), u(rng), u(rng), u(rng)};
}

}  // namespace

TEST_CASE("metric signature") {
    CHECK(minkowski_dot({1, 0, 0, 0}, {1, 0, 0, 0}) == 1.0);
    CHECK(minkowski_dot({0, 1, 0, 0}, {0, 1, 0, 0}) == -1.0);
    CHECK(minkowski_dot({0, 0, 1, 0}, {0, 0, 1, 0}) == -1.0);
    CHECK(minkowski_dot({0, 0, 0, 1}, {0, 0, 0, 1}) == -1.0);

    const double m = 1.7;
    const FourVector pm = rest_momentum(m, Shell::plus);
    CHECK_THAT(minkowski_dot(pm, pm), WithinAbs(m * m, 1e-14));
}

TEST_CASE("metric is symmetric and bilinear") {
    for (int i = 0; i < 200; ++i) {
        const FourVector x = random_four_vector();
        const FourVector y = random_four_vector();
        const FourVector z = random_four_vector();
        CHECK_THAT(minkowski_dot(x, y), WithinAbs(minkowski_dot(y, x), 1e-13));
        CHECK_THAT(minkowski_dot(x + y, z),
                   WithinAbs(minkowski_dot(x, z) + minkowski_dot(y, z), 1e-12));
        CHECK_THAT(minkowski_dot(2.5 * x, y),
                   WithinAbs(2.5 * minkowski_dot(x, y), 1e-12));
    }
}

TEST_CASE("hermitian map on basis vectors") {
    const double m = 2.3;
    const Mat2 rest = to_hermitian(rest_momentum(m, Shell::plus));
    CHECK((rest - m * Mat2::Identity()).norm() < 1e-15);

    const Mat2 z = to_hermitian({0, 0, 0, 1});
    CHECK((z - pauli(3)).norm() < 1e-15);

    const Mat2 x = to_hermitian({0, 1, 0, 0});
    CHECK((x - pauli(1)).norm() < 1e-15);
}

TEST_CASE("lowered map contracts to the interval") {
    for (int i = 0; i < 500; ++i) {
        const FourVector x = random_four_vector();
        const Mat2 prod = to_hermitian_lowered(x) * to_hermitian(x);
        const Mat2 expect = minkowski_dot(x, x) * Mat2::Identity();
        CHECK((prod - expect).norm() < 1e-12);
    }
}

TEST_CASE("anticommutation identity") {
    for (int i = 0; i < 500; ++i) {
        const FourVector x = random_four_vector();
        const FourVector y = random_four_vector();
        const Mat2 lhs = to_hermitian_lowered(x) * to_hermitian(y) +
                         to_hermitian_lowered(y) * to_hermitian(x);
        const Mat2 rhs = 2.0 * minkowski_dot(x, y) * Mat2::Identity();
        CHECK((lhs - rhs).norm() < 1e-12);
    }
}

TEST_CASE("hermitian maps agree on temporal vectors, flip on spatial") {
    const FourVector t{1.4, 0, 0, 0};
    CHECK((to_hermitian(t) - to_hermitian_lowered(t)).norm() < 1e-15);
    const FourVector s{0, 0.3, -1.1, 0.7};
    CHECK((to_hermitian(s) + to_hermitian_lowered(s)).norm() < 1e-15);
}

TEST_CASE("inverse hermitian map on generators") {
    const FourVector e0 = from_hermitian(Mat2::Identity());
    CHECK_THAT(e0[0], WithinAbs(1.0, 1e-15));
    CHECK_THAT(e0[1], WithinAbs(0.0, 1e-15));
    CHECK_THAT(e0[2], WithinAbs(0.0, 1e-15));
    CHECK_THAT(e0[3], WithinAbs(0.0, 1e-15));

    const FourVector e1 = from_hermitian(pauli(1));
    CHECK_THAT(e1[0], WithinAbs(0.0, 1e-15));
    CHECK_THAT(e1[1], WithinAbs(1.0, 1e-15));
}

TEST_CASE("roundtrip through hermitian matrices") {
    double max_err = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const FourVector x = random_four_vector();
        const FourVector back = from_hermitian(to_hermitian(x));
        for (int mu = 0; mu < 4; ++mu)
            max_err = std::max(max_err, std::abs(back[mu] - x[mu]));
    }
    CHECK(max_err < 1e-13);
}

TEST_CASE("roundtrip starting from hermitian matrices") {
    std::uniform_real_distribution<double> u(-2, 2);
    for (int i = 0; i < 200; ++i) {
        Mat2 h;
        const double a = u(rng), d = u(rng), re = u(rng), im = u(rng);
        h << a, complexd(re, im), complexd(re, -im), d;
        CHECK((to_hermitian(from_hermitian(h)) - h).norm() < 1e-13);
    }
}

TEST_CASE("inverse hermitian map rejects non-hermitian input") {
    Mat2 bad;
    bad << 1.0, complexd(0, 1e-6), complexd(0, 1e-6), 1.0;
    CHECK_THROWS(from_hermitian(bad));
}

TEST_CASE("shell helpers") {
    const double m = 0.9;
    const Vec3 p(0.2, -0.5, 1.1);
    const FourVector plus = lift_to_shell(p, m, Shell::plus);
    const FourVector minus = lift_to_shell(p, m, Shell::minus);
    CHECK(plus[0] > 0);
    CHECK(minus[0] < 0);
    CHECK_THAT(minkowski_dot(plus, plus), WithinAbs(m * m, 1e-12));
    CHECK_THAT(minkowski_dot(minus, minus), WithinAbs(m * m, 1e-12));
    CHECK_NOTHROW(require_on_shell(plus, m, Shell::plus));
    CHECK_THROWS(require_on_shell(plus, m, Shell::minus));
    CHECK_THROWS(require_on_shell(FourVector{1, 0, 0, 0}, m, Shell::plus));
}
