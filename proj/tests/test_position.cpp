#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "rqi/position_space.hpp"

using namespace rqi;
using Catch::Matchers::WithinAbs;

namespace {

Eigen::Vector2cd up_qubit() {
    Eigen::Vector2cd v;
    v << 1, 0;
    return v;
}

SpatialGrid centered_grid(int n, double half_extent) {
    SpatialGrid g;
    g.n = n;
    g.spacing = 2.0 * half_extent / n;
    g.origin = Vec3::Constant(-half_extent + 0.5 * g.spacing);
    return g;
}

}  // namespace

TEST_CASE("zero section synthesizes to the zero field") {
    MomentumSection sec = make_dirac_section(1.0, Vec3(0, 0, 0), 1.0,
                                             up_qubit(), 8);
    sec.value = [](const FourVector&) { return Vec4c(Vec4c::Zero()); };
    const SpacetimeField f = synthesize(sec, {0.0}, centered_grid(6, 3.0));
    for (const Vec4c& v : f.values) CHECK(v.norm() == 0.0);
}

TEST_CASE("dirac synthesis is an isometry on a wide grid") {
    const double m = 1.0, sigma = 1.0;
    const MomentumSection sec =
        make_dirac_section(m, Vec3(0, 0, 0), sigma, up_qubit(), 36);
    const double mom = momentum_norm_squared(sec);
    CHECK_THAT(mom, WithinAbs(1.0, 1e-6));

    const SpacetimeField f =
        synthesize(sec, {0.0}, centered_grid(48, 6.0 / sigma));
    CHECK(f.coverage >= 1.0);
    const double pos = field_norm_squared(f, 0);
    CHECK(std::abs(pos - mom) / mom < 1e-3);
}

TEST_CASE("proca synthesis preserves the indefinite pairing norm") {
    const double m = 1.0, sigma = 1.0;
    const MomentumSection sec =
        make_proca_section(m, Vec3(0.2, 0, 0), sigma, 0, 36);
    const double mom = momentum_norm_squared(sec);
    CHECK_THAT(mom, WithinAbs(1.0, 1e-6));

    const SpacetimeField f =
        synthesize(sec, {0.0}, centered_grid(48, 6.0 / sigma));
    const double pos = field_norm_squared(f, 0);
    CHECK(std::abs(pos - mom) / mom < 1e-3);
    CHECK(pos >= 0.0);
}

TEST_CASE("time translation equals the phase-translated synthesis") {
    const double m = 1.0;
    const MomentumSection sec =
        make_dirac_section(m, Vec3(0.1, -0.2, 0.3), 0.8, up_qubit(), 16);
    const double delta = 0.37;
    const SpacetimeField direct =
        synthesize(sec, {0.4 + delta}, centered_grid(8, 2.5));
    const SpacetimeField phased =
        synthesize(phase_translate(sec, FourVector{delta, 0, 0, 0}), {0.4},
                   centered_grid(8, 2.5));
    REQUIRE(direct.values.size() == phased.values.size());
    for (std::size_t i = 0; i < direct.values.size(); ++i)
        CHECK((direct.values[i] - phased.values[i]).norm() < 1e-8);
}

TEST_CASE("undersized grids carry a coverage warning") {
    const double m = 1.0;
    const MomentumSection sec =
        make_dirac_section(m, Vec3(0, 0, 0), 0.05, up_qubit(), 8);
    // position spread is ~10/m, so a +-2 grid is far too small
    const SpacetimeField f = synthesize(sec, {0.0}, centered_grid(8, 2.0));
    CHECK(f.coverage < 1.0);
    CHECK(f.grid_warning);
    const SpacetimeField ok = synthesize(
        make_dirac_section(m, Vec3(0, 0, 0), 1.0, up_qubit(), 8), {0.0},
        centered_grid(16, 7.0));
    CHECK(ok.coverage >= 1.0);
    CHECK_FALSE(ok.grid_warning);
}

TEST_CASE("synthesized dirac packets satisfy the dirac equation") {
    const double m = 1.0, sigma_p = m / 20.0;
    const double sigma_x = 1.0 / (2.0 * sigma_p);
    const MomentumSection sec =
        make_dirac_section(m, Vec3(0, 0, 0), sigma_p, up_qubit(), 20);

    const double h1 = sigma_x / 8.0;
    const double dt1 = h1 / 4.0;
    const SpatialGrid g1 = centered_grid(56, 28.0 * h1);
    const SpacetimeField f1 = synthesize(sec, {-dt1, 0.0, dt1}, g1);
    const FieldResiduals r1 = pde_residual(f1);
    CHECK(r1.dirac < 0.05);
    CHECK(r1.dirac > 0.0);

    const double h2 = h1 / 2.0, dt2 = dt1 / 2.0;
    const SpatialGrid g2 = centered_grid(112, 56.0 * h2);
    const SpacetimeField f2 = synthesize(sec, {-dt2, 0.0, dt2}, g2);
    const FieldResiduals r2 = pde_residual(f2);
    const double ratio = r1.dirac / r2.dirac;
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
}

TEST_CASE("synthesized proca packets satisfy the proca equations") {
    const double m = 1.0, sigma_p = m / 20.0;
    const double sigma_x = 1.0 / (2.0 * sigma_p);
    const MomentumSection sec =
        make_proca_section(m, Vec3(0, 0, 0), sigma_p, 0, 20);

    const double h1 = sigma_x / 8.0;
    const double dt1 = h1 / 4.0;
    const SpatialGrid g1 = centered_grid(56, 28.0 * h1);
    const SpacetimeField f1 = synthesize(sec, {-dt1, 0.0, dt1}, g1);
    const FieldResiduals r1 = pde_residual(f1);
    CHECK(r1.divergence < 0.05);
    CHECK(r1.klein_gordon < 0.05);

    const double h2 = h1 / 2.0, dt2 = dt1 / 2.0;
    const SpatialGrid g2 = centered_grid(112, 56.0 * h2);
    const SpacetimeField f2 = synthesize(sec, {-dt2, 0.0, dt2}, g2);
    const FieldResiduals r2 = pde_residual(f2);
    const double div_ratio = r1.divergence / r2.divergence;
    const double kg_ratio = r1.klein_gordon / r2.klein_gordon;
    CHECK(div_ratio > 3.5);
    CHECK(div_ratio < 4.5);
    CHECK(kg_ratio > 3.5);
    CHECK(kg_ratio < 4.5);
}

TEST_CASE("pde residual validates its input") {
    const MomentumSection sec =
        make_dirac_section(1.0, Vec3(0, 0, 0), 1.0, up_qubit(), 8);
    const SpatialGrid g = centered_grid(6, 3.0);
    const SpacetimeField two = synthesize(sec, {0.0, 0.1}, g);
    CHECK_THROWS(pde_residual(two));
    SpacetimeField uneven = synthesize(sec, {0.0, 0.1, 0.3}, g);
    CHECK_THROWS(pde_residual(uneven));
}

TEST_CASE("field csv dump is a rectangular rfc table") {
    const MomentumSection sec =
        make_dirac_section(1.0, Vec3(0, 0, 0), 1.0, up_qubit(), 4);
    const SpacetimeField f = synthesize(sec, {0.0, 0.1}, centered_grid(2, 1.0));
    std::ostringstream os;
    write_field_csv(f, os);
    const std::string text = os.str();
    CHECK(text.find("\r\n") != std::string::npos);

    std::istringstream is(text);
    std::string line;
    std::size_t rows = 0, cols = 0;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::size_t c = std::size_t(
            std::count(line.begin(), line.end(), ',') + 1);
        if (rows == 0) {
            cols = c;
            CHECK(line.find("kind") != std::string::npos);
            CHECK(line.find("re0") != std::string::npos);
        } else {
            CHECK(c == cols);
        }
        ++rows;
    }
    CHECK(rows == 1 + 2 * 2 * 2 * 2);
}

TEST_CASE("field json dump round-trips through a parser") {
    const MomentumSection sec =
        make_proca_section(1.0, Vec3(0, 0, 0), 1.0, 1, 4);
    const SpacetimeField f = synthesize(sec, {0.0}, centered_grid(2, 1.0));
    std::ostringstream os;
    write_field_json(f, os);
    const nlohmann::json j = nlohmann::json::parse(os.str());
    CHECK(j.at("kind").get<std::string>() == "proca");
    CHECK_THAT(j.at("mass").get<double>(), WithinAbs(1.0, 1e-12));
    CHECK(j.at("spin_doubled").get<int>() == 2);
    CHECK(j.at("grid").at("n").get<int>() == 2);
    CHECK(j.at("times").size() == 1);
    CHECK(j.at("values").size() == 8);
    CHECK(j.at("values").at(0).size() == 8);
}
