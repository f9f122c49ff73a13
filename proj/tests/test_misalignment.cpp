#include <doctest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "thzlink/misalignment.hpp"

using namespace thz;

TEST_CASE("derive_beam reference point") {
    // frozen from an independent high-precision evaluation of the erf forms
    const auto g = derive_beam(0.01, 0.05, 0.01);
    CHECK(g.v == doctest::Approx(0.2506628274631).epsilon(1e-9));
    CHECK(g.A0 == doctest::Approx(0.0767450004248).epsilon(1e-9));
    CHECK(g.w_eq == doctest::Approx(0.0510627022845).epsilon(1e-9));
}

TEST_CASE("derive_beam limits") {
    CHECK(derive_beam(10.0, 0.01, 0.0).A0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(derive_beam(1e-6, 0.05, 0.0).A0 < 1e-8);
    CHECK_THROWS_AS(derive_beam(0.0, 0.05, 0.01), std::invalid_argument);
    CHECK_THROWS_AS(derive_beam(0.01, 0.0, 0.01), std::invalid_argument);
    CHECK_THROWS_AS(derive_beam(0.01, 0.05, -1.0), std::invalid_argument);
}

TEST_CASE("sigma_s = 0 gives the infinite-gamma sentinel and constant samples") {
    const auto g = derive_beam(0.05, 0.05, 0.0);
    CHECK(std::isinf(g.gamma_ratio));
    RandomStream rng(7, 0);
    for (int i = 0; i < 32; ++i) {
        CHECK(sample_hp(g, rng) == g.A0);
    }
}

namespace {

// scale sigma_s so that gamma^2 takes a prescribed value for this beam
BeamGeometry beam_with_gamma2(double g2) {
    const auto base = derive_beam(0.05, 0.05, 0.01);
    const double sigma = base.w_eq / (2.0 * std::sqrt(g2));
    return derive_beam(0.05, 0.05, sigma);
}

}  // namespace

TEST_CASE("pdf normalization by adaptive quadrature over gamma^2 in [0.1, 100]") {
    boost::math::quadrature::tanh_sinh<double> integrator;
    for (double g2 : {0.1, 0.5, 1.0, 4.0, 19.6, 100.0}) {
        const auto geom = beam_with_gamma2(g2);
        CHECK(geom.gamma2() == doctest::Approx(g2).epsilon(1e-9));
        const double mass =
            integrator.integrate([&](double x) { return pdf_hp(x, geom); }, 0.0,
                                 geom.A0);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("mean of h_p: quadrature matches the analytic moment") {
    boost::math::quadrature::tanh_sinh<double> integrator;
    const auto geom = beam_with_gamma2(3.7);
    const double mean_quad =
        integrator.integrate([&](double x) { return x * pdf_hp(x, geom); }, 0.0,
                             geom.A0);
    CHECK(mean_quad == doctest::Approx(mean_hp(geom)).epsilon(1e-8));
}

TEST_CASE("gamma^2 = 1 gives the uniform density 1/A0") {
    const auto geom = beam_with_gamma2(1.0);
    for (double x : {0.01, 0.02, 0.05}) {
        if (x < geom.A0) {
            CHECK(pdf_hp(x, geom) == doctest::Approx(1.0 / geom.A0).epsilon(1e-9));
        }
    }
}

TEST_CASE("pdf support and argument checks") {
    const auto geom = derive_beam(0.05, 0.05, 0.01);
    CHECK(pdf_hp(geom.A0 * 1.01, geom) == 0.0);
    CHECK_THROWS_AS(pdf_hp(-0.1, geom), std::invalid_argument);
    const auto frozen = derive_beam(0.05, 0.05, 0.0);
    CHECK_THROWS_AS(pdf_hp(0.01, frozen), std::invalid_argument);
}

TEST_CASE("sampler matches the analytic CDF (KS over 1e5 draws)") {
    for (double sigma : {0.005, 0.01, 0.03}) {
        const auto geom = derive_beam(0.05, 0.05, sigma);
        RandomStream rng(101, static_cast<std::uint64_t>(sigma * 1e6));
        std::vector<double> samples(100000);
        for (auto& s : samples) {
            s = sample_hp(geom, rng);
            CHECK(s >= 0.0);
            CHECK(s <= geom.A0);
        }
        const double ks = testutil::ks_statistic(
            samples, [&](double x) { return cdf_hp(x, geom); });
        CHECK(ks < 0.01);
    }
}

TEST_CASE("sample mean over 1e6 draws hits the analytic moment within 3 SE") {
    const auto geom = derive_beam(0.05, 0.05, 0.01);
    RandomStream rng(2024, 0);
    const std::size_t n = 1000000;
    double sum = 0.0;
    double sum2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = sample_hp(geom, rng);
        sum += s;
        sum2 += s * s;
    }
    const double mean = sum / static_cast<double>(n);
    const double var = sum2 / static_cast<double>(n) - mean * mean;
    const double se = std::sqrt(var / static_cast<double>(n));
    CHECK(std::abs(mean - mean_hp(geom)) < 3.0 * se);
}

TEST_CASE("larger jitter is stochastically worse, draw by draw") {
    const auto lo = derive_beam(0.05, 0.05, 0.01);
    const auto hi = derive_beam(0.05, 0.05, 0.03);
    // paired streams reuse the identical uniform, so domination is exact
    for (std::uint64_t t = 0; t < 2000; ++t) {
        RandomStream r1(5, t);
        RandomStream r2(5, t);
        CHECK(sample_hp(hi, r2) <= sample_hp(lo, r1));
    }
}
