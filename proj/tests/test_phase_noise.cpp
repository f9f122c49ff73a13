#include <doctest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "thzlink/phase_noise.hpp"

using namespace thz;

TEST_CASE("increment variance formula") {
    const auto p = PhaseNoiseParams::make(1.5e9, 20.005e9);
    // frozen: 4 pi * 1.5 / 20.005
    CHECK(p.sigma_eps2 == doctest::Approx(0.9422422355180585).epsilon(1e-12));
    CHECK_THROWS_AS(PhaseNoiseParams::make(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(PhaseNoiseParams::make(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("beta = 0 freezes the phase") {
    const auto p = PhaseNoiseParams::make(0.0, 20.005e9);
    RandomStream rng(1, 0);
    for (double phi : wiener_trace(64, p, rng)) {
        CHECK(phi == 0.0);
    }
}

TEST_CASE("trace variance grows as n * sigma_eps2") {
    const auto p = PhaseNoiseParams::make(0.5e9, 20.005e9);
    const std::size_t n_traces = 20000;
    const std::size_t len = 101;
    double sum = 0.0;
    double sum2 = 0.0;
    for (std::uint64_t t = 0; t < n_traces; ++t) {
        RandomStream rng(55, t);
        const auto phi = wiener_trace(len, p, rng);
        CHECK(phi[0] == 0.0);
        const double last = phi.back();
        sum += last;
        sum2 += last * last;
    }
    const double mean = sum / n_traces;
    const double var = sum2 / n_traces - mean * mean;
    const double expected = 100.0 * p.sigma_eps2;
    // Var of a variance estimate of Gaussian data: ~ sqrt(2/n) relative
    CHECK(std::abs(var - expected) < 3.0 * expected * std::sqrt(2.0 / n_traces));
}

TEST_CASE("lorentzian line shape") {
    const double beta = 2e8;
    CHECK(lorentzian_psd(0.0, beta) == doctest::Approx(1.0 / (M_PI * beta)));
    CHECK(lorentzian_psd(beta, beta) ==
          doctest::Approx(0.5 * lorentzian_psd(0.0, beta)).epsilon(1e-12));
    CHECK(lorentzian_psd(-beta, beta) == lorentzian_psd(beta, beta));
    CHECK_THROWS_AS(lorentzian_psd(0.0, 0.0), std::invalid_argument);

    // mass over +/- 1e4 beta vs the arctan antiderivative
    const double span = 1e4 * beta;
    const double mass = 2.0 / M_PI * std::atan(span / beta);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-4));
    // trapezoid check near the core where the mass concentrates
    double acc = 0.0;
    const int steps = 200000;
    const double half = 100.0 * beta;
    const double h = 2.0 * half / steps;
    for (int i = 0; i <= steps; ++i) {
        const double f = -half + i * h;
        const double w = (i == 0 || i == steps) ? 0.5 : 1.0;
        acc += w * lorentzian_psd(f, beta) * h;
    }
    CHECK(acc == doctest::Approx(2.0 / M_PI * std::atan(100.0)).epsilon(1e-6));
}

TEST_CASE("analytic ICI coefficient: limits and monotonicity on the validity band") {
    const auto grid = build_grid(testutil::paper_config());
    CHECK(ici_coeff_analytic(0.0, grid) == 0.0);
    // strictly increasing for beta/W_ch in (0, 0.5]; the integral over the
    // adjacent band peaks near 0.7 W_ch and declines past it, so only the
    // Lorentzian-model validity band is asserted
    double prev = 0.0;
    for (int i = 1; i <= 10; ++i) {
        const double beta = 0.5 * grid.W_ch() * i / 10.0;
        const double a = ici_coeff_analytic(beta, grid);
        CHECK(a >= 0.0);
        CHECK(a <= 1.0);
        CHECK(a > prev);
        prev = a;
    }
    // bounded everywhere, including past the peak
    for (double ratio : {0.7, 1.0, 1.5}) {
        const double a = ici_coeff_analytic(ratio * grid.W_ch(), grid);
        CHECK(a >= 0.0);
        CHECK(a <= 1.0);
    }
    CHECK_THROWS_AS(ici_coeff_analytic(1e9, grid, 0), std::invalid_argument);
}

TEST_CASE("IciCoefficients bookkeeping") {
    const auto grid = build_grid(testutil::paper_config());
    const auto c = IciCoefficients::uniform(grid, 0.25);
    CHECK(c.A(2, 3) == 0.25);
    CHECK(c.A(4, 3) == 0.25);
    CHECK(c.A(0, 1) == 0.0);   // index 0 is not a carrier
    CHECK(c.A(6, 5) == 0.0);   // outside the grid
    CHECK(c.A(3, 5) == 0.0);   // not adjacent
    CHECK_THROWS_AS(IciCoefficients::uniform(grid, 1.5), std::invalid_argument);
    // symmetric in |j - k| on a uniform grid
    CHECK(c.A(-3, -2) == c.A(3, 2));
}

namespace {

// small grid keeps the 2^14-sample floor cheap: W = 10 MHz
thz::SystemConfig toy_config() {
    auto cfg = testutil::paper_config();
    cfg.W_sb = 2e6;
    cfg.W_gb = 0.5e6;
    cfg.f_c = 1e9;
    return cfg;
}

}  // namespace

TEST_CASE("empirical ICI input validation") {
    const auto grid = build_grid(toy_config());
    CHECK_THROWS_AS(ici_coeff_empirical(1e5, grid, 10000, 4, 1),
                    std::invalid_argument);  // not a power of two
    CHECK_THROWS_AS(ici_coeff_empirical(1e5, grid, 1 << 13, 4, 1),
                    std::invalid_argument);  // below the floor
    const auto big = build_grid(testutil::paper_config());
    CHECK_THROWS_AS(ici_coeff_empirical(1e9, big, 1 << 14, 4, 1),
                    std::invalid_argument);  // bin width > W_gb / 4
}

TEST_CASE("empirical ICI: zero phase noise leaves only the window floor") {
    const auto grid = build_grid(toy_config());
    const auto e = ici_coeff_empirical(0.0, grid, 1 << 14, 4, 7);
    CHECK(e.adjacent < 1e-4);
    CHECK(e.total_out_of_band < 1e-3);
}

TEST_CASE("empirical ICI agrees with the analytic model in the core band") {
    const auto grid = build_grid(toy_config());
    for (double ratio : {0.05, 0.25}) {
        const double beta = ratio * grid.W_ch();
        const double analytic = ici_coeff_analytic(beta, grid);
        const auto emp = ici_coeff_empirical(beta, grid, 1 << 15, 12, 11);
        CHECK(std::abs(emp.adjacent - analytic) / analytic < 0.05);
    }
}

TEST_CASE("empirical ICI is deterministic in the seed") {
    const auto grid = build_grid(toy_config());
    const auto a = ici_coeff_empirical(2e5, grid, 1 << 14, 4, 3);
    const auto b = ici_coeff_empirical(2e5, grid, 1 << 14, 4, 3);
    CHECK(a.adjacent == b.adjacent);
    CHECK(a.total_out_of_band == b.total_out_of_band);
}
