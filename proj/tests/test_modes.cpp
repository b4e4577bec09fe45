#include <doctest.h>

#include <numbers>
#include <random>

#include "cebeam/modes.hpp"
#include "test_util.hpp"

using namespace cebeam;

TEST_CASE("fundamental Gaussian closed form") {
    const GaussianFundamental g{1.0};

    // on-axis magnitude at the waist
    CHECK(std::abs(eval_gaussian(g, 0.0, 0.0, 0.0)) ==
          doctest::Approx(std::sqrt(2.0 / std::numbers::pi)).epsilon(1e-12));

    // beam expansion: one Rayleigh range drops the axis amplitude by sqrt(2)
    const double ratio =
        std::abs(eval_gaussian(g, 0.0, 0.0, g.rayleigh())) / std::abs(eval_gaussian(g, 0.0, 0.0, 0.0));
    CHECK(ratio == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-12));

    // 1/e^2 intensity at one waist off axis
    const double on_axis = std::norm(eval_gaussian(g, 0.0, 0.0, 0.0));
    const double at_waist = std::norm(eval_gaussian(g, 1.0, 0.0, 0.0));
    CHECK(at_waist == doctest::Approx(std::exp(-2.0) * on_axis).epsilon(1e-12));

    CHECK_THROWS_AS(GaussianFundamental{-1.0}, InvalidParameterError);
}

TEST_CASE("1D Hermite-Gauss factors") {
    // odd mode vanishes on axis
    for (double z : {0.0, 0.7, -2.0}) {
        CHECK(std::abs(eval_hg1d(HermiteGauss1D{1, 1.0}, 0.0, z)) == 0.0);
    }

    // unit norm for n = 0, 1, 2 at two planes (1D quadrature oracle)
    for (int n : {0, 1, 2}) {
        for (double z : {0.0, 1.3}) {
            const HermiteGauss1D u{n, 1.0};
            const double norm = test::trapezoid_1d(
                [&](double x) { return std::norm(eval_hg1d(u, x, z)); }, -10.0, 10.0, 4001);
            CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
        }
    }

    // u0(x) u0(y) reproduces the closed-form Gaussian, same phase included
    const GaussianFundamental g{1.0};
    const HermiteGauss1D u0{0, 1.0};
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coord(-2.0, 2.0), depth(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double x = coord(rng), y = coord(rng), z = depth(rng);
        const Complex product = eval_hg1d(u0, x, z) * eval_hg1d(u0, y, z);
        const Complex direct = eval_gaussian(g, x, y, z);
        const Complex ratio = product / direct;
        CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-12);
        CHECK(std::abs(ratio - 1.0) < 1e-12);
    }
}

TEST_CASE("u_n parity is (-1)^n") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> coord(-3.0, 3.0), depth(-2.0, 2.0);
    for (int n = 0; n <= 4; ++n) {
        const HermiteGauss1D u{n, 1.0};
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        for (int trial = 0; trial < 100; ++trial) {
            const double x = coord(rng), z = depth(rng);
            CHECK(std::abs(eval_hg1d(u, -x, z) - sign * eval_hg1d(u, x, z)) < 1e-12);
        }
    }
}

TEST_CASE("2D Hermite-Gauss modes") {
    const HermiteGauss2D u11{1, 1, 1.0};
    for (double x : {-1.3, 0.4, 2.0}) {
        CHECK(std::abs(eval_hg2d(u11, x, 0.0, 0.0)) == 0.0);  // u1(0) = 0 factor
    }

    const HermiteGauss2D u10{1, 0, 1.0};
    CHECK(eval_hg2d(u10, -0.8, 0.3, 0.0) == -eval_hg2d(u10, 0.8, 0.3, 0.0));

    // factorization, pointwise
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double x = coord(rng), y = coord(rng), z = 0.5;
        const Complex lhs = eval_hg2d(HermiteGauss2D{2, 1, 1.0}, x, y, z);
        const Complex rhs =
            eval_hg1d(HermiteGauss1D{2, 1.0}, x, z) * eval_hg1d(HermiteGauss1D{1, 1.0}, y, z);
        CHECK(std::abs(lhs - rhs) < 1e-14);
    }
}

TEST_CASE("orthonormal Gram of the first six TEM modes") {
    const HermiteGauss2D family[6] = {{0, 0, 1.0}, {0, 1, 1.0}, {1, 0, 1.0},
                                      {1, 1, 1.0}, {2, 0, 1.0}, {0, 2, 1.0}};
    for (double z : {0.0, 1.5}) {
        const FieldGrid g = make_grid(256, 256, 8.0, z);
        SampledScalarField fields[6];
        for (int i = 0; i < 6; ++i) fields[i] = sample_mode(family[i], g);
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) {
                const Complex entry = inner_product_sampled(fields[i], fields[j]);
                const double expected = (i == j) ? 1.0 : 0.0;
                CHECK(std::abs(entry - expected) < 1e-7);
            }
        }
    }
}

TEST_CASE("rect modes: values, boundaries, disjoint supports") {
    const RectMode upper_left{0, 0, 1.0, 0.5};
    CHECK(eval_rect(upper_left, -1.0, 1.0, 0.0) == 1.0);    // quadrant center
    CHECK(eval_rect(upper_left, -0.75, 1.0, 0.0) == 0.5);   // x exactly on a spot edge
    CHECK(eval_rect(upper_left, -0.75, 0.75, 0.0) == 0.25); // both coordinates on edges
    CHECK(eval_rect(upper_left, 1.0, -1.0, 0.0) == 0.0);    // opposite quadrant

    const RectMode lower_right{1, 1, 1.0, 0.5};
    const FieldGrid g = make_grid(128, 128, 2.0, 0.0);
    const SampledScalarField f1 = sample_mode(upper_left, g);
    const SampledScalarField f2 = sample_mode(lower_right, g);
    for (std::size_t k = 0; k < f1.values.size(); ++k) {
        CHECK(std::abs(f1.values[k] * f2.values[k]) == 0.0);
    }

    CHECK_THROWS_AS((RectMode{0, 0, 1.0, 2.5}), InvalidGeometryError);
    CHECK_NOTHROW((RectMode{0, 0, 1.0, 2.5, true}));
    CHECK_THROWS_AS((RectMode{0, 2, 1.0, 0.5}), InvalidParameterError);
}

TEST_CASE("rect support confined to its quadrant") {
    const FieldGrid g = make_grid(101, 101, 2.0, 0.0);
    const SampledScalarField f = sample_mode(RectMode{0, 0, 1.0, 0.5}, g);
    for (int iy = 0; iy < g.ny; ++iy) {
        for (int ix = 0; ix < g.nx; ++ix) {
            if (std::abs(f.at(ix, iy)) > 0.0) {
                CHECK(g.x(ix) < 0.0);
                CHECK(g.y(iy) > 0.0);
            }
        }
    }
}

TEST_CASE("analytic Gaussian overlap") {
    CHECK(overlap_gaussian_analytic(0.0, 1.0) == 1.0);
    CHECK(overlap_gaussian_analytic(1.0, 1.0) == doctest::Approx(0.1353353).epsilon(1e-6));
    CHECK(overlap_gaussian_analytic(2.0, 1.0) == doctest::Approx(3.3546e-4).epsilon(1e-4));
    CHECK(overlap_gaussian_analytic(1.0, 2.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
}

TEST_CASE("shift consistency: sampled overlap matches the closed form") {
    const GaussianFundamental base{1.0};
    for (double a : {0.0, 0.25, 0.5, 1.0, 2.0}) {
        const FieldGrid g = make_grid(512, 512, 8.0, 0.0);
        const Complex quad = inner_product_sampled(sample_mode(shifted(base, 0.0, +a), g),
                                                   sample_mode(shifted(base, 0.0, -a), g));
        CHECK(std::abs(quad - overlap_gaussian_analytic(a, 1.0)) < 1e-6);
    }
}

TEST_CASE("sample_mode: peaks, realness and shift identity") {
    const FieldGrid g = make_grid(256, 256, 4.0, 0.0);
    const SampledScalarField gauss = sample_mode(GaussianFundamental{1.0}, g);
    std::size_t argmax = 0;
    for (std::size_t k = 0; k < gauss.values.size(); ++k) {
        if (std::abs(gauss.values[k]) > std::abs(gauss.values[argmax])) argmax = k;
    }
    const int iy = static_cast<int>(argmax) / g.nx;
    const int ix = static_cast<int>(argmax) % g.nx;
    // even sample count: the four nodes nearest the origin share the peak
    CHECK(std::abs(g.x(ix)) <= 0.5 * g.dx() + 1e-12);
    CHECK(std::abs(g.y(iy)) <= 0.5 * g.dy() + 1e-12);

    // HG10 at the waist is real once the global phase is removed
    const SampledScalarField hg = sample_mode(HermiteGauss2D{1, 0, 1.0}, g);
    double peak = 0.0;
    Complex at_peak = 0.0;
    for (const Complex& v : hg.values) {
        if (std::abs(v) > peak) {
            peak = std::abs(v);
            at_peak = v;
        }
    }
    const Complex phase = at_peak / std::abs(at_peak);
    for (const Complex& v : hg.values) {
        CHECK(std::abs((v / phase).imag()) < 1e-12 * peak + 1e-15);
    }

    // shifted evaluation agrees with the base mode at displaced coordinates
    const ScalarMode moved = shifted(HermiteGauss2D{2, 1, 1.0}, 0.4, -0.9);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (int trial = 0; trial < 30; ++trial) {
        const double x = coord(rng), y = coord(rng);
        CHECK(eval_mode(moved, x, y, 0.3) ==
              eval_hg2d(HermiteGauss2D{2, 1, 1.0}, x - 0.4, y + 0.9, 0.3));
    }
}

TEST_CASE("analytic overlaps by structure") {
    const GaussianFundamental g{1.0};
    CHECK(analytic_overlap(g, HermiteGauss2D{0, 0, 1.0}) == Complex{1.0});
    CHECK(analytic_overlap(g, HermiteGauss2D{1, 1, 1.0}) == Complex{0.0});
    CHECK(analytic_overlap(HermiteGauss2D{2, 0, 1.0}, HermiteGauss2D{2, 0, 1.0}) == Complex{1.0});
    CHECK(!analytic_overlap(g, GaussianFundamental{2.0}).has_value());  // mixed waists
    CHECK(!analytic_overlap(shifted(HermiteGauss2D{1, 0, 1.0}, 0.5, 0.0), g).has_value());

    const ScalarMode up = shifted(g, 0.0, 1.5);
    const ScalarMode down = shifted(g, 0.0, -1.5);
    CHECK(analytic_overlap(up, down).value().real() ==
          doctest::Approx(overlap_gaussian_analytic(1.5, 1.0)).epsilon(1e-14));

    const RectMode r00{0, 0, 1.0, 0.5};
    const RectMode r01{0, 1, 1.0, 0.5};
    CHECK(analytic_overlap(r00, r00) == Complex{0.25});
    CHECK(analytic_overlap(r00, r01) == Complex{0.0});

    // overlapping rects: intersection area
    const RectMode wide1{0, 0, 1.0, 2.5, true};
    const RectMode wide2{0, 1, 1.0, 2.5, true};
    // x-centers at -1 and +1, width 2.5 -> 1D x-overlap 0.5; same y interval
    CHECK(analytic_overlap(wide1, wide2) == Complex{0.5 * 2.5});
}

TEST_CASE("mode length scales feed default grids") {
    CHECK(mode_length_scale(GaussianFundamental{1.0}) == 1.0);
    CHECK(mode_length_scale(RectMode{0, 0, 1.0, 0.5}) == 1.25);
    CHECK(mode_length_scale(shifted(GaussianFundamental{1.0}, 0.0, 3.0)) == 4.0);
}
