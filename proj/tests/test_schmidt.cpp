#include <doctest.h>

#include <numbers>
#include <random>

#include "cebeam/coherence.hpp"
#include "cebeam/schmidt.hpp"
#include "test_util.hpp"

using namespace cebeam;

namespace {

const CoeffMatrix kDiag = {{{Complex{1.0}, Complex{0.0}}, {Complex{0.0}, Complex{1.0}}}};

std::vector<VectorBeam> catalog_beams() {
    std::vector<VectorBeam> beams;
    beams.push_back(make_radial_beam());
    beams.push_back(make_pp_beam(3.0));
    beams.push_back(make_fourfold_beam(kDiag, 1.0, 0.5));
    beams.push_back(make_ghz_beam());
    beams.push_back(make_w_beam());
    beams.push_back(make_noon_beam(4, std::numbers::pi / 3));
    return beams;
}

}  // namespace

TEST_CASE("spatial_gram closed forms") {
    const VectorBeam radial = make_radial_beam();
    const FieldGrid g64 = make_grid(64, 64, 8.0, 0.0);
    const Eigen::MatrixXcd radial_gram = spatial_gram(radial, g64);
    CHECK((radial_gram - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);

    const Eigen::MatrixXcd pp_gram = spatial_gram(make_pp_beam(1.0), g64);
    CHECK(pp_gram(0, 0) == Complex{1.0});
    CHECK(pp_gram(1, 1) == Complex{1.0});
    CHECK(std::abs(pp_gram(0, 1) - std::exp(-2.0)) < 1e-15);
    CHECK(std::abs(pp_gram(1, 0) - std::exp(-2.0)) < 1e-15);

    CoeffMatrix all_ones = {{{Complex{1.0}, Complex{1.0}}, {Complex{1.0}, Complex{1.0}}}};
    const Eigen::MatrixXcd four_gram = spatial_gram(make_fourfold_beam(all_ones, 1.0, 0.5), g64);
    CHECK((four_gram - 0.25 * Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("analytic and quadrature Grams agree for smooth beams") {
    for (const VectorBeam& beam :
         {make_radial_beam(), make_pp_beam(1.0), make_ghz_beam(), make_w_beam()}) {
        const FieldGrid g = default_grid(beam, 256, 256);
        const Eigen::MatrixXcd exact = spatial_gram(beam, g);
        const Eigen::MatrixXcd quad = spatial_gram_quadrature(beam, g);
        CHECK((exact - quad).cwiseAbs().maxCoeff() < 1e-7);
    }
}

TEST_CASE("schmidt_decompose on the printed beams") {
    const FieldGrid g = make_grid(256, 256, 8.0, 0.0);

    const SchmidtResult radial = schmidt_decompose(make_radial_beam(), g);
    CHECK(radial.lambda1 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(radial.lambda2 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(radial.k == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(radial.residual < 1e-9);

    CoeffMatrix single{};
    single[0][0] = 1.0;
    const SchmidtResult one_term = schmidt_decompose(make_ps_beam(single), g);
    CHECK(one_term.lambda2 < 1e-14);
    CHECK(one_term.k == doctest::Approx(1.0).epsilon(1e-12));

    const VectorBeam pp = make_pp_beam(1.0);
    const SchmidtResult near = schmidt_decompose(pp, default_grid(pp, 512, 512));
    CHECK(near.lambda1 == doctest::Approx(1.0 + std::exp(-2.0)).epsilon(1e-9));
    CHECK(near.lambda2 == doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-9));
}

TEST_CASE("SchmidtResult invariants across the catalog") {
    for (const VectorBeam& beam : catalog_beams()) {
        const FieldGrid g = default_grid(beam, 256, 256);
        const SchmidtResult r = schmidt_decompose(beam, g);

        CHECK(r.lambda1 >= 0.0);
        CHECK(r.lambda2 >= 0.0);
        // ordering holds up to the degeneracy tie-break width
        CHECK(r.lambda1 >= r.lambda2 - 1e-9 * (r.lambda1 + r.lambda2));
        CHECK(r.k >= 1.0 - 1e-12);
        CHECK(r.k <= 2.0 + 1e-12);

        // lambda1 + lambda2 equals the quadrature total intensity
        CHECK(r.lambda1 + r.lambda2 ==
              doctest::Approx(total_intensity(beam, g)).epsilon(1e-8));

        // orthonormal polarization pair
        CHECK(std::abs(pol_inner(r.pol_modes[0], r.pol_modes[1])) < 1e-12);
        CHECK(std::abs(pol_inner(r.pol_modes[0], r.pol_modes[0]) - 1.0) < 1e-12);
        CHECK(std::abs(pol_inner(r.pol_modes[1], r.pol_modes[1]) - 1.0) < 1e-12);

        // orthogonal spatial pair; normalized whenever lambda2 > 0
        CHECK(std::abs(inner_product_sampled(r.spatial_modes[0], r.spatial_modes[1])) < 1e-8);
        CHECK(l2_norm(r.spatial_modes[0]) == doctest::Approx(1.0).epsilon(1e-8));
        if (r.lambda2 > 1e-12) {
            CHECK(l2_norm(r.spatial_modes[1]) == doctest::Approx(1.0).epsilon(1e-8));
        }

        CHECK(r.residual < 1e-9);
    }
}

TEST_CASE("schmidt_number formula") {
    CHECK(schmidt_number(0.7, 0.7) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(schmidt_number(1.3, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(schmidt_number(0.75, 0.25) == doctest::Approx(1.6).epsilon(1e-15));
    // scale invariance of the printed formula
    CHECK(schmidt_number(7.5, 2.5) == doctest::Approx(1.6).epsilon(1e-15));
    CHECK_THROWS_AS(schmidt_number(0.0, 0.0), DegenerateBeamError);
    CHECK_THROWS_AS(schmidt_number(-1.0, 0.5), InvalidParameterError);
}

TEST_CASE("k_of_separation closed form and pipeline agreement") {
    CHECK(k_of_separation(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(k_of_separation(50.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(k_of_separation(1.0) == doctest::Approx(2.0 / (1.0 + std::exp(-4.0))).epsilon(1e-15));
    CHECK(k_of_separation(1.0) == doctest::Approx(1.964028).epsilon(1e-6));

    for (double a : {0.25, 0.5, 1.0, 2.0}) {
        const VectorBeam pp = make_pp_beam(a);
        const SchmidtResult r = schmidt_decompose(pp, default_grid(pp, 512, 512));
        CHECK(r.k == doctest::Approx(k_of_separation(a)).epsilon(1e-6));
    }
}

TEST_CASE("K is invariant under beam scaling") {
    const FieldGrid g = make_grid(128, 128, 8.0, 0.0);
    for (const VectorBeam& beam : {make_radial_beam(), make_pp_beam(1.0), make_w_beam()}) {
        const double reference = schmidt_decompose(beam, g).k;
        for (Complex c : {Complex{0.1, 0.0}, Complex{7.0, 0.0},
                          std::polar(1.0, std::numbers::pi / 5)}) {
            CHECK(std::abs(schmidt_decompose(scale_beam(beam, c), g).k - reference) < 1e-12);
        }
    }
}

TEST_CASE("K is invariant along z for Hermite-Gauss beams") {
    for (const VectorBeam& beam : {make_radial_beam(), make_ghz_beam(), make_w_beam(),
                                   make_noon_beam(4, std::numbers::pi / 3)}) {
        const double k0 = schmidt_decompose(beam, default_grid(beam, 256, 256, 0.0)).k;
        const double k2 = schmidt_decompose(beam, default_grid(beam, 256, 256, 2.0)).k;
        CHECK(std::abs(k0 - k2) < 1e-6);
    }
}

TEST_CASE("oracle equivalence over random coefficient matrices") {
    std::mt19937 rng(4242);
    const FieldGrid g = make_grid(128, 128, 8.0, 0.0);
    for (int trial = 0; trial < 200; ++trial) {
        const CoeffMatrix m = test::random_coeffs(rng);
        bool all_zero = true;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (m[i][j] != Complex{0.0}) all_zero = false;
        if (all_zero) continue;

        const SchmidtResult r = schmidt_decompose(make_ps_beam(m), g);
        const auto [mu1, mu2] = test::mmdagger_eigenvalues(m);
        CHECK(std::abs(r.lambda1 - mu1) < 1e-10);
        CHECK(std::abs(r.lambda2 - mu2) < 1e-10);
    }
}

TEST_CASE("K stays within [1, 2] for random small beams") {
    std::mt19937 rng(515);
    std::uniform_int_distribution<int> term_count(1, 4);
    std::uniform_int_distribution<int> mode_pick(0, 5);
    std::uniform_real_distribution<double> shift(-1.5, 1.5);
    const FieldGrid g = make_grid(96, 96, 12.0, 0.0);
    for (int trial = 0; trial < 50; ++trial) {
        VectorBeam beam;
        const int t = term_count(rng);
        for (int term = 0; term < t; ++term) {
            ScalarMode mode = GaussianFundamental{1.0};
            switch (mode_pick(rng)) {
                case 0: mode = HermiteGauss2D{0, 0, 1.0}; break;
                case 1: mode = HermiteGauss2D{0, 1, 1.0}; break;
                case 2: mode = HermiteGauss2D{1, 0, 1.0}; break;
                case 3: mode = HermiteGauss2D{1, 1, 1.0}; break;
                case 4: mode = shifted(GaussianFundamental{1.0}, shift(rng), shift(rng)); break;
                case 5: mode = GaussianFundamental{1.0}; break;
            }
            beam.terms.push_back({test::random_complex(rng),
                                  JonesVector{test::random_complex(rng), test::random_complex(rng)},
                                  mode});
        }
        const SchmidtResult r = schmidt_decompose(beam, g);
        CHECK(r.k >= 1.0 - 1e-9);
        CHECK(r.k <= 2.0 + 1e-9);
    }
}

TEST_CASE("schmidt_from_gram error paths") {
    Eigen::MatrixXcd coeffs(2, 2);
    coeffs << 1.0, 0.0, 0.0, 1.0;

    Eigen::MatrixXcd indefinite(2, 2);
    indefinite << 1.0, 0.0, 0.0, -0.001;
    CHECK_THROWS_AS(schmidt_from_gram(coeffs, indefinite), NumericalFailureError);

    Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(2, 2);
    CHECK_THROWS_AS(schmidt_from_gram(coeffs, zero), DegenerateBeamError);

    Eigen::MatrixXcd wrong_shape(2, 3);
    wrong_shape.setZero();
    CHECK_THROWS_AS(schmidt_from_gram(coeffs, wrong_shape), InvalidParameterError);
}

TEST_CASE("rank-deficient Gram is truncated, not fatal") {
    // two identical modes: Gram [[1, 1], [1, 1]]
    const VectorBeam merged = make_pp_beam(0.0);
    const FieldGrid g = make_grid(128, 128, 8.0, 0.0);
    const SchmidtResult r = schmidt_decompose(merged, g);
    CHECK(r.lambda1 == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(r.lambda2 < 1e-12);
    CHECK(r.residual < 1e-9);
}
