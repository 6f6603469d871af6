#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sobwave/catalog.hpp"
#include "sobwave/window.hpp"

using namespace sobwave;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TEST_CASE("grid frequency bookkeeping") {
    GridSpec g{1, 32};
    CHECK(g.freq_of_index(0) == 0);
    CHECK(g.freq_of_index(15) == 15);
    CHECK(g.freq_of_index(16) == -16);
    CHECK(g.freq_of_index(31) == -1);
    for (int k = -16; k <= 15; ++k) CHECK(g.freq_of_index(g.index_of_freq(k)) == k);

    GridSpec bad{1, 48};
    CHECK_THROWS_AS(bad.validate(), SobwaveError);
}

TEST_CASE("shell index is exact on powers of two") {
    CHECK(shell_of_norm_sq(1) == 0);
    CHECK(shell_of_norm_sq(3) == 0);
    CHECK(shell_of_norm_sq(4) == 1);
    CHECK(shell_of_norm_sq(63) == 2);
    CHECK(shell_of_norm_sq(64) == 3);
    CHECK(shell_of_norm_sq(255) == 3);
    CHECK(shell_of_norm_sq(256) == 4);
}

TEST_CASE("delta transform is a unit-modulus phase ramp") {
    GridSpec g{1, 256};
    DistributionSpec spec;
    spec.kind = DistributionKind::Delta;
    spec.center = {0.5, 0.5};
    SpectralDistribution u = synthesize(spec, g);
    for (int k = -128; k < 128; ++k) {
        const cplx want = std::polar(1.0, -kTwoPi * k * 0.5);
        CHECK(std::abs(u.coeffs()[g.index_of_freq(k)] - want) < 1e-12);
        CHECK(std::abs(std::abs(u.coeffs()[g.index_of_freq(k)]) - 1.0) < 1e-12);
    }
    CHECK(u.hermitian_defect() < 1e-12);
}

TEST_CASE("one-sided power law vanishes on k <= 0 and has |u^(1)| = 2^{-3/4}") {
    GridSpec g{1, 256};
    DistributionSpec spec;
    spec.kind = DistributionKind::OneSidedPower;
    spec.exponent = 0.75;
    spec.center = {0.5625, 0.5};
    SpectralDistribution u = synthesize(spec, g);
    for (int k = -128; k <= 0; ++k) CHECK(u.coeffs()[g.index_of_freq(k)] == cplx(0.0, 0.0));
    CHECK(std::abs(u.coeffs()[g.index_of_freq(1)]) == doctest::Approx(std::pow(2.0, -0.75)));
}

TEST_CASE("windowed heaviside decays like 1/|k|") {
    // Oracle: a dense-grid discrete transform of the sampled windowed jump,
    // synthesized along an independent path (16x oversampled real-space
    // samples), against the exact-coefficient implementation.
    GridSpec g{1, 512};
    DistributionSpec spec;
    spec.kind = DistributionKind::Heaviside;
    spec.center = {0.5, 0.5};
    SpectralDistribution u = synthesize(spec, g);

    const int oversample = 16;
    GridSpec fine{1, 512 * oversample};
    WindowFunction window = central_synthesis_window(fine);
    std::vector<cplx> samples(fine.total());
    for (int i = 0; i < fine.size; ++i) {
        const double x = double(i) / fine.size;
        samples[i] = window.samples()[i] * (x >= 0.5 ? 1.0 : 0.0);
    }
    std::vector<cplx> oracle = fft_forward(fine, samples);

    double worst_law = 0.0, worst_oracle = 0.0;
    const double scale = std::abs(u.coeffs()[g.index_of_freq(64)]) * 64.0;
    for (int k = 32; k <= 127; ++k) {
        const double impl = std::abs(u.coeffs()[g.index_of_freq(k)]);
        worst_law = std::max(worst_law, std::abs(impl * k / scale - 1.0));
        const double dense = std::abs(oracle[fine.index_of_freq(k)]);
        worst_oracle = std::max(worst_oracle, std::abs(impl - dense) / dense);
    }
    CHECK(worst_law < 0.10);     // |u^(k)| |k| levels off
    CHECK(worst_oracle < 0.02);  // two synthesis routes agree
}

TEST_CASE("window_multiply by the flat window is the identity") {
    GridSpec g{1, 128};
    SpectralDistribution u = synthesize_entry(catalog_entry("plaw_p125"), g);
    SpectralDistribution wu = window_multiply(u, WindowFunction::flat(g));
    CHECK(relative_l2_error(wu.coeffs(), u.coeffs()) < 1e-13);
}

TEST_CASE("window_multiply picks the window value under a point mass") {
    GridSpec g{1, 512};
    SpectralDistribution delta = synthesize_entry(catalog_entry("delta"), g);
    Box b;
    b.dim = 1;
    b.lo[0] = 0.4;
    b.hi[0] = 0.8;
    WindowFunction w = WindowFunction::bump(g, b);
    SpectralDistribution wd = window_multiply(delta, w);
    const double w0 = w.value_at({0.5625, 0.0});
    // Inner band only: edge coefficients lose band-truncated mass.
    for (int k = -100; k <= 100; ++k) {
        const cplx want = w0 * std::polar(1.0, -kTwoPi * k * 0.5625);
        CHECK(std::abs(wd.coeffs()[g.index_of_freq(k)] - want) < 1e-6);
    }
}

TEST_CASE("dealiased window product matches the fine-grid real-space oracle") {
    // Oracle: pointwise product evaluated on a 2x finer grid, transformed,
    // truncated.
    GridSpec g{1, 1024};
    SpectralDistribution u = synthesize_entry(catalog_entry("gauss"), g);
    Box b;
    b.dim = 1;
    b.lo[0] = 0.3;
    b.hi[0] = 0.75;
    WindowFunction w = WindowFunction::bump(g, b);
    SpectralDistribution got = window_multiply(u, w);

    GridSpec fine{1, 2048};
    SpectralDistribution u_fine = synthesize_entry(catalog_entry("gauss"), fine);
    WindowFunction w_fine = WindowFunction::bump(fine, b);
    std::vector<cplx> prod = u_fine.samples();
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] *= w_fine.samples()[i];
    std::vector<cplx> fine_coeffs = fft_forward(fine, prod);
    std::vector<cplx> want(g.total());
    for (int k = -512; k < 512; ++k)
        want[g.index_of_freq(k)] = fine_coeffs[fine.index_of_freq(k)];
    // the retained band folds the +N/2 fine mode onto -N/2
    want[g.index_of_freq(-512)] += fine_coeffs[fine.index_of_freq(512)];
    CHECK(relative_l2_error(got.coeffs(), want) < 1e-10);
}

TEST_CASE("window products associate on band-limited data") {
    GridSpec g{1, 512};
    SpectralDistribution u = synthesize_entry(catalog_entry("smooth_rand"), g);
    Box b1;
    b1.dim = 1;
    b1.lo[0] = 0.3;
    b1.hi[0] = 0.8;
    Box b2;
    b2.dim = 1;
    b2.lo[0] = 0.35;
    b2.hi[0] = 0.9;
    WindowFunction w1 = WindowFunction::bump(g, b1);
    WindowFunction w2 = WindowFunction::bump(g, b2);
    SpectralDistribution lhs = window_multiply(window_multiply(u, w1), w2);
    SpectralDistribution rhs = window_multiply(u, w1.multiply(w2));
    CHECK(relative_l2_error(lhs.coeffs(), rhs.coeffs()) < 1e-10);
}

TEST_CASE("tensor product coefficients factor exactly") {
    GridSpec g{1, 64};
    SpectralDistribution u = synthesize_entry(catalog_entry("delta"), g);
    SpectralDistribution v = synthesize_entry(catalog_entry("heaviside"), g);
    SpectralDistribution uv = tensor_product(u, v);
    REQUIRE(uv.grid().dim == 2);
    for (int k = -32; k < 32; ++k)
        for (int l = -32; l < 32; ++l) {
            const cplx want =
                u.coeffs()[g.index_of_freq(k)] * v.coeffs()[g.index_of_freq(l)];
            CHECK(uv.coeff_at({k, l, 0, 0}) == want);
        }
}

TEST_CASE("tensor of two point masses has unit-modulus coefficients") {
    GridSpec g{1, 64};
    SpectralDistribution d = synthesize_entry(catalog_entry("delta"), g);
    SpectralDistribution dd = tensor_product(d, d);
    for (const cplx& c : dd.coeffs()) CHECK(std::abs(c) == doctest::Approx(1.0));
}

TEST_CASE("tensor with the constant distribution embeds on the axis") {
    GridSpec g{1, 64};
    SpectralDistribution u = synthesize_entry(catalog_entry("heaviside"), g);
    DistributionSpec one;
    one.kind = DistributionKind::CustomSpectral;
    one.center = {0.5, 0.5};
    one.law = [](const GridSpec&, const std::array<int, 4>& k) {
        return k[0] == 0 ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    };
    SpectralDistribution v = synthesize(one, g);
    SpectralDistribution uv = tensor_product(u, v);
    for (int k = -32; k < 32; ++k)
        for (int l = -32; l < 32; ++l) {
            const cplx want = l == 0 ? u.coeffs()[g.index_of_freq(k)] : cplx(0.0, 0.0);
            CHECK(uv.coeff_at({k, l, 0, 0}) == want);
        }
}

TEST_CASE("tensor q0 seminorm factorizes (Parseval on the lattice)") {
    GridSpec g{1, 128};
    SpectralDistribution u = synthesize_entry(catalog_entry("plaw_p125"), g);
    SpectralDistribution v = synthesize_entry(catalog_entry("gauss"), g);
    SpectralDistribution uv = tensor_product(u, v);
    const double prod = u.l2_norm() * v.l2_norm();
    CHECK(std::abs(uv.l2_norm() - prod) <= 1e-12 * prod);
}

TEST_CASE("tensor product is exactly bilinear") {
    GridSpec g{1, 64};
    SpectralDistribution u = synthesize_entry(catalog_entry("delta"), g);
    SpectralDistribution u2 = synthesize_entry(catalog_entry("gauss"), g);
    SpectralDistribution v = synthesize_entry(catalog_entry("heaviside"), g);
    SpectralDistribution lhs = tensor_product(linear_combine(2.0, u, -3.0, u2), v);
    SpectralDistribution t1 = tensor_product(u, v);
    SpectralDistribution t2 = tensor_product(u2, v);
    for (std::size_t i = 0; i < lhs.coeffs().size(); ++i) {
        const cplx want = 2.0 * t1.coeffs()[i] - 3.0 * t2.coeffs()[i];
        CHECK(std::abs(lhs.coeffs()[i] - want) <= 1e-14 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("linear_combine basics") {
    GridSpec g{1, 64};
    SpectralDistribution u = synthesize_entry(catalog_entry("delta"), g);
    SpectralDistribution v = synthesize_entry(catalog_entry("gauss"), g);
    CHECK(relative_l2_error(linear_combine(1.0, u, 0.0, v).coeffs(), u.coeffs()) == 0.0);
    CHECK(linear_combine(1.0, u, -1.0, u).l2_norm() == 0.0);
    SpectralDistribution five = linear_combine(2.0, u, 3.0, u);
    for (std::size_t i = 0; i < five.coeffs().size(); ++i)
        CHECK(std::abs(five.coeffs()[i] - 5.0 * u.coeffs()[i]) < 1e-14);
}

TEST_CASE("real-valued kinds keep Hermitian symmetry through operations") {
    GridSpec g{1, 256};
    for (const char* id : {"heaviside", "power_sing_a75", "gauss", "plaw_p125"}) {
        SpectralDistribution u = synthesize_entry(catalog_entry(id), g);
        CAPTURE(id);
        CHECK(u.hermitian_defect() < 1e-12);
        SpectralDistribution wu = window_multiply(u, central_analysis_window(g));
        CHECK(wu.hermitian_defect() < 1e-12);
    }
}

TEST_CASE("dimension and grid guards") {
    GridSpec g{1, 64};
    GridSpec g2{1, 128};
    SpectralDistribution u = synthesize_entry(catalog_entry("delta"), g);
    SpectralDistribution v = synthesize_entry(catalog_entry("delta"), g2);
    CHECK_THROWS_AS((void)linear_combine(1.0, u, 1.0, v), SobwaveError);
    CHECK_THROWS_AS((void)tensor_product(u, v), SobwaveError);

    SpectralDistribution w2 = tensor_product(u, u);
    SpectralDistribution w4 = tensor_product(w2, w2);
    CHECK(w4.grid().dim == 4);
    CHECK_THROWS_AS((void)tensor_product(w4, u), SobwaveError);
}

TEST_CASE("unsupported spec parameters are rejected") {
    GridSpec g{1, 64};
    DistributionSpec bad;
    bad.kind = DistributionKind::OneSidedPower;
    bad.exponent = 2.5;
    bad.center = {0.5, 0.5};
    CHECK_THROWS_AS((void)synthesize(bad, g), SobwaveError);
    DistributionSpec off_center;
    off_center.kind = DistributionKind::Delta;
    off_center.center = {0.1, 0.5};
    CHECK_THROWS_AS((void)synthesize(off_center, g), SobwaveError);
}

TEST_CASE("window_multiply is bilinear in the distribution") {
    GridSpec g{1, 256};
    SpectralDistribution u = synthesize_entry(catalog_entry("heaviside"), g);
    SpectralDistribution v = synthesize_entry(catalog_entry("gauss"), g);
    Box b;
    b.dim = 1;
    b.lo[0] = 0.35;
    b.hi[0] = 0.7;
    WindowFunction w = WindowFunction::bump(g, b);
    SpectralDistribution lhs = window_multiply(linear_combine(2.5, u, -1.25, v), w);
    SpectralDistribution rhs = linear_combine(2.5, window_multiply(u, w), -1.25,
                                              window_multiply(v, w));
    CHECK(relative_l2_error(lhs.coeffs(), rhs.coeffs()) < 1e-13);
}
