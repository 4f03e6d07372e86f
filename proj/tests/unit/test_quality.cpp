#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "kcgh/errors.hpp"
#include "kcgh/quality.hpp"

using namespace kcgh;

namespace {

RgbdFrame quality_frame(int n, int n_layers, uint64_t seed) {
    RgbdFrame f;
    f.config = OpticalConfig::defaults_for(n, n);
    f.config.wavelengths = {638e-9};
    f.config.n_layers = n_layers;
    f.intensity.assign(1, ScalarField(n, n));
    f.depth = ScalarField(n, n);
    f.validity = BinaryMask(n, n);
    kcgh::Rng rng(seed);
    for (size_t p = 0; p < f.depth.size(); ++p) {
        const bool covered = rng.uniform() < 0.8;
        f.validity.data[p] = covered;
        f.intensity[0].data[p] = covered ? rng.uniform(0.2, 1.0) : 0.0;
        f.depth.data[p] = covered ? rng.uniform() : 1.0;
    }
    f.depth.data[0] = 1.0;
    f.validity.data[0] = 1;
    f.intensity[0].data[0] = 0.5;
    return f;
}

// 32x32 integer-lattice images used as SSIM cross-checks; the expected
// values were produced by an independent reference implementation of the
// same definition (Gaussian 11x11, sigma 1.5, K1 0.01, K2 0.03, unit range,
// population covariance, valid-region windows).
ScalarField lattice(int rule) {
    ScalarField f(32, 32);
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j) {
            double v = 0.0;
            switch (rule) {
                case 0: v = ((3 * i + 5 * j) % 17) / 16.0; break;
                case 1: v = ((5 * i + 3 * j) % 13) / 12.0; break;
                case 2: v = ((i * j) % 29) / 28.0; break;
                case 3: v = (i % 11) / 10.0; break;
                case 4: v = (j % 11) / 10.0; break;
                case 5: v = ((i + j) % 23) / 22.0; break;
                case 6: v = ((7 * i + 2 * j) % 19) / 18.0; break;
            }
            f.at(j, i) = v;
        }
    return f;
}

} // namespace

TEST_CASE("quality: psnr basics") {
    ScalarField a(8, 8), b(8, 8);
    for (size_t p = 0; p < a.size(); ++p) a.data[p] = (static_cast<double>(p % 16)) / 16.0;
    b = a;
    CHECK(std::isinf(psnr(a, b)));
    CHECK(psnr(a, b) > 0.0);

    for (auto& v : b.data) v += 0.1;
    CHECK(psnr(a, b) == doctest::Approx(20.0).epsilon(1e-9));

    // explicit peak rescales: peak 2 adds 10*log10(4) dB
    CHECK(psnr(a, b, 2.0) == doctest::Approx(20.0 + 10.0 * std::log10(4.0)).epsilon(1e-9));
}

TEST_CASE("quality: psnr guards") {
    ScalarField a(8, 8), b(8, 4);
    CHECK_THROWS_AS(psnr(a, b), DimensionError);
    ScalarField c(8, 8);
    CHECK_THROWS_AS(psnr(a, c, 0.0), DomainError);
    CHECK_THROWS_AS(psnr(a, c, -1.0), DomainError);
}

TEST_CASE("quality: ssim of identical images is one") {
    const ScalarField a = lattice(0);
    CHECK(ssim(a, a) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("quality: ssim matches the independent reference") {
    CHECK(ssim(lattice(0), lattice(1)) ==
          doctest::Approx(0.011093357096722807).epsilon(1e-9));
    const ScalarField a2 = lattice(2);
    ScalarField b2 = a2;
    for (auto& v : b2.data) v = 1.0 - v;
    CHECK(ssim(a2, b2) == doctest::Approx(-0.982555018349572).epsilon(1e-9));
    CHECK(ssim(lattice(3), lattice(4)) ==
          doctest::Approx(0.008464212121716769).epsilon(1e-9));
    const ScalarField a4 = lattice(5);
    ScalarField b4 = a4;
    for (auto& v : b4.data) v = std::min(1.0, v + 0.1);
    CHECK(ssim(a4, b4) == doctest::Approx(0.9714402590705795).epsilon(1e-9));
    const ScalarField a5 = lattice(6);
    ScalarField b5 = a5;
    for (auto& v : b5.data) v = v * v;
    CHECK(ssim(a5, b5) == doctest::Approx(0.899508566976571).epsilon(1e-9));
}

TEST_CASE("quality: ssim is symmetric and bounded") {
    const ScalarField a = lattice(0), b = lattice(6);
    const double s = ssim(a, b);
    CHECK(ssim(b, a) == doctest::Approx(s).epsilon(1e-15));
    CHECK(s <= 1.0);
    CHECK(s >= -1.0);
}

TEST_CASE("quality: ssim guards") {
    ScalarField small(8, 8), other(8, 8);
    CHECK_THROWS_AS(ssim(small, other), DomainError); // below the 11x11 window
    ScalarField a(16, 16), b(16, 12);
    CHECK_THROWS_AS(ssim(a, b), DimensionError);
}

TEST_CASE("quality: reconstruct_at demands a plane-zero hologram") {
    const OpticalConfig c = OpticalConfig::defaults_for(32, 32);
    ComplexField h = testutil::random_field(32, 32, 0xC0FFEE);
    h.plane_z = 1e-3;
    CHECK_THROWS_AS(reconstruct_at(h, 1e-3, c, 0), StateError);
}

TEST_CASE("quality: focal_stack matches per-plane reconstructions") {
    OpticalConfig c = OpticalConfig::defaults_for(32, 32);
    c.wavelengths = {638e-9};
    const ComplexField h = testutil::random_field(32, 32, 0xC0FFEF);
    const std::vector<double> zs{0.2e-3, 0.5e-3, 1.0e-3};
    const std::vector<ScalarField> stack = focal_stack(h, zs, c, 0);
    REQUIRE(stack.size() == 3);
    for (size_t i = 0; i < zs.size(); ++i) {
        const ScalarField one = reconstruct_at(h, zs[i], c, 0);
        CHECK(stack[i].data == one.data);
    }
}

TEST_CASE("quality: fused focal image projection equals the per-plane sum") {
    const RgbdFrame f = quality_frame(32, 6, 0xD00D);
    const ComplexField h = generate_aplbm(f, 0);

    const int n_fip = 5; // decoupled from the generator's 6 layers
    const ScalarField got = focal_image_projection(h, f, n_fip, 0);

    OpticalConfig fc = f.config;
    fc.n_layers = n_fip;
    const LayerGrid g = build_layer_grid(f.depth_meters(), f.validity, fc);
    ScalarField want(32, 32);
    for (int i = 0; i < g.n_layers; ++i) {
        const ScalarField rec = reconstruct_at(h, g.z_of(i), f.config, 0);
        const BinaryMask m = band_mask(f.depth_meters(), f.validity, g, i, 1);
        for (size_t p = 0; p < want.size(); ++p)
            if (m.data[p]) want.data[p] += rec.data[p];
    }
    CHECK(got.data == want.data); // fused path reuses one forward transform, bitwise equal

    // ringing correction forces the per-plane fallback; still identical
    PropagationOptions ropt;
    ropt.ringing_correction = true;
    ropt.padding = PaddingMode::edge;
    const ScalarField got_r = focal_image_projection(h, f, n_fip, 0, ropt);
    ScalarField want_r(32, 32);
    for (int i = 0; i < g.n_layers; ++i) {
        const ScalarField rec = reconstruct_at(h, g.z_of(i), f.config, 0, ropt);
        const BinaryMask m = band_mask(f.depth_meters(), f.validity, g, i, 1);
        for (size_t p = 0; p < want_r.size(); ++p)
            if (m.data[p]) want_r.data[p] += rec.data[p];
    }
    CHECK(got_r.data == want_r.data);
}

TEST_CASE("quality: fip of a perfect flat hologram is the image itself") {
    // flat scene at z = 0: the hologram equals the image, FIP reproduces it
    RgbdFrame f = quality_frame(32, 4, 0xD11D);
    for (auto& d : f.depth.data) d = 0.0;
    const ComplexField h = generate_aplbm(f, 0);
    const ScalarField fip = focal_image_projection(h, f, 4, 0);
    for (size_t p = 0; p < fip.size(); ++p) {
        const double want = f.validity.data[p] ? f.intensity[0].data[p] : 0.0;
        CHECK(std::abs(fip.data[p] - want) < 1e-12);
    }
}

TEST_CASE("quality: evaluate_sample aggregates per channel") {
    RgbdFrame f = quality_frame(32, 4, 0xD22D);
    f.config.wavelengths = {638e-9, 532e-9};
    f.intensity.assign(2, f.intensity[0]);
    const HologramSample s = [&] {
        HologramSample smp = generate_color(f, Method::ap);
        smp.seed = 5;
        smp.id = "t";
        return smp;
    }();

    const MetricsRecord r = evaluate_sample(s, f, 4);
    CHECK(r.method == Method::ap);
    CHECK(r.fip_layers == 4);
    REQUIRE(r.psnr_channel.size() == 2);
    REQUIRE(r.ssim_channel.size() == 2);
    CHECK(r.psnr_mean ==
          doctest::Approx((r.psnr_channel[0] + r.psnr_channel[1]) / 2.0).epsilon(1e-15));
    CHECK(r.ssim_mean ==
          doctest::Approx((r.ssim_channel[0] + r.ssim_channel[1]) / 2.0).epsilon(1e-15));
    for (double v : r.ssim_channel) {
        CHECK(v <= 1.0);
        CHECK(v >= -1.0);
    }

    // fip_layers = 0 falls back to the sample's own layer count
    const MetricsRecord r0 = evaluate_sample(s, f, 0);
    CHECK(r0.fip_layers == s.n_layers);
}
