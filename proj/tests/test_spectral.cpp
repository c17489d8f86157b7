// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <vector>

#include "sfts/series.hpp"
#include "sfts/spectral.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace testsupport;

namespace {

sfts::Sfts sinusoid_series(size_t n, double dt, double f0, double t0 = 0.0) {
    sfts::Sfts s;
    s.n = n;
    for (size_t i = 0; i < n; ++i) {
        const double t = t0 + dt * static_cast<double>(i);
        s.times.push_back(t);
        s.values.push_back(static_cast<uint32_t>(
            std::lround(750.0 + 700.0 * std::sin(2.0 * M_PI * f0 * t))));
        s.directions.push_back(sfts::Direction::Forward);
    }
    return s;
}

sfts::Periodogram make_pg(std::vector<double> freqs, std::vector<double> power) {
    sfts::Periodogram p;
    p.grid.freqs = std::move(freqs);
    p.grid.f_min = p.grid.freqs.front();
    p.grid.f_max = p.grid.freqs.back();
    p.power = std::move(power);
    return p;
}

} // namespace

TEST_CASE("grid: direct formula cases") {
    sfts::DerivedSequences d;
    d.duration = 10.0;
    auto g = sfts::frequency_grid(d, 20, 1.0);
    CHECK(g.f_min == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(g.f_max == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g.count() == 10);

    d.duration = 2.0;
    g = sfts::frequency_grid(d, 100, 4.0);
    CHECK(g.count() == 200);
    CHECK(g.f_max == doctest::Approx(25.0).epsilon(1e-12));
}

TEST_CASE("grid: zero duration is a no-spectrum condition") {
    sfts::DerivedSequences d;
    d.duration = 0.0;
    CHECK_THROWS_AS((void)sfts::frequency_grid(d, 5, 4.0), std::invalid_argument);
}

TEST_CASE("lomb-scargle: constant values give a zero spectrum") {
    sfts::Sfts s;
    s.n = 32;
    for (size_t i = 0; i < 32; ++i) {
        s.times.push_back(static_cast<double>(i));
        s.values.push_back(700);
        s.directions.push_back(sfts::Direction::Forward);
    }
    const auto d = sfts::derive_sequences(s);
    const auto g = sfts::frequency_grid(d, s.n, 4.0);
    const auto p = sfts::lomb_scargle(s, d, g);
    for (double v : p.power)
        CHECK(v == 0.0);
}

TEST_CASE("lomb-scargle: evenly spaced sinusoid peaks at the right bin") {
    const double f0 = 0.05;
    const auto s = sinusoid_series(256, 1.0, f0, 1.7e9);
    const auto d = sfts::derive_sequences(s);
    const auto g = sfts::frequency_grid(d, s.n, 4.0);
    const auto p = sfts::lomb_scargle(s, d, g);

    size_t argmax = 0;
    for (size_t k = 1; k < p.power.size(); ++k)
        if (p.power[k] > p.power[argmax])
            argmax = k;
    CHECK(std::fabs(g.freqs[argmax] - f0) <= g.step() + 1e-12);

    // recurrence evaluation must agree with the direct per-sample formula
    std::vector<double> x(s.values.begin(), s.values.end());
    for (size_t k = 0; k < p.power.size(); k += 37) {
        const double want = direct_ls_power(d.rel_times, x, g.freqs[k]);
        CHECK(matches(p.power[k], want, 1e-9));
    }
    const double peak_want = direct_ls_power(d.rel_times, x, g.freqs[argmax]);
    CHECK(matches(p.power[argmax], peak_want, 1e-6));
}

TEST_CASE("lomb-scargle: 30 percent deletions keep the peak in place") {
    const double f0 = 0.05;
    const auto base = sinusoid_series(256, 1.0, f0);
    int failures = 0;
    for (uint64_t seed = 1000; seed < 1020; ++seed) {
        Rng rng(seed);
        std::bernoulli_distribution drop(0.3);
        sfts::Sfts s;
        for (size_t i = 0; i < base.n; ++i) {
            if (drop(rng))
                continue;
            s.times.push_back(base.times[i]);
            s.values.push_back(base.values[i]);
            s.directions.push_back(sfts::Direction::Forward);
        }
        s.n = s.times.size();
        const auto d = sfts::derive_sequences(s);
        const auto g = sfts::frequency_grid(d, s.n, 4.0);
        const auto p = sfts::lomb_scargle(s, d, g);
        size_t argmax = 0;
        for (size_t k = 1; k < p.power.size(); ++k)
            if (p.power[k] > p.power[argmax])
                argmax = k;
        if (std::fabs(g.freqs[argmax] - f0) > g.step() + 1e-12)
            ++failures;

        if (seed == 1000) {
            // dense reference evaluation at 10x the grid resolution locates
            // the same peak
            std::vector<double> x(s.values.begin(), s.values.end());
            double best_f = 0, best_p = -1;
            const size_t dense = g.count() * 10;
            for (size_t k = 0; k < dense; ++k) {
                const double f = g.f_min + (g.f_max - g.f_min) *
                                               static_cast<double>(k) /
                                               static_cast<double>(dense - 1);
                const double pw = direct_ls_power(d.rel_times, x, f);
                if (pw > best_p) {
                    best_p = pw;
                    best_f = f;
                }
            }
            CHECK(std::fabs(g.freqs[argmax] - best_f) <= g.step() + 1e-12);
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("frequency features: uniform spectrum") {
    const auto p = make_pg({1, 2, 3, 4}, {1, 1, 1, 1});
    const auto f = sfts::compute_frequency_features(p);
    CHECK(f.spectral_energy == 4.0);
    CHECK(f.spectral_centroid == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(f.spectral_flatness == 1.0);
    CHECK(f.spectral_rolloff == 4.0); // cumulative .25/.5/.75/1, first >= .85
    CHECK(f.spectral_entropy == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("frequency features: single spike") {
    const auto p = make_pg({1, 2, 3}, {0, 10, 0});
    const auto f = sfts::compute_frequency_features(p);
    CHECK(f.spectral_centroid == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(f.spectral_spread == 0.0);
    CHECK(f.spectral_flatness == 0.0);
    CHECK(f.max_power == 10.0);
    CHECK(f.freq_max_power == 2.0);
    CHECK(std::isnan(f.spectral_skewness)); // bandwidth 0
}

TEST_CASE("frequency features: seeded random spectrum vs naive recomputation") {
    Rng rng(5);
    std::uniform_real_distribution<double> pd(0.1, 9.0);
    std::vector<double> freqs(256), power(256);
    for (size_t i = 0; i < 256; ++i) {
        freqs[i] = 0.25 + 0.01 * static_cast<double>(i);
        power[i] = pd(rng);
    }
    const auto f = sfts::compute_frequency_features(make_pg(freqs, power));

    double sum = 0, pmin = power[0], pmax = power[0];
    for (double v : power) {
        sum += v;
        pmin = std::min(pmin, v);
        pmax = std::max(pmax, v);
    }
    const double mean = sum / 256.0;
    CHECK(matches(f.spectral_energy, sum));
    CHECK(matches(f.power_mean, mean));
    CHECK(matches(f.min_power, pmin));
    CHECK(matches(f.max_power, pmax));

    double centroid = 0;
    for (size_t i = 0; i < 256; ++i)
        centroid += freqs[i] * power[i];
    centroid /= sum;
    CHECK(matches(f.spectral_centroid, centroid));

    double mu2 = 0, mu3 = 0, mu4 = 0;
    for (size_t i = 0; i < 256; ++i) {
        mu2 += power[i] * std::pow(freqs[i] - centroid, 2);
        mu3 += power[i] * std::pow(freqs[i] - centroid, 3);
        mu4 += power[i] * std::pow(freqs[i] - centroid, 4);
    }
    mu2 /= sum;
    mu3 /= sum;
    mu4 /= sum;
    const double bw = std::sqrt(mu2);
    CHECK(matches(f.spectral_bandwidth, bw));
    CHECK(matches(f.spectral_skewness, mu3 / std::pow(bw, 3)));
    CHECK(matches(f.spectral_kurtosis, mu4 / std::pow(bw, 4)));

    double h = 0, flux = 0, logsum = 0;
    for (size_t i = 0; i < 256; ++i) {
        const double q = power[i] / sum;
        h -= q * std::log2(q);
        logsum += std::log(power[i]);
        if (i > 0)
            flux += std::pow(q - power[i - 1] / sum, 2);
    }
    CHECK(matches(f.spectral_entropy, h));
    CHECK(matches(f.spectral_flux, flux));
    CHECK(matches(f.spectral_flatness, std::exp(logsum / 256.0) / mean));
    CHECK(matches(f.spectral_rolloff, naive_rolloff(freqs, power, 0.85)));

    double fm = 0;
    for (double v : freqs)
        fm += v;
    fm /= 256.0;
    double num = 0, den = 0;
    for (size_t i = 0; i < 256; ++i) {
        num += (freqs[i] - fm) * (power[i] - mean);
        den += (freqs[i] - fm) * (freqs[i] - fm);
    }
    CHECK(matches(f.spectral_slope, num / den));

    size_t flips = 0;
    for (size_t i = 1; i < 256; ++i)
        if ((power[i - 1] - mean) * (power[i] - mean) < 0)
            ++flips;
    CHECK(matches(f.spectral_zero_cross_rate, flips / 255.0));

    CHECK(matches(f.spectral_periodicity,
                  std::pow(1.0 - std::exp(-pmax), 256.0)));
}

TEST_CASE("spectral property suite") {
    CHECK(prop_spectral(103, 500) == 0);
}
