// SPDX-License-Identifier: Apache-2.0
#include "sfts/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace sfts {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

} // namespace

FrequencyGrid frequency_grid(const DerivedSequences& d, size_t n, double oversample) {
    if (d.duration <= 0.0 || n < 2 || oversample < 1.0)
        throw std::invalid_argument("frequency_grid: no-spectrum condition");
    FrequencyGrid g;
    g.f_min = 1.0 / d.duration;
    g.f_max = static_cast<double>(n) / (2.0 * d.duration);
    const size_t count =
        static_cast<size_t>(std::ceil(oversample * static_cast<double>(n) / 2.0));
    g.freqs.resize(count);
    if (count == 1) {
        g.freqs[0] = g.f_min;
        g.f_max = g.f_min;
        return g;
    }
    const double step = (g.f_max - g.f_min) / static_cast<double>(count - 1);
    for (size_t k = 0; k < count; ++k)
        g.freqs[k] = g.f_min + step * static_cast<double>(k);
    g.freqs.back() = g.f_max; // endpoint pinned against accumulation rounding
    return g;
}

/*
 * Normalized Lomb-Scargle with the per-frequency offset tau defined by
 * tan(2wt) = sum sin(2wt_i) / sum cos(2wt_i). Using
 *   sum cos^2 w(t-tau) = n/2 + h/2,  sum sin^2 w(t-tau) = n/2 - h/2,
 *   h = hypot(sum cos 2wt, sum sin 2wt),
 * only four per-frequency sums are needed: sum y cos wt, sum y sin wt and the
 * double-angle pair, obtained from per-sample cos/sin kept up to date with
 * the usual trig recurrence (alpha = -2 sin^2(d/2), beta = sin d, which does
 * not lose significance for small steps).
 *
 * Times enter as offsets from the first packet; epoch-scale arguments would
 * wreck the trig accuracy.
 */
Periodogram lomb_scargle(const Sfts& s, const DerivedSequences& d,
                         const FrequencyGrid& grid) {
    const size_t n = s.n;
    const size_t m = grid.count();
    Periodogram p;
    p.grid = grid;
    p.power.assign(m, 0.0);

    double mean = 0.0;
    for (uint32_t v : s.values)
        mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (uint32_t v : s.values)
        var += (v - mean) * (v - mean);
    var /= static_cast<double>(n);
    if (var == 0.0)
        return p; // constant series: flat zero spectrum

    const double two_pi = 2.0 * std::numbers::pi;
    const double f0 = grid.freqs.front();
    const double df = grid.step();

    std::vector<double> y(n), c(n), sn(n), alpha(n), beta(n);
    for (size_t j = 0; j < n; ++j) {
        const double t = d.rel_times[j];
        y[j] = static_cast<double>(s.values[j]) - mean;
        const double theta0 = two_pi * f0 * t;
        c[j] = std::cos(theta0);
        sn[j] = std::sin(theta0);
        const double delta = two_pi * df * t;
        const double half_sin = std::sin(0.5 * delta);
        alpha[j] = -2.0 * half_sin * half_sin;
        beta[j] = std::sin(delta);
    }

    const double dn = static_cast<double>(n);
    for (size_t k = 0; k < m; ++k) {
        double syc = 0.0, sys = 0.0, c2 = 0.0, s2 = 0.0;
#pragma omp simd reduction(+ : syc, sys, c2, s2)
        for (size_t j = 0; j < n; ++j) {
            const double cj = c[j];
            const double sj = sn[j];
            syc += y[j] * cj;
            sys += y[j] * sj;
            c2 += cj * cj - sj * sj;
            s2 += 2.0 * cj * sj;
            c[j] = cj + (alpha[j] * cj - beta[j] * sj);
            sn[j] = sj + (alpha[j] * sj + beta[j] * cj);
        }
        const double h = std::hypot(c2, s2);
        const double cc = 0.5 * (dn + h);
        const double ss = 0.5 * (dn - h);
        const double wtau = 0.5 * std::atan2(s2, c2);
        const double ct = std::cos(wtau);
        const double st = std::sin(wtau);
        const double yc = ct * syc + st * sys; // sum y cos w(t-tau)
        const double ys = ct * sys - st * syc; // sum y sin w(t-tau)
        double power = 0.0;
        if (cc > 1e-12)
            power += yc * yc / cc;
        if (ss > 1e-12)
            power += ys * ys / ss;
        p.power[k] = power / (2.0 * var);
    }
    return p;
}

FrequencyFeatures compute_frequency_features(const Periodogram& p,
                                             double rolloff_threshold) {
    const std::vector<double>& P = p.power;
    const std::vector<double>& F = p.grid.freqs;
    const size_t m = P.size();
    FrequencyFeatures f{};

    size_t imin = 0, imax = 0;
    double sum = 0.0;
    for (size_t k = 0; k < m; ++k) {
        if (P[k] < P[imin])
            imin = k;
        if (P[k] > P[imax])
            imax = k;
        sum += P[k];
    }
    f.min_power = P[imin];
    f.max_power = P[imax];
    f.freq_min_power = F[imin];
    f.freq_max_power = F[imax];
    f.spectral_energy = sum;
    f.power_mean = sum / static_cast<double>(m);

    double var = 0.0;
    for (double v : P)
        var += (v - f.power_mean) * (v - f.power_mean);
    f.power_stdev = std::sqrt(var / static_cast<double>(m));

    // mode of a continuous quantity: midpoint of the fullest of 64 equal bins
    {
        if (f.max_power == f.min_power) {
            f.power_mode = f.min_power;
        } else {
            constexpr size_t kBins = 64;
            const double width = (f.max_power - f.min_power) / kBins;
            size_t hist[kBins] = {0};
            for (double v : P) {
                size_t idx = static_cast<size_t>((v - f.min_power) / width);
                hist[std::min(idx, kBins - 1)]++;
            }
            size_t best = 0;
            for (size_t b = 1; b < kBins; ++b)
                if (hist[b] > hist[best])
                    best = b;
            f.power_mode = f.min_power + width * (static_cast<double>(best) + 0.5);
        }
    }

    // Scargle's independent-frequency false-alarm approximation
    f.spectral_periodicity =
        std::pow(1.0 - std::exp(-f.max_power), static_cast<double>(m));

    // least-squares slope of power against frequency
    if (m >= 2) {
        double fmean = 0.0;
        for (double v : F)
            fmean += v;
        fmean /= static_cast<double>(m);
        double num = 0.0, den = 0.0;
        for (size_t k = 0; k < m; ++k) {
            num += (F[k] - fmean) * (P[k] - f.power_mean);
            den += (F[k] - fmean) * (F[k] - fmean);
        }
        f.spectral_slope = den == 0.0 ? kNaN : num / den;
    } else {
        f.spectral_slope = kNaN;
    }

    // sign changes of (P - mean) per bin transition
    if (m >= 2) {
        size_t flips = 0;
        for (size_t k = 1; k < m; ++k) {
            const double a = P[k - 1] - f.power_mean;
            const double b = P[k] - f.power_mean;
            if (a * b < 0.0)
                ++flips;
        }
        f.spectral_zero_cross_rate =
            static_cast<double>(flips) / static_cast<double>(m - 1);
    } else {
        f.spectral_zero_cross_rate = kNaN;
    }

    if (sum <= 0.0) {
        // all-zero spectrum: mass-weighted quantities are undefined
        f.spectral_centroid = f.spectral_bandwidth = f.spectral_spread = kNaN;
        f.spectral_skewness = f.spectral_kurtosis = kNaN;
        f.spectral_entropy = f.spectral_flatness = f.spectral_flux = kNaN;
        f.spectral_rolloff = kNaN;
        return f;
    }

    double centroid = 0.0;
    for (size_t k = 0; k < m; ++k)
        centroid += F[k] * P[k];
    centroid /= sum;
    f.spectral_centroid = centroid;

    double mu2 = 0.0, mu3 = 0.0, mu4 = 0.0;
    for (size_t k = 0; k < m; ++k) {
        const double dev = F[k] - centroid;
        mu2 += P[k] * dev * dev;
        mu3 += P[k] * dev * dev * dev;
        mu4 += P[k] * dev * dev * dev * dev;
    }
    mu2 /= sum;
    mu3 /= sum;
    mu4 /= sum;
    f.spectral_bandwidth = std::sqrt(mu2);
    if (f.spectral_bandwidth == 0.0) {
        f.spectral_skewness = kNaN;
        f.spectral_kurtosis = kNaN;
    } else {
        const double bw3 = f.spectral_bandwidth * f.spectral_bandwidth * f.spectral_bandwidth;
        f.spectral_skewness = mu3 / bw3;
        f.spectral_kurtosis = mu4 / (bw3 * f.spectral_bandwidth);
    }

    // extent of bins above mean power
    {
        size_t lo = m, hi = m;
        for (size_t k = 0; k < m; ++k) {
            if (P[k] > f.power_mean) {
                if (lo == m)
                    lo = k;
                hi = k;
            }
        }
        f.spectral_spread = lo == m ? 0.0 : F[hi] - F[lo];
    }

    // entropy/flatness/flux over the unit-normalized spectrum
    {
        double h = 0.0, log_sum = 0.0, flux = 0.0, prev = P[0] / sum;
        bool has_zero = false;
        for (size_t k = 0; k < m; ++k) {
            const double q = P[k] / sum;
            if (q > 0.0) {
                h -= q * std::log2(q);
                log_sum += std::log(P[k]);
            } else {
                has_zero = true;
            }
            if (k > 0) {
                flux += (q - prev) * (q - prev);
                prev = q;
            }
        }
        f.spectral_entropy = std::max(h, 0.0);
        f.spectral_flux = flux;
        if (has_zero)
            f.spectral_flatness = 0.0;
        else if (f.max_power == f.min_power)
            f.spectral_flatness = 1.0;
        else
            f.spectral_flatness =
                std::exp(log_sum / static_cast<double>(m)) / f.power_mean;
    }

    // smallest grid frequency with cumulative power >= threshold * total
    {
        const double target = rolloff_threshold * sum;
        double cum = 0.0;
        f.spectral_rolloff = F[m - 1];
        for (size_t k = 0; k < m; ++k) {
            cum += P[k];
            if (cum >= target) {
                f.spectral_rolloff = F[k];
                break;
            }
        }
    }
    return f;
}

} // namespace sfts
