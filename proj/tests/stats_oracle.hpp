#pragma once

// Direct-formula statistics in long double, written independently of the
// library: raw power sums instead of two-pass centering.

#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

using Real = long double;

struct Sums {
    Real n = 0, sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
};

inline Sums sums(const std::vector<double>& x, const std::vector<double>& y) {
    Sums s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Real a = x[i];
        const Real b = y[i];
        s.n += 1;
        s.sx += a;
        s.sy += b;
        s.sxx += a * a;
        s.syy += b * b;
        s.sxy += a * b;
    }
    return s;
}

inline Real variance(const std::vector<double>& x) {
    const auto s = sums(x, x);
    return (s.sxx - s.sx * s.sx / s.n) / (s.n - 1);
}

inline Real mean(const std::vector<double>& x) {
    Real sum = 0;
    for (double v : x) sum += v;
    return sum / x.size();
}

struct TwoNumbers {
    Real value;
    Real df;
};

inline TwoNumbers welch(const std::vector<double>& a, const std::vector<double>& b) {
    const Real qa = variance(a) / a.size();
    const Real qb = variance(b) / b.size();
    const Real t = (mean(a) - mean(b)) / std::sqrt(qa + qb);
    const Real df = (qa + qb) * (qa + qb) / (qa * qa / (a.size() - 1) + qb * qb / (b.size() - 1));
    return {t, df};
}

inline Real anova_f(const std::vector<std::vector<double>>& groups) {
    // F = [(sum_g T_g^2/n_g - T^2/N)/(k-1)] / [(sum x^2 - sum_g T_g^2/n_g)/(N-k)]
    Real total = 0, n = 0, sum_sq = 0, between_raw = 0;
    for (const auto& g : groups) {
        Real tg = 0;
        for (double v : g) {
            tg += v;
            sum_sq += static_cast<Real>(v) * v;
        }
        between_raw += tg * tg / g.size();
        total += tg;
        n += g.size();
    }
    const Real k = groups.size();
    const Real ssb = between_raw - total * total / n;
    const Real ssw = sum_sq - between_raw;
    return (ssb / (k - 1)) / (ssw / (n - k));
}

inline Real pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const auto s = sums(x, y);
    const Real num = s.n * s.sxy - s.sx * s.sy;
    const Real den = std::sqrt((s.n * s.sxx - s.sx * s.sx) * (s.n * s.syy - s.sy * s.sy));
    return num / den;
}

struct Line {
    Real slope, intercept, r2;
};

inline Line ols(const std::vector<double>& x, const std::vector<double>& y) {
    const auto s = sums(x, y);
    const Real slope = (s.n * s.sxy - s.sx * s.sy) / (s.n * s.sxx - s.sx * s.sx);
    const Real intercept = (s.sy - slope * s.sx) / s.n;
    Real ss_res = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Real e = y[i] - (intercept + slope * x[i]);
        ss_res += e * e;
    }
    const Real ss_tot = s.syy - s.sy * s.sy / s.n;
    return {slope, intercept, 1 - ss_res / ss_tot};
}

inline bool close(Real got, Real want, Real rel) {
    return std::fabs(got - want) <= rel * std::fmax(std::fabs(want), 1e-300L);
}

}  // namespace oracle
