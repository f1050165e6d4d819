#include "sos/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "critical_values.hpp"

namespace sos::stats {

std::string_view to_string(StatKind kind) {
    switch (kind) {
        case StatKind::WelchT: return "welch_t";
        case StatKind::AnovaF: return "anova_f";
        case StatKind::PearsonR: return "pearson_r";
        case StatKind::LinRegR2: return "linreg_r2";
    }
    return "unknown";
}

namespace {

std::string_view code_name(StatsErrorCode code) {
    switch (code) {
        case StatsErrorCode::InsufficientData: return "InsufficientData";
        case StatsErrorCode::DegenerateVariance: return "DegenerateVariance";
        case StatsErrorCode::LengthMismatch: return "LengthMismatch";
    }
    return "Unknown";
}

constexpr double kInf = std::numeric_limits<double>::infinity();

// Index of the largest tabulated df not above `df`, or -1 below the grid.
int grid_floor(double df) {
    const auto& grid = detail::kDfGrid;
    const auto it = std::upper_bound(grid.begin(), grid.end(), df);
    return static_cast<int>(it - grid.begin()) - 1;
}

// Centered sum of squares around `m`.
double centered_ss(std::span<const double> xs, double m) {
    double ss = 0.0;
    for (double v : xs) ss += (v - m) * (v - m);
    return ss;
}

void require_paired(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw StatsError(StatsErrorCode::LengthMismatch, "x and y differ in length");
    }
    if (x.size() < 3) {
        throw StatsError(StatsErrorCode::InsufficientData, "need at least 3 pairs");
    }
}

}  // namespace

StatsError::StatsError(StatsErrorCode code, const std::string& detail)
    : std::domain_error(std::string(code_name(code)) + ": " + detail), code_(code) {}

double mean(std::span<const double> xs) {
    if (xs.empty()) throw StatsError(StatsErrorCode::InsufficientData, "mean of empty sample");
    double sum = 0.0;
    for (double v : xs) sum += v;
    return sum / static_cast<double>(xs.size());
}

MeanSd mean_sd(std::span<const double> xs) {
    if (xs.size() < 2) {
        throw StatsError(StatsErrorCode::InsufficientData, "sd needs at least 2 values");
    }
    const double m = mean(xs);
    return {m, std::sqrt(centered_ss(xs, m) / static_cast<double>(xs.size() - 1))};
}

StatResult welch_t(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2) {
        throw StatsError(StatsErrorCode::InsufficientData, "each sample needs at least 2 values");
    }
    const auto sa = mean_sd(a);
    const auto sb = mean_sd(b);
    const double va = sa.sd * sa.sd / static_cast<double>(a.size());
    const double vb = sb.sd * sb.sd / static_cast<double>(b.size());
    if (va + vb == 0.0) {
        throw StatsError(StatsErrorCode::DegenerateVariance, "both samples have zero variance");
    }

    StatResult r;
    r.kind = StatKind::WelchT;
    r.statistic = (sa.mean - sb.mean) / std::sqrt(va + vb);
    r.df = (va + vb) * (va + vb) /
           (va * va / static_cast<double>(a.size() - 1) + vb * vb / static_cast<double>(b.size() - 1));
    r.exceeds_p001 = std::abs(r.statistic) > t_critical_p001(r.df);
    return r;
}

StatResult anova_oneway(std::span<const std::vector<double>> groups) {
    if (groups.size() < 2) {
        throw StatsError(StatsErrorCode::InsufficientData, "ANOVA needs at least 2 groups");
    }
    std::size_t total_n = 0;
    double grand_sum = 0.0;
    for (const auto& g : groups) {
        if (g.size() < 2) {
            throw StatsError(StatsErrorCode::InsufficientData, "each group needs at least 2 values");
        }
        total_n += g.size();
        for (double v : g) grand_sum += v;
    }
    const double grand = grand_sum / static_cast<double>(total_n);

    double ss_between = 0.0;
    double ss_within = 0.0;
    for (const auto& g : groups) {
        const double m = mean(g);
        ss_between += static_cast<double>(g.size()) * (m - grand) * (m - grand);
        ss_within += centered_ss(g, m);
    }
    if (ss_between == 0.0 && ss_within == 0.0) {
        throw StatsError(StatsErrorCode::DegenerateVariance, "all observations are equal");
    }

    StatResult r;
    r.kind = StatKind::AnovaF;
    r.df = static_cast<double>(groups.size() - 1);
    r.df2 = static_cast<double>(total_n - groups.size());
    r.statistic = ss_within == 0.0 ? kInf : (ss_between / r.df) / (ss_within / *r.df2);
    r.exceeds_p001 = r.statistic > f_critical_p001(r.df, *r.df2);
    return r;
}

StatResult pearson_r(std::span<const double> x, std::span<const double> y) {
    require_paired(x, y);
    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sxy += (x[i] - mx) * (y[i] - my);
    const double sxx = centered_ss(x, mx);
    const double syy = centered_ss(y, my);
    if (sxx == 0.0 || syy == 0.0) {
        throw StatsError(StatsErrorCode::DegenerateVariance, "constant series");
    }

    StatResult r;
    r.kind = StatKind::PearsonR;
    r.statistic = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
    r.df = static_cast<double>(x.size() - 2);
    const double rr = r.statistic * r.statistic;
    const double t = rr >= 1.0 ? kInf : std::abs(r.statistic) * std::sqrt(r.df / (1.0 - rr));
    r.exceeds_p001 = t > t_critical_p001(r.df);
    return r;
}

LinearFit linreg_r2(std::span<const double> x, std::span<const double> y) {
    require_paired(x, y);
    const double mx = mean(x);
    const double my = mean(y);
    const double sxx = centered_ss(x, mx);
    if (sxx == 0.0) throw StatsError(StatsErrorCode::DegenerateVariance, "constant x");
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sxy += (x[i] - mx) * (y[i] - my);

    LinearFit fit;
    fit.n = x.size();
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    const double ss_tot = centered_ss(y, my);
    if (ss_tot == 0.0) {
        fit.constant_response = true;
        fit.r2 = 0.0;
        return fit;
    }
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = y[i] - (fit.intercept + fit.slope * x[i]);
        ss_res += e * e;
    }
    fit.r2 = std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
    return fit;
}

StatResult LinearFit::stat() const {
    StatResult r;
    r.kind = StatKind::LinRegR2;
    r.statistic = r2;
    r.df = 1.0;
    r.df2 = static_cast<double>(n) - 2.0;
    if (!constant_response) {
        const double f = r2 >= 1.0 ? kInf : r2 / (1.0 - r2) * *r.df2;
        r.exceeds_p001 = f > f_critical_p001(1.0, *r.df2);
    }
    return r;
}

double t_critical_p001(double df) {
    if (std::isinf(df)) return detail::kTCriticalInf;
    const int i = grid_floor(df);
    return i < 0 ? kInf : detail::kTCritical[static_cast<std::size_t>(i)];
}

double f_critical_p001(double df1, double df2) {
    if (df1 < 1.0) return kInf;
    const auto row = static_cast<std::size_t>(std::min(std::floor(df1), 10.0)) - 1;
    if (std::isinf(df2)) return detail::kFCriticalInf[row];
    const int i = grid_floor(df2);
    return i < 0 ? kInf : detail::kFCritical[row][static_cast<std::size_t>(i)];
}

}  // namespace sos::stats
