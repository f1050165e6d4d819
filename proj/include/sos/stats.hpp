#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sos::stats {

enum class StatKind { WelchT, AnovaF, PearsonR, LinRegR2 };

std::string_view to_string(StatKind kind);

enum class StatsErrorCode { InsufficientData, DegenerateVariance, LengthMismatch };

class StatsError : public std::domain_error {
public:
    StatsError(StatsErrorCode code, const std::string& detail);

    [[nodiscard]] StatsErrorCode code() const noexcept { return code_; }

private:
    StatsErrorCode code_;
};

/// A test statistic with its degrees of freedom. Two-parameter statistics
/// (F, and R^2 through its F form) carry df2.
struct StatResult {
    StatKind kind = StatKind::WelchT;
    double statistic = 0.0;
    double df = 0.0;
    std::optional<double> df2;
    bool exceeds_p001 = false;
};

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
};

double mean(std::span<const double> xs);

/// Arithmetic mean and n-1 standard deviation. Needs at least 2 values.
MeanSd mean_sd(std::span<const double> xs);

/// Welch two-sample t with Welch-Satterthwaite df.
StatResult welch_t(std::span<const double> a, std::span<const double> b);

/// One-way ANOVA F with df (k - 1, N - k).
StatResult anova_oneway(std::span<const std::vector<double>> groups);

/// Sample Pearson correlation, df = n - 2.
StatResult pearson_r(std::span<const double> x, std::span<const double> y);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    std::size_t n = 0;
    bool constant_response = false;  // SS_tot == 0, r2 reported as 0

    [[nodiscard]] StatResult stat() const;
};

/// Ordinary least squares of y on x.
LinearFit linreg_r2(std::span<const double> x, std::span<const double> y);

/// Two-sided 0.001 critical value of Student t. Fractional df are rounded
/// down to the nearest tabulated value, which errs toward not rejecting.
double t_critical_p001(double df);

/// Upper 0.001 critical value of F(df1, df2), same rounding as above.
double f_critical_p001(double df1, double df2);

}  // namespace sos::stats
