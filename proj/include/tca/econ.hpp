#pragma once
#include <Eigen/Dense>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tca/error.hpp"

namespace tca::econ {

struct RegressionResult {
    std::vector<std::string> names;   // "const" first when an intercept is fitted
    std::vector<double> coef;
    std::vector<double> std_err;
    std::vector<double> t_stat;
    std::vector<double> p_value;
    double r_squared = 0.0;
    double adj_r_squared = 0.0;
    long n_obs = 0;

    int index_of(const std::string& name) const;          // -1 when absent
    double coef_of(const std::string& name) const;        // throws when absent
};

// Classical OLS: least-squares coefficients, non-robust standard errors,
// two-sided p-values from the t distribution, adjusted R^2. X holds the
// regressors without the intercept column; intercept=true prepends one.
RegressionResult ols(const Eigen::Ref<const Eigen::VectorXd>& y, const Eigen::Ref<const Eigen::MatrixXd>& X,
                     std::vector<std::string> names, bool intercept);

enum class NullHypothesis { UnitRoot, Stationary };

struct TestResult {
    double statistic = 0.0;
    double p_value = 1.0;
    int lags_used = 0;
    NullHypothesis null_hyp = NullHypothesis::UnitRoot;
    bool reject_at_5pct = false;  // p_value < 0.05
    bool p_clamped = false;       // statistic fell outside the embedded table
};

// Augmented Dickey-Fuller with intercept, no deterministic trend. Lag order
// starts at the Schwert bound floor(12*(n/100)^(1/4)) and is pruned backward
// while the last lag's |t| < 1.6449. Null: unit root.
TestResult adf_test(std::span<const double> x, std::optional<int> max_lags = std::nullopt);

// Phillips-Perron Z_tau with Newey-West long-run variance, bandwidth
// floor(4*(n/100)^(2/9)). Null: unit root.
TestResult pp_test(std::span<const double> x);

enum class KpssTrend { Level, Trend };

// KPSS with Newey-West denominator, bandwidth floor(4*(n/100)^(1/4)).
// Null: stationary. A constant series yields statistic 0 with the p-value
// clamped at the table maximum.
TestResult kpss_test(std::span<const double> x, KpssTrend trend = KpssTrend::Level);

std::vector<double> first_difference(std::span<const double> x);

struct TrendFit {
    double intercept = 0.0;
    double slope = 0.0;
    double slope_p_value = 1.0;
    bool increasing = false;  // slope > 0
};

// OLS of x_t on (1, t), t = 1..n.
TrendFit time_trend(std::span<const double> x);

// Windowed series aligned to the input: values[i] belongs to input index
// first_index + i. Positions before first_index are undefined (missing,
// never zero-filled); NaN marks skipped positions inside the window.
struct MovingSeries {
    int first_index = 0;
    std::vector<double> values;
};

// Trailing standard deviation of log returns; requires positive inputs.
MovingSeries moving_vol_log(std::span<const double> x, int window = 90);

// For signed series: 5-day trailing mean, percent difference of successive
// smoothed values (positions with |previous| <= 1e-9 skipped), trailing
// standard deviation over vol_window.
MovingSeries moving_vol_signed(std::span<const double> x, int ma_window = 5, int vol_window = 90);

// Bartlett-kernel long-run variance, 1/n normalization. Exposed for tests.
double newey_west_lrv(std::span<const double> u, int bandwidth);

// p-value of a Dickey-Fuller tau statistic (intercept case) by interpolation
// in the embedded quantile table; *clamped set when outside the table.
double df_tau_pvalue(double stat, bool* clamped);

} // namespace tca::econ
