#include "tca/econ.hpp"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <limits>

#include "tca/mathx.hpp"

namespace tca::econ {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double two_sided_t_pvalue(double t, double dof) {
    if (!std::isfinite(t)) return 0.0;
    const boost::math::students_t_distribution<double> dist(dof);
    return 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
}

void check_series(std::span<const double> x, std::size_t min_len, const char* test) {
    if (x.size() < min_len)
        throw ConfigError(std::string(test) + ": series length " + std::to_string(x.size()) + " below minimum " +
                          std::to_string(min_len));
    for (double v : x)
        if (!std::isfinite(v)) throw DataError(std::string(test) + ": series contains a non-finite value");
}

bool is_constant(std::span<const double> x) {
    for (double v : x)
        if (v != x[0]) return false;
    return true;
}

TestResult make_result(double stat, double p, int lags, NullHypothesis null_hyp, bool clamped) {
    TestResult r;
    r.statistic = stat;
    r.p_value = p;
    r.lags_used = lags;
    r.null_hyp = null_hyp;
    r.reject_at_5pct = p < 0.05;
    r.p_clamped = clamped;
    return r;
}

} // namespace

int RegressionResult::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

double RegressionResult::coef_of(const std::string& name) const {
    const int i = index_of(name);
    if (i < 0) throw ConfigError("no regressor named '" + name + "' in result");
    return coef[static_cast<std::size_t>(i)];
}

RegressionResult ols(const Eigen::Ref<const Eigen::VectorXd>& y, const Eigen::Ref<const Eigen::MatrixXd>& X,
                     std::vector<std::string> names, bool intercept) {
    const long n = y.size();
    if (X.rows() != n) throw ConfigError("ols: y has " + std::to_string(n) + " rows, X has " + std::to_string(X.rows()));
    if (static_cast<long>(names.size()) != X.cols()) throw ConfigError("ols: names do not match X columns");

    Eigen::MatrixXd Xf;
    std::vector<std::string> all_names;
    if (intercept) {
        Xf.resize(n, X.cols() + 1);
        Xf.col(0).setOnes();
        Xf.rightCols(X.cols()) = X;
        all_names.reserve(names.size() + 1);
        all_names.emplace_back("const");
        for (auto& nm : names) all_names.push_back(std::move(nm));
    } else {
        Xf = X;
        all_names = std::move(names);
    }
    const long k = Xf.cols();
    if (k == 0) throw ConfigError("ols: no regressors");
    if (n <= k + 1)
        throw ConfigError("ols: " + std::to_string(n) + " observations too few for " + std::to_string(k) +
                          " regressors");

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Xf);
    if (qr.rank() < k) {
        const auto perm = qr.colsPermutation().indices();
        std::string cols;
        for (long i = qr.rank(); i < k; ++i) {
            if (!cols.empty()) cols += ", ";
            cols += all_names[static_cast<std::size_t>(perm[i])];
        }
        throw DataError("ols: design matrix is rank-deficient; collinear columns: " + cols);
    }

    RegressionResult res;
    res.names = std::move(all_names);
    res.n_obs = n;
    Eigen::VectorXd beta = qr.solve(y);
    Eigen::VectorXd resid = y - Xf * beta;
    const double ssr = resid.squaredNorm();
    const double dof = static_cast<double>(n - k);
    const double s2 = ssr / dof;

    const Eigen::MatrixXd xtx_inv = (Xf.transpose() * Xf).ldlt().solve(Eigen::MatrixXd::Identity(k, k));

    double tss;
    if (intercept) {
        const double ybar = y.mean();
        tss = (y.array() - ybar).matrix().squaredNorm();
    } else {
        tss = y.squaredNorm();
    }
    res.r_squared = tss > 0.0 ? 1.0 - ssr / tss : 1.0;
    const double adj_den = static_cast<double>(n - k);
    const double adj_num = intercept ? static_cast<double>(n - 1) : static_cast<double>(n);
    res.adj_r_squared = 1.0 - (1.0 - res.r_squared) * adj_num / adj_den;

    res.coef.resize(static_cast<std::size_t>(k));
    res.std_err.resize(static_cast<std::size_t>(k));
    res.t_stat.resize(static_cast<std::size_t>(k));
    res.p_value.resize(static_cast<std::size_t>(k));
    for (long i = 0; i < k; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        res.coef[ui] = beta[i];
        const double var_i = s2 * xtx_inv(i, i);
        const double se = var_i > 0.0 ? std::sqrt(var_i) : 0.0;
        res.std_err[ui] = se;
        if (se > 0.0) {
            res.t_stat[ui] = beta[i] / se;
            res.p_value[ui] = two_sided_t_pvalue(res.t_stat[ui], dof);
        } else {
            // Degenerate (zero residual variance): the coefficient is exact.
            res.t_stat[ui] = beta[i] == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), beta[i]);
            res.p_value[ui] = beta[i] == 0.0 ? 1.0 : 0.0;
        }
    }
    return res;
}

double newey_west_lrv(std::span<const double> u, int bandwidth) {
    const auto n = static_cast<long>(u.size());
    if (n == 0) throw ConfigError("newey_west_lrv: empty series");
    double lrv = 0.0;
    for (double v : u) lrv += v * v;
    lrv /= static_cast<double>(n);
    for (int j = 1; j <= bandwidth; ++j) {
        if (j >= n) break;
        double gamma = 0.0;
        for (long t = j; t < n; ++t) gamma += u[static_cast<std::size_t>(t)] * u[static_cast<std::size_t>(t - j)];
        gamma /= static_cast<double>(n);
        lrv += 2.0 * (1.0 - static_cast<double>(j) / (bandwidth + 1.0)) * gamma;
    }
    return lrv;
}

namespace {

// Result of the Dickey-Fuller style regression dx_t on [1, x_{t-1}, dx lags].
struct DfFit {
    double rho_t = 0.0;       // t-stat of the x_{t-1} coefficient
    double last_lag_t = 0.0;  // t-stat of the last dx lag (0 when p = 0)
    double rho = 0.0;
    double rho_se = 0.0;
    double s2 = 0.0;  // residual variance, SSR/(T-k)
    long nobs = 0;
    Eigen::VectorXd resid;
};

// first_row indexes x; rows t = first_row..n-1 enter the regression.
DfFit df_regression(std::span<const double> x, int p, int first_row) {
    const auto n = static_cast<long>(x.size());
    const long rows = n - first_row;
    const long k = 2 + p;
    if (rows <= k + 1) throw ConfigError("adf: too few observations for lag order " + std::to_string(p));
    Eigen::VectorXd y(rows);
    Eigen::MatrixXd X(rows, k);
    for (long r = 0; r < rows; ++r) {
        const long t = first_row + r;
        const auto ut = static_cast<std::size_t>(t);
        y[r] = x[ut] - x[ut - 1];
        X(r, 0) = 1.0;
        X(r, 1) = x[ut - 1];
        for (int j = 1; j <= p; ++j)
            X(r, 1 + j) = x[ut - static_cast<std::size_t>(j)] - x[ut - static_cast<std::size_t>(j) - 1];
    }
    const Eigen::MatrixXd xtx = X.transpose() * X;
    const Eigen::VectorXd xty = X.transpose() * y;
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(xtx);
    if (ldlt.info() != Eigen::Success) throw DataError("adf: singular design (constant or degenerate series)");
    const Eigen::VectorXd beta = ldlt.solve(xty);
    const Eigen::VectorXd resid = y - X * beta;
    const double ssr = resid.squaredNorm();
    const double s2 = ssr / static_cast<double>(rows - k);
    if (!(s2 > 0.0) || !std::isfinite(s2)) throw DataError("adf: zero residual variance (degenerate series)");
    const Eigen::MatrixXd xtx_inv = ldlt.solve(Eigen::MatrixXd::Identity(k, k));

    DfFit fit;
    fit.rho = beta[1];
    fit.rho_se = std::sqrt(s2 * xtx_inv(1, 1));
    fit.rho_t = beta[1] / fit.rho_se;
    if (p > 0) {
        const double se_last = std::sqrt(s2 * xtx_inv(k - 1, k - 1));
        fit.last_lag_t = beta[k - 1] / se_last;
    }
    fit.s2 = s2;
    fit.nobs = rows;
    fit.resid = resid;
    return fit;
}

constexpr double kPruneT = 1.6449;  // two-sided 10% normal critical value

} // namespace

TestResult adf_test(std::span<const double> x, std::optional<int> max_lags) {
    check_series(x, 25, "adf_test");
    if (is_constant(x)) throw DataError("adf_test: constant series has zero variance");
    const auto n = static_cast<long>(x.size());
    int p_max = max_lags.value_or(static_cast<int>(std::floor(12.0 * std::pow(static_cast<double>(n) / 100.0, 0.25))));
    p_max = std::min<int>(p_max, static_cast<int>((n - 6) / 2));
    p_max = std::max(p_max, 0);

    // Backward pruning on a fixed sample so candidate fits are comparable.
    int p = p_max;
    const int sel_first = p_max + 1;
    while (p > 0) {
        const DfFit fit = df_regression(x, p, sel_first);
        if (std::fabs(fit.last_lag_t) >= kPruneT) break;
        --p;
    }

    const DfFit fit = df_regression(x, p, p + 1);
    bool clamped = false;
    const double pv = df_tau_pvalue(fit.rho_t, &clamped);
    return make_result(fit.rho_t, pv, p, NullHypothesis::UnitRoot, clamped);
}

TestResult pp_test(std::span<const double> x) {
    check_series(x, 25, "pp_test");
    if (is_constant(x)) throw DataError("pp_test: constant series has zero variance");
    const auto n = static_cast<long>(x.size());
    const long T = n - 1;

    // x_t = alpha + rho * x_{t-1} + u_t
    Eigen::VectorXd y(T);
    Eigen::MatrixXd X(T, 2);
    for (long t = 0; t < T; ++t) {
        y[t] = x[static_cast<std::size_t>(t + 1)];
        X(t, 0) = 1.0;
        X(t, 1) = x[static_cast<std::size_t>(t)];
    }
    const Eigen::MatrixXd xtx = X.transpose() * X;
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(xtx);
    const Eigen::VectorXd beta = ldlt.solve(X.transpose() * y);
    const Eigen::VectorXd resid = y - X * beta;
    const double ssr = resid.squaredNorm();
    const double s2 = ssr / static_cast<double>(T - 2);
    if (!(s2 > 0.0) || !std::isfinite(s2)) throw DataError("pp_test: zero residual variance");
    const Eigen::MatrixXd xtx_inv = ldlt.solve(Eigen::MatrixXd::Identity(2, 2));
    const double se_rho = std::sqrt(s2 * xtx_inv(1, 1));
    const double t_stat = (beta[1] - 1.0) / se_rho;

    const int q = static_cast<int>(std::floor(4.0 * std::pow(static_cast<double>(n) / 100.0, 2.0 / 9.0)));
    const double gamma0 = ssr / static_cast<double>(T);
    const double lam2 = newey_west_lrv(std::span<const double>(resid.data(), static_cast<std::size_t>(T)), q);
    const double z_tau = std::sqrt(gamma0 / lam2) * t_stat -
                         0.5 * (lam2 - gamma0) / std::sqrt(lam2) * static_cast<double>(T) * se_rho / std::sqrt(s2);

    bool clamped = false;
    const double pv = df_tau_pvalue(z_tau, &clamped);
    return make_result(z_tau, pv, q, NullHypothesis::UnitRoot, clamped);
}

namespace {

// Asymptotic KPSS critical values: statistic at p = {0.10, 0.05, 0.025, 0.01}.
constexpr double kKpssProbs[4] = {0.10, 0.05, 0.025, 0.01};
constexpr double kKpssLevel[4] = {0.347, 0.463, 0.574, 0.739};
constexpr double kKpssTrend[4] = {0.119, 0.146, 0.176, 0.216};

double kpss_pvalue(double stat, const double* cv, bool* clamped) {
    *clamped = false;
    if (stat <= cv[0]) {
        *clamped = true;
        return kKpssProbs[0];
    }
    if (stat >= cv[3]) {
        *clamped = stat > cv[3];
        return kKpssProbs[3];
    }
    for (int i = 0; i < 3; ++i)
        if (stat <= cv[i + 1])
            return kKpssProbs[i] + (stat - cv[i]) / (cv[i + 1] - cv[i]) * (kKpssProbs[i + 1] - kKpssProbs[i]);
    return kKpssProbs[3];
}

} // namespace

TestResult kpss_test(std::span<const double> x, KpssTrend trend) {
    check_series(x, 25, "kpss_test");
    const auto n = static_cast<long>(x.size());
    const double* cv = trend == KpssTrend::Level ? kKpssLevel : kKpssTrend;
    const int l = static_cast<int>(std::floor(4.0 * std::pow(static_cast<double>(n) / 100.0, 0.25)));

    std::vector<double> e(x.size());
    if (trend == KpssTrend::Level) {
        const double m = mathx::mean(x);
        for (std::size_t i = 0; i < x.size(); ++i) e[i] = x[i] - m;
    } else {
        // Residuals of x_t on (1, t).
        double st = 0.0, sx = 0.0, stt = 0.0, stx = 0.0;
        for (long t = 0; t < n; ++t) {
            const double tv = static_cast<double>(t + 1);
            st += tv;
            stt += tv * tv;
            sx += x[static_cast<std::size_t>(t)];
            stx += tv * x[static_cast<std::size_t>(t)];
        }
        const double denom = static_cast<double>(n) * stt - st * st;
        const double slope = (static_cast<double>(n) * stx - st * sx) / denom;
        const double icept = (sx - slope * st) / static_cast<double>(n);
        for (long t = 0; t < n; ++t)
            e[static_cast<std::size_t>(t)] = x[static_cast<std::size_t>(t)] - icept - slope * static_cast<double>(t + 1);
    }

    const double lam2 = newey_west_lrv(e, l);
    bool clamped = false;
    double stat = 0.0;
    if (lam2 <= 0.0 || !std::isfinite(lam2)) {
        // Perfectly (trend-)stationary input: trivially fail to reject.
        stat = 0.0;
        clamped = true;
        return make_result(stat, kKpssProbs[0], l, NullHypothesis::Stationary, clamped);
    }
    double running = 0.0, ss = 0.0;
    for (double v : e) {
        running += v;
        ss += running * running;
    }
    stat = ss / (static_cast<double>(n) * static_cast<double>(n) * lam2);
    const double pv = kpss_pvalue(stat, cv, &clamped);
    return make_result(stat, pv, l, NullHypothesis::Stationary, clamped);
}

std::vector<double> first_difference(std::span<const double> x) {
    if (x.size() < 2) throw ConfigError("first_difference: need at least 2 observations");
    std::vector<double> out(x.size() - 1);
    for (std::size_t i = 1; i < x.size(); ++i) out[i - 1] = x[i] - x[i - 1];
    return out;
}

TrendFit time_trend(std::span<const double> x) {
    if (x.size() < 3) throw ConfigError("time_trend: need at least 3 observations");
    if (is_constant(x)) {
        TrendFit fit;
        fit.intercept = x[0];
        fit.slope = 0.0;
        fit.slope_p_value = 1.0;
        fit.increasing = false;
        return fit;
    }
    const auto n = static_cast<long>(x.size());
    Eigen::VectorXd y(n);
    Eigen::MatrixXd T(n, 1);
    for (long t = 0; t < n; ++t) {
        y[t] = x[static_cast<std::size_t>(t)];
        T(t, 0) = static_cast<double>(t + 1);
    }
    const RegressionResult r = ols(y, T, {"t"}, true);
    TrendFit fit;
    fit.intercept = r.coef[0];
    fit.slope = r.coef[1];
    fit.slope_p_value = r.p_value[1];
    fit.increasing = fit.slope > 0.0;
    return fit;
}

MovingSeries moving_vol_log(std::span<const double> x, int window) {
    if (window < 2) throw ConfigError("moving_vol_log: window must be >= 2");
    if (static_cast<long>(x.size()) < window + 1)
        throw ConfigError("moving_vol_log: need at least window+1 observations");
    for (double v : x)
        if (!(v > 0.0))
            throw DataError("moving_vol_log: non-positive value " + std::to_string(v) +
                            "; use moving_vol_signed for signed series");
    const std::size_t n = x.size();
    std::vector<double> r(n - 1);
    for (std::size_t i = 1; i < n; ++i) r[i - 1] = std::log(x[i] / x[i - 1]);

    MovingSeries out;
    out.first_index = window;
    out.values.reserve(n - static_cast<std::size_t>(window));
    const auto w = static_cast<std::size_t>(window);
    for (std::size_t t = w; t < n; ++t)
        out.values.push_back(mathx::stdev(std::span<const double>(r).subspan(t - w, w)));
    return out;
}

MovingSeries moving_vol_signed(std::span<const double> x, int ma_window, int vol_window) {
    if (ma_window < 1 || vol_window < 2) throw ConfigError("moving_vol_signed: invalid windows");
    if (static_cast<long>(x.size()) < ma_window + vol_window + 1)
        throw ConfigError("moving_vol_signed: need at least ma_window+vol_window+1 observations");
    constexpr double kEps = 1e-9;
    const std::size_t n = x.size();
    const auto ma = static_cast<std::size_t>(ma_window);
    const auto vw = static_cast<std::size_t>(vol_window);

    // Trailing mean, defined from index ma-1.
    std::vector<double> smooth(n, kNaN);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += x[i];
        if (i >= ma) acc -= x[i - ma];
        if (i >= ma - 1) smooth[i] = acc / static_cast<double>(ma);
    }

    // Percent difference of successive smoothed values; skip tiny bases.
    std::vector<double> pct(n, kNaN);
    for (std::size_t i = ma; i < n; ++i)
        if (std::fabs(smooth[i - 1]) > kEps) pct[i] = (smooth[i] - smooth[i - 1]) / std::fabs(smooth[i - 1]);

    MovingSeries out;
    out.first_index = static_cast<int>(ma + vw - 1);
    std::vector<double> buf;
    for (std::size_t t = ma + vw - 1; t < n; ++t) {
        buf.clear();
        for (std::size_t s = t + 1 - vw; s <= t; ++s)
            if (!std::isnan(pct[s])) buf.push_back(pct[s]);
        out.values.push_back(buf.size() >= 2 ? mathx::stdev(buf) : kNaN);
    }
    return out;
}

} // namespace tca::econ
