#include "tca/mie.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tca/mathx.hpp"
#include "tca/rng.hpp"

namespace tca::mie {

TickSchedule default_tick_schedule() {
    return {{3000.0, 1.0},
            {5000.0, 5.0},
            {30000.0, 10.0},
            {50000.0, 50.0},
            {std::numeric_limits<double>::infinity(), 100.0}};
}

double tick_for_price(double price, const TickSchedule& schedule) {
    if (price <= 0.0) throw ConfigError("tick_for_price: price must be positive");
    for (const auto& [bound, tick] : schedule)
        if (price < bound) return tick;
    throw ConfigError("tick schedule does not cover price " + std::to_string(price));
}

Style style_from_string(std::string_view name) {
    if (name == "Passive") return Style::Passive;
    if (name == "Neutral") return Style::Neutral;
    if (name == "Aggressive") return Style::Aggressive;
    throw ConfigError("unknown trading style '" + std::string(name) + "'");
}

void SimParams::validate() const {
    if (!(participation_rate > 0.0 && participation_rate <= 1.0))
        throw ConfigError("participation_rate must be in (0,1]");
    if (!(start_frac >= 0.0 && start_frac < end_frac && end_frac <= 1.0))
        throw ConfigError("require 0 <= start_frac < end_frac <= 1");
    if (n_paths < 1) throw ConfigError("n_paths must be >= 1");
}

MarketProfile build_profile(std::span<const SecurityDay> history, int lookback_days, int intervals_per_day,
                            const TickSchedule& schedule) {
    if (lookback_days < 2) throw ConfigError("build_profile: lookback_days must be >= 2");
    if (intervals_per_day < 1) throw ConfigError("build_profile: intervals_per_day must be >= 1");
    if (static_cast<int>(history.size()) < lookback_days)
        throw DataError("build_profile: need " + std::to_string(lookback_days) + " days of history, have " +
                        std::to_string(history.size()));

    const auto recent = history.subspan(history.size() - static_cast<std::size_t>(lookback_days));
    MarketProfile profile;
    profile.security_id = recent[0].security_id;
    profile.lookback_days = lookback_days;
    profile.intervals_per_day = intervals_per_day;
    const double scale = std::sqrt(1.0 / intervals_per_day);
    for (std::size_t i = 0; i < recent.size(); ++i) {
        profile.volume_dist.push_back(recent[i].volume / intervals_per_day);
        if (i > 0) profile.move_dist.push_back((recent[i].close - recent[i - 1].close) * scale);
    }
    profile.ref_price = recent.back().close;
    profile.tick_size = tick_for_price(profile.ref_price, schedule);
    return profile;
}

SimPath simulate_path(double order_size, const MarketProfile& profile, const SimParams& params,
                      std::uint64_t path_index) {
    params.validate();
    if (profile.volume_dist.empty() || profile.move_dist.empty())
        throw ConfigError("estimate_market_impact: empty market profile");
    if (order_size < 0.0) throw ConfigError("order size must be >= 0");

    SimPath path;
    if (order_size == 0.0) return path;

    rng::Stream rng(params.seed, path_index);
    const double tick_cost = ticks_crossed(params.style) * profile.tick_size;
    const int usable = std::max(
        1, static_cast<int>(std::lround(profile.intervals_per_day * (params.end_frac - params.start_frac))));

    double price = profile.ref_price;
    double prev_fill = profile.ref_price;
    double remaining = order_size;
    int interval_in_day = 0;
    int seq = 1;
    long stale = 0;
    while (remaining > 0.0) {
        if (interval_in_day == usable) {
            // Market drifts through the rest of the day without us.
            for (int k = usable; k < profile.intervals_per_day; ++k)
                price += profile.move_dist[rng.next_u64() % profile.move_dist.size()];
            interval_in_day = 0;
        }
        const double v = profile.volume_dist[rng.next_u64() % profile.volume_dist.size()];
        const double m = profile.move_dist[rng.next_u64() % profile.move_dist.size()];
        const double take = std::min(remaining, params.participation_rate * v);
        if (take > 0.0) {
            const double exec = price + tick_cost;  // crossing levels is adverse by construction
            path.impact_ccy += std::max(exec - prev_fill, 0.0) * take;
            path.fills.push_back({seq++, exec, take});
            prev_fill = exec;
            price = exec;  // own impact persists in the path
            remaining -= take;
            stale = 0;
        } else if (++stale > 1000000) {
            throw DataError("simulation stalled: profile volume is zero");
        }
        price += m;
        ++interval_in_day;
    }
    path.impact_bps = 1e4 * path.impact_ccy / (order_size * profile.ref_price);
    return path;
}

MieResult estimate_market_impact(double order_size, const MarketProfile& profile, const SimParams& params) {
    params.validate();
    if (profile.volume_dist.empty() || profile.move_dist.empty())
        throw ConfigError("estimate_market_impact: empty market profile");
    if (order_size < 0.0) throw ConfigError("order size must be >= 0");

    MieResult result;
    result.n_paths = params.n_paths;
    if (order_size == 0.0) return result;

    std::vector<double> bps;
    bps.reserve(static_cast<std::size_t>(params.n_paths));
    double total_execs = 0.0;
    for (int p = 0; p < params.n_paths; ++p) {
        const SimPath path = simulate_path(order_size, profile, params, static_cast<std::uint64_t>(p));
        bps.push_back(path.impact_bps);
        total_execs += static_cast<double>(path.fills.size());
    }
    result.mean_bps = mathx::mean(bps);
    result.stdev_bps = mathx::stdev(bps);
    result.mean_executions = total_execs / params.n_paths;
    return result;
}

double calibration_error(std::span<const double> estimated_bps, std::span<const double> realized_bps) {
    if (estimated_bps.size() != realized_bps.size())
        throw ConfigError("calibration_error: series lengths differ");
    if (estimated_bps.empty()) throw ConfigError("calibration_error: no pairs");
    double total = 0.0;
    for (std::size_t i = 0; i < estimated_bps.size(); ++i) total += std::fabs(estimated_bps[i] - realized_bps[i]);
    return total / static_cast<double>(estimated_bps.size());
}

} // namespace tca::mie
