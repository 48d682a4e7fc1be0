#pragma once
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tca/types.hpp"

namespace tca::mie {

// (price upper bound, tick) pairs, ascending; the last bound is +inf.
using TickSchedule = std::vector<std::pair<double, double>>;

TickSchedule default_tick_schedule();
double tick_for_price(double price, const TickSchedule& schedule);

// Empirical per-interval distributions from a recent window of daily data.
struct MarketProfile {
    std::string security_id;
    int lookback_days = 0;
    int intervals_per_day = 10;
    std::vector<double> volume_dist;  // tradable shares per interval
    std::vector<double> move_dist;    // price change per interval, yen
    double tick_size = 0.0;
    double ref_price = 0.0;           // last close; simulation start price
};

enum class Style { Passive, Neutral, Aggressive };

// Extra tick levels crossed on each fill: 0 / 1 / 2.
inline int ticks_crossed(Style s) { return s == Style::Passive ? 0 : (s == Style::Neutral ? 1 : 2); }

Style style_from_string(std::string_view name);

struct SimParams {
    double participation_rate = 0.1;  // fraction of interval volume consumed, (0,1]
    Style style = Style::Neutral;
    double start_frac = 0.0;          // fraction of the day when trading starts
    double end_frac = 1.0;            // and ends; start < end
    int n_paths = 200;
    std::uint64_t seed = 1;

    void validate() const;
};

struct MieResult {
    double mean_bps = 0.0;
    double stdev_bps = 0.0;
    double mean_executions = 0.0;
    int n_paths = 0;
};

// Daily volume split uniformly across intervals; close-to-close moves scaled
// by sqrt(1/intervals) to the interval horizon.
MarketProfile build_profile(std::span<const SecurityDay> history, int lookback_days, int intervals_per_day,
                            const TickSchedule& schedule);

inline MarketProfile build_profile(std::span<const SecurityDay> history, int lookback_days) {
    return build_profile(history, lookback_days, 10, default_tick_schedule());
}

// One simulated execution path; fills carry the path's executable prices so
// it can be replayed through the cost decomposition.
struct SimPath {
    std::vector<Fill> fills;
    double impact_ccy = 0.0;
    double impact_bps = 0.0;
};

SimPath simulate_path(double order_size, const MarketProfile& profile, const SimParams& params,
                      std::uint64_t path_index);

// Deterministic for a given (inputs, seed); paths use independent
// (seed, path_index) substreams.
MieResult estimate_market_impact(double order_size, const MarketProfile& profile, const SimParams& params);

// Mean absolute error between estimates and realized market impact, bps.
double calibration_error(std::span<const double> estimated_bps, std::span<const double> realized_bps);

} // namespace tca::mie
