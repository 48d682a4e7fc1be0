#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "tca/types.hpp"

namespace tca::synth {

// Multiplicative regime changes applied to affected names from ex-date on.
struct PhaseEffect {
    double spread_factor = 0.5;
    double trade_size_factor = 0.8;
};

struct SynthConfig {
    int n_securities = 100;
    Date start_date = dates::from_civil(2013, 7, 1);
    Date end_date = dates::from_civil(2014, 12, 10);
    std::vector<Date> holidays = {dates::from_civil(2014, 1, 13), dates::from_civil(2014, 7, 21)};

    // price paths: per-security base level, geometric random walk
    double min_base_price = 300.0;
    double max_base_price = 20000.0;
    double price_vol = 0.015;

    // spreads: price-proportional floor times regime factor times noise
    double spread_per_price = 3e-4;
    double min_spread = 0.1;
    double spread_noise = 0.02;
    PhaseEffect phase1_effect;
    PhaseEffect phase2_effect;

    // volumes and trade sizes
    double min_base_volume = 2e5;
    double max_base_volume = 2e7;
    double volume_noise = 0.3;
    double volume_drift = 0.0;           // per-day drift of log volume
    double base_trade_size = 800.0;      // shares per trade before regimes
    double trade_size_noise = 0.05;

    // spread/volume jump from this date to the end (Bank-of-Japan style shock)
    bool outlier_enabled = true;
    Date outlier_date = dates::from_civil(2014, 10, 31);
    double outlier_spread_mult = 2.0;
    double outlier_volume_mult = 1.3;

    // USD/JPY random walk
    double fx_start = 100.0;
    double fx_vol = 0.004;

    int n_splits = 3;

    // orders and ground-truth costs
    long n_orders = 250000;
    double cost_base_bps = 40.0;
    double bucket_effect_bps = -10.0;      // extra cost in large-notional orders
    double effect_threshold_usd = 10e6;    // applies when notional >= threshold
    Date effect_start = dates::from_civil(2014, 1, 14);  // and date >= this
    double cost_noise_bps = 5.0;
    double mt_noise_bps = 20.0;
    int max_fill_pairs = 5;  // fills come in (impact, timing) pairs, <= 10 fills
    std::uint64_t seed = 42;

    void validate() const;
};

struct SynthMarket {
    std::vector<SecurityDay> daily;  // raw (pre-adjustment) values, as an exchange would publish
    std::vector<SplitRatio> splits;
    FxTable fx;
    std::vector<Date> trading_dates;
};

struct TruthLabel {
    std::string order_id;
    double target_mi_bps = 0.0;
    double target_mt_bps = 0.0;
    double bucket_effect_bps = 0.0;
};

struct SynthOrders {
    std::vector<Order> orders;
    std::vector<TruthLabel> truth;
};

SynthMarket generate_market(const SynthConfig& config);

// Orders with fill paths constructed so the cost decomposition recovers the
// configured market impact exactly; timing noise is zero-mean.
SynthOrders generate_orders(const SynthConfig& config, const SynthMarket& market);

inline const std::vector<std::string> kTruthHeader = {"order_id", "target_mi_bps", "target_mt_bps",
                                                      "bucket_effect_bps"};

void write_truth(const std::string& path, const std::vector<TruthLabel>& truth);
std::vector<TruthLabel> parse_truth(const std::string& path);

} // namespace tca::synth
