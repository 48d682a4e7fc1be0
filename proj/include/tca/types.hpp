#pragma once
#include <map>
#include <string>
#include <vector>

#include "tca/dates.hpp"

namespace tca {

enum class Side { Buy, Sell };

inline const char* to_string(Side s) { return s == Side::Buy ? "Buy" : "Sell"; }

inline Side side_from_string(std::string_view s) {
    if (s == "Buy") return Side::Buy;
    if (s == "Sell") return Side::Sell;
    throw DataError("invalid side '" + std::string(s) + "' (expected Buy|Sell)");
}

// One security-day of exchange statistics. Volume and trade count are
// integral in files but held as doubles so split adjustment can scale them.
struct SecurityDay {
    std::string security_id;
    Date date = 0;
    double close = 0.0;       // yen per share
    double avg_spread = 0.0;  // yen per share
    double volume = 0.0;      // shares
    double trade_count = 0.0;
};

struct Fill {
    int seq = 0;      // 1-based interval index t
    double price = 0.0;
    double shares = 0.0;
};

// Fully-filled order: fill shares sum to total_shares.
struct Order {
    std::string order_id;
    std::string security_id;
    Side side = Side::Buy;
    Date arrival_date = 0;
    double arrival_price = 0.0;  // P0, the reference price
    double total_shares = 0.0;
    std::vector<Fill> fills;     // seq strictly increasing
};

struct SplitRatio {
    std::string security_id;
    Date ex_date = 0;
    double ratio = 1.0;
};

struct SampleWindow {
    std::string label;
    Date start = 0;
    Date end = 0;  // inclusive

    bool contains(Date d) const { return d >= start && d <= end; }
};

// The six sample windows used throughout the deep-dive pipelines.
std::vector<SampleWindow> default_sample_windows();

// USD/JPY rates, one per date; lookups fall back to the nearest prior
// rate within 7 calendar days (FX feeds skip weekends and holidays).
class FxTable {
public:
    void add(Date d, double usd_jpy);
    double rate_on(Date d) const;
    double to_usd(double notional_jpy, Date d) const;
    const std::map<Date, double>& rates() const { return rates_; }
    bool empty() const { return rates_.empty(); }

private:
    std::map<Date, double> rates_;
};

} // namespace tca
