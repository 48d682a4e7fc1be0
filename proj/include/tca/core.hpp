#pragma once
#include <string>
#include <vector>

#include "tca/types.hpp"

namespace tca::core {

// Pending-share counts W_1..W_{T+1}; W_1 = total shares, W_{T+1} = 0.
struct TradingTrajectory {
    std::vector<double> pending;
};

enum class ImpactMode { Standard, NetNewLevels };

// Currency amounts in yen, bps relative to arrival notional (total_shares *
// arrival_price). Sign convention is cost-positive: adverse moves increase
// the value. A presentation flag at the output layer negates for the
// return-denominated view.
struct CostRecord {
    std::string order_id;
    std::string security_id;
    Side side = Side::Buy;
    Date arrival_date = 0;
    int n_executions = 0;
    double is_ccy = 0.0, mi_ccy = 0.0, mt_ccy = 0.0;
    double is_bps = 0.0, mi_bps = 0.0, mt_bps = 0.0;
    double liquidity_demand_pct = 0.0;  // order shares / total daily volume, percent
    double notional_usd = 0.0;
};

struct CostPair {
    double ccy = 0.0;
    double bps = 0.0;
};

// Buy: S*P_T - S*P_0; Sell mirrored.
double paper_return(const Order& order, double final_price);

// Total slippage. Buy: sum(S_t*P_t) - S*P_0; Sell: S*P_0 - sum(S_t*P_t).
CostPair implementation_shortfall(const Order& order);

// Standard: adverse fill-to-fill price increments weighted by fill shares,
// with P_0 as the base at t=0. NetNewLevels: an adverse move counts only
// for the portion beyond the running adverse extreme.
CostPair market_impact(const Order& order, ImpactMode mode = ImpactMode::Standard);

// implementation_shortfall - market_impact(Standard); any sign.
CostPair market_timing(const Order& order);

TradingTrajectory trajectory(const Order& order);

CostRecord cost_record(const Order& order, double daily_volume, const FxTable& fx);

} // namespace tca::core
