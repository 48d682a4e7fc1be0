#include "tca/core.hpp"

#include <algorithm>
#include <cmath>

namespace tca::core {

namespace {

double arrival_notional(const Order& order) {
    const double base = order.total_shares * order.arrival_price;
    if (base <= 0.0) throw DataError("order " + order.order_id + ": arrival notional must be positive");
    return base;
}

double to_bps(double ccy, double notional) { return 1e4 * ccy / notional; }

} // namespace

double paper_return(const Order& order, double final_price) {
    if (final_price <= 0.0) throw DataError("order " + order.order_id + ": final price must be positive");
    const double move = order.total_shares * (final_price - order.arrival_price);
    return order.side == Side::Buy ? move : -move;
}

CostPair implementation_shortfall(const Order& order) {
    const double notional = arrival_notional(order);
    double executed = 0.0;
    for (const Fill& f : order.fills) executed += f.shares * f.price;
    const double ccy = order.side == Side::Buy ? executed - notional : notional - executed;
    return {ccy, to_bps(ccy, notional)};
}

CostPair market_impact(const Order& order, ImpactMode mode) {
    const double notional = arrival_notional(order);
    const double sign = order.side == Side::Buy ? 1.0 : -1.0;
    double ccy = 0.0;
    if (mode == ImpactMode::Standard) {
        double prev = order.arrival_price;
        for (const Fill& f : order.fills) {
            ccy += std::max(sign * (f.price - prev), 0.0) * f.shares;
            prev = f.price;
        }
    } else {
        // Count only the part of each adverse move beyond the running extreme.
        double extreme = order.arrival_price;
        for (const Fill& f : order.fills) {
            ccy += std::max(sign * (f.price - extreme), 0.0) * f.shares;
            extreme = sign > 0.0 ? std::max(extreme, f.price) : std::min(extreme, f.price);
        }
    }
    return {ccy, to_bps(ccy, notional)};
}

CostPair market_timing(const Order& order) {
    const CostPair is = implementation_shortfall(order);
    const CostPair mi = market_impact(order, ImpactMode::Standard);
    return {is.ccy - mi.ccy, is.bps - mi.bps};
}

TradingTrajectory trajectory(const Order& order) {
    TradingTrajectory traj;
    traj.pending.reserve(order.fills.size() + 1);
    double pending = order.total_shares;
    traj.pending.push_back(pending);
    for (const Fill& f : order.fills) {
        pending -= f.shares;
        traj.pending.push_back(pending);
    }
    if (!traj.pending.empty()) traj.pending.back() = 0.0;  // fully filled by construction
    return traj;
}

CostRecord cost_record(const Order& order, double daily_volume, const FxTable& fx) {
    if (daily_volume <= 0.0)
        throw DataError("order " + order.order_id + ": daily volume must be positive for liquidity demand");
    CostRecord rec;
    rec.order_id = order.order_id;
    rec.security_id = order.security_id;
    rec.side = order.side;
    rec.arrival_date = order.arrival_date;
    rec.n_executions = static_cast<int>(order.fills.size());
    const CostPair is = implementation_shortfall(order);
    const CostPair mi = market_impact(order, ImpactMode::Standard);
    rec.mi_ccy = mi.ccy;
    rec.mt_ccy = is.ccy - mi.ccy;
    rec.is_ccy = rec.mi_ccy + rec.mt_ccy;  // recomposed so the identity is bit-exact
    rec.mi_bps = mi.bps;
    rec.mt_bps = is.bps - mi.bps;
    rec.is_bps = rec.mi_bps + rec.mt_bps;
    rec.liquidity_demand_pct = 100.0 * order.total_shares / daily_volume;
    rec.notional_usd = fx.to_usd(order.total_shares * order.arrival_price, order.arrival_date);
    return rec;
}

} // namespace tca::core
