#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tca/core.hpp"
#include "tca/rng.hpp"

using namespace tca;
using core::ImpactMode;

namespace {

Order make_order(Side side, double p0, const std::vector<std::pair<double, double>>& price_shares) {
    Order o;
    o.order_id = "T1";
    o.security_id = "S";
    o.side = side;
    o.arrival_date = dates::from_civil(2014, 1, 6);
    o.arrival_price = p0;
    double total = 0.0;
    int seq = 1;
    for (const auto& [price, shares] : price_shares) {
        o.fills.push_back({seq++, price, shares});
        total += shares;
    }
    o.total_shares = total;
    return o;
}

// Random order with fills within +-3% of the reference price.
Order random_order(rng::Stream& rng, int max_fills = 10) {
    const Side side = rng.uniform() < 0.5 ? Side::Buy : Side::Sell;
    const double p0 = rng.uniform(100.0, 10000.0);
    const int nf = static_cast<int>(rng.uniform_int(1, max_fills));
    std::vector<std::pair<double, double>> fills;
    double price = p0;
    for (int i = 0; i < nf; ++i) {
        price *= 1.0 + rng.uniform(-0.01, 0.01);
        fills.emplace_back(price, static_cast<double>(rng.uniform_int(1, 10000)));
    }
    return make_order(side, p0, fills);
}

} // namespace

TEST_CASE("paper_return") {
    const auto buy = make_order(Side::Buy, 100.0, {{100.0, 100.0}});
    CHECK(core::paper_return(buy, 101.0) == doctest::Approx(100.0));
    CHECK(core::paper_return(buy, 100.0) == 0.0);
    const auto sell = make_order(Side::Sell, 100.0, {{100.0, 100.0}});
    CHECK(core::paper_return(sell, 99.0) == doctest::Approx(100.0));
}

TEST_CASE("implementation_shortfall") {
    const auto buy = make_order(Side::Buy, 100.0, {{101.0, 10.0}, {100.0, 10.0}, {102.0, 10.0}});
    const auto is = core::implementation_shortfall(buy);
    CHECK(is.ccy == doctest::Approx(30.0));
    CHECK(is.bps == doctest::Approx(100.0));

    const auto flat = make_order(Side::Buy, 100.0, {{100.0, 10.0}, {100.0, 20.0}});
    CHECK(core::implementation_shortfall(flat).ccy == 0.0);

    const auto sell = make_order(Side::Sell, 100.0, {{101.0, 10.0}, {100.0, 10.0}, {102.0, 10.0}});
    CHECK(core::implementation_shortfall(sell).ccy == doctest::Approx(-30.0));
}

TEST_CASE("market_impact: standard and net-new-levels") {
    const auto buy = make_order(Side::Buy, 100.0, {{101.0, 10.0}, {100.0, 10.0}, {102.0, 10.0}});
    CHECK(core::market_impact(buy, ImpactMode::Standard).ccy == doctest::Approx(30.0));

    const auto down = make_order(Side::Buy, 100.0, {{100.0, 10.0}, {99.5, 10.0}, {99.0, 10.0}});
    CHECK(core::market_impact(down, ImpactMode::Standard).ccy == 0.0);

    const auto revisit = make_order(Side::Buy, 100.0, {{101.0, 10.0}, {100.0, 10.0}, {101.0, 10.0}});
    CHECK(core::market_impact(revisit, ImpactMode::Standard).ccy == doctest::Approx(20.0));
    CHECK(core::market_impact(revisit, ImpactMode::NetNewLevels).ccy == doctest::Approx(10.0));
}

TEST_CASE("market_timing") {
    const auto buy = make_order(Side::Buy, 100.0, {{101.0, 10.0}, {100.0, 10.0}, {102.0, 10.0}});
    CHECK(core::market_timing(buy).ccy == doctest::Approx(0.0));

    const auto flat = make_order(Side::Buy, 100.0, {{100.0, 30.0}});
    CHECK(core::market_timing(flat).ccy == 0.0);

    const auto lucky = make_order(Side::Buy, 100.0, {{99.0, 100.0}});
    CHECK(core::implementation_shortfall(lucky).ccy == doctest::Approx(-100.0));
    CHECK(core::market_impact(lucky).ccy == 0.0);
    CHECK(core::market_timing(lucky).ccy == doctest::Approx(-100.0));
}

TEST_CASE("trajectory") {
    const auto o = make_order(Side::Buy, 100.0, {{100.0, 10.0}, {100.0, 10.0}, {100.0, 10.0}});
    const auto traj = core::trajectory(o);
    REQUIRE(traj.pending.size() == 4);
    CHECK(traj.pending[0] == 30.0);
    CHECK(traj.pending[1] == 20.0);
    CHECK(traj.pending[2] == 10.0);
    CHECK(traj.pending[3] == 0.0);

    const auto single = make_order(Side::Sell, 50.0, {{50.0, 7.0}});
    const auto traj1 = core::trajectory(single);
    REQUIRE(traj1.pending.size() == 2);
    CHECK(traj1.pending[0] == 7.0);
    CHECK(traj1.pending[1] == 0.0);
}

TEST_CASE("trajectory: both defining sums agree on random orders") {
    rng::Stream rng(11, 0);
    for (int i = 0; i < 200; ++i) {
        const Order o = random_order(rng);
        const auto traj = core::trajectory(o);
        REQUIRE(traj.pending.size() == o.fills.size() + 1);
        for (std::size_t t = 0; t < o.fills.size(); ++t) {
            // W_t = S_bar - sum_{j<t} S_j
            double left = o.total_shares;
            for (std::size_t j = 0; j < t; ++j) left -= o.fills[j].shares;
            // W_t = sum_{j>=t} S_j
            double right = 0.0;
            for (std::size_t j = t; j < o.fills.size(); ++j) right += o.fills[j].shares;
            CHECK(traj.pending[t] == doctest::Approx(left).epsilon(1e-12));
            CHECK(traj.pending[t] == doctest::Approx(right).epsilon(1e-12));
            CHECK(traj.pending[t] - traj.pending[t + 1] == doctest::Approx(o.fills[t].shares).epsilon(1e-12));
        }
        CHECK(traj.pending.back() == 0.0);
    }
}

TEST_CASE("cost_record: liquidity demand and notional") {
    FxTable fx;
    fx.add(dates::from_civil(2014, 1, 6), 120.0);
    Order o = make_order(Side::Buy, 100.0, {{101.0, 5000.0}, {100.5, 5000.0}});
    o.total_shares = 10000.0;
    const auto rec = core::cost_record(o, 1000000.0, fx);
    CHECK(rec.liquidity_demand_pct == doctest::Approx(1.0));
    CHECK(rec.notional_usd == doctest::Approx(10000.0 * 100.0 / 120.0));
    CHECK(rec.n_executions == 2);
    CHECK_THROWS_AS(core::cost_record(o, 0.0, fx), DataError);
    // 120MM JPY at 120 -> 1MM USD
    Order big = make_order(Side::Buy, 12000.0, {{12000.0, 10000.0}});
    CHECK(core::cost_record(big, 1000000.0, fx).notional_usd == doctest::Approx(1000000.0));
}

TEST_CASE("decomposition identity and dual-route MI on random orders") {
    rng::Stream rng(13, 0);
    FxTable fx;
    fx.add(dates::from_civil(2014, 1, 6), 100.0);
    for (int i = 0; i < 2000; ++i) {
        const Order o = random_order(rng);
        const auto rec = core::cost_record(o, 2e6, fx);
        CHECK(rec.is_ccy == rec.mi_ccy + rec.mt_ccy);
        CHECK(rec.is_bps == rec.mi_bps + rec.mt_bps);

        // independent fill-walk oracle
        const double mi_std = core::market_impact(o, ImpactMode::Standard).ccy;
        const double mi_nnl = core::market_impact(o, ImpactMode::NetNewLevels).ccy;
        CHECK(mi_std == doctest::Approx(oracle::mi_standard_ccy(o)).epsilon(1e-12));
        CHECK(mi_nnl == doctest::Approx(oracle::mi_net_new_levels_ccy(o)).epsilon(1e-12));
        CHECK(core::implementation_shortfall(o).ccy == doctest::Approx(oracle::is_ccy(o)).epsilon(1e-12));
        CHECK(mi_std >= mi_nnl);
        CHECK(mi_nnl >= 0.0);
    }
}

TEST_CASE("side antisymmetry: mirrored prices and flipped side leave costs unchanged") {
    rng::Stream rng(17, 0);
    for (int i = 0; i < 500; ++i) {
        const Order o = random_order(rng);
        Order mirror = o;
        mirror.side = o.side == Side::Buy ? Side::Sell : Side::Buy;
        for (auto& f : mirror.fills) f.price = 2.0 * o.arrival_price - f.price;
        // tolerance scaled to notional: the price mirror itself rounds
        const double tol = 1e-9 * o.total_shares * o.arrival_price;
        CHECK(std::fabs(core::implementation_shortfall(o).ccy - core::implementation_shortfall(mirror).ccy) <= tol);
        CHECK(std::fabs(core::market_impact(o).ccy - core::market_impact(mirror).ccy) <= tol);
        CHECK(std::fabs(core::market_timing(o).ccy - core::market_timing(mirror).ccy) <= tol);
        CHECK(std::fabs(core::market_impact(o, ImpactMode::NetNewLevels).ccy -
                        core::market_impact(mirror, ImpactMode::NetNewLevels).ccy) <= tol);
    }
}

TEST_CASE("scale equivariance: prices times k scale currency, leave bps unchanged") {
    rng::Stream rng(19, 0);
    for (int i = 0; i < 200; ++i) {
        const Order o = random_order(rng);
        const double k = rng.uniform(0.1, 10.0);
        Order scaled = o;
        scaled.arrival_price *= k;
        for (auto& f : scaled.fills) f.price *= k;
        const auto is0 = core::implementation_shortfall(o);
        const auto is1 = core::implementation_shortfall(scaled);
        CHECK(is1.ccy == doctest::Approx(k * is0.ccy).epsilon(1e-9));
        CHECK(is1.bps == doctest::Approx(is0.bps).epsilon(1e-9));
        const auto mi0 = core::market_impact(o);
        const auto mi1 = core::market_impact(scaled);
        CHECK(mi1.ccy == doctest::Approx(k * mi0.ccy).epsilon(1e-9));
        CHECK(mi1.bps == doctest::Approx(mi0.bps).epsilon(1e-9));
    }
}
