#include "tca/event.hpp"

#include <cmath>
#include <limits>

namespace tca::event {

EventPhase phase1() { return {"Phase1", dates::from_civil(2014, 1, 14), true, 3000.0}; }
EventPhase phase2() { return {"Phase2", dates::from_civil(2014, 7, 22), false, 5000.0}; }

std::vector<EventPhase> default_phases() { return {phase1(), phase2()}; }

std::vector<ComparisonScheme> default_schemes(const EventPhase& phase) {
    using dates::from_civil;
    if (phase.label == "Phase1")
        return {
            {SchemeKind::DayBefore, "DayBefore", from_civil(2014, 1, 10), from_civil(2014, 1, 14)},
            {SchemeKind::WeekBefore, "WeekBefore", from_civil(2014, 1, 8), from_civil(2014, 1, 15)},
            {SchemeKind::WideSpan, "WideSpan", from_civil(2014, 1, 6), from_civil(2014, 1, 16)},
        };
    return {
        {SchemeKind::DayBefore, "DayBefore", from_civil(2014, 7, 18), from_civil(2014, 7, 22)},
        {SchemeKind::WeekBefore, "WeekBefore", from_civil(2014, 7, 17), from_civil(2014, 7, 24)},
        {SchemeKind::WideSpan, "WideSpan", from_civil(2014, 7, 14), from_civil(2014, 7, 28)},
    };
}

AffectedResult affected_securities(const data::Panel& panel, const EventPhase& phase) {
    AffectedResult res;
    for (const std::string& sec : panel.securities()) {
        const SecurityDay* day = panel.find(sec, phase.ex_date);
        if (day == nullptr) {
            res.warnings.push_back(sec + ": no record on ex-date " + dates::format(phase.ex_date) +
                                   ", excluded from " + phase.label);
            continue;
        }
        if (phase.applies(day->close)) res.securities.insert(sec);
    }
    return res;
}

namespace {

// NaN when the metric is undefined for the record.
double metric_value(const SecurityDay& d, Metric m) {
    if (m == Metric::Spread) return d.avg_spread;
    if (d.trade_count <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    return d.volume / d.trade_count;
}

} // namespace

BirdsEyeSummary birdseye_compare(const data::Panel& panel, const EventPhase& phase, const ComparisonScheme& scheme,
                                 Metric metric, double min_before_spread) {
    const AffectedResult affected = affected_securities(panel, phase);
    BirdsEyeSummary out;
    out.phase = phase.label;
    out.scheme = scheme.label;
    out.metric = metric;

    int dec_affected = 0, dec_all = 0;
    for (const std::string& sec : panel.securities()) {
        const SecurityDay* before = panel.find(sec, scheme.before);
        const SecurityDay* after = panel.find(sec, scheme.after);
        if (before == nullptr || after == nullptr) continue;
        if (min_before_spread > 0.0 && before->avg_spread <= min_before_spread) continue;
        const double b = metric_value(*before, metric);
        const double a = metric_value(*after, metric);
        if (std::isnan(b) || std::isnan(a)) continue;

        SecurityChange change;
        change.security_id = sec;
        change.affected = affected.securities.count(sec) > 0;
        change.before = b;
        change.after = a;
        change.pct_change = b != 0.0 ? 100.0 * (a - b) / b : std::numeric_limits<double>::quiet_NaN();
        out.per_security.push_back(change);

        const bool decreased = a < b;  // ties are not decreases
        ++out.n_all;
        if (decreased) ++dec_all;
        if (change.affected) {
            ++out.n_affected;
            if (decreased) ++dec_affected;
        }
    }
    if (out.n_all == 0)
        throw DataError(phase.label + "/" + scheme.label + ": no security has records on both " +
                        dates::format(scheme.before) + " and " + dates::format(scheme.after));
    out.pct_decreased_all = 100.0 * dec_all / out.n_all;
    out.pct_decreased_affected = out.n_affected > 0 ? 100.0 * dec_affected / out.n_affected : 0.0;
    return out;
}

double weighted_aggregate(const std::vector<const SecurityDay*>& day, Weighting weighting, AggMetric metric) {
    if (day.empty()) throw DataError("weighted_aggregate: empty cross-section");
    double num = 0.0, den = 0.0;
    for (const SecurityDay* d : day) {
        double value;
        switch (metric) {
            case AggMetric::Spread: value = d->avg_spread; break;
            case AggMetric::Price: value = d->close; break;
            case AggMetric::SpreadOverPrice: value = d->avg_spread / d->close; break;
            default:
                if (d->trade_count <= 0.0) continue;  // trade size undefined
                value = d->volume / d->trade_count;
                break;
        }
        double w;
        switch (weighting) {
            case Weighting::EW: w = 1.0; break;
            case Weighting::VW: w = d->volume; break;
            default: w = d->trade_count; break;
        }
        num += w * value;
        den += w;
    }
    if (den <= 0.0) throw DataError("weighted_aggregate: weights sum to zero");
    return num / den;
}

BucketScheme default_liquidity_buckets() {
    return {{1.0, 5.0, 10.0, 25.0}, {"0-1%", "1-5%", "5-10%", "10-25%", "25%+"}};
}

BucketScheme notional_scheme_a() { return {{1e6, 5e6, 10e6}, {"0-1MM", "1-5MM", "5-10MM", "10MM+"}}; }

BucketScheme notional_scheme_b() { return {{1e6, 10e6, 25e6}, {"0-1MM", "1-10MM", "10-25MM", "25MM+"}}; }

std::string bucket_label(double value, const BucketScheme& scheme) {
    if (value < 0.0 || std::isnan(value)) throw DataError("bucket value must be non-negative");
    std::size_t i = 0;
    while (i < scheme.edges.size() && value >= scheme.edges[i]) ++i;
    return scheme.labels[i];
}

std::string bucket_liquidity(double liquidity_demand_pct) {
    static const BucketScheme scheme = default_liquidity_buckets();
    return bucket_label(liquidity_demand_pct, scheme);
}

std::string bucket_notional(double notional_usd, char scheme) {
    static const BucketScheme a = notional_scheme_a();
    static const BucketScheme b = notional_scheme_b();
    if (scheme == 'A' || scheme == 'a') return bucket_label(notional_usd, a);
    if (scheme == 'B' || scheme == 'b') return bucket_label(notional_usd, b);
    throw ConfigError(std::string("unknown notional bucket scheme '") + scheme + "'");
}

} // namespace tca::event
