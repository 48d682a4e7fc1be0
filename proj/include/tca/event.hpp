#pragma once
#include <set>
#include <string>
#include <vector>

#include "tca/data.hpp"

namespace tca::event {

// A tick-size phase: securities are affected when the split-adjusted
// ex-date close satisfies the price rule.
struct EventPhase {
    std::string label;
    Date ex_date = 0;
    bool above = true;       // true: close > threshold; false: close < threshold
    double threshold = 0.0;  // yen

    bool applies(double close) const { return above ? close > threshold : close < threshold; }
};

EventPhase phase1();  // 2014-01-14, close > 3000
EventPhase phase2();  // 2014-07-22, close < 5000
std::vector<EventPhase> default_phases();

enum class SchemeKind { DayBefore, WeekBefore, WideSpan };

struct ComparisonScheme {
    SchemeKind kind = SchemeKind::DayBefore;
    std::string label;
    Date before = 0;
    Date after = 0;
};

// The three before/after date pairs of a phase.
std::vector<ComparisonScheme> default_schemes(const EventPhase& phase);

enum class Metric { Spread, ExecSize };

inline const char* to_string(Metric m) { return m == Metric::Spread ? "Spread" : "ExecSize"; }

struct AffectedResult {
    std::set<std::string> securities;
    std::vector<std::string> warnings;  // securities skipped for missing ex-date data
};

AffectedResult affected_securities(const data::Panel& panel, const EventPhase& phase);

struct SecurityChange {
    std::string security_id;
    bool affected = false;
    double before = 0.0;
    double after = 0.0;
    double pct_change = 0.0;  // 100*(after-before)/before
};

struct BirdsEyeSummary {
    std::string phase;
    std::string scheme;
    Metric metric = Metric::Spread;
    double pct_decreased_affected = 0.0;
    double pct_decreased_all = 0.0;
    int n_affected = 0;
    int n_all = 0;
    std::vector<SecurityChange> per_security;
};

// Per-security before/after comparison of a metric. Securities missing
// either date (or with an undefined metric) are excluded from all
// denominators; ties count as not decreased. min_before_spread, when
// positive, restricts to names whose before-date spread exceeds it.
BirdsEyeSummary birdseye_compare(const data::Panel& panel, const EventPhase& phase, const ComparisonScheme& scheme,
                                 Metric metric, double min_before_spread = 0.0);

enum class Weighting { EW, VW, TW };
enum class AggMetric { Spread, Price, SpreadOverPrice, TradeSize };

inline const char* to_string(Weighting w) { return w == Weighting::EW ? "EW" : (w == Weighting::VW ? "VW" : "TW"); }

inline const char* to_string(AggMetric m) {
    switch (m) {
        case AggMetric::Spread: return "Spread";
        case AggMetric::Price: return "Price";
        case AggMetric::SpreadOverPrice: return "SpreadOverPrice";
        default: return "TradeSize";
    }
}

// Cross-sectional weighted average over one day's records.
double weighted_aggregate(const std::vector<const SecurityDay*>& day, Weighting weighting, AggMetric metric);

// Left-closed right-open bucket edges; the last bucket is open-ended.
struct BucketScheme {
    std::vector<double> edges;        // interior edges, ascending
    std::vector<std::string> labels;  // edges.size()+1 labels
};

BucketScheme default_liquidity_buckets();                 // percent of daily volume, 5 buckets
BucketScheme notional_scheme_a();                         // MM USD: 0-1, 1-5, 5-10, 10+
BucketScheme notional_scheme_b();                         // MM USD: 0-1, 1-10, 10-25, 25+

std::string bucket_label(double value, const BucketScheme& scheme);

std::string bucket_liquidity(double liquidity_demand_pct);
std::string bucket_notional(double notional_usd, char scheme);  // 'A' or 'B'

} // namespace tca::event
