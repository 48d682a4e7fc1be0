#pragma once
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tca/types.hpp"

namespace tca::data {

// CSV schemas (UTF-8, comma-separated, '.' decimal point).
inline const std::vector<std::string> kDailyHeader = {"security_id", "date", "close_yen", "avg_spread_yen",
                                                      "volume_shares", "trade_count"};
inline const std::vector<std::string> kOrdersHeader = {"order_id", "security_id", "side", "arrival_date",
                                                       "arrival_price_yen", "total_shares"};
inline const std::vector<std::string> kFillsHeader = {"order_id", "seq", "price_yen", "shares"};
inline const std::vector<std::string> kFxHeader = {"date", "usd_jpy"};
inline const std::vector<std::string> kSplitsHeader = {"security_id", "ex_date", "ratio"};

// Parsers reject malformed rows with file:line context and return
// deterministically ordered records.
std::vector<SecurityDay> parse_daily(const std::string& path);
std::vector<Order> parse_orders(const std::string& orders_path, const std::string& fills_path);
FxTable parse_fx(const std::string& path);
std::vector<SplitRatio> parse_splits(const std::string& path);

void write_daily(const std::string& path, std::span<const SecurityDay> rows);
void write_orders(const std::string& orders_path, const std::string& fills_path, std::span<const Order> orders);
void write_fx(const std::string& path, const FxTable& fx);
void write_splits(const std::string& path, std::span<const SplitRatio> splits);

// For dates strictly before the ex-date: price and spread divided by the
// ratio, volume multiplied by it (trade count is unchanged). Records on or
// after the ex-date are untouched.
std::vector<SecurityDay> adjust_for_splits(std::vector<SecurityDay> days, std::vector<SplitRatio> splits);

inline double to_usd(double notional_jpy, Date d, const FxTable& fx) { return fx.to_usd(notional_jpy, d); }

// Per-label slices; a record belongs to every window containing its date.
std::map<std::string, std::vector<SecurityDay>> slice_samples(std::span<const SecurityDay> dataset,
                                                              std::span<const SampleWindow> windows);

// Indexed view over a sorted daily dataset: per-security series and
// per-date cross-sections.
class Panel {
public:
    explicit Panel(std::span<const SecurityDay> rows);

    const std::vector<std::string>& securities() const { return securities_; }
    const std::vector<Date>& dates() const { return dates_; }

    // Date-ordered rows for one security.
    std::span<const SecurityDay> series(const std::string& security_id) const;
    // nullptr when the security has no record on that date.
    const SecurityDay* find(const std::string& security_id, Date d) const;
    std::vector<const SecurityDay*> cross_section(Date d) const;

private:
    std::vector<SecurityDay> rows_;  // sorted (security_id, date)
    std::vector<std::string> securities_;
    std::vector<Date> dates_;
    std::map<std::string, std::pair<std::size_t, std::size_t>> ranges_;
};

} // namespace tca::data
