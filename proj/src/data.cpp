#include "tca/data.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "tca/csv.hpp"

namespace tca {

std::vector<SampleWindow> default_sample_windows() {
    using dates::from_civil;
    return {
        {"SF", from_civil(2013, 7, 1), from_civil(2014, 12, 10)},
        {"S1", from_civil(2013, 7, 1), from_civil(2014, 1, 10)},
        {"S2", from_civil(2014, 1, 14), from_civil(2014, 7, 18)},
        {"S3", from_civil(2014, 7, 22), from_civil(2014, 12, 10)},
        {"S4", from_civil(2013, 7, 1), from_civil(2014, 7, 18)},
        {"S5", from_civil(2014, 1, 15), from_civil(2014, 12, 10)},
    };
}

void FxTable::add(Date d, double usd_jpy) {
    if (usd_jpy <= 0.0) throw DataError("fx rate must be positive on " + dates::format(d));
    if (!rates_.emplace(d, usd_jpy).second) throw DataError("duplicate fx rate for " + dates::format(d));
}

double FxTable::rate_on(Date d) const {
    auto it = rates_.upper_bound(d);
    if (it == rates_.begin()) throw DataError("no fx rate on or before " + dates::format(d));
    --it;
    if (d - it->first > 7)
        throw DataError("no fx rate within 7 days before " + dates::format(d) + " (nearest is " +
                        dates::format(it->first) + ")");
    return it->second;
}

double FxTable::to_usd(double notional_jpy, Date d) const { return notional_jpy / rate_on(d); }

namespace data {

namespace {

std::string pos(const csv::Reader& r) { return r.path() + ":" + std::to_string(r.line()); }

} // namespace

std::vector<SecurityDay> parse_daily(const std::string& path) {
    csv::Reader reader(path, kDailyHeader);
    std::vector<SecurityDay> out;
    std::vector<std::string_view> f;
    while (reader.next(f)) {
        SecurityDay d;
        d.security_id = std::string(f[0]);
        d.date = dates::parse(f[1]);
        d.close = csv::parse_double(f[2], path, reader.line(), "close_yen");
        d.avg_spread = csv::parse_double(f[3], path, reader.line(), "avg_spread_yen");
        const long long vol = csv::parse_int(f[4], path, reader.line(), "volume_shares");
        const long long trades = csv::parse_int(f[5], path, reader.line(), "trade_count");
        if (d.security_id.empty()) throw DataError(pos(reader) + ": empty security_id");
        if (d.close <= 0.0) throw DataError(pos(reader) + ": close_yen must be positive, got " + csv::fmt(d.close));
        if (d.avg_spread < 0.0) throw DataError(pos(reader) + ": avg_spread_yen must be >= 0");
        if (vol < 0) throw DataError(pos(reader) + ": volume_shares must be >= 0");
        if (trades < 0) throw DataError(pos(reader) + ": trade_count must be >= 0");
        if (vol == 0 && trades != 0) throw DataError(pos(reader) + ": trade_count must be 0 when volume is 0");
        d.volume = static_cast<double>(vol);
        d.trade_count = static_cast<double>(trades);
        out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end(), [](const SecurityDay& a, const SecurityDay& b) {
        return std::tie(a.security_id, a.date) < std::tie(b.security_id, b.date);
    });
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].security_id == out[i - 1].security_id && out[i].date == out[i - 1].date)
            throw DataError(path + ": duplicate record for (" + out[i].security_id + ", " +
                            dates::format(out[i].date) + ")");
    return out;
}

std::vector<Order> parse_orders(const std::string& orders_path, const std::string& fills_path) {
    csv::Reader reader(orders_path, kOrdersHeader);
    std::vector<Order> orders;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<std::string_view> f;
    while (reader.next(f)) {
        Order o;
        o.order_id = std::string(f[0]);
        o.security_id = std::string(f[1]);
        o.side = side_from_string(f[2]);
        o.arrival_date = dates::parse(f[3]);
        o.arrival_price = csv::parse_double(f[4], orders_path, reader.line(), "arrival_price_yen");
        o.total_shares = csv::parse_double(f[5], orders_path, reader.line(), "total_shares");
        if (o.arrival_price <= 0.0) throw DataError(pos(reader) + ": arrival_price_yen must be positive");
        if (o.total_shares <= 0.0) throw DataError(pos(reader) + ": total_shares must be positive");
        if (!index.emplace(o.order_id, orders.size()).second)
            throw DataError(pos(reader) + ": duplicate order_id '" + o.order_id + "'");
        orders.push_back(std::move(o));
    }

    csv::Reader fill_reader(fills_path, kFillsHeader);
    while (fill_reader.next(f)) {
        const std::string order_id(f[0]);
        const auto it = index.find(order_id);
        if (it == index.end())
            throw DataError(fills_path + ":" + std::to_string(fill_reader.line()) + ": orphan fill for unknown order_id '" +
                            order_id + "'");
        Fill fill;
        fill.seq = static_cast<int>(csv::parse_int(f[1], fills_path, fill_reader.line(), "seq"));
        fill.price = csv::parse_double(f[2], fills_path, fill_reader.line(), "price_yen");
        fill.shares = csv::parse_double(f[3], fills_path, fill_reader.line(), "shares");
        if (fill.seq < 1) throw DataError(fills_path + ":" + std::to_string(fill_reader.line()) + ": seq must be >= 1");
        if (fill.price <= 0.0) throw DataError(fills_path + ":" + std::to_string(fill_reader.line()) + ": price_yen must be positive");
        if (fill.shares <= 0.0) throw DataError(fills_path + ":" + std::to_string(fill_reader.line()) + ": shares must be positive");
        orders[it->second].fills.push_back(fill);
    }

    for (Order& o : orders) {
        std::sort(o.fills.begin(), o.fills.end(), [](const Fill& a, const Fill& b) { return a.seq < b.seq; });
        for (std::size_t i = 1; i < o.fills.size(); ++i)
            if (o.fills[i].seq == o.fills[i - 1].seq)
                throw DataError("order " + o.order_id + ": duplicate fill seq " + std::to_string(o.fills[i].seq));
        double filled = 0.0;
        for (const Fill& fl : o.fills) filled += fl.shares;
        if (o.fills.empty() || std::fabs(filled - o.total_shares) > 1e-9 * std::max(1.0, o.total_shares))
            throw DataError("order " + o.order_id + ": filled " + csv::fmt(filled) + " of " +
                            csv::fmt(o.total_shares) + " shares (only fully-filled orders are supported)");
    }

    std::sort(orders.begin(), orders.end(), [](const Order& a, const Order& b) { return a.order_id < b.order_id; });
    return orders;
}

FxTable parse_fx(const std::string& path) {
    csv::Reader reader(path, kFxHeader);
    FxTable fx;
    std::vector<std::string_view> f;
    while (reader.next(f)) {
        const Date d = dates::parse(f[0]);
        const double rate = csv::parse_double(f[1], path, reader.line(), "usd_jpy");
        if (rate <= 0.0) throw DataError(pos(reader) + ": usd_jpy must be positive");
        fx.add(d, rate);
    }
    return fx;
}

std::vector<SplitRatio> parse_splits(const std::string& path) {
    csv::Reader reader(path, kSplitsHeader);
    std::vector<SplitRatio> out;
    std::vector<std::string_view> f;
    std::set<std::pair<std::string, Date>> seen;
    while (reader.next(f)) {
        SplitRatio s;
        s.security_id = std::string(f[0]);
        s.ex_date = dates::parse(f[1]);
        s.ratio = csv::parse_double(f[2], path, reader.line(), "ratio");
        if (s.ratio <= 0.0) throw DataError(pos(reader) + ": split ratio must be positive");
        if (!seen.emplace(s.security_id, s.ex_date).second)
            throw DataError(pos(reader) + ": duplicate split for (" + s.security_id + ", " +
                            dates::format(s.ex_date) + ")");
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const SplitRatio& a, const SplitRatio& b) {
        return std::tie(a.security_id, a.ex_date) < std::tie(b.security_id, b.ex_date);
    });
    return out;
}

void write_daily(const std::string& path, std::span<const SecurityDay> rows) {
    csv::Writer w(path, kDailyHeader);
    for (const SecurityDay& d : rows)
        w.row({d.security_id, dates::format(d.date), csv::fmt(d.close), csv::fmt(d.avg_spread),
               csv::fmt(static_cast<long long>(std::llround(d.volume))),
               csv::fmt(static_cast<long long>(std::llround(d.trade_count)))});
    w.close();
}

void write_orders(const std::string& orders_path, const std::string& fills_path, std::span<const Order> orders) {
    csv::Writer ow(orders_path, kOrdersHeader);
    csv::Writer fw(fills_path, kFillsHeader);
    for (const Order& o : orders) {
        ow.row({o.order_id, o.security_id, to_string(o.side), dates::format(o.arrival_date),
                csv::fmt(o.arrival_price), csv::fmt(o.total_shares)});
        for (const Fill& fl : o.fills)
            fw.row({o.order_id, csv::fmt(static_cast<long long>(fl.seq)), csv::fmt(fl.price), csv::fmt(fl.shares)});
    }
    ow.close();
    fw.close();
}

void write_fx(const std::string& path, const FxTable& fx) {
    csv::Writer w(path, kFxHeader);
    for (const auto& [d, r] : fx.rates()) w.row({dates::format(d), csv::fmt(r)});
    w.close();
}

void write_splits(const std::string& path, std::span<const SplitRatio> splits) {
    csv::Writer w(path, kSplitsHeader);
    for (const SplitRatio& s : splits) w.row({s.security_id, dates::format(s.ex_date), csv::fmt(s.ratio)});
    w.close();
}

std::vector<SecurityDay> adjust_for_splits(std::vector<SecurityDay> days, std::vector<SplitRatio> splits) {
    for (const SplitRatio& s : splits)
        if (s.ratio <= 0.0)
            throw DataError("split ratio must be positive for " + s.security_id + " on " + dates::format(s.ex_date));
    std::sort(splits.begin(), splits.end(), [](const SplitRatio& a, const SplitRatio& b) {
        return std::tie(a.security_id, a.ex_date) < std::tie(b.security_id, b.ex_date);
    });
    std::unordered_map<std::string, std::vector<const SplitRatio*>> by_sec;
    for (const SplitRatio& s : splits) by_sec[s.security_id].push_back(&s);

    for (SecurityDay& d : days) {
        const auto it = by_sec.find(d.security_id);
        if (it == by_sec.end()) continue;
        for (const SplitRatio* s : it->second) {
            if (d.date < s->ex_date) {
                d.close /= s->ratio;
                d.avg_spread /= s->ratio;
                d.volume *= s->ratio;
            }
        }
    }
    return days;
}

std::map<std::string, std::vector<SecurityDay>> slice_samples(std::span<const SecurityDay> dataset,
                                                              std::span<const SampleWindow> windows) {
    std::map<std::string, std::vector<SecurityDay>> out;
    for (const SampleWindow& w : windows) {
        if (w.start > w.end) throw ConfigError("sample window " + w.label + ": start after end");
        auto& slot = out[w.label];
        for (const SecurityDay& d : dataset)
            if (w.contains(d.date)) slot.push_back(d);
    }
    return out;
}

Panel::Panel(std::span<const SecurityDay> rows) : rows_(rows.begin(), rows.end()) {
    std::sort(rows_.begin(), rows_.end(), [](const SecurityDay& a, const SecurityDay& b) {
        return std::tie(a.security_id, a.date) < std::tie(b.security_id, b.date);
    });
    std::set<Date> dates;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= rows_.size(); ++i) {
        if (i == rows_.size() || (i > 0 && rows_[i].security_id != rows_[i - 1].security_id)) {
            if (i > start) {
                securities_.push_back(rows_[start].security_id);
                ranges_[rows_[start].security_id] = {start, i};
            }
            start = i;
        }
        if (i < rows_.size()) dates.insert(rows_[i].date);
    }
    dates_.assign(dates.begin(), dates.end());
}

std::span<const SecurityDay> Panel::series(const std::string& security_id) const {
    const auto it = ranges_.find(security_id);
    if (it == ranges_.end()) return {};
    return std::span<const SecurityDay>(rows_).subspan(it->second.first, it->second.second - it->second.first);
}

const SecurityDay* Panel::find(const std::string& security_id, Date d) const {
    const auto s = series(security_id);
    const auto it = std::lower_bound(s.begin(), s.end(), d,
                                     [](const SecurityDay& row, Date date) { return row.date < date; });
    if (it == s.end() || it->date != d) return nullptr;
    return &*it;
}

std::vector<const SecurityDay*> Panel::cross_section(Date d) const {
    std::vector<const SecurityDay*> out;
    for (const std::string& sec : securities_)
        if (const SecurityDay* row = find(sec, d)) out.push_back(row);
    return out;
}

} // namespace data
} // namespace tca
