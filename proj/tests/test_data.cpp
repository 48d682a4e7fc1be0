#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "tca/data.hpp"
#include "tca/rng.hpp"

using namespace tca;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("tca_test_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

} // namespace

TEST_CASE("dates: civil round trip and weekday") {
    const Date d = dates::from_civil(2014, 1, 10);
    CHECK(dates::format(d) == "2014-01-10");
    CHECK(dates::parse("2014-01-10") == d);
    CHECK(dates::weekday(dates::from_civil(2014, 1, 13)) == 0);  // Monday
    CHECK(dates::is_weekday(dates::from_civil(2014, 1, 11)) == false);
    CHECK_THROWS_AS(dates::parse("2014/01/10"), DataError);
    for (Date x = dates::from_civil(2013, 7, 1); x <= dates::from_civil(2014, 12, 10); ++x) {
        const auto c = dates::to_civil(x);
        CHECK(dates::from_civil(c.year, c.month, c.day) == x);
    }
}

TEST_CASE("parse_daily: field mapping and validation") {
    TempDir tmp;
    const std::string path = tmp.file("daily.csv");

    SUBCASE("direct field mapping") {
        write_text(path,
                   "security_id,date,close_yen,avg_spread_yen,volume_shares,trade_count\n"
                   "7203,2014-01-10,6300,1.0,1000000,5000\n");
        const auto rows = data::parse_daily(path);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].security_id == "7203");
        CHECK(rows[0].date == dates::from_civil(2014, 1, 10));
        CHECK(rows[0].close == 6300.0);
        CHECK(rows[0].avg_spread == 1.0);
        CHECK(rows[0].volume == 1000000.0);
        CHECK(rows[0].trade_count == 5000.0);
    }

    SUBCASE("negative close rejected with line number") {
        write_text(path,
                   "security_id,date,close_yen,avg_spread_yen,volume_shares,trade_count\n"
                   "7203,2014-01-10,6300,1.0,1000000,5000\n"
                   "7203,2014-01-14,-5,1.0,1000000,5000\n");
        CHECK_THROWS_WITH_AS(data::parse_daily(path), doctest::Contains(":3"), DataError);
    }

    SUBCASE("duplicate security-date rejected") {
        write_text(path,
                   "security_id,date,close_yen,avg_spread_yen,volume_shares,trade_count\n"
                   "7203,2014-01-10,6300,1.0,1000000,5000\n"
                   "7203,2014-01-10,6301,1.0,1000000,5000\n");
        CHECK_THROWS_WITH_AS(data::parse_daily(path), doctest::Contains("duplicate"), DataError);
    }

    SUBCASE("zero volume forces zero trades") {
        write_text(path,
                   "security_id,date,close_yen,avg_spread_yen,volume_shares,trade_count\n"
                   "7203,2014-01-10,6300,1.0,0,5\n");
        CHECK_THROWS_AS(data::parse_daily(path), DataError);
    }

    SUBCASE("bad header rejected") {
        write_text(path, "security_id,date,close,spread,volume,trades\n");
        CHECK_THROWS_AS(data::parse_daily(path), DataError);
    }
}

TEST_CASE("parse_daily: bulk file is counted and sorted") {
    TempDir tmp;
    const std::string path = tmp.file("daily.csv");
    std::ofstream out(path);
    out << "security_id,date,close_yen,avg_spread_yen,volume_shares,trade_count\n";
    const Date start = dates::from_civil(2013, 7, 1);
    int n_dates = 0;
    // Writes securities in reverse to exercise the sort.
    for (int s = 99; s >= 0; --s) {
        char sec[8];
        std::snprintf(sec, sizeof sec, "S%03d", s);
        n_dates = 0;
        for (Date d = start; n_dates < 370; ++d) {
            if (!dates::is_weekday(d)) continue;
            out << sec << ',' << dates::format(d) << ",1000,1,500000,2000\n";
            ++n_dates;
        }
    }
    out.close();
    const auto rows = data::parse_daily(path);
    CHECK(rows.size() == 100u * 370u);
    CHECK(std::is_sorted(rows.begin(), rows.end(), [](const SecurityDay& a, const SecurityDay& b) {
        return std::tie(a.security_id, a.date) < std::tie(b.security_id, b.date);
    }));
}

TEST_CASE("parse_orders: join, orphan and fill-sum checks") {
    TempDir tmp;
    const std::string orders = tmp.file("orders.csv");
    const std::string fills = tmp.file("fills.csv");

    SUBCASE("three fills join into one order") {
        write_text(orders,
                   "order_id,security_id,side,arrival_date,arrival_price_yen,total_shares\n"
                   "O1,7203,Buy,2014-01-10,100,30\n");
        write_text(fills,
                   "order_id,seq,price_yen,shares\n"
                   "O1,2,100,10\nO1,1,101,10\nO1,3,102,10\n");
        const auto parsed = data::parse_orders(orders, fills);
        REQUIRE(parsed.size() == 1);
        REQUIRE(parsed[0].fills.size() == 3);
        CHECK(parsed[0].fills[0].seq == 1);  // reordered by seq
        CHECK(parsed[0].fills[0].price == 101.0);
        CHECK(parsed[0].fills[2].seq == 3);
    }

    SUBCASE("orphan fill") {
        write_text(orders,
                   "order_id,security_id,side,arrival_date,arrival_price_yen,total_shares\n"
                   "O1,7203,Buy,2014-01-10,100,30\n");
        write_text(fills, "order_id,seq,price_yen,shares\nOX,1,100,30\n");
        CHECK_THROWS_WITH_AS(data::parse_orders(orders, fills), doctest::Contains("orphan"), DataError);
    }

    SUBCASE("under-filled order names the order id") {
        write_text(orders,
                   "order_id,security_id,side,arrival_date,arrival_price_yen,total_shares\n"
                   "O7,7203,Sell,2014-01-10,100,30\n");
        write_text(fills, "order_id,seq,price_yen,shares\nO7,1,100,10\n");
        CHECK_THROWS_WITH_AS(data::parse_orders(orders, fills), doctest::Contains("O7"), DataError);
    }
}

TEST_CASE("adjust_for_splits: pre-ex-date scaling") {
    std::vector<SecurityDay> days = {
        {"A", dates::from_civil(2014, 3, 10), 1000.0, 2.0, 100.0, 10.0},
        {"A", dates::from_civil(2014, 3, 12), 1000.0, 2.0, 100.0, 10.0},
        {"B", dates::from_civil(2014, 3, 10), 500.0, 1.0, 50.0, 5.0},
    };
    std::vector<SplitRatio> splits = {{"A", dates::from_civil(2014, 3, 12), 2.0}};
    const auto adj = data::adjust_for_splits(days, splits);
    CHECK(adj[0].close == doctest::Approx(500.0));
    CHECK(adj[0].avg_spread == doctest::Approx(1.0));
    CHECK(adj[0].volume == doctest::Approx(200.0));
    CHECK(adj[0].trade_count == 10.0);
    // on/after ex-date unchanged
    CHECK(adj[1].close == 1000.0);
    CHECK(adj[1].volume == 100.0);
    // other securities untouched
    CHECK(adj[2].close == 500.0);

    // notional conservation for the pre-split record
    CHECK(adj[0].close * adj[0].volume == doctest::Approx(days[0].close * days[0].volume).epsilon(1e-9));

    CHECK_THROWS_AS(data::adjust_for_splits(days, {{"A", dates::from_civil(2014, 3, 12), -1.0}}), DataError);
}

TEST_CASE("fx: direct, fallback and missing") {
    FxTable fx;
    fx.add(dates::from_civil(2014, 1, 9), 105.0);
    fx.add(dates::from_civil(2014, 1, 10), 100.0);
    CHECK(data::to_usd(1000000.0, dates::from_civil(2014, 1, 10), fx) == doctest::Approx(10000.0));
    // weekend falls back to Friday's rate
    CHECK(fx.rate_on(dates::from_civil(2014, 1, 12)) == 100.0);
    CHECK(data::to_usd(0.0, dates::from_civil(2014, 1, 10), fx) == 0.0);
    CHECK_THROWS_AS(fx.rate_on(dates::from_civil(2014, 1, 8)), DataError);
    CHECK_THROWS_AS(fx.rate_on(dates::from_civil(2014, 2, 10)), DataError);
}

TEST_CASE("slice_samples: paper window membership") {
    const auto windows = default_sample_windows();
    auto in = [&](const char* label, Date d) {
        for (const auto& w : windows)
            if (w.label == label) return w.contains(d);
        FAIL("no window ", label);
        return false;
    };
    const Date jan10 = dates::from_civil(2014, 1, 10);
    CHECK(in("SF", jan10));
    CHECK(in("S1", jan10));
    CHECK(in("S4", jan10));
    CHECK_FALSE(in("S2", jan10));
    CHECK_FALSE(in("S5", jan10));

    const Date jul22 = dates::from_civil(2014, 7, 22);
    CHECK(in("SF", jul22));
    CHECK(in("S3", jul22));
    CHECK(in("S5", jul22));
    CHECK_FALSE(in("S2", jul22));
    CHECK_FALSE(in("S4", jul22));

    const Date jan13 = dates::from_civil(2014, 1, 13);
    CHECK(in("SF", jan13));
    CHECK(in("S4", jan13));
    CHECK_FALSE(in("S1", jan13));
    CHECK_FALSE(in("S2", jan13));

    std::vector<SecurityDay> rows = {{"A", jan10, 100.0, 1.0, 10.0, 1.0}, {"A", jul22, 100.0, 1.0, 10.0, 1.0}};
    const auto sliced = data::slice_samples(rows, windows);
    CHECK(sliced.at("SF").size() == 2);
    CHECK(sliced.at("S1").size() == 1);
    CHECK(sliced.at("S3").size() == 1);
}

TEST_CASE("samples S1..S3 partition SF trading dates minus holiday gaps") {
    const auto windows = default_sample_windows();
    const SampleWindow *sf = nullptr, *s1 = nullptr, *s2 = nullptr, *s3 = nullptr;
    for (const auto& w : windows) {
        if (w.label == "SF") sf = &w;
        if (w.label == "S1") s1 = &w;
        if (w.label == "S2") s2 = &w;
        if (w.label == "S3") s3 = &w;
    }
    const Date h1 = dates::from_civil(2014, 1, 13), h2 = dates::from_civil(2014, 7, 21);
    for (Date d = sf->start; d <= sf->end; ++d) {
        if (!dates::is_weekday(d) || d == h1 || d == h2) continue;
        const int members = int(s1->contains(d)) + int(s2->contains(d)) + int(s3->contains(d));
        CHECK(members == 1);
    }
}

TEST_CASE("round trip: write then parse reproduces records") {
    TempDir tmp;
    rng::Stream rng(7, 0);
    std::vector<SecurityDay> days;
    for (int s = 0; s < 5; ++s)
        for (int d = 0; d < 20; ++d) {
            SecurityDay row;
            row.security_id = "S" + std::to_string(s);
            row.date = dates::from_civil(2014, 1, 1) + d;
            row.close = 100.0 + rng.uniform(0.0, 5000.0);
            row.avg_spread = rng.uniform(0.0, 10.0);
            row.volume = static_cast<double>(rng.uniform_int(1, 1000000));
            row.trade_count = static_cast<double>(rng.uniform_int(1, 10000));
            days.push_back(row);
        }
    data::write_daily(tmp.file("d.csv"), days);
    const auto parsed = data::parse_daily(tmp.file("d.csv"));
    REQUIRE(parsed.size() == days.size());
    std::sort(days.begin(), days.end(), [](const SecurityDay& a, const SecurityDay& b) {
        return std::tie(a.security_id, a.date) < std::tie(b.security_id, b.date);
    });
    for (std::size_t i = 0; i < days.size(); ++i) {
        CHECK(parsed[i].security_id == days[i].security_id);
        CHECK(parsed[i].date == days[i].date);
        CHECK(parsed[i].close == days[i].close);
        CHECK(parsed[i].avg_spread == days[i].avg_spread);
        CHECK(parsed[i].volume == days[i].volume);
        CHECK(parsed[i].trade_count == days[i].trade_count);
    }

    // orders round trip
    std::vector<Order> orders;
    for (int i = 0; i < 50; ++i) {
        Order o;
        o.order_id = "O" + std::to_string(1000 + i);
        o.security_id = "S1";
        o.side = rng.uniform() < 0.5 ? Side::Buy : Side::Sell;
        o.arrival_date = dates::from_civil(2014, 1, 6);
        o.arrival_price = 100.0 + rng.uniform(0.0, 50.0);
        const int nf = static_cast<int>(rng.uniform_int(1, 5));
        double total = 0.0;
        for (int f = 0; f < nf; ++f) {
            Fill fill;
            fill.seq = f + 1;
            fill.price = o.arrival_price * (1.0 + rng.uniform(-0.01, 0.01));
            fill.shares = static_cast<double>(rng.uniform_int(1, 500));
            total += fill.shares;
            o.fills.push_back(fill);
        }
        o.total_shares = total;
        orders.push_back(o);
    }
    data::write_orders(tmp.file("o.csv"), tmp.file("f.csv"), orders);
    const auto parsed_orders = data::parse_orders(tmp.file("o.csv"), tmp.file("f.csv"));
    REQUIRE(parsed_orders.size() == orders.size());
    std::sort(orders.begin(), orders.end(), [](const Order& a, const Order& b) { return a.order_id < b.order_id; });
    for (std::size_t i = 0; i < orders.size(); ++i) {
        CHECK(parsed_orders[i].arrival_price == orders[i].arrival_price);
        REQUIRE(parsed_orders[i].fills.size() == orders[i].fills.size());
        for (std::size_t f = 0; f < orders[i].fills.size(); ++f)
            CHECK(parsed_orders[i].fills[f].price == orders[i].fills[f].price);
    }
}

TEST_CASE("panel: series and cross sections") {
    std::vector<SecurityDay> rows;
    for (int s = 0; s < 3; ++s)
        for (int d = 0; d < 4; ++d)
            rows.push_back({"S" + std::to_string(s), dates::from_civil(2014, 2, 3) + d, 100.0 + d, 1.0, 10.0, 2.0});
    const data::Panel panel(rows);
    CHECK(panel.securities().size() == 3);
    CHECK(panel.dates().size() == 4);
    CHECK(panel.series("S1").size() == 4);
    CHECK(panel.series("SX").empty());
    REQUIRE(panel.find("S2", dates::from_civil(2014, 2, 4)) != nullptr);
    CHECK(panel.find("S2", dates::from_civil(2014, 2, 4))->close == 101.0);
    CHECK(panel.find("S2", dates::from_civil(2014, 3, 1)) == nullptr);
    CHECK(panel.cross_section(dates::from_civil(2014, 2, 3)).size() == 3);
}
