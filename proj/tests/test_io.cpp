#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "sl2/checks.hpp"
#include "sl2/errors.hpp"
#include "sl2/io.hpp"
#include "sl2/text.hpp"

using cplx = std::complex<double>;

using namespace sl2;

TEST_CASE("complex parsing") {
    CHECK(parse_complex("0.5+1i") == cplx(0.5, 1.0));
    CHECK(parse_complex("-1-2.5i") == cplx(-1.0, -2.5));
    CHECK(parse_complex("3") == cplx(3.0, 0.0));
    CHECK(parse_complex("i") == cplx(0.0, 1.0));
    CHECK(parse_complex("-i") == cplx(0.0, -1.0));
    CHECK(parse_complex("2i") == cplx(0.0, 2.0));
    CHECK(parse_complex("1e-3+2e2i") == cplx(1e-3, 200.0));
    CHECK(parse_complex(" 0.25 - 0.5i ") == cplx(0.25, -0.5));
    CHECK_THROWS_AS(parse_complex(""), DomainError);
    CHECK_THROWS_AS(parse_complex("1+xi"), DomainError);
}

TEST_CASE("range and real parsing") {
    auto r = parse_range("0:0.5:2");
    REQUIRE(r.size() == 5);
    CHECK(r.back() == 2.0);
    CHECK(parse_range("0:0.1:2").size() == 21);
    CHECK(parse_range("1,4,9") == std::vector<double>{1.0, 4.0, 9.0});
    CHECK(parse_range("7") == std::vector<double>{7.0});
    CHECK_THROWS_AS(parse_range("0:0:1"), DomainError);
    CHECK_THROWS_AS(parse_range("2:1:1"), DomainError);
    CHECK_THROWS_AS(parse_range("1:2"), DomainError);
    CHECK(parse_real("4/3") == 4.0 / 3.0);
    CHECK(parse_real("-0.75") == -0.75);
    CHECK_THROWS_AS(parse_real("1/0"), DomainError);
}

TEST_CASE("seventeen significant digits round-trip") {
    for (double x : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-300}) CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("csv output") {
    Table t{{"a", "note"}, {}};
    t.add_row({"1", "plain"});
    t.add_row({"2", "t = 10, 20"});
    t.add_row({"3", "say \"hi\""});
    CHECK_THROWS_AS(t.add_row({"4"}), DomainError);
    std::ostringstream os;
    write_csv(os, t, "abc");
    CHECK(os.str() == "a,note,config_hash\n1,plain,abc\n2,\"t = 10, 20\",abc\n3,\"say \"\"hi\"\"\",abc\n");
    CHECK(os.str().find(';') == std::string::npos);
    Json j = table_json(t, "abc");
    CHECK(j.size() == 3);
    CHECK(j[1]["note"] == "t = 10, 20");
    CHECK(j[1]["config_hash"] == "abc");
}

TEST_CASE("config hash and envelope") {
    Json a = {{"n", "0"}, {"s", "0.5"}};
    Json b = {{"n", "0"}, {"s", "0.5"}};
    Json c = {{"n", "1"}, {"s", "0.5"}};
    CHECK(config_hash(a) == config_hash(b));
    CHECK(config_hash(a) != config_hash(c));
    CHECK(config_hash(a).size() == 16);
    CHECK(fnv1a64("") == 14695981039346656037ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    Json e = envelope(a, Json::object(), Json::object());
    std::vector<std::string> keys;
    for (auto it = e.begin(); it != e.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"config", "results", "margins", "version"});
    CHECK(e["version"] == version());
}

TEST_CASE("fixture parsing") {
    Fixtures fx = default_fixtures();
    CHECK(fx.zeta.size() == 93);
    CHECK(fx.b0_tolerance > 0.0);
    CHECK_THROWS_AS(parse_fixtures("{"), DomainError);
    CHECK_THROWS_AS(parse_fixtures("[]"), DomainError);
    CHECK_THROWS_AS(parse_fixtures(R"({"b0": "x"})"), DomainError);
    CHECK_THROWS_AS(load_fixtures("no_such_fixture_file.json"), DomainError);
}

TEST_CASE("check registry") {
    auto all = list_checks();
    std::set<std::string> names;
    std::set<int> criteria;
    for (const auto& c : all) {
        names.insert(c.name);
        criteria.insert(c.criterion);
    }
    CHECK(names.size() == all.size());
    for (int k = 1; k <= 14; ++k) CHECK(criteria.count(k) == 1);
}

TEST_CASE("check filter and report") {
    CheckOptions opt;
    opt.filter = "symmetry";
    auto r = run_checks(opt, default_fixtures());
    REQUIRE(r.size() == 2);
    for (const auto& c : r) CHECK(c.group == "symmetry");
    opt.filter = "special.gamma";
    r = run_checks(opt, default_fixtures());
    CHECK(r.size() == 2);
    CHECK(all_passed(r));
    std::string once = check_report(opt, r).dump();
    std::string twice = check_report(opt, run_checks(opt, default_fixtures())).dump();
    CHECK(once == twice);
}

TEST_CASE("a corrupted fixture fails its check") {
    Fixtures fx = default_fixtures();
    fx.zeta[0].value *= 1.5;
    CheckOptions opt;
    opt.filter = "fixtures.zeta";
    auto r = run_checks(opt, fx);
    REQUIRE(r.size() == 1);
    CHECK(!r[0].passed);
}
