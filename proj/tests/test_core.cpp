#include <cmath>
#include <map>
#include <set>

#include "core/date.hpp"
#include "core/digest.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"
#include "core/text.hpp"
#include "core/xml.hpp"
#include "doctest.h"

using namespace nhb;

TEST_CASE("rng streams are deterministic and independent") {
    Rng a(42), b(42), c(43);
    for (int i = 0; i < 100; i++) {
        uint64_t va = a.next_u64();
        CHECK(va == b.next_u64());
    }
    CHECK(a.next_u64() != c.next_u64());
    CHECK(derive_seed(42, "articles", 7) == derive_seed(42, "articles", 7));
    CHECK(derive_seed(42, "articles", 7) != derive_seed(42, "articles", 8));
    CHECK(derive_seed(42, "articles", 7) != derive_seed(42, "authors", 7));
}

TEST_CASE("rng uniform bounds") {
    Rng r(1);
    for (int i = 0; i < 10000; i++) {
        int64_t v = r.uniform_int(-3, 5);
        CHECK(v >= -3);
        CHECK(v <= 5);
        double d = r.next_double();
        CHECK(d >= 0.0);
        CHECK(d < 1.0);
    }
}

TEST_CASE("zipf sampler follows the configured law") {
    // Empirical CDF over ranks vs theoretical, Kolmogorov-Smirnov style.
    ZipfSampler zipf(1000, 1.0);
    Rng r(7);
    const int n = 200000;
    std::map<uint32_t, int> counts;
    for (int i = 0; i < n; i++) counts[zipf.sample(r)]++;
    double emp = 0.0, theo = 0.0, worst = 0.0;
    for (uint32_t rank = 1; rank <= 1000; rank++) {
        auto it = counts.find(rank);
        emp += it == counts.end() ? 0.0 : static_cast<double>(it->second) / n;
        theo += zipf.pmf(rank);
        worst = std::max(worst, std::abs(emp - theo));
    }
    CHECK(worst < 0.01);
}

TEST_CASE("gaussian moments") {
    Rng r(11);
    double sum = 0.0, sq = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; i++) {
        double g = r.gaussian();
        sum += g;
        sq += g * g;
    }
    CHECK(std::abs(sum / n) < 0.02);
    CHECK(std::abs(sq / n - 1.0) < 0.03);
}

TEST_CASE("civil date round trip") {
    // Spot values plus a full round trip sweep.
    CHECK(Date{1970, 1, 1}.to_days() == 0);
    CHECK(Date{2001, 9, 12}.iso() == "2001-09-12");
    CHECK(Date::parse("2008-11-05") == Date{2008, 11, 5});
    CHECK(Date{2000, 2, 29}.day_of_year() == 60);
    CHECK(Date{2001, 1, 1}.weekday() == 0); // Monday
    CHECK(Date{2001, 9, 12}.weekday() == 2); // Wednesday
    for (int64_t d = -200000; d <= 200000; d += 137) {
        Date date = Date::from_days(d);
        CHECK(date.to_days() == d);
        CHECK(Date::parse(date.iso()) == date);
    }
    CHECK_THROWS_AS(Date::parse("2001-13-01"), ParseError);
    CHECK_THROWS_AS(Date::parse("2001-02-30"), ParseError);
    CHECK_THROWS_AS(Date::parse("20010912"), ParseError);
}

TEST_CASE("age arithmetic is birthday exact") {
    CHECK(age_in_years(Date{1970, 12, 31}, Date{2010, 12, 31}) == 40);
    CHECK(age_in_years(Date{1970, 12, 31}, Date{2010, 12, 30}) == 39);
    CHECK(age_in_years(Date{1950, 12, 31}, Date{2010, 12, 31}) == 60);
}

TEST_CASE("fnv1a64 known vector") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(to_hex(0xdeadbeefULL) == "00000000deadbeef");
}

TEST_CASE("tokenizer lowers, splits and drops short tokens") {
    auto t = tokenize("The Higgs-boson, at 125 GeV; a X!");
    CHECK(t == std::vector<std::string>{"the", "higgs", "boson", "at", "125", "gev"});
    CHECK(bigrams(t) == std::vector<std::string>{"the higgs", "higgs boson", "boson at",
                                                 "at 125", "125 gev"});
    CHECK(tokenize("").empty());
    CHECK(bigrams({"one"}).empty());
}

TEST_CASE("canonical double formatting round trips") {
    for (double v : {0.0, 1.0, 0.1, 1e-9, 3.141592653589793, 1.0 / 3.0, 123456789.123456}) {
        CHECK(parse_double(format_double(v)) == v);
    }
    CHECK_THROWS_AS(parse_double("abc"), ParseError);
    CHECK_THROWS_AS(parse_int("12x"), ParseError);
}

TEST_CASE("xml writer and parser round trip") {
    xml::Node root;
    root.name = "article";
    root.set_attr("id", "a1").set_attr("note", "a \"quoted\" & <odd> value");
    root.add("title").set_text("Tom & Jerry <live>");
    auto& list = root.add("topics");
    list.add("topic").set_text("t1");
    list.add("topic").set_text("t2");
    root.add("empty");
    std::string doc = xml::write_document(root);
    CHECK(doc.starts_with("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"));
    CHECK(doc.find("&amp;") != std::string::npos);

    xml::Node parsed = xml::parse_document(doc);
    CHECK(parsed.name == "article");
    CHECK(*parsed.attr("id") == "a1");
    CHECK(*parsed.attr("note") == "a \"quoted\" & <odd> value");
    CHECK(parsed.child("title")->text == "Tom & Jerry <live>");
    CHECK(parsed.children_named("topics").size() == 1);
    CHECK(parsed.child("topics")->children.size() == 2);
    CHECK(parsed.child("empty") != nullptr);
    // Canonical form is a fixpoint.
    CHECK(xml::write_document(parsed) == doc);
}

TEST_CASE("xml parse errors carry byte offsets") {
    CHECK_THROWS_AS(xml::parse_document("<a><b></a>"), ParseError);
    CHECK_THROWS_AS(xml::parse_document("<a attr=foo/>"), ParseError);
    CHECK_THROWS_AS(xml::parse_document("<a>&unknown;</a>"), ParseError);
    CHECK_THROWS_AS(xml::parse_document("<a>text</a> junk"), ParseError);
    try {
        xml::parse_document("<a><b>text</b");
        FAIL("expected throw");
    } catch (const ParseError& e) {
        CHECK(e.offset != static_cast<size_t>(-1));
    }
}
