#include "core/digest.hpp"
#include "core/errors.hpp"
#include "doctest.h"
#include "model/entities.hpp"
#include "model/xml_io.hpp"

using namespace nhb;
using namespace nhb::model;

namespace {

Article fixture_article(int i) {
    Article a;
    a.id = "a00000" + std::to_string(i);
    a.title = "Fixture headline " + std::to_string(i);
    a.body = "orbit lander relay " + std::to_string(i) + " signal";
    a.version = 1;
    a.author_id = "u00001";
    a.topic_ids = {"t00", "t03"};
    a.keyword_ids = {"k00001", "k00007"};
    a.language_id = "l00";
    a.country_id = "c001";
    a.publish_date = Date{2001, 9, static_cast<uint8_t>(10 + i)};
    a.citations = {};
    a.page_count = 12;
    a.monthly_views[{2001, 9}] = 4120;
    a.monthly_views[{2001, 10}] = 310;
    return a;
}

Author fixture_journalist() {
    Author u;
    u.id = "u00001";
    u.name = "Dana Greer";
    u.birth_date = Date{1961, 4, 3};
    u.citizenship_country = "c001";
    u.work_country = "c002";
    u.subtype = AuthorKind::Journalist;
    u.employer_journal = "The Daily Ledger";
    u.interview_count = 14;
    return u;
}

} // namespace

TEST_CASE("article with empty citations serializes an empty element") {
    Article a = fixture_article(1);
    std::string doc = serialize(a);
    CHECK(doc.find("<citations/>") != std::string::npos);
}

TEST_CASE("author subtype is an explicit discriminator attribute") {
    std::string doc = serialize(fixture_journalist());
    CHECK(doc.find("subtype=\"journalist\"") != std::string::npos);

    Author p = fixture_journalist();
    p.subtype = AuthorKind::Professional;
    p.employer_journal.clear();
    p.interview_count = 0;
    p.specialty_topic = "t03";
    CHECK(serialize(p).find("subtype=\"professional\"") != std::string::npos);

    Entity e = parse_entity(serialize(fixture_journalist()));
    CHECK(std::get<Author>(e).is_journalist());
}

TEST_CASE("serialization is deterministic") {
    Article a = fixture_article(2);
    CHECK(fnv1a64(serialize(a)) == fnv1a64(serialize(a)));
}

TEST_CASE("round trip of a small fixture") {
    for (int i = 0; i < 3; i++) {
        Article a = fixture_article(i);
        a.citations = {"a0000090", "a0000090", "a0000091"}; // multiplicity preserved
        Entity e = parse_entity(serialize(a));
        CHECK(std::get<Article>(e) == a);
    }
    Author u = fixture_journalist();
    CHECK(std::get<Author>(parse_entity(serialize(u))) == u);

    MediaRef m;
    m.id = "m000001";
    m.kind = MediaKind::Video;
    m.byte_size = 9213;
    m.internal_comment = "raw interview cut";
    m.payload_digest = "fnv1a64:00000000deadbeef";
    m.transcript = "we can confirm the result";
    CHECK(std::get<MediaRef>(parse_entity(serialize(m))) == m);

    MetadataRecord r;
    r.article_id = "a000001";
    r.tfidf = {{"higgs", 3.21}, {"boson", 1.0 / 3.0}};
    r.pagerank = 0.015625;
    r.topic_distribution = {0.25, 0.75};
    CHECK(std::get<MetadataRecord>(parse_entity(serialize(r))) == r);

    Topic t{"t00", "physics"};
    Keyword k{"k00001", "higgs"};
    Language l{"l00", "en", "en-US"};
    Country c{"c001", "Norway", "NO"};
    DateInfo d{Date{2001, 9, 12}, Date{2001, 9, 12}.day_of_year(), Date{2001, 9, 12}.weekday()};
    CHECK(std::get<Topic>(parse_entity(serialize_entity(Entity{t}))) == t);
    CHECK(std::get<Keyword>(parse_entity(serialize_entity(Entity{k}))) == k);
    CHECK(std::get<Language>(parse_entity(serialize_entity(Entity{l}))) == l);
    CHECK(std::get<Country>(parse_entity(serialize_entity(Entity{c}))) == c);
    CHECK(std::get<DateInfo>(parse_entity(serialize_entity(Entity{d}))) == d);
}

TEST_CASE("serialization refuses invariant violations by name") {
    Article a = fixture_article(1);
    a.citations = {a.id};
    CHECK_THROWS_WITH_AS(serialize(a),
                         "serialization refused: article citations must not include the "
                         "article's own id",
                         InvariantError);

    Article b = fixture_article(1);
    b.page_count = 0;
    CHECK_THROWS_AS(serialize(b), InvariantError);

    MediaRef m;
    m.id = "m1";
    m.byte_size = 10;
    m.payload_digest = "fnv1a64:0";
    m.transcript = ""; // violates non-empty transcript
    CHECK_THROWS_AS(serialize(m), InvariantError);

    MetadataRecord r;
    r.article_id = "a1";
    r.topic_distribution = {0.5, 0.6};
    CHECK_THROWS_AS(serialize(r), InvariantError);
}

TEST_CASE("unknown subtype discriminator is a schema error") {
    std::string doc = serialize(fixture_journalist());
    auto pos = doc.find("journalist");
    doc.replace(pos, 10, "blogger");
    CHECK_THROWS_AS(parse_entity(doc), ParseError);
}

TEST_CASE("every truncation of a document fails to parse") {
    std::string doc = serialize(fixture_article(1));
    for (size_t cut = 0; cut + 1 < doc.size(); cut += 7) {
        CHECK_THROWS_AS(parse_entity(doc.substr(0, cut)), Error);
    }
}
