#include <filesystem>
#include <set>

#include "backend/sim_backend.hpp"
#include "core/clock.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"
#include "core/text.hpp"
#include "doctest.h"
#include "gen/generator.hpp"
#include "meta/pipeline.hpp"
#include "query/engine.hpp"
#include "query_oracle.hpp"

using namespace nhb;
using namespace nhb::query;
using nhb::test::oracle_execute;
using nhb::test::snapshot_for_oracle;

namespace {

ManualClock& clk() {
    static ManualClock c(1'000'000);
    return c;
}

// Loaded + indexed store over a generated corpus, ready for queries.
struct QueryFixture {
    gen::MemorySink sink;
    gen::CorpusManifest manifest;
    std::unique_ptr<backend::SimBackend> store;
    meta::MetadataPipeline pipeline;
    Date now;

    explicit QueryFixture(uint64_t seed, uint64_t article_cap = 0, double sf = 0.004,
                          bool run_lda = false) {
        gen::GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.scale_factor_gb = sf;
        cfg.article_count_cap = article_cap;
        manifest = gen::generate_corpus(cfg, sink);
        now = cfg.window_end;

        backend::SimBackendConfig bc;
        bc.nodes = 5;
        bc.replication = 3;
        store = std::make_unique<backend::SimBackend>(bc, clk());
        store->bulk_load(reader(), gen::take_slice(manifest, 0.0, 1.0));
        build_pipeline(run_lda);
    }

    backend::CorpusReader reader() const {
        return [this](const std::string& path) -> std::optional<std::string> {
            auto it = sink.files().find(path);
            if (it == sink.files().end()) return std::nullopt;
            return it->second;
        };
    }

    void build_pipeline(bool run_lda) {
        std::vector<meta::Document> docs;
        std::vector<std::string> ids;
        for (const auto& a : store->scan_articles()) {
            docs.push_back({a->id, a->id, a->title + " " + a->body});
            ids.push_back(a->id);
            for (const auto& m : a->media_refs)
                docs.push_back({m, a->id, store->media(m)->transcript});
        }
        meta::CitationGraph graph(ids);
        for (const auto& a : store->scan_articles())
            for (const auto& cited : a->citations) graph.add_edge(a->id, cited);
        meta::PipelineParams params;
        params.run_lda = run_lda;
        params.lda.topics = 4;
        params.lda.iterations = 30;
        pipeline.build(docs, graph, params);
        store->attach_search(
            [this](const std::vector<std::string>& terms) { return pipeline.score_articles(terms); });
    }

    QueryEngine engine() { return QueryEngine(*store, &pipeline, now); }
    nhb::test::OracleStore oracle_store() {
        return snapshot_for_oracle(*store, pipeline.pagerank(), now);
    }
};

QueryFixture& shared_fixture() {
    static QueryFixture f(42);
    return f;
}

// Randomized parameter choices drawn from what the store actually contains.
std::vector<QuerySpec> specs_for_trial(QueryFixture& f, Rng& rng) {
    auto arts = f.store->scan_articles();
    REQUIRE(!arts.empty());
    auto pick_article = [&]() { return arts[rng.next_below(arts.size())]; };
    auto pick_journalist = [&]() -> std::string {
        for (int tries = 0; tries < 200; tries++) {
            auto a = pick_article();
            if (f.store->author(a->author_id)->is_journalist()) return a->author_id;
        }
        return arts[0]->author_id;
    };
    Date lo = Date::from_days(f.manifest.publish_days.front());
    Date hi = Date::from_days(f.manifest.publish_days.back());
    auto pick_date = [&]() {
        return pick_article()->publish_date;
    };

    std::vector<QuerySpec> specs;
    auto add = [&](QuerySpec s) { specs.push_back(std::move(s)); };

    add({.kind = QueryKind::Q1, .limit = 10});
    add({.kind = QueryKind::Q2,
         .interval_start = lo,
         .interval_end = lo.plus_days(static_cast<int64_t>(rng.uniform_int(30, 200))),
         .limit = 0});
    add({.kind = QueryKind::Q3,
         .interval_start = lo,
         .interval_end = hi,
         .journalist_id = pick_journalist(),
         .limit = 0});
    add({.kind = QueryKind::Q4, .date = pick_date(), .limit = 0});
    Date d5 = pick_date();
    add({.kind = QueryKind::Q5, .month = d5.month, .year = d5.year, .limit = 0});
    Date d6 = pick_date();
    add({.kind = QueryKind::Q6,
         .day_of_year = d6.day_of_year(),
         .year = d6.year,
         .year2 = d6.year + 1,
         .limit = 0});
    add({.kind = QueryKind::Q7, .date = pick_date(), .limit = 0});
    add({.kind = QueryKind::Q8,
         .lookback_days = static_cast<int>(rng.uniform_int(400, 4000)),
         .topic_id = pick_article()->topic_ids[0],
         .limit = 0});
    add({.kind = QueryKind::Q9, .limit = 200});
    add({.kind = QueryKind::Q10,
         .interval_start = lo,
         .interval_end = hi,
         .min_journalists = 2,
         .min_common_topics = 2,
         .limit = 0});
    add({.kind = QueryKind::Q11, .limit = 0});
    QuerySpec q12{.kind = QueryKind::Q12, .limit = 0};
    auto probe = pick_article();
    q12.search_terms = tokenize(probe->title);
    if (q12.search_terms.size() > 3) q12.search_terms.resize(3);
    if (rng.chance(0.5)) q12.author_id = probe->author_id;
    if (rng.chance(0.5)) q12.country_id = probe->country_id;
    add(q12);
    add({.kind = QueryKind::Q13, .document_id = pick_article()->id, .limit = 0});
    add({.kind = QueryKind::Q14,
         .year = static_cast<int>(rng.uniform_int(1950, 1985)),
         .limit = 0});
    add({.kind = QueryKind::A1});
    add({.kind = QueryKind::A2, .limit = 0});
    add({.kind = QueryKind::A3});
    add({.kind = QueryKind::A4});
    return specs;
}

void check_equivalence(QueryFixture& f, uint64_t trial_seed) {
    Rng rng(trial_seed);
    auto engine = f.engine();
    auto ostore = f.oracle_store();
    for (const auto& spec : specs_for_trial(f, rng)) {
        QueryResult got = engine.execute(spec);
        QueryResult want = oracle_execute(ostore, spec);
        INFO("kind ", to_string(spec.kind));
        REQUIRE(got.rows.size() == want.rows.size());
        CHECK(got.same_rows(want));
    }
}

} // namespace

TEST_CASE("all query kinds match the full-scan oracle on the standard fixture") {
    check_equivalence(shared_fixture(), 1001);
    check_equivalence(shared_fixture(), 1002);
}

TEST_CASE("query results are deterministic") {
    auto& f = shared_fixture();
    auto engine = f.engine();
    QuerySpec spec{.kind = QueryKind::Q11, .limit = 0};
    auto a = engine.execute(spec);
    auto b = engine.execute(spec);
    CHECK(a.same_rows(b));
}

TEST_CASE("Q4 at 2001-09-12 equals the counting oracle on a covering window") {
    // Window positioned so the date lies inside the generated span.
    gen::GeneratorConfig cfg;
    cfg.seed = 42;
    cfg.scale_factor_gb = 0.004;
    cfg.window_start = Date{2001, 6, 1};
    cfg.window_end = Date{2010, 12, 31};
    gen::MemorySink sink;
    auto manifest = gen::generate_corpus(cfg, sink);

    backend::SimBackendConfig bc;
    backend::SimBackend store(bc, clk());
    store.bulk_load(
        [&](const std::string& p) -> std::optional<std::string> {
            auto it = sink.files().find(p);
            if (it == sink.files().end()) return std::nullopt;
            return it->second;
        },
        gen::take_slice(manifest, 0.0, 1.0));

    QueryEngine engine(store, nullptr, cfg.window_end);
    QuerySpec spec{.kind = QueryKind::Q4, .date = Date{2001, 9, 12}, .limit = 0};
    auto got = engine.execute(spec);
    auto ostore = snapshot_for_oracle(store, {}, cfg.window_end);
    auto want = oracle_execute(ostore, spec);
    CHECK(got.same_rows(want));
    CHECK(got.total_matched > 0); // the window really covers the date
}

TEST_CASE("Q11 on a single-language store returns one pair") {
    ManualClock c(0);
    backend::SimBackendConfig bc;
    backend::SimBackend store(bc, c);
    store.put_catalog_entity(model::Topic{"t00", "physics"});
    store.put_catalog_entity(model::Keyword{"k00001", "higgs"});
    store.put_catalog_entity(model::Language{"l00", "en", "en-EN"});
    store.put_catalog_entity(model::Country{"c001", "Avaria", "AV"});
    store.put_catalog_entity(model::Author{.id = "u00001",
                                           .name = "Dana Greer",
                                           .birth_date = Date{1960, 1, 1},
                                           .citizenship_country = "c001",
                                           .work_country = "c001",
                                           .subtype = model::AuthorKind::Journalist,
                                           .employer_journal = "The Daily Ledger"});
    for (int i = 0; i < 4; i++) {
        store.write(gen::make_synthetic_article(1, "a" + std::to_string(i), "u00001", "t00",
                                                "k00001", "l00", "c001", Date{2005, 3, 4}));
    }
    QueryEngine engine(store, nullptr, Date{2010, 12, 31});
    auto r = engine.execute({.kind = QueryKind::Q11, .limit = 0});
    REQUIRE(r.rows.size() == 1);
    CHECK(std::get<std::string>(r.rows[0][0]) == "l00");
    CHECK(std::get<int64_t>(r.rows[0][1]) == 4);

    // A4 with no updates is 1; after updates it tracks the longest history.
    auto a4 = engine.execute({.kind = QueryKind::A4});
    CHECK(std::get<int64_t>(a4.rows[0][0]) == 1);
    store.update("a2", "new body");
    store.update("a2", "newer body");
    a4 = engine.execute({.kind = QueryKind::A4});
    CHECK(std::get<int64_t>(a4.rows[0][0]) == 3);
    CHECK(std::get<std::string>(a4.rows[0][1]) == "a2");
}

TEST_CASE("A3 closed form: authors aged 40 and 60 give mean 50 stddev 10") {
    ManualClock c(0);
    backend::SimBackendConfig bc;
    backend::SimBackend store(bc, c);
    store.put_catalog_entity(model::Author{.id = "u1",
                                           .name = "Elder Writer",
                                           .birth_date = Date{1950, 12, 31},
                                           .citizenship_country = "c1",
                                           .work_country = "c1",
                                           .subtype = model::AuthorKind::Journalist,
                                           .employer_journal = "Ledger"});
    store.put_catalog_entity(model::Author{.id = "u2",
                                           .name = "Younger Writer",
                                           .birth_date = Date{1970, 12, 31},
                                           .citizenship_country = "c1",
                                           .work_country = "c1",
                                           .subtype = model::AuthorKind::Journalist,
                                           .employer_journal = "Courier"});
    QueryEngine engine(store, nullptr, Date{2010, 12, 31});
    auto r = engine.execute({.kind = QueryKind::A3});
    CHECK(std::get<double>(r.rows[0][0]) == 50.0);
    CHECK(std::get<double>(r.rows[0][1]) == 10.0);
}

TEST_CASE("Q13 with no publications one year later is empty") {
    auto& f = shared_fixture();
    auto engine = f.engine();
    // The last-published article has no next-year candidates inside the span.
    auto arts = f.store->scan_articles();
    QuerySpec spec{.kind = QueryKind::Q13, .document_id = arts.back()->id, .limit = 0};
    auto r = engine.execute(spec);
    CHECK(r.rows.empty());
    CHECK(r.total_matched == 0);
}

TEST_CASE("missing parameters and bad arguments raise errors") {
    auto& f = shared_fixture();
    auto engine = f.engine();
    CHECK_THROWS_AS(engine.execute({.kind = QueryKind::Q4}), ArgumentError);
    CHECK_THROWS_AS(engine.execute({.kind = QueryKind::Q2}), ArgumentError);
    CHECK_THROWS_AS(engine.execute({.kind = QueryKind::Q5, .month = 13, .year = 2001}),
                    ArgumentError);
    CHECK_THROWS_AS(engine.execute({.kind = QueryKind::Q10,
                                    .interval_start = Date{2001, 1, 1},
                                    .interval_end = Date{2002, 1, 1},
                                    .min_journalists = 4,
                                    .min_common_topics = 2}),
                    ArgumentError);
    CHECK_THROWS_AS(query_kind_from_string("Q15"), ArgumentError);
}

TEST_CASE("index-dependent kinds fail without a built pipeline") {
    auto& f = shared_fixture();
    QueryEngine bare(*f.store, nullptr, f.now);
    CHECK_THROWS_AS(bare.execute({.kind = QueryKind::Q1, .limit = 5}), StateError);
    CHECK_THROWS_AS(bare.execute({.kind = QueryKind::Q13, .document_id = "a0000000"}),
                    StateError);
}

TEST_CASE("adding a matching article never removes rows (Q2, Q4, Q11)") {
    QueryFixture f(77, 120);
    auto engine = f.engine();
    Date d = f.store->scan_articles().back()->publish_date;
    QuerySpec q2{.kind = QueryKind::Q2,
                 .interval_start = d.plus_days(-40),
                 .interval_end = d.plus_days(1),
                 .limit = 0};
    QuerySpec q4{.kind = QueryKind::Q4, .date = d, .limit = 0};
    QuerySpec q11{.kind = QueryKind::Q11, .limit = 0};
    auto rows_of = [&](const QuerySpec& s) {
        auto r = engine.execute(s);
        std::set<std::string> out;
        for (const auto& row : r.rows) {
            std::string key;
            for (const auto& v : row) key += row_value_to_string(v) + "|";
            out.insert(key);
        }
        return out;
    };
    auto before2 = rows_of(q2), before4 = rows_of(q4), before11 = rows_of(q11);

    auto sample = f.store->scan_articles().back();
    auto extra = gen::make_synthetic_article(5, "zz-added", sample->author_id,
                                             sample->topic_ids[0], sample->keyword_ids[0],
                                             sample->language_id, sample->country_id, d);
    f.store->write(extra);

    auto after2 = rows_of(q2), after4 = rows_of(q4), after11 = rows_of(q11);
    for (const auto& row : before2) CHECK(after2.count(row));
    // Q4/Q11 rows are (key,count) aggregates: every keyword/language present
    // before stays present.
    auto keys_only = [](const std::set<std::string>& rows) {
        std::set<std::string> keys;
        for (const auto& r : rows) keys.insert(r.substr(0, r.find('|')));
        return keys;
    };
    for (const auto& k : keys_only(before4)) CHECK(keys_only(after4).count(k));
    for (const auto& k : keys_only(before11)) CHECK(keys_only(after11).count(k));
}

TEST_CASE("Q9 and Q14 never return professionals where journalists are required") {
    auto& f = shared_fixture();
    auto engine = f.engine();
    auto q9 = engine.execute({.kind = QueryKind::Q9, .limit = 0});
    for (const auto& row : q9.rows) {
        CHECK(f.store->author(std::get<std::string>(row[1]))->is_journalist());
        CHECK_FALSE(f.store->author(std::get<std::string>(row[2]))->is_journalist());
    }
    auto q14 = engine.execute({.kind = QueryKind::Q14, .year = 1965, .limit = 0});
    auto arts = f.oracle_store();
    for (const auto& row : q14.rows) {
        for (int col = 0; col < 2; col++) {
            const auto& id = std::get<std::string>(row[static_cast<size_t>(col)]);
            const auto& author_id =
                std::find_if(arts.articles.begin(), arts.articles.end(),
                             [&](const model::Article& a) { return a.id == id; })
                    ->author_id;
            CHECK(f.store->author(author_id)->is_journalist());
        }
    }
}
