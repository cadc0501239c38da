#include <cmath>
#include <map>
#include <optional>
#include <set>

#include "core/errors.hpp"
#include "core/text.hpp"
#include "doctest.h"
#include "gen/generator.hpp"
#include "meta/index.hpp"
#include "meta/lda.hpp"
#include "meta/pagerank.hpp"
#include "meta/pipeline.hpp"
#include "model/xml_io.hpp"

using namespace nhb;
using namespace nhb::meta;

namespace {

// Independent brute-force tf-idf: per (term, document) direct formula
// evaluation with its own counting, no shared code with InvertedIndex.
std::map<std::string, std::map<std::string, double>> tfidf_oracle(
    const std::vector<Document>& docs) {
    std::map<std::string, std::map<std::string, uint32_t>> counts;
    for (const auto& d : docs) {
        auto& slot = counts[d.id];
        for (const auto& tok : tokenize(d.text)) slot[tok]++;
    }
    const double n = static_cast<double>(docs.size());
    std::map<std::string, std::map<std::string, double>> out;
    for (const auto& [doc, terms] : counts) {
        for (const auto& [term, tf] : terms) {
            uint32_t df = 0;
            for (const auto& [other, other_terms] : counts)
                if (other_terms.count(term)) df++;
            out[doc][term] = static_cast<double>(tf) * std::log(n / static_cast<double>(df));
        }
    }
    return out;
}

// Dense power-iteration pagerank oracle: explicit transition matrix.
std::map<std::string, double> pagerank_oracle(const CitationGraph& g, double d, double eps,
                                              uint32_t max_iter) {
    const size_t n = g.node_count();
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    std::vector<bool> dangling(n, true);
    for (uint32_t u = 0; u < n; u++) {
        double total = 0.0;
        for (const auto& [v, w] : g.out_edges(u)) total += w;
        if (total == 0.0) continue;
        dangling[u] = false;
        for (const auto& [v, w] : g.out_edges(u)) m[u][v] = w / total;
    }
    std::vector<double> r(n, 1.0 / static_cast<double>(n)), next(n);
    for (uint32_t iter = 0; iter < max_iter; iter++) {
        double mass = 0.0;
        for (size_t u = 0; u < n; u++)
            if (dangling[u]) mass += r[u];
        for (size_t v = 0; v < n; v++) {
            double acc = (1.0 - d) / static_cast<double>(n) + d * mass / static_cast<double>(n);
            for (size_t u = 0; u < n; u++) acc += d * r[u] * m[u][v];
            next[v] = acc;
        }
        double delta = 0.0;
        for (size_t v = 0; v < n; v++) delta += std::abs(next[v] - r[v]);
        r.swap(next);
        if (delta < eps) break;
    }
    std::map<std::string, double> out;
    for (size_t i = 0; i < n; i++) out[g.ids()[i]] = r[i];
    return out;
}

std::vector<Document> toy_docs() {
    return {
        {"a01", "a01", "the higgs boson decays quickly into photons"},
        {"a02", "a02", "markets rallied as the central bank held rates"},
        {"a03", "a03", "the boson experiment repeated the higgs result"},
        {"a04", "a04", "storm damage closed the coastal road network"},
        {"a05", "a05", "photons scattered in the detector array"},
    };
}

} // namespace

TEST_CASE("single-document corpus has all zero weights") {
    InvertedIndex idx = build_index({{"a01", "a01", "alpha beta alpha"}});
    for (const auto& [term, w] : idx.tfidf_vector("a01")) CHECK(w == 0.0);
    CHECK(idx.doc_count() == 1);
    CHECK(idx.tf("alpha", "a01") == 2);
}

TEST_CASE("ubiquitous terms carry zero weight") {
    InvertedIndex idx = build_index({{"a", "a", "shared alpha"},
                                     {"b", "b", "shared beta"},
                                     {"c", "c", "shared gamma"}});
    CHECK(idx.weight("shared", 1) == 0.0);
    CHECK(idx.weight("alpha", 1) > 0.0);
}

TEST_CASE("empty corpus and zero-token documents are legal") {
    InvertedIndex empty = build_index({});
    CHECK(empty.doc_count() == 0);
    CHECK(empty.vocabulary_size() == 0);

    InvertedIndex idx = build_index({{"a", "a", "real words here"}, {"b", "b", "! ? ."}});
    CHECK(idx.doc_count() == 2);
    CHECK(idx.tfidf_vector("b").empty());
}

TEST_CASE("tf-idf equals the double-loop oracle term by term") {
    auto docs = toy_docs();
    InvertedIndex idx = build_index(docs);
    auto oracle = tfidf_oracle(docs);
    for (const auto& d : docs) {
        auto vec = idx.tfidf_vector(d.id);
        REQUIRE(vec.size() == oracle.at(d.id).size());
        for (const auto& [term, w] : vec) {
            CHECK(w == oracle.at(d.id).at(term)); // bitwise: same formula on same integers
        }
    }
}

TEST_CASE("pagerank trivial shapes") {
    CitationGraph single({"a"});
    auto r1 = compute_pagerank(single);
    CHECK(r1.at("a") == doctest::Approx(1.0).epsilon(1e-12));

    CitationGraph cycle({"a", "b"});
    cycle.add_edge("a", "b");
    cycle.add_edge("b", "a");
    auto r2 = compute_pagerank(cycle);
    CHECK(r2.at("a") == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(r2.at("b") == doctest::Approx(0.5).epsilon(1e-9));

    CHECK_THROWS_AS(compute_pagerank(cycle, {.damping = 1.0}), ArgumentError);
    CHECK_THROWS_AS(compute_pagerank(cycle, {.damping = 0.0}), ArgumentError);
    CHECK_THROWS_AS(compute_pagerank(CitationGraph{}), ArgumentError);
}

TEST_CASE("weighted pagerank matches the dense oracle within 1e-8") {
    CitationGraph g({"n1", "n2", "n3", "n4"});
    g.add_edge("n1", "n2", 3.0);
    g.add_edge("n1", "n3", 1.0);
    g.add_edge("n2", "n3", 2.0);
    g.add_edge("n3", "n1", 1.0);
    // n4 dangles.
    auto fast = compute_pagerank(g);
    auto oracle = pagerank_oracle(g, 0.85, 1e-8, 100);
    double l1 = 0.0, sum = 0.0;
    for (const auto& [id, score] : fast) {
        l1 += std::abs(score - oracle.at(id));
        sum += score;
        CHECK(score >= 0.0);
    }
    CHECK(l1 < 1e-8);
    CHECK(std::abs(sum - 1.0) < 1e-6);
}

TEST_CASE("pagerank is invariant under node relabeling") {
    // 10-node graph, then the same shape with permuted labels.
    std::vector<std::string> base;
    for (int i = 0; i < 10; i++) base.push_back("x" + std::to_string(i));
    CitationGraph g(base);
    for (int i = 0; i < 10; i++)
        for (int j = 1; j <= 3; j++)
            g.add_edge(base[i], base[(i * 7 + j * 3) % 10], 1.0 + j);

    auto relabel = [](int i) { return "y" + std::to_string((i * 3 + 4) % 10); };
    std::vector<std::string> permuted;
    for (int i = 0; i < 10; i++) permuted.push_back(relabel(i));
    CitationGraph h(permuted);
    for (int i = 0; i < 10; i++)
        for (int j = 1; j <= 3; j++)
            h.add_edge(relabel(i), relabel((i * 7 + j * 3) % 10), 1.0 + j);

    auto rg = compute_pagerank(g);
    auto rh = compute_pagerank(h);
    for (int i = 0; i < 10; i++)
        CHECK(rg.at(base[i]) == doctest::Approx(rh.at(relabel(i))).epsilon(1e-12));
}

TEST_CASE("lda is deterministic and normalized") {
    auto docs = toy_docs();
    LdaParams p{.topics = 3, .iterations = 50, .seed = 99};
    auto m1 = extract_topics(docs, p);
    auto m2 = extract_topics(docs, p);
    CHECK(m1.theta == m2.theta);
    CHECK(m1.phi == m2.phi);
    for (const auto& row : m1.theta) {
        double s = 0.0;
        for (double v : row) {
            CHECK(v >= 0.0);
            s += v;
        }
        CHECK(std::abs(s - 1.0) < 1e-9);
    }
    for (const auto& row : m1.phi) {
        double s = 0.0;
        for (double v : row) s += v;
        CHECK(std::abs(s - 1.0) < 1e-9);
    }
}

TEST_CASE("lda argument errors") {
    CHECK_THROWS_AS(extract_topics({}, LdaParams{.topics = 2}), ArgumentError);
    CHECK_THROWS_AS(extract_topics(toy_docs(), LdaParams{.topics = 1}), ArgumentError);
    // K larger than the corpus vocabulary.
    CHECK_THROWS_AS(extract_topics({{"a", "a", "word word word"}}, LdaParams{.topics = 2}),
                    ArgumentError);
    // Single document with two distinct words normalizes fine.
    auto m = extract_topics({{"a", "a", "alpha beta"}}, LdaParams{.topics = 2, .iterations = 10});
    double s = 0.0;
    for (double v : m.doc_distribution("a")) s += v;
    CHECK(std::abs(s - 1.0) < 1e-9);
}

TEST_CASE("lda recovers planted disjoint topics") {
    gen::GeneratorConfig cfg;
    cfg.seed = 7;
    cfg.scale_factor_gb = 0.002;
    cfg.topics_total = 2;
    cfg.topic_mixing = 1.0;
    gen::MemorySink sink;
    auto manifest = gen::generate_corpus(cfg, sink);

    std::vector<Document> docs;
    std::map<std::string, int> truth; // doc -> generating topic (single-topic articles)
    for (uint64_t i = 0; i < manifest.article_count; i++) {
        auto a = model::parse_article(sink.files().at(gen::paths::article(manifest.article_id(i))));
        docs.push_back({a.id, a.id, a.title + " " + a.body});
        if (a.topic_ids.size() == 1) truth[a.id] = a.topic_ids[0] == "t00" ? 0 : 1;
    }
    REQUIRE(truth.size() > 100);
    auto model = extract_topics(docs, LdaParams{.topics = 2, .iterations = 100, .seed = 5});
    // Majority-vote mapping from model topics to planted topics, then purity.
    int votes[2][2] = {{0, 0}, {0, 0}};
    for (const auto& [doc, t] : truth) votes[model.dominant_topic(doc)][t]++;
    int mapping0 = votes[0][0] >= votes[0][1] ? 0 : 1;
    int correct = 0;
    for (const auto& [doc, t] : truth) {
        int predicted = model.dominant_topic(doc) == 0 ? mapping0 : 1 - mapping0;
        if (predicted == t) correct++;
    }
    double purity = static_cast<double>(correct) / static_cast<double>(truth.size());
    CHECK(purity >= 0.9);
}

TEST_CASE("incremental update equals a from-scratch rebuild") {
    auto all = toy_docs();
    std::vector<Document> first(all.begin(), all.begin() + 3);
    std::vector<Document> rest(all.begin() + 3, all.end());

    std::vector<std::string> first_ids, all_ids;
    for (const auto& d : first) first_ids.push_back(d.id);
    for (const auto& d : all) all_ids.push_back(d.id);
    CitationGraph g_first(first_ids), g_all(all_ids);
    g_first.add_edge("a03", "a01");
    g_all.add_edge("a03", "a01");
    g_all.add_edge("a05", "a01", 2.0);
    g_all.add_edge("a04", "a02");

    PipelineParams params;
    params.lda.topics = 2;
    params.lda.iterations = 30;

    MetadataPipeline incremental;
    incremental.build(first, g_first, params);
    incremental.incremental(rest, g_all);

    MetadataPipeline scratch;
    scratch.build(all, g_all, params);

    CHECK(incremental.index() == scratch.index());
    CHECK(incremental.records() == scratch.records());
    CHECK(incremental.state_digest() == scratch.state_digest());

    // Document count doubles when the corpus doubles.
    CHECK(incremental.index().doc_count() == 5);

    // Empty increment is a no-op.
    std::string before = incremental.state_digest();
    incremental.incremental({}, g_all);
    CHECK(incremental.state_digest() == before);

    MetadataPipeline unbuilt;
    CHECK_THROWS_AS(unbuilt.incremental(rest, g_all), StateError);
}

TEST_CASE("metadata records persist and reload") {
    auto docs = toy_docs();
    std::vector<std::string> ids;
    for (const auto& d : docs) ids.push_back(d.id);
    CitationGraph g(ids);
    g.add_edge("a03", "a01");

    PipelineParams params;
    params.lda.topics = 2;
    params.lda.iterations = 20;
    MetadataPipeline pipe;
    pipe.build(docs, g, params);

    std::map<std::string, std::string> store;
    pipe.persist([&](const std::string& path, const std::string& bytes) { store[path] = bytes; });
    CHECK(store.size() == docs.size() + 1); // records + marker

    MetadataPipeline reloaded;
    bool ok = reloaded.load(docs, [&](const std::string& path) -> std::optional<std::string> {
        auto it = store.find(path);
        if (it == store.end()) return std::nullopt;
        return it->second;
    });
    CHECK(ok);
    CHECK(reloaded.records() == pipe.records());
    CHECK(reloaded.index() == pipe.index());

    // Persisting twice produces identical bytes.
    std::map<std::string, std::string> again;
    pipe.persist([&](const std::string& path, const std::string& bytes) { again[path] = bytes; });
    CHECK(again == store);

    MetadataPipeline blank;
    CHECK_FALSE(blank.load(docs, [](const std::string&) { return std::nullopt; }));
}

TEST_CASE("search scoring aggregates transcripts into their owning article") {
    std::vector<Document> docs = toy_docs();
    docs.push_back({"m0000001", "a02", "higgs chatter on the trading floor"});
    MetadataPipeline pipe;
    PipelineParams params;
    params.run_lda = false;
    std::vector<std::string> ids;
    for (const auto& d : toy_docs()) ids.push_back(d.id);
    pipe.build(docs, CitationGraph(ids), params);

    auto scores = pipe.score_articles({"higgs"});
    CHECK(scores.count("a01"));
    CHECK(scores.count("a03"));
    CHECK(scores.count("a02")); // via its transcript
    CHECK_FALSE(scores.count("a04"));

    auto none = pipe.score_articles({"unseen"});
    CHECK(none.empty());

    CHECK(pipe.document_similarity("a01", "a03") > 0.0);
    CHECK(pipe.document_similarity("a01", "a04") == 0.0);
}
