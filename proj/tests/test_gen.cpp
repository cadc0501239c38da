#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "core/digest.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"
#include "core/text.hpp"
#include "doctest.h"
#include "gen/generator.hpp"
#include "model/xml_io.hpp"

using namespace nhb;
using namespace nhb::gen;
using namespace nhb::model;

namespace {

GeneratorConfig desk_config(double sf = 0.01, uint64_t seed = 42) {
    GeneratorConfig c;
    c.seed = seed;
    c.scale_factor_gb = sf;
    return c;
}

struct Generated {
    MemorySink sink;
    CorpusManifest manifest;
};

const Generated& standard_corpus() {
    static Generated g = [] {
        Generated out;
        out.manifest = generate_corpus(desk_config(), out.sink);
        return out;
    }();
    return g;
}

Article load_article(const Generated& g, const std::string& id) {
    return parse_article(g.sink.files().at(paths::article(id)));
}

} // namespace

TEST_CASE("same config yields byte-identical corpora") {
    MemorySink a, b;
    auto cfg = desk_config(0.002);
    CorpusManifest ma = generate_corpus(cfg, a);
    CorpusManifest mb = generate_corpus(cfg, b);
    CHECK(a.digest() == b.digest());
    CHECK(ma.to_json() == mb.to_json());
}

TEST_CASE("different seeds yield different article bodies") {
    MemorySink a, b;
    generate_corpus(desk_config(0.002, 42), a);
    generate_corpus(desk_config(0.002, 43), b);
    CHECK(a.digest() != b.digest());
    CHECK(parse_article(a.files().at(paths::article("a0000000"))).body !=
          parse_article(b.files().at(paths::article("a0000000"))).body);
}

TEST_CASE("increasing SF extends the corpus without rewriting its prefix") {
    MemorySink small, big;
    CorpusManifest ms = generate_corpus(desk_config(0.002), small);
    CorpusManifest mb = generate_corpus(desk_config(0.004), big);
    REQUIRE(mb.article_count > ms.article_count);
    // Every file of the small corpus exists byte-identically in the big one.
    for (const auto& [path, bytes] : small.files()) {
        auto it = big.files().find(path);
        REQUIRE_MESSAGE(it != big.files().end(), path);
        CHECK(it->second == bytes);
    }
    // Manifest slice 0 is identical between both scales.
    REQUIRE(!ms.slices.empty());
    REQUIRE(!mb.slices.empty());
    CHECK(ms.slices[0].first_article == mb.slices[0].first_article);
    CHECK(ms.slices[0].last_article == mb.slices[0].last_article);
    CHECK(ms.slices[0].bytes == mb.slices[0].bytes);
}

TEST_CASE("emitted bytes land within one percent of the target") {
    const auto& g = standard_corpus();
    double target = static_cast<double>(g.manifest.config.target_bytes());
    double actual = static_cast<double>(g.manifest.total_bytes);
    CHECK(std::abs(actual - target) / target < 0.01);
    // And the sink saw exactly the accounted bytes.
    uint64_t on_disk = 0;
    for (const auto& [path, bytes] : g.sink.files()) on_disk += bytes.size();
    CHECK(on_disk == g.manifest.total_bytes);
}

TEST_CASE("scale factor too small to hold one article is a config error") {
    auto cfg = desk_config();
    cfg.scale_factor_gb = 1e-9; // ~1 byte
    MemorySink sink;
    CHECK_THROWS_AS(generate_corpus(cfg, sink), ConfigError);
}

TEST_CASE("citation edges point only to earlier-published articles") {
    const auto& g = standard_corpus();
    size_t with_citations = 0;
    for (uint64_t i = 0; i < g.manifest.article_count; i += 7) {
        Article a = load_article(g, g.manifest.article_id(i));
        for (const auto& cited : a.citations) {
            CHECK(cited < a.id); // id order equals publish order
        }
        with_citations += a.citations.empty() ? 0 : 1;
    }
    CHECK(with_citations > 0);
}

TEST_CASE("publish dates stay within the window and advance monotonically") {
    const auto& g = standard_corpus();
    int64_t lo = g.manifest.config.window_start.to_days();
    int64_t hi = g.manifest.config.window_end.to_days();
    int64_t prev = lo;
    for (int64_t day : g.manifest.publish_days) {
        CHECK(day >= lo);
        CHECK(day <= hi);
        CHECK(day >= prev);
        prev = day;
    }
}

TEST_CASE("author birth dates precede their first article by at least 15 years") {
    const auto& g = standard_corpus();
    std::map<std::string, Date> first_pub;
    for (uint64_t i = 0; i < g.manifest.article_count; i++) {
        Article a = load_article(g, g.manifest.article_id(i));
        if (!first_pub.count(a.author_id)) first_pub[a.author_id] = a.publish_date;
    }
    CHECK(first_pub.size() == g.manifest.per_entity_counts.at("authors"));
    for (const auto& [author_id, pub] : first_pub) {
        Author u = std::get<Author>(parse_entity(g.sink.files().at(paths::author(author_id))));
        CHECK(u.birth_date.plus_years(15) <= pub);
    }
}

TEST_CASE("every reference in a prefix slice resolves within the prefix") {
    const auto& g = standard_corpus();
    Slice half = take_slice(g.manifest, 0.0, 0.4);
    std::set<std::string> author_files, media_files, date_files;
    for (uint64_t i = half.first_article; i < half.end_article; i++) {
        Article a = load_article(g, g.manifest.article_id(i));
        // Catalog references exist in the preamble.
        for (const auto& t : a.topic_ids) CHECK(g.sink.files().count(paths::topic(t)));
        for (const auto& k : a.keyword_ids) CHECK(g.sink.files().count(paths::keyword(k)));
        CHECK(g.sink.files().count(paths::language(a.language_id)));
        CHECK(g.sink.files().count(paths::country(a.country_id)));
        CHECK(g.sink.files().count(paths::author(a.author_id)));
        CHECK(g.sink.files().count(paths::date(a.publish_date)));
        for (const auto& m : a.media_refs) {
            CHECK(g.sink.files().count(paths::media_xml(m)));
            CHECK(g.sink.files().count(paths::media_payload(m)));
            MediaRef ref = std::get<MediaRef>(parse_entity(g.sink.files().at(paths::media_xml(m))));
            CHECK(ref.byte_size == g.sink.files().at(paths::media_payload(m)).size());
            CHECK(ref.payload_digest ==
                  "fnv1a64:" + Fnv1a64{}.update(g.sink.files().at(paths::media_payload(m))).hex());
        }
        for (const auto& c : a.citations) {
            CHECK(c < a.id); // cited article is part of the same prefix
        }
    }
}

TEST_CASE("take_slice covers the corpus and cuts disjointly") {
    const auto& g = standard_corpus();
    Slice whole = take_slice(g.manifest, 0.0, 1.0);
    CHECK(whole.first_article == 0);
    CHECK(whole.end_article == g.manifest.article_count);
    CHECK(whole.byte_size() == g.manifest.total_bytes);

    Slice lo = take_slice(g.manifest, 0.0, 0.5);
    Slice hi = take_slice(g.manifest, 0.5, 1.0);
    CHECK(lo.end_article == hi.first_article); // disjoint, no gap
    CHECK(lo.article_count() + hi.article_count() == g.manifest.article_count);

    // Byte size within one bundle of the fraction target.
    uint64_t max_bundle = *std::max_element(g.manifest.bundle_bytes.begin(),
                                            g.manifest.bundle_bytes.end());
    double half_target = 0.5 * static_cast<double>(g.manifest.total_bytes);
    CHECK(std::abs(static_cast<double>(lo.byte_size()) - half_target) <=
          static_cast<double>(max_bundle));

    CHECK_THROWS_AS(take_slice(g.manifest, 0.25, 0.25), ArgumentError);
    CHECK_THROWS_AS(take_slice(g.manifest, -0.1, 0.5), ArgumentError);
    CHECK_THROWS_AS(take_slice(g.manifest, 0.5, 1.1), ArgumentError);
}

TEST_CASE("next_slice continues monotonically and reports exhaustion") {
    const auto& g = standard_corpus();
    Slice rest = next_slice(g.manifest, 0.5, 0.5);
    CHECK(rest.end_article == g.manifest.article_count);
    CHECK(rest.first_article == take_slice(g.manifest, 0.0, 0.5).end_article);

    CHECK_THROWS_AS(next_slice(g.manifest, 1.0, 0.1), NoExtraDataError);

    Slice a = next_slice(g.manifest, 0.25, 0.25);
    Slice b = next_slice(g.manifest, 0.5, 0.25);
    Slice joint = take_slice(g.manifest, 0.25, 0.75);
    CHECK(a.first_article == joint.first_article);
    CHECK(b.end_article == joint.end_article);
    CHECK(a.end_article == b.first_article);
}

TEST_CASE("manifest json round trips") {
    const auto& g = standard_corpus();
    std::string json = g.manifest.to_json();
    CorpusManifest re = CorpusManifest::from_json(json);
    CHECK(re.to_json() == json);
    CHECK(re.article_id(3) == "a0000003");
}

TEST_CASE("word frequencies follow the configured zipf law") {
    const auto& g = standard_corpus(); // 10 MB corpus at the default exponent
    std::map<std::string, uint64_t> counts;
    uint64_t total = 0;
    for (const auto& [path, bytes] : g.sink.files()) {
        bool is_article = path.rfind("articles/", 0) == 0;
        bool is_media = path.rfind("media/", 0) == 0 && path.ends_with(".xml");
        if (!is_article && !is_media) continue;
        std::string text;
        if (is_article) {
            Article a = parse_article(bytes);
            text = a.title + " " + a.body;
        } else {
            text = std::get<MediaRef>(parse_entity(bytes)).transcript;
        }
        for (auto& tok : tokenize(text)) {
            counts[tok]++;
            total++;
        }
    }
    REQUIRE(total > 200000);
    std::vector<uint64_t> freq;
    freq.reserve(counts.size());
    for (const auto& [w, c] : counts) freq.push_back(c);
    std::sort(freq.rbegin(), freq.rend());

    ZipfSampler zipf(g.manifest.config.vocabulary_size, g.manifest.config.zipf_exponent);
    double emp = 0.0, theo = 0.0, ks = 0.0;
    for (uint32_t r = 1; r <= zipf.size(); r++) {
        if (r <= freq.size()) emp += static_cast<double>(freq[r - 1]) / total;
        theo += zipf.pmf(r);
        ks = std::max(ks, std::abs(emp - theo));
    }
    CHECK(ks < 0.05);
}

TEST_CASE("planted two-topic corpora use disjoint vocabularies") {
    GeneratorConfig cfg = desk_config(0.002, 7);
    cfg.topics_total = 2;
    cfg.topic_mixing = 1.0;
    MemorySink sink;
    CorpusManifest m = generate_corpus(cfg, sink);
    std::set<std::string> vocab[2];
    for (uint64_t i = 0; i < m.article_count; i++) {
        Article a = parse_article(sink.files().at(paths::article(m.article_id(i))));
        // Primary topic is the sampling block; bodies of single-topic articles
        // must not share words across blocks.
        if (a.topic_ids.size() != 1) continue;
        int t = a.topic_ids[0] == "t00" ? 0 : 1;
        for (auto& tok : tokenize(a.body)) vocab[t].insert(tok);
    }
    REQUIRE(!vocab[0].empty());
    REQUIRE(!vocab[1].empty());
    std::vector<std::string> overlap;
    std::set_intersection(vocab[0].begin(), vocab[0].end(), vocab[1].begin(), vocab[1].end(),
                          std::back_inserter(overlap));
    CHECK(overlap.empty());
}

TEST_CASE("synthetic mutation articles are self-consistent") {
    Article a = make_synthetic_article(9, "w1-000", "u00001", "t00", "k00001", "l00", "c001",
                                       Date{2009, 5, 4});
    CHECK(check_invariants(a).empty());
    Article b = make_synthetic_article(9, "w1-000", "u00001", "t00", "k00001", "l00", "c001",
                                       Date{2009, 5, 4});
    CHECK(a == b);
}
