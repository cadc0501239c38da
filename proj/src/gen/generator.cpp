#include "gen/generator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "core/digest.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"
#include "model/xml_io.hpp"

namespace nhb::gen {

namespace fs = std::filesystem;
using namespace nhb::model;

namespace {

constexpr const char* kLanguageCodes[24] = {
    "en", "es", "fr", "de", "pt", "ru", "zh", "ar", "hi", "ja", "it", "nl",
    "sv", "pl", "tr", "ko", "da", "fi", "no", "cs", "el", "he", "th", "uk"};

constexpr const char* kCountryNames[48] = {
    "Avaria",    "Borundia",  "Caldora",   "Drevnia",    "Elbasan",   "Fjordane",
    "Galdova",   "Hestia",    "Ivoria",    "Jutlandia",  "Karelia",   "Lusitania",
    "Meridia",   "Nordavia",  "Ostrava",   "Pannonia",   "Quiberon",  "Rodinia",
    "Silvania",  "Tyrrenia",  "Umbria",    "Valdavia",   "Wessexia",  "Xanadu",
    "Ystradia",  "Zeelandia", "Arcadia",   "Battenberg", "Cormier",   "Dunkeld",
    "Esperanza", "Falkirk",   "Grenadier", "Hibernia",   "Illyria",   "Jasperia",
    "Kalmar",    "Leinster",  "Moravia",   "Novigrad",   "Orcadia",   "Pictland",
    "Quarovia",  "Ruthenia",  "Septimania","Tarasia",    "Uralia",    "Vindobona"};

constexpr const char* kFirstNames[24] = {
    "Dana",  "Marek", "Ines",  "Viktor", "Salma",  "Bruno",  "Yuki", "Petra",
    "Oscar", "Leila", "Tomas", "Greta",  "Anders", "Mireia", "Ravi", "Clara",
    "Henrik","Paula", "Dmitri","Sofia",  "Emre",   "Astrid", "Milan","Noor"};

constexpr const char* kLastNames[32] = {
    "Greer",    "Albrecht", "Moreno",  "Takeda",  "Lindqvist", "Ferreira", "Novak",
    "Castell",  "Brandt",   "Okafor",  "Haugen",  "Petrov",    "Marchetti","Sorensen",
    "Delacroix","Vance",    "Kovacs",  "Ibrahim", "Wexler",    "Andrade",  "Hollis",
    "Kuusinen", "Barros",   "Tanaka",  "Olsen",   "Reinholt",  "Dubois",   "Kaminski",
    "Varga",    "Sandoval", "Mbeki",   "Larsen"};

constexpr const char* kJournals[16] = {
    "The Daily Ledger",    "Morning Courier",    "The Evening Standard", "Continental Herald",
    "The Metro Dispatch",  "Harbor Gazette",     "The Northern Post",    "Capital Chronicle",
    "The Plainsman",       "Coastal Observer",   "The City Register",    "Union Telegraph",
    "The Midland Echo",    "Summit Tribune",     "The Valley Sentinel",  "Meridian Review"};

constexpr const char* kCommentStubs[8] = {
    "raw interview cut",   "studio master",      "field recording",     "press briefing feed",
    "archival restoration","satellite downlink", "wire service dub",    "newsroom voiceover"};

std::string word_for_index(uint32_t index) {
    return vocabulary_word(index);
}

} // namespace

// Deterministic pronounceable token for a vocabulary index: mixed-radix
// syllables, injective, seed-independent.
std::string vocabulary_word(uint32_t index) {
    static constexpr const char* kSyllables[] = {
        "ba", "be", "bi", "bo", "bu", "da", "de", "di", "do", "du", "fa", "fe", "fi",
        "fo", "fu", "ga", "ge", "gi", "go", "gu", "ka", "ke", "ki", "ko", "ku", "la",
        "le", "li", "lo", "lu", "ma", "me", "mi", "mo", "mu", "na", "ne", "ni", "no",
        "nu", "pa", "pe", "pi", "po", "pu", "ra", "re", "ri", "ro", "ru", "sa", "se",
        "si", "so", "su", "ta", "te", "ti", "to", "tu", "va", "ve", "vi", "vo", "vu",
        "za", "ze", "zi", "zo", "zu"};
    constexpr uint32_t kBase = sizeof(kSyllables) / sizeof(kSyllables[0]);
    std::string out;
    uint32_t v = index;
    do {
        out += kSyllables[v % kBase];
        v /= kBase;
    } while (v > 0);
    return out;
}

namespace {

std::string id_with_prefix(char prefix, int width, uint64_t n) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%c%0*llu", prefix, width,
                  static_cast<unsigned long long>(n));
    return buf;
}

// Shared sampling context for one corpus.
struct Vocabulary {
    uint32_t size;          // rounded up to a multiple of topics
    uint32_t topics;
    double mixing;
    ZipfSampler zipf;

    Vocabulary(const GeneratorConfig& c)
        : size((c.vocabulary_size + c.topics_total - 1) / c.topics_total * c.topics_total),
          topics(c.topics_total),
          mixing(c.topic_mixing),
          zipf(size, c.zipf_exponent) {}

    // Global Zipf rank, optionally remapped into the topic's own block
    // (indexes congruent to `topic` mod `topics`) while keeping the rank
    // magnitude, so the corpus-wide distribution stays Zipf-shaped.
    uint32_t sample_index(Rng& rng, uint32_t topic) const {
        uint32_t idx = zipf.sample(rng) - 1;
        if (mixing > 0.0 && rng.chance(mixing)) idx = idx / topics * topics + topic;
        return idx;
    }

    std::string sample_word(Rng& rng, uint32_t topic) const {
        return word_for_index(sample_index(rng, topic));
    }
};

std::string make_sentence_text(Rng& rng, const Vocabulary& vocab, uint32_t topic,
                               uint32_t word_count) {
    std::string out;
    out.reserve(word_count * 7);
    uint32_t until_period = static_cast<uint32_t>(rng.uniform_int(6, 14));
    bool sentence_start = true;
    for (uint32_t w = 0; w < word_count; w++) {
        std::string word = vocab.sample_word(rng, topic);
        if (sentence_start) word[0] = static_cast<char>(std::toupper(word[0]));
        if (!out.empty()) out += ' ';
        out += word;
        sentence_start = false;
        if (--until_period == 0 && w + 1 < word_count) {
            out += '.';
            until_period = static_cast<uint32_t>(rng.uniform_int(6, 14));
            sentence_start = true;
        }
    }
    out += '.';
    return out;
}

std::string title_text(Rng& rng, const Vocabulary& vocab, uint32_t topic) {
    uint32_t words = static_cast<uint32_t>(rng.uniform_int(3, 8));
    std::string out;
    for (uint32_t w = 0; w < words; w++) {
        std::string word = vocab.sample_word(rng, topic);
        if (w == 0) word[0] = static_cast<char>(std::toupper(word[0]));
        if (!out.empty()) out += ' ';
        out += word;
    }
    return out;
}

class CorpusBuilder {
public:
    CorpusBuilder(const GeneratorConfig& config, CorpusSink& sink)
        : cfg_(config), sink_(sink), vocab_(config) {}

    CorpusManifest run() {
        cfg_.validate();
        emit_preamble();
        const uint64_t target = cfg_.target_bytes();
        uint64_t emitted = preamble_bytes_;
        double timeline_hours = 0.0;
        const int64_t window_days = cfg_.window_end.to_days() - cfg_.window_start.to_days();

        for (uint64_t i = 0;; i++) {
            if (cfg_.article_count_cap > 0) {
                if (i >= cfg_.article_count_cap) break;
            } else if (emitted >= target) {
                break;
            }
            Bundle b = make_bundle(i, timeline_hours, window_days);
            if (cfg_.article_count_cap == 0 && emitted + b.bytes > target) {
                // Stop on whichever side of the target is closer.
                if (emitted + b.bytes - target > target - emitted && i > 0) break;
            }
            emit_bundle(b);
            emitted += b.bytes;
            manifest_.publish_days.push_back(b.publish_day);
            manifest_.bundle_bytes.push_back(b.bytes);
            timeline_hours = b.timeline_hours;
        }
        if (manifest_.publish_days.empty())
            throw ConfigError("scale factor too small to hold one article");

        manifest_.config = cfg_;
        manifest_.preamble_bytes = preamble_bytes_;
        manifest_.total_bytes = emitted;
        manifest_.article_count = manifest_.publish_days.size();
        fill_slices();
        fill_counts();
        manifest_.rebuild_cumulative();
        manifest_.check();
        return manifest_;
    }

private:
    // Side effects on the shared builder state (author set, date set, media
    // counter) are recorded here and applied only when the bundle is emitted,
    // so a bundle discarded by the byte-target stop rule leaves no trace.
    struct Bundle {
        uint64_t bytes = 0;
        int64_t publish_day = 0;
        double timeline_hours = 0.0;
        int64_t new_author = -1;
        bool new_date = false;
        uint32_t media_used = 0;
        std::vector<std::pair<std::string, std::string>> files;
    };

    void emit_file(const std::string& path, const std::string& bytes) {
        sink_.emit(path, bytes);
        preamble_bytes_ += bytes.size();
    }

    void emit_preamble() {
        for (uint32_t t = 0; t < cfg_.topics_total; t++) {
            Topic topic{id_with_prefix('t', 2, t), "sec-" + word_for_index(vocab_.size + t)};
            topic_ids_.push_back(topic.id);
            emit_file(paths::topic(topic.id), serialize_entity(Entity{topic}));
        }
        for (uint32_t k = 0; k < cfg_.keywords_total; k++) {
            Keyword kw{id_with_prefix('k', 5, k),
                       word_for_index(vocab_.size + cfg_.topics_total + k)};
            keyword_ids_.push_back(kw.id);
            emit_file(paths::keyword(kw.id), serialize_entity(Entity{kw}));
        }
        for (uint32_t l = 0; l < cfg_.languages_total; l++) {
            std::string code = kLanguageCodes[l];
            std::string upper = code;
            for (auto& ch : upper) ch = static_cast<char>(std::toupper(ch));
            Language lang{id_with_prefix('l', 2, l), code, code + "-" + upper};
            language_ids_.push_back(lang.id);
            emit_file(paths::language(lang.id), serialize_entity(Entity{lang}));
        }
        for (uint32_t c = 0; c < cfg_.countries_total; c++) {
            std::string name = kCountryNames[c];
            std::string iso;
            iso += name[0];
            iso += static_cast<char>(std::toupper(name[1]));
            Country country{id_with_prefix('c', 3, c), name, iso};
            country_ids_.push_back(country.id);
            emit_file(paths::country(country.id), serialize_entity(Entity{country}));
        }
        language_zipf_ = std::make_unique<ZipfSampler>(cfg_.languages_total, 1.2);
        keyword_zipf_ = std::make_unique<ZipfSampler>(cfg_.keywords_total, 0.8);
    }

    // Author pool grows with emitted bytes: one new author per
    // 2^30 / authors_per_gb corpus bytes, so the pool never depends on the
    // configured SF and prefixes stay stable.
    uint64_t author_pool_size(uint64_t bytes_so_far) const {
        uint64_t bytes_per_author = 1073741824ULL / cfg_.authors_per_gb;
        return 1 + bytes_so_far / std::max<uint64_t>(bytes_per_author, 1);
    }

    std::string author_for_article(Rng& rng, const Date& publish_date, Bundle& bundle) {
        uint64_t bytes_so_far = preamble_bytes_ + emitted_bundle_bytes_;
        uint64_t pool = author_pool_size(bytes_so_far);
        uint64_t j = rng.next_below(pool);
        std::string id = id_with_prefix('u', 5, j);
        if (!emitted_author_set_.count(j)) {
            bundle.new_author = static_cast<int64_t>(j);
            Author a = make_author(j, publish_date);
            bundle_file(bundle, paths::author(id), serialize_entity(Entity{a}));
        }
        return id;
    }

    Author make_author(uint64_t j, const Date& first_publish) {
        Rng rng(derive_seed(cfg_.seed, "author", j));
        Author a;
        a.id = id_with_prefix('u', 5, j);
        a.name = std::string(kFirstNames[rng.next_below(24)]) + " " +
                 kLastNames[rng.next_below(32)];
        int hi_year = std::min(1990, static_cast<int>(first_publish.year) - 16);
        int lo_year = std::min(1940, hi_year - 35);
        int year = static_cast<int>(rng.uniform_int(lo_year, hi_year));
        int month = static_cast<int>(rng.uniform_int(1, 12));
        int day = static_cast<int>(rng.uniform_int(1, days_in_month(year, month)));
        a.birth_date = Date{static_cast<int16_t>(year), static_cast<uint8_t>(month),
                            static_cast<uint8_t>(day)};
        a.citizenship_country = country_ids_[rng.next_below(country_ids_.size())];
        a.work_country = country_ids_[rng.next_below(country_ids_.size())];
        if (rng.chance(0.7)) {
            a.subtype = AuthorKind::Journalist;
            a.employer_journal = kJournals[rng.next_below(16)];
            a.interview_count = static_cast<uint32_t>(rng.uniform_int(0, 40));
        } else {
            a.subtype = AuthorKind::Professional;
            a.specialty_topic = topic_ids_[rng.next_below(topic_ids_.size())];
        }
        return a;
    }

    Bundle make_bundle(uint64_t i, double timeline_hours, int64_t window_days) {
        Rng rng(derive_seed(cfg_.seed, "article", i));
        Bundle b;
        b.timeline_hours = timeline_hours + rng.exponential(cfg_.mean_article_gap_hours);
        int64_t day_offset =
            std::min(static_cast<int64_t>(b.timeline_hours / 24.0), window_days);
        Date publish = cfg_.window_start.plus_days(day_offset);
        b.publish_day = publish.to_days();

        Article a;
        a.id = manifest_.article_id(i);
        a.version = 1;
        a.publish_date = publish;

        uint32_t primary_topic = static_cast<uint32_t>(rng.next_below(cfg_.topics_total));
        std::set<EntityId> topics{topic_ids_[primary_topic]};
        if (rng.chance(0.5)) topics.insert(topic_ids_[rng.next_below(cfg_.topics_total)]);
        if (rng.chance(0.15)) topics.insert(topic_ids_[rng.next_below(cfg_.topics_total)]);
        a.topic_ids.assign(topics.begin(), topics.end());

        std::set<EntityId> kws;
        uint32_t kw_count = static_cast<uint32_t>(rng.uniform_int(3, 8));
        for (uint32_t k = 0; k < kw_count; k++)
            kws.insert(keyword_ids_[keyword_zipf_->sample(rng) - 1]);
        a.keyword_ids.assign(kws.begin(), kws.end());

        a.language_id = language_ids_[language_zipf_->sample(rng) - 1];
        a.country_id = country_ids_[rng.next_below(country_ids_.size())];

        a.title = title_text(rng, vocab_, primary_topic);
        uint32_t body_words = static_cast<uint32_t>(
            std::clamp(rng.lognormal(std::log(260.0), 0.35), 80.0, 1200.0));
        a.body = make_sentence_text(rng, vocab_, primary_topic, body_words);
        a.page_count = static_cast<uint32_t>(rng.uniform_int(1, 30));

        // Citations: recency-biased references to earlier articles, small
        // chance of a duplicate edge (citation multiplicity).
        if (i > 0) {
            std::vector<EntityId> cits;
            while (cits.size() < 12 && rng.chance(0.55)) {
                uint64_t back = 1 + static_cast<uint64_t>(rng.exponential(30.0));
                if (back > i) back = 1 + rng.next_below(i);
                cits.push_back(manifest_.article_id(i - back));
            }
            if (!cits.empty() && rng.chance(0.1)) cits.push_back(cits.front());
            std::sort(cits.begin(), cits.end());
            a.citations = std::move(cits);
        }

        // Views: a decaying first year plus a 2010 tail (the analytical
        // workload aggregates calendar year 2010).
        double base_views = rng.lognormal(std::log(2000.0), 1.2);
        int year = publish.year, month = publish.month;
        for (int m = 0; m < 12; m++) {
            double decayed = base_views * std::pow(0.8, m);
            uint64_t views = static_cast<uint64_t>(decayed);
            a.monthly_views[{year, month}] = views;
            if (++month > 12) {
                month = 1;
                year++;
            }
            if (year > cfg_.window_end.year) break;
        }
        if (publish.year <= 2010 && cfg_.window_end.year >= 2010) {
            double age_years = std::max(0, 2010 - publish.year);
            double tail = base_views * std::pow(0.85, age_years) * 0.2;
            for (int m = 1; m <= 12; m++) {
                YearMonth ym{2010, m};
                if (!a.monthly_views.count(ym))
                    a.monthly_views[ym] =
                        static_cast<uint64_t>(tail * (0.9 + 0.2 * rng.next_double()));
            }
        }

        a.author_id = author_for_article(rng, publish, b);

        if (rng.chance(cfg_.media_ratio)) {
            uint32_t media_count = rng.chance(0.15) ? 2 : 1;
            for (uint32_t m = 0; m < media_count; m++) {
                MediaRef ref = make_media(rng, primary_topic, b);
                a.media_refs.push_back(ref.id);
            }
        }

        if (!emitted_dates_.count(b.publish_day)) {
            b.new_date = true;
            DateInfo info{publish, publish.day_of_year(), publish.weekday()};
            bundle_file(b, paths::date(publish), serialize_entity(Entity{info}));
        }

        bundle_file(b, paths::article(a.id), serialize_entity(Entity{a}));
        return b;
    }

    MediaRef make_media(Rng& rng, uint32_t topic, Bundle& b) {
        const uint64_t media_index = media_counter_ + b.media_used;
        b.media_used++;
        MediaRef m;
        m.id = id_with_prefix('m', 7, media_index);
        m.kind = rng.chance(0.5) ? MediaKind::Audio : MediaKind::Video;
        uint64_t payload_len = static_cast<uint64_t>(rng.uniform_int(2048, 16384));
        std::string payload(payload_len, '\0');
        Rng prng(derive_seed(cfg_.seed, "payload", media_index));
        for (size_t off = 0; off < payload_len; off += 8) {
            uint64_t v = prng.next_u64();
            for (size_t k = 0; k < 8 && off + k < payload_len; k++)
                payload[off + k] = static_cast<char>((v >> (8 * k)) & 0xff);
        }
        m.byte_size = payload_len;
        m.payload_digest = "fnv1a64:" + Fnv1a64{}.update(payload).hex();
        m.internal_comment = std::string(kCommentStubs[rng.next_below(8)]) + " #" +
                             std::to_string(media_index);
        uint32_t words = static_cast<uint32_t>(rng.uniform_int(40, 160));
        m.transcript = make_sentence_text(rng, vocab_, topic, words);
        bundle_file(b, paths::media_xml(m.id), serialize_entity(Entity{m}));
        bundle_file(b, paths::media_payload(m.id), payload);
        return m;
    }

    void bundle_file(Bundle& b, const std::string& path, std::string bytes) {
        b.bytes += bytes.size();
        b.files.emplace_back(path, std::move(bytes));
    }

    void emit_bundle(const Bundle& b) {
        for (const auto& [path, bytes] : b.files) sink_.emit(path, bytes);
        emitted_bundle_bytes_ += b.bytes;
        media_counter_ += b.media_used;
        if (b.new_author >= 0) emitted_author_set_.insert(static_cast<uint64_t>(b.new_author));
        if (b.new_date) emitted_dates_.insert(b.publish_day);
    }

    void fill_slices() {
        uint64_t acc = manifest_.preamble_bytes;
        uint64_t first = 0;
        for (uint64_t i = 0; i < manifest_.article_count; i++) {
            acc += manifest_.bundle_bytes[i];
            bool last = i + 1 == manifest_.article_count;
            if (acc >= cfg_.slice_target_bytes || last) {
                manifest_.slices.push_back(
                    {manifest_.slices.size(), first, i, acc});
                acc = 0;
                first = i + 1;
            }
        }
    }

    void fill_counts() {
        auto& c = manifest_.per_entity_counts;
        c["articles"] = manifest_.article_count;
        c["authors"] = emitted_author_set_.size();
        c["topics"] = cfg_.topics_total;
        c["keywords"] = cfg_.keywords_total;
        c["languages"] = cfg_.languages_total;
        c["countries"] = cfg_.countries_total;
        c["media"] = media_counter_;
        c["dates"] = emitted_dates_.size();
    }

    GeneratorConfig cfg_;
    CorpusSink& sink_;
    Vocabulary vocab_;
    CorpusManifest manifest_;
    std::vector<EntityId> topic_ids_, keyword_ids_, language_ids_, country_ids_;
    std::unique_ptr<ZipfSampler> language_zipf_, keyword_zipf_;
    std::set<uint64_t> emitted_author_set_;
    std::set<int64_t> emitted_dates_;
    uint64_t media_counter_ = 0;
    uint64_t preamble_bytes_ = 0;        // plus bundle bytes tracked separately
    uint64_t emitted_bundle_bytes_ = 0;
};

} // namespace

namespace paths {
std::string article(std::string_view id) {
    return "articles/" + std::string(id) + ".xml";
}
std::string author(std::string_view id) {
    return "authors/" + std::string(id) + ".xml";
}
std::string topic(std::string_view id) {
    return "topics/" + std::string(id) + ".xml";
}
std::string keyword(std::string_view id) {
    return "keywords/" + std::string(id) + ".xml";
}
std::string language(std::string_view id) {
    return "languages/" + std::string(id) + ".xml";
}
std::string country(std::string_view id) {
    return "countries/" + std::string(id) + ".xml";
}
std::string date(const Date& d) {
    return "dates/" + d.iso() + ".xml";
}
std::string media_xml(std::string_view id) {
    return "media/" + std::string(id) + ".xml";
}
std::string media_payload(std::string_view id) {
    return "media/" + std::string(id) + ".bin";
}
} // namespace paths

DirSink::DirSink(std::string root) : root_(std::move(root)) {
    std::error_code ec;
    fs::create_directories(root_, ec);
    if (ec) throw IoError("cannot create output directory '" + root_ + "': " + ec.message());
}

void DirSink::emit(const std::string& relative_path, std::string_view bytes) {
    fs::path full = fs::path(root_) / relative_path;
    std::error_code ec;
    fs::create_directories(full.parent_path(), ec);
    if (ec) throw IoError("cannot create directory for '" + full.string() + "'");
    std::ofstream out(full, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + full.string() + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("short write to '" + full.string() + "'");
}

void MemorySink::emit(const std::string& relative_path, std::string_view bytes) {
    files_[relative_path] = std::string(bytes);
}

std::string MemorySink::digest() const {
    Fnv1a64 d;
    for (const auto& [path, bytes] : files_) {
        d.update(path);
        d.update("\0", 1);
        d.update(bytes);
        d.update("\0", 1);
    }
    return d.hex();
}

CorpusManifest generate_corpus(const GeneratorConfig& config, CorpusSink& sink) {
    CorpusBuilder builder(config, sink);
    return builder.run();
}

CorpusManifest generate_to_directory(const GeneratorConfig& config, const std::string& root) {
    DirSink sink(root);
    CorpusManifest m = generate_corpus(config, sink);
    sink.emit("manifest.json", m.to_json());
    return m;
}

model::Article make_synthetic_article(uint64_t seed, const std::string& id,
                                      const std::string& author_id, const std::string& topic_id,
                                      const std::string& keyword_id,
                                      const std::string& language_id,
                                      const std::string& country_id, const Date& publish_date) {
    static const Vocabulary kVocab{GeneratorConfig{}};
    Rng rng(derive_seed(seed, "synthetic", fnv1a64(id)));
    Article a;
    a.id = id;
    a.version = 1;
    a.title = "Update " + id;
    a.body = make_sentence_text(rng, kVocab, 0, static_cast<uint32_t>(rng.uniform_int(40, 120)));
    a.author_id = author_id;
    a.topic_ids = {topic_id};
    a.keyword_ids = {keyword_id};
    a.language_id = language_id;
    a.country_id = country_id;
    a.publish_date = publish_date;
    a.page_count = static_cast<uint32_t>(rng.uniform_int(1, 30));
    a.monthly_views[{publish_date.year, publish_date.month}] =
        static_cast<uint64_t>(rng.uniform_int(10, 5000));
    return a;
}

} // namespace nhb::gen
