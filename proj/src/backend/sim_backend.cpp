#include "backend/sim_backend.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <mutex>

#include "core/digest.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"
#include "gen/generator.hpp"
#include "json.hpp"
#include "model/xml_io.hpp"

namespace nhb::backend {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace nhb::model;

namespace {

std::vector<std::string> default_node_ids(uint32_t n) {
    std::vector<std::string> out;
    for (uint32_t i = 0; i < n; i++) out.push_back("node-" + std::to_string(i));
    return out;
}

uint64_t article_byte_cost(const Article& a,
                           const std::map<std::string, std::string>& payloads) {
    uint64_t bytes = serialize(a).size();
    for (const auto& m : a.media_refs) {
        auto it = payloads.find(m);
        if (it != payloads.end()) bytes += it->second.size();
    }
    return bytes;
}

} // namespace

SimBackend::SimBackend(const SimBackendConfig& config, Clock& clock)
    : cfg_(config), clock_(clock) {
    if (cfg_.nodes < 1) throw ConfigError("cluster needs at least one node");
    if (cfg_.replication < 1) throw ConfigError("replication factor must be >= 1");
    if (cfg_.consistency.mode == ConsistencyMode::Eventual &&
        cfg_.consistency.staleness_window_ms < 0)
        throw ConfigError("staleness window must be non-negative");
    ring_ = HashRing(default_node_ids(cfg_.nodes), cfg_.vnodes_per_node);
    placement_ring_ = ring_;
    for (const auto& id : ring_.node_ids()) alive_[id] = true;
}

bool SimBackend::reachable_locked(const std::string& key) const {
    for (const auto& node : placement_ring_.replicas_of_key(key, cfg_.replication))
        if (alive_.at(node)) return true;
    return false;
}

void SimBackend::require_reachable_locked(const std::string& key) const {
    if (!reachable_locked(key))
        throw UnavailableError("no live replica for shard of '" + key + "'");
}

const SimBackend::ArticleRecord& SimBackend::live_record_locked(const std::string& key) const {
    auto it = articles_.find(key);
    if (it == articles_.end()) throw NotFoundError("article not found: " + key);
    return it->second;
}

VersionedValue SimBackend::write(const Article& article) {
    std::string violated = check_invariants(article);
    if (!violated.empty()) throw InvariantError("write refused: " + violated);
    std::unique_lock lock(mutex_);
    require_reachable_locked(article.id);
    if (articles_.count(article.id)) throw ConflictError("duplicate article id: " + article.id);
    tombstones_.erase(article.id); // re-writing a removed id starts a new life
    ArticleRecord rec;
    VersionedValue v;
    v.article_id = article.id;
    v.version = 1;
    auto stored = std::make_shared<Article>(article);
    stored->version = 1;
    v.payload = stored;
    v.write_timestamp_us = clock_.now_us();
    rec.versions.push_back(v);
    rec.byte_cost = article_byte_cost(*stored, media_payloads_);
    articles_[article.id] = std::move(rec);
    return v;
}

VersionedValue SimBackend::update(const std::string& article_id, const std::string& new_body) {
    std::unique_lock lock(mutex_);
    require_reachable_locked(article_id);
    auto it = articles_.find(article_id);
    if (it == articles_.end()) throw NotFoundError("article not found: " + article_id);
    ArticleRecord& rec = it->second;
    const VersionedValue& last = rec.versions.back();
    auto next = std::make_shared<Article>(*last.payload);
    next->body = new_body;
    next->version = last.version + 1;
    VersionedValue v;
    v.article_id = article_id;
    v.version = next->version;
    v.payload = next;
    v.write_timestamp_us = clock_.now_us();
    rec.versions.push_back(v);
    rec.byte_cost = article_byte_cost(*next, media_payloads_);
    return v;
}

VersionedValue SimBackend::read_locked(const std::string& article_id,
                                       const ReadOptions& opts) const {
    require_reachable_locked(article_id);
    const ArticleRecord& rec = live_record_locked(article_id);
    if (opts.mode == ReadOptions::Mode::AtVersion) {
        if (opts.version < 1 || opts.version > rec.versions.size())
            throw NotFoundError("version " + std::to_string(opts.version) +
                                " not found for " + article_id);
        return rec.versions[opts.version - 1];
    }
    if (cfg_.consistency.mode == ConsistencyMode::Strong ||
        cfg_.consistency.staleness_window_ms == 0)
        return rec.versions.back();

    // Eventual mode: the served replica lags by a deterministic amount in
    // [0, window], derived from (seed, key, now, reader) so results do not
    // depend on thread interleaving.
    const int64_t now = clock_.now_us();
    const int64_t window_us = cfg_.consistency.staleness_window_ms * 1000;
    uint64_t mix = derive_seed(cfg_.seed, "staleness", fnv1a64(article_id));
    mix = derive_seed(mix, opts.reader_tag, static_cast<uint64_t>(now));
    const int64_t lag = static_cast<int64_t>(mix % static_cast<uint64_t>(window_us + 1));
    const int64_t cutoff = now - lag;
    const VersionedValue* served = &rec.versions.front();
    for (const auto& v : rec.versions) {
        if (v.write_timestamp_us <= cutoff) served = &v;
        else break;
    }
    return *served;
}

VersionedValue SimBackend::read(const std::string& article_id, const ReadOptions& opts) {
    std::shared_lock lock(mutex_);
    return read_locked(article_id, opts);
}

void SimBackend::remove(const std::string& article_id) {
    std::unique_lock lock(mutex_);
    require_reachable_locked(article_id);
    auto it = articles_.find(article_id);
    if (it == articles_.end()) throw NotFoundError("article not found: " + article_id);
    // Tombstone: history moves aside, search index entries are cleaned lazily.
    tombstones_[article_id] = std::move(it->second);
    articles_.erase(it);
}

std::vector<SearchHit> SimBackend::search(const std::vector<std::string>& terms,
                                          const SearchFilters& filters) {
    std::shared_lock lock(mutex_);
    if (!scorer_) throw StateError("index not built");

    std::vector<SearchHit> hits;
    auto passes = [&](const Article& a) {
        if (filters.author_id && a.author_id != *filters.author_id) return false;
        if (filters.country_id && a.country_id != *filters.country_id) return false;
        if (filters.topic_id &&
            !std::binary_search(a.topic_ids.begin(), a.topic_ids.end(), *filters.topic_id))
            return false;
        if (filters.publish_date && !(a.publish_date == *filters.publish_date)) return false;
        return true;
    };

    if (terms.empty()) {
        // Filter-only search: every live article qualifies with score zero.
        for (const auto& [id, rec] : articles_) {
            require_reachable_locked(id);
            if (passes(*rec.versions.back().payload)) hits.push_back({id, 0.0});
        }
        return hits; // map order = ascending id
    }

    std::map<std::string, double> scores = scorer_(terms);
    for (const auto& [id, score] : scores) {
        auto it = articles_.find(id);
        if (it == articles_.end()) continue; // tombstoned or never loaded
        require_reachable_locked(id);
        if (passes(*it->second.versions.back().payload)) hits.push_back({id, score});
    }
    std::stable_sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.article_id < b.article_id;
    });
    return hits;
}

std::vector<std::shared_ptr<const Article>> SimBackend::scan_articles() {
    std::shared_lock lock(mutex_);
    std::vector<std::shared_ptr<const Article>> out;
    out.reserve(articles_.size());
    for (const auto& [id, rec] : articles_) {
        require_reachable_locked(id);
        out.push_back(rec.versions.back().payload);
    }
    return out;
}

std::vector<std::string> SimBackend::article_ids() {
    std::shared_lock lock(mutex_);
    std::vector<std::string> out;
    out.reserve(articles_.size());
    for (const auto& [id, rec] : articles_) out.push_back(id);
    return out;
}

std::vector<VersionedValue> SimBackend::history(const std::string& article_id) {
    std::shared_lock lock(mutex_);
    require_reachable_locked(article_id);
    return live_record_locked(article_id).versions;
}

std::shared_ptr<const Author> SimBackend::author(const std::string& id) {
    std::shared_lock lock(mutex_);
    auto it = authors_.find(id);
    if (it == authors_.end()) throw NotFoundError("author not found: " + id);
    return it->second;
}

std::vector<std::shared_ptr<const Author>> SimBackend::authors() {
    std::shared_lock lock(mutex_);
    std::vector<std::shared_ptr<const Author>> out;
    for (const auto& [id, a] : authors_) out.push_back(a);
    return out;
}

std::shared_ptr<const Topic> SimBackend::topic(const std::string& id) {
    std::shared_lock lock(mutex_);
    auto it = topics_.find(id);
    if (it == topics_.end()) throw NotFoundError("topic not found: " + id);
    return it->second;
}

std::vector<std::shared_ptr<const Topic>> SimBackend::topics() {
    std::shared_lock lock(mutex_);
    std::vector<std::shared_ptr<const Topic>> out;
    for (const auto& [id, t] : topics_) out.push_back(t);
    return out;
}

std::shared_ptr<const Keyword> SimBackend::keyword(const std::string& id) {
    std::shared_lock lock(mutex_);
    auto it = keywords_.find(id);
    if (it == keywords_.end()) throw NotFoundError("keyword not found: " + id);
    return it->second;
}

std::shared_ptr<const Language> SimBackend::language(const std::string& id) {
    std::shared_lock lock(mutex_);
    auto it = languages_.find(id);
    if (it == languages_.end()) throw NotFoundError("language not found: " + id);
    return it->second;
}

std::shared_ptr<const Country> SimBackend::country(const std::string& id) {
    std::shared_lock lock(mutex_);
    auto it = countries_.find(id);
    if (it == countries_.end()) throw NotFoundError("country not found: " + id);
    return it->second;
}

std::shared_ptr<const MediaRef> SimBackend::media(const std::string& id) {
    std::shared_lock lock(mutex_);
    auto it = media_.find(id);
    if (it == media_.end()) throw NotFoundError("media not found: " + id);
    return it->second;
}

uint64_t SimBackend::node_bytes_locked(const std::string& node_id) const {
    uint64_t bytes = 0;
    for (const auto& [id, rec] : articles_) {
        auto replicas = placement_ring_.replicas_of_key(id, cfg_.replication);
        if (std::find(replicas.begin(), replicas.end(), node_id) != replicas.end())
            bytes += rec.byte_cost;
    }
    return bytes;
}

ClusterStatus SimBackend::status() {
    std::shared_lock lock(mutex_);
    ClusterStatus st;
    st.replication = cfg_.replication;
    st.consistency = cfg_.consistency;
    st.shard_count = placement_ring_.shard_count();
    st.article_count = articles_.size();
    for (const auto& node : ring_.node_ids()) {
        NodeStatus ns;
        ns.node_id = node;
        ns.alive = alive_.at(node);
        ns.stored_bytes = placement_ring_.has_node(node) ? node_bytes_locked(node) : 0;
        st.nodes.push_back(ns);
        st.stored_bytes += ns.stored_bytes;
    }
    return st;
}

void SimBackend::kill_node(const std::string& node_id) {
    std::unique_lock lock(mutex_);
    auto it = alive_.find(node_id);
    if (it == alive_.end()) throw NotFoundError("unknown node: " + node_id);
    it->second = false; // state retained; no data migration on failure
}

void SimBackend::recover_node(const std::string& node_id) {
    std::unique_lock lock(mutex_);
    auto it = alive_.find(node_id);
    if (it == alive_.end()) throw NotFoundError("unknown node: " + node_id);
    it->second = true;
}

void SimBackend::add_node(const std::string& node_id) {
    std::unique_lock lock(mutex_);
    ring_.add_node(node_id); // throws ConflictError on duplicates
    alive_[node_id] = true;
}

RebalanceReport SimBackend::rebalance() {
    std::unique_lock lock(mutex_);
    RebalanceReport report;
    for (const auto& [id, rec] : articles_) {
        report.total_keys++;
        report.total_bytes += rec.byte_cost;
        auto before = placement_ring_.replicas_of_key(id, cfg_.replication);
        auto after = ring_.replicas_of_key(id, cfg_.replication);
        if (before.empty() || after.empty() || before.front() != after.front()) {
            report.moved_keys++;
            report.moved_bytes += rec.byte_cost;
        }
    }
    placement_ring_ = ring_;
    return report;
}

void SimBackend::attach_search(SearchScoreFn scorer) {
    std::unique_lock lock(mutex_);
    scorer_ = std::move(scorer);
}

LoadReport SimBackend::bulk_load(const CorpusReader& read_file, const gen::Slice& slice) {
    const int64_t started = clock_.now_us();
    LoadReport report;
    const gen::CorpusManifest& m = *slice.manifest;

    auto fetch = [&](const std::string& path, const std::string& offending_id) {
        auto bytes = read_file(path);
        if (!bytes)
            throw InvariantError("bulk load aborted, dangling reference: " + offending_id +
                                 " (missing " + path + ")");
        report.bytes += bytes->size();
        return *bytes;
    };

    std::unique_lock lock(mutex_);
    if (slice.includes_preamble()) {
        char idbuf[16];
        for (uint32_t t = 0; t < m.config.topics_total; t++) {
            std::snprintf(idbuf, sizeof idbuf, "t%02u", t);
            auto e = parse_entity(fetch(gen::paths::topic(idbuf), idbuf));
            topics_[idbuf] = std::make_shared<Topic>(std::get<Topic>(e));
            report.entities++;
        }
        for (uint32_t k = 0; k < m.config.keywords_total; k++) {
            std::snprintf(idbuf, sizeof idbuf, "k%05u", k);
            auto e = parse_entity(fetch(gen::paths::keyword(idbuf), idbuf));
            keywords_[idbuf] = std::make_shared<Keyword>(std::get<Keyword>(e));
            report.entities++;
        }
        for (uint32_t l = 0; l < m.config.languages_total; l++) {
            std::snprintf(idbuf, sizeof idbuf, "l%02u", l);
            auto e = parse_entity(fetch(gen::paths::language(idbuf), idbuf));
            languages_[idbuf] = std::make_shared<Language>(std::get<Language>(e));
            report.entities++;
        }
        for (uint32_t c = 0; c < m.config.countries_total; c++) {
            std::snprintf(idbuf, sizeof idbuf, "c%03u", c);
            auto e = parse_entity(fetch(gen::paths::country(idbuf), idbuf));
            countries_[idbuf] = std::make_shared<Country>(std::get<Country>(e));
            report.entities++;
        }
    }

    for (uint64_t i = slice.first_article; i < slice.end_article; i++) {
        const std::string id = m.article_id(i);
        if (articles_.count(id))
            throw ConflictError("bulk load refused, article already present: " + id);
        Article a = parse_article(fetch(gen::paths::article(id), id));

        if (!authors_.count(a.author_id)) {
            auto e = parse_entity(fetch(gen::paths::author(a.author_id), a.author_id));
            authors_[a.author_id] = std::make_shared<Author>(std::get<Author>(e));
            report.entities++;
        }
        if (!dates_.count(a.publish_date.iso())) {
            auto e = parse_entity(fetch(gen::paths::date(a.publish_date), a.publish_date.iso()));
            dates_[a.publish_date.iso()] = std::get<DateInfo>(e);
            report.entities++;
        }
        for (const auto& t : a.topic_ids)
            if (!topics_.count(t))
                throw InvariantError("bulk load aborted, dangling reference: " + t);
        for (const auto& k : a.keyword_ids)
            if (!keywords_.count(k))
                throw InvariantError("bulk load aborted, dangling reference: " + k);
        if (!languages_.count(a.language_id))
            throw InvariantError("bulk load aborted, dangling reference: " + a.language_id);
        if (!countries_.count(a.country_id))
            throw InvariantError("bulk load aborted, dangling reference: " + a.country_id);
        for (const auto& mid : a.media_refs) {
            if (media_.count(mid)) continue;
            auto e = parse_entity(fetch(gen::paths::media_xml(mid), mid));
            auto ref = std::make_shared<MediaRef>(std::get<MediaRef>(e));
            std::string payload = fetch(gen::paths::media_payload(mid), mid);
            if (payload.size() != ref->byte_size)
                throw InvariantError("media payload size mismatch for " + mid);
            media_[mid] = ref;
            media_payloads_[mid] = std::move(payload);
            report.entities++;
        }

        ArticleRecord rec;
        VersionedValue v;
        v.article_id = id;
        v.version = a.version;
        v.write_timestamp_us = clock_.now_us();
        auto stored = std::make_shared<Article>(std::move(a));
        v.payload = stored;
        rec.versions.push_back(v);
        rec.byte_cost = article_byte_cost(*stored, media_payloads_);
        articles_[id] = std::move(rec);
        report.articles++;
        report.entities++;
    }

    report.elapsed_seconds = static_cast<double>(clock_.now_us() - started) / 1e6;
    return report;
}

uint64_t SimBackend::article_count() const {
    std::shared_lock lock(mutex_);
    return articles_.size();
}

std::vector<std::string> SimBackend::placement_of(const std::string& article_id) const {
    std::shared_lock lock(mutex_);
    return placement_ring_.replicas_of_key(article_id, cfg_.replication);
}

std::string SimBackend::store_digest() const {
    std::shared_lock lock(mutex_);
    Fnv1a64 d;
    for (const auto& [id, rec] : articles_) {
        for (const auto& v : rec.versions) d.update(serialize(*v.payload));
    }
    for (const auto& [id, a] : authors_) d.update(serialize(*a));
    for (const auto& [id, t] : topics_) d.update(serialize_entity(Entity{*t}));
    for (const auto& [id, p] : media_payloads_) d.update(p);
    return d.hex();
}

void SimBackend::put_catalog_entity(const Entity& entity) {
    std::string violated = check_invariants(entity);
    if (!violated.empty()) throw InvariantError("catalog entity refused: " + violated);
    std::unique_lock lock(mutex_);
    if (const auto* a = std::get_if<Author>(&entity))
        authors_[a->id] = std::make_shared<Author>(*a);
    else if (const auto* t = std::get_if<Topic>(&entity))
        topics_[t->id] = std::make_shared<Topic>(*t);
    else if (const auto* k = std::get_if<Keyword>(&entity))
        keywords_[k->id] = std::make_shared<Keyword>(*k);
    else if (const auto* l = std::get_if<Language>(&entity))
        languages_[l->id] = std::make_shared<Language>(*l);
    else if (const auto* c = std::get_if<Country>(&entity))
        countries_[c->id] = std::make_shared<Country>(*c);
    else if (const auto* d = std::get_if<DateInfo>(&entity))
        dates_[d->date.iso()] = *d;
    else if (const auto* m = std::get_if<MediaRef>(&entity))
        media_[m->id] = std::make_shared<MediaRef>(*m);
    else
        throw ArgumentError("articles enter through write(), not the catalog path");
}

void SimBackend::set_app_state(const std::string& json_blob) {
    std::unique_lock lock(mutex_);
    app_state_ = json_blob;
}

std::string SimBackend::app_state() const {
    std::shared_lock lock(mutex_);
    return app_state_;
}

namespace {

void write_file(const fs::path& p, std::string_view bytes) {
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + p.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string read_file_or_throw(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoError("cannot read " + p.string());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace

void SimBackend::save(const std::string& store_dir) const {
    std::shared_lock lock(mutex_);
    fs::path root(store_dir);
    fs::create_directories(root);

    json cluster;
    cluster["schema_version"] = 1;
    cluster["seed"] = cfg_.seed;
    cluster["replication"] = cfg_.replication;
    cluster["vnodes_per_node"] = cfg_.vnodes_per_node;
    cluster["consistency"] = {
        {"mode", cfg_.consistency.mode == ConsistencyMode::Strong ? "strong" : "eventual"},
        {"staleness_window_ms", cfg_.consistency.staleness_window_ms}};
    json nodes = json::array();
    for (const auto& id : ring_.node_ids())
        nodes.push_back({{"id", id}, {"alive", alive_.at(id)}});
    cluster["nodes"] = nodes;
    json placement_nodes = json::array();
    for (const auto& id : placement_ring_.node_ids()) placement_nodes.push_back(id);
    cluster["placement_nodes"] = placement_nodes;
    json tombs = json::array();
    for (const auto& [id, rec] : tombstones_) tombs.push_back(id);
    cluster["tombstones"] = tombs;
    if (!app_state_.empty()) cluster["app_state"] = json::parse(app_state_);
    write_file(root / "cluster.json", cluster.dump(2));

    for (const auto& [id, rec] : articles_) {
        for (const auto& v : rec.versions) {
            write_file(root / "articles" / (id + ".v" + std::to_string(v.version) + ".xml"),
                       serialize(*v.payload));
        }
    }
    for (const auto& [id, a] : authors_) write_file(root / gen::paths::author(id), serialize(*a));
    for (const auto& [id, t] : topics_)
        write_file(root / gen::paths::topic(id), serialize_entity(Entity{*t}));
    for (const auto& [id, k] : keywords_)
        write_file(root / gen::paths::keyword(id), serialize_entity(Entity{*k}));
    for (const auto& [id, l] : languages_)
        write_file(root / gen::paths::language(id), serialize_entity(Entity{*l}));
    for (const auto& [id, c] : countries_)
        write_file(root / gen::paths::country(id), serialize_entity(Entity{*c}));
    for (const auto& [iso, d] : dates_)
        write_file(root / gen::paths::date(d.date), serialize_entity(Entity{d}));
    for (const auto& [id, m] : media_) {
        write_file(root / gen::paths::media_xml(id), serialize_entity(Entity{*m}));
        write_file(root / gen::paths::media_payload(id), media_payloads_.at(id));
    }
}

std::unique_ptr<SimBackend> SimBackend::load(const std::string& store_dir, Clock& clock) {
    fs::path root(store_dir);
    json cluster;
    try {
        cluster = json::parse(read_file_or_throw(root / "cluster.json"));
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid cluster.json: ") + e.what());
    }

    SimBackendConfig cfg;
    cfg.seed = cluster.at("seed").get<uint64_t>();
    cfg.replication = cluster.at("replication").get<uint32_t>();
    cfg.vnodes_per_node = cluster.at("vnodes_per_node").get<uint32_t>();
    cfg.nodes = 1; // replaced below
    std::string mode = cluster.at("consistency").at("mode").get<std::string>();
    cfg.consistency.mode = mode == "strong" ? ConsistencyMode::Strong : ConsistencyMode::Eventual;
    cfg.consistency.staleness_window_ms =
        cluster.at("consistency").at("staleness_window_ms").get<int64_t>();

    auto backend = std::unique_ptr<SimBackend>(new SimBackend(SimBackendConfig{cfg}, clock));
    // Rebuild topology exactly as saved.
    backend->ring_ = HashRing({}, cfg.vnodes_per_node);
    backend->alive_.clear();
    for (const auto& n : cluster.at("nodes")) {
        backend->ring_.add_node(n.at("id").get<std::string>());
        backend->alive_[n.at("id").get<std::string>()] = n.at("alive").get<bool>();
    }
    std::vector<std::string> placement;
    for (const auto& n : cluster.at("placement_nodes")) placement.push_back(n.get<std::string>());
    backend->placement_ring_ = HashRing(placement, cfg.vnodes_per_node);
    backend->cfg_.nodes = static_cast<uint32_t>(backend->ring_.node_count());
    if (cluster.contains("app_state")) backend->app_state_ = cluster.at("app_state").dump();

    auto load_dir = [&](const char* sub, auto&& handle) {
        fs::path dir = root / sub;
        if (!fs::exists(dir)) return;
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(dir)) files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) handle(f);
    };

    load_dir("topics", [&](const fs::path& f) {
        auto t = std::get<Topic>(parse_entity(read_file_or_throw(f)));
        backend->topics_[t.id] = std::make_shared<Topic>(t);
    });
    load_dir("keywords", [&](const fs::path& f) {
        auto k = std::get<Keyword>(parse_entity(read_file_or_throw(f)));
        backend->keywords_[k.id] = std::make_shared<Keyword>(k);
    });
    load_dir("languages", [&](const fs::path& f) {
        auto l = std::get<Language>(parse_entity(read_file_or_throw(f)));
        backend->languages_[l.id] = std::make_shared<Language>(l);
    });
    load_dir("countries", [&](const fs::path& f) {
        auto c = std::get<Country>(parse_entity(read_file_or_throw(f)));
        backend->countries_[c.id] = std::make_shared<Country>(c);
    });
    load_dir("dates", [&](const fs::path& f) {
        auto d = std::get<DateInfo>(parse_entity(read_file_or_throw(f)));
        backend->dates_[d.date.iso()] = d;
    });
    load_dir("authors", [&](const fs::path& f) {
        auto a = std::get<Author>(parse_entity(read_file_or_throw(f)));
        backend->authors_[a.id] = std::make_shared<Author>(a);
    });
    load_dir("media", [&](const fs::path& f) {
        if (f.extension() == ".xml") {
            auto m = std::get<MediaRef>(parse_entity(read_file_or_throw(f)));
            backend->media_[m.id] = std::make_shared<MediaRef>(m);
        } else {
            backend->media_payloads_[f.stem().string()] = read_file_or_throw(f);
        }
    });
    load_dir("articles", [&](const fs::path& f) {
        Article a = parse_article(read_file_or_throw(f));
        auto& rec = backend->articles_[a.id];
        VersionedValue v;
        v.article_id = a.id;
        v.version = a.version;
        v.write_timestamp_us = 0; // history timestamps are not persisted
        v.payload = std::make_shared<Article>(std::move(a));
        rec.versions.push_back(v);
    });
    for (auto& [id, rec] : backend->articles_) {
        std::sort(rec.versions.begin(), rec.versions.end(),
                  [](const VersionedValue& a, const VersionedValue& b) {
                      return a.version < b.version;
                  });
        for (uint32_t k = 0; k < rec.versions.size(); k++) {
            if (rec.versions[k].version != k + 1)
                throw InvariantError("store has a version gap for " + id);
        }
        rec.byte_cost = article_byte_cost(*rec.versions.back().payload,
                                          backend->media_payloads_);
    }
    for (const auto& t : cluster.at("tombstones")) {
        std::string id = t.get<std::string>();
        auto it = backend->articles_.find(id);
        if (it != backend->articles_.end()) {
            backend->tombstones_[id] = std::move(it->second);
            backend->articles_.erase(it);
        }
    }
    return backend;
}

} // namespace nhb::backend
