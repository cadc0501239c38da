#include "query/engine.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "core/errors.hpp"
#include "core/text.hpp"

namespace nhb::query {

using namespace nhb::model;
using ArticlePtr = std::shared_ptr<const Article>;

const char* to_string(QueryKind kind) {
    static constexpr const char* kNames[] = {"Q1", "Q2", "Q3", "Q4", "Q5", "Q6",
                                             "Q7", "Q8", "Q9", "Q10", "Q11", "Q12",
                                             "Q13", "Q14", "A1", "A2", "A3", "A4"};
    return kNames[static_cast<int>(kind)];
}

QueryKind query_kind_from_string(const std::string& name) {
    for (int k = 0; k <= static_cast<int>(QueryKind::A4); k++) {
        if (name == to_string(static_cast<QueryKind>(k))) return static_cast<QueryKind>(k);
    }
    throw ArgumentError("unknown query kind: '" + name + "'");
}

bool is_analytic(QueryKind kind) {
    return kind >= QueryKind::A1;
}

std::string row_value_to_string(const RowValue& v) {
    if (const auto* i = std::get_if<int64_t>(&v)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&v)) return format_double(*d);
    return std::get<std::string>(v);
}

namespace {

template <typename T>
const T& require_param(const std::optional<T>& p, const char* name) {
    if (!p) throw ArgumentError(std::string("missing parameter: ") + name);
    return *p;
}

bool in_interval(const Date& d, const Date& start, const Date& end) {
    return !(d < start) && !(end < d);
}

// Truncates to the limit (0 = unlimited) and fills total_matched.
void finish(QueryResult& r, uint32_t limit) {
    r.total_matched = r.rows.size();
    if (limit > 0 && r.rows.size() > limit) r.rows.resize(limit);
}

} // namespace

struct QueryEngine::Snapshot {
    std::vector<ArticlePtr> articles; // live latest versions, ascending id
    std::map<std::string, const Article*> by_id;

    explicit Snapshot(backend::BackendInterface& b) : articles(b.scan_articles()) {
        for (const auto& a : articles) by_id[a->id] = a.get();
    }
};

QueryEngine::QueryEngine(backend::BackendInterface& backend,
                         const meta::MetadataPipeline* metadata, Date virtual_now)
    : backend_(backend), metadata_(metadata), virtual_now_(virtual_now) {}

const meta::MetadataPipeline& QueryEngine::require_metadata() const {
    if (metadata_ == nullptr || !metadata_->built()) throw StateError("index not built");
    return *metadata_;
}

std::shared_ptr<const std::vector<std::string>> QueryEngine::tokens_for(const ArticlePtr& a) {
    std::lock_guard lock(cache_mutex_);
    auto key = std::make_pair(a->id, a->version);
    auto it = token_cache_.find(key);
    if (it != token_cache_.end()) return it->second;
    auto tokens =
        std::make_shared<const std::vector<std::string>>(tokenize(a->title + " " + a->body));
    token_cache_[key] = tokens;
    return tokens;
}

QueryResult QueryEngine::execute(const QuerySpec& spec) {
    Snapshot snap(backend_);
    QueryResult result;
    switch (spec.kind) {
        case QueryKind::Q1: result = q1(spec, snap); break;
        case QueryKind::Q2: result = q2(spec, snap); break;
        case QueryKind::Q3: result = q3(spec, snap); break;
        case QueryKind::Q4: result = q4(spec, snap); break;
        case QueryKind::Q5: result = q5(spec, snap); break;
        case QueryKind::Q6: result = q6(spec, snap); break;
        case QueryKind::Q7: result = q7(spec, snap); break;
        case QueryKind::Q8: result = q8(spec, snap); break;
        case QueryKind::Q9: result = q9(spec, snap); break;
        case QueryKind::Q10: result = q10(spec, snap); break;
        case QueryKind::Q11: result = q11(spec, snap); break;
        case QueryKind::Q12: result = q12(spec, snap); break;
        case QueryKind::Q13: result = q13(spec, snap); break;
        case QueryKind::Q14: result = q14(spec, snap); break;
        case QueryKind::A1: result = a1(spec, snap); break;
        case QueryKind::A2: result = a2(spec, snap); break;
        case QueryKind::A3: result = a3(spec, snap); break;
        case QueryKind::A4: result = a4(spec, snap); break;
    }
    result.kind = spec.kind;
    result.docs_examined = snap.articles.size();
    return result;
}

// Q1: articles containing any of the corpus-wide top-B bigrams, by pagerank.
QueryResult QueryEngine::q1(const QuerySpec& spec, Snapshot& snap) {
    const auto& meta = require_metadata();
    const uint32_t top_b = spec.limit > 0 ? spec.limit : 20;

    std::map<std::string, uint64_t> counts;
    std::map<std::string, std::vector<std::string>> article_bigrams;
    for (const auto& a : snap.articles) {
        auto grams = bigrams(*tokens_for(a));
        for (const auto& g : grams) counts[g]++;
        article_bigrams[a->id] = std::move(grams);
    }
    std::vector<std::pair<std::string, uint64_t>> ranked(counts.begin(), counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second > y.second;
        return x.first < y.first;
    });
    std::set<std::string> top;
    for (uint32_t i = 0; i < top_b && i < ranked.size(); i++) top.insert(ranked[i].first);

    const auto& pagerank = meta.pagerank();
    std::vector<std::pair<double, std::string>> hits; // (pagerank, id)
    for (const auto& a : snap.articles) {
        const auto& grams = article_bigrams[a->id];
        bool contains = std::any_of(grams.begin(), grams.end(),
                                    [&](const std::string& g) { return top.count(g) > 0; });
        if (!contains) continue;
        auto pr = pagerank.find(a->id);
        hits.emplace_back(pr == pagerank.end() ? 0.0 : pr->second, a->id);
    }
    std::sort(hits.begin(), hits.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second < y.second;
    });

    QueryResult r;
    r.columns = {"article", "pagerank"};
    for (const auto& [score, id] : hits) r.rows.push_back({id, score});
    finish(r, spec.limit);
    return r;
}

// Q2: (topic label, title, article) rows for an interval, sorted by topic
// label then title.
QueryResult QueryEngine::q2(const QuerySpec& spec, Snapshot& snap) {
    const Date& start = require_param(spec.interval_start, "interval_start");
    const Date& end = require_param(spec.interval_end, "interval_end");
    QueryResult r;
    r.columns = {"topic", "title", "article"};
    std::vector<std::tuple<std::string, std::string, std::string>> rows;
    for (const auto& a : snap.articles) {
        if (!in_interval(a->publish_date, start, end)) continue;
        for (const auto& t : a->topic_ids) {
            rows.emplace_back(backend_.topic(t)->label, a->title, a->id);
        }
    }
    std::sort(rows.begin(), rows.end());
    for (auto& [topic, title, id] : rows) r.rows.push_back({topic, title, id});
    finish(r, spec.limit);
    return r;
}

// Q3: journalist J's articles in I grouped by article country; top words per
// country by frequency.
QueryResult QueryEngine::q3(const QuerySpec& spec, Snapshot& snap) {
    const std::string& j = require_param(spec.journalist_id, "journalist_id");
    const Date& start = require_param(spec.interval_start, "interval_start");
    const Date& end = require_param(spec.interval_end, "interval_end");
    constexpr size_t kWordsPerCountry = 5;

    QueryResult r;
    r.columns = {"country", "word", "count"};
    std::map<std::string, std::map<std::string, uint64_t>> by_country;
    for (const auto& a : snap.articles) {
        if (a->author_id != j || !in_interval(a->publish_date, start, end)) continue;
        if (!backend_.author(a->author_id)->is_journalist()) continue; // inheritance filter
        auto& words = by_country[a->country_id];
        for (const auto& tok : *tokens_for(a)) words[tok]++;
    }
    for (const auto& [country, words] : by_country) {
        std::vector<std::pair<std::string, uint64_t>> ranked(words.begin(), words.end());
        std::sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
            if (x.second != y.second) return x.second > y.second;
            return x.first < y.first;
        });
        for (size_t i = 0; i < ranked.size() && i < kWordsPerCountry; i++)
            r.rows.push_back({country, ranked[i].first, static_cast<int64_t>(ranked[i].second)});
    }
    finish(r, spec.limit);
    return r;
}

namespace {

QueryResult keyword_rank(const std::vector<const Article*>& matched, uint32_t limit) {
    std::map<std::string, uint64_t> counts;
    for (const Article* a : matched)
        for (const auto& k : a->keyword_ids) counts[k]++;
    std::vector<std::pair<std::string, uint64_t>> ranked(counts.begin(), counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second > y.second;
        return x.first < y.first;
    });
    QueryResult r;
    r.columns = {"keyword", "count"};
    for (const auto& [k, c] : ranked) r.rows.push_back({k, static_cast<int64_t>(c)});
    finish(r, limit);
    return r;
}

} // namespace

// Q4: keyword frequency rank over the articles of one exact date.
QueryResult QueryEngine::q4(const QuerySpec& spec, Snapshot& snap) {
    const Date& d = require_param(spec.date, "date");
    std::vector<const Article*> matched;
    for (const auto& a : snap.articles)
        if (a->publish_date == d) matched.push_back(a.get());
    return keyword_rank(matched, spec.limit);
}

// Q5: top keywords of one calendar month.
QueryResult QueryEngine::q5(const QuerySpec& spec, Snapshot& snap) {
    int month = require_param(spec.month, "month");
    int year = require_param(spec.year, "year");
    if (month < 1 || month > 12) throw ArgumentError("month must lie in 1..12");
    std::vector<const Article*> matched;
    for (const auto& a : snap.articles)
        if (a->publish_date.year == year && a->publish_date.month == month)
            matched.push_back(a.get());
    return keyword_rank(matched, spec.limit);
}

// Q6: keyword counts for one day-of-year across two years, merged.
QueryResult QueryEngine::q6(const QuerySpec& spec, Snapshot& snap) {
    int doy = require_param(spec.day_of_year, "day_of_year");
    int y1 = require_param(spec.year, "year");
    int y2 = require_param(spec.year2, "year2");
    if (doy < 1 || doy > 366) throw ArgumentError("day_of_year must lie in 1..366");
    std::vector<const Article*> matched;
    for (const auto& a : snap.articles) {
        int y = a->publish_date.year;
        if ((y == y1 || y == y2) && a->publish_date.day_of_year() == doy)
            matched.push_back(a.get());
    }
    return keyword_rank(matched, spec.limit);
}

// Q7: articles of date D ranked by citations into the previous calendar year.
QueryResult QueryEngine::q7(const QuerySpec& spec, Snapshot& snap) {
    const Date& d = require_param(spec.date, "date");
    const int previous_year = d.year - 1;
    QueryResult r;
    r.columns = {"article", "references_previous_year"};
    std::vector<std::pair<int64_t, std::string>> ranked;
    for (const auto& a : snap.articles) {
        if (!(a->publish_date == d)) continue;
        int64_t count = 0;
        for (const auto& cited : a->citations) {
            auto it = snap.by_id.find(cited);
            if (it != snap.by_id.end() && it->second->publish_date.year == previous_year) count++;
        }
        ranked.emplace_back(count, a->id);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second < y.second;
    });
    for (const auto& [count, id] : ranked) r.rows.push_back({id, count});
    finish(r, spec.limit);
    return r;
}

// Q8: topic-T articles ranked by citations received within the lookback
// window ending at the virtual now.
QueryResult QueryEngine::q8(const QuerySpec& spec, Snapshot& snap) {
    const std::string& topic = require_param(spec.topic_id, "topic_id");
    int lookback = require_param(spec.lookback_days, "lookback_days");
    if (lookback < 0) throw ArgumentError("lookback_days must be non-negative");
    const Date window_start = virtual_now_.plus_days(-lookback);

    std::map<std::string, int64_t> in_citations;
    for (const auto& a : snap.articles) {
        if (!in_interval(a->publish_date, window_start, virtual_now_)) continue;
        for (const auto& cited : a->citations) in_citations[cited]++;
    }
    std::vector<std::pair<int64_t, std::string>> ranked;
    for (const auto& a : snap.articles) {
        if (!std::binary_search(a->topic_ids.begin(), a->topic_ids.end(), topic)) continue;
        auto it = in_citations.find(a->id);
        ranked.emplace_back(it == in_citations.end() ? 0 : it->second, a->id);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second < y.second;
    });
    QueryResult r;
    r.columns = {"article", "recent_citations"};
    for (const auto& [count, id] : ranked) r.rows.push_back({id, count});
    finish(r, spec.limit);
    return r;
}

// Q9: journalist/professional co-writing tuples on a shared topic in the
// same calendar month, sorted by the journalist article's day.
QueryResult QueryEngine::q9(const QuerySpec& spec, Snapshot& snap) {
    struct Row {
        Date day;
        std::string journalist_article, professional_article, topic;
        std::string journalist, professional;
    };
    std::vector<const Article*> journalist_articles, professional_articles;
    for (const auto& a : snap.articles) {
        (backend_.author(a->author_id)->is_journalist() ? journalist_articles
                                                        : professional_articles)
            .push_back(a.get());
    }
    std::vector<Row> rows;
    for (const Article* x : journalist_articles) {
        for (const Article* y : professional_articles) {
            if (x->publish_date.year != y->publish_date.year ||
                x->publish_date.month != y->publish_date.month)
                continue;
            for (const auto& t : x->topic_ids) {
                if (!std::binary_search(y->topic_ids.begin(), y->topic_ids.end(), t)) continue;
                rows.push_back(
                    {x->publish_date, x->id, y->id, t, x->author_id, y->author_id});
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (!(a.day == b.day)) return a.day < b.day;
        if (a.journalist_article != b.journalist_article)
            return a.journalist_article < b.journalist_article;
        if (a.professional_article != b.professional_article)
            return a.professional_article < b.professional_article;
        return a.topic < b.topic;
    });
    QueryResult r;
    r.columns = {"day", "journalist", "professional", "topic", "journalist_article",
                 "professional_article"};
    for (const auto& row : rows)
        r.rows.push_back({row.day.iso(), row.journalist, row.professional, row.topic,
                          row.journalist_article, row.professional_article});
    finish(r, spec.limit);
    return r;
}

// Q10: maximal groups of journalist-authored articles in I whose topic sets
// share at least Y topics, with at least X distinct journalists.
QueryResult QueryEngine::q10(const QuerySpec& spec, Snapshot& snap) {
    const Date& start = require_param(spec.interval_start, "interval_start");
    const Date& end = require_param(spec.interval_end, "interval_end");
    int x = require_param(spec.min_journalists, "min_journalists");
    int y = require_param(spec.min_common_topics, "min_common_topics");
    if (x < 1 || x > 3) throw ArgumentError("min_journalists must lie in 1..3 at this scale");
    if (y < 1 || y > 3) throw ArgumentError("min_common_topics must lie in 1..3 at this scale");

    std::vector<const Article*> pool;
    for (const auto& a : snap.articles) {
        if (!in_interval(a->publish_date, start, end)) continue;
        if (!backend_.author(a->author_id)->is_journalist()) continue;
        pool.push_back(a.get());
    }

    // Topic combinations of size exactly Y over the catalog; the group of a
    // combination is every pooled article containing all of its topics, which
    // makes groups maximal by construction.
    std::vector<std::string> topic_ids;
    for (const auto& t : backend_.topics()) topic_ids.push_back(t->id);
    std::sort(topic_ids.begin(), topic_ids.end());

    std::set<std::vector<std::string>> seen_groups;
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> groups;

    std::vector<int> combo(y);
    std::function<void(int, int)> enumerate = [&](int offset, int depth) {
        if (depth == y) {
            std::vector<std::string> members;
            std::set<std::string> journalists;
            for (const Article* a : pool) {
                bool all = true;
                for (int idx : combo)
                    if (!std::binary_search(a->topic_ids.begin(), a->topic_ids.end(),
                                            topic_ids[idx])) {
                        all = false;
                        break;
                    }
                if (all) {
                    members.push_back(a->id);
                    journalists.insert(a->author_id);
                }
            }
            if (static_cast<int>(journalists.size()) < x || members.size() < 2) return;
            if (!seen_groups.insert(members).second) return;
            std::vector<std::string> topics;
            for (int idx : combo) topics.push_back(topic_ids[idx]);
            groups.emplace_back(std::move(topics), std::move(members));
            return;
        }
        for (int i = offset; i < static_cast<int>(topic_ids.size()); i++) {
            combo[depth] = i;
            enumerate(i + 1, depth + 1);
        }
    };
    enumerate(0, 0);

    QueryResult r;
    r.columns = {"topics", "journalists", "articles"};
    for (const auto& [topics, members] : groups) {
        std::string topic_list, member_list;
        for (const auto& t : topics) topic_list += (topic_list.empty() ? "" : "+") + t;
        std::set<std::string> journalists;
        for (const auto& id : members) journalists.insert(snap.by_id.at(id)->author_id);
        for (const auto& id : members) member_list += (member_list.empty() ? "" : ",") + id;
        r.rows.push_back(
            {topic_list, static_cast<int64_t>(journalists.size()), member_list});
    }
    finish(r, spec.limit);
    return r;
}

// Q11: (language, article count) pairs, count descending.
QueryResult QueryEngine::q11(const QuerySpec& spec, Snapshot& snap) {
    std::map<std::string, int64_t> counts;
    for (const auto& a : snap.articles) counts[a->language_id]++;
    std::vector<std::pair<int64_t, std::string>> ranked;
    for (const auto& [lang, c] : counts) ranked.emplace_back(c, lang);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    QueryResult r;
    r.columns = {"language", "articles"};
    for (const auto& [c, lang] : ranked) r.rows.push_back({lang, c});
    finish(r, spec.limit);
    return r;
}

// Q12: tf-idf ranked search filtered to author A and country C.
QueryResult QueryEngine::q12(const QuerySpec& spec, Snapshot&) {
    backend::SearchFilters filters;
    filters.author_id = spec.author_id;
    filters.country_id = spec.country_id;
    auto hits = backend_.search(spec.search_terms, filters);
    QueryResult r;
    r.columns = {"article", "score"};
    for (const auto& h : hits) r.rows.push_back({h.article_id, h.score});
    finish(r, spec.limit);
    return r;
}

// Q13: best cosine match among documents published the same day and month
// one year after the reference document.
QueryResult QueryEngine::q13(const QuerySpec& spec, Snapshot& snap) {
    const auto& meta = require_metadata();
    const std::string& doc = require_param(spec.document_id, "document_id");
    auto it = snap.by_id.find(doc);
    if (it == snap.by_id.end()) throw NotFoundError("article not found: " + doc);
    const Date target = it->second->publish_date.plus_years(1);

    std::vector<std::pair<double, std::string>> ranked;
    for (const auto& a : snap.articles) {
        if (!(a->publish_date == target) || a->id == doc) continue;
        ranked.emplace_back(meta.document_similarity(doc, a->id), a->id);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    QueryResult r;
    r.columns = {"article", "similarity"};
    for (const auto& [sim, id] : ranked) r.rows.push_back({id, sim});
    finish(r, spec.limit);
    return r;
}

// Q14: topic-sharing article pairs where the journalist authors were born
// strictly before vs strictly after year Y.
QueryResult QueryEngine::q14(const QuerySpec& spec, Snapshot& snap) {
    int pivot = require_param(spec.year, "year");
    std::vector<const Article*> before, after;
    for (const auto& a : snap.articles) {
        auto author = backend_.author(a->author_id);
        if (!author->is_journalist()) continue; // professionals never qualify
        if (author->birth_date.year < pivot) before.push_back(a.get());
        else if (author->birth_date.year > pivot) after.push_back(a.get());
    }
    std::set<std::pair<std::string, std::string>> pairs;
    for (const Article* x : before) {
        for (const Article* y : after) {
            bool shared = std::any_of(x->topic_ids.begin(), x->topic_ids.end(),
                                      [&](const std::string& t) {
                                          return std::binary_search(y->topic_ids.begin(),
                                                                    y->topic_ids.end(), t);
                                      });
            if (shared) pairs.emplace(x->id, y->id);
        }
    }
    QueryResult r;
    r.columns = {"article_born_before", "article_born_after"};
    for (const auto& [a, b] : pairs) r.rows.push_back({a, b});
    finish(r, spec.limit);
    return r;
}

// A1: top 10 articles by views for each month of 2010.
QueryResult QueryEngine::a1(const QuerySpec&, Snapshot& snap) {
    QueryResult r;
    r.columns = {"month", "rank", "article", "views"};
    for (int month = 1; month <= 12; month++) {
        std::vector<std::pair<uint64_t, std::string>> ranked;
        for (const auto& a : snap.articles) {
            auto it = a->monthly_views.find({2010, month});
            if (it != a->monthly_views.end()) ranked.emplace_back(it->second, a->id);
        }
        std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        for (size_t i = 0; i < ranked.size() && i < 10; i++)
            r.rows.push_back({static_cast<int64_t>(month), static_cast<int64_t>(i + 1),
                              ranked[i].second, static_cast<int64_t>(ranked[i].first)});
    }
    r.total_matched = r.rows.size(); // fixed per-month top 10, no limit cut
    return r;
}

// A2: mean page count per journalist.
QueryResult QueryEngine::a2(const QuerySpec& spec, Snapshot& snap) {
    std::map<std::string, std::pair<uint64_t, uint64_t>> acc; // journalist -> (pages, count)
    for (const auto& a : snap.articles) {
        if (!backend_.author(a->author_id)->is_journalist()) continue;
        auto& slot = acc[a->author_id];
        slot.first += a->page_count;
        slot.second += 1;
    }
    QueryResult r;
    r.columns = {"journalist", "average_pages", "articles"};
    for (const auto& [journalist, slot] : acc) {
        r.rows.push_back({journalist,
                          static_cast<double>(slot.first) / static_cast<double>(slot.second),
                          static_cast<int64_t>(slot.second)});
    }
    finish(r, spec.limit);
    return r;
}

// A3: mean and population standard deviation of author ages at the virtual
// current date.
QueryResult QueryEngine::a3(const QuerySpec&, Snapshot&) {
    auto authors = backend_.authors();
    QueryResult r;
    r.columns = {"mean_age", "stddev_age", "authors"};
    if (authors.empty()) {
        r.rows.push_back({0.0, 0.0, int64_t{0}});
        r.total_matched = 1;
        return r;
    }
    double sum = 0.0;
    std::vector<int> ages;
    for (const auto& a : authors) ages.push_back(age_in_years(a->birth_date, virtual_now_));
    for (int age : ages) sum += age;
    const double mean = sum / static_cast<double>(ages.size());
    double var = 0.0;
    for (int age : ages) var += (age - mean) * (age - mean);
    var /= static_cast<double>(ages.size());
    r.rows.push_back({mean, std::sqrt(var), static_cast<int64_t>(ages.size())});
    r.total_matched = 1;
    return r;
}

// A4: maximum version-history length over live articles.
QueryResult QueryEngine::a4(const QuerySpec&, Snapshot& snap) {
    int64_t max_versions = 0;
    std::string holder;
    for (const auto& a : snap.articles) {
        auto h = backend_.history(a->id);
        if (static_cast<int64_t>(h.size()) > max_versions) {
            max_versions = static_cast<int64_t>(h.size());
            holder = a->id;
        }
    }
    QueryResult r;
    r.columns = {"max_versions", "article"};
    r.rows.push_back({max_versions, holder});
    r.total_matched = 1;
    return r;
}

} // namespace nhb::query
