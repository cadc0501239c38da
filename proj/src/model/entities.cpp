#include "model/entities.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace nhb::model {

namespace {

bool sorted_unique(const std::vector<EntityId>& v) {
    return std::is_sorted(v.begin(), v.end()) &&
           std::adjacent_find(v.begin(), v.end()) == v.end();
}

} // namespace

std::string check_invariants(const Article& a) {
    if (a.id.empty()) return "article id must be non-empty";
    if (a.version < 1) return "article version must be >= 1";
    if (a.page_count < 1) return "article pageCount must be >= 1";
    if (a.title.empty()) return "article title must be non-empty";
    if (a.author_id.empty()) return "article author must be set";
    if (!sorted_unique(a.topic_ids)) return "article topics must be a sorted set";
    if (!sorted_unique(a.keyword_ids)) return "article keywords must be a sorted set";
    if (!sorted_unique(a.media_refs)) return "article media refs must be a sorted set";
    if (!std::is_sorted(a.citations.begin(), a.citations.end()))
        return "article citations must be sorted";
    if (std::binary_search(a.citations.begin(), a.citations.end(), a.id))
        return "article citations must not include the article's own id";
    for (const auto& [ym, views] : a.monthly_views) {
        (void)views;
        if (ym.month < 1 || ym.month > 12) return "monthly views month must be in 1..12";
    }
    return {};
}

std::string check_invariants(const Author& a) {
    if (a.id.empty()) return "author id must be non-empty";
    if (a.name.empty()) return "author name must be non-empty";
    if (a.subtype == AuthorKind::Journalist) {
        if (a.employer_journal.empty()) return "journalist employer journal must be non-empty";
        if (!a.specialty_topic.empty()) return "journalist must not carry a specialty topic";
    } else {
        if (a.specialty_topic.empty()) return "professional specialty topic must be set";
        if (!a.employer_journal.empty() || a.interview_count != 0)
            return "professional must not carry journalist fields";
    }
    return {};
}

std::string check_invariants(const MediaRef& m) {
    if (m.id.empty()) return "media id must be non-empty";
    if (m.byte_size == 0) return "media byte size must be positive";
    if (m.payload_digest.empty()) return "media payload digest must be set";
    if (m.transcript.empty()) return "media transcript must be non-empty";
    return {};
}

std::string check_invariants(const MetadataRecord& r) {
    if (r.article_id.empty()) return "metadata article id must be non-empty";
    // (0,1) in the general case; 0 marks "not yet ranked" and 1 the
    // single-article corpus.
    if (r.pagerank < 0.0 || r.pagerank > 1.0) return "pagerank score must lie in [0,1]";
    if (!r.topic_distribution.empty()) {
        double sum = 0.0;
        for (double p : r.topic_distribution) {
            if (p < 0.0) return "topic distribution entries must be non-negative";
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-9) return "topic distribution must sum to 1";
    }
    return {};
}

std::string check_invariants(const Topic& t) {
    if (t.id.empty() || t.label.empty()) return "topic id and label must be non-empty";
    return {};
}

std::string check_invariants(const Keyword& k) {
    if (k.id.empty() || k.word.empty()) return "keyword id and word must be non-empty";
    return {};
}

std::string check_invariants(const Language& l) {
    if (l.id.empty() || l.code.empty()) return "language id and code must be non-empty";
    return {};
}

std::string check_invariants(const Country& c) {
    if (c.id.empty() || c.name.empty() || c.iso_code.empty())
        return "country id, name and ISO code must be non-empty";
    return {};
}

std::string check_invariants(const DateInfo& d) {
    if (d.day_of_year != d.date.day_of_year()) return "date info day-of-year must match the date";
    if (d.weekday != d.date.weekday()) return "date info weekday must match the date";
    return {};
}

std::string check_invariants(const Entity& e) {
    return std::visit([](const auto& v) { return check_invariants(v); }, e);
}

bool operator==(const Topic& a, const Topic& b) {
    return a.id == b.id && a.label == b.label;
}
bool operator==(const Keyword& a, const Keyword& b) {
    return a.id == b.id && a.word == b.word;
}
bool operator==(const Language& a, const Language& b) {
    return std::tie(a.id, a.code, a.dialect) == std::tie(b.id, b.code, b.dialect);
}
bool operator==(const Country& a, const Country& b) {
    return std::tie(a.id, a.name, a.iso_code) == std::tie(b.id, b.name, b.iso_code);
}
bool operator==(const DateInfo& a, const DateInfo& b) {
    return a.date == b.date && a.day_of_year == b.day_of_year && a.weekday == b.weekday;
}
bool operator==(const MediaRef& a, const MediaRef& b) {
    return std::tie(a.id, a.kind, a.byte_size, a.internal_comment, a.payload_digest,
                    a.transcript) == std::tie(b.id, b.kind, b.byte_size, b.internal_comment,
                                              b.payload_digest, b.transcript);
}
bool operator==(const Author& a, const Author& b) {
    return std::tie(a.id, a.name, a.birth_date, a.citizenship_country, a.work_country, a.subtype,
                    a.employer_journal, a.interview_count, a.specialty_topic) ==
           std::tie(b.id, b.name, b.birth_date, b.citizenship_country, b.work_country, b.subtype,
                    b.employer_journal, b.interview_count, b.specialty_topic);
}
bool operator==(const Article& a, const Article& b) {
    return std::tie(a.id, a.title, a.body, a.version, a.author_id, a.topic_ids, a.keyword_ids,
                    a.language_id, a.country_id, a.publish_date, a.media_refs, a.citations,
                    a.page_count) == std::tie(b.id, b.title, b.body, b.version, b.author_id,
                                              b.topic_ids, b.keyword_ids, b.language_id,
                                              b.country_id, b.publish_date, b.media_refs,
                                              b.citations, b.page_count) &&
           a.monthly_views == b.monthly_views;
}
bool operator==(const MetadataRecord& a, const MetadataRecord& b) {
    return a.article_id == b.article_id && a.tfidf == b.tfidf && a.pagerank == b.pagerank &&
           a.topic_distribution == b.topic_distribution;
}

} // namespace nhb::model
