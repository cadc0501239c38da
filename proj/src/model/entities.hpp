#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "core/date.hpp"

namespace nhb::model {

// Domain entities of the news-hub schema. All types are immutable values
// after construction; mutation happens only through the backend's versioned
// update path. Collections with set semantics are kept sorted so that
// serialization is canonical.

using EntityId = std::string;

struct Topic {
    EntityId id;
    std::string label;
};

struct Keyword {
    EntityId id;
    std::string word;
};

struct Language {
    EntityId id;
    std::string code;    // e.g. "en"
    std::string dialect; // e.g. "en-GB"
};

struct Country {
    EntityId id;
    std::string name;
    std::string iso_code;
};

// Derivable calendar record for an article publication day.
struct DateInfo {
    Date date;
    int day_of_year = 1;
    int weekday = 0; // 0 = Monday
};

enum class MediaKind : uint8_t { Audio, Video };

struct MediaRef {
    EntityId id;
    MediaKind kind = MediaKind::Audio;
    uint64_t byte_size = 0;             // exact length of the binary payload
    std::string internal_comment;
    std::string payload_digest;         // "fnv1a64:<16 hex digits>"
    std::string transcript;             // generator-produced speech transcript
};

enum class AuthorKind : uint8_t { Journalist, Professional };

// Closed two-kind hierarchy, encoded as one element with a subtype
// discriminator so polymorphic queries stay expressible over a single scan.
struct Author {
    EntityId id;
    std::string name;
    Date birth_date;
    EntityId citizenship_country;
    EntityId work_country;
    AuthorKind subtype = AuthorKind::Journalist;
    // Journalist
    std::string employer_journal;
    uint32_t interview_count = 0;
    // Professional
    EntityId specialty_topic;

    bool is_journalist() const { return subtype == AuthorKind::Journalist; }
};

struct YearMonth {
    int year = 0;
    int month = 0; // 1..12
    auto operator<=>(const YearMonth&) const = default;
};

struct Article {
    EntityId id;
    std::string title;
    std::string body;
    uint32_t version = 1;
    EntityId author_id;
    std::vector<EntityId> topic_ids;   // sorted, unique
    std::vector<EntityId> keyword_ids; // sorted, unique
    EntityId language_id;
    EntityId country_id;               // article's country (Q3/Q12 grouping axis)
    Date publish_date;
    std::vector<EntityId> media_refs;  // sorted, unique
    std::vector<EntityId> citations;   // sorted, duplicates = citation multiplicity
    uint32_t page_count = 1;
    std::map<YearMonth, uint64_t> monthly_views;
};

struct MetadataRecord {
    EntityId article_id;
    std::map<std::string, double> tfidf; // term -> weight
    double pagerank = 0.0;
    std::vector<double> topic_distribution; // index = topic number
};

using Entity = std::variant<Article, Author, Topic, Keyword, Language, Country, DateInfo,
                            MediaRef, MetadataRecord>;

// Standalone invariant checks. Returns the name of the first violated
// invariant, or an empty string when the entity is well-formed. Cross-entity
// invariants (id resolution, window containment) are slice-level checks and
// live with the verifier.
std::string check_invariants(const Article& a);
std::string check_invariants(const Author& a);
std::string check_invariants(const MediaRef& m);
std::string check_invariants(const MetadataRecord& r);
std::string check_invariants(const Topic&);
std::string check_invariants(const Keyword&);
std::string check_invariants(const Language&);
std::string check_invariants(const Country&);
std::string check_invariants(const DateInfo& d);
std::string check_invariants(const Entity& e);

bool operator==(const Topic&, const Topic&);
bool operator==(const Keyword&, const Keyword&);
bool operator==(const Language&, const Language&);
bool operator==(const Country&, const Country&);
bool operator==(const DateInfo&, const DateInfo&);
bool operator==(const MediaRef&, const MediaRef&);
bool operator==(const Author&, const Author&);
bool operator==(const Article&, const Article&);
bool operator==(const MetadataRecord&, const MetadataRecord&);

} // namespace nhb::model
