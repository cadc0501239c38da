#include "model/xml_io.hpp"

#include <algorithm>

#include "core/errors.hpp"
#include "core/text.hpp"
#include "core/xml.hpp"

namespace nhb::model {

namespace {

using xml::Node;

void require_valid(const Entity& e) {
    std::string violated = check_invariants(e);
    if (!violated.empty()) throw InvariantError("serialization refused: " + violated);
}

void add_id_list(Node& parent, std::string_view wrapper, std::string_view item,
                 const std::vector<EntityId>& ids) {
    Node& w = parent.add(wrapper);
    for (const auto& id : ids) w.add(item).set_text(id);
}

std::vector<EntityId> read_id_list(const Node& parent, std::string_view wrapper,
                                   std::string_view item) {
    const Node* w = parent.child(wrapper);
    if (w == nullptr) throw ParseError("missing element '" + std::string(wrapper) + "'");
    std::vector<EntityId> out;
    for (const Node* n : w->children_named(item)) out.push_back(n->text);
    return out;
}

const Node& require_child(const Node& parent, std::string_view name) {
    const Node* c = parent.child(name);
    if (c == nullptr)
        throw ParseError("missing element '" + std::string(name) + "' in <" + parent.name + ">");
    return *c;
}

std::string require_attr(const Node& n, std::string_view key) {
    const std::string* v = n.attr(key);
    if (v == nullptr)
        throw ParseError("missing attribute '" + std::string(key) + "' on <" + n.name + ">");
    return *v;
}

Node to_node(const Article& a) {
    Node n;
    n.name = "article";
    n.set_attr("id", a.id);
    n.set_attr("version", std::to_string(a.version));
    n.add("title").set_text(a.title);
    n.add("author").set_text(a.author_id);
    n.add("language").set_text(a.language_id);
    n.add("country").set_text(a.country_id);
    n.add("publish-date").set_text(a.publish_date.iso());
    n.add("page-count").set_text(std::to_string(a.page_count));
    add_id_list(n, "topics", "topic", a.topic_ids);
    add_id_list(n, "keywords", "keyword", a.keyword_ids);
    add_id_list(n, "citations", "citation", a.citations);
    add_id_list(n, "media-refs", "media-ref", a.media_refs);
    Node& views = n.add("monthly-views");
    for (const auto& [ym, count] : a.monthly_views) {
        Node& v = views.add("views");
        v.set_attr("year", std::to_string(ym.year));
        v.set_attr("month", std::to_string(ym.month));
        v.set_text(std::to_string(count));
    }
    n.add("body").set_text(a.body);
    return n;
}

Article from_article_node(const Node& n) {
    Article a;
    a.id = require_attr(n, "id");
    a.version = static_cast<uint32_t>(parse_int(require_attr(n, "version")));
    a.title = require_child(n, "title").text;
    a.author_id = require_child(n, "author").text;
    a.language_id = require_child(n, "language").text;
    a.country_id = require_child(n, "country").text;
    a.publish_date = Date::parse(require_child(n, "publish-date").text);
    a.page_count = static_cast<uint32_t>(parse_int(require_child(n, "page-count").text));
    a.topic_ids = read_id_list(n, "topics", "topic");
    a.keyword_ids = read_id_list(n, "keywords", "keyword");
    a.citations = read_id_list(n, "citations", "citation");
    a.media_refs = read_id_list(n, "media-refs", "media-ref");
    for (const Node* v : require_child(n, "monthly-views").children_named("views")) {
        YearMonth ym{static_cast<int>(parse_int(require_attr(*v, "year"))),
                     static_cast<int>(parse_int(require_attr(*v, "month")))};
        a.monthly_views[ym] = static_cast<uint64_t>(parse_int(v->text));
    }
    a.body = require_child(n, "body").text;
    return a;
}

Node to_node(const Author& a) {
    Node n;
    n.name = "author";
    n.set_attr("id", a.id);
    n.set_attr("subtype", a.is_journalist() ? "journalist" : "professional");
    n.add("name").set_text(a.name);
    n.add("birth-date").set_text(a.birth_date.iso());
    n.add("citizenship").set_text(a.citizenship_country);
    n.add("work-country").set_text(a.work_country);
    if (a.is_journalist()) {
        n.add("employer-journal").set_text(a.employer_journal);
        n.add("interview-count").set_text(std::to_string(a.interview_count));
    } else {
        n.add("specialty-topic").set_text(a.specialty_topic);
    }
    return n;
}

Author from_author_node(const Node& n) {
    Author a;
    a.id = require_attr(n, "id");
    std::string subtype = require_attr(n, "subtype");
    if (subtype == "journalist") {
        a.subtype = AuthorKind::Journalist;
        a.employer_journal = require_child(n, "employer-journal").text;
        a.interview_count =
            static_cast<uint32_t>(parse_int(require_child(n, "interview-count").text));
    } else if (subtype == "professional") {
        a.subtype = AuthorKind::Professional;
        a.specialty_topic = require_child(n, "specialty-topic").text;
    } else {
        throw ParseError("unknown author subtype '" + subtype + "'");
    }
    a.name = require_child(n, "name").text;
    a.birth_date = Date::parse(require_child(n, "birth-date").text);
    a.citizenship_country = require_child(n, "citizenship").text;
    a.work_country = require_child(n, "work-country").text;
    return a;
}

Node to_node(const MediaRef& m) {
    Node n;
    n.name = "media";
    n.set_attr("id", m.id);
    n.set_attr("kind", m.kind == MediaKind::Audio ? "audio" : "video");
    n.add("byte-size").set_text(std::to_string(m.byte_size));
    n.add("payload-digest").set_text(m.payload_digest);
    n.add("internal-comment").set_text(m.internal_comment);
    n.add("transcript").set_text(m.transcript);
    return n;
}

MediaRef from_media_node(const Node& n) {
    MediaRef m;
    m.id = require_attr(n, "id");
    std::string kind = require_attr(n, "kind");
    if (kind == "audio") m.kind = MediaKind::Audio;
    else if (kind == "video") m.kind = MediaKind::Video;
    else throw ParseError("unknown media kind '" + kind + "'");
    m.byte_size = static_cast<uint64_t>(parse_int(require_child(n, "byte-size").text));
    m.payload_digest = require_child(n, "payload-digest").text;
    m.internal_comment = require_child(n, "internal-comment").text;
    m.transcript = require_child(n, "transcript").text;
    return m;
}

Node to_node(const MetadataRecord& r) {
    Node n;
    n.name = "metadata";
    n.set_attr("article", r.article_id);
    Node& tf = n.add("tfidf");
    for (const auto& [term, weight] : r.tfidf) {
        Node& t = tf.add("term");
        t.set_attr("w", format_double(weight));
        t.set_text(term);
    }
    n.add("pagerank").set_text(format_double(r.pagerank));
    Node& td = n.add("topic-distribution");
    for (size_t k = 0; k < r.topic_distribution.size(); k++) {
        Node& p = td.add("p");
        p.set_attr("topic", std::to_string(k));
        p.set_text(format_double(r.topic_distribution[k]));
    }
    return n;
}

MetadataRecord from_metadata_node(const Node& n) {
    MetadataRecord r;
    r.article_id = require_attr(n, "article");
    for (const Node* t : require_child(n, "tfidf").children_named("term"))
        r.tfidf[t->text] = parse_double(require_attr(*t, "w"));
    r.pagerank = parse_double(require_child(n, "pagerank").text);
    const Node& td = require_child(n, "topic-distribution");
    r.topic_distribution.resize(td.children.size());
    for (const Node* p : td.children_named("p")) {
        size_t k = static_cast<size_t>(parse_int(require_attr(*p, "topic")));
        if (k >= r.topic_distribution.size()) throw ParseError("topic index out of range");
        r.topic_distribution[k] = parse_double(p->text);
    }
    return r;
}

Node to_node(const Topic& t) {
    Node n;
    n.name = "topic";
    n.set_attr("id", t.id);
    n.add("label").set_text(t.label);
    return n;
}

Node to_node(const Keyword& k) {
    Node n;
    n.name = "keyword";
    n.set_attr("id", k.id);
    n.add("word").set_text(k.word);
    return n;
}

Node to_node(const Language& l) {
    Node n;
    n.name = "language";
    n.set_attr("id", l.id);
    n.add("code").set_text(l.code);
    n.add("dialect").set_text(l.dialect);
    return n;
}

Node to_node(const Country& c) {
    Node n;
    n.name = "country";
    n.set_attr("id", c.id);
    n.add("name").set_text(c.name);
    n.add("iso").set_text(c.iso_code);
    return n;
}

Node to_node(const DateInfo& d) {
    Node n;
    n.name = "date";
    n.set_attr("id", d.date.iso());
    n.add("day-of-year").set_text(std::to_string(d.day_of_year));
    n.add("weekday").set_text(std::to_string(d.weekday));
    return n;
}

} // namespace

std::string serialize_entity(const Entity& e) {
    require_valid(e);
    Node n = std::visit([](const auto& v) { return to_node(v); }, e);
    return xml::write_document(n);
}

Entity parse_entity(std::string_view bytes) {
    Node n = xml::parse_document(bytes);
    if (n.name == "article") return from_article_node(n);
    if (n.name == "author") return from_author_node(n);
    if (n.name == "media") return from_media_node(n);
    if (n.name == "metadata") return from_metadata_node(n);
    if (n.name == "topic") return Topic{require_attr(n, "id"), require_child(n, "label").text};
    if (n.name == "keyword") return Keyword{require_attr(n, "id"), require_child(n, "word").text};
    if (n.name == "language")
        return Language{require_attr(n, "id"), require_child(n, "code").text,
                        require_child(n, "dialect").text};
    if (n.name == "country")
        return Country{require_attr(n, "id"), require_child(n, "name").text,
                       require_child(n, "iso").text};
    if (n.name == "date") {
        DateInfo d;
        d.date = Date::parse(require_attr(n, "id"));
        d.day_of_year = static_cast<int>(parse_int(require_child(n, "day-of-year").text));
        d.weekday = static_cast<int>(parse_int(require_child(n, "weekday").text));
        return d;
    }
    throw ParseError("unknown entity element '" + n.name + "'");
}

std::string serialize(const Article& a) {
    return serialize_entity(Entity{a});
}
std::string serialize(const Author& a) {
    return serialize_entity(Entity{a});
}
std::string serialize(const MediaRef& m) {
    return serialize_entity(Entity{m});
}
std::string serialize(const MetadataRecord& r) {
    return serialize_entity(Entity{r});
}

namespace {
template <typename T>
T parse_as(std::string_view bytes, const char* what) {
    Entity e = parse_entity(bytes);
    if (auto* v = std::get_if<T>(&e)) return std::move(*v);
    throw ParseError(std::string("expected ") + what + " document");
}
} // namespace

Article parse_article(std::string_view bytes) {
    return parse_as<Article>(bytes, "article");
}
Author parse_author(std::string_view bytes) {
    return parse_as<Author>(bytes, "author");
}
MediaRef parse_media(std::string_view bytes) {
    return parse_as<MediaRef>(bytes, "media");
}
MetadataRecord parse_metadata(std::string_view bytes) {
    return parse_as<MetadataRecord>(bytes, "metadata");
}

} // namespace nhb::model
