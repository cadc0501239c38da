#pragma once

#include <string>
#include <string_view>

#include "model/entities.hpp"

namespace nhb::model {

// Canonical XML serialization for the three file classes (general
// information, media descriptors, metadata records). Serialization is a pure
// function of the entity: fields in declaration order, collections sorted by
// id, shortest round-tripping numerals. Refuses entities that violate their
// invariants (throws InvariantError naming the violated invariant).
//
// The element vocabulary is an original design documented in
// docs/xml-schemas.md.

std::string serialize_entity(const Entity& e);

// Inverse of serialize_entity. Dispatches on the root element name. Throws
// ParseError (with byte offset) on malformed input and on unknown subtype
// discriminators.
Entity parse_entity(std::string_view bytes);

// Typed helpers for the common cases.
std::string serialize(const Article& a);
std::string serialize(const Author& a);
std::string serialize(const MediaRef& m);
std::string serialize(const MetadataRecord& r);
Article parse_article(std::string_view bytes);
Author parse_author(std::string_view bytes);
MediaRef parse_media(std::string_view bytes);
MetadataRecord parse_metadata(std::string_view bytes);

} // namespace nhb::model
