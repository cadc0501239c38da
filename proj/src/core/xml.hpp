#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace nhb::xml {

// Minimal XML layer for the repo's canonical documents. Supports exactly what
// the documented schemas use: one declaration, nested elements, attributes,
// text content and the five predefined entities. No comments, CDATA, DOCTYPE
// or processing instructions. See docs/xml-schemas.md.

struct Node {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attributes; // serialized in order
    std::string text;                                            // leaf text content
    std::vector<Node> children;

    const std::string* attr(std::string_view key) const;
    const Node* child(std::string_view name) const;
    std::vector<const Node*> children_named(std::string_view name) const;

    Node& add(std::string_view child_name);
    Node& set_attr(std::string_view key, std::string_view value);
    Node& set_text(std::string_view value);
};

// Canonical serialization: UTF-8, LF, 2-space indent, attributes in stored
// order, no trailing whitespace. A pure function of the node tree.
std::string write_document(const Node& root);

// Parses a document produced by write_document (or equivalent). Throws
// ParseError carrying the byte offset of the first offending byte.
Node parse_document(std::string_view bytes);

std::string escape_text(std::string_view raw);
std::string escape_attr(std::string_view raw);

} // namespace nhb::xml
