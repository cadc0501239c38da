#include "core/xml.hpp"

#include <cctype>

#include "core/errors.hpp"

namespace nhb::xml {

const std::string* Node::attr(std::string_view key) const {
    for (const auto& [k, v] : attributes)
        if (k == key) return &v;
    return nullptr;
}

const Node* Node::child(std::string_view child_name) const {
    for (const auto& c : children)
        if (c.name == child_name) return &c;
    return nullptr;
}

std::vector<const Node*> Node::children_named(std::string_view child_name) const {
    std::vector<const Node*> out;
    for (const auto& c : children)
        if (c.name == child_name) out.push_back(&c);
    return out;
}

Node& Node::add(std::string_view child_name) {
    children.emplace_back();
    children.back().name = std::string(child_name);
    return children.back();
}

Node& Node::set_attr(std::string_view key, std::string_view value) {
    attributes.emplace_back(std::string(key), std::string(value));
    return *this;
}

Node& Node::set_text(std::string_view value) {
    text = std::string(value);
    return *this;
}

std::string escape_text(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string escape_attr(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

namespace {

void write_node(const Node& node, int depth, std::string& out) {
    out.append(static_cast<size_t>(depth) * 2, ' ');
    out += '<';
    out += node.name;
    for (const auto& [k, v] : node.attributes) {
        out += ' ';
        out += k;
        out += "=\"";
        out += escape_attr(v);
        out += '"';
    }
    if (node.children.empty() && node.text.empty()) {
        out += "/>\n";
        return;
    }
    out += '>';
    if (node.children.empty()) {
        out += escape_text(node.text);
        out += "</";
        out += node.name;
        out += ">\n";
        return;
    }
    out += '\n';
    for (const auto& c : node.children) write_node(c, depth + 1, out);
    out.append(static_cast<size_t>(depth) * 2, ' ');
    out += "</";
    out += node.name;
    out += ">\n";
}

class Parser {
public:
    explicit Parser(std::string_view in) : in_(in) {}

    Node parse() {
        skip_ws();
        if (peek_starts_with("<?xml")) {
            size_t end = in_.find("?>", pos_);
            if (end == std::string_view::npos) fail("unterminated XML declaration");
            pos_ = end + 2;
        }
        skip_ws();
        Node root = parse_element();
        skip_ws();
        if (pos_ != in_.size()) fail("trailing content after document element");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("xml parse error at byte " + std::to_string(pos_) + ": " + msg, pos_);
    }

    char cur() const {
        if (pos_ >= in_.size())
            throw ParseError("xml parse error: unexpected end of input at byte " +
                                 std::to_string(pos_),
                             pos_);
        return in_[pos_];
    }

    bool peek_starts_with(std::string_view s) const {
        return in_.compare(pos_, s.size(), s) == 0;
    }

    void skip_ws() {
        while (pos_ < in_.size() && (in_[pos_] == ' ' || in_[pos_] == '\n' ||
                                     in_[pos_] == '\t' || in_[pos_] == '\r'))
            pos_++;
    }

    static bool is_name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.' ||
               c == ':';
    }

    std::string parse_name() {
        size_t start = pos_;
        while (pos_ < in_.size() && is_name_char(in_[pos_])) pos_++;
        if (pos_ == start) fail("expected a name");
        return std::string(in_.substr(start, pos_ - start));
    }

    std::string decode_entities(std::string_view raw, size_t base_offset) {
        std::string out;
        out.reserve(raw.size());
        for (size_t i = 0; i < raw.size();) {
            if (raw[i] != '&') {
                out += raw[i++];
                continue;
            }
            size_t semi = raw.find(';', i);
            if (semi == std::string_view::npos)
                throw ParseError("xml parse error at byte " + std::to_string(base_offset + i) +
                                     ": unterminated entity",
                                 base_offset + i);
            std::string_view ent = raw.substr(i + 1, semi - i - 1);
            if (ent == "amp") out += '&';
            else if (ent == "lt") out += '<';
            else if (ent == "gt") out += '>';
            else if (ent == "quot") out += '"';
            else if (ent == "apos") out += '\'';
            else
                throw ParseError("xml parse error at byte " + std::to_string(base_offset + i) +
                                     ": unknown entity '&" + std::string(ent) + ";'",
                                 base_offset + i);
            i = semi + 1;
        }
        return out;
    }

    Node parse_element() {
        if (cur() != '<') fail("expected '<'");
        pos_++;
        Node node;
        node.name = parse_name();
        for (;;) {
            skip_ws();
            char c = cur();
            if (c == '/') {
                pos_++;
                if (cur() != '>') fail("expected '>' after '/'");
                pos_++;
                return node;
            }
            if (c == '>') {
                pos_++;
                break;
            }
            std::string key = parse_name();
            skip_ws();
            if (cur() != '=') fail("expected '=' in attribute");
            pos_++;
            skip_ws();
            char quote = cur();
            if (quote != '"' && quote != '\'') fail("expected quoted attribute value");
            pos_++;
            size_t start = pos_;
            while (cur() != quote) pos_++;
            node.attributes.emplace_back(std::move(key),
                                         decode_entities(in_.substr(start, pos_ - start), start));
            pos_++;
        }
        // Content: either child elements separated by layout whitespace, or a
        // single text run. Whitespace-only runs count as layout.
        for (;;) {
            if (cur() == '<') {
                if (pos_ + 1 < in_.size() && in_[pos_ + 1] == '/') {
                    pos_ += 2;
                    std::string closing = parse_name();
                    if (closing != node.name)
                        fail("mismatched closing tag '" + closing + "' (expected '" + node.name +
                             "')");
                    skip_ws();
                    if (cur() != '>') fail("expected '>' in closing tag");
                    pos_++;
                    return node;
                }
                if (!node.text.empty()) fail("mixed text and element content is not supported");
                node.children.push_back(parse_element());
                continue;
            }
            size_t text_start = pos_;
            size_t text_end = in_.find('<', pos_);
            if (text_end == std::string_view::npos) fail("unterminated element content");
            std::string_view run = in_.substr(text_start, text_end - text_start);
            pos_ = text_end;
            if (run.find_first_not_of(" \t\r\n") == std::string_view::npos) continue;
            if (!node.children.empty()) fail("mixed text and element content is not supported");
            node.text = decode_entities(run, text_start);
        }
    }

    std::string_view in_;
    size_t pos_ = 0;
};

} // namespace

std::string write_document(const Node& root) {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    write_node(root, 0, out);
    return out;
}

Node parse_document(std::string_view bytes) {
    return Parser(bytes).parse();
}

} // namespace nhb::xml
