#include "core/text.hpp"

#include <cctype>
#include <charconv>

#include "core/errors.hpp"

namespace nhb {

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (std::isalnum(c)) {
            cur += static_cast<char>(std::tolower(c));
        } else if (!cur.empty()) {
            if (cur.size() >= 2) out.push_back(cur);
            cur.clear();
        }
    }
    if (cur.size() >= 2) out.push_back(cur);
    return out;
}

std::vector<std::string> bigrams(const std::vector<std::string>& tokens) {
    std::vector<std::string> out;
    if (tokens.size() < 2) return out;
    out.reserve(tokens.size() - 1);
    for (size_t i = 0; i + 1 < tokens.size(); i++) out.push_back(tokens[i] + " " + tokens[i + 1]);
    return out;
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw ParseError("invalid number: '" + std::string(s) + "'");
    return v;
}

int64_t parse_int(std::string_view s) {
    int64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw ParseError("invalid integer: '" + std::string(s) + "'");
    return v;
}

} // namespace nhb
