#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nhb {

// Shared tokenizer: lowercase, split on non-alphanumeric bytes, drop tokens
// shorter than 2 characters. Every text-analysis path (indexing, bigrams,
// oracles) uses this single definition.
std::vector<std::string> tokenize(std::string_view text);

// Ordered adjacent token pairs, rendered as "left right".
std::vector<std::string> bigrams(const std::vector<std::string>& tokens);

// Canonical numeric formatting: shortest representation that round-trips
// (std::to_chars). All serialized floating point goes through this.
std::string format_double(double v);
double parse_double(std::string_view s);
int64_t parse_int(std::string_view s);

} // namespace nhb
