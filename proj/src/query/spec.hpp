#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "core/date.hpp"

namespace nhb::query {

// The fixed query set: fourteen generic kinds plus four analytical kinds.
// There is deliberately no general query language; each kind's parameters,
// row schema and ordering are pinned (docs/query-reference.md).
enum class QueryKind {
    Q1, Q2, Q3, Q4, Q5, Q6, Q7, Q8, Q9, Q10, Q11, Q12, Q13, Q14,
    A1, A2, A3, A4,
};

const char* to_string(QueryKind kind);
QueryKind query_kind_from_string(const std::string& name);
bool is_analytic(QueryKind kind);

struct QuerySpec {
    QueryKind kind = QueryKind::Q1;
    std::optional<Date> date;                 // D (Q4, Q7)
    std::optional<int> day_of_year;           // D for Q6 (1..366)
    std::optional<Date> interval_start;       // I
    std::optional<Date> interval_end;
    std::optional<int> lookback_days;         // I ending at the virtual now (Q8)
    std::optional<std::string> journalist_id; // J (Q3)
    std::optional<std::string> topic_id;      // T (Q8, Q14's shared-topic axis is implicit)
    std::optional<int> month;                 // M (Q5)
    std::optional<int> year;                  // Y (Q5, Q14)
    std::optional<int> year2;                 // Y2 (Q6 uses year + year2)
    std::optional<int> min_journalists;       // X (Q10), bounded at 3
    std::optional<int> min_common_topics;     // Y (Q10), bounded at 3
    std::optional<std::string> author_id;     // A (Q12)
    std::optional<std::string> country_id;    // C (Q12)
    std::vector<std::string> search_terms;    // S (Q12)
    std::optional<std::string> document_id;   // reference document (Q13)
    uint32_t limit = 20;                      // top-k; 0 = unlimited
};

using RowValue = std::variant<int64_t, double, std::string>;

struct QueryResult {
    QueryKind kind = QueryKind::Q1;
    std::vector<std::string> columns;
    std::vector<std::vector<RowValue>> rows;
    uint64_t total_matched = 0;  // row count before the limit cut
    uint64_t docs_examined = 0;  // live articles visible to the query
    double execution_seconds = 0.0;

    bool same_rows(const QueryResult& other) const {
        return columns == other.columns && rows == other.rows &&
               total_matched == other.total_matched;
    }
};

std::string row_value_to_string(const RowValue& v);

} // namespace nhb::query
