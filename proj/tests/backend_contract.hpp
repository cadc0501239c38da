#pragma once

// Contract suite every BackendInterface implementation must pass. The
// simulated reference backend runs it from test_backend.cpp; an external
// adapter links this header into its own test binary and calls
// run_backend_contract with a factory for a fresh, empty, 5-node R=3
// strong-mode instance (see docs/backend-adapter.md).

#include <functional>
#include <memory>
#include <set>

#include "backend/api.hpp"
#include "core/errors.hpp"
#include "doctest.h"
#include "gen/generator.hpp"
#include "model/xml_io.hpp"

namespace nhb::test {

using BackendFactory = std::function<std::unique_ptr<backend::BackendInterface>()>;

inline model::Article contract_article(const std::string& id, int day = 1) {
    model::Article a;
    a.id = id;
    a.title = "Contract fixture " + id;
    a.body = "initial body for " + id;
    a.author_id = "u-contract";
    a.topic_ids = {"t-contract"};
    a.keyword_ids = {"k-contract"};
    a.language_id = "l-contract";
    a.country_id = "c-contract";
    a.publish_date = Date{2005, 6, static_cast<uint8_t>(day)};
    a.page_count = 3;
    return a;
}

inline void run_backend_contract(const BackendFactory& make) {
    using namespace nhb::backend;

    {
        INFO("write then strong read returns version 1");
        auto b = make();
        b->write(contract_article("a-1"));
        auto v = b->read("a-1");
        CHECK(v.version == 1);
        CHECK(v.payload->body == "initial body for a-1");
    }
    {
        INFO("duplicate write conflicts");
        auto b = make();
        b->write(contract_article("a-1"));
        CHECK_THROWS_AS(b->write(contract_article("a-1")), ConflictError);
    }
    {
        INFO("updates increment the version by exactly one and keep history");
        auto b = make();
        b->write(contract_article("a-1"));
        auto v2 = b->update("a-1", "corrected body");
        CHECK(v2.version == 2);
        for (int i = 0; i < 99; i++) b->update("a-1", "body rev " + std::to_string(i));
        CHECK(b->read("a-1").version == 101);
        auto h = b->history("a-1");
        CHECK(h.size() == 101);
        for (size_t k = 0; k < h.size(); k++) CHECK(h[k].version == k + 1);
        // Point read of a historical version.
        ReadOptions at;
        at.mode = ReadOptions::Mode::AtVersion;
        at.version = 1;
        CHECK(b->read("a-1", at).payload->body == "initial body for a-1");
    }
    {
        INFO("unknown ids are not found");
        auto b = make();
        CHECK_THROWS_AS(b->read("missing"), NotFoundError);
        CHECK_THROWS_AS(b->update("missing", "x"), NotFoundError);
        CHECK_THROWS_AS(b->remove("missing"), NotFoundError);
    }
    {
        INFO("delete tombstones; re-write restarts the version at 1");
        auto b = make();
        b->write(contract_article("a-1"));
        b->update("a-1", "v2");
        b->remove("a-1");
        CHECK_THROWS_AS(b->read("a-1"), NotFoundError);
        CHECK_THROWS_AS(b->remove("a-1"), NotFoundError);
        b->write(contract_article("a-1"));
        CHECK(b->read("a-1").version == 1);
        CHECK(b->history("a-1").size() == 1);
    }
    {
        INFO("search without an index is a state error");
        auto b = make();
        b->write(contract_article("a-1"));
        CHECK_THROWS_AS(b->search({"anything"}, {}), StateError);
    }
    {
        INFO("filter-only search returns the author's articles in id order");
        auto b = make();
        for (int i = 1; i <= 3; i++) b->write(contract_article("a-" + std::to_string(i), i));
        model::Article other = contract_article("b-1");
        other.author_id = "u-other";
        b->write(other);
        b->attach_search([](const std::vector<std::string>&) {
            return std::map<std::string, double>{};
        });
        SearchFilters f;
        f.author_id = "u-contract";
        auto hits = b->search({}, f);
        REQUIRE(hits.size() == 3);
        CHECK(hits[0].article_id == "a-1");
        CHECK(hits[1].article_id == "a-2");
        CHECK(hits[2].article_id == "a-3");
    }
    {
        INFO("scan covers exactly the live articles");
        auto b = make();
        b->write(contract_article("a-1"));
        b->write(contract_article("a-2", 2));
        b->remove("a-1");
        auto scan = b->scan_articles();
        REQUIRE(scan.size() == 1);
        CHECK(scan[0]->id == "a-2");
        CHECK(b->article_ids() == std::vector<std::string>{"a-2"});
    }
    {
        INFO("admin surface: unknown nodes, duplicate adds");
        auto b = make();
        CHECK_THROWS_AS(b->kill_node("nope"), NotFoundError);
        CHECK_THROWS_AS(b->recover_node("nope"), NotFoundError);
        auto st = b->status();
        REQUIRE(!st.nodes.empty());
        CHECK_THROWS_AS(b->add_node(st.nodes[0].node_id), ConflictError);
    }
    {
        INFO("rebalance on an unchanged ring moves nothing");
        auto b = make();
        for (int i = 0; i < 50; i++) b->write(contract_article("a-" + std::to_string(i)));
        auto r = b->rebalance();
        CHECK(r.moved_keys == 0);
        CHECK(r.total_keys == 50);
    }
}

} // namespace nhb::test
