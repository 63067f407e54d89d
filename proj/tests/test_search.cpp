#include <doctest.h>

#include <algorithm>
#include <random>

#include "mgs/generators.hpp"
#include "mgs/search.hpp"
#include "mgs/sequences.hpp"
#include "support/brute_force.hpp"
#include "support/common.hpp"
#include "support/random_quivers.hpp"

using namespace mgs;
using mgs_test::a2;

namespace {

SearchConfig config(std::size_t max_len) {
    SearchConfig cfg;
    cfg.max_len = max_len;
    return cfg;
}

std::vector<std::vector<std::string>> raw(const SearchResult& r) {
    std::vector<std::vector<std::string>> out;
    for (const MutationSequence& s : r.found) out.push_back(s.steps);
    return out;
}

IceQuiver isolated_pair() {
    IceQuiver q;
    q.add_vertex("u");
    q.add_vertex("v");
    return q;
}

} // namespace

TEST_CASE("A2 has exactly two maximal green sequences up to length 6") {
    const SearchResult r = enumerate_mgs(a2(), config(6));
    CHECK(raw(r) == std::vector<std::vector<std::string>>{{"1", "2"}, {"2", "1", "2"}});
    CHECK(r.exhausted);
    CHECK_FALSE(r.resource_limited);
    CHECK(r.states_visited > 0);
}

TEST_CASE("a single vertex has the unique one-step sequence") {
    IceQuiver q;
    q.add_vertex("1");
    const SearchResult r = enumerate_mgs(q, config(3));
    CHECK(raw(r) == std::vector<std::vector<std::string>>{{"1"}});
    CHECK(r.exhausted);
}

TEST_CASE("two isolated vertices commute") {
    const SearchResult r = enumerate_mgs(isolated_pair(), config(4));
    CHECK(raw(r) == std::vector<std::vector<std::string>>{{"u", "v"}, {"v", "u"}});
    CHECK(r.exhausted);
}

TEST_CASE("the empty quiver accepts the empty sequence") {
    const ExistsResult r = exists_mgs(IceQuiver{}, config(1));
    REQUIRE(r.sequence.has_value());
    CHECK(r.sequence->empty());
}

TEST_CASE("the 3-cycle has no sequence within length 3") {
    const ExistsResult r = exists_mgs(cycle_quiver(3), config(3));
    CHECK_FALSE(r.sequence.has_value());
    CHECK(r.exhausted);
}

TEST_CASE("the 3-cycle's gamma shows up at depth 4") {
    const SearchResult r = enumerate_mgs(cycle_quiver(3), config(4));
    CHECK_FALSE(r.found.empty());
    bool has_gamma = false;
    for (const MutationSequence& s : r.found) {
        if (s == cycle_gamma(3)) has_gamma = true;
        CHECK(s.length() == 4); // length-3 sequences were ruled out above
    }
    CHECK(has_gamma);
}

TEST_CASE("exists prefers the shorter sequence, ties broken by labels") {
    const ExistsResult r = exists_mgs(a2(), config(6));
    REQUIRE(r.sequence.has_value());
    CHECK(r.sequence->steps == std::vector<std::string>{"1", "2"});

    const ExistsResult tie = exists_mgs(isolated_pair(), config(4));
    REQUIRE(tie.sequence.has_value());
    CHECK(tie.sequence->steps == std::vector<std::string>{"u", "v"});
}

TEST_CASE("found lists are identical across worker counts") {
    SearchConfig one = config(6);
    SearchConfig four = config(6);
    four.worker_count = 4;
    for (const IceQuiver& q : {cycle_quiver(4), cycle_quiver(3), a2()}) {
        const SearchResult a = enumerate_mgs(q, one);
        const SearchResult b = enumerate_mgs(q, four);
        CHECK(raw(a) == raw(b));
        CHECK(a.exhausted == b.exhausted);
        CHECK(a.states_visited == b.states_visited);
    }
}

TEST_CASE("deduplication does not change the answer set") {
    std::mt19937_64 rng(mgs_test::kSuiteSeed);
    mgs_test::RandomQuiverOptions opt;
    opt.min_vertices = 1;
    opt.max_vertices = 4;
    for (int i = 0; i < 25; ++i) {
        const IceQuiver q = mgs_test::random_quiver(rng, opt);
        SearchConfig with = config(6);
        SearchConfig without = config(6);
        without.dedup = false;
        const SearchResult a = enumerate_mgs(q, with);
        const SearchResult b = enumerate_mgs(q, without);
        CHECK(raw(a) == raw(b));
        CHECK(a.exhausted == b.exhausted);
    }
}

TEST_CASE("enumeration agrees with the naive reference walk") {
    std::mt19937_64 rng(mgs_test::kSuiteSeed + 1);
    mgs_test::RandomQuiverOptions opt;
    opt.min_vertices = 2;
    opt.max_vertices = 4;
    for (int i = 0; i < 30; ++i) {
        const IceQuiver q = mgs_test::random_quiver(rng, opt);
        CHECK(raw(enumerate_mgs(q, config(6))) == mgs_test::brute_force_mgs(q, 6));
    }
    CHECK(raw(enumerate_mgs(cycle_quiver(3), config(5))) ==
          mgs_test::brute_force_mgs(cycle_quiver(3), 5));
    CHECK(raw(enumerate_mgs(a2(), config(6))) == mgs_test::brute_force_mgs(a2(), 6));
}

TEST_CASE("constructed sequences appear in the enumerated green sets") {
    // the quick instances; the ladder k=2 sweep lives in the oracle_agreement
    // binary
    for (int m = 3; m <= 5; ++m) {
        const SearchResult r = enumerate_mgs(cycle_quiver(m), config(cycle_gamma(m).length()));
        CHECK(r.exhausted);
        CHECK(std::count(r.found.begin(), r.found.end(), cycle_gamma(m)) == 1);
    }
    for (int k = 0; k <= 1; ++k) {
        const SearchResult r = enumerate_mgs(ladder_quiver(k), config(alpha_chain(k).length()));
        CHECK(r.exhausted);
        CHECK(std::count(r.found.begin(), r.found.end(), alpha_chain(k)) == 1);
    }
}

TEST_CASE("raising the bound never loses sequences") {
    const auto small = raw(enumerate_mgs(a2(), config(2)));
    const auto large = raw(enumerate_mgs(a2(), config(6)));
    for (const auto& s : small) {
        CHECK(std::find(large.begin(), large.end(), s) != large.end());
    }
    CHECK(small.size() == 1);
    CHECK(large.size() == 2);
}

TEST_CASE("every emitted sequence re-verifies") {
    const IceQuiver q = cycle_quiver(4);
    const SearchResult r = enumerate_mgs(q, config(6));
    CHECK_FALSE(r.found.empty());
    for (const MutationSequence& s : r.found) {
        CHECK(is_maximal_green(q.framed(), s).accepted);
    }
}

TEST_CASE("search rejects bad configurations and iced inputs") {
    CHECK_THROWS_AS(enumerate_mgs(a2(), config(0)), BadParameterError);
    CHECK_THROWS_AS(enumerate_mgs(a2().framed(), config(3)), BadParameterError);
    SearchConfig zero_workers = config(3);
    zero_workers.worker_count = 0;
    CHECK_THROWS_AS(enumerate_mgs(a2(), zero_workers), BadParameterError);
}

TEST_CASE("the state ceiling reports a resource limit without losing findings") {
    SearchConfig tight = config(6);
    tight.max_states = 2;
    const SearchResult r = enumerate_mgs(a2(), tight);
    CHECK(r.resource_limited);
    CHECK_FALSE(r.exhausted);
    for (const MutationSequence& s : r.found) {
        CHECK(is_maximal_green(a2().framed(), s).accepted);
    }

    SearchConfig tree = tight;
    tree.dedup = false;
    const SearchResult t = enumerate_mgs(a2(), tree);
    CHECK(t.resource_limited);
    CHECK_FALSE(t.exhausted);
}
