#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "mgs/verify.hpp"

namespace mgs {

enum class SearchMode { First, All };

struct SearchConfig {
    std::size_t max_len = 0;       // mandatory depth bound, >= 1
    SearchMode mode = SearchMode::All;
    bool dedup = true;             // canonical-state deduplication (cost only,
                                   // never changes the answer set)
    unsigned worker_count = 1;
    std::size_t max_states = 10'000'000; // ResourceLimit ceiling
};

struct SearchResult {
    /// Maximal green sequences of length <= max_len, ordered by length and
    /// then stepwise label order.
    std::vector<MutationSequence> found;
    /// True iff the whole green-mutation tree to max_len was explored.
    bool exhausted = false;
    /// The state ceiling was hit; found holds everything discovered so far.
    bool resource_limited = false;
    std::size_t states_visited = 0;
    std::chrono::duration<double> wall_time{};
};

/// Frames the (frozen-free) quiver and enumerates its maximal green
/// sequences up to the depth bound, breadth-first by length. Every emitted
/// sequence is independently re-verified before it is returned.
SearchResult enumerate_mgs(const IceQuiver& q, const SearchConfig& cfg);

struct ExistsResult {
    /// Shortest maximal green sequence within the bound, ties broken by
    /// stepwise label order; absent when none exists up to max_len.
    std::optional<MutationSequence> sequence;
    bool exhausted = false;
    bool resource_limited = false;
    std::size_t states_visited = 0;
    std::chrono::duration<double> wall_time{};
};

ExistsResult exists_mgs(const IceQuiver& q, const SearchConfig& cfg);

} // namespace mgs
