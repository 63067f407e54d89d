#include "mgs/search.hpp"

#include <algorithm>
#include <cstdint>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

namespace mgs {

namespace {

bool sequence_order(const MutationSequence& a, const MutationSequence& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.steps < b.steps;
}

void check_input(const IceQuiver& q, const SearchConfig& cfg) {
    if (cfg.max_len < 1) {
        throw BadParameterError("search depth bound must be >= 1");
    }
    if (cfg.worker_count < 1) {
        throw BadParameterError("worker count must be >= 1");
    }
    if (cfg.max_states < 1) {
        throw BadParameterError("state ceiling must be >= 1");
    }
    if (q.has_frozen()) {
        throw BadParameterError("search expects a quiver without frozen vertices");
    }
    if (auto violations = q.validate(); !violations.empty()) {
        throw BadParameterError("search input is not a valid quiver: " + violations.front());
    }
}

// Successors of a state are its green vertices in ascending id order. A
// green mutation turns the mutated vertex red, so the vertex just mutated is
// never offered again immediately.
std::vector<std::pair<VertexId, IceQuiver>> green_successors(const IceQuiver& state) {
    std::vector<std::pair<VertexId, IceQuiver>> out;
    for (VertexId v : state.green_vertices()) {
        out.emplace_back(v, state.mutate(v));
    }
    return out;
}

// Lean replay of one sequence from the framed start: greenness at every step
// and all-red at the end, no trace bookkeeping. This is the soundness gate
// applied to every sequence before it leaves the search.
bool replay_accepts(const IceQuiver& framed_start, const MutationSequence& seq) {
    IceQuiver state = framed_start;
    for (const std::string& label : seq.steps) {
        const auto id = state.find_label(label);
        if (!id || state.vertex(*id).frozen) return false;
        if (state.color_of(*id) != VertexColor::Green) return false;
        state = state.mutate(*id);
    }
    return state.all_mutable_red();
}

void reverify_all(const IceQuiver& framed_start, const std::vector<MutationSequence>& found,
                  unsigned worker_count) {
    std::atomic<bool> all_accepted{true};
    auto verify_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end && all_accepted.load(); ++i) {
            if (!replay_accepts(framed_start, found[i])) all_accepted.store(false);
        }
    };
    const unsigned workers =
        found.size() >= 256 ? std::max(1u, worker_count) : 1u;
    if (workers > 1) {
        std::vector<std::thread> pool;
        const std::size_t chunk = (found.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(found.size(), w * chunk);
            const std::size_t end = std::min(found.size(), begin + chunk);
            if (begin < end) pool.emplace_back(verify_range, begin, end);
        }
        for (auto& t : pool) t.join();
    } else {
        verify_range(0, found.size());
    }
    if (!all_accepted.load()) {
        throw std::logic_error("search produced a sequence that fails verification");
    }
}

// ---------------------------------------------------------------------------
// Deduplicated engine: level-synchronous BFS over distinct states. Nodes of
// one level are unique states; predecessor links keep every distinct green
// sequence recoverable even when paths merge.

struct CachedState {
    IceQuiver state;
    bool all_red = false;
    bool expanded = false;
    // (mutated vertex label, state key of the child)
    std::vector<std::pair<const std::string*, const std::string*>> succs;
};

using StateCache = std::unordered_map<std::string, CachedState>;

struct LevelNode {
    const std::string* key = nullptr;
    CachedState* info = nullptr;
    // (node index in the previous level, label of the mutation taken)
    std::vector<std::pair<std::uint32_t, const std::string*>> preds;
};

using Level = std::vector<LevelNode>;

// Freshly computed successors of one node, before the deterministic merge.
struct ExpansionBuffer {
    std::vector<std::pair<VertexId, IceQuiver>> succs;
    bool computed = false;
};

class DedupEngine {
public:
    DedupEngine(const IceQuiver& framed_start, const SearchConfig& cfg) : cfg_(cfg) {
        auto [it, inserted] = cache_.emplace(framed_start.arrow_state_key(), CachedState{});
        it->second.state = framed_start;
        it->second.all_red = framed_start.all_mutable_red();
        levels_.push_back(Level{LevelNode{&it->first, &it->second, {}}});
        if (it->second.all_red) accepting_.emplace_back(0, 0);
    }

    void run() {
        for (std::size_t depth = 0; depth < cfg_.max_len; ++depth) {
            if (levels_[depth].empty()) {
                exhausted_ = true; // no states left anywhere below this depth
                return;
            }
            if (cfg_.mode == SearchMode::First && !accepting_.empty()) return;
            if (!expand_level(depth)) return; // resource limit
        }
        exhausted_ = true;
    }

    std::vector<MutationSequence> sequences() const {
        std::vector<MutationSequence> out;
        std::vector<const std::string*> suffix;
        for (const auto& [level, node] : accepting_) {
            walk_back(level, node, suffix, out);
        }
        return out;
    }

    bool exhausted() const { return exhausted_ && !resource_limited_; }
    bool resource_limited() const { return resource_limited_; }
    std::size_t states_visited() const { return cache_.size(); }

private:
    bool expand_level(std::size_t depth) {
        Level& level = levels_[depth];
        std::vector<ExpansionBuffer> buffers(level.size());

        // Phase A: compute successors of still-unexpanded nodes. The cache is
        // read-only here, so workers share it without locking.
        auto expand_range = [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                if (!level[i].info->expanded) {
                    buffers[i].succs = green_successors(level[i].info->state);
                    buffers[i].computed = true;
                }
            }
        };
        const unsigned workers =
            level.size() >= 64 ? std::max(1u, cfg_.worker_count) : 1u;
        if (workers > 1) {
            std::vector<std::thread> pool;
            const std::size_t chunk = (level.size() + workers - 1) / workers;
            for (unsigned w = 0; w < workers; ++w) {
                const std::size_t begin = std::min(level.size(), w * chunk);
                const std::size_t end = std::min(level.size(), begin + chunk);
                if (begin < end) pool.emplace_back(expand_range, begin, end);
            }
            for (auto& t : pool) t.join();
        } else {
            expand_range(0, level.size());
        }

        // Phase B: sequential merge in (node, vertex) order; this fixes the
        // next level's node order independently of scheduling.
        Level next;
        std::unordered_map<const std::string*, std::uint32_t> index_of;
        for (std::size_t i = 0; i < level.size(); ++i) {
            LevelNode& node = level[i];
            if (buffers[i].computed) {
                node.info->succs.reserve(buffers[i].succs.size());
                for (auto& [v, child] : buffers[i].succs) {
                    std::string enc = child.arrow_state_key();
                    auto it = cache_.find(enc);
                    if (it == cache_.end()) {
                        if (cache_.size() >= cfg_.max_states) {
                            resource_limited_ = true;
                            levels_.push_back(std::move(next));
                            return false;
                        }
                        it = cache_.emplace(std::move(enc), CachedState{}).first;
                        it->second.state = std::move(child);
                        it->second.all_red = it->second.state.all_mutable_red();
                    }
                    node.info->succs.emplace_back(&node.info->state.vertex(v).label,
                                                  &it->first);
                }
                node.info->expanded = true;
            }
            for (const auto& [label, child_key] : node.info->succs) {
                CachedState& child_info = cache_.at(*child_key);
                auto [pos, fresh] = index_of.emplace(child_key,
                                                     static_cast<std::uint32_t>(next.size()));
                if (fresh) {
                    next.push_back(LevelNode{child_key, &child_info, {}});
                    if (child_info.all_red) {
                        accepting_.emplace_back(levels_.size(), next.size() - 1);
                    }
                }
                next[pos->second].preds.emplace_back(static_cast<std::uint32_t>(i), label);
            }
        }
        levels_.push_back(std::move(next));
        return true;
    }

    void walk_back(std::size_t level, std::size_t node,
                   std::vector<const std::string*>& suffix,
                   std::vector<MutationSequence>& out) const {
        if (level == 0) {
            MutationSequence seq;
            seq.steps.reserve(suffix.size());
            for (auto it = suffix.rbegin(); it != suffix.rend(); ++it) {
                seq.steps.push_back(**it);
            }
            out.push_back(std::move(seq));
            return;
        }
        for (const auto& [parent, label] : levels_[level][node].preds) {
            suffix.push_back(label);
            walk_back(level - 1, parent, suffix, out);
            suffix.pop_back();
        }
    }

    SearchConfig cfg_;
    StateCache cache_;
    std::vector<Level> levels_;
    std::vector<std::pair<std::size_t, std::size_t>> accepting_; // (level, node)
    bool exhausted_ = false;
    bool resource_limited_ = false;
};

// ---------------------------------------------------------------------------
// Plain tree walk (dedup disabled): every path explored independently.

struct TreeWalk {
    const SearchConfig& cfg;
    std::vector<MutationSequence> found;
    std::vector<std::string> path;
    std::size_t visited = 0;
    std::size_t shallowest_hit = SIZE_MAX;
    bool resource_limited = false;

    void walk(const IceQuiver& state, std::size_t depth) {
        if (resource_limited) return;
        if (++visited > cfg.max_states) {
            resource_limited = true;
            return;
        }
        if (state.all_mutable_red()) {
            shallowest_hit = std::min(shallowest_hit, depth);
            found.emplace_back(path);
            return; // all-red states have no green moves anyway
        }
        if (depth == cfg.max_len) return;
        if (cfg.mode == SearchMode::First && depth >= shallowest_hit) return;
        for (VertexId v : state.green_vertices()) {
            path.push_back(state.vertex(v).label);
            walk(state.mutate(v), depth + 1);
            path.pop_back();
        }
    }
};

SearchResult run_engine(const IceQuiver& q, const SearchConfig& cfg) {
    check_input(q, cfg);
    const auto started = std::chrono::steady_clock::now();
    const IceQuiver start = q.framed();

    SearchResult result;
    if (cfg.dedup) {
        DedupEngine engine(start, cfg);
        engine.run();
        result.found = engine.sequences();
        result.exhausted = engine.exhausted();
        result.resource_limited = engine.resource_limited();
        result.states_visited = engine.states_visited();
    } else {
        TreeWalk walk{cfg, {}, {}, 0, SIZE_MAX, false};
        walk.walk(start, 0);
        result.found = std::move(walk.found);
        // A First-mode hit below the bound prunes the rest of the tree.
        result.exhausted = !walk.resource_limited &&
                           (cfg.mode == SearchMode::All || result.found.empty() ||
                            walk.shallowest_hit == cfg.max_len);
        result.resource_limited = walk.resource_limited;
        result.states_visited = walk.visited;
    }

    std::sort(result.found.begin(), result.found.end(), sequence_order);
    if (cfg.mode == SearchMode::First && result.found.size() > 1) {
        result.found.resize(1);
    }

    // Soundness gate: nothing leaves the search without passing the verifier.
    reverify_all(start, result.found, cfg.worker_count);

    result.wall_time = std::chrono::steady_clock::now() - started;
    return result;
}

} // namespace

SearchResult enumerate_mgs(const IceQuiver& q, const SearchConfig& cfg) {
    return run_engine(q, cfg);
}

ExistsResult exists_mgs(const IceQuiver& q, const SearchConfig& cfg) {
    SearchConfig first = cfg;
    first.mode = SearchMode::First;
    SearchResult r = run_engine(q, first);
    ExistsResult out;
    if (!r.found.empty()) out.sequence = std::move(r.found.front());
    out.exhausted = r.exhausted;
    out.resource_limited = r.resource_limited;
    out.states_visited = r.states_visited;
    out.wall_time = r.wall_time;
    return out;
}

} // namespace mgs
