#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mgs/errors.hpp"

namespace mgs {

/// Dense vertex identifier: ids are 0..n-1 in construction order and stay
/// stable for the lifetime of the quiver (mutation never renumbers).
using VertexId = std::uint32_t;

struct Vertex {
    VertexId id = 0;
    std::string label;
    bool frozen = false;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// One record per ordered vertex pair; parallel arrows aggregate in `mult`.
struct Arrow {
    VertexId src = 0;
    VertexId dst = 0;
    int mult = 1;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Color of a mutable vertex relative to the frozen part.
///
/// Green: no arrow from a frozen vertex into it. Red: some arrow from a
/// frozen vertex into it and none from it into a frozen vertex. Mixed:
/// arrows in both directions; a diagnostic state that never occurs along
/// green sequences started from a framed quiver. A vertex with no
/// frozen-incident arrows at all reports Green.
enum class VertexColor { Green, Red, Mixed };

const char* to_string(VertexColor c);

/// A quiver with a distinguished frozen vertex subset.
///
/// Invariants (checked by validate(), preserved by mutate): no loops, no
/// 2-cycles (at most one direction per vertex pair), no arrows between
/// frozen vertices, positive multiplicities, unique labels.
///
/// Values are immutable once built: mutate/framed/coframed return fresh
/// quivers and never touch the receiver, so states can be snapshotted and
/// shared across threads freely. The vertex table is shared between a
/// quiver and its mutations.
class IceQuiver {
public:
    IceQuiver();

    /// Appends a vertex and returns its id. Rejects duplicate or empty labels.
    VertexId add_vertex(std::string label, bool frozen = false);
    /// Adds `mult` parallel arrows src -> dst, aggregating with any existing
    /// record. Rejects loops and unknown endpoints; 2-cycle and frozen-frozen
    /// violations are left for validate() so malformed inputs can be
    /// diagnosed rather than half-rejected.
    void add_arrow(VertexId src, VertexId dst, int mult = 1);

    const std::vector<Vertex>& vertices() const { return table_->vertices; }
    /// Arrow records sorted by (src, dst).
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::size_t vertex_count() const { return table_->vertices.size(); }
    std::size_t mutable_count() const { return mutable_count_; }
    bool has_frozen() const { return mutable_count_ != vertex_count(); }

    bool has_vertex(VertexId id) const { return id < table_->vertices.size(); }
    const Vertex& vertex(VertexId id) const;
    std::optional<VertexId> find_label(std::string_view label) const;
    VertexId require_label(std::string_view label) const;

    /// Aggregated multiplicity of src -> dst, 0 when absent.
    int mult(VertexId src, VertexId dst) const;

    /// One description per violated structural invariant; empty means valid.
    std::vector<std::string> validate() const;

    /// Quiver mutation at a mutable vertex: compose 2-paths through k,
    /// reverse the arrows incident to k, then cancel opposite pairs down to
    /// their signed difference and drop arrows between frozen vertices.
    IceQuiver mutate(VertexId k) const;
    IceQuiver mutate_label(std::string_view label) const;

    /// Adds a frozen companion i' and an arrow i -> i' for every vertex.
    /// Input must have no frozen vertices.
    IceQuiver framed() const;
    /// Same companions with the arrows reversed (i' -> i).
    IceQuiver coframed() const;

    VertexColor color_of(VertexId v) const;
    /// Colors of all mutable vertices, keyed by label.
    std::map<std::string, VertexColor> colors() const;
    bool all_mutable_red() const;
    /// Ids of green mutable vertices in ascending order.
    std::vector<VertexId> green_vertices() const;

    /// Full subquiver on the given vertices (ids are re-densified in the
    /// original order; labels and frozen flags are preserved).
    IceQuiver induced_subquiver(const std::vector<VertexId>& keep) const;

    /// Injective byte encoding of the labeled quiver (vertex table plus the
    /// sorted arrow records). Equal encodings mean equal quivers.
    std::string canonical_encoding() const;
    /// Compact byte key of the arrow set alone. Distinguishes states that
    /// share one vertex table; mutation preserves the table, so the states of
    /// a single search qualify.
    std::string arrow_state_key() const;
    /// 64-bit FNV-1a digest of canonical_encoding(); deterministic across
    /// runs and platforms.
    std::uint64_t canonical_key() const;

    friend bool operator==(const IceQuiver& a, const IceQuiver& b);

private:
    struct VertexTable {
        std::vector<Vertex> vertices;
        std::unordered_map<std::string, VertexId> by_label;
    };

    // Per-vertex frozen-adjacency summary used by the color queries.
    struct FrozenAdjacency {
        std::vector<bool> in_from_frozen;
        std::vector<bool> out_to_frozen;
    };
    FrozenAdjacency frozen_adjacency() const;
    VertexColor color_from(const FrozenAdjacency& adj, VertexId v) const;

    VertexTable& editable_table();

    std::shared_ptr<VertexTable> table_;
    std::vector<Arrow> arrows_; // sorted by (src, dst)
    std::size_t mutable_count_ = 0;
};

} // namespace mgs
