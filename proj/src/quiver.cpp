#include "mgs/quiver.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <limits>

namespace mgs {

namespace {

bool arrow_order(const Arrow& a, const Arrow& b) {
    return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
}

} // namespace

const char* to_string(VertexColor c) {
    switch (c) {
    case VertexColor::Green: return "green";
    case VertexColor::Red: return "red";
    case VertexColor::Mixed: return "mixed";
    }
    return "?";
}

IceQuiver::IceQuiver() : table_(std::make_shared<VertexTable>()) {}

IceQuiver::VertexTable& IceQuiver::editable_table() {
    if (table_.use_count() > 1) {
        table_ = std::make_shared<VertexTable>(*table_);
    }
    return *table_;
}

VertexId IceQuiver::add_vertex(std::string label, bool frozen) {
    if (label.empty()) {
        throw BadParameterError("vertex label must be nonempty");
    }
    VertexTable& t = editable_table();
    if (t.by_label.count(label)) {
        throw BadParameterError("duplicate vertex label '" + label + "'");
    }
    const auto id = static_cast<VertexId>(t.vertices.size());
    t.by_label.emplace(label, id);
    t.vertices.push_back(Vertex{id, std::move(label), frozen});
    if (!t.vertices.back().frozen) ++mutable_count_;
    return id;
}

void IceQuiver::add_arrow(VertexId src, VertexId dst, int mult) {
    if (!has_vertex(src) || !has_vertex(dst)) {
        throw UnknownVertexError("arrow endpoint does not exist");
    }
    if (src == dst) {
        throw BadParameterError("loops are not allowed");
    }
    if (mult <= 0) {
        throw BadParameterError("arrow multiplicity must be positive");
    }
    auto it = std::lower_bound(arrows_.begin(), arrows_.end(),
                               Arrow{src, dst, 0}, arrow_order);
    if (it != arrows_.end() && it->src == src && it->dst == dst) {
        it->mult += mult;
    } else {
        arrows_.insert(it, Arrow{src, dst, mult});
    }
}

const Vertex& IceQuiver::vertex(VertexId id) const {
    if (!has_vertex(id)) {
        throw UnknownVertexError("no vertex with id " + std::to_string(id));
    }
    return table_->vertices[id];
}

std::optional<VertexId> IceQuiver::find_label(std::string_view label) const {
    auto it = table_->by_label.find(std::string(label));
    if (it == table_->by_label.end()) return std::nullopt;
    return it->second;
}

VertexId IceQuiver::require_label(std::string_view label) const {
    if (auto id = find_label(label)) return *id;
    throw UnknownVertexError("no vertex labeled '" + std::string(label) + "'");
}

int IceQuiver::mult(VertexId src, VertexId dst) const {
    auto it = std::lower_bound(arrows_.begin(), arrows_.end(),
                               Arrow{src, dst, 0}, arrow_order);
    if (it != arrows_.end() && it->src == src && it->dst == dst) return it->mult;
    return 0;
}

std::vector<std::string> IceQuiver::validate() const {
    std::vector<std::string> violations;
    const auto& vs = table_->vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].id != i) {
            violations.push_back("vertex at position " + std::to_string(i) +
                                 " has id " + std::to_string(vs[i].id));
        }
        if (vs[i].label.empty()) {
            violations.push_back("vertex " + std::to_string(i) + " has an empty label");
        }
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (vs[i].label == vs[j].label) {
                violations.push_back("duplicate label '" + vs[i].label + "' on vertices " +
                                     std::to_string(i) + " and " + std::to_string(j));
            }
        }
    }
    for (const Arrow& a : arrows_) {
        const std::string name =
            "(" + std::to_string(a.src) + " -> " + std::to_string(a.dst) + ")";
        if (!has_vertex(a.src) || !has_vertex(a.dst)) {
            violations.push_back("arrow " + name + " has an unknown endpoint");
            continue;
        }
        if (a.src == a.dst) {
            violations.push_back("loop at vertex " + std::to_string(a.src));
        }
        if (a.mult <= 0) {
            violations.push_back("nonpositive multiplicity on arrow " + name);
        }
        if (a.src < a.dst && mult(a.dst, a.src) > 0) {
            violations.push_back("2-cycle between vertices " + std::to_string(a.src) +
                                 " and " + std::to_string(a.dst));
        }
        if (vertex(a.src).frozen && vertex(a.dst).frozen) {
            violations.push_back("arrow between frozen vertices " + name);
        }
    }
    return violations;
}

IceQuiver IceQuiver::mutate(VertexId k) const {
    const Vertex& vk = vertex(k);
    if (vk.frozen) {
        throw MutationAtFrozenError("cannot mutate frozen vertex '" + vk.label + "'");
    }

    // Net multiplicity per ordered pair, collected flat and coalesced by one
    // sort. Arrows incident to k are pulled out first: they only re-enter
    // reversed. All arithmetic is overflow-checked; multiplicities grow
    // doubly exponentially on wild quivers and silent wraparound would
    // corrupt colors downstream.
    const auto overflow = [&] {
        return MultiplicityOverflowError("arrow multiplicity overflow while mutating at '" +
                                         vk.label + "'");
    };
    struct Net {
        std::pair<VertexId, VertexId> key;
        long long mult;
    };
    std::vector<Net> net;
    std::vector<const Arrow*> in;
    std::vector<const Arrow*> out;
    net.reserve(arrows_.size());
    for (const Arrow& a : arrows_) {
        if (a.dst == k) {
            in.push_back(&a);
        } else if (a.src == k) {
            out.push_back(&a);
        } else {
            net.push_back({{a.src, a.dst}, a.mult});
        }
    }
    net.reserve(net.size() + in.size() * (out.size() + 1) + out.size());
    // (1) compose every 2-path i -> k -> j
    for (const Arrow* i : in) {
        for (const Arrow* o : out) {
            long long composed = 0;
            if (__builtin_mul_overflow(static_cast<long long>(i->mult),
                                       static_cast<long long>(o->mult), &composed)) {
                throw overflow();
            }
            net.push_back({{i->src, o->dst}, composed});
        }
    }
    // (2) reverse the arrows incident to k
    for (const Arrow* i : in) net.push_back({{k, i->src}, i->mult});
    for (const Arrow* o : out) net.push_back({{o->dst, k}, o->mult});

    std::sort(net.begin(), net.end(),
              [](const Net& a, const Net& b) { return a.key < b.key; });
    std::size_t unique_count = 0;
    for (std::size_t i = 0; i < net.size();) {
        Net combined = net[i];
        for (++i; i < net.size() && net[i].key == combined.key; ++i) {
            if (__builtin_add_overflow(combined.mult, net[i].mult, &combined.mult)) {
                throw overflow();
            }
        }
        net[unique_count++] = combined;
    }
    net.resize(unique_count);

    // (3) cancel opposite pairs to their signed difference; drop arrows
    // between frozen vertices (2-paths with frozen ends can create them).
    const auto net_of = [&](VertexId u, VertexId v) -> const Net* {
        const std::pair<VertexId, VertexId> key{u, v};
        auto it = std::lower_bound(net.begin(), net.end(), key,
                                   [](const Net& n, const std::pair<VertexId, VertexId>& k2) {
                                       return n.key < k2;
                                   });
        return it != net.end() && it->key == key ? &*it : nullptr;
    };
    IceQuiver result;
    result.table_ = table_;
    result.mutable_count_ = mutable_count_;
    result.arrows_.reserve(net.size());
    for (const Net& entry : net) {
        const auto [u, v] = entry.key;
        const Net* rev = net_of(v, u);
        if (rev && u > v) continue; // handled at the (v, u) entry
        long long d = 0;
        if (__builtin_sub_overflow(entry.mult, rev ? rev->mult : 0LL, &d)) {
            throw overflow();
        }
        if (d == 0) continue;
        const VertexId s = d > 0 ? u : v;
        const VertexId t = d > 0 ? v : u;
        if (vertex(s).frozen && vertex(t).frozen) continue;
        const long long magnitude = d > 0 ? d : -d;
        if (magnitude > std::numeric_limits<int>::max()) throw overflow();
        result.arrows_.push_back(Arrow{s, t, static_cast<int>(magnitude)});
    }
    std::sort(result.arrows_.begin(), result.arrows_.end(), arrow_order);
    return result;
}

IceQuiver IceQuiver::mutate_label(std::string_view label) const {
    return mutate(require_label(label));
}

IceQuiver IceQuiver::framed() const {
    if (has_frozen()) {
        throw AlreadyIcedError("framing expects a quiver without frozen vertices");
    }
    IceQuiver out = *this;
    const auto n = static_cast<VertexId>(vertex_count());
    for (VertexId v = 0; v < n; ++v) {
        const VertexId primed = out.add_vertex(vertex(v).label + "'", true);
        out.add_arrow(v, primed, 1);
    }
    return out;
}

IceQuiver IceQuiver::coframed() const {
    if (has_frozen()) {
        throw AlreadyIcedError("coframing expects a quiver without frozen vertices");
    }
    IceQuiver out = *this;
    const auto n = static_cast<VertexId>(vertex_count());
    for (VertexId v = 0; v < n; ++v) {
        const VertexId primed = out.add_vertex(vertex(v).label + "'", true);
        out.add_arrow(primed, v, 1);
    }
    return out;
}

IceQuiver::FrozenAdjacency IceQuiver::frozen_adjacency() const {
    FrozenAdjacency adj;
    adj.in_from_frozen.assign(vertex_count(), false);
    adj.out_to_frozen.assign(vertex_count(), false);
    for (const Arrow& a : arrows_) {
        if (vertex(a.src).frozen) adj.in_from_frozen[a.dst] = true;
        if (vertex(a.dst).frozen) adj.out_to_frozen[a.src] = true;
    }
    return adj;
}

VertexColor IceQuiver::color_from(const FrozenAdjacency& adj, VertexId v) const {
    if (!adj.in_from_frozen[v]) return VertexColor::Green;
    if (!adj.out_to_frozen[v]) return VertexColor::Red;
    return VertexColor::Mixed;
}

VertexColor IceQuiver::color_of(VertexId v) const {
    if (vertex(v).frozen) {
        throw FrozenQueryError("vertex '" + vertex(v).label + "' is frozen and has no color");
    }
    return color_from(frozen_adjacency(), v);
}

std::map<std::string, VertexColor> IceQuiver::colors() const {
    const FrozenAdjacency adj = frozen_adjacency();
    std::map<std::string, VertexColor> out;
    for (const Vertex& v : table_->vertices) {
        if (!v.frozen) out.emplace(v.label, color_from(adj, v.id));
    }
    return out;
}

bool IceQuiver::all_mutable_red() const {
    const FrozenAdjacency adj = frozen_adjacency();
    for (const Vertex& v : table_->vertices) {
        if (!v.frozen && color_from(adj, v.id) != VertexColor::Red) return false;
    }
    return true;
}

std::vector<VertexId> IceQuiver::green_vertices() const {
    const FrozenAdjacency adj = frozen_adjacency();
    std::vector<VertexId> out;
    for (const Vertex& v : table_->vertices) {
        if (!v.frozen && color_from(adj, v.id) == VertexColor::Green) {
            out.push_back(v.id);
        }
    }
    return out;
}

IceQuiver IceQuiver::induced_subquiver(const std::vector<VertexId>& keep) const {
    std::vector<bool> kept(vertex_count(), false);
    for (VertexId v : keep) {
        vertex(v); // existence check
        kept[v] = true;
    }
    IceQuiver out;
    std::vector<VertexId> remap(vertex_count(), 0);
    for (const Vertex& v : table_->vertices) {
        if (kept[v.id]) remap[v.id] = out.add_vertex(v.label, v.frozen);
    }
    for (const Arrow& a : arrows_) {
        if (kept[a.src] && kept[a.dst]) {
            out.add_arrow(remap[a.src], remap[a.dst], a.mult);
        }
    }
    return out;
}

std::string IceQuiver::canonical_encoding() const {
    std::string enc;
    enc.reserve(vertex_count() * 16 + arrows_.size() * 12);
    char buf[64];
    for (const Vertex& v : table_->vertices) {
        // Length-prefixed label keeps the encoding injective for any label text.
        std::snprintf(buf, sizeof buf, "v%u %c %zu:", v.id, v.frozen ? 'f' : 'm',
                      v.label.size());
        enc += buf;
        enc += v.label;
        enc += '\n';
    }
    for (const Arrow& a : arrows_) {
        std::snprintf(buf, sizeof buf, "a%u>%u*%d\n", a.src, a.dst, a.mult);
        enc += buf;
    }
    return enc;
}

std::string IceQuiver::arrow_state_key() const {
    std::string key;
    key.resize(arrows_.size() * 12);
    char* dst = key.data();
    for (const Arrow& a : arrows_) {
        std::memcpy(dst, &a.src, 4);
        std::memcpy(dst + 4, &a.dst, 4);
        std::memcpy(dst + 8, &a.mult, 4);
        dst += 12;
    }
    return key;
}

std::uint64_t IceQuiver::canonical_key() const {
    const std::string enc = canonical_encoding();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : enc) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

bool operator==(const IceQuiver& a, const IceQuiver& b) {
    return a.table_->vertices == b.table_->vertices && a.arrows_ == b.arrows_;
}

} // namespace mgs
