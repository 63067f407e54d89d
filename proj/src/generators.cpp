#include "mgs/generators.hpp"

#include <array>

namespace mgs {

namespace {

std::string sub(const std::string& base, int i) {
    return base + "_" + std::to_string(i);
}

// Row labels g_1^j, g_2^j, g_3^j.
std::string row(int track, int j) {
    return "g_" + std::to_string(track) + "^" + std::to_string(j);
}

} // namespace

IceQuiver cycle_quiver(int m) {
    if (m < 3) {
        throw BadParameterError("cycle length m must be >= 3, got " + std::to_string(m));
    }
    IceQuiver q;
    std::vector<VertexId> c(static_cast<std::size_t>(m) + 1);
    for (int i = 1; i <= m; ++i) c[i] = q.add_vertex(sub("c", i));
    for (int i = 2; i <= m; ++i) q.add_arrow(c[i], c[i - 1]);
    q.add_arrow(c[1], c[m]);
    return q;
}

IceQuiver ladder_quiver(int k, LadderOrientation orientation) {
    if (k < 0) {
        throw BadParameterError("ladder row count k must be >= 0, got " + std::to_string(k));
    }
    IceQuiver q;
    const VertexId g0 = q.add_vertex("g_0");
    std::vector<std::array<VertexId, 3>> g(static_cast<std::size_t>(k) + 1);
    for (int j = 1; j <= k; ++j) {
        for (int t = 1; t <= 3; ++t) g[j][t - 1] = q.add_vertex(row(t, j));
    }
    auto g1 = [&](int j) { return g[j][0]; };
    auto g2 = [&](int j) { return g[j][1]; };
    auto g3 = [&](int j) { return g[j][2]; };
    if (k == 0) return q;

    if (orientation == LadderOrientation::Standalone) {
        q.add_arrow(g1(1), g0);
        q.add_arrow(g0, g3(1));
        q.add_arrow(g2(1), g1(1));
        q.add_arrow(g3(1), g2(1));
    } else {
        q.add_arrow(g0, g1(1));
        q.add_arrow(g3(1), g0);
        q.add_arrow(g1(1), g2(1));
        q.add_arrow(g2(1), g3(1));
    }
    for (int j = 2; j <= k; ++j) {
        q.add_arrow(g2(j), g1(j));
        q.add_arrow(g3(j), g2(j));
    }
    for (int j = 1; j < k; ++j) {
        q.add_arrow(g1(j + 1), g1(j));
        q.add_arrow(g1(j), g2(j + 1));
        q.add_arrow(g2(j + 1), g3(j));
        q.add_arrow(g3(j), g3(j + 1));
    }
    return q;
}

IceQuiver torus_quiver(int n, int p) {
    if (n < 2) {
        throw BadParameterError("genus n must be >= 2, got " + std::to_string(n));
    }
    if (p < 4) {
        throw BadParameterError("puncture count p must be >= 4, got " + std::to_string(p));
    }
    const int rows = p - 3;
    IceQuiver q;

    std::vector<VertexId> f(static_cast<std::size_t>(n) + 3);
    for (int i = 1; i <= n + 2; ++i) f[i] = q.add_vertex(sub("f", i));

    std::vector<VertexId> a(n + 1), b(n + 1), c(n + 1), d(n + 1), e(n + 1);
    for (int i = 1; i <= n; ++i) {
        a[i] = q.add_vertex(sub("a", i));
        b[i] = q.add_vertex(sub("b", i));
        c[i] = q.add_vertex(sub("c", i));
        d[i] = q.add_vertex(sub("d", i));
        e[i] = q.add_vertex(sub("e", i));
    }

    const VertexId g0 = q.add_vertex("g_0");
    std::vector<std::array<VertexId, 3>> g(static_cast<std::size_t>(rows) + 1);
    for (int j = 1; j <= rows; ++j) {
        for (int t = 1; t <= 3; ++t) g[j][t - 1] = q.add_vertex(row(t, j));
    }
    auto g1 = [&](int j) { return g[j][0]; };
    auto g2 = [&](int j) { return g[j][1]; };
    auto g3 = [&](int j) { return g[j][2]; };

    // f-cycle: f_1 -> f_{n+2} -> f_{n+1} -> f_n -> ... -> f_1
    for (int i = 1; i <= n - 1; ++i) q.add_arrow(f[i + 1], f[i]);
    q.add_arrow(f[1], f[n + 2]);
    q.add_arrow(f[n + 2], f[n + 1]);
    q.add_arrow(f[n + 1], f[n]);

    // e-triangles along the cycle
    for (int i = 1; i <= n; ++i) q.add_arrow(e[i], f[i]);
    for (int i = 1; i <= n - 1; ++i) q.add_arrow(f[i], e[i + 1]);
    q.add_arrow(f[n + 2], e[1]);

    // one handle block per genus; c_i -> b_i is the only double arrow
    for (int i = 1; i <= n; ++i) {
        q.add_arrow(d[i], e[i]);
        q.add_arrow(e[i], a[i]);
        q.add_arrow(a[i], d[i]);
        q.add_arrow(b[i], d[i]);
        q.add_arrow(d[i], c[i]);
        q.add_arrow(b[i], a[i]);
        q.add_arrow(a[i], c[i]);
        q.add_arrow(c[i], b[i], 2);
    }

    // g-ladder; row 1 carries the standalone ladder orientation, the one the
    // main-sequence verification certifies
    q.add_arrow(g1(1), g0);
    q.add_arrow(g0, g3(1));
    q.add_arrow(g2(1), g1(1));
    q.add_arrow(g3(1), g2(1));
    for (int j = 1; j <= rows - 1; ++j) {
        q.add_arrow(g1(j), g2(j + 1));
        q.add_arrow(g2(j + 1), g3(j));
        q.add_arrow(g2(j + 1), g1(j + 1));
        q.add_arrow(g1(j + 1), g1(j));
        q.add_arrow(g3(j), g3(j + 1));
        q.add_arrow(g3(j + 1), g2(j + 1));
    }

    // ladder attachment to the f-cycle
    q.add_arrow(f[n], g1(rows));
    q.add_arrow(g1(rows), f[n + 1]);
    q.add_arrow(f[n + 1], g3(rows));
    q.add_arrow(g3(rows), f[n + 2]);

    return q;
}

IceQuiver FamilySpec::build() const {
    switch (family) {
    case Family::Cycle: return cycle_quiver(m);
    case Family::Ladder: return ladder_quiver(k);
    case Family::Torus: return torus_quiver(n, p);
    }
    throw BadParameterError("unknown family");
}

std::string FamilySpec::describe() const {
    switch (family) {
    case Family::Cycle: return "cycle(m=" + std::to_string(m) + ")";
    case Family::Ladder: return "ladder(k=" + std::to_string(k) + ")";
    case Family::Torus:
        return "torus(n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")";
    }
    return "?";
}

} // namespace mgs
