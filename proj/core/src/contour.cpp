// SPDX-License-Identifier: Apache-2.0
#include "nfal/contour.hpp"

#include <array>
#include <unordered_map>

namespace nfal {

namespace {

using EdgeId = std::uint64_t;

EdgeId h_edge(std::size_t i, std::size_t j) { return (static_cast<EdgeId>(j) << 32) | (static_cast<EdgeId>(i) << 1); }
EdgeId v_edge(std::size_t i, std::size_t j) { return h_edge(i, j) | 1u; }

Vec2 edge_point(const GridSpec& g, EdgeId e)
{
    const std::size_t j = static_cast<std::size_t>(e >> 32);
    const std::size_t i = static_cast<std::size_t>((e & 0xffffffffu) >> 1);
    if (e & 1u) return {g.x(i), 0.5 * (g.y(j) + g.y(j + 1))};
    return {0.5 * (g.x(i) + g.x(i + 1)), g.y(j)};
}

// edge slots: 0 bottom, 1 right, 2 top, 3 left
constexpr std::array<std::array<int, 4>, 16> kCases = {{
    {-1, -1, -1, -1}, {3, 0, -1, -1}, {0, 1, -1, -1}, {3, 1, -1, -1},
    {1, 2, -1, -1},   {0, 1, 3, 2},   {0, 2, -1, -1}, {3, 2, -1, -1},
    {2, 3, -1, -1},   {0, 2, -1, -1}, {3, 0, 1, 2},   {1, 2, -1, -1},
    {3, 1, -1, -1},   {0, 1, -1, -1}, {3, 0, -1, -1}, {-1, -1, -1, -1},
}};

} // namespace

std::vector<Polyline> marching_squares(const GridSpec& g, const std::vector<std::uint8_t>& bits)
{
    if (bits.size() != g.size()) throw InvalidArgument("marching_squares: shape mismatch");
    std::vector<std::array<EdgeId, 2>> segs;
    for (std::size_t j = 0; j + 1 < g.ny; ++j)
        for (std::size_t i = 0; i + 1 < g.nx; ++i) {
            const int c = (bits[g.index(i, j)] ? 1 : 0) | (bits[g.index(i + 1, j)] ? 2 : 0) |
                          (bits[g.index(i + 1, j + 1)] ? 4 : 0) | (bits[g.index(i, j + 1)] ? 8 : 0);
            const std::array<EdgeId, 4> e = {h_edge(i, j), v_edge(i + 1, j), h_edge(i, j + 1), v_edge(i, j)};
            const auto& cs = kCases[static_cast<std::size_t>(c)];
            for (int s = 0; s < 4 && cs[static_cast<std::size_t>(s)] >= 0; s += 2)
                segs.push_back({e[static_cast<std::size_t>(cs[static_cast<std::size_t>(s)])],
                                e[static_cast<std::size_t>(cs[static_cast<std::size_t>(s + 1)])]});
        }

    std::unordered_map<EdgeId, std::array<long, 2>> adj;
    adj.reserve(segs.size() * 2);
    for (std::size_t s = 0; s < segs.size(); ++s)
        for (EdgeId e : segs[s]) {
            auto [it, fresh] = adj.try_emplace(e, std::array<long, 2>{-1, -1});
            (it->second[0] < 0 ? it->second[0] : it->second[1]) = static_cast<long>(s);
        }

    std::vector<std::uint8_t> used(segs.size(), 0);
    std::vector<Polyline> out;
    auto walk = [&](std::size_t start, EdgeId from) {
        Polyline pl;
        pl.points.push_back(edge_point(g, from));
        long s = static_cast<long>(start);
        EdgeId cur = from;
        while (s >= 0 && !used[static_cast<std::size_t>(s)]) {
            used[static_cast<std::size_t>(s)] = 1;
            const auto& seg = segs[static_cast<std::size_t>(s)];
            cur = seg[0] == cur ? seg[1] : seg[0];
            pl.points.push_back(edge_point(g, cur));
            const auto& a = adj[cur];
            s = a[0] == s ? a[1] : a[0];
        }
        return pl;
    };

    // open chains start at edges used once
    for (std::size_t s = 0; s < segs.size(); ++s) {
        if (used[s]) continue;
        for (EdgeId e : segs[s]) {
            const auto& a = adj[e];
            if (a[1] < 0 && !used[s]) out.push_back(walk(s, e));
        }
    }
    for (std::size_t s = 0; s < segs.size(); ++s) {
        if (used[s]) continue;
        Polyline pl = walk(s, segs[s][0]);
        pl.closed = true;
        out.push_back(std::move(pl));
    }
    return out;
}

} // namespace nfal
