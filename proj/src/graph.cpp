#include "graphex/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "graphex/error.hpp"

namespace graphex {

std::size_t DegreeSummary::vertex_total() const {
    std::size_t total = 0;
    for (const auto& [degree, count] : counts) total += count;
    return total;
}

UndirectedGraph UndirectedGraph::from_edges(std::span<const std::pair<VertexId, VertexId>> edges) {
    std::vector<VertexId> ids;
    ids.reserve(2 * edges.size());
    for (const auto& [a, b] : edges) {
        ids.push_back(a);
        ids.push_back(b);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    std::vector<IndexEdge> indexed;
    indexed.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        const auto ia = std::lower_bound(ids.begin(), ids.end(), a) - ids.begin();
        const auto ib = std::lower_bound(ids.begin(), ids.end(), b) - ids.begin();
        indexed.emplace_back(static_cast<std::uint32_t>(ia), static_cast<std::uint32_t>(ib));
    }
    return from_indexed(ids, std::move(indexed));
}

UndirectedGraph UndirectedGraph::from_indexed(std::span<const VertexId> ids,
                                              std::vector<IndexEdge> edges,
                                              std::span<const double> latent) {
    if (!latent.empty() && latent.size() != ids.size())
        throw DomainError("latent coordinates must be parallel to vertex ids");
    for (auto& [a, b] : edges) {
        if (a >= ids.size() || b >= ids.size())
            throw DomainError("edge endpoint outside the candidate vertex list");
        if (a > b) std::swap(a, b);
    }

    // Order candidates by id so lookups can binary search.
    std::vector<std::uint32_t> order(ids.size());
    std::iota(order.begin(), order.end(), 0u);
    const bool sorted = std::is_sorted(ids.begin(), ids.end());
    if (!sorted)
        std::sort(order.begin(), order.end(),
                  [&](std::uint32_t x, std::uint32_t y) { return ids[x] < ids[y]; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (ids[order[i]] == ids[order[i - 1]]) throw DomainError("duplicate vertex id");

    std::vector<std::uint8_t> used(ids.size(), 0);
    for (const auto& [a, b] : edges) used[a] = used[b] = 1;

    std::vector<std::uint32_t> remap(ids.size(), 0);
    UndirectedGraph g;
    for (const std::uint32_t old : order) {
        if (!used[old]) continue;
        remap[old] = static_cast<std::uint32_t>(g.ids_.size());
        g.ids_.push_back(ids[old]);
        if (!latent.empty()) g.latent_.push_back(latent[old]);
    }

    for (auto& [a, b] : edges) {
        a = remap[a];
        b = remap[b];
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges_ = std::move(edges);

    const std::size_t n = g.ids_.size();
    std::vector<std::size_t> degree(n, 0);
    g.loop_flags_.assign(n, 0);
    for (const auto& [a, b] : g.edges_) {
        if (a == b) {
            g.loop_flags_[a] = 1;
            ++g.self_loops_;
        } else {
            ++degree[a];
            ++degree[b];
        }
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];
    g.adjacency_.resize(g.offsets_[n]);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [a, b] : g.edges_) {
        if (a == b) continue;
        g.adjacency_[cursor[a]++] = b;
        g.adjacency_[cursor[b]++] = a;
    }
    return g;
}

std::optional<std::size_t> UndirectedGraph::index_of(VertexId id) const {
    const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
}

std::vector<std::pair<VertexId, VertexId>> UndirectedGraph::id_edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edges_.size());
    for (const auto& [a, b] : edges_) out.emplace_back(ids_[a], ids_[b]);
    return out;
}

bool UndirectedGraph::operator==(const UndirectedGraph& other) const {
    return ids_ == other.ids_ && edges_ == other.edges_ && latent_ == other.latent_;
}

std::size_t non_self_degree(const UndirectedGraph& graph, VertexId v) {
    const auto index = graph.index_of(v);
    if (!index) throw DomainError("unknown vertex id " + std::to_string(v));
    return graph.non_self_degree_at(*index);
}

DegreeSummary degree_summary(const UndirectedGraph& graph, bool include_self_loops) {
    DegreeSummary summary;
    summary.include_self_loops = include_self_loops;
    for (std::size_t i = 0; i < graph.vertex_count(); ++i) {
        std::size_t d = graph.non_self_degree_at(i);
        if (include_self_loops && graph.has_self_loop_at(i)) ++d;
        ++summary.counts[d];
    }
    return summary;
}

std::size_t count_self_loops(const UndirectedGraph& graph) { return graph.self_loop_count(); }

UndirectedGraph induced_subgraph(const UndirectedGraph& graph, std::span<const std::uint8_t> keep) {
    if (keep.size() != graph.vertex_count())
        throw DomainError("keep mask must have one entry per vertex");
    std::vector<UndirectedGraph::IndexEdge> kept;
    for (const auto& [a, b] : graph.index_edges())
        if (keep[a] && keep[b]) kept.emplace_back(a, b);
    return UndirectedGraph::from_indexed(graph.ids(), std::move(kept), graph.latent());
}

BipartiteGraph BipartiteGraph::from_indexed(std::span<const VertexId> left_ids,
                                            std::span<const VertexId> right_ids,
                                            std::vector<IndexEdge> edges) {
    std::vector<std::uint8_t> left_used(left_ids.size(), 0), right_used(right_ids.size(), 0);
    for (const auto& [a, b] : edges) {
        if (a >= left_ids.size() || b >= right_ids.size())
            throw DomainError("bipartite edge endpoint outside its part");
        left_used[a] = 1;
        right_used[b] = 1;
    }
    auto compact = [](std::span<const VertexId> ids, const std::vector<std::uint8_t>& used,
                      std::vector<VertexId>& out) {
        std::vector<std::uint32_t> order(ids.size());
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(),
                  [&](std::uint32_t x, std::uint32_t y) { return ids[x] < ids[y]; });
        std::vector<std::uint32_t> remap(ids.size(), 0);
        for (const std::uint32_t old : order) {
            if (!used[old]) continue;
            remap[old] = static_cast<std::uint32_t>(out.size());
            out.push_back(ids[old]);
        }
        return remap;
    };

    BipartiteGraph g;
    const auto left_map = compact(left_ids, left_used, g.left_ids_);
    const auto right_map = compact(right_ids, right_used, g.right_ids_);
    for (auto& [a, b] : edges) {
        a = left_map[a];
        b = right_map[b];
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges_ = std::move(edges);
    g.left_degree_.assign(g.left_ids_.size(), 0);
    g.right_degree_.assign(g.right_ids_.size(), 0);
    for (const auto& [a, b] : g.edges_) {
        ++g.left_degree_[a];
        ++g.right_degree_[b];
    }
    return g;
}

DegreeSummary BipartiteGraph::left_degree_summary() const {
    DegreeSummary summary;
    for (const auto d : left_degree_) ++summary.counts[d];
    return summary;
}

}  // namespace graphex
