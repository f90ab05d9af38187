#ifndef GRAPHEX_GRAPH_HPP
#define GRAPHEX_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace graphex {

using VertexId = std::uint64_t;

/// Histogram degree -> number of vertices with that degree.
struct DegreeSummary {
    std::map<std::size_t, std::size_t> counts;
    bool include_self_loops = false;

    std::size_t vertex_total() const;

    bool operator==(const DegreeSummary&) const = default;
};

/// Finite simple undirected graph with self-loops and no isolated vertices.
///
/// Vertices are kept sorted by id; edges are canonical index pairs (a <= b),
/// sorted and unique. Immutable once built, so it can be shared read-only
/// across worker threads.
class UndirectedGraph {
public:
    using IndexEdge = std::pair<std::uint32_t, std::uint32_t>;

    UndirectedGraph() = default;

    /// Builds from id pairs. Duplicates and reversed duplicates collapse.
    static UndirectedGraph from_edges(std::span<const std::pair<VertexId, VertexId>> edges);

    /// Builds from candidate vertices and edges given as positions into
    /// `ids`. Vertices left without any edge are dropped; `latent`, when
    /// non-empty, is parallel to `ids`.
    static UndirectedGraph from_indexed(std::span<const VertexId> ids,
                                        std::vector<IndexEdge> edges,
                                        std::span<const double> latent = {});

    std::size_t vertex_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t self_loop_count() const { return self_loops_; }
    bool empty() const { return ids_.empty(); }

    std::span<const VertexId> ids() const { return ids_; }
    std::span<const IndexEdge> index_edges() const { return edges_; }

    VertexId id_at(std::size_t index) const { return ids_[index]; }
    std::optional<std::size_t> index_of(VertexId id) const;

    /// Distinct neighbours other than the vertex itself.
    std::span<const std::uint32_t> neighbors_at(std::size_t index) const {
        return {adjacency_.data() + offsets_[index], adjacency_.data() + offsets_[index + 1]};
    }
    std::size_t non_self_degree_at(std::size_t index) const {
        return offsets_[index + 1] - offsets_[index];
    }
    bool has_self_loop_at(std::size_t index) const { return loop_flags_[index] != 0; }

    bool has_latent() const { return !latent_.empty(); }
    std::span<const double> latent() const { return latent_; }

    /// Edge list as id pairs (first <= second in index order).
    std::vector<std::pair<VertexId, VertexId>> id_edges() const;

    bool operator==(const UndirectedGraph& other) const;

private:
    std::vector<VertexId> ids_;
    std::vector<IndexEdge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::uint32_t> adjacency_;
    std::vector<std::uint8_t> loop_flags_;
    std::vector<double> latent_;
    std::size_t self_loops_ = 0;
};

/// Number of distinct neighbours of `v` other than `v`.
/// Throws DomainError if `v` is not a vertex.
std::size_t non_self_degree(const UndirectedGraph& graph, VertexId v);

DegreeSummary degree_summary(const UndirectedGraph& graph, bool include_self_loops);

std::size_t count_self_loops(const UndirectedGraph& graph);

/// Subgraph induced by the vertices with keep[index] set; vertices that end
/// up isolated are dropped. Ids and latent coordinates carry over.
UndirectedGraph induced_subgraph(const UndirectedGraph& graph, std::span<const std::uint8_t> keep);

/// Two-part graph; edges only join a left vertex to a right vertex.
class BipartiteGraph {
public:
    using IndexEdge = std::pair<std::uint32_t, std::uint32_t>;

    BipartiteGraph() = default;

    /// `edges` hold (left position, right position) into the candidate id
    /// lists. Duplicates collapse, isolated candidates are dropped.
    static BipartiteGraph from_indexed(std::span<const VertexId> left_ids,
                                       std::span<const VertexId> right_ids,
                                       std::vector<IndexEdge> edges);

    std::size_t left_count() const { return left_ids_.size(); }
    std::size_t right_count() const { return right_ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const VertexId> left_ids() const { return left_ids_; }
    std::span<const VertexId> right_ids() const { return right_ids_; }
    std::span<const IndexEdge> index_edges() const { return edges_; }

    std::size_t left_degree_at(std::size_t index) const { return left_degree_[index]; }
    std::size_t right_degree_at(std::size_t index) const { return right_degree_[index]; }

    /// D_k for the left part: number of left vertices with exactly k edges.
    DegreeSummary left_degree_summary() const;

    bool operator==(const BipartiteGraph&) const = default;

private:
    std::vector<VertexId> left_ids_;
    std::vector<VertexId> right_ids_;
    std::vector<IndexEdge> edges_;
    std::vector<std::uint32_t> left_degree_;
    std::vector<std::uint32_t> right_degree_;
};

}  // namespace graphex

#endif  // GRAPHEX_GRAPH_HPP
