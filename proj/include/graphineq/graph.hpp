#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphineq/vertex.hpp"

namespace graphineq {

struct Neighbor {
    VertexId vertex;
    double weight; // b(x,y) > 0
};

/// Symmetric edge-weight oracle over a countable vertex set. Neighbor lists
/// are finite (local finiteness is the representational restriction of this
/// library), weights strictly positive, no self-loops.
///
/// Immutable after construction and safe to share across threads.
class WeightedGraph {
public:
    virtual ~WeightedGraph() = default;

    virtual std::vector<Neighbor> neighbors(VertexId x) const = 0;

    /// Upper bound on the vertex degree, when the family provides one.
    virtual std::optional<double> degree_bound() const { return std::nullopt; }

    /// True when every edge weight is 1 (combinatorial graph).
    virtual bool standard_weights() const { return false; }

    /// b(x,y), 0 if not adjacent. Linear scan of neighbors(x).
    double weight(VertexId x, VertexId y) const;

    /// deg_b(x) = sum_y b(x,y).
    double weighted_degree(VertexId x) const;
};

using GraphPtr = std::shared_ptr<const WeightedGraph>;

/// Line graph on N_0 = {0, 1, 2, ...} with standard weights; k ~ k+1.
/// Vertex labels are the integers themselves.
class LineGraph final : public WeightedGraph {
public:
    std::vector<Neighbor> neighbors(VertexId x) const override;
    std::optional<double> degree_bound() const override { return 2.0; }
    bool standard_weights() const override { return true; }
};

/// Standard graph on Z^d; labels via lattice_vertex.
class LatticeGraph final : public WeightedGraph {
public:
    explicit LatticeGraph(int dim);
    std::vector<Neighbor> neighbors(VertexId x) const override;
    std::optional<double> degree_bound() const override { return 2.0 * dim_; }
    bool standard_weights() const override { return true; }
    int dim() const { return dim_; }

private:
    int dim_;
};

/// Standard subgraph of Z^d induced on the closed quadrant N_0^d.
class QuadrantGraph final : public WeightedGraph {
public:
    explicit QuadrantGraph(int dim);
    std::vector<Neighbor> neighbors(VertexId x) const override;
    std::optional<double> degree_bound() const override { return 2.0 * dim_; }
    bool standard_weights() const override { return true; }
    int dim() const { return dim_; }

private:
    int dim_;
};

/// Explicit finite graph: symmetric adjacency stored both ways.
class FiniteGraph final : public WeightedGraph {
public:
    FiniteGraph() = default;

    /// Inserts the edge in both orientations. Rejects self-loops, nonpositive
    /// weights, and conflicting weights for an already-present edge.
    void add_edge(VertexId x, VertexId y, double weight);

    std::vector<Neighbor> neighbors(VertexId x) const override;

    std::vector<VertexId> vertices() const; // sorted
    std::size_t vertex_count() const { return adjacency_.size(); }

private:
    std::map<VertexId, std::map<VertexId, double>> adjacency_;
};

/// Subgraph of a parent graph induced on {x : member(x)}; edges leaving the
/// set are dropped (they reappear as the Dirichlet potential q^D).
class InducedSubgraph final : public WeightedGraph {
public:
    InducedSubgraph(GraphPtr parent, std::function<bool(VertexId)> member);
    std::vector<Neighbor> neighbors(VertexId x) const override;
    std::optional<double> degree_bound() const override { return parent_->degree_bound(); }
    bool standard_weights() const override { return parent_->standard_weights(); }

    const WeightedGraph& parent() const { return *parent_; }
    bool contains(VertexId x) const { return member_(x); }

private:
    GraphPtr parent_;
    std::function<bool(VertexId)> member_;
};

/// Strictly positive vertex measure m. Defaults to the counting measure.
class Measure {
public:
    Measure() : fn_(nullptr) {}
    static Measure constant(double c);
    explicit Measure(std::function<double(VertexId)> fn) : fn_(std::move(fn)) {}

    /// m(x); throws DomainViolation if the stored function returns <= 0.
    double operator()(VertexId x) const;

    bool is_unit() const { return !fn_; }

private:
    std::function<double(VertexId)> fn_; // null means identically 1
};

/// Real-valued potential q. Defaults to 0.
class Potential {
public:
    Potential() : fn_(nullptr) {}
    static Potential constant(double c);
    explicit Potential(std::function<double(VertexId)> fn) : fn_(std::move(fn)) {}

    double operator()(VertexId x) const { return fn_ ? fn_(x) : 0.0; }
    bool is_zero() const { return !fn_; }

private:
    std::function<double(VertexId)> fn_;
};

/// Parses the `x y weight` edge-list format (one triple per line, `#`
/// comments). Symmetry is completed automatically; if both orientations are
/// present their weights must agree bit-exactly.
std::shared_ptr<FiniteGraph> load_edge_list(const std::string& text);

/// Built-in generators addressable by name: "line", "lattice:<d>",
/// "quadrant:<d>".
GraphPtr make_graph(const std::string& name);

/// BFS ball of the given radius around root; when member is set the search
/// stays inside {x : member(x)}. Returns a sorted vertex list.
std::vector<VertexId> bfs_ball(const WeightedGraph& graph, VertexId root, int radius,
                               const std::function<bool(VertexId)>& member = nullptr);

/// Checks b(x,y) == b(y,x) bit-exactly for every edge discovered from the
/// window vertices. Returns the number of edges audited; throws
/// DomainViolation on the first mismatch.
std::size_t audit_symmetry(const WeightedGraph& graph, std::span<const VertexId> window);

} // namespace graphineq
