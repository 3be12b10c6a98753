#include "graphineq/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "graphineq/errors.hpp"
#include "graphineq/summation.hpp"

namespace graphineq {

double WeightedGraph::weight(VertexId x, VertexId y) const {
    for (const Neighbor& n : neighbors(x))
        if (n.vertex == y) return n.weight;
    return 0.0;
}

double WeightedGraph::weighted_degree(VertexId x) const {
    SumAccumulator acc;
    for (const Neighbor& n : neighbors(x)) acc.add(n.weight);
    return acc.value();
}

std::vector<Neighbor> LineGraph::neighbors(VertexId x) const {
    if (x < 0) throw DomainViolation("LineGraph: vertex " + vertex_to_string(x) + " not in N_0");
    std::vector<Neighbor> out;
    if (x > 0) out.push_back({x - 1, 1.0});
    out.push_back({x + 1, 1.0});
    return out;
}

LatticeGraph::LatticeGraph(int dim) : dim_(dim) {
    if (dim < 1 || dim > 5)
        throw DomainViolation("LatticeGraph: dimension must be in 1..5, got " + std::to_string(dim));
}

std::vector<Neighbor> LatticeGraph::neighbors(VertexId x) const {
    auto coords = lattice_coords(x, dim_);
    std::vector<Neighbor> out;
    out.reserve(static_cast<std::size_t>(2 * dim_));
    for (int i = 0; i < dim_; ++i) {
        for (int step : {-1, +1}) {
            auto c = coords;
            c[static_cast<std::size_t>(i)] += step;
            out.push_back({lattice_vertex(c), 1.0});
        }
    }
    return out;
}

QuadrantGraph::QuadrantGraph(int dim) : dim_(dim) {
    if (dim < 1 || dim > 5)
        throw DomainViolation("QuadrantGraph: dimension must be in 1..5, got " + std::to_string(dim));
}

std::vector<Neighbor> QuadrantGraph::neighbors(VertexId x) const {
    auto coords = lattice_coords(x, dim_);
    for (auto c : coords)
        if (c < 0)
            throw DomainViolation("QuadrantGraph: vertex " + vertex_to_string(x) + " not in N_0^d");
    std::vector<Neighbor> out;
    for (int i = 0; i < dim_; ++i) {
        for (int step : {-1, +1}) {
            auto c = coords;
            c[static_cast<std::size_t>(i)] += step;
            if (c[static_cast<std::size_t>(i)] < 0) continue;
            out.push_back({lattice_vertex(c), 1.0});
        }
    }
    return out;
}

void FiniteGraph::add_edge(VertexId x, VertexId y, double weight) {
    if (x == y) throw DomainViolation("FiniteGraph: self-loop at " + vertex_to_string(x));
    if (!(weight > 0.0))
        throw DomainViolation("FiniteGraph: nonpositive weight on edge " + vertex_to_string(x) +
                              " ~ " + vertex_to_string(y));
    auto it = adjacency_[x].find(y);
    if (it != adjacency_[x].end() && it->second != weight)
        throw DomainViolation("FiniteGraph: conflicting weights for edge " + vertex_to_string(x) +
                              " ~ " + vertex_to_string(y));
    adjacency_[x][y] = weight;
    adjacency_[y][x] = weight;
}

std::vector<Neighbor> FiniteGraph::neighbors(VertexId x) const {
    std::vector<Neighbor> out;
    auto it = adjacency_.find(x);
    if (it == adjacency_.end()) return out;
    out.reserve(it->second.size());
    for (const auto& [y, w] : it->second) out.push_back({y, w});
    return out;
}

std::vector<VertexId> FiniteGraph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(adjacency_.size());
    for (const auto& [x, _] : adjacency_) out.push_back(x);
    return out;
}

InducedSubgraph::InducedSubgraph(GraphPtr parent, std::function<bool(VertexId)> member)
    : parent_(std::move(parent)), member_(std::move(member)) {
    if (!parent_) throw DomainViolation("InducedSubgraph: null parent");
    if (!member_) throw DomainViolation("InducedSubgraph: null membership predicate");
}

std::vector<Neighbor> InducedSubgraph::neighbors(VertexId x) const {
    if (!member_(x))
        throw DomainViolation("InducedSubgraph: vertex " + vertex_to_string(x) + " outside the subset");
    std::vector<Neighbor> out;
    for (const Neighbor& n : parent_->neighbors(x))
        if (member_(n.vertex)) out.push_back(n);
    return out;
}

Measure Measure::constant(double c) {
    if (!(c > 0.0)) throw DomainViolation("Measure: constant must be positive");
    if (c == 1.0) return Measure();
    return Measure([c](VertexId) { return c; });
}

double Measure::operator()(VertexId x) const {
    if (!fn_) return 1.0;
    double m = fn_(x);
    if (!(m > 0.0))
        throw DomainViolation("Measure: m(" + vertex_to_string(x) + ") = " + std::to_string(m) +
                              " is not positive");
    return m;
}

Potential Potential::constant(double c) {
    if (c == 0.0) return Potential();
    return Potential([c](VertexId) { return c; });
}

std::shared_ptr<FiniteGraph> load_edge_list(const std::string& text) {
    auto graph = std::make_shared<FiniteGraph>();
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::set<std::pair<VertexId, VertexId>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long x, y;
        double w;
        if (!(ls >> x)) continue; // blank line
        if (!(ls >> y >> w)) {
            throw ConfigError("edge list line " + std::to_string(lineno) +
                              ": expected `x y weight`");
        }
        std::string trailing;
        if (ls >> trailing)
            throw ConfigError("edge list line " + std::to_string(lineno) + ": trailing tokens");
        VertexId vx = x, vy = y;
        if (seen.count({vx, vy})) {
            // duplicate orientation: weights must agree bit-exactly
            if (graph->weight(vx, vy) != w)
                throw ConfigError("edge list line " + std::to_string(lineno) +
                                  ": weight disagrees with the reverse orientation");
            continue;
        }
        if (seen.count({vy, vx})) {
            if (graph->weight(vy, vx) != w)
                throw ConfigError("edge list line " + std::to_string(lineno) +
                                  ": weight disagrees with the reverse orientation");
            seen.insert({vx, vy});
            continue;
        }
        graph->add_edge(vx, vy, w);
        seen.insert({vx, vy});
    }
    return graph;
}

GraphPtr make_graph(const std::string& name) {
    if (name == "line") return std::make_shared<LineGraph>();
    auto colon = name.find(':');
    if (colon != std::string::npos) {
        std::string family = name.substr(0, colon);
        int dim = 0;
        try {
            dim = std::stoi(name.substr(colon + 1));
        } catch (const std::exception&) {
            throw ConfigError("make_graph: bad dimension in '" + name + "'");
        }
        if (family == "lattice") return std::make_shared<LatticeGraph>(dim);
        if (family == "quadrant") return std::make_shared<QuadrantGraph>(dim);
    }
    throw ConfigError("make_graph: unknown generator '" + name +
                      "' (expected line, lattice:<d>, quadrant:<d>)");
}

std::vector<VertexId> bfs_ball(const WeightedGraph& graph, VertexId root, int radius,
                               const std::function<bool(VertexId)>& member) {
    if (member && !member(root))
        throw DomainViolation("bfs_ball: root " + vertex_to_string(root) + " outside the subset");
    std::set<VertexId> visited{root};
    std::deque<std::pair<VertexId, int>> queue{{root, 0}};
    while (!queue.empty()) {
        auto [x, dist] = queue.front();
        queue.pop_front();
        if (dist == radius) continue;
        for (const Neighbor& n : graph.neighbors(x)) {
            if (member && !member(n.vertex)) continue;
            if (visited.insert(n.vertex).second) queue.emplace_back(n.vertex, dist + 1);
        }
    }
    return {visited.begin(), visited.end()};
}

std::size_t audit_symmetry(const WeightedGraph& graph, std::span<const VertexId> window) {
    std::size_t audited = 0;
    for (VertexId x : window) {
        for (const Neighbor& n : graph.neighbors(x)) {
            double back = graph.weight(n.vertex, x);
            if (back != n.weight)
                throw DomainViolation("symmetry audit: b(" + vertex_to_string(x) + "," +
                                      vertex_to_string(n.vertex) + ") = " + std::to_string(n.weight) +
                                      " but reverse is " + std::to_string(back));
            ++audited;
        }
    }
    return audited;
}

} // namespace graphineq
