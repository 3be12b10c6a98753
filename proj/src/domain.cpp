#include "graphineq/domain.hpp"

#include "graphineq/errors.hpp"
#include "graphineq/summation.hpp"

namespace graphineq {

GraphDomain::GraphDomain(SchrodingerOperator parent, std::function<bool(VertexId)> member)
    : parent_(std::move(parent)), member_(std::move(member)) {
    if (!member_) throw DomainViolation("GraphDomain: null membership predicate");
    induced_ = std::make_shared<InducedSubgraph>(parent_.graph, member_);

    // H_Y = (1/m)(Delta_Y + q^D .) + q: the killing term collects edge
    // weights leaving Y and is measure-normalized like the Laplacian, which
    // is exactly what makes H = H_Y on functions supported in Y
    const SchrodingerOperator base = parent_;
    const auto inside = member_;
    Potential combined([base, inside](VertexId x) {
        SumAccumulator acc;
        for (const Neighbor& n : base.graph->neighbors(x))
            if (!inside(n.vertex)) acc.add(n.weight);
        return base.potential(x) + acc.value() / base.measure(x);
    });
    restricted_ = {induced_, parent_.measure, combined};
}

double GraphDomain::dirichlet_potential(VertexId x) const {
    if (!member_(x))
        throw DomainViolation("dirichlet_potential: vertex " + vertex_to_string(x) +
                              " outside the domain");
    SumAccumulator acc;
    for (const Neighbor& n : parent_.graph->neighbors(x))
        if (!member_(n.vertex)) acc.add(n.weight);
    return acc.value();
}

GraphDomain restrict_to_domain(const SchrodingerOperator& op, std::function<bool(VertexId)> member) {
    return GraphDomain(op, std::move(member));
}

} // namespace graphineq
