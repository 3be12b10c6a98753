#pragma once

#include <functional>

#include "graphineq/operators.hpp"

namespace graphineq {

/// Dirichlet restriction of a Schrödinger operator to a subset Y: induced
/// weights b_Y plus the killing potential q^D_Y(x) = sum_{y not in Y} b(x,y).
/// On functions supported in Y the restriction agrees with the parent
/// operator.
class GraphDomain {
public:
    GraphDomain(SchrodingerOperator parent, std::function<bool(VertexId)> member);

    bool contains(VertexId x) const { return member_(x); }
    const SchrodingerOperator& parent() const { return parent_; }
    const std::function<bool(VertexId)>& membership() const { return member_; }

    GraphPtr induced_graph() const { return induced_; }

    /// q^D_Y(x); x must lie in Y.
    double dirichlet_potential(VertexId x) const;

    /// H_Y = (1/m) Delta_{b_Y} + q + q^D_Y as a standalone operator.
    const SchrodingerOperator& restricted_operator() const { return restricted_; }

private:
    SchrodingerOperator parent_;
    std::function<bool(VertexId)> member_;
    GraphPtr induced_;
    SchrodingerOperator restricted_;
};

GraphDomain restrict_to_domain(const SchrodingerOperator& op, std::function<bool(VertexId)> member);

} // namespace graphineq
