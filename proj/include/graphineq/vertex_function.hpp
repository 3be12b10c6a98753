#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "graphineq/vertex.hpp"

namespace graphineq {

/// Real-valued function on vertices. Two flavors:
///   - finite support: explicit (vertex, value) pairs; evaluation elsewhere
///     returns exactly 0 and support() lists exactly the nonzero entries;
///   - lazy total: an evaluator plus a declared window; evaluating outside
///     the window throws WindowViolation so truncation is never silent.
class VertexFunction {
public:
    VertexFunction() = default; // the zero function (finite support, empty)

    static VertexFunction zero() { return VertexFunction(); }
    static VertexFunction delta(VertexId x, double value = 1.0);
    static VertexFunction from_support(const std::map<VertexId, double>& values);

    /// window_name is used in WindowViolation messages.
    static VertexFunction lazy(std::function<double(VertexId)> fn,
                               std::function<bool(VertexId)> window,
                               std::string window_name = "window");

    double operator()(VertexId x) const;

    bool finite_support() const { return !lazy_; }

    /// Sorted support (finite-support flavor only).
    const std::vector<VertexId>& support() const;
    const std::vector<double>& support_values() const;

    bool in_window(VertexId x) const;

    /// Pointwise product with a scalar (finite-support flavor only).
    VertexFunction scaled(double c) const;

private:
    // finite-support storage: parallel arrays sorted by vertex
    std::vector<VertexId> support_;
    std::vector<double> values_;
    // lazy storage
    std::shared_ptr<const std::function<double(VertexId)>> lazy_;
    std::shared_ptr<const std::function<bool(VertexId)>> window_;
    std::string window_name_;
};

} // namespace graphineq
