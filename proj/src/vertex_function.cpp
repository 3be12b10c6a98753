#include "graphineq/vertex_function.hpp"

#include <algorithm>

#include "graphineq/errors.hpp"

namespace graphineq {

VertexFunction VertexFunction::delta(VertexId x, double value) {
    VertexFunction f;
    if (value != 0.0) {
        f.support_.push_back(x);
        f.values_.push_back(value);
    }
    return f;
}

VertexFunction VertexFunction::from_support(const std::map<VertexId, double>& values) {
    VertexFunction f;
    f.support_.reserve(values.size());
    f.values_.reserve(values.size());
    for (const auto& [x, v] : values) {
        if (v == 0.0) continue; // support holds exactly the nonzero entries
        f.support_.push_back(x);
        f.values_.push_back(v);
    }
    return f;
}

VertexFunction VertexFunction::lazy(std::function<double(VertexId)> fn,
                                    std::function<bool(VertexId)> window,
                                    std::string window_name) {
    if (!fn) throw DomainViolation("VertexFunction::lazy: null evaluator");
    VertexFunction f;
    f.lazy_ = std::make_shared<const std::function<double(VertexId)>>(std::move(fn));
    if (window) f.window_ = std::make_shared<const std::function<bool(VertexId)>>(std::move(window));
    f.window_name_ = std::move(window_name);
    return f;
}

double VertexFunction::operator()(VertexId x) const {
    if (lazy_) {
        if (window_ && !(*window_)(x))
            throw WindowViolation("evaluation of a lazy vertex function at " + vertex_to_string(x) +
                                  " outside its declared " + window_name_);
        return (*lazy_)(x);
    }
    auto it = std::lower_bound(support_.begin(), support_.end(), x);
    if (it == support_.end() || *it != x) return 0.0;
    return values_[static_cast<std::size_t>(it - support_.begin())];
}

const std::vector<VertexId>& VertexFunction::support() const {
    if (lazy_) throw DomainViolation("support() is only defined for finitely supported functions");
    return support_;
}

const std::vector<double>& VertexFunction::support_values() const {
    if (lazy_) throw DomainViolation("support() is only defined for finitely supported functions");
    return values_;
}

bool VertexFunction::in_window(VertexId x) const {
    if (!lazy_) return true;
    return !window_ || (*window_)(x);
}

VertexFunction VertexFunction::scaled(double c) const {
    if (lazy_) throw DomainViolation("scaled() is only defined for finitely supported functions");
    if (c == 0.0) return zero();
    VertexFunction f;
    f.support_ = support_;
    f.values_.reserve(values_.size());
    for (double v : values_) f.values_.push_back(c * v);
    return f;
}

} // namespace graphineq
