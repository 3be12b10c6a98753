#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace graphineq {

/// Pairwise (tree) reduction of a term list. All identity residuals in this
/// project are measured against tolerances of the form tol * scale with
/// scale = sum of |terms|, which only stays meaningful if the summation error
/// grows like log(n) rather than n.
double pairwise_sum(std::span<const double> terms);

/// Accumulates terms and reduces them pairwise on demand.
/// value() is the signed sum, abs_scale() the sum of absolute values.
class SumAccumulator {
public:
    void add(double term) { terms_.push_back(term); }

    double value() const { return pairwise_sum(terms_); }

    double abs_scale() const {
        std::vector<double> mags;
        mags.reserve(terms_.size());
        for (double t : terms_) mags.push_back(std::fabs(t));
        return pairwise_sum(mags);
    }

    std::size_t size() const { return terms_.size(); }

private:
    std::vector<double> terms_;
};

/// residual <= rel * scale, with an absolute floor so that identically-zero
/// instances do not demand residual == 0 exactly.
inline bool within_scale(double residual, double scale, double rel) {
    return std::fabs(residual) <= rel * scale + 1e-300;
}

} // namespace graphineq
