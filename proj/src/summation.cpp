#include "graphineq/summation.hpp"

namespace graphineq {

namespace {
double reduce(std::span<const double> terms) {
    const std::size_t n = terms.size();
    if (n <= 8) {
        double s = 0.0;
        for (double t : terms) s += t;
        return s;
    }
    const std::size_t half = n / 2;
    return reduce(terms.first(half)) + reduce(terms.subspan(half));
}
} // namespace

double pairwise_sum(std::span<const double> terms) { return reduce(terms); }

} // namespace graphineq
