#include "graphineq/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "graphineq/errors.hpp"

namespace graphineq {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
    if (n == 0) throw DomainViolation("uniform_index: empty range");
    return static_cast<std::size_t>(uniform_unit(rng) * static_cast<double>(n)) % n;
}

PhiSampler::PhiSampler(SampleSpace space, std::uint64_t master_seed)
    : space_(std::move(space)), master_(master_seed) {
    if (space_.candidates.empty()) throw DomainViolation("PhiSampler: empty candidate set");
    if (!space_.coords)
        space_.coords = [](VertexId x) {
            return std::vector<std::int64_t>{static_cast<std::int64_t>(x)};
        };
}

VertexFunction PhiSampler::operator()(std::size_t index) const {
    std::mt19937_64 rng(derive_seed(master_, index));
    const auto& cand = space_.candidates;

    const double mix = uniform_unit(rng);
    std::map<VertexId, double> values;

    if (mix < 0.55 || (!space_.u && !space_.g && mix < 0.70)) {
        // random support, uniform values in [-1, 1]
        const std::size_t size = 1 + uniform_index(rng, std::min<std::size_t>(cand.size(), 40));
        for (std::size_t i = 0; i < size; ++i)
            values[cand[uniform_index(rng, cand.size())]] = uniform_in(rng, -1.0, 1.0);
    } else {
        // structured families around a random center
        const VertexId center = cand[uniform_index(rng, cand.size())];
        const auto c0 = space_.coords(center);
        const std::int64_t radius = 1 + static_cast<std::int64_t>(uniform_index(rng, 8));
        auto sup_dist = [&](VertexId x) {
            const auto c = space_.coords(x);
            std::int64_t d = 0;
            for (std::size_t i = 0; i < c.size(); ++i)
                d = std::max<std::int64_t>(d, std::llabs(c[i] - c0[i]));
            return d;
        };
        const double kind = uniform_unit(rng);
        double peak = 0.0;
        for (VertexId x : cand) {
            const std::int64_t d = sup_dist(x);
            if (d > radius) continue;
            double v;
            if (kind < 0.30) {
                v = 1.0; // box indicator
            } else if (kind < 0.55) {
                v = 1.0 - static_cast<double>(d) / static_cast<double>(radius + 1); // tent
            } else if (kind < 0.80 && space_.u) {
                static constexpr double betas[] = {0.25, 0.5, 1.0};
                v = std::pow(space_.u(x), betas[index % 3]);
            } else if (space_.g) {
                v = 1.0 / std::sqrt(space_.g(x));
            } else {
                v = 1.0 - static_cast<double>(d) / static_cast<double>(radius + 1);
            }
            values[x] = v;
            peak = std::max(peak, std::fabs(v));
        }
        if (peak > 0.0)
            for (auto& [x, v] : values) v /= peak;
    }

    if (values.empty()) values[cand[uniform_index(rng, cand.size())]] = 1.0;
    return VertexFunction::from_support(values);
}

std::shared_ptr<FiniteGraph> random_finite_graph(std::mt19937_64& rng, std::size_t max_vertices,
                                                 double max_weight) {
    const std::size_t n = 2 + uniform_index(rng, max_vertices - 1);
    auto graph = std::make_shared<FiniteGraph>();
    // random spanning tree keeps the graph connected
    for (std::size_t v = 1; v < n; ++v) {
        const std::size_t parent = uniform_index(rng, v);
        graph->add_edge(static_cast<VertexId>(v), static_cast<VertexId>(parent),
                        uniform_in(rng, 1e-3, max_weight));
    }
    // sprinkle extra edges
    const std::size_t extras = uniform_index(rng, n + 1);
    for (std::size_t i = 0; i < extras; ++i) {
        const auto a = uniform_index(rng, n);
        const auto b = uniform_index(rng, n);
        if (a == b) continue;
        const VertexId va = static_cast<VertexId>(a), vb = static_cast<VertexId>(b);
        if (graph->weight(va, vb) > 0.0) continue;
        graph->add_edge(va, vb, uniform_in(rng, 1e-3, max_weight));
    }
    return graph;
}

VertexFunction random_vertex_function(std::mt19937_64& rng, std::span<const VertexId> vertices,
                                      double lo, double hi) {
    std::map<VertexId, double> values;
    const std::size_t size = 1 + uniform_index(rng, vertices.size());
    for (std::size_t i = 0; i < size; ++i)
        values[vertices[uniform_index(rng, vertices.size())]] = uniform_in(rng, lo, hi);
    return VertexFunction::from_support(values);
}

} // namespace graphineq
