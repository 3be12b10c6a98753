#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "graphineq/graph.hpp"
#include "graphineq/vertex_function.hpp"

namespace graphineq {

/// splitmix64 step; the documented master-seed -> per-sample derivation is
///   seed_i = splitmix64(master ^ splitmix64(i + 1)),
/// so any sample is reproducible in isolation from (master, i).
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits; implementation-independent
/// so reports stay deterministic across standard libraries.
double uniform_unit(std::mt19937_64& rng);
double uniform_in(std::mt19937_64& rng, double lo, double hi);
std::size_t uniform_index(std::mt19937_64& rng, std::size_t n); // [0, n)

/// What the test-function sampler needs to know about an instance: the
/// candidate support (inside the domain of validity), coordinates for the
/// structured families, and optional profile functions whose cutoffs
/// approach the extremal directions of the inequalities.
struct SampleSpace {
    std::vector<VertexId> candidates; // sorted
    std::function<std::vector<std::int64_t>(VertexId)> coords; // for boxes and tents
    std::function<double(VertexId)> u; // supersolution profile (optional)
    std::function<double(VertexId)> g; // eikonal weight (optional)
};

/// Mixture sampler over C_c: uniformly random values on random supports plus
/// structured families (box indicators, discrete tents, u^beta and g^(-1/2)
/// cutoffs). Purely a falsification device: it samples C_c, it does not
/// exhaust it.
class PhiSampler {
public:
    PhiSampler(SampleSpace space, std::uint64_t master_seed);

    VertexFunction operator()(std::size_t index) const;

private:
    SampleSpace space_;
    std::uint64_t master_;
};

/// Connected random graph with up to max_vertices vertices and weights in
/// (0, max_weight]; vertex ids are 0..n-1.
std::shared_ptr<FiniteGraph> random_finite_graph(std::mt19937_64& rng, std::size_t max_vertices,
                                                 double max_weight);

/// Random finitely supported function on a subset of `vertices` with values
/// uniform in [lo, hi].
VertexFunction random_vertex_function(std::mt19937_64& rng, std::span<const VertexId> vertices,
                                      double lo, double hi);

} // namespace graphineq
