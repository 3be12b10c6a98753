#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace graphineq {

/// Opaque vertex label. 128 bits wide so that lattice coordinate tuples pack
/// losslessly: dimension d <= 5 with 24 bits per coordinate (offset binary),
/// which covers |c_i| <= 2^20 with headroom.
///
/// Conventions used by the built-in graph families:
///   - line graph on N_0: the label is the integer k itself;
///   - lattice:d and quadrant:d: the label is lattice_vertex(coords, d).
using VertexId = __int128;

/// Reserved label for the auxiliary vertex added by the supergraph
/// construction. Never produced by any encoder.
inline constexpr VertexId kInfinityVertex = ~(VertexId(1) << 126);

std::string vertex_to_string(VertexId v);

/// Packs a coordinate tuple into a VertexId. Coordinate i occupies bits
/// [24*i, 24*(i+1)) as c_i + 2^23. Round-trips exactly for |c_i| < 2^23,
/// in particular for the documented range |c_i| <= 2^20. dim <= 5.
VertexId lattice_vertex(std::span<const std::int64_t> coords);

inline VertexId lattice_vertex(std::initializer_list<std::int64_t> coords) {
    return lattice_vertex(std::span<const std::int64_t>(coords.begin(), coords.size()));
}

/// Inverse of lattice_vertex for a known dimension.
std::vector<std::int64_t> lattice_coords(VertexId v, int dim);

/// Hash functor for VertexId containers.
struct VertexHash {
    std::size_t operator()(VertexId v) const noexcept {
        auto lo = static_cast<std::uint64_t>(v);
        auto hi = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v) >> 64);
        std::uint64_t h = lo ^ (hi * 0x9e3779b97f4a7c15ull);
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
        return static_cast<std::size_t>(h);
    }
};

} // namespace graphineq
