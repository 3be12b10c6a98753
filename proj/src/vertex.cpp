#include "graphineq/vertex.hpp"

#include "graphineq/errors.hpp"

namespace graphineq {

namespace {
constexpr int kBitsPerCoord = 24;
constexpr std::int64_t kOffset = std::int64_t(1) << 23;
constexpr std::int64_t kMask = (std::int64_t(1) << kBitsPerCoord) - 1;
} // namespace

std::string vertex_to_string(VertexId v) {
    if (v == kInfinityVertex) return "inf";
    bool negative = v < 0;
    unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string digits;
    do {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    } while (u != 0);
    if (negative) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

VertexId lattice_vertex(std::span<const std::int64_t> coords) {
    if (coords.empty() || coords.size() > 5)
        throw DomainViolation("lattice_vertex: dimension must be in 1..5, got " +
                              std::to_string(coords.size()));
    VertexId id = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        std::int64_t shifted = coords[i] + kOffset;
        if (shifted < 0 || shifted > kMask)
            throw DomainViolation("lattice_vertex: coordinate " + std::to_string(coords[i]) +
                                  " out of the encodable range");
        id |= static_cast<VertexId>(shifted) << (kBitsPerCoord * static_cast<int>(i));
    }
    return id;
}

std::vector<std::int64_t> lattice_coords(VertexId v, int dim) {
    if (dim < 1 || dim > 5)
        throw DomainViolation("lattice_coords: dimension must be in 1..5, got " + std::to_string(dim));
    std::vector<std::int64_t> coords(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        auto field = static_cast<std::int64_t>((v >> (kBitsPerCoord * i)) & kMask);
        coords[static_cast<std::size_t>(i)] = field - kOffset;
    }
    return coords;
}

} // namespace graphineq
