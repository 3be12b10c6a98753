#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "graphineq/hardy.hpp"
#include "graphineq/vertex.hpp"
#include "graphineq/vertex_function.hpp"

namespace graphineq {

/// Dense array over the sup-norm box [-R, R]^d in row-major coordinate order
/// (first coordinate slowest). Coordinates map to lattice_vertex ids.
class LatticeWindow {
public:
    LatticeWindow(int dim, int radius);

    static LatticeWindow delta(int dim, int radius); // point mass at the origin

    int dim() const { return dim_; }
    int radius() const { return radius_; }
    int side() const { return 2 * radius_ + 1; }
    std::size_t size() const { return values_.size(); }

    std::size_t index_of(std::span<const std::int64_t> coords) const; // bounds-checked
    bool contains(std::span<const std::int64_t> coords) const;
    std::vector<std::int64_t> coords_of(std::size_t index) const;

    double at(std::span<const std::int64_t> coords) const { return values_[index_of(coords)]; }
    double& at(std::span<const std::int64_t> coords) { return values_[index_of(coords)]; }

    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }

    double total_mass() const; // deterministic slab-wise pairwise sum

private:
    int dim_;
    int radius_;
    std::vector<double> values_;
};

/// One step of the standard random walk: new(k) = (1/2d) sum over unit
/// vectors e of old(k + e), with absorbing (zero) boundary. When
/// check_symmetry is set, a deterministic sample of sites is verified against
/// the axis-transposition and sign-flip images at 1e-12 relative (valid for
/// symmetric inputs such as anything evolved from delta_0).
LatticeWindow transition_step(const LatticeWindow& state, bool check_symmetry = false);

struct GreenTableMetadata {
    int dim = 0;
    int radius = 0;     // output window radius
    int sim_radius = 0; // internal simulation box radius
    int steps = 0;
    std::string tail_model;    // none | power | clt
    double mass_leaked = 0.0;  // absorbed through the simulation boundary
    bool leakage_warning = false; // > 1%
    double tail_exponent_at_origin = 0.0; // log-log fit of p_n(0) over the quartile
    std::size_t trust_sites = 0;
};

/// G(k) = sum_{n<=N} p_n(k, 0) plus a tail correction extrapolating the
/// local-CLT decay fitted on the last quartile of steps.
class GreenTable {
public:
    GreenTable(LatticeWindow window, std::vector<double> trunc_rel, GreenTableMetadata meta);

    const LatticeWindow& window() const { return *window_; }
    const GreenTableMetadata& metadata() const { return meta_; }

    double value(std::span<const std::int64_t> coords) const { return window_->at(coords); }
    double truncation_error(std::span<const std::int64_t> coords) const {
        return (*trunc_rel_)[window_->index_of(coords)];
    }

    /// Sites at sup-distance >= radius/3 from the window boundary with
    /// estimated relative truncation error < 0.5%, excluding the origin
    /// (where the supersolution weight is not defined). Sorted ids.
    std::vector<VertexId> trust_region() const;

    /// G as a lazy vertex function over the window box. Keeps the underlying
    /// array alive through a shared handle.
    VertexFunction as_function() const;

private:
    std::shared_ptr<const LatticeWindow> window_;
    std::shared_ptr<const std::vector<double>> trunc_rel_;
    GreenTableMetadata meta_;
};

/// Runs the random-walk convolution. Requires dim >= 3 (the series diverges
/// otherwise), radius >= 8, n_steps >= 16. The simulation box is enlarged
/// beyond the output radius so the walk stays mostly inside it (subject to a
/// memory cap); measured leakage above 1% sets the warning flag.
/// tail_model: "clt" (default; per-site two-term fit
/// a(k) n^(-d/2) exp(-d|k|^2/2n) (1 + b(k)/n), the local-CLT decay with its
/// leading drift), "power" (amplitude fit of c(k) n^(-d/2)), or "none".
std::shared_ptr<const GreenTable> green_window(int dim, int radius, int n_steps,
                                               const std::string& tail_model = "clt");

struct GreenHardy {
    HardyWeight weight;                  // supersolution alpha = 1/2 from the table
    std::vector<VertexId> trust_region;  // after shrinking around nonpositive sites
    std::size_t flagged_sites = 0;
};

/// w = Delta(G^(1/2))/G^(1/2) on the table's trust region. Sites where the
/// value fails to be strictly positive are flagged and removed.
GreenHardy green_hardy_weight(std::shared_ptr<const GreenTable> table);

/// Binary table format: 32-byte header (magic "GRN1", 4 zero bytes, then
/// d, R, N as little-endian int64) followed by (2R+1)^d little-endian
/// float64 values in row-major coordinate order.
void write_green_table_bin(const GreenTable& table, const std::string& path);

struct GreenBinContents {
    LatticeWindow window;
    std::int64_t steps = 0;
};
GreenBinContents read_green_table_bin(const std::string& path);

/// CSV rows k1,...,kd,G in row-major order.
void write_green_table_csv(const LatticeWindow& window, const std::string& path);

} // namespace graphineq
