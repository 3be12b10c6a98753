#include "graphineq/lattice_green.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <set>

#include "graphineq/errors.hpp"
#include "graphineq/operators.hpp"
#include "graphineq/summation.hpp"

namespace graphineq {

static_assert(std::endian::native == std::endian::little,
              "green table binary format assumes a little-endian host");

LatticeWindow::LatticeWindow(int dim, int radius) : dim_(dim), radius_(radius) {
    if (dim < 1 || dim > 5)
        throw DomainViolation("LatticeWindow: dimension must be in 1..5, got " + std::to_string(dim));
    if (radius < 1) throw DomainViolation("LatticeWindow: radius must be >= 1");
    std::size_t n = 1;
    const auto side = static_cast<std::size_t>(2 * radius + 1);
    for (int i = 0; i < dim; ++i) n *= side;
    values_.assign(n, 0.0);
}

LatticeWindow LatticeWindow::delta(int dim, int radius) {
    LatticeWindow w(dim, radius);
    std::vector<std::int64_t> origin(static_cast<std::size_t>(dim), 0);
    w.at(origin) = 1.0;
    return w;
}

std::size_t LatticeWindow::index_of(std::span<const std::int64_t> coords) const {
    if (static_cast<int>(coords.size()) != dim_)
        throw DomainViolation("LatticeWindow: coordinate tuple has wrong dimension");
    std::size_t idx = 0;
    const auto side = static_cast<std::size_t>(2 * radius_ + 1);
    for (int i = 0; i < dim_; ++i) {
        const std::int64_t c = coords[static_cast<std::size_t>(i)];
        if (c < -radius_ || c > radius_)
            throw WindowViolation("LatticeWindow: coordinate " + std::to_string(c) +
                                  " outside the box of radius " + std::to_string(radius_));
        idx = idx * side + static_cast<std::size_t>(c + radius_);
    }
    return idx;
}

bool LatticeWindow::contains(std::span<const std::int64_t> coords) const {
    if (static_cast<int>(coords.size()) != dim_) return false;
    for (std::int64_t c : coords)
        if (c < -radius_ || c > radius_) return false;
    return true;
}

std::vector<std::int64_t> LatticeWindow::coords_of(std::size_t index) const {
    std::vector<std::int64_t> coords(static_cast<std::size_t>(dim_));
    const auto side = static_cast<std::size_t>(2 * radius_ + 1);
    for (int i = dim_ - 1; i >= 0; --i) {
        coords[static_cast<std::size_t>(i)] =
            static_cast<std::int64_t>(index % side) - radius_;
        index /= side;
    }
    return coords;
}

double LatticeWindow::total_mass() const {
    // slab-wise partials, then a pairwise reduction: deterministic and tight
    const auto side = static_cast<std::size_t>(2 * radius_ + 1);
    const std::size_t slab = values_.size() / side;
    std::vector<double> partials(side, 0.0);
    for (std::size_t s = 0; s < side; ++s) {
        double acc = 0.0;
        const double* p = values_.data() + s * slab;
        for (std::size_t i = 0; i < slab; ++i) acc += p[i];
        partials[s] = acc;
    }
    return pairwise_sum(partials);
}

namespace {

/// out = sum over the 2d shifted copies of in (absorbing boundary), then
/// scaled by 1/2d. Axis passes run in a fixed order so results are bitwise
/// deterministic regardless of threading.
void step_kernel(const LatticeWindow& in_w, LatticeWindow& out_w) {
    const int dim = in_w.dim();
    const auto side = static_cast<std::size_t>(in_w.side());
    const std::size_t n = in_w.size();
    const double* in = in_w.values().data();
    double* out = out_w.values().data();

    // axis strides: coordinate 0 is slowest
    std::vector<std::size_t> stride(static_cast<std::size_t>(dim));
    stride[static_cast<std::size_t>(dim - 1)] = 1;
    for (int a = dim - 2; a >= 0; --a)
        stride[static_cast<std::size_t>(a)] = stride[static_cast<std::size_t>(a + 1)] * side;

    // axis 0 assigns, the rest accumulate; all reads come from `in`
    {
        const std::size_t s = stride[0];
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t pos = 0; pos < static_cast<std::ptrdiff_t>(side); ++pos) {
            double* dst = out + static_cast<std::size_t>(pos) * s;
            const double* row = in + static_cast<std::size_t>(pos) * s;
            const bool up = pos + 1 < static_cast<std::ptrdiff_t>(side);
            const bool down = pos > 0;
            if (up && down) {
                for (std::size_t j = 0; j < s; ++j) dst[j] = row[j + s] + row[j - s];
            } else if (up) {
                for (std::size_t j = 0; j < s; ++j) dst[j] = row[j + s];
            } else if (down) {
                for (std::size_t j = 0; j < s; ++j) dst[j] = row[j - s];
            } else {
                for (std::size_t j = 0; j < s; ++j) dst[j] = 0.0;
            }
        }
    }

    for (int a = 1; a < dim; ++a) {
        const std::size_t inner = stride[static_cast<std::size_t>(a)];
        const std::size_t block = inner * side;
        const std::size_t nblocks = n / block;
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t bi = 0; bi < static_cast<std::ptrdiff_t>(nblocks); ++bi) {
            const std::size_t base = static_cast<std::size_t>(bi) * block;
            for (std::size_t pos = 0; pos < side; ++pos) {
                double* dst = out + base + pos * inner;
                const double* row = in + base + pos * inner;
                if (pos + 1 < side)
                    for (std::size_t j = 0; j < inner; ++j) dst[j] += row[j + inner];
                if (pos > 0)
                    for (std::size_t j = 0; j < inner; ++j) dst[j] += row[j - inner];
            }
        }
    }

    const double scale = 1.0 / (2.0 * dim);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) out[i] *= scale;
}

void spot_check_symmetry(const LatticeWindow& w, int step) {
    const int dim = w.dim();
    const std::size_t n = w.size();
    const std::size_t samples = std::min<std::size_t>(n, 257);
    std::vector<std::int64_t> image(static_cast<std::size_t>(dim));
    for (std::size_t j = 0; j < samples; ++j) {
        const std::size_t idx = (j * n) / samples;
        const auto coords = w.coords_of(idx);
        const double v = w.values()[idx];
        auto expect_equal = [&](std::span<const std::int64_t> c) {
            const double v2 = w.at(c);
            if (std::fabs(v - v2) > 1e-12 * (std::fabs(v) + std::fabs(v2)) + 1e-300)
                throw InternalError("lattice symmetry violated at step " + std::to_string(step));
        };
        image.assign(coords.begin(), coords.end());
        image[0] = -image[0];
        expect_equal(image);
        if (dim >= 2) {
            image.assign(coords.begin(), coords.end());
            std::swap(image[0], image[1]);
            expect_equal(image);
        }
    }
}

/// Lower incomplete gamma for half-integer and integer s >= 1/2 via the
/// recurrence gamma(s+1, x) = s gamma(s, x) - x^s e^(-x).
double lower_incomplete_gamma(double s, double x) {
    if (x < 0.0) throw DomainViolation("lower_incomplete_gamma: x must be nonnegative");
    if (s == 0.5) return std::sqrt(M_PI) * std::erf(std::sqrt(x));
    if (s == 1.0) return -std::expm1(-x);
    if (s > 1.0)
        return (s - 1.0) * lower_incomplete_gamma(s - 1.0, x) - std::pow(x, s - 1.0) * std::exp(-x);
    throw DomainViolation("lower_incomplete_gamma: unsupported order " + std::to_string(s));
}

/// integral over t in [lower, infinity) of t^(-d/2 - extra) exp(-c/t) dt,
/// extra in {0, 1, 2}.
double tail_integral(double c, double lower, int dim, int extra = 0) {
    const double s = 0.5 * dim - 1.0 + extra;
    if (c <= 0.0) return std::pow(lower, -s) / s;
    return std::pow(c, -s) * lower_incomplete_gamma(s, c / lower);
}

} // namespace

LatticeWindow transition_step(const LatticeWindow& state, bool check_symmetry) {
    LatticeWindow next(state.dim(), state.radius());
    step_kernel(state, next);
    if (check_symmetry) spot_check_symmetry(next, -1);
    return next;
}

GreenTable::GreenTable(LatticeWindow window, std::vector<double> trunc_rel, GreenTableMetadata meta)
    : window_(std::make_shared<const LatticeWindow>(std::move(window))),
      trunc_rel_(std::make_shared<const std::vector<double>>(std::move(trunc_rel))),
      meta_(std::move(meta)) {
    if (trunc_rel_->size() != window_->size())
        throw InternalError("GreenTable: truncation array size mismatch");
}

std::vector<VertexId> GreenTable::trust_region() const {
    const int margin = meta_.radius / 3;
    const int inner = meta_.radius - margin;
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < window_->size(); ++i) {
        const auto coords = window_->coords_of(i);
        bool interior = true;
        bool origin = true;
        for (std::int64_t c : coords) {
            if (std::llabs(c) > inner) interior = false;
            if (c != 0) origin = false;
        }
        if (!interior || origin) continue;
        if ((*trunc_rel_)[i] >= 0.005) continue;
        out.push_back(lattice_vertex(coords));
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexFunction GreenTable::as_function() const {
    auto window = window_;
    const int dim = meta_.dim;
    return VertexFunction::lazy(
        [window, dim](VertexId x) { return window->at(lattice_coords(x, dim)); },
        [window, dim](VertexId x) { return window->contains(lattice_coords(x, dim)); },
        "green table box");
}

std::shared_ptr<const GreenTable> green_window(int dim, int radius, int n_steps,
                                               const std::string& tail_model) {
    if (dim < 3)
        throw DomainViolation("green_window: the Green function series diverges for d < 3 "
                              "(random walk is recurrent); got d = " + std::to_string(dim));
    if (dim > 5) throw DomainViolation("green_window: dimension must be <= 5");
    if (radius < 8) throw DomainViolation("green_window: radius must be >= 8");
    if (n_steps < 16) throw DomainViolation("green_window: need at least 16 steps");
    if (tail_model != "none" && tail_model != "power" && tail_model != "clt")
        throw DomainViolation("green_window: unknown tail model '" + tail_model + "'");

    // Simulation box: walks should mostly stay inside (3.5 sigma of the
    // per-coordinate displacement), capped so a buffer stays under ~640 MB.
    const int needed =
        static_cast<int>(std::ceil(3.5 * std::sqrt(static_cast<double>(n_steps) / dim))) + 2;
    int cap = radius;
    for (int r = radius;; ++r) {
        double sites = std::pow(2.0 * r + 1.0, dim);
        if (sites > 8e7) break;
        cap = r;
    }
    const int sim_radius = std::max(radius, std::min(needed, cap));

    LatticeWindow cur = LatticeWindow::delta(dim, sim_radius);
    LatticeWindow nxt(dim, sim_radius);

    LatticeWindow g_out(dim, radius);
    const std::size_t out_n = g_out.size();

    // output-site -> simulation-index map, and d |k|^2 / 2 per output site
    std::vector<std::size_t> sim_index(out_n);
    std::vector<double> half_d_ksq(out_n);
    std::vector<std::int64_t> origin(static_cast<std::size_t>(dim), 0);
    for (std::size_t i = 0; i < out_n; ++i) {
        const auto coords = g_out.coords_of(i);
        sim_index[i] = cur.index_of(coords);
        double ksq = 0.0;
        for (std::int64_t c : coords) ksq += static_cast<double>(c) * static_cast<double>(c);
        half_d_ksq[i] = 0.5 * dim * ksq;
    }

    // p_0 = delta_0
    g_out.at(origin) = 1.0;

    // Tail fit per site over the last half of the steps. The clt model fits
    // z_n := p_n n^(d/2) e^(d|k|^2/2n) ~ a + b xi + c xi^2 in xi = N/n (a
    // quadratic in the well-conditioned variable xi in [1,2]), extrapolated
    // to n -> infinity; the power model fits the bare amplitude.
    const int fit_start = n_steps / 2;
    const int quartile_start = (3 * n_steps) / 4;
    std::vector<double> fit_s0(out_n, 0.0), fit_s1(out_n, 0.0), fit_s2(out_n, 0.0),
        fit_ss(out_n, 0.0);
    std::vector<std::int32_t> fit_cnt(out_n, 0);
    // xi-moments of the fit window split by step parity (each site only sees
    // steps matching the parity of |k|_1)
    double mom[2][5] = {{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}};
    std::vector<std::int8_t> site_parity(out_n);
    for (std::size_t i = 0; i < out_n; ++i) {
        const auto coords = g_out.coords_of(i);
        std::int64_t l1 = 0;
        for (auto ci : coords) l1 += std::llabs(ci);
        site_parity[i] = static_cast<std::int8_t>(l1 & 1);
    }
    std::vector<double> origin_log_n, origin_log_p;

    double mass_prev = 1.0;
    double mass_final = 1.0;
    const std::size_t origin_out = g_out.index_of(origin);

    for (int n = 1; n <= n_steps; ++n) {
        step_kernel(cur, nxt);
        std::swap(cur, nxt);

        const double mass = cur.total_mass();
        if (mass > mass_prev * (1.0 + 1e-12))
            throw InternalError("green_window: mass increased at step " + std::to_string(n));
        mass_prev = mass;
        mass_final = mass;

        spot_check_symmetry(cur, n);

        const double* sim = cur.values().data();
        double* g = g_out.values().data();
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(out_n); ++i)
            g[i] += sim[sim_index[static_cast<std::size_t>(i)]];

        if (n >= fit_start) {
            const double n_pow = std::pow(static_cast<double>(n), 0.5 * dim);
            const double xi = static_cast<double>(n_steps) / n;
            const bool clt = tail_model == "clt";
            const int parity = n & 1;
            double xi_pow = 1.0;
            for (double& m : mom[parity]) {
                m += xi_pow;
                xi_pow *= xi;
            }
#pragma omp parallel for schedule(static)
            for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(out_n); ++ii) {
                const auto i = static_cast<std::size_t>(ii);
                const double p = sim[sim_index[i]];
                if (p <= 0.0) continue;
                double z = p * n_pow;
                if (clt) z *= std::exp(half_d_ksq[i] / n);
                fit_s0[i] += z;
                fit_s1[i] += z * xi;
                fit_s2[i] += z * xi * xi;
                fit_ss[i] += z * z;
                ++fit_cnt[i];
            }
        }
        if (n >= quartile_start) {
            const double p0 = sim[sim_index[origin_out]];
            if (p0 > 0.0) {
                origin_log_n.push_back(std::log(static_cast<double>(n)));
                origin_log_p.push_back(std::log(p0));
            }
        }
    }

    GreenTableMetadata meta;
    meta.dim = dim;
    meta.radius = radius;
    meta.sim_radius = sim_radius;
    meta.steps = n_steps;
    meta.tail_model = tail_model;
    meta.mass_leaked = 1.0 - mass_final;
    meta.leakage_warning = meta.mass_leaked > 0.01;

    // log-log fit of p_n(0) over the quartile (diagnostic; ~ -d/2)
    if (origin_log_n.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const auto cnt = static_cast<double>(origin_log_n.size());
        for (std::size_t i = 0; i < origin_log_n.size(); ++i) {
            sx += origin_log_n[i];
            sy += origin_log_p[i];
            sxx += origin_log_n[i] * origin_log_n[i];
            sxy += origin_log_n[i] * origin_log_p[i];
        }
        meta.tail_exponent_at_origin = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    }

    // tail correction and per-site truncation estimate; the fit runs once per
    // lattice-symmetry orbit and is shared across it, which keeps the
    // corrected table exactly symmetric
    std::vector<double> trunc(out_n, 1.0);
    std::vector<std::size_t> canonical(out_n);
    {
        std::vector<std::int64_t> rep(static_cast<std::size_t>(dim));
        for (std::size_t i = 0; i < out_n; ++i) {
            const auto coords = g_out.coords_of(i);
            for (std::size_t j = 0; j < rep.size(); ++j) rep[j] = std::llabs(coords[j]);
            std::sort(rep.begin(), rep.end());
            canonical[i] = g_out.index_of(rep);
        }
    }
    const bool clt = tail_model == "clt";
    const double n_dbl = static_cast<double>(n_steps);
    std::vector<double> orbit_tail(out_n, -1.0), orbit_res(out_n, 0.0);
    double* g = g_out.values().data();
    for (std::size_t idx = 0; idx < out_n; ++idx) {
        const std::size_t i = canonical[idx];
        if (idx != i || orbit_tail[i] >= 0.0) continue;
        if (fit_cnt[i] < 6) continue; // unreached or barely-fit site: untrusted
        const double* m = mom[site_parity[i]];
        const double c = clt ? half_d_ksq[i] : 0.0;
        const double s0 = fit_s0[i], s1 = fit_s1[i], s2 = fit_s2[i];

        // the tail sums every other step: sites whose parity matches N first
        // contribute at N+2, so their half-integral starts at the midpoint
        // N+1; opposite-parity sites start at N
        const double lower = n_dbl + ((site_parity[i] == (n_steps & 1)) ? 1.0 : 0.0);

        double a, b2, c2, tail;
        // 3x3 normal equations for z ~ a + b xi + c xi^2 (Cramer)
        const double det = m[0] * (m[2] * m[4] - m[3] * m[3]) - m[1] * (m[1] * m[4] - m[2] * m[3]) +
                           m[2] * (m[1] * m[3] - m[2] * m[2]);
        if (clt && std::fabs(det) > 1e-9 * m[0] * m[2] * m[4]) {
            a = (s0 * (m[2] * m[4] - m[3] * m[3]) - m[1] * (s1 * m[4] - s2 * m[3]) +
                 m[2] * (s1 * m[3] - s2 * m[2])) /
                det;
            b2 = (m[0] * (s1 * m[4] - s2 * m[3]) - s0 * (m[1] * m[4] - m[2] * m[3]) +
                  m[2] * (m[1] * s2 - m[2] * s1)) /
                 det;
            c2 = (m[0] * (m[2] * s2 - m[3] * s1) - m[1] * (m[1] * s2 - m[2] * s1) +
                  s0 * (m[1] * m[3] - m[2] * m[2])) /
                 det;
            // xi = N/n, so the xi and xi^2 terms carry N and N^2 into the
            // 1/n and 1/n^2 tail integrals
            tail = 0.5 * (a * tail_integral(c, lower, dim) +
                          b2 * n_dbl * tail_integral(c, lower, dim, 1) +
                          c2 * n_dbl * n_dbl * tail_integral(c, lower, dim, 2));
        } else {
            a = s0 / m[0];
            b2 = c2 = 0.0;
            tail = 0.5 * a * tail_integral(c, lower, dim);
        }
        if (!(a > 0.0) || !(tail >= 0.0)) continue; // incoherent fit: untrusted

        // rms misfit of the local model, relative to the extrapolated level
        const double ss_res = fit_ss[i] - a * s0 - b2 * s1 - c2 * s2;
        orbit_tail[i] = tail;
        orbit_res[i] = std::sqrt(std::max(ss_res, 0.0) / m[0]) / a;
    }
    for (std::size_t i = 0; i < out_n; ++i) {
        const double tail = orbit_tail[canonical[i]];
        if (tail < 0.0) continue;
        const double rel_res = orbit_res[canonical[i]];
        if (tail_model == "none") {
            // estimate-only: report what the raw sum is missing
            if (g[i] > 0.0) trunc[i] = tail / g[i];
            continue;
        }
        g[i] += tail;
        if (g[i] > 0.0) trunc[i] = tail / g[i] * std::max(4.0 * rel_res, 1e-4);
    }

    // full symmetry audit via group generators
    {
        const auto& w = g_out;
        std::vector<std::int64_t> image(static_cast<std::size_t>(dim));
        for (std::size_t i = 0; i < out_n; ++i) {
            const auto coords = w.coords_of(i);
            const double v = w.values()[i];
            auto check = [&](std::span<const std::int64_t> c) {
                const double v2 = w.values()[w.index_of(c)];
                if (std::fabs(v - v2) > 1e-12 * (std::fabs(v) + std::fabs(v2)) + 1e-300)
                    throw InternalError("green_window: final table breaks lattice symmetry");
            };
            for (int a = 0; a < dim; ++a) {
                image.assign(coords.begin(), coords.end());
                image[static_cast<std::size_t>(a)] = -image[static_cast<std::size_t>(a)];
                check(image);
            }
            for (int a = 0; a + 1 < dim; ++a) {
                image.assign(coords.begin(), coords.end());
                std::swap(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(a + 1)]);
                check(image);
            }
        }
    }

    auto table = std::make_shared<GreenTable>(std::move(g_out), std::move(trunc), meta);
    // positivity on the trust region is part of the table's contract
    for (VertexId v : table->trust_region()) {
        const auto coords = lattice_coords(v, dim);
        if (!(table->value(coords) > 0.0))
            throw InternalError("green_window: nonpositive G inside the trust region");
    }
    return table;
}

GreenHardy green_hardy_weight(std::shared_ptr<const GreenTable> table) {
    if (!table) throw DomainViolation("green_hardy_weight: null table");
    const int dim = table->metadata().dim;
    const auto op = SchrodingerOperator::laplacian(std::make_shared<LatticeGraph>(dim));
    const VertexFunction u = table->as_function();

    std::vector<VertexId> region = table->trust_region();
    std::set<VertexId> keep(region.begin(), region.end());

    // probe each site once; nonpositive or otherwise invalid sites shrink
    // the region
    HardyWeight probe = HardyWeight::supersolution(op, u, 0.5);
    std::size_t flagged = 0;
    for (VertexId v : region) {
        try {
            (void)probe(v);
        } catch (const DomainViolation&) {
            keep.erase(v);
            ++flagged;
        }
    }

    auto member = std::make_shared<const std::set<VertexId>>(std::move(keep));
    GreenHardy result;
    result.weight = HardyWeight::supersolution(op, u, 0.5, false, [member](VertexId x) {
        return member->count(x) > 0;
    });
    result.trust_region.assign(member->begin(), member->end());
    result.flagged_sites = flagged;
    return result;
}

void write_green_table_bin(const GreenTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    char header[32] = {};
    std::memcpy(header, "GRN1", 4);
    const std::int64_t d = table.metadata().dim;
    const std::int64_t r = table.metadata().radius;
    const std::int64_t n = table.metadata().steps;
    std::memcpy(header + 8, &d, 8);
    std::memcpy(header + 16, &r, 8);
    std::memcpy(header + 24, &n, 8);
    out.write(header, sizeof(header));
    const auto values = table.window().values();
    out.write(reinterpret_cast<const char*>(values.data()),
              static_cast<std::streamsize>(values.size() * sizeof(double)));
    if (!out) throw ConfigError("write to '" + path + "' failed");
}

GreenBinContents read_green_table_bin(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open '" + path + "' for reading");
    char header[32] = {};
    in.read(header, sizeof(header));
    if (!in || std::memcmp(header, "GRN1", 4) != 0)
        throw ConfigError("'" + path + "' is not a green table (bad magic)");
    std::int64_t d = 0, r = 0, n = 0;
    std::memcpy(&d, header + 8, 8);
    std::memcpy(&r, header + 16, 8);
    std::memcpy(&n, header + 24, 8);
    if (d < 1 || d > 5 || r < 1 || r > 4096)
        throw ConfigError("'" + path + "' has an implausible header");
    GreenBinContents contents{LatticeWindow(static_cast<int>(d), static_cast<int>(r)), n};
    auto values = contents.window.values();
    in.read(reinterpret_cast<char*>(values.data()),
            static_cast<std::streamsize>(values.size() * sizeof(double)));
    if (!in) throw ConfigError("'" + path + "' is truncated");
    return contents;
}

void write_green_table_csv(const LatticeWindow& window, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    for (int i = 0; i < window.dim(); ++i) out << 'k' << (i + 1) << ',';
    out << "G\n";
    char buf[64];
    for (std::size_t i = 0; i < window.size(); ++i) {
        const auto coords = window.coords_of(i);
        for (std::int64_t c : coords) out << c << ',';
        const int len = std::snprintf(buf, sizeof(buf), "%.17g", window.values()[i]);
        out.write(buf, len);
        out << '\n';
    }
    if (!out) throw ConfigError("write to '" + path + "' failed");
}

} // namespace graphineq
