#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "graphineq/errors.hpp"
#include "graphineq/lattice_green.hpp"

using namespace graphineq;

namespace {

double value_at(const LatticeWindow& w, std::initializer_list<std::int64_t> coords) {
    return w.at(std::span<const std::int64_t>(coords.begin(), coords.size()));
}

} // namespace

TEST_CASE("lattice window basics") {
    LatticeWindow w(3, 4);
    CHECK(w.size() == 9 * 9 * 9);
    const std::int64_t c[] = {1, -2, 3};
    CHECK(w.coords_of(w.index_of(c)) == std::vector<std::int64_t>{1, -2, 3});
    const std::int64_t out[] = {5, 0, 0};
    CHECK_THROWS_AS((void)w.index_of(out), WindowViolation);

    const LatticeWindow d = LatticeWindow::delta(3, 4);
    CHECK(d.total_mass() == 1.0);
    CHECK(value_at(d, {0, 0, 0}) == 1.0);
}

TEST_CASE("transition step: single-step mass, two-step return, parity zeros") {
    const LatticeWindow start = LatticeWindow::delta(3, 6);
    const LatticeWindow one = transition_step(start, true);
    CHECK(value_at(one, {1, 0, 0}) == doctest::Approx(1.0 / 6.0));
    CHECK(value_at(one, {0, -1, 0}) == doctest::Approx(1.0 / 6.0));
    CHECK(value_at(one, {0, 0, 0}) == 0.0);
    CHECK(one.total_mass() == doctest::Approx(1.0)); // nothing reaches the boundary yet

    const LatticeWindow two = transition_step(one, true);
    CHECK(value_at(two, {0, 0, 0}) == doctest::Approx(1.0 / 6.0)); // 2d (1/2d)^2

    // parity: after n steps, p_n(k) = 0 exactly unless n and |k|_1 share parity
    LatticeWindow state = start;
    for (int n = 1; n <= 5; ++n) {
        state = transition_step(state);
        for (std::size_t i = 0; i < state.size(); ++i) {
            const auto coords = state.coords_of(i);
            std::int64_t l1 = 0;
            for (auto c : coords) l1 += std::llabs(c);
            if ((l1 % 2) != (n % 2)) CHECK(state.values()[i] == 0.0);
        }
    }

    // mass decreases only once the walk reaches the absorbing boundary
    LatticeWindow tiny = LatticeWindow::delta(3, 2);
    double prev_mass = 1.0;
    for (int n = 1; n <= 6; ++n) {
        tiny = transition_step(tiny);
        const double mass = tiny.total_mass();
        CHECK(mass <= prev_mass + 1e-15);
        prev_mass = mass;
    }
    CHECK(prev_mass < 1.0); // radius 2: leakage must have started
}

TEST_CASE("green_window rejects recurrent dimensions and bad params") {
    CHECK_THROWS_AS((void)green_window(2, 16, 64), DomainViolation);
    CHECK_THROWS_AS((void)green_window(3, 4, 64), DomainViolation);
    CHECK_THROWS_AS((void)green_window(3, 16, 4), DomainViolation);
    CHECK_THROWS_AS((void)green_window(3, 16, 64, "cubic"), DomainViolation);
}

TEST_CASE("d = 3 green table matches the known value at the origin") {
    // G(0) for the simple random walk on Z^3 is 1.5163860591... (Watson)
    const auto table = green_window(3, 12, 256);
    const std::int64_t origin[] = {0, 0, 0};
    CHECK(table->value(origin) == doctest::Approx(1.5163860591).epsilon(0.005));
    CHECK(table->metadata().mass_leaked < 0.01);
    CHECK_FALSE(table->metadata().leakage_warning);
    // the origin decay exponent is close to -d/2
    CHECK(std::fabs(table->metadata().tail_exponent_at_origin + 1.5) < 0.2);

    // monotone decay along the axis, positivity, symmetry at sampled sites
    double prev = table->value(origin);
    for (std::int64_t k = 1; k <= 8; ++k) {
        const std::int64_t c[] = {k, 0, 0};
        const double g = table->value(c);
        CHECK(g > 0.0);
        CHECK(g < prev);
        prev = g;
        const std::int64_t cn[] = {-k, 0, 0};
        const std::int64_t cp[] = {0, k, 0};
        CHECK(table->value(cn) == doctest::Approx(g).epsilon(1e-12));
        CHECK(table->value(cp) == doctest::Approx(g).epsilon(1e-12));
    }

    // trust region: inside the inner box with small estimated truncation
    const auto trust = table->trust_region();
    CHECK(!trust.empty());
    for (VertexId v : trust) {
        const auto coords = lattice_coords(v, 3);
        CHECK(table->truncation_error(coords) < 0.005);
        for (auto c : coords) CHECK(std::llabs(c) <= 12 - 4);
    }
}

TEST_CASE("green hardy weight is positive on the trust region") {
    const auto table = green_window(3, 12, 256);
    const GreenHardy hardy = green_hardy_weight(table);
    CHECK(hardy.flagged_sites == 0);
    CHECK(!hardy.trust_region.empty());
    for (std::size_t i = 0; i < hardy.trust_region.size(); i += 7)
        CHECK(hardy.weight(hardy.trust_region[i]) > 0.0);
}

TEST_CASE("binary table round trip and csv export") {
    const auto table = green_window(3, 8, 64);
    const std::string bin = "/tmp/graphineq_test_table.bin";
    const std::string csv = "/tmp/graphineq_test_table.csv";
    write_green_table_bin(*table, bin);
    const GreenBinContents contents = read_green_table_bin(bin);
    CHECK(contents.steps == 64);
    CHECK(contents.window.dim() == 3);
    CHECK(contents.window.radius() == 8);
    REQUIRE(contents.window.size() == table->window().size());
    for (std::size_t i = 0; i < contents.window.size(); i += 11)
        CHECK(contents.window.values()[i] == table->window().values()[i]);

    write_green_table_csv(contents.window, csv);
    FILE* f = std::fopen(csv.c_str(), "rb");
    REQUIRE(f != nullptr);
    char header[32] = {};
    REQUIRE(std::fgets(header, sizeof(header), f) != nullptr);
    CHECK(std::string(header) == "k1,k2,k3,G\n");
    std::fclose(f);

    CHECK_THROWS_AS((void)read_green_table_bin("/tmp/definitely_missing.bin"), ConfigError);
    std::remove(bin.c_str());
    std::remove(csv.c_str());
}

TEST_CASE("d = 5 window: structure and the g w ~ |k|^-4 trend") {
    // alpha = 2/(d-2) recovers the classical Rellich weight pairing
    const auto table = green_window(5, 10, 100);
    CHECK(table->metadata().dim == 5);
    // G(0) = 1/(1 - return probability) = 1.15631... for the Z^5 walk
    const std::int64_t origin[] = {0, 0, 0, 0, 0};
    CHECK(table->value(origin) == doctest::Approx(1.15631).epsilon(0.01));

    const GreenHardy hardy = green_hardy_weight(table);
    CHECK(!hardy.trust_region.empty());
    // far corners sit in the large-deviation regime where the fitted tail
    // can push the shallow weight nonpositive: those sites are flagged and
    // the region shrinks around them
    CHECK(hardy.flagged_sites < (hardy.trust_region.size() + hardy.flagged_sites) / 100);

    // The asymptotic band -4 +- 0.5 needs radii beyond what (2R+1)^5 memory
    // admits: at desk scale w(k)|k|^2 still sits 1.5-2.7x above its limit
    // across the trusted axis window, which steepens the measured trend.
    // The verifiable desk-scale statements: the g w product falls with a
    // log-log slope near -4 (within +-1), g/w stays flat, and the table
    // itself is accurate (truncation estimates below 1e-3 on the window).
    const auto op = SchrodingerOperator::laplacian(std::make_shared<LatticeGraph>(5));
    const HardyWeight w = supersolution_weight(op, table->as_function(), 0.5);
    const double alpha = 2.0 / (5.0 - 2.0);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double sy_const = 0, sxy_const = 0;
    int n = 0;
    for (std::int64_t k = 2; k <= 5; ++k) {
        std::int64_t c[] = {k, 0, 0, 0, 0};
        REQUIRE(table->truncation_error(c) < 1e-3);
        const VertexId v = lattice_vertex(c);
        const double g = std::pow(table->value(c), alpha);
        const double gw = g * w(v);
        const double x = std::log(static_cast<double>(k));
        sx += x;
        sy += std::log(gw);
        sxx += x * x;
        sxy += x * std::log(gw);
        sy_const += std::log(g / w(v));
        sxy_const += x * std::log(g / w(v));
        ++n;
    }
    REQUIRE(n == 4);
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(slope == doctest::Approx(-4.0).epsilon(0.25)); // +-1 at desk radii
    // ... while g/w stays flat (both sides share the |k|^-2 profile)
    const double const_slope = (n * sxy_const - sx * sy_const) / (n * sxx - sx * sx);
    CHECK(std::fabs(const_slope) < 0.5);
}
