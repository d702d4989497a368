#include <doctest.h>

#include "smt/model.hpp"
#include "testutil.hpp"

using namespace smt;
using namespace smt::test;

namespace {

const CostFn& cost_a() {
    static const CostFn c = CostFn::diffusion();
    return c;
}

}  // namespace

TEST_CASE("hamiltonian: zero control wins when everything is nonnegative") {
    const ControlSet cs({{0.0, 0.0}, {0.1, 0.0}});
    const auto h = hamiltonian(cs, cost_a(), 0.0, 0.0, 3.7, 0.0);
    CHECK(h.value == 0.0);
    CHECK(h.argmin == 0);
}

TEST_CASE("hamiltonian: negative curvature rewards diffusion") {
    const ControlSet cs({{0.0, 0.0}, {0.1, 0.0}});
    const auto h = hamiltonian(cs, cost_a(), 0.0, 0.0, 0.0, -4.0);
    // objective at a = 0.1: 0.5 * 0.1 * (-4) + 0.1 = -0.1
    CHECK(h.value == doctest::Approx(-0.1).epsilon(1e-15));
    CHECK(h.argmin == 1);
}

TEST_CASE("hamiltonian: exact ties resolve to the lowest index") {
    // b = -a/2 against p = 2 cancels the cost a exactly
    const ControlSet cs({{0.0, 0.0}, {0.05, -0.025}, {0.1, -0.05}});
    const auto h = hamiltonian(cs, cost_a(), 0.0, 0.0, 2.0, 0.0);
    CHECK(h.value == 0.0);
    CHECK(h.argmin == 0);
}

TEST_CASE("hamiltonian properties") {
    Rng rng(11);
    const ControlSet cs = [&] {
        std::vector<Control> cands;
        for (int k = 0; k < 6; ++k)
            cands.push_back({uniform(rng, 0.0, 0.5), uniform(rng, -1.0, 1.0)});
        return ControlSet(std::move(cands));
    }();
    const CostFn cost([](double, double x, double a, double b) { return a + 0.3 * b * b + 0.1 * std::abs(x); });

    for (int rep = 0; rep < 50; ++rep) {
        const double p1 = uniform(rng, -3.0, 3.0), g1 = uniform(rng, -3.0, 3.0);
        const double p2 = uniform(rng, -3.0, 3.0), g2 = uniform(rng, -3.0, 3.0);
        const double th = uniform(rng, 0.0, 1.0);
        const double x = uniform(rng, -1.0, 1.0);

        // concavity in (p, gamma)
        const double mid = hamiltonian(cs, cost, 0.0, x, th * p1 + (1 - th) * p2,
                                       th * g1 + (1 - th) * g2)
                               .value;
        const double ends = th * hamiltonian(cs, cost, 0.0, x, p1, g1).value +
                            (1 - th) * hamiltonian(cs, cost, 0.0, x, p2, g2).value;
        CHECK(mid >= ends - 1e-12);

        // min property: value <= objective at every candidate
        const auto h = hamiltonian(cs, cost, 0.0, x, p1, g1);
        for (const Control& u : cs.candidates())
            CHECK(h.value <= u.b * p1 + 0.5 * u.a * g1 + cost(0.0, x, u.a, u.b));

        // adding a candidate never increases the value
        std::vector<Control> more = cs.candidates();
        more.push_back({uniform(rng, 0.0, 0.5), uniform(rng, -1.0, 1.0)});
        CHECK(hamiltonian(ControlSet(more), cost, 0.0, x, p1, g1).value <= h.value);
    }
}

TEST_CASE("make_interval_set") {
    const ControlSet toy = make_interval_set(0.0, 0.1, 0.0, 0.0, 2, 1);
    REQUIRE(toy.size() == 2);
    CHECK(toy[0].a == 0.0);
    CHECK(toy[0].b == 0.0);
    CHECK(toy[1].a == 0.1);
    CHECK(toy[1].b == 0.0);

    const ControlSet single = make_interval_set(0.04, 0.04, -0.02, -0.02, 1, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].a == 0.04);
    CHECK(single[0].b == -0.02);

    const ControlSet grid9 = make_interval_set(0.0, 0.1, -1.0, 1.0, 3, 3);
    REQUIRE(grid9.size() == 9);
    int corners = 0;
    for (const Control& u : grid9.candidates())
        if ((u.a == 0.0 || u.a == 0.1) && (u.b == -1.0 || u.b == 1.0)) ++corners;
    CHECK(corners == 4);

    CHECK_THROWS_AS(make_interval_set(-0.1, 0.1, 0.0, 0.0, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_interval_set(0.0, 0.1, 0.0, 0.0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_interval_set(0.0, 0.1, 0.0, 0.0, 1, 1), std::invalid_argument);
}

TEST_CASE("make_log_martingale_set") {
    const ControlSet two = make_log_martingale_set(0.0, 0.1, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].a == 0.0);
    CHECK(two[0].b == 0.0);
    CHECK(two[1].a == 0.1);
    CHECK(two[1].b == -0.05);

    const ControlSet one = make_log_martingale_set(0.04, 0.04, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].a == 0.04);
    CHECK(one[0].b == -0.02);

    const ControlSet three = make_log_martingale_set(0.0, 0.1, 3);
    REQUIRE(three.size() == 3);
    CHECK(three[1].a == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(three[1].b == doctest::Approx(-0.025).epsilon(1e-15));

    CHECK_THROWS_AS(make_log_martingale_set(-0.1, 0.1, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_log_martingale_set(0.0, 0.1, 1), std::invalid_argument);
}

TEST_CASE("control set validation and bounds") {
    CHECK_THROWS_AS(ControlSet({}), std::invalid_argument);
    CHECK_THROWS_AS(ControlSet({{-0.1, 0.0}}), std::invalid_argument);
    const ControlSet cs({{0.2, -0.7}, {0.05, 0.3}});
    CHECK(cs.max_a() == 0.2);
    CHECK(cs.max_abs_b() == 0.7);
}
