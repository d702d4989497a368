#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "smt/measures.hpp"
#include "testutil.hpp"

using namespace smt;
using namespace smt::test;

TEST_CASE("integrate_linear: zero function and point mass at a zero of phi") {
    const GridSpec g(1.0, 0.1, 0.025);
    const GridFunction zero(g.r(), 0.0);
    CHECK(integrate_linear(Marginal::gaussian(0.0, 0.1), g, zero) == 0.0);

    const GridFunction x2 = sample_nodes(g, [](double x) { return x * x; });
    CHECK(integrate_linear(Marginal::point(0.0), g, x2) == 0.0);
}

TEST_CASE("integrate_linear: gaussian pairing matches the trapezoid oracle") {
    const GridSpec g(1.0, 0.1, 0.025);
    const Marginal mu = Marginal::gaussian(0.0, 0.2);
    const GridFunction x2 = sample_nodes(g, [](double x) { return x * x; });

    // independent oracle: 200000-interval trapezoid of Lin[x^2] * density
    const double oracle = trapezoid(
        [&](double x) { return lin_interp(g, x2, x) * gaussian_pdf(x, 0.0, 0.2); }, -1.2, 1.2,
        200000);

    const double closed = integrate_linear(mu, g, x2);
    CHECK(closed == doctest::Approx(oracle).epsilon(1e-8));
    // frozen oracle value: E[X^2] = 0.04 plus the dx^2/6 interpolation excess
    // of the chords over x^2, minus the clipped Gaussian tails
    CHECK(closed == doctest::Approx(0.041666048).epsilon(1e-6));
}

TEST_CASE("integrate_linear: gaussian closed form vs quadrature on random functions") {
    Rng rng(2024);
    const GridSpec g(1.0, 0.1, 0.025);
    for (int rep = 0; rep < 10; ++rep) {
        const Marginal mu = Marginal::gaussian(uniform(rng, -0.3, 0.3), uniform(rng, 0.05, 0.5));
        const GridFunction phi = random_grid_function(rng, g.r());
        const double oracle = trapezoid(
            [&](double x) {
                return lin_interp(g, phi, x) *
                       gaussian_pdf(x, mu.gaussian_law().mean, mu.gaussian_law().stddev);
            },
            -1.0, 1.0, 400000);
        CHECK(integrate_linear(mu, g, phi) == doctest::Approx(oracle).epsilon(1e-8));
    }
}

TEST_CASE("integrate_linear properties: linearity, consistency, positivity") {
    Rng rng(7);
    const GridSpec g(1.0, 0.1, 0.025);
    for (int rep = 0; rep < 20; ++rep) {
        const Marginal mu = (rep % 2 == 0) ? Marginal::gaussian(uniform(rng, -0.2, 0.2),
                                                                uniform(rng, 0.05, 0.4))
                                           : random_atom_marginal(rng, g);
        const GridFunction phi = random_grid_function(rng, g.r());
        const GridFunction psi = random_grid_function(rng, g.r());
        const double a = uniform(rng, -2.0, 2.0);
        const double b = uniform(rng, -2.0, 2.0);

        GridFunction combo(g.r());
        for (int i = -g.r(); i <= g.r(); ++i) combo[i] = a * phi[i] + b * psi[i];
        CHECK(integrate_linear(mu, g, combo) ==
              doctest::Approx(a * integrate_linear(mu, g, phi) + b * integrate_linear(mu, g, psi))
                  .epsilon(1e-12));

        // consistency with the hat weights is the same dot product
        CHECK(integrate_linear(mu, g, phi) == dot(hat_weights(mu, g).weights, phi));

        GridFunction nonneg = phi;
        for (int i = -g.r(); i <= g.r(); ++i) nonneg[i] = std::abs(nonneg[i]);
        CHECK(integrate_linear(mu, g, nonneg) >= 0.0);
    }
}

TEST_CASE("hat_weights: atoms at and between nodes") {
    const GridSpec g(1.0, 0.1, 0.025);
    const double x3 = g.x(3);

    const GridFunction at_node = hat_weights(Marginal::point(x3), g).weights;
    for (int i = -g.r(); i <= g.r(); ++i) CHECK(at_node[i] == (i == 3 ? 1.0 : 0.0));

    const GridFunction midway = hat_weights(Marginal::point(x3 + g.dx() / 2.0), g).weights;
    for (int i = -g.r(); i <= g.r(); ++i) {
        if (i == 3 || i == 4)
            CHECK(midway[i] == doctest::Approx(0.5).epsilon(1e-12));
        else
            CHECK(midway[i] == 0.0);
    }

    // boundary node and dropped mass
    const GridFunction at_R = hat_weights(Marginal::point(g.R()), g).weights;
    CHECK(at_R[g.r()] == 1.0);
    const GridFunction outside =
        hat_weights(Marginal::atoms({{1.5, 0.5}, {0.0, 0.5}}), g).weights;
    double total = 0.0;
    for (int i = -g.r(); i <= g.r(); ++i) total += outside[i];
    CHECK(total == doctest::Approx(0.5).epsilon(1e-15));  // the 1.5 atom is outside [-R, R]
}

TEST_CASE("hat_weights: gaussian symmetry, normalization, per-cell oracle") {
    const GridSpec g(1.0, 0.1, 0.025);
    const GridFunction w = hat_weights(Marginal::gaussian(0.0, 0.1), g).weights;
    double sum = 0.0;
    for (int i = -g.r(); i <= g.r(); ++i) {
        CHECK(w[i] == doctest::Approx(w[-i]).epsilon(1e-13));
        CHECK(w[i] >= 0.0);
        sum += w[i];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));

    // fine quadrature of each hat against the density
    for (int i : {-10, -3, 0, 5, 10}) {
        const double lo = std::max(g.x(i) - g.dx(), -g.R());
        const double hi = std::min(g.x(i) + g.dx(), g.R());
        const double oracle = trapezoid(
            [&](double x) {
                const double hat = std::max(0.0, 1.0 - std::abs(x - g.x(i)) / g.dx());
                return hat * gaussian_pdf(x, 0.0, 0.1);
            },
            lo, hi, 200000);
        CHECK(w[i] == doctest::Approx(oracle).epsilon(1e-9));
    }
}

TEST_CASE("marginal validation") {
    CHECK_THROWS_AS(Marginal::gaussian(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Marginal::gaussian(0.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(Marginal::atoms({{0.0, 0.7}, {1.0, 0.2}}), std::invalid_argument);  // sum 0.9
    CHECK_THROWS_AS(Marginal::atoms({{0.0, -0.5}, {1.0, 1.5}}), std::invalid_argument);
    CHECK_THROWS_AS(Marginal::atoms({}), std::invalid_argument);
}

TEST_CASE("tail_integral") {
    // atoms fully inside [-c, c] contribute nothing
    CHECK(Marginal::atoms({{0.2, 0.5}, {-0.3, 0.5}}).tail_integral(0.5) == 0.0);
    // atom outside: weight * (1 + |position|)
    CHECK(Marginal::atoms({{2.0, 0.25}, {0.0, 0.75}}).tail_integral(1.0) ==
          doctest::Approx(0.25 * 3.0));

    const Marginal mu = Marginal::gaussian(0.3, 0.4);
    const double c = 0.5;
    const double oracle = trapezoid(
                              [&](double x) { return (1.0 + std::abs(x)) * gaussian_pdf(x, 0.3, 0.4); },
                              c, 8.0, 400000) +
                          trapezoid(
                              [&](double x) { return (1.0 + std::abs(x)) * gaussian_pdf(x, 0.3, 0.4); },
                              -8.0, -c, 400000);
    CHECK(mu.tail_integral(c) == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("atom csv loading") {
    const std::string path = "test_atoms.csv";
    {
        std::ofstream out(path);
        out << "position,weight\n0.0,0.5\n0.5,0.25\n-0.5,0.25\n";
    }
    std::string warning;
    const Marginal m = Marginal::from_csv(path, &warning);
    CHECK(warning.empty());
    CHECK(m.atom_list().size() == 3);
    CHECK(m.atom_list()[0].weight == 0.5);

    {
        std::ofstream out(path);
        out << "0.0,1.0\n1.0,1.0\n";  // headerless, sums to 2 -> normalize + warn
    }
    const Marginal m2 = Marginal::from_csv(path, &warning);
    CHECK_FALSE(warning.empty());
    CHECK(m2.atom_list()[0].weight == doctest::Approx(0.5));

    std::remove(path.c_str());
    CHECK_THROWS(Marginal::from_csv("does_not_exist.csv"));
}
