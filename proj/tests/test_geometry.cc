#include <udg/constructors.hh>
#include <udg/embed.hh>
#include <udg/errors.hh>
#include <udg/graph_io.hh>
#include <udg/graph_oracles.hh>
#include <udg/representation.hh>
#include <udg/simplex.hh>
#include <udg/sphere.hh>
#include <udg/svg.hh>

#include <support/oracles.hh>

#include <Eigen/Dense>
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

using namespace udg;

namespace
{
    // Point equidistant from all given points in R^k, from the linear system
    // 2 (p_i - p_0) . x = |p_i|^2 - |p_0|^2.
    auto numerical_circumcentre(const std::vector<Point> & points) -> Point
    {
        int k = static_cast<int>(points[0].size());
        Eigen::MatrixXd a(points.size() - 1, k);
        Eigen::VectorXd b(points.size() - 1);
        for (std::size_t i = 1 ; i < points.size() ; ++i) {
            double rhs = 0.0;
            for (int j = 0 ; j < k ; ++j) {
                a(i - 1, j) = 2.0 * (points[i][j] - points[0][j]);
                rhs += points[i][j] * points[i][j] - points[0][j] * points[0][j];
            }
            b[i - 1] = rhs;
        }
        Eigen::VectorXd x = a.colPivHouseholderQr().solve(b);
        return Point(x.data(), x.data() + k);
    }

    auto on_sphere(const Point & p, const Sphere & s) -> double
    {
        return std::abs(distance(p, s.centre) - s.radius);
    }

    auto random_embedding(const Graph & g, int k, std::mt19937_64 & rng) -> Embedding
    {
        std::uniform_real_distribution<double> u(-1.5, 1.5);
        Embedding e(k);
        for (auto & label : g.labels()) {
            Point p(k);
            for (auto & x : p)
                x = u(rng);
            e.set(label, p);
        }
        return e;
    }
}

TEST_CASE("sphere intersection closed form")
{
    auto result = sphere_intersection({ { 0, 0, 0 }, 1.0 }, { { 1, 0, 0 }, 1.0 });
    auto * reduced = std::get_if<ReducedSphere>(&result);
    REQUIRE(reduced);
    CHECK(reduced->dimension == 2);
    CHECK(reduced->offset == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(reduced->radius == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
    CHECK(describe(result) == "sphere dim 2, a=0.5, radius=0.866025");

    // Sampled points satisfy both sphere equations.
    std::mt19937_64 rng(1);
    std::normal_distribution<double> n;
    for (int i = 0 ; i < 20 ; ++i) {
        auto p = point_on(*reduced, { n(rng), n(rng) });
        CHECK(on_sphere(p, { { 0, 0, 0 }, 1.0 }) < 1e-12);
        CHECK(on_sphere(p, { { 1, 0, 0 }, 1.0 }) < 1e-12);
    }

    auto tangent = sphere_intersection({ { 0, 0 }, 1.0 }, { { 2, 0 }, 1.0 });
    auto * point = std::get_if<TangentPoint>(&tangent);
    REQUIRE(point);
    CHECK(point->point[0] == doctest::Approx(1.0));
    CHECK(point->point[1] == doctest::Approx(0.0));

    CHECK(std::holds_alternative<Disjoint>(sphere_intersection({ { 0, 0 }, 1.0 }, { { 3, 0 }, 1.0 })));
    CHECK(std::holds_alternative<Coincident>(sphere_intersection({ { 1, 2 }, 1.0 }, { { 1, 2 }, 1.0 })));
    CHECK(std::holds_alternative<Disjoint>(sphere_intersection({ { 1, 2 }, 1.0 }, { { 1, 2 }, 2.0 })));
    // Nested without touching.
    CHECK(std::holds_alternative<Disjoint>(sphere_intersection({ { 0, 0 }, 3.0 }, { { 0.5, 0 }, 1.0 })));
    // Internally tangent.
    auto inner = sphere_intersection({ { 0, 0 }, 3.0 }, { { 2, 0 }, 1.0 });
    REQUIRE(std::holds_alternative<TangentPoint>(inner));
    CHECK(std::get<TangentPoint>(inner).point[0] == doctest::Approx(3.0));

    CHECK_THROWS_AS(sphere_intersection({ { 0, 0 }, 1.0 }, { { 0, 0, 1 }, 1.0 }), std::invalid_argument);
    CHECK_THROWS_AS(sphere_intersection({ { 0 }, 1.0 }, { { 1 }, 1.0 }), std::invalid_argument);
}

TEST_CASE("reduced sphere in a rotated frame")
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-2, 2), radius(0.2, 2.0);
    std::normal_distribution<double> n;
    int reduced_count = 0;
    for (int trial = 0 ; trial < 200 ; ++trial) {
        int k = 2 + trial % 3;
        Sphere a{ Point(k), radius(rng) }, b{ Point(k), radius(rng) };
        for (int i = 0 ; i < k ; ++i) {
            a.centre[i] = u(rng);
            b.centre[i] = u(rng);
        }
        auto result = sphere_intersection(a, b);
        if (auto * s = std::get_if<ReducedSphere>(&result)) {
            ++reduced_count;
            std::vector<double> direction(k - 1);
            for (auto & d : direction)
                d = n(rng);
            auto p = point_on(*s, direction);
            CHECK(on_sphere(p, a) < 1e-9);
            CHECK(on_sphere(p, b) < 1e-9);
            CHECK(surface_gap(a, b) == 0.0);
        }
        else if (std::holds_alternative<Disjoint>(result))
            CHECK(surface_gap(a, b) > 0.0);
    }
    CHECK(reduced_count > 20);
}

TEST_CASE("simplex circumradius")
{
    CHECK(simplex_circumradius(2, 1.0) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(simplex_circumradius(3, 1.0) == doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-15));
    CHECK(simplex_circumradius(1, 1.0) == doctest::Approx(0.5));
    CHECK(simplex_circumradius(2, 1.0) == doctest::Approx(0.577350).epsilon(1e-6));
    CHECK(simplex_circumradius(3, 1.0) == doctest::Approx(0.612372).epsilon(1e-6));

    // Independent route: circumcentre from the equidistance equations.
    for (int k = 1 ; k <= 8 ; ++k) {
        auto simplex = regular_simplex_coords(k, 1.0);
        auto centre = numerical_circumcentre(simplex.points());
        CHECK(distance(centre, simplex.points()[0]) == doctest::Approx(simplex_circumradius(k, 1.0)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(simplex_circumradius(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(simplex_circumradius(2, 0.0), std::invalid_argument);
}

TEST_CASE("regular simplex coordinates")
{
    auto segment = regular_simplex_coords(1, 1.0);
    CHECK(segment.size() == 2);
    CHECK(std::abs(segment.points()[0][0]) == doctest::Approx(0.5));
    CHECK(segment.points()[0][0] + segment.points()[1][0] == doctest::Approx(0.0));

    for (int k = 1 ; k <= 8 ; ++k)
        for (double side : { 1.0, 0.3, 2.5 }) {
            auto s = regular_simplex_coords(k, side);
            CHECK(s.size() == k + 1);
            Point centroid(k, 0.0);
            for (auto & p : s.points())
                for (int i = 0 ; i < k ; ++i)
                    centroid[i] += p[i] / (k + 1);
            for (double c : centroid)
                CHECK(std::abs(c) < 1e-12);
            for (int a = 0 ; a <= k ; ++a)
                for (int b = a + 1 ; b <= k ; ++b)
                    CHECK(std::abs(distance(s.points()[a], s.points()[b]) - side) < 1e-12);
        }
}

TEST_CASE("scaling a simplex scales its sides")
{
    for (int k = 2 ; k <= 6 ; ++k) {
        auto s = regular_simplex_coords(k, 1.0);
        double factor = 1.7;
        std::vector<Point> scaled;
        for (auto p : s.points()) {
            for (auto & x : p)
                x *= factor;
            scaled.push_back(p);
        }
        CHECK(distance(scaled[0], scaled[1]) == doctest::Approx(factor).epsilon(1e-12));
    }
}

TEST_CASE("embedding simple graphs")
{
    auto k2 = embed_unit_distance(complete_graph(2), 1);
    REQUIRE(k2);
    CHECK(std::abs(distance(k2->points()[0], k2->points()[1]) - 1.0) < 1e-9);

    auto moser = moser_spindle().graph;
    auto report = embed_search(moser, 2);
    REQUIRE(report.embedding);
    auto check = verify_representation(moser, *report.embedding);
    CHECK(check.max_edge_residual < 1e-9);
    CHECK(check.is_strict);

    auto w7 = embed_unit_distance(wheel(7), 2);
    REQUIRE(w7);
    CHECK(verify_representation(wheel(7), *w7).is_realization);

    auto single = embed_unit_distance(complete_graph(1), 3);
    REQUIRE(single);
    CHECK(single->size() == 1);

    CHECK_THROWS_AS(embed_unit_distance(empty_graph(2), 2), std::invalid_argument);
    CHECK_THROWS_AS(embed_unit_distance(complete_graph(2), 0), std::invalid_argument);
}

TEST_CASE("embedding is deterministic and thread count does not change the result")
{
    EmbedOptions options;
    options.seed = 42;
    auto g = moser_raiskii(3).graph;
    auto serial = embed_search_serial(g, 3, options);
    options.threads = 3;
    auto parallel = embed_search(g, 3, options);
    REQUIRE(serial.embedding);
    REQUIRE(parallel.embedding);
    CHECK(serial.successful_restart == parallel.successful_restart);
    CHECK(*serial.embedding == *parallel.embedding);
    CHECK(serial.best_residual == parallel.best_residual);

    options.restarts = 40;
    auto failing_serial = embed_search_serial(wheel(5), 2, options);
    auto failing_parallel = embed_search(wheel(5), 2, options);
    CHECK_FALSE(failing_serial.embedding);
    CHECK(failing_serial.restarts_considered == 40);
    CHECK(failing_serial.best_residual == failing_parallel.best_residual);
}

TEST_CASE("components are embedded apart")
{
    auto g = disjoint_union(complete_graph(3), path_graph(2));
    auto e = embed_components(g, 2);
    REQUIRE(e);
    auto report = verify_representation(g, *e);
    CHECK(report.is_realization);
}

TEST_CASE("path graphs are exactly the graphs with a strict line embedding")
{
    EmbedOptions options;
    options.restarts = 2000;
    for (int n = 2 ; n <= 6 ; ++n)
        for (auto & g : testing::graphs_up_to_isomorphism(n)) {
            if (! is_connected(g))
                continue;
            auto e = embed_unit_distance(g, 1, options);
            bool strict = e && verify_representation(g, *e).is_strict;
            CHECK_MESSAGE(strict == is_path(g), udg::to_string(g));
        }

    std::mt19937_64 rng(31);
    std::vector<Graph> larger{ path_graph(7), path_graph(8), cycle_graph(8) };
    while (larger.size() < 15) {
        auto g = testing::random_graph(7 + static_cast<int>(larger.size() % 2), 0.3, rng);
        if (is_connected(g))
            larger.push_back(g);
    }
    // Uniform starts rarely land monotone beyond six vertices; only soundness is checked here.
    for (auto & g : larger) {
        auto e = embed_unit_distance(g, 1, options);
        if (e && verify_representation(g, *e).is_strict)
            CHECK_MESSAGE(is_path(g), udg::to_string(g));
    }
}

TEST_CASE("verify representation")
{
    auto g = path_graph(3);
    Embedding e(2);
    e.set("0", { 0, 0 });
    e.set("1", { 1, 0 });
    e.set("2", { 0, 0 });
    auto report = verify_representation(g, e);
    CHECK(report.max_edge_residual < 1e-12);
    CHECK(report.coincident_nonadjacent_pairs.size() == 1);
    CHECK_FALSE(report.is_realization);
    CHECK_FALSE(report.is_strict);

    e.set("2", { 1, 1 });
    report = verify_representation(g, e);
    CHECK(report.is_realization);
    CHECK(report.unit_nonadjacent_pairs.empty());
    CHECK(report.is_strict);

    // 0 and 2 at distance 1: a realization but not strict.
    e.set("2", { 0.5, std::sqrt(0.75) });
    report = verify_representation(g, e);
    CHECK(report.is_realization);
    CHECK(report.unit_nonadjacent_pairs.size() == 1);
    CHECK_FALSE(report.is_strict);

    // Adjacent pair on one point.
    e.set("1", { 0, 0 });
    e.set("2", { 0, 1 });
    report = verify_representation(g, e);
    CHECK(report.max_edge_residual == doctest::Approx(1.0));
    CHECK_FALSE(report.is_realization);

    Embedding missing(2);
    missing.set("0", { 0, 0 });
    CHECK_THROWS_AS(verify_representation(g, missing), std::invalid_argument);
}

TEST_CASE("estimate dimension")
{
    auto p4 = estimate_dimension(path_graph(4), 3);
    CHECK(p4.lower == 1);
    CHECK(p4.upper == 1);

    auto k1 = estimate_dimension(complete_graph(1), 3);
    CHECK(k1.lower == 0);
    CHECK(k1.upper == 0);

    auto moser = estimate_dimension(moser_spindle().graph, 3);
    CHECK(moser.lower == 2);
    CHECK(moser.upper == 2);

    auto k4 = estimate_dimension(complete_graph(4), 3);
    CHECK(k4.lower == 2);
    CHECK(k4.upper == 3);

    EmbedOptions few;
    few.restarts = 5;
    CHECK_FALSE(estimate_dimension(complete_graph(4), 2, few).upper);
}

TEST_CASE("circle occupancy coloring")
{
    double r = unit_triangle_circumradius();
    auto corner = [&] (int i, double rotation = 0.0) {
        double angle = rotation + 2.0 * M_PI * i / 3.0;
        return Point{ r * std::cos(angle), r * std::sin(angle) };
    };

    auto k3 = complete_graph(3);
    Embedding triangle(2);
    for (int i = 0 ; i < 3 ; ++i)
        triangle.set(std::to_string(i), corner(i));
    auto colors = circle_occupancy_coloring(k3, triangle, { 0, 0 });
    REQUIRE(colors);
    CHECK(*colors == std::vector<int>{ 1, 2, 3 });

    auto c6 = cycle_graph(6);
    Embedding wrapped(2);
    for (int i = 0 ; i < 6 ; ++i)
        wrapped.set(std::to_string(i), corner(i % 3, 0.4));
    colors = circle_occupancy_coloring(c6, wrapped, { 0, 0 });
    REQUIRE(colors);
    for (auto & [a, b] : c6.edges())
        CHECK((*colors)[a] != (*colors)[b]);

    // Two triangles at different rotations occupy six points.
    auto two = disjoint_union(k3, k3);
    Embedding six(2);
    for (int i = 0 ; i < 3 ; ++i) {
        six.set(two.label(i), corner(i));
        six.set(two.label(i + 3), corner(i, 0.5));
    }
    CHECK_FALSE(circle_occupancy_coloring(two, six, { 0, 0 }));

    Embedding off = triangle;
    off.set("0", { 0.0, 0.0 });
    CHECK_THROWS_AS(circle_occupancy_coloring(k3, off, { 0, 0 }), OffCircle);

    auto p2 = path_graph(2);
    Embedding short_edge(2);
    short_edge.set("0", corner(0));
    short_edge.set("1", corner(0, 0.3));
    CHECK_THROWS_AS(circle_occupancy_coloring(p2, short_edge, { 0, 0 }), NonUnitEdge);
}

TEST_CASE("gradient check")
{
    std::mt19937_64 rng(17);
    auto k3 = complete_graph(3);
    CHECK(gradient_check(k3, random_embedding(k3, 2, rng)) < 1e-5);

    for (int trial = 0 ; trial < 30 ; ++trial) {
        auto g = testing::random_graph(2 + trial % 6, 0.6, rng);
        CHECK(gradient_check(g, random_embedding(g, 1 + trial % 3, rng)) < 1e-5);
    }

    auto moser = moser_spindle().graph;
    auto e = embed_unit_distance(moser, 2);
    REQUIRE(e);
    double norm = 0.0;
    for (auto & p : stress_gradient(moser, *e))
        for (double x : p)
            norm += x * x;
    CHECK(std::sqrt(norm) < 1e-8);

    Embedding line(1);
    line.set("0", { 0.0 });
    line.set("1", { 1.0 });
    for (auto & p : stress_gradient(path_graph(2), line))
        CHECK(p[0] == 0.0);
}

TEST_CASE("embedding text round trip")
{
    std::mt19937_64 rng(23);
    auto g = moser_spindle().graph;
    auto e = random_embedding(g, 3, rng);
    auto text = to_string(e);
    std::istringstream in(text);
    auto back = read_embedding(in);
    CHECK(back == e);
    CHECK(to_string(back) == text);

    auto parse = [] (const std::string & text) {
        std::istringstream in(text);
        return read_embedding(in);
    };
    CHECK_THROWS_AS(parse("embedding 2\np a 1\n"), ParseError);
    CHECK_THROWS_AS(parse("embedding 0\n"), ParseError);
    CHECK_THROWS_AS(parse("embedding 1\np a nan\n"), ParseError);
    CHECK_THROWS_AS(parse("embedding 1\np a 1\np a 2\n"), ParseError);
    CHECK_THROWS_AS(parse("p a 1\n"), ParseError);
}

TEST_CASE("svg rendering")
{
    auto g = quotient(wheel(5), { { "hub" }, { "r0", "r2" }, { "r1" }, { "r3" } });
    auto e = embed_unit_distance(g, 2);
    REQUIRE(e);
    auto svg = render_svg(g, *e);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("r=\"0.03\"") != std::string::npos);
    CHECK(svg.find("r0+r2") != std::string::npos);

    // Degenerate clusters are highlighted.
    Embedding collapsed(2);
    collapsed.set("0", { 0, 0 });
    collapsed.set("1", { 1, 0 });
    collapsed.set("2", { 0, 0 });
    auto marked = render_svg(path_graph(3), collapsed);
    CHECK(marked.find("orange") != std::string::npos);

    CHECK_THROWS_AS(render_svg(path_graph(2), regular_simplex_coords(1, 1.0)), std::invalid_argument);
}
