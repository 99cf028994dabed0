#include <udg/constructors.hh>
#include <udg/errors.hh>
#include <udg/graph_io.hh>
#include <udg/graph_oracles.hh>
#include <udg/homomorphism.hh>

#include <support/oracles.hh>

#include <doctest.h>

#include <random>
#include <sstream>

using namespace udg;

TEST_CASE("graph rejects loops, duplicates and unknown endpoints")
{
    Graph g;
    g.add_vertex("a");
    g.add_vertex("b");
    CHECK(g.add_edge("a", "b"));
    CHECK_FALSE(g.add_edge("b", "a"));
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge("a", "a"), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge("a", "zz"), std::invalid_argument);
    CHECK_THROWS_AS(g.add_vertex("a"), std::invalid_argument);
    CHECK_THROWS_AS(g.add_vertex("has space"), std::invalid_argument);
}

TEST_CASE("disjoint union")
{
    auto k1k1 = disjoint_union(complete_graph(1), complete_graph(1));
    CHECK(k1k1.size() == 2);
    CHECK(k1k1.edge_count() == 0);

    auto k3k3 = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK(k3k3.size() == 6);
    CHECK(k3k3.edge_count() == 6);
    CHECK(connected_components(k3k3).size() == 2);

    // C4 has 4 edges and P2 has 1.
    auto c4p2 = disjoint_union(cycle_graph(4), path_graph(2));
    CHECK(c4p2.size() == 6);
    CHECK(c4p2.edge_count() == 5);
}

TEST_CASE("join")
{
    auto w5 = join(complete_graph(1, "h"), cycle_graph(4));
    CHECK(w5.size() == 5);
    CHECK(w5.edge_count() == 8);
    CHECK(find_isomorphism(w5, wheel(5)));

    auto k2 = join(complete_graph(1), complete_graph(1));
    CHECK(find_isomorphism(k2, complete_graph(2)));

    auto j = join(complete_graph(3), empty_graph(2, "e"));
    CHECK(j.size() == 5);
    CHECK(j.edge_count() == 9);
}

TEST_CASE("join edge count property")
{
    std::mt19937_64 rng(7);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        auto a = testing::random_graph(static_cast<int>(rng() % 6), 0.5, rng);
        auto b = testing::random_graph(static_cast<int>(rng() % 6), 0.5, rng);
        auto j = join(a, b);
        CHECK(j.size() == a.size() + b.size());
        CHECK(j.edge_count() == a.edge_count() + b.edge_count() + a.size() * b.size());
    }
}

TEST_CASE("wheel")
{
    auto w5 = wheel(5);
    CHECK(w5.size() == 5);
    CHECK(w5.edge_count() == 8);

    auto w7 = wheel(7);
    CHECK(w7.degree(w7.index("hub")) == 6);
    for (int v = 0 ; v < w7.size() ; ++v)
        if (w7.label(v) != "hub")
            CHECK(w7.degree(v) == 3);

    CHECK(find_isomorphism(wheel(4), complete_graph(4)));
    CHECK_THROWS_AS(wheel(3), std::invalid_argument);
}

TEST_CASE("moser spindle")
{
    auto m = moser_spindle();
    CHECK(m.graph.size() == 7);
    CHECK(m.graph.edge_count() == 11);
    CHECK(m.graph.adjacent(m.at("uP"), m.at("uPP")));
    CHECK(testing::brute_clique_number(m.graph) == 3);
    CHECK(testing::brute_chromatic_number(m.graph) == 4);
    CHECK(clique_number(m.graph) == 3);
    CHECK(chromatic_number(m.graph) == 4);
}

TEST_CASE("moser-raiskii spindle")
{
    auto m2 = moser_raiskii(2);
    CHECK(find_isomorphism(m2.graph, moser_spindle().graph));

    // 2k + 3 vertices; two K_k's, 2k join edges on each side, one bridge.
    auto m3 = moser_raiskii(3);
    CHECK(m3.graph.size() == 9);
    CHECK(m3.graph.edge_count() == 19);

    auto m6 = moser_raiskii(6);
    CHECK(m6.graph.size() == 15);
    CHECK(m6.graph.edge_count() == 2 * (15 + 12) + 1);
    CHECK(m6.graph.adjacent(m6.at("wP"), m6.at("wPP")));
    CHECK_FALSE(m6.graph.adjacent(m6.at("v"), m6.at("wP")));
    for (int i = 1 ; i <= 12 ; ++i) {
        auto core = m6.at("core(" + std::to_string(i) + ")");
        CHECK(m6.graph.adjacent(core, m6.at("v")));
        CHECK(m6.graph.adjacent(core, m6.at(i <= 6 ? "wP" : "wPP")));
        CHECK_FALSE(m6.graph.adjacent(core, m6.at(i <= 6 ? "wPP" : "wP")));
    }
    CHECK(clique_number(m6.graph) == 7);
    CHECK_THROWS_AS(moser_raiskii(1), std::invalid_argument);
}

TEST_CASE("quotient")
{
    auto c4 = cycle_graph(4);
    auto identity = quotient(c4, { { "0" }, { "1" }, { "2" }, { "3" } });
    CHECK(find_isomorphism(identity, c4));
    CHECK(identity.labels() == c4.labels());

    auto k2 = quotient(c4, { { "0", "2" }, { "1", "3" } });
    CHECK(k2.size() == 2);
    CHECK(k2.edge_count() == 1);

    auto w5 = wheel(5);
    auto rhombus = quotient(w5, { { "hub" }, { "r0", "r2" }, { "r1" }, { "r3" } });
    CHECK(rhombus.size() == 4);
    CHECK(rhombus.edge_count() == 5);
    CHECK(rhombus.contains("r0+r2"));

    CHECK_THROWS_AS(quotient(c4, { { "0", "1" }, { "2" }, { "3" } }), std::invalid_argument);
    CHECK_THROWS_AS(quotient(c4, { { "0" }, { "1" }, { "2" } }), std::invalid_argument);
    CHECK_THROWS_AS(quotient(c4, { { "0", "2" }, { "2" }, { "1" }, { "3" } }), std::invalid_argument);
}

TEST_CASE("quotient projection is a homomorphism")
{
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int trial = 0 ; trial < 200 ; ++trial) {
        auto g = testing::random_graph(2 + static_cast<int>(rng() % 6), 0.4, rng);
        // Random greedy partition into independent blocks.
        std::vector<std::vector<std::string>> partition;
        for (int v = 0 ; v < g.size() ; ++v) {
            bool placed = false;
            for (auto & block : partition) {
                if (rng() % 2)
                    continue;
                bool independent = true;
                for (auto & w : block)
                    independent = independent && ! g.adjacent(g.label(v), w);
                if (independent) {
                    block.push_back(g.label(v));
                    placed = true;
                    break;
                }
            }
            if (! placed)
                partition.push_back({ g.label(v) });
        }
        auto q = quotient(g, partition);
        CHECK(verify_homomorphism(g, q, quotient_map(g, partition)));
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("chromatic number")
{
    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(cycle_graph(6)) == 2);
    CHECK(chromatic_number(empty_graph(3)) == 1);
    CHECK(chromatic_number(Graph{}) == 0);
    CHECK_THROWS_AS(chromatic_number(empty_graph(17)), CapExceeded);
}

TEST_CASE("chromatic number agrees with exhaustive coloring")
{
    std::mt19937_64 rng(3);
    for (int trial = 0 ; trial < 150 ; ++trial) {
        auto g = testing::random_graph(1 + static_cast<int>(rng() % 8), 0.2 + 0.6 * (trial % 5) / 4.0, rng);
        CHECK(chromatic_number(g) == testing::brute_chromatic_number(g));
    }
}

TEST_CASE("is_path")
{
    CHECK(is_path(path_graph(5)));
    CHECK(is_path(path_graph(2)));
    CHECK_FALSE(is_path(cycle_graph(4)));
    CHECK_FALSE(is_path(complete_graph(1)));
    CHECK_FALSE(is_path(Graph{}));
    CHECK_FALSE(is_path(disjoint_union(path_graph(2), path_graph(3))));
    CHECK_FALSE(is_path(wheel(4)));
}

TEST_CASE("laman count check")
{
    CHECK(laman_count_check(moser_spindle().graph));
    CHECK_FALSE(laman_count_check(complete_graph(4)));
    CHECK_FALSE(laman_count_check(path_graph(3)));
    CHECK(laman_count_check(complete_graph(3)));
    // 2|V| - 3 edges overall but K4 inside is overbraced.
    auto lopsided = disjoint_union(complete_graph(4), path_graph(2));
    lopsided.add_edge("0", "0'");
    lopsided.add_edge("1", "0'");
    CHECK(lopsided.edge_count() == 2 * 6 - 3);
    CHECK_FALSE(laman_count_check(lopsided));
    CHECK_THROWS_AS(laman_count_check(empty_graph(13)), CapExceeded);
}

TEST_CASE("isomorphism search")
{
    auto a = cycle_graph(6);
    auto b = disjoint_union(cycle_graph(3), cycle_graph(3));
    CHECK_FALSE(find_isomorphism(a, b));
    auto relabelled = quotient(a, { { "3" }, { "1" }, { "5" }, { "0" }, { "2" }, { "4" } });
    CHECK(find_isomorphism(a, relabelled));
}

TEST_CASE("graph text round trip")
{
    std::mt19937_64 rng(5);
    for (int trial = 0 ; trial < 20 ; ++trial) {
        auto g = testing::random_graph(static_cast<int>(rng() % 9), 0.5, rng);
        auto text = to_string(g);
        std::istringstream in(text);
        auto back = read_graph(in);
        CHECK(back == g);
        CHECK(to_string(back) == text);
    }

    auto m = moser_raiskii(3);
    std::istringstream in(to_string(m));
    CHECK(read_labeled_graph(in) == m);
}

TEST_CASE("graph text errors")
{
    auto parse = [] (const std::string & text) {
        std::istringstream in(text);
        return read_labeled_graph(in);
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("graph 1 0\nv a\nv b\n"), ParseError);
    CHECK_THROWS_AS(parse("graph 2 1\nv a\nv b\ne a c\n"), ParseError);
    CHECK_THROWS_AS(parse("graph 1 1\nv a\ne a a\n"), ParseError);
    CHECK_THROWS_AS(parse("graph 2 2\nv a\nv b\ne a b\ne b a\n"), ParseError);
    CHECK_THROWS_AS(parse("graph 1 0\nv a\nr x b\n"), ParseError);
    CHECK_THROWS_AS(parse("graph 1 0\nq a\n"), ParseError);
    CHECK(parse("# comment\ngraph 2 1\n\nv a\nv b\ne a b\nr end a\n").at("end") == "a");
}
