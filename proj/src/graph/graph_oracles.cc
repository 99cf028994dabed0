#include <udg/errors.hh>
#include <udg/graph_oracles.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

using namespace udg;

using std::optional;
using std::vector;

namespace
{
    auto check_cap(const Graph & graph, int max_vertices, const char * what) -> void
    {
        if (graph.size() > max_vertices)
            throw CapExceeded(std::string(what) + ": " + std::to_string(graph.size())
                    + " vertices exceeds the cap of " + std::to_string(max_vertices));
    }

    auto degree_order(const Graph & graph) -> vector<int>
    {
        vector<int> order(graph.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                [&] (int a, int b) { return graph.degree(a) > graph.degree(b); });
        return order;
    }

    // Colors vertices in order; a vertex may open at most one new color,
    // which removes color permutation symmetry.
    auto color_from(const Graph & graph, const vector<int> & order, int k, std::size_t position,
            int used, vector<int> & color) -> bool
    {
        if (position == order.size())
            return true;

        int v = order[position];
        int limit = std::min(k, used + 1);
        for (int c = 1 ; c <= limit ; ++c) {
            bool clash = false;
            for (int w : graph.neighbours(v))
                if (color[w] == c) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;

            color[v] = c;
            if (color_from(graph, order, k, position + 1, std::max(used, c), color))
                return true;
            color[v] = 0;
        }
        return false;
    }

    auto extend_clique(const Graph & graph, vector<int> & candidates, int size, int & best) -> void
    {
        if (candidates.empty()) {
            best = std::max(best, size);
            return;
        }
        while (! candidates.empty()) {
            if (size + static_cast<int>(candidates.size()) <= best)
                return;
            int v = candidates.back();
            candidates.pop_back();
            vector<int> next;
            for (int w : candidates)
                if (graph.adjacent(v, w))
                    next.push_back(w);
            extend_clique(graph, next, size + 1, best);
        }
    }

    auto try_map(const Graph & first, const Graph & second, const vector<int> & order, std::size_t position,
            vector<int> & image, vector<bool> & used) -> bool
    {
        if (position == order.size())
            return true;

        int v = order[position];
        for (int t = 0 ; t < second.size() ; ++t) {
            if (used[t] || first.degree(v) != second.degree(t))
                continue;

            bool ok = true;
            for (std::size_t p = 0 ; p < position && ok ; ++p) {
                int w = order[p];
                ok = first.adjacent(v, w) == second.adjacent(t, image[w]);
            }
            if (! ok)
                continue;

            image[v] = t;
            used[t] = true;
            if (try_map(first, second, order, position + 1, image, used))
                return true;
            used[t] = false;
            image[v] = -1;
        }
        return false;
    }
}

auto udg::find_coloring(const Graph & graph, int k) -> optional<vector<int>>
{
    vector<int> color(graph.size(), 0);
    if (graph.size() == 0)
        return color;
    if (k <= 0)
        return std::nullopt;
    if (color_from(graph, degree_order(graph), k, 0, 0, color))
        return color;
    return std::nullopt;
}

auto udg::chromatic_number(const Graph & graph, int max_vertices) -> int
{
    check_cap(graph, max_vertices, "chromatic_number");
    if (graph.size() == 0)
        return 0;

    for (int k = std::max(1, clique_number(graph, max_vertices)) ; ; ++k)
        if (find_coloring(graph, k))
            return k;
}

auto udg::clique_number(const Graph & graph, int max_vertices) -> int
{
    check_cap(graph, max_vertices, "clique_number");
    vector<int> candidates(graph.size());
    std::iota(candidates.begin(), candidates.end(), 0);
    int best = 0;
    extend_clique(graph, candidates, 0, best);
    return best;
}

auto udg::is_path(const Graph & graph) -> bool
{
    int n = graph.size();
    if (n < 2 || graph.edge_count() != n - 1 || ! is_connected(graph))
        return false;

    int ends = 0;
    for (int v = 0 ; v < n ; ++v) {
        if (graph.degree(v) == 1)
            ++ends;
        else if (graph.degree(v) != 2)
            return false;
    }
    return ends == 2;
}

auto udg::laman_count_check(const Graph & graph, int max_vertices) -> bool
{
    check_cap(graph, std::min(max_vertices, 31), "laman_count_check");
    int n = graph.size();
    if (n < 2 || graph.edge_count() != 2 * n - 3)
        return false;

    vector<std::uint32_t> neighbour_mask(n, 0);
    for (auto & [a, b] : graph.edges()) {
        neighbour_mask[a] |= 1u << b;
        neighbour_mask[b] |= 1u << a;
    }

    for (std::uint32_t subset = 1 ; subset < (1u << n) ; ++subset) {
        int size = std::popcount(subset);
        if (size < 2)
            continue;
        int twice_edges = 0;
        for (int v = 0 ; v < n ; ++v)
            if (subset & (1u << v))
                twice_edges += std::popcount(neighbour_mask[v] & subset);
        if (twice_edges / 2 > 2 * size - 3)
            return false;
    }
    return true;
}

auto udg::find_isomorphism(const Graph & first, const Graph & second) -> optional<vector<int>>
{
    if (first.size() != second.size() || first.edge_count() != second.edge_count())
        return std::nullopt;

    auto degrees = [] (const Graph & g) {
        vector<int> d;
        for (int v = 0 ; v < g.size() ; ++v)
            d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(first) != degrees(second))
        return std::nullopt;

    // Connectivity-respecting order so adjacency checks bite early.
    vector<int> order;
    vector<bool> placed(first.size(), false);
    for (int root : degree_order(first)) {
        if (placed[root])
            continue;
        placed[root] = true;
        order.push_back(root);
        for (std::size_t i = order.size() - 1 ; i < order.size() ; ++i)
            for (int w : first.neighbours(order[i]))
                if (! placed[w]) {
                    placed[w] = true;
                    order.push_back(w);
                }
    }

    vector<int> image(first.size(), -1);
    vector<bool> used(second.size(), false);
    if (try_map(first, second, order, 0, image, used))
        return image;
    return std::nullopt;
}
