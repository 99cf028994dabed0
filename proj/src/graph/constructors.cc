#include <udg/constructors.hh>

#include <algorithm>
#include <stdexcept>

using namespace udg;

using std::string;
using std::to_string;
using std::vector;

auto udg::empty_graph(int n, const string & prefix) -> Graph
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    Graph result;
    for (int i = 0 ; i < n ; ++i)
        result.add_vertex(prefix + to_string(i));
    return result;
}

auto udg::complete_graph(int n, const string & prefix) -> Graph
{
    Graph result = empty_graph(n, prefix);
    for (int i = 0 ; i < n ; ++i)
        for (int j = i + 1 ; j < n ; ++j)
            result.add_edge(i, j);
    return result;
}

auto udg::path_graph(int n, const string & prefix) -> Graph
{
    Graph result = empty_graph(n, prefix);
    for (int i = 0 ; i + 1 < n ; ++i)
        result.add_edge(i, i + 1);
    return result;
}

auto udg::cycle_graph(int n, const string & prefix) -> Graph
{
    if (n < 3)
        throw std::invalid_argument("a cycle needs at least 3 vertices");
    Graph result = path_graph(n, prefix);
    result.add_edge(n - 1, 0);
    return result;
}

auto udg::append_disjoint(Graph & into, const Graph & from) -> vector<string>
{
    vector<string> renamed;
    renamed.reserve(from.size());
    for (auto & label : from.labels()) {
        string fresh = label;
        while (into.contains(fresh))
            fresh += '\'';
        into.add_vertex(fresh);
        renamed.push_back(fresh);
    }
    for (auto & [a, b] : from.edges())
        into.add_edge(renamed[a], renamed[b]);
    return renamed;
}

auto udg::disjoint_union(const Graph & first, const Graph & second) -> Graph
{
    Graph result = first;
    append_disjoint(result, second);
    return result;
}

auto udg::graph_union(const Graph & first, const Graph & second) -> Graph
{
    Graph result = first;
    for (auto & label : second.labels())
        if (! result.contains(label))
            result.add_vertex(label);
    for (auto & [a, b] : second.edges())
        result.add_edge(second.label(a), second.label(b));
    return result;
}

auto udg::join(const Graph & first, const Graph & second) -> Graph
{
    Graph result = first;
    auto renamed = append_disjoint(result, second);
    for (auto & a : first.labels())
        for (auto & b : renamed)
            result.add_edge(a, b);
    return result;
}

auto udg::wheel(int n) -> Graph
{
    if (n < 4)
        throw std::invalid_argument("wheel needs at least 4 vertices");
    Graph hub;
    hub.add_vertex("hub");
    return join(hub, cycle_graph(n - 1, "r"));
}

auto udg::moser_spindle() -> LabeledGraph
{
    LabeledGraph result;
    auto & g = result.graph;
    for (auto label : { "u", "T", "F", "u'", "u''", "v", "w" })
        g.add_vertex(label);

    // Two rhombi of unit triangles sharing u, tips u' and u'' at unit distance.
    g.add_edge("u", "T");
    g.add_edge("u", "F");
    g.add_edge("T", "F");
    g.add_edge("T", "u'");
    g.add_edge("F", "u'");
    g.add_edge("u", "v");
    g.add_edge("u", "w");
    g.add_edge("v", "w");
    g.add_edge("v", "u''");
    g.add_edge("w", "u''");
    g.add_edge("u'", "u''");

    result.add_role("u", "u");
    result.add_role("T", "T");
    result.add_role("F", "F");
    result.add_role("uP", "u'");
    result.add_role("uPP", "u''");
    result.add_role("v", "v");
    result.add_role("w", "w");
    return result;
}

auto udg::moser_raiskii(int k) -> LabeledGraph
{
    if (k < 2)
        throw std::invalid_argument("Moser-Raiskii spindle needs k >= 2");

    Graph first_pair, second_pair;
    first_pair.add_vertex("v");
    first_pair.add_vertex("w'");
    second_pair.add_vertex("v");
    second_pair.add_vertex("w''");

    Graph first_half = join(complete_graph(k, "a"), first_pair);
    Graph second_half = join(complete_graph(k, "b"), second_pair);

    LabeledGraph result;
    result.graph = graph_union(first_half, second_half);
    result.graph.add_edge("w'", "w''");

    result.add_role("v", "v");
    result.add_role("wP", "w'");
    result.add_role("wPP", "w''");
    for (int i = 0 ; i < k ; ++i)
        result.add_role("core(" + to_string(i + 1) + ")", "a" + to_string(i));
    for (int i = 0 ; i < k ; ++i)
        result.add_role("core(" + to_string(k + i + 1) + ")", "b" + to_string(i));
    return result;
}

namespace
{
    struct Blocks
    {
        vector<vector<int>> members;
        vector<int> block_of;
    };

    auto check_partition(const Graph & graph, const vector<vector<string>> & partition) -> Blocks
    {
        Blocks result;
        result.block_of.assign(graph.size(), -1);
        for (auto & block : partition) {
            if (block.empty())
                throw std::invalid_argument("quotient: empty block");
            vector<int> members;
            for (auto & label : block) {
                int v = graph.index(label);
                if (result.block_of[v] != -1)
                    throw std::invalid_argument("quotient: vertex '" + label + "' appears in two blocks");
                result.block_of[v] = -2;
                members.push_back(v);
            }
            std::sort(members.begin(), members.end());
            for (std::size_t i = 0 ; i < members.size() ; ++i)
                for (std::size_t j = i + 1 ; j < members.size() ; ++j)
                    if (graph.adjacent(members[i], members[j]))
                        throw std::invalid_argument("quotient: block identifies adjacent vertices '"
                                + graph.label(members[i]) + "' and '" + graph.label(members[j]) + "'");
            result.members.push_back(std::move(members));
        }
        for (int v = 0 ; v < graph.size() ; ++v)
            if (result.block_of[v] == -1)
                throw std::invalid_argument("quotient: vertex '" + graph.label(v) + "' is not covered");

        std::sort(result.members.begin(), result.members.end(),
                [] (const vector<int> & a, const vector<int> & b) { return a.front() < b.front(); });
        for (std::size_t b = 0 ; b < result.members.size() ; ++b)
            for (int v : result.members[b])
                result.block_of[v] = static_cast<int>(b);
        return result;
    }

    auto merged_label(const Graph & graph, const vector<int> & members) -> string
    {
        string label;
        for (int v : members) {
            if (! label.empty())
                label += '+';
            label += graph.label(v);
        }
        return label;
    }
}

auto udg::block_label(const Graph & graph, const vector<string> & block) -> string
{
    vector<int> members;
    for (auto & label : block)
        members.push_back(graph.index(label));
    std::sort(members.begin(), members.end());
    return merged_label(graph, members);
}

auto udg::quotient(const Graph & graph, const vector<vector<string>> & partition) -> Graph
{
    auto blocks = check_partition(graph, partition);
    Graph result;
    for (auto & members : blocks.members)
        result.add_vertex(merged_label(graph, members));
    for (auto & [a, b] : graph.edges())
        result.add_edge(blocks.block_of[a], blocks.block_of[b]);
    return result;
}

auto udg::quotient_map(const Graph & graph, const vector<vector<string>> & partition) -> VertexMap
{
    auto blocks = check_partition(graph, partition);
    VertexMap result;
    for (auto & members : blocks.members) {
        auto label = merged_label(graph, members);
        for (int v : members)
            result.emplace(graph.label(v), label);
    }
    return result;
}
