#include <udg/graph.hh>

#include <algorithm>
#include <stdexcept>

using namespace udg;

using std::optional;
using std::string;
using std::string_view;
using std::vector;

auto Graph::add_vertex(string label) -> int
{
    if (label.empty() || label.find_first_of(" \t\r\n") != string::npos)
        throw std::invalid_argument("vertex label '" + label + "' is empty or contains whitespace");
    if (_index.contains(label))
        throw std::invalid_argument("duplicate vertex label '" + label + "'");

    int v = size();
    _index.emplace(label, v);
    _labels.push_back(std::move(label));
    _neighbours.emplace_back();
    for (auto & row : _adjacency)
        row.push_back(false);
    _adjacency.emplace_back(_labels.size(), false);
    return v;
}

auto Graph::add_edge(string_view a, string_view b) -> bool
{
    return add_edge(index(a), index(b));
}

auto Graph::add_edge(int a, int b) -> bool
{
    if (a < 0 || b < 0 || a >= size() || b >= size())
        throw std::invalid_argument("edge endpoint out of range");
    if (a == b)
        throw std::invalid_argument("loop at vertex '" + _labels[a] + "'");
    if (_adjacency[a][b])
        return false;

    _adjacency[a][b] = _adjacency[b][a] = true;
    _neighbours[a].push_back(b);
    _neighbours[b].push_back(a);
    _edges.emplace_back(a, b);
    return true;
}

auto Graph::find(string_view label) const -> optional<int>
{
    auto i = _index.find(string{label});
    if (i == _index.end())
        return std::nullopt;
    return i->second;
}

auto Graph::index(string_view label) const -> int
{
    auto v = find(label);
    if (! v)
        throw std::invalid_argument("unknown vertex '" + string{label} + "'");
    return *v;
}

auto Graph::adjacent(string_view a, string_view b) const -> bool
{
    return adjacent(index(a), index(b));
}

auto Graph::operator== (const Graph & other) const -> bool
{
    return _labels == other._labels && _edges == other._edges;
}

auto LabeledGraph::add_role(string role, string label) -> void
{
    if (! graph.contains(label))
        throw std::invalid_argument("role '" + role + "' names unknown vertex '" + label + "'");
    for (auto & [r, l] : roles) {
        if (r == role)
            throw std::invalid_argument("duplicate role '" + role + "'");
        if (l == label)
            throw std::invalid_argument("vertex '" + label + "' already plays role '" + r + "'");
    }
    roles.emplace_back(std::move(role), std::move(label));
}

auto LabeledGraph::find_role(string_view role) const -> optional<string>
{
    for (auto & [r, l] : roles)
        if (r == role)
            return l;
    return std::nullopt;
}

auto LabeledGraph::at(string_view role) const -> const string &
{
    for (auto & [r, l] : roles)
        if (r == role)
            return l;
    throw std::out_of_range("no vertex plays role '" + string{role} + "'");
}

namespace
{
    auto component_ids(const Graph & graph) -> std::pair<vector<int>, int>
    {
        vector<int> component(graph.size(), -1);
        int count = 0;
        for (int start = 0 ; start < graph.size() ; ++start) {
            if (component[start] != -1)
                continue;
            vector<int> stack{ start };
            component[start] = count;
            while (! stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : graph.neighbours(v))
                    if (component[w] == -1) {
                        component[w] = count;
                        stack.push_back(w);
                    }
            }
            ++count;
        }
        return { component, count };
    }
}

auto udg::connected_components(const Graph & graph) -> vector<Graph>
{
    auto [component, count] = component_ids(graph);
    vector<vector<int>> members(count);
    for (int v = 0 ; v < graph.size() ; ++v)
        members[component[v]].push_back(v);

    vector<Graph> result;
    for (auto & m : members)
        result.push_back(induced_subgraph(graph, m));
    return result;
}

auto udg::is_connected(const Graph & graph) -> bool
{
    return component_ids(graph).second <= 1;
}

auto udg::induced_subgraph(const Graph & graph, const vector<int> & vertices) -> Graph
{
    Graph result;
    vector<int> position(graph.size(), -1);
    for (int v : vertices) {
        position[v] = result.add_vertex(graph.label(v));
    }
    for (auto & [a, b] : graph.edges())
        if (position[a] != -1 && position[b] != -1)
            result.add_edge(position[a], position[b]);
    return result;
}
