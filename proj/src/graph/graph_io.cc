#include <udg/errors.hh>
#include <udg/graph_io.hh>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace udg;

using std::string;

namespace
{
    auto fail(int line_number, const string & what) -> ParseError
    {
        return ParseError("graph line " + std::to_string(line_number) + ": " + what);
    }
}

auto udg::write_graph(std::ostream & out, const Graph & graph) -> void
{
    out << "graph " << graph.size() << ' ' << graph.edge_count() << '\n';
    for (auto & label : graph.labels())
        out << "v " << label << '\n';
    for (auto & [a, b] : graph.edges())
        out << "e " << graph.label(a) << ' ' << graph.label(b) << '\n';
}

auto udg::write_labeled_graph(std::ostream & out, const LabeledGraph & graph) -> void
{
    write_graph(out, graph.graph);
    for (auto & [role, label] : graph.roles)
        out << "r " << role << ' ' << label << '\n';
}

auto udg::read_labeled_graph(std::istream & in) -> LabeledGraph
{
    LabeledGraph result;
    bool seen_header = false;
    int expected_vertices = 0, expected_edges = 0;
    int line_number = 0;
    string line;

    while (std::getline(in, line)) {
        ++line_number;
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;

        std::istringstream fields(line);
        string kind;
        fields >> kind;

        if (! seen_header) {
            if (kind != "graph" || ! (fields >> expected_vertices >> expected_edges)
                    || expected_vertices < 0 || expected_edges < 0)
                throw fail(line_number, "expected header 'graph <n> <m>'");
            seen_header = true;
        }
        else if (kind == "v") {
            string label;
            if (! (fields >> label))
                throw fail(line_number, "vertex line without label");
            if (result.graph.contains(label))
                throw fail(line_number, "duplicate vertex '" + label + "'");
            result.graph.add_vertex(label);
        }
        else if (kind == "e") {
            string a, b;
            if (! (fields >> a >> b))
                throw fail(line_number, "edge line needs two labels");
            if (! result.graph.contains(a) || ! result.graph.contains(b))
                throw fail(line_number, "edge names an undeclared vertex");
            if (a == b)
                throw fail(line_number, "loop at '" + a + "'");
            if (! result.graph.add_edge(a, b))
                throw fail(line_number, "duplicate edge " + a + " " + b);
        }
        else if (kind == "r") {
            string role, label;
            if (! (fields >> role >> label))
                throw fail(line_number, "role line needs a role and a label");
            try {
                result.add_role(role, label);
            }
            catch (const std::exception & e) {
                throw fail(line_number, e.what());
            }
        }
        else
            throw fail(line_number, "unknown line kind '" + kind + "'");

        string trailing;
        if (fields >> trailing)
            throw fail(line_number, "unexpected trailing field '" + trailing + "'");
    }

    if (! seen_header)
        throw ParseError("graph: missing header");
    if (result.graph.size() != expected_vertices || result.graph.edge_count() != expected_edges)
        throw ParseError("graph: header declares " + std::to_string(expected_vertices) + " vertices and "
                + std::to_string(expected_edges) + " edges, found " + std::to_string(result.graph.size())
                + " and " + std::to_string(result.graph.edge_count()));
    return result;
}

auto udg::read_graph(std::istream & in) -> Graph
{
    return read_labeled_graph(in).graph;
}

auto udg::to_string(const Graph & graph) -> string
{
    std::ostringstream out;
    write_graph(out, graph);
    return out.str();
}

auto udg::to_string(const LabeledGraph & graph) -> string
{
    std::ostringstream out;
    write_labeled_graph(out, graph);
    return out.str();
}

auto udg::read_text_file(const string & path) -> string
{
    if (path == "-")
        return string{ std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>() };

    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw IoError("cannot open '" + path + "' for reading");
    string contents{ std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>() };
    if (in.bad())
        throw IoError("error reading '" + path + "'");
    return contents;
}

auto udg::write_text_file(const string & path, const string & contents) -> void
{
    if (path == "-") {
        std::cout << contents << std::flush;
        return;
    }

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (! out)
        throw IoError("cannot open '" + path + "' for writing");
    out << contents;
    out.close();
    if (! out)
        throw IoError("error writing '" + path + "'");
}

auto udg::load_labeled_graph(const string & path) -> LabeledGraph
{
    std::istringstream in(read_text_file(path));
    return read_labeled_graph(in);
}

auto udg::load_graph(const string & path) -> Graph
{
    return load_labeled_graph(path).graph;
}

auto udg::save_labeled_graph(const string & path, const LabeledGraph & graph) -> void
{
    write_text_file(path, to_string(graph));
}
