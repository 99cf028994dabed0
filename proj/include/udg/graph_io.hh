#ifndef UDG_GUARD_UDG_GRAPH_IO_HH
#define UDG_GUARD_UDG_GRAPH_IO_HH 1

#include <udg/graph.hh>

#include <iosfwd>
#include <string>

namespace udg
{
    // Text format:
    //
    //   graph <n> <m>
    //   v <label>          (n lines, vertex order)
    //   e <label> <label>  (m lines, edge order)
    //   r <role> <label>   (optional, labeled graphs only)
    //
    // Blank lines and lines starting with '#' are ignored.

    auto write_graph(std::ostream & out, const Graph & graph) -> void;
    auto write_labeled_graph(std::ostream & out, const LabeledGraph & graph) -> void;

    /// Reads either flavour; a plain graph comes back with no roles.
    auto read_labeled_graph(std::istream & in) -> LabeledGraph;
    auto read_graph(std::istream & in) -> Graph;

    auto to_string(const Graph & graph) -> std::string;
    auto to_string(const LabeledGraph & graph) -> std::string;

    /// File helpers. A path of "-" means standard input / output.
    auto load_labeled_graph(const std::string & path) -> LabeledGraph;
    auto load_graph(const std::string & path) -> Graph;
    auto save_labeled_graph(const std::string & path, const LabeledGraph & graph) -> void;

    /// Opens a file for reading or writing, or throws IoError. Shared by every
    /// text format in the project.
    auto read_text_file(const std::string & path) -> std::string;
    auto write_text_file(const std::string & path, const std::string & contents) -> void;
}

#endif
