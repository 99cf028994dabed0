#include <udg/cli.hh>
#include <udg/cnf.hh>
#include <udg/constructors.hh>
#include <udg/embed.hh>
#include <udg/errors.hh>
#include <udg/gadgets.hh>
#include <udg/graph_io.hh>
#include <udg/graph_oracles.hh>
#include <udg/homomorphism.hh>
#include <udg/representation.hh>
#include <udg/sphere.hh>
#include <udg/svg.hh>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace udg;

using std::string;
using std::vector;

namespace
{
    struct Streams
    {
        std::istream & in;
        std::ostream & out;
        std::ostream & err;
    };

    auto check_readable(const string & path) -> void
    {
        if (path == "-")
            return;
        std::error_code ec;
        if (! std::filesystem::is_regular_file(path, ec))
            throw IoError("cannot read '" + path + "': no such file");
    }

    auto check_writable(const string & path) -> void
    {
        if (path == "-")
            return;
        auto parent = std::filesystem::path(path).parent_path();
        std::error_code ec;
        if (! parent.empty() && ! std::filesystem::is_directory(parent, ec))
            throw IoError("cannot write '" + path + "': directory '" + parent.string() + "' does not exist");
    }

    auto slurp(Streams & io, const string & path) -> string
    {
        if (path == "-")
            return string{ std::istreambuf_iterator<char>(io.in), std::istreambuf_iterator<char>() };
        return read_text_file(path);
    }

    auto emit(Streams & io, const string & path, const string & contents) -> void
    {
        if (path == "-")
            io.out << contents << std::flush;
        else
            write_text_file(path, contents);
    }

    auto read_labeled(Streams & io, const string & path) -> LabeledGraph
    {
        std::istringstream in(slurp(io, path));
        return read_labeled_graph(in);
    }

    auto read_plain(Streams & io, const string & path) -> Graph
    {
        return read_labeled(io, path).graph;
    }

    auto read_emb(Streams & io, const string & path) -> Embedding
    {
        std::istringstream in(slurp(io, path));
        return read_embedding(in);
    }

    auto default_seed() -> std::uint64_t
    {
        if (const char * env = std::getenv("UDG_FORGE_SEED")) {
            try {
                return std::stoull(env);
            }
            catch (const std::exception &) {
                throw std::invalid_argument(string("UDG_FORGE_SEED is not an unsigned integer: '") + env + "'");
            }
        }
        return 1;
    }

    auto parse_gadget(const string & spec) -> LabeledGraph
    {
        auto colon = spec.find(':');
        string name = spec.substr(0, colon);
        auto parameter = [&] {
            if (colon == string::npos)
                throw std::invalid_argument("gadget '" + name + "' needs a parameter, e.g. " + name + ":3");
            std::size_t used = 0;
            int value = std::stoi(spec.substr(colon + 1), &used);
            if (used != spec.size() - colon - 1)
                throw std::invalid_argument("bad gadget parameter in '" + spec + "'");
            return value;
        };

        if (name == "moser" && colon == string::npos)
            return moser_spindle();
        if (name == "moser-raiskii")
            return moser_raiskii(parameter());
        if (name == "wheel")
            return LabeledGraph{ wheel(parameter()), {} };
        throw std::invalid_argument("unknown gadget '" + spec + "' (expected moser, moser-raiskii:k or wheel:n)");
    }

    struct EmbedFlags
    {
        std::optional<std::uint64_t> seed;
        int restarts = EmbedOptions{}.restarts;
        int max_iterations = EmbedOptions{}.max_iterations;
        double tolerance = EmbedOptions{}.tolerance;
        double separation = EmbedOptions{}.separation;
        int threads = 1;

        auto add_to(CLI::App * command) -> void
        {
            command->add_option("--seed", seed, "Random seed (default: $UDG_FORGE_SEED or 1)");
            command->add_option("--restarts", restarts, "Number of random restarts")->check(CLI::PositiveNumber);
            command->add_option("--max-iters", max_iterations, "Iterations per restart")->check(CLI::NonNegativeNumber);
            command->add_option("--tol", tolerance, "Edge length tolerance")->check(CLI::PositiveNumber);
            command->add_option("--separation", separation, "Minimum distance between non-adjacent vertices")
                ->check(CLI::NonNegativeNumber);
            command->add_option("--threads", threads, "Threads for parallel restarts")->check(CLI::PositiveNumber);
        }

        [[nodiscard]] auto options() const -> EmbedOptions
        {
            EmbedOptions o;
            o.seed = seed ? *seed : default_seed();
            o.restarts = restarts;
            o.max_iterations = max_iterations;
            o.tolerance = tolerance;
            o.separation = separation;
            o.threads = threads;
            return o;
        }
    };
}

auto udg::run(const vector<string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
{
    Streams io{ in, out, err };

    CLI::App app{ "udg-forge: unit-distance graph gadgets, homomorphisms and embeddings" };
    app.require_subcommand(1, 1);

    // reduce-sat
    string cnf_path, output_path = "-";
    auto reduce_sat = app.add_subcommand("reduce-sat", "Build G_phi from a DIMACS 3-CNF formula");
    reduce_sat->add_option("cnf", cnf_path, "DIMACS file")->required();
    reduce_sat->add_option("-o,--output", output_path, "Output graph")->required();

    // reduce-coloring
    string graph_path;
    int k = 3;
    auto reduce_coloring = app.add_subcommand("reduce-coloring", "Build H_k from a graph");
    reduce_coloring->add_option("graph", graph_path, "Input graph")->required();
    reduce_coloring->add_option("-k", k, "Number of colors (>= 3)")->required();
    reduce_coloring->add_option("-o,--output", output_path, "Output graph")->required();

    // hom
    string source_path, target_path;
    std::optional<string> certificate_path;
    auto hom = app.add_subcommand("hom", "Search for a homomorphism G -> H");
    hom->add_option("source", source_path, "Source graph G")->required();
    hom->add_option("target", target_path, "Target graph H")->required();
    hom->add_option("-o,--output", certificate_path, "Certificate output");

    // chroma
    auto chroma = app.add_subcommand("chroma", "Print the chromatic number");
    chroma->add_option("graph", graph_path, "Input graph (default: standard input)");

    // embed
    EmbedFlags embed_flags;
    auto embed = app.add_subcommand("embed", "Find a unit-distance realization in R^k");
    embed->add_option("graph", graph_path, "Input graph")->required();
    embed->add_option("-k", k, "Dimension")->required()->check(CLI::PositiveNumber);
    embed->add_option("-o,--output", output_path, "Output embedding")->required();
    embed_flags.add_to(embed);

    // verify
    bool verify_rep = false, verify_hom = false, strict = false;
    double verify_tol = 1e-9;
    vector<string> verify_files;
    auto verify = app.add_subcommand("verify", "Check a representation (--rep G EMB) or homomorphism (--hom G H CERT)");
    auto rep_flag = verify->add_flag("--rep", verify_rep, "Verify a unit-distance representation");
    auto hom_flag = verify->add_flag("--hom", verify_hom, "Verify a homomorphism certificate");
    rep_flag->excludes(hom_flag);
    verify->add_flag("--strict", strict, "With --rep, also require a strict realization");
    verify->add_option("--tol", verify_tol, "Tolerance")->check(CLI::PositiveNumber);
    verify->add_option("files", verify_files, "Input files")->required();

    // sphere-intersect
    int sphere_k = 2;
    double r = 0.0, big_r = 0.0, c = 0.0;
    auto sphere = app.add_subcommand("sphere-intersect", "Intersect S_k(0, r) with S_k((c,0,..,0), R)");
    sphere->add_option("k", sphere_k, "Dimension")->required();
    sphere->add_option("r", r, "First radius")->required();
    sphere->add_option("R", big_r, "Second radius")->required();
    sphere->add_option("c", c, "Distance between centres")->required();

    // gadget
    string gadget_spec;
    auto gadget = app.add_subcommand("gadget", "Write a named graph: moser, moser-raiskii:k or wheel:n");
    gadget->add_option("name", gadget_spec, "Gadget name")->required();
    gadget->add_option("-o,--output", output_path, "Output graph (default: standard output)");

    // render
    string embedding_path;
    auto render = app.add_subcommand("render", "Draw a planar embedding as SVG");
    render->add_option("embedding", embedding_path, "Embedding file")->required();
    render->add_option("graph", graph_path, "Graph file")->required();
    render->add_option("-o,--output", output_path, "Output SVG")->required();

    // dimension
    int k_max = 3;
    EmbedFlags dimension_flags;
    auto dimension = app.add_subcommand("dimension", "Bound the unit-distance dimension");
    dimension->add_option("graph", graph_path, "Input graph")->required();
    dimension->add_option("--kmax", k_max, "Largest dimension to try")->required()->check(CLI::PositiveNumber);
    dimension_flags.add_to(dimension);

    try {
        vector<string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_code::success;
    }
    catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::success;
    }
    catch (const CLI::ParseError & e) {
        err << "udg-forge: " << e.what() << '\n';
        return exit_code::usage;
    }

    try {
        if (reduce_sat->parsed()) {
            check_readable(cnf_path);
            check_writable(output_path);
            auto formula = parse_dimacs(slurp(io, cnf_path));
            auto g_phi = build_g_phi(formula);
            emit(io, output_path, to_string(g_phi));
            if (output_path != "-")
                out << "G_phi: " << g_phi.graph.size() << " vertices, " << g_phi.graph.edge_count() << " edges\n";
            return exit_code::success;
        }

        if (reduce_coloring->parsed()) {
            check_readable(graph_path);
            check_writable(output_path);
            auto h_k = build_h_k(read_plain(io, graph_path), k);
            emit(io, output_path, to_string(h_k));
            if (output_path != "-")
                out << "H_" << k << ": " << h_k.graph.size() << " vertices, " << h_k.graph.edge_count() << " edges\n";
            return exit_code::success;
        }

        if (hom->parsed()) {
            check_readable(source_path);
            check_readable(target_path);
            if (certificate_path)
                check_writable(*certificate_path);
            auto source = read_plain(io, source_path);
            auto target = read_plain(io, target_path);
            auto found = find_homomorphism(source, target);
            if (! found) {
                out << "no homomorphism\n";
                return exit_code::negative;
            }
            out << "homomorphism found\n";
            if (certificate_path) {
                std::ostringstream cert;
                write_certificate(cert, source, *found);
                emit(io, *certificate_path, cert.str());
            }
            return exit_code::success;
        }

        if (chroma->parsed()) {
            if (graph_path.empty())
                graph_path = "-";
            check_readable(graph_path);
            out << chromatic_number(read_plain(io, graph_path)) << '\n';
            return exit_code::success;
        }

        if (embed->parsed()) {
            check_readable(graph_path);
            check_writable(output_path);
            auto graph = read_plain(io, graph_path);
            auto options = embed_flags.options();
            std::optional<Embedding> result;
            if (is_connected(graph)) {
                auto report = embed_search(graph, k, options);
                result = report.embedding;
                if (! result) {
                    out << "no embedding found (" << report.restarts_considered << " restarts, best residual "
                        << report.best_residual << ")\n";
                    return exit_code::negative;
                }
                out << "embedded in R^" << k << " at restart " << report.successful_restart << '\n';
            }
            else {
                result = embed_components(graph, k, options);
                if (! result) {
                    out << "no embedding found for some component (" << options.restarts << " restarts)\n";
                    return exit_code::negative;
                }
                out << "embedded each component in R^" << k << '\n';
            }
            emit(io, output_path, to_string(*result));
            return exit_code::success;
        }

        if (verify->parsed()) {
            if (! verify_rep && ! verify_hom)
                throw std::invalid_argument("verify needs --rep or --hom");
            if (verify_rep) {
                if (verify_files.size() != 2)
                    throw std::invalid_argument("verify --rep takes <graph> <embedding>");
                for (auto & f : verify_files)
                    check_readable(f);
                auto graph = read_plain(io, verify_files[0]);
                auto embedding = read_emb(io, verify_files[1]);
                auto report = verify_representation(graph, embedding, verify_tol);
                out << "max edge residual " << report.max_edge_residual << '\n'
                    << "coincident non-adjacent pairs " << report.coincident_nonadjacent_pairs.size() << '\n'
                    << "unit non-adjacent pairs " << report.unit_nonadjacent_pairs.size() << '\n'
                    << "realization " << (report.is_realization ? "yes" : "no") << '\n'
                    << "strict " << (report.is_strict ? "yes" : "no") << '\n';
                bool ok = strict ? report.is_strict : report.is_representation(verify_tol);
                return ok ? exit_code::success : exit_code::negative;
            }

            if (verify_files.size() != 3)
                throw std::invalid_argument("verify --hom takes <source> <target> <certificate>");
            for (auto & f : verify_files)
                check_readable(f);
            auto source = read_plain(io, verify_files[0]);
            auto target = read_plain(io, verify_files[1]);
            std::istringstream cert(slurp(io, verify_files[2]));
            bool ok = verify_homomorphism(source, target, read_certificate(cert));
            out << (ok ? "valid homomorphism\n" : "not a homomorphism\n");
            return ok ? exit_code::success : exit_code::negative;
        }

        if (sphere->parsed()) {
            if (sphere_k < 2)
                throw std::invalid_argument("sphere-intersect needs k >= 2");
            Point second(sphere_k, 0.0);
            second[0] = c;
            out << describe(sphere_intersection({ Point(sphere_k, 0.0), r }, { second, big_r })) << '\n';
            return exit_code::success;
        }

        if (gadget->parsed()) {
            check_writable(output_path);
            emit(io, output_path, to_string(parse_gadget(gadget_spec)));
            return exit_code::success;
        }

        if (render->parsed()) {
            check_readable(embedding_path);
            check_readable(graph_path);
            check_writable(output_path);
            auto embedding = read_emb(io, embedding_path);
            auto graph = read_plain(io, graph_path);
            emit(io, output_path, render_svg(graph, embedding));
            return exit_code::success;
        }

        if (dimension->parsed()) {
            check_readable(graph_path);
            auto estimate = estimate_dimension(read_plain(io, graph_path), k_max, dimension_flags.options());
            out << estimate.lower << ' ' << (estimate.upper ? std::to_string(*estimate.upper) : string{ "none" }) << '\n';
            return exit_code::success;
        }
    }
    catch (const IoError & e) {
        err << "udg-forge: " << e.what() << '\n';
        return exit_code::io;
    }
    catch (const std::exception & e) {
        err << "udg-forge: " << e.what() << '\n';
        return exit_code::usage;
    }

    return exit_code::usage;
}
