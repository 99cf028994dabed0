#include <udg/errors.hh>
#include <udg/graph_io.hh>
#include <udg/homomorphism.hh>

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

using namespace udg;

using std::optional;
using std::string;
using std::vector;

auto udg::verify_homomorphism(const Graph & source, const Graph & target, const Homomorphism & mapping) -> bool
{
    vector<int> image(source.size());
    for (int v = 0 ; v < source.size() ; ++v) {
        auto i = mapping.find(source.label(v));
        if (i == mapping.end())
            throw std::invalid_argument("mapping is not total: no image for '" + source.label(v) + "'");
        auto t = target.find(i->second);
        if (! t)
            throw std::invalid_argument("mapping sends '" + source.label(v) + "' to unknown vertex '" + i->second + "'");
        image[v] = *t;
    }
    for (auto & [a, b] : source.edges())
        if (image[a] == image[b] || ! target.adjacent(image[a], image[b]))
            return false;
    return true;
}

namespace
{
    using Domain = std::uint64_t;

    auto check_caps(const Graph & source, const Graph & target, const HomSearchOptions & options) -> void
    {
        if (target.size() > std::min(options.max_target_vertices, 64))
            throw CapExceeded("find_homomorphism: target has " + std::to_string(target.size())
                    + " vertices, cap is " + std::to_string(options.max_target_vertices));
        if (source.size() > options.max_source_vertices)
            throw CapExceeded("find_homomorphism: source has " + std::to_string(source.size())
                    + " vertices, cap is " + std::to_string(options.max_source_vertices));
    }

    auto search_order(const Graph & graph) -> vector<int>
    {
        auto better = [&] (int a, int b) {
            if (graph.degree(a) != graph.degree(b))
                return graph.degree(a) > graph.degree(b);
            return graph.label(a) < graph.label(b);
        };

        vector<int> order;
        vector<bool> placed(graph.size(), false), frontier(graph.size(), false);
        while (static_cast<int>(order.size()) < graph.size()) {
            int pick = -1;
            for (int v = 0 ; v < graph.size() ; ++v)
                if (! placed[v] && frontier[v] && (pick == -1 || better(v, pick)))
                    pick = v;
            if (pick == -1)
                for (int v = 0 ; v < graph.size() ; ++v)
                    if (! placed[v] && (pick == -1 || better(v, pick)))
                        pick = v;

            placed[pick] = true;
            order.push_back(pick);
            for (int w : graph.neighbours(pick))
                frontier[w] = true;
        }
        return order;
    }

    struct Search
    {
        const Graph & source;
        vector<int> order;
        vector<Domain> target_adjacency;
        vector<int> image;

        auto extend(std::size_t position, const vector<Domain> & domains) -> bool
        {
            if (position == order.size())
                return true;

            int v = order[position];
            for (Domain remaining = domains[v] ; remaining ; remaining &= remaining - 1) {
                int t = std::countr_zero(remaining);
                vector<Domain> next = domains;
                bool wiped_out = false;
                for (int w : source.neighbours(v)) {
                    if (image[w] != -1)
                        continue;
                    next[w] &= target_adjacency[t];
                    if (! next[w]) {
                        wiped_out = true;
                        break;
                    }
                }
                if (wiped_out)
                    continue;

                image[v] = t;
                next[v] = Domain{1} << t;
                if (extend(position + 1, next))
                    return true;
                image[v] = -1;
            }
            return false;
        }
    };
}

auto udg::find_homomorphism(const Graph & source, const Graph & target, const HomSearchOptions & options)
    -> optional<Homomorphism>
{
    check_caps(source, target, options);
    if (source.size() == 0)
        return Homomorphism{};
    if (target.size() == 0)
        return std::nullopt;

    Search search{ source, search_order(source), vector<Domain>(target.size(), 0), vector<int>(source.size(), -1) };
    for (int t = 0 ; t < target.size() ; ++t)
        for (int u : target.neighbours(t))
            search.target_adjacency[t] |= Domain{1} << u;

    Domain everything = target.size() == 64 ? ~Domain{0} : (Domain{1} << target.size()) - 1;
    vector<Domain> domains(source.size(), everything);
    // An edge needs an image with at least one neighbour.
    Domain non_isolated = 0;
    for (int t = 0 ; t < target.size() ; ++t)
        if (search.target_adjacency[t])
            non_isolated |= Domain{1} << t;
    for (int v = 0 ; v < source.size() ; ++v)
        if (source.degree(v) > 0 && ! (domains[v] &= non_isolated))
            return std::nullopt;

    if (! search.extend(0, domains))
        return std::nullopt;

    Homomorphism result;
    for (int v = 0 ; v < source.size() ; ++v)
        result.emplace(source.label(v), target.label(search.image[v]));
    if (! verify_homomorphism(source, target, result))
        throw std::logic_error("find_homomorphism produced a mapping that does not verify");
    return result;
}

namespace
{
    auto enumerate(const Graph & source, const Graph & target, int v, vector<int> & image,
            const std::function<auto (const Homomorphism &) -> bool> & visit) -> bool
    {
        if (v == source.size()) {
            Homomorphism h;
            for (int u = 0 ; u < source.size() ; ++u)
                h.emplace(source.label(u), target.label(image[u]));
            return visit(h);
        }

        for (int t = 0 ; t < target.size() ; ++t) {
            bool ok = true;
            for (int w : source.neighbours(v))
                if (w < v && ! target.adjacent(t, image[w])) {
                    ok = false;
                    break;
                }
            if (! ok)
                continue;
            image[v] = t;
            if (! enumerate(source, target, v + 1, image, visit))
                return false;
        }
        return true;
    }
}

auto udg::for_each_homomorphism(const Graph & source, const Graph & target,
        const std::function<auto (const Homomorphism &) -> bool> & visit) -> void
{
    vector<int> image(source.size(), -1);
    enumerate(source, target, 0, image, visit);
}

auto udg::count_homomorphisms(const Graph & source, const Graph & target, optional<std::uint64_t> cap) -> std::uint64_t
{
    if (! cap && source.size() * std::log10(std::max(1, target.size())) > 9.0)
        throw CapExceeded("count_homomorphisms: search space " + std::to_string(target.size()) + "^"
                + std::to_string(source.size()) + " exceeds 10^9 and no cap was given");

    std::uint64_t count = 0;
    if (cap && *cap == 0)
        return 0;
    for_each_homomorphism(source, target, [&] (const Homomorphism &) {
            ++count;
            return ! cap || count < *cap;
            });
    return count;
}

auto udg::write_certificate(std::ostream & out, const Graph & source, const Homomorphism & mapping) -> void
{
    for (auto & label : source.labels()) {
        auto i = mapping.find(label);
        if (i == mapping.end())
            throw std::invalid_argument("certificate: no image for '" + label + "'");
        out << "m " << label << ' ' << i->second << '\n';
    }
}

auto udg::read_certificate(std::istream & in) -> Homomorphism
{
    Homomorphism result;
    string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream fields(line);
        string kind, from, to, extra;
        if (! (fields >> kind >> from >> to) || kind != "m" || (fields >> extra))
            throw ParseError("certificate line " + std::to_string(line_number) + ": expected 'm <source> <target>'");
        if (! result.emplace(from, to).second)
            throw ParseError("certificate line " + std::to_string(line_number) + ": '" + from + "' mapped twice");
    }
    return result;
}

auto udg::load_certificate(const string & path) -> Homomorphism
{
    std::istringstream in(read_text_file(path));
    return read_certificate(in);
}

auto udg::save_certificate(const string & path, const Graph & source, const Homomorphism & mapping) -> void
{
    std::ostringstream out;
    write_certificate(out, source, mapping);
    write_text_file(path, out.str());
}
