#ifndef UDG_GUARD_UDG_HOMOMORPHISM_HH
#define UDG_GUARD_UDG_HOMOMORPHISM_HH 1

#include <udg/graph.hh>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

namespace udg
{
    /// A total vertex map source -> target, by label.
    using Homomorphism = VertexMap;

    /**
     * True iff every source edge a ~ b maps to a target edge. An edge whose
     * ends share an image fails, since targets have no loops. A mapping that
     * misses a source vertex, or names an unknown target vertex, throws
     * std::invalid_argument.
     */
    auto verify_homomorphism(const Graph & source, const Graph & target, const Homomorphism & mapping) -> bool;

    struct HomSearchOptions
    {
        int max_source_vertices = 200;
        int max_target_vertices = 32;
    };

    /**
     * Exact, complete backtracking search for a homomorphism source -> target.
     *
     * Source vertices are taken in a connectivity-respecting order: start at
     * the highest degree vertex, then always extend with the unplaced vertex
     * of highest degree adjacent to something placed (ties by label). Each
     * assignment filters the candidate sets of unplaced neighbours down to
     * target neighbours of the chosen image, failing as soon as one empties.
     * The result is deterministic and always verified before it is returned.
     */
    auto find_homomorphism(const Graph & source, const Graph & target, const HomSearchOptions & options = {})
        -> std::optional<Homomorphism>;

    /**
     * Enumerates every homomorphism by plain extension in vertex order, with
     * no propagation, calling visit on each. visit returns false to stop.
     * Independent of find_homomorphism; used as its oracle.
     */
    auto for_each_homomorphism(const Graph & source, const Graph & target,
            const std::function<auto (const Homomorphism &) -> bool> & visit) -> void;

    /**
     * Number of homomorphisms, stopping once cap is reached if a cap is given.
     * Without a cap the raw search space |V(target)|^|V(source)| must not
     * exceed 10^9, otherwise CapExceeded is thrown.
     */
    auto count_homomorphisms(const Graph & source, const Graph & target,
            std::optional<std::uint64_t> cap = std::nullopt) -> std::uint64_t;

    // Certificate format: one "m <source-label> <target-label>" line per source vertex.
    auto write_certificate(std::ostream & out, const Graph & source, const Homomorphism & mapping) -> void;
    auto read_certificate(std::istream & in) -> Homomorphism;
    auto load_certificate(const std::string & path) -> Homomorphism;
    auto save_certificate(const std::string & path, const Graph & source, const Homomorphism & mapping) -> void;
}

#endif
