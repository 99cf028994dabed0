#include <udg/constructors.hh>
#include <udg/degenerate.hh>
#include <udg/errors.hh>
#include <udg/representation.hh>

#include <algorithm>
#include <stdexcept>

using namespace udg;

using std::optional;
using std::vector;

namespace
{
    // Restricted growth strings: block[v] <= 1 + max(block[0..v-1]).
    auto grow(const Graph & graph, int v, int blocks, vector<int> & block, vector<vector<int>> & out) -> void
    {
        if (v == graph.size()) {
            if (blocks < graph.size())
                out.push_back(block);
            return;
        }
        for (int b = 0 ; b <= blocks ; ++b) {
            bool independent = true;
            for (int w : graph.neighbours(v))
                if (w < v && block[w] == b) {
                    independent = false;
                    break;
                }
            if (! independent)
                continue;
            block[v] = b;
            grow(graph, v + 1, std::max(blocks, b + 1), block, out);
        }
    }
}

auto udg::degenerate_partitions(const Graph & graph, int max_vertices) -> vector<Partition>
{
    if (graph.size() > max_vertices)
        throw CapExceeded("degenerate_partitions: " + std::to_string(graph.size()) + " vertices exceeds the cap of "
                + std::to_string(max_vertices));

    vector<vector<int>> strings;
    vector<int> block(graph.size(), -1);
    grow(graph, 0, 0, block, strings);

    auto block_count = [] (const vector<int> & s) { return *std::max_element(s.begin(), s.end()) + 1; };
    std::stable_sort(strings.begin(), strings.end(), [&] (const vector<int> & a, const vector<int> & b) {
            int ca = block_count(a), cb = block_count(b);
            return ca != cb ? ca > cb : a < b;
            });

    vector<Partition> result;
    for (auto & s : strings) {
        Partition p(block_count(s));
        for (int v = 0 ; v < graph.size() ; ++v)
            p[s[v]].push_back(graph.label(v));
        result.push_back(std::move(p));
    }
    return result;
}

auto udg::pull_back(const Graph & source, const Homomorphism & mapping, const Embedding & target_embedding) -> Embedding
{
    Embedding result(target_embedding.dimension());
    for (auto & label : source.labels()) {
        auto i = mapping.find(label);
        if (i == mapping.end())
            throw std::invalid_argument("pull_back: no image for '" + label + "'");
        result.set(label, target_embedding.at(i->second));
    }
    return result;
}

auto udg::degenerate_representation_search(const Graph & graph, int k, const DegenerateSearchOptions & options)
    -> optional<DegenerateRepresentation>
{
    auto partitions = degenerate_partitions(graph);
    int limit = std::min<int>(options.budget, static_cast<int>(partitions.size()));

    auto attempt = [&] (int index) -> optional<DegenerateRepresentation> {
        auto & partition = partitions[index];
        Graph q = quotient(graph, partition);
        auto e = embed_components(q, k, options.embed);
        if (! e)
            return std::nullopt;
        DegenerateRepresentation result{ partition, q, quotient_map(graph, partition), *e, Embedding{}, index };
        result.embedding = pull_back(graph, result.projection, result.quotient_embedding);
        return result;
    };

    int threads = std::max(1, options.threads);
    int block = threads == 1 ? 1 : threads * 2;
    for (int start = 0 ; start < limit ; start += block) {
        int end = std::min(limit, start + block);
        vector<optional<DegenerateRepresentation>> found(end - start);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
        for (int i = start ; i < end ; ++i)
            found[i - start] = attempt(i);

        for (auto & f : found)
            if (f) {
                if (! verify_homomorphism(graph, f->quotient, f->projection)
                        || ! verify_representation(f->quotient, f->quotient_embedding, options.embed.tolerance)
                            .is_representation(options.embed.tolerance))
                    throw std::logic_error("degenerate search produced an unverifiable result");
                return f;
            }
    }
    return std::nullopt;
}
