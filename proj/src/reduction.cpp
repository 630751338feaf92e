#include "ripscrush/reduction.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>

#include "ripscrush/parallel.hpp"

namespace ripscrush {

const char* to_string(StepMode mode)
{
    return mode == StepMode::Dominated ? "dominated" : "locally-dominated";
}

StepMode parse_step_mode(std::string_view text)
{
    if (text == "dominated")
        return StepMode::Dominated;
    if (text == "locally-dominated")
        return StepMode::LocallyDominated;
    throw std::invalid_argument("unknown step mode '" + std::string(text) + "'");
}

bool is_dominated(const NeighborhoodGraph& g, VertexId a, VertexId b, const AliveMask& alive)
{
    g.check_vertex(a);
    g.check_vertex(b);
    if (a == b)
        throw std::invalid_argument("a vertex cannot dominate itself");
    if (!alive[a] || !alive[b] || !g.adjacent(a, b))
        return false;
    for (VertexId u : g.neighbors(a))
        if (alive[u] && u != b && !g.adjacent(u, b))
            return false;
    return true;
}

bool is_dominated(const NeighborhoodGraph& g, VertexId a, VertexId b)
{
    return is_dominated(g, a, b, g.all_alive());
}

namespace {

void validate_witness(const NeighborhoodGraph& g, VertexId a, std::span<const VertexId> witness,
                      const AliveMask& alive)
{
    if (witness.empty())
        throw MalformedWitness("empty witness");
    for (VertexId b : witness) {
        if (b >= g.size())
            throw MalformedWitness("witness names unknown vertex " + std::to_string(b));
        if (b == a)
            throw MalformedWitness("witness contains the anchor");
        if (!alive[b])
            throw MalformedWitness("witness vertex " + to_string(g.point(b)) + " is not alive");
    }
    for (std::size_t i = 0; i < witness.size(); ++i)
        for (std::size_t j = i + 1; j < witness.size(); ++j) {
            if (witness[i] == witness[j])
                throw MalformedWitness("witness repeats a vertex");
            if (!g.adjacent(witness[i], witness[j]))
                throw MalformedWitness("witness is not a clique");
        }
}

// cover[i] marks the maximal cliques that window vertex i extends.
std::vector<Bitset> coverage(const LocalWindow& w, const std::vector<Bitset>& cliques)
{
    std::vector<Bitset> cover(w.size(), Bitset(cliques.size()));
    for (std::size_t q = 0; q < cliques.size(); ++q) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            Bitset rest = cliques[q];
            rest.reset(i);
            if (rest.is_subset_of(w.adjacency[i]))
                cover[i].set(q);
        }
    }
    return cover;
}

std::size_t local_index(const LocalWindow& w, VertexId v)
{
    auto it = std::lower_bound(w.vertices.begin(), w.vertices.end(), v);
    if (it == w.vertices.end() || *it != v)
        return std::numeric_limits<std::size_t>::max();
    return static_cast<std::size_t>(it - w.vertices.begin());
}

}  // namespace

bool check_local_domination(const NeighborhoodGraph& g, VertexId a, std::span<const VertexId> witness,
                            const AliveMask& alive)
{
    g.check_vertex(a);
    validate_witness(g, a, witness, alive);
    const LocalWindow w = LocalWindow::around(g, a, alive);
    const auto cliques = w.maximal_cliques();
    std::vector<std::size_t> locals;
    for (VertexId b : witness) {
        const std::size_t i = local_index(w, b);
        if (i != std::numeric_limits<std::size_t>::max())
            locals.push_back(i);
    }
    for (const Bitset& q : cliques) {
        bool extended = false;
        for (std::size_t i : locals) {
            Bitset rest = q;
            rest.reset(i);
            if (rest.is_subset_of(w.adjacency[i])) {
                extended = true;
                break;
            }
        }
        if (!extended)
            return false;
    }
    return true;
}

bool check_local_domination(const NeighborhoodGraph& g, VertexId a, std::span<const VertexId> witness)
{
    return check_local_domination(g, a, witness, g.all_alive());
}

std::vector<VertexId> default_candidates(const NeighborhoodGraph& g, VertexId a, const AliveMask& alive)
{
    std::vector<VertexId> out;
    for (VertexId u : g.neighbors(a))
        if (alive[u])
            out.push_back(u);
    return out;
}

std::vector<VertexId> preference_order(const NeighborhoodGraph& g, VertexId a, std::span<const VertexId> candidates)
{
    const LatticePoint& origin = g.point(a);
    struct Ranked
    {
        VertexId v;
        Coord cheb;
        LatticePoint offset;
    };
    std::vector<Ranked> ranked;
    ranked.reserve(candidates.size());
    for (VertexId v : candidates) {
        LatticePoint off = g.point(v) - origin;
        Coord cheb = 0;
        for (Coord c : off.coords)
            cheb = std::max<Coord>(cheb, std::abs(c));
        ranked.push_back({v, cheb, std::move(off)});
    }
    std::sort(ranked.begin(), ranked.end(), [](const Ranked& x, const Ranked& y) {
        if (x.cheb != y.cheb)
            return x.cheb < y.cheb;
        return lex_compare(x.offset, y.offset) > 0;
    });
    std::vector<VertexId> out;
    out.reserve(ranked.size());
    for (const auto& r : ranked)
        out.push_back(r.v);
    return out;
}

namespace {

struct TupleSearch
{
    const LocalWindow& window;
    const std::vector<Bitset>& cover;
    const std::vector<std::size_t>& order;  // ranked local indices
    std::size_t clique_count;

    // First tuple (in lexicographic rank order) of `size` ranks starting with
    // rank `first` that forms a clique and covers every maximal clique.
    std::optional<std::vector<std::size_t>> from_first(std::size_t first, std::size_t size) const
    {
        std::vector<std::size_t> ranks{first};
        Bitset common = window.adjacency[order[first]];
        Bitset covered = cover[order[first]];
        if (extend(ranks, common, covered, size))
            return ranks;
        return std::nullopt;
    }

    bool extend(std::vector<std::size_t>& ranks, const Bitset& common, const Bitset& covered, std::size_t size) const
    {
        if (ranks.size() == size)
            return covered.count() == clique_count;
        const bool last = ranks.size() + 1 == size;
        Bitset missing(clique_count);
        if (last) {
            missing.set_all();
            missing.subtract(covered);
        }
        for (std::size_t k = ranks.back() + 1; k < order.size(); ++k) {
            const std::size_t v = order[k];
            if (!common.test(v))
                continue;
            if (last) {
                if (missing.is_subset_of(cover[v])) {
                    ranks.push_back(k);
                    return true;
                }
                continue;
            }
            ranks.push_back(k);
            if (extend(ranks, common & window.adjacency[v], covered | cover[v], size))
                return true;
            ranks.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<Witness> find_witness(const NeighborhoodGraph& g, VertexId a, std::span<const VertexId> candidates,
                                    const AliveMask& alive, const WitnessSearchOptions& opts)
{
    g.check_vertex(a);
    if (alive.size() != g.size() || !alive[a])
        throw UnknownVertex(a);
    if (opts.max_size == 0)
        throw std::invalid_argument("max witness size must be at least 1");

    const LocalWindow w = LocalWindow::around(g, a, alive);
    std::vector<VertexId> cands(candidates.begin(), candidates.end());
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (VertexId v : cands)
        if (local_index(w, v) == std::numeric_limits<std::size_t>::max())
            throw std::invalid_argument("candidate " + std::to_string(v) + " is not an alive neighbour of the anchor");
    if (cands.empty())
        return std::nullopt;

    const auto cliques = w.maximal_cliques();
    const auto cover = coverage(w, cliques);
    std::vector<std::size_t> order;
    for (VertexId v : preference_order(g, a, cands))
        order.push_back(local_index(w, v));

    const TupleSearch search{w, cover, order, cliques.size()};
    const std::size_t max_size = std::min(opts.max_size, order.size());
    for (std::size_t size = 1; size <= max_size; ++size) {
        std::vector<std::optional<std::vector<std::size_t>>> found(order.size());
        std::atomic<std::size_t> best{order.size()};
        parallel_for(order.size(), opts.threads, [&](std::size_t first) {
            if (first > best.load())
                return;
            found[first] = search.from_first(first, size);
            if (found[first]) {
                std::size_t cur = best.load();
                while (first < cur && !best.compare_exchange_weak(cur, first)) {
                }
            }
        });
        for (const auto& hit : found) {
            if (!hit)
                continue;
            Witness wit;
            wit.anchor = a;
            for (std::size_t rank : *hit)
                wit.members.push_back(w.vertices[order[rank]]);
            std::sort(wit.members.begin(), wit.members.end());
            return wit;
        }
    }
    return std::nullopt;
}

std::optional<Witness> find_witness(const NeighborhoodGraph& g, VertexId a, std::size_t max_size)
{
    const AliveMask alive = g.all_alive();
    return find_witness(g, a, default_candidates(g, a, alive), alive, {max_size, 1});
}

}  // namespace ripscrush
