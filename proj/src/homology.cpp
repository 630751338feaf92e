#include "ripscrush/homology.hpp"

#include <algorithm>
#include <cstdint>

namespace ripscrush {

std::size_t SkeletonListing::total() const
{
    std::size_t t = 0;
    for (const auto& level : simplices)
        t += level.size();
    return t;
}

namespace {

struct Enumerator
{
    const NeighborhoodGraph& g;
    SkeletonListing& out;
    std::size_t cap;
    std::size_t total = 0;
    Clique current;

    void record()
    {
        if (++total > cap)
            throw ResourceCapExceeded("simplex count exceeds the cap of " + std::to_string(cap));
        out.simplices[current.size() - 1].push_back(current);
    }

    // candidates: common neighbours of `current` with id above its last vertex
    void extend(const std::vector<VertexId>& candidates)
    {
        record();
        if (current.size() == out.k_max + 1)
            return;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const VertexId v = candidates[i];
            const auto nb = g.neighbors(v);
            std::vector<VertexId> next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (std::binary_search(nb.begin(), nb.end(), candidates[j]))
                    next.push_back(candidates[j]);
            current.push_back(v);
            extend(next);
            current.pop_back();
        }
    }
};

std::size_t face_index(const std::vector<Clique>& faces, const Clique& f)
{
    const auto it = std::lower_bound(faces.begin(), faces.end(), f);
    if (it == faces.end() || *it != f)
        throw std::logic_error("face missing from skeleton listing");
    return static_cast<std::size_t>(it - faces.begin());
}

// Reduces the boundary columns of dimension k; `skip` marks columns known to be
// cycles that are already boundaries of the level above. Returns the pivot rows.
std::vector<std::uint32_t> reduce(const SkeletonListing& s, std::size_t k, const std::vector<bool>& skip)
{
    const auto& cols = s.simplices[k];
    const auto& rows = s.simplices[k - 1];
    std::vector<std::int64_t> owner(rows.size(), -1);
    std::vector<std::vector<std::uint32_t>> reduced(cols.size());
    std::vector<std::uint32_t> pivots;

    Clique face;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (!skip.empty() && skip[j])
            continue;
        std::vector<std::uint32_t> col;
        for (std::size_t drop = 0; drop < cols[j].size(); ++drop) {
            face.clear();
            for (std::size_t t = 0; t < cols[j].size(); ++t)
                if (t != drop)
                    face.push_back(cols[j][t]);
            col.push_back(static_cast<std::uint32_t>(face_index(rows, face)));
        }
        std::sort(col.begin(), col.end());
        std::vector<std::uint32_t> scratch;
        while (!col.empty() && owner[col.back()] >= 0) {
            const auto& other = reduced[static_cast<std::size_t>(owner[col.back()])];
            scratch.clear();
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                          std::back_inserter(scratch));
            col.swap(scratch);
        }
        if (!col.empty()) {
            owner[col.back()] = static_cast<std::int64_t>(j);
            pivots.push_back(col.back());
            reduced[j] = std::move(col);
        }
    }
    return pivots;
}

}  // namespace

SkeletonListing enumerate_skeleton(const NeighborhoodGraph& g, std::size_t k_max, std::size_t cap)
{
    SkeletonListing out;
    out.k_max = k_max;
    out.simplices.resize(k_max + 1);
    Enumerator e{g, out, cap, 0, {}};
    for (VertexId v = 0; v < g.size(); ++v) {
        std::vector<VertexId> up;
        for (VertexId u : g.neighbors(v))
            if (u > v)
                up.push_back(u);
        e.current.assign(1, v);
        e.extend(up);
    }
    for (auto& level : out.simplices)
        std::sort(level.begin(), level.end());
    return out;
}

std::size_t boundary_rank(const SkeletonListing& s, std::size_t k)
{
    if (k == 0 || k > s.k_max)
        throw std::out_of_range("boundary rank needs 1 <= k <= k_max");
    return reduce(s, k, {}).size();
}

bool BettiVector::all_zero() const
{
    return std::all_of(reduced.begin(), reduced.end(), [](std::size_t b) { return b == 0; });
}

BettiVector betti_numbers(const NeighborhoodGraph& g, std::size_t k_max, std::size_t cap)
{
    const SkeletonListing s = enumerate_skeleton(g, k_max, cap);
    BettiVector out;
    out.k_max = k_max;
    for (std::size_t k = 0; k <= k_max; ++k)
        out.simplex_counts.push_back(s.count(k));

    // rank[k] = rank of the boundary from k-simplices; rank[0] is the augmentation.
    std::vector<std::size_t> rank(k_max + 2, 0);
    rank[0] = s.count(0) > 0 ? 1 : 0;
    std::vector<bool> skip;
    for (std::size_t k = k_max; k >= 1; --k) {
        std::vector<bool> cleared(s.count(k - 1), false);
        const auto pivots = reduce(s, k, skip);
        for (auto p : pivots)
            cleared[p] = true;
        rank[k] = pivots.size();
        skip = std::move(cleared);
    }
    for (std::size_t k = 0; k <= k_max; ++k)
        out.reduced.push_back(s.count(k) - rank[k] - rank[k + 1]);

    bool top_exact = true;
    for (const auto& top : s.simplices[k_max]) {
        std::vector<VertexId> common;
        const auto first = g.neighbors(top.front());
        for (VertexId u : first) {
            bool all = true;
            for (std::size_t t = 1; t < top.size() && all; ++t)
                all = g.adjacent(top[t], u);
            if (all)
                common.push_back(u);
        }
        if (!common.empty()) {
            top_exact = false;
            break;
        }
    }
    out.top_exact = top_exact;
    return out;
}

}  // namespace ripscrush
