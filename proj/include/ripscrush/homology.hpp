#pragma once

/**
 * Reduced F2 homology of clique complexes up to a degree cap. This is the
 * only place the complex is listed simplex by simplex, so it is meant for
 * small inputs and guarded by a simplex-count cap.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ripscrush/flag_complex.hpp"

namespace ripscrush {

inline constexpr std::size_t kDefaultSimplexCap = 5'000'000;
inline constexpr std::size_t kDefaultHomologyDegree = 4;

class ResourceCapExceeded : public std::runtime_error
{
public:
    explicit ResourceCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct SkeletonListing
{
    std::size_t k_max = 0;
    /** simplices[k] holds the k-simplices as sorted vertex tuples, lexicographically ordered. */
    std::vector<std::vector<Clique>> simplices;

    std::size_t count(std::size_t k) const { return k < simplices.size() ? simplices[k].size() : 0; }
    std::size_t total() const;
};

/** All cliques with at most k_max+1 vertices. Throws ResourceCapExceeded past `cap` simplices. */
SkeletonListing enumerate_skeleton(const NeighborhoodGraph& g, std::size_t k_max,
                                   std::size_t cap = kDefaultSimplexCap);

struct BettiVector
{
    std::size_t k_max = 0;
    /** reduced[k] for k = 0..k_max. Entries below k_max are exact. */
    std::vector<std::size_t> reduced;
    /**
     * Whether reduced[k_max] is exact too, which happens when the complex has
     * no simplex of dimension k_max+1. Otherwise it is the cycle rank, an upper bound.
     */
    bool top_exact = false;
    std::vector<std::size_t> simplex_counts;

    bool all_zero() const;
};

BettiVector betti_numbers(const NeighborhoodGraph& g, std::size_t k_max = kDefaultHomologyDegree,
                          std::size_t cap = kDefaultSimplexCap);

/** Rank over F2 of the boundary map from k-simplices to (k-1)-simplices, k >= 1. */
std::size_t boundary_rank(const SkeletonListing& s, std::size_t k);

}  // namespace ripscrush
