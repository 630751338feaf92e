#pragma once

/**
 * Vertex removal predicates for flag complexes: domination, local domination,
 * and the witness search that backs local crushing.
 *
 * A vertex a is locally dominated when some clique L (a not in L) has the
 * property that every simplex containing a extends by at least one member of
 * L. For flag complexes it is enough to test the maximal cliques through a,
 * since a face of an extendable clique is extendable by the same vertex.
 */

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ripscrush/flag_complex.hpp"

namespace ripscrush {

class MalformedWitness : public std::invalid_argument
{
public:
    explicit MalformedWitness(const std::string& what) : std::invalid_argument(what) {}
};

enum class StepMode
{
    Dominated,
    LocallyDominated,
};

const char* to_string(StepMode mode);
StepMode parse_step_mode(std::string_view text);

struct Witness
{
    VertexId anchor = 0;
    Clique members;  // sorted ids

    StepMode mode() const { return members.size() == 1 ? StepMode::Dominated : StepMode::LocallyDominated; }
};

/**
 * a is dominated by b: every clique through a extends by b. Evaluated as
 * N[a] within N[b] over alive vertices. Throws std::invalid_argument if a == b.
 */
bool is_dominated(const NeighborhoodGraph& g, VertexId a, VertexId b, const AliveMask& alive);
bool is_dominated(const NeighborhoodGraph& g, VertexId a, VertexId b);

/**
 * Whether `witness` locally dominates a in the residual graph. Throws
 * MalformedWitness if the witness is empty, contains a, repeats a vertex,
 * names a dead vertex or is not a clique.
 */
bool check_local_domination(const NeighborhoodGraph& g, VertexId a, std::span<const VertexId> witness,
                            const AliveMask& alive);
bool check_local_domination(const NeighborhoodGraph& g, VertexId a, std::span<const VertexId> witness);

/** Alive vertices within scale of a, ascending id. */
std::vector<VertexId> default_candidates(const NeighborhoodGraph& g, VertexId a, const AliveMask& alive);

/**
 * Candidates in search preference order: by Chebyshev length of the offset
 * from a (shortest first), then by the reversed-index lexicographic order of
 * the offset, largest first. Depends only on offsets, so it is translation
 * invariant.
 */
std::vector<VertexId> preference_order(const NeighborhoodGraph& g, VertexId a, std::span<const VertexId> candidates);

struct WitnessSearchOptions
{
    std::size_t max_size = 1;
    unsigned threads = 1;
};

/**
 * First witness among cliques of `candidates` of size <= max_size, trying
 * sizes in ascending order and, within a size, tuples of candidates in
 * lexicographic order of their preference rank. The result does not depend on
 * the thread count. Candidates must be alive neighbours of a.
 */
std::optional<Witness> find_witness(const NeighborhoodGraph& g, VertexId a, std::span<const VertexId> candidates,
                                    const AliveMask& alive, const WitnessSearchOptions& opts);
std::optional<Witness> find_witness(const NeighborhoodGraph& g, VertexId a, std::size_t max_size);

}  // namespace ripscrush
