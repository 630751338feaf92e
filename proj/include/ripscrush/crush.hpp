#pragma once

/**
 * Lexicographic crushing of finite grids. Points are removed in the
 * reversed-index lexicographic order; each removal is justified by a witness
 * clique showing the point is locally dominated in what is left. A complete
 * run is a contractibility certificate for the Rips complex of the grid.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ripscrush/flag_complex.hpp"
#include "ripscrush/reduction.hpp"

namespace ripscrush {

struct AxisRange
{
    Coord lo = 0;
    Coord hi = 0;

    friend bool operator==(const AxisRange&, const AxisRange&) = default;
};

/**
 * The integer product set of `ranges`, read as numerators over `m`: the grid
 * (1/m Z)^n intersected with a box. m = 1 is the plain lattice.
 */
struct GridSpec
{
    std::vector<AxisRange> ranges;
    MetricSpec metric = kManhattan;
    Rational scale = 1;
    std::int64_t m = 1;

    static GridSpec cube(std::size_t dim, Coord lo, Coord hi, MetricSpec metric, Rational scale,
                         std::int64_t m = 1);

    std::size_t dim() const noexcept { return ranges.size(); }
    std::size_t point_count() const;
    /** Throws std::invalid_argument on an empty axis, zero dimension or bad m. */
    void validate() const;
    /** All grid points, sorted by the reversed-index lexicographic order. */
    std::vector<LatticePoint> points() const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct CrushStep
{
    LatticePoint point;
    std::vector<LatticePoint> witness;
    StepMode mode = StepMode::Dominated;

    friend bool operator==(const CrushStep&, const CrushStep&) = default;
};

struct CrushCertificate
{
    GridSpec grid;
    std::vector<CrushStep> steps;
    LatticePoint terminal;

    friend bool operator==(const CrushCertificate&, const CrushCertificate&) = default;
};

/** Where lexicographic crushing got stuck. */
struct CrushFailure
{
    std::size_t step = 0;                 // index of the step that could not be justified
    LatticePoint stuck;                   // the lex-least alive point at that moment
    std::vector<LatticePoint> window;     // its alive neighbours
    std::size_t remaining = 0;            // alive points including `stuck`
};

/**
 * Translation-invariant description of what an anchor sees: the offsets of
 * its alive neighbours, in lexicographic order, flattened.
 */
struct PatternKey
{
    std::vector<Coord> offsets;

    friend bool operator==(const PatternKey&, const PatternKey&) = default;
};

struct PatternKeyHash
{
    std::size_t operator()(const PatternKey& k) const noexcept;
};

PatternKey classify_local_pattern(const NeighborhoodGraph& g, VertexId x, const AliveMask& alive);

/**
 * Optional witness source tried before search. Its proposal is only used if
 * it passes check_local_domination. Proposers must depend on the anchor's
 * window alone (up to translation) for memoisation to stay sound.
 */
using WitnessProposer =
    std::function<std::optional<std::vector<VertexId>>(const NeighborhoodGraph&, VertexId, const AliveMask&)>;

struct CrushOptions
{
    std::size_t max_witness_size = 0;  // 0 means the dimension
    bool memoize = true;
    unsigned threads = 1;
    WitnessProposer proposer;
    /** Collect every pattern key seen, for instrumentation. */
    bool record_patterns = false;
};

struct CrushStats
{
    std::size_t steps = 0;
    std::size_t searches = 0;
    std::size_t cache_hits = 0;
    std::size_t proposer_hits = 0;
    std::size_t distinct_patterns = 0;
    std::vector<PatternKey> patterns;  // filled when record_patterns is set, first-seen order
};

struct CrushRun
{
    std::vector<CrushStep> steps;
    std::optional<LatticePoint> terminal;
    std::optional<CrushFailure> failure;
    CrushStats stats;

    bool ok() const noexcept { return !failure.has_value(); }
};

/** Crush an arbitrary duplicate-free point cloud (numerators over m). */
CrushRun crush_points(std::vector<LatticePoint> points, MetricSpec metric, const Rational& scale, std::int64_t m,
                      const CrushOptions& opts);

struct CrushOutcome
{
    std::optional<CrushCertificate> certificate;
    std::optional<CrushFailure> failure;
    CrushStats stats;

    bool ok() const noexcept { return certificate.has_value(); }
};

CrushOutcome crush(const GridSpec& grid, const CrushOptions& opts = {});

enum class VerificationStatus
{
    Valid,
    Invalid,    // mathematically wrong
    Malformed,  // structurally unusable
};

struct VerificationReport
{
    VerificationStatus status = VerificationStatus::Valid;
    std::optional<std::size_t> failing_step;
    std::optional<std::string> reason;
    std::size_t steps_checked = 0;

    bool valid() const noexcept { return status == VerificationStatus::Valid; }
};

/**
 * Replays a certificate from its grid description with a standalone checker
 * (no memoisation, no shared search code): lex order of removals, witness
 * membership and clique-ness, extension of every maximal clique through the
 * removed point, and a single terminal point.
 */
VerificationReport verify_certificate(const CrushCertificate& cert);

}  // namespace ripscrush
