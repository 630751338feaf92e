#include "ripscrush/snap_proposer.hpp"

#include <algorithm>

#include "ripscrush/geometry.hpp"

namespace ripscrush {

WitnessProposer make_snap_proposer()
{
    return [](const NeighborhoodGraph& g, VertexId x,
              const AliveMask& alive) -> std::optional<std::vector<VertexId>> {
        const std::size_t n = g.dim();
        if (g.metric().kind() != Metric::L1 || n < 2)
            return std::nullopt;
        if (g.scale() > Rational(2 * static_cast<long>(n) - 1))
            return std::nullopt;

        const std::int64_t m = g.denominator();
        const LatticePoint& base = g.point(x);
        const RationalPoint origin(n, Rational(0));
        std::vector<VertexId> members;
        try {
            for (const Clique& q : maximal_cliques_containing(g, x, alive)) {
                std::vector<RationalPoint> tau;
                for (VertexId v : q)
                    tau.push_back(to_rational(g.point(v) - base, m));
                const LecConstruction lec = lec_center_construct(tau);
                const RationalPoint snapped = snap_to_sublattice(lec.center, origin, m);
                LatticePoint p = base;
                for (std::size_t j = 0; j < n; ++j)
                    p[j] += numerator_i64(snapped[j] * m);
                const auto id = g.find(p);
                if (!id || !alive[*id] || !g.adjacent(x, *id))
                    return std::nullopt;
                members.push_back(*id);
            }
        } catch (const PreconditionViolation&) {
            return std::nullopt;
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (members.empty())
            return std::nullopt;
        return members;
    };
}

}  // namespace ripscrush
