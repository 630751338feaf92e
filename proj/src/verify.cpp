// Certificate replay. Deliberately shares nothing with the search path beyond
// point arithmetic: its own grid walk, adjacency matrix and clique enumerator.

#include <algorithm>
#include <unordered_map>

#include "ripscrush/crush.hpp"

namespace ripscrush {

namespace {

class Replay
{
public:
    explicit Replay(const GridSpec& grid) : grid_(grid)
    {
        Rational t = grid.scale * grid.m;
        if (grid.metric.squared())
            t *= t;
        threshold_ = numerator_i64(floor(t));
        enumerate();
    }

    const std::vector<LatticePoint>& points() const { return points_; }

    std::optional<std::size_t> index_of(const LatticePoint& p) const
    {
        auto it = index_.find(p);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    bool close(const LatticePoint& a, const LatticePoint& b) const
    {
        return raw_distance(a.coords, b.coords, grid_.metric) <= threshold_;
    }

    /** Alive points within scale of points_[k], ascending index. */
    std::vector<std::size_t> window(std::size_t k, const std::vector<bool>& alive) const
    {
        std::vector<std::size_t> out;
        const LatticePoint& x = points_[k];
        const std::size_t last = x.dim() - 1;
        for (std::size_t j = k + 1; j < points_.size(); ++j) {
            // sorted by last coordinate first; once it is too far every later point is too
            if (points_[j][last] - x[last] > threshold_)
                break;
            if (alive[j] && close(x, points_[j]))
                out.push_back(j);
        }
        return out;
    }

private:
    void enumerate()
    {
        std::vector<Coord> cur;
        for (const auto& r : grid_.ranges)
            cur.push_back(r.lo);
        while (true) {
            points_.emplace_back(cur);
            std::size_t i = 0;
            for (; i < cur.size(); ++i) {
                if (cur[i] < grid_.ranges[i].hi) {
                    ++cur[i];
                    break;
                }
                cur[i] = grid_.ranges[i].lo;
            }
            if (i == cur.size())
                break;
        }
        std::sort(points_.begin(), points_.end(),
                  [](const LatticePoint& a, const LatticePoint& b) { return lex_compare(a, b) < 0; });
        for (std::size_t i = 0; i < points_.size(); ++i)
            index_.emplace(points_[i], i);
    }

    const GridSpec& grid_;
    std::int64_t threshold_ = 0;
    std::vector<LatticePoint> points_;
    std::unordered_map<LatticePoint, std::size_t, LatticePointHash> index_;
};

// Maximal cliques of a small dense graph given as an adjacency matrix.
class MaximalCliques
{
public:
    explicit MaximalCliques(const std::vector<std::vector<char>>& adj) : adj_(adj) {}

    std::vector<std::vector<std::size_t>> all()
    {
        std::vector<std::size_t> r;
        std::vector<std::size_t> p(adj_.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            p[i] = i;
        expand(r, p, {});
        return std::move(out_);
    }

private:
    void expand(std::vector<std::size_t>& r, std::vector<std::size_t> p, std::vector<std::size_t> x)
    {
        if (p.empty() && x.empty()) {
            out_.push_back(r);
            return;
        }
        std::size_t pivot = p.empty() ? x.front() : p.front();
        std::size_t best = 0;
        for (const auto* set : {&p, &x})
            for (std::size_t u : *set) {
                std::size_t c = 0;
                for (std::size_t v : p)
                    c += adj_[u][v] ? 1 : 0;
                if (c > best) {
                    best = c;
                    pivot = u;
                }
            }
        std::vector<std::size_t> branch;
        for (std::size_t v : p)
            if (!adj_[pivot][v])
                branch.push_back(v);
        for (std::size_t v : branch) {
            std::vector<std::size_t> np;
            std::vector<std::size_t> nx;
            for (std::size_t u : p)
                if (adj_[v][u])
                    np.push_back(u);
            for (std::size_t u : x)
                if (adj_[v][u])
                    nx.push_back(u);
            r.push_back(v);
            expand(r, std::move(np), std::move(nx));
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    }

    const std::vector<std::vector<char>>& adj_;
    std::vector<std::vector<std::size_t>> out_;
};

VerificationReport fail(VerificationStatus status, std::optional<std::size_t> step, std::string reason,
                        std::size_t checked)
{
    VerificationReport r;
    r.status = status;
    r.failing_step = step;
    r.reason = std::move(reason);
    r.steps_checked = checked;
    return r;
}

}  // namespace

VerificationReport verify_certificate(const CrushCertificate& cert)
{
    try {
        cert.grid.validate();
    } catch (const std::exception& e) {
        return fail(VerificationStatus::Malformed, std::nullopt, std::string("bad grid: ") + e.what(), 0);
    }
    const std::size_t dim = cert.grid.dim();
    for (std::size_t k = 0; k < cert.steps.size(); ++k) {
        const auto& s = cert.steps[k];
        if (s.point.dim() != dim)
            return fail(VerificationStatus::Malformed, k, "point has wrong dimension", 0);
        if (s.witness.empty())
            return fail(VerificationStatus::Malformed, k, "empty witness", 0);
        for (const auto& w : s.witness)
            if (w.dim() != dim)
                return fail(VerificationStatus::Malformed, k, "witness point has wrong dimension", 0);
    }
    if (cert.terminal.dim() != dim)
        return fail(VerificationStatus::Malformed, std::nullopt, "terminal point has wrong dimension", 0);

    const Replay replay(cert.grid);
    const auto& pts = replay.points();
    std::vector<bool> alive(pts.size(), true);

    for (std::size_t k = 0; k < cert.steps.size(); ++k) {
        const auto& step = cert.steps[k];
        if (k + 1 >= pts.size())
            return fail(VerificationStatus::Invalid, k, "more steps than the grid allows", k);
        if (step.point != pts[k])
            return fail(VerificationStatus::Invalid, k,
                        "order violation: step removes " + to_string(step.point) + " but the lex-least alive point is " +
                            to_string(pts[k]),
                        k);
        const StepMode expected = step.witness.size() == 1 ? StepMode::Dominated : StepMode::LocallyDominated;
        if (step.mode != expected)
            return fail(VerificationStatus::Invalid, k, "mode does not match witness size", k);

        std::vector<std::size_t> wit;
        for (const auto& w : step.witness) {
            const auto idx = replay.index_of(w);
            if (!idx)
                return fail(VerificationStatus::Invalid, k, "witness point " + to_string(w) + " is not in the grid", k);
            if (*idx == k)
                return fail(VerificationStatus::Invalid, k, "witness contains the removed point", k);
            if (!alive[*idx])
                return fail(VerificationStatus::Invalid, k, "witness point " + to_string(w) + " was already removed", k);
            if (std::find(wit.begin(), wit.end(), *idx) != wit.end())
                return fail(VerificationStatus::Invalid, k, "witness repeats a point", k);
            wit.push_back(*idx);
        }
        for (std::size_t i = 0; i < wit.size(); ++i)
            for (std::size_t j = i + 1; j < wit.size(); ++j)
                if (!replay.close(pts[wit[i]], pts[wit[j]]))
                    return fail(VerificationStatus::Invalid, k, "witness diameter exceeds the scale", k);

        const auto win = replay.window(k, alive);
        std::vector<std::vector<char>> adj(win.size(), std::vector<char>(win.size(), 0));
        for (std::size_t i = 0; i < win.size(); ++i)
            for (std::size_t j = i + 1; j < win.size(); ++j)
                adj[i][j] = adj[j][i] = replay.close(pts[win[i]], pts[win[j]]) ? 1 : 0;

        std::vector<std::size_t> useful;  // witness members adjacent to the removed point
        for (std::size_t w : wit)
            if (replay.close(pts[k], pts[w]))
                useful.push_back(w);

        for (const auto& clique : MaximalCliques(adj).all()) {
            bool extended = false;
            for (std::size_t w : useful) {
                bool ok = true;
                for (std::size_t li : clique)
                    if (win[li] != w && !replay.close(pts[win[li]], pts[w])) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    extended = true;
                    break;
                }
            }
            if (!extended) {
                std::string members = "{" + to_string(pts[k]);
                for (std::size_t li : clique)
                    members += "," + to_string(pts[win[li]]);
                members += "}";
                return fail(VerificationStatus::Invalid, k, "maximal simplex " + members + " extends by no witness point", k);
            }
        }
        alive[k] = false;
    }

    if (cert.steps.size() + 1 != pts.size())
        return fail(VerificationStatus::Invalid, std::nullopt,
                    "certificate has " + std::to_string(cert.steps.size()) + " steps, grid needs " +
                        std::to_string(pts.size() - 1),
                    cert.steps.size());
    if (cert.terminal != pts.back())
        return fail(VerificationStatus::Invalid, std::nullopt, "terminal point is not the lex-greatest grid point",
                    cert.steps.size());

    VerificationReport ok;
    ok.steps_checked = cert.steps.size();
    return ok;
}

}  // namespace ripscrush
