#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ripscrush/bench.hpp"
#include "ripscrush/cases.hpp"
#include "ripscrush/certificate_io.hpp"
#include "ripscrush/geometry.hpp"
#include "ripscrush/homology.hpp"
#include "ripscrush/sampling.hpp"
#include "ripscrush/snap_proposer.hpp"

namespace ripscrush::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error
{
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct RunConfig
{
    std::string subcommand;
    std::size_t dim = 0;
    std::vector<std::string> ranges;
    std::string points_file;
    std::string metric = "d1";
    std::string scale = "1";
    std::int64_t m = 1;
    std::size_t max_witness_size = 0;
    std::size_t k_max = kDefaultHomologyDegree;
    std::string out;
    std::string report;
    unsigned threads = 1;
    std::size_t cap = kDefaultSimplexCap;
    std::uint64_t seed = 1;
    std::size_t trials = 0;
    std::size_t max_dim = 6;
    bool no_memo = false;
    bool snap = false;
    std::string anchor;
    bool lex_context = false;
    std::string kappa;
    std::string rho;
    std::string certificate;
    std::vector<Coord> sizes{4, 6, 8, 10};
    unsigned repeats = 3;
    std::size_t limit = 0;
};

std::size_t default_cap()
{
    if (const char* env = std::getenv("RIPSCRUSH_SIMPLEX_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("RIPSCRUSH_SIMPLEX_CAP is not a count: ") + env);
        }
    }
    return kDefaultSimplexCap;
}

AxisRange parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw UsageError("range must look like lo..hi, got '" + text + "'");
    try {
        std::size_t used = 0;
        AxisRange r;
        r.lo = std::stoll(text.substr(0, dots), &used);
        if (used != dots)
            throw UsageError("bad range '" + text + "'");
        const std::string hi = text.substr(dots + 2);
        r.hi = std::stoll(hi, &used);
        if (used != hi.size())
            throw UsageError("bad range '" + text + "'");
        return r;
    } catch (const std::logic_error&) {
        throw UsageError("bad range '" + text + "'");
    }
}

Rational parse_positive(const std::string& text, const char* what)
{
    Rational v;
    try {
        v = parse_rational(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(what) + " must be a rational p/q, got '" + text + "'");
    }
    if (v <= 0)
        throw UsageError(std::string(what) + " must be positive, got '" + text + "'");
    return v;
}

struct PointFile
{
    std::vector<LatticePoint> points;
    std::size_t dim = 0;
    std::int64_t m = 1;
};

PointFile read_points(const std::string& path, std::int64_t default_m)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open point file '" + path + "'");
    PointFile pf;
    pf.m = default_m;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string tok;
            while (hs >> tok) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos)
                    continue;
                const std::string key = tok.substr(0, eq);
                const std::string val = tok.substr(eq + 1);
                try {
                    if (key == "dim")
                        pf.dim = std::stoull(val);
                    else if (key == "m")
                        pf.m = std::stoll(val);
                } catch (const std::logic_error&) {
                    throw UsageError(path + ":" + std::to_string(lineno) + ": bad header value '" + tok + "'");
                }
            }
            continue;
        }
        std::istringstream ls(line);
        LatticePoint p;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                p.coords.push_back(std::stoll(tok, &used));
                if (used != tok.size())
                    throw std::invalid_argument(tok);
            } catch (const std::logic_error&) {
                throw UsageError(path + ":" + std::to_string(lineno) + ": not an integer '" + tok + "'");
            }
        }
        if (p.coords.empty())
            continue;
        if (pf.dim == 0)
            pf.dim = p.dim();
        if (p.dim() != pf.dim)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected " + std::to_string(pf.dim) +
                             " coordinates, got " + std::to_string(p.dim()));
        pf.points.push_back(std::move(p));
    }
    if (pf.points.empty())
        throw UsageError("point file '" + path + "' has no points");
    if (pf.m <= 0)
        throw UsageError("m must be positive");
    return pf;
}

class Runner
{
public:
    // Reports go to --out or stdout; one-line summaries go to stdout only when it is free.
    Runner(RunConfig cfg, std::ostream& out, std::ostream& err)
        : cfg_(std::move(cfg)), out_(out), say_(cfg_.out.empty() ? err : out)
    {
    }

    int dispatch()
    {
        metric_ = MetricSpec::parse(cfg_.metric);
        if (cfg_.m <= 0)
            throw UsageError("--m must be positive");
        if (cfg_.threads == 0)
            throw UsageError("--threads must be positive");
        const auto& s = cfg_.subcommand;
        if (s == "crush")
            return crush_cmd();
        if (s == "verify")
            return verify_cmd();
        if (s == "witness")
            return witness_cmd();
        if (s == "homology")
            return homology_cmd();
        if (s == "jung")
            return jung_cmd();
        if (s == "lec")
            return lec_cmd();
        if (s == "cases")
            return cases_cmd();
        if (s == "bench")
            return bench_cmd();
        throw UsageError("a subcommand is required");
    }

private:
    RunConfig cfg_;
    std::ostream& out_;
    std::ostream& say_;
    MetricSpec metric_;

    json config_json() const
    {
        json c{{"subcommand", cfg_.subcommand}, {"metric", metric_.name()}, {"scale", cfg_.scale},
               {"m", cfg_.m},
               {"threads", cfg_.threads}};
        if (cfg_.dim)
            c["dim"] = cfg_.dim;
        if (!cfg_.ranges.empty())
            c["ranges"] = cfg_.ranges;
        if (!cfg_.points_file.empty())
            c["points"] = cfg_.points_file;
        if (!cfg_.certificate.empty())
            c["certificate"] = cfg_.certificate;
        const auto& s = cfg_.subcommand;
        if (s == "crush" || s == "witness" || s == "cases")
            c["max_witness_size"] = cfg_.max_witness_size;
        if (s == "crush") {
            c["memoize"] = !cfg_.no_memo;
            c["snap"] = cfg_.snap;
        }
        if (s == "witness") {
            c["anchor"] = cfg_.anchor;
            c["lex_context"] = cfg_.lex_context;
        }
        if (s == "homology") {
            c["k_max"] = cfg_.k_max;
            c["simplex_cap"] = cfg_.cap;
        }
        if (s == "jung" || s == "lec") {
            c["seed"] = cfg_.seed;
            c["trials"] = cfg_.trials;
        }
        if (s == "lec") {
            c["kappa"] = cfg_.kappa;
            c["rho"] = cfg_.rho;
        }
        if (s == "bench") {
            c["sizes"] = cfg_.sizes;
            c["repeats"] = cfg_.repeats;
        }
        if (s == "cases")
            c["limit"] = cfg_.limit;
        return c;
    }

    json envelope(json result) const
    {
        return json{{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
                    {"config", config_json()},
                    {"result", std::move(result)}};
    }

    void write_text(const std::string& path, const std::string& text) const
    {
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw UsageError("cannot write '" + path + "'");
        f << text;
    }

    /** Report JSON to --out if given, otherwise to stdout. */
    void emit(const json& report, const std::string& path) const
    {
        const std::string text = report.dump(2) + "\n";
        if (path.empty())
            out_ << text;
        else
            write_text(path, text);
    }

    Rational scale() const { return parse_positive(cfg_.scale, "--scale"); }

    void check_dim(std::size_t n) const
    {
        if (n == 0)
            throw UsageError("dimension must be positive");
        if (n > cfg_.max_dim)
            throw UsageError("dimension " + std::to_string(n) + " exceeds --max-dim " + std::to_string(cfg_.max_dim));
    }

    std::optional<GridSpec> grid_from_flags() const
    {
        if (cfg_.ranges.empty())
            return std::nullopt;
        GridSpec g;
        g.metric = metric_;
        g.scale = scale();
        g.m = cfg_.m;
        if (cfg_.ranges.size() == 1) {
            const std::size_t n = cfg_.dim ? cfg_.dim : 1;
            check_dim(n);
            g.ranges.assign(n, parse_range(cfg_.ranges.front()));
        } else {
            if (cfg_.dim && cfg_.dim != cfg_.ranges.size())
                throw UsageError("--dim " + std::to_string(cfg_.dim) + " disagrees with " +
                                 std::to_string(cfg_.ranges.size()) + " ranges");
            check_dim(cfg_.ranges.size());
            for (const auto& r : cfg_.ranges)
                g.ranges.push_back(parse_range(r));
        }
        try {
            g.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return g;
    }

    /** Points as numerators plus their denominator, from a grid or a file. */
    PointFile source() const
    {
        if (!cfg_.points_file.empty()) {
            if (!cfg_.ranges.empty())
                throw UsageError("give either --range or --points, not both");
            PointFile pf = read_points(cfg_.points_file, cfg_.m);
            check_dim(pf.dim);
            if (cfg_.dim && cfg_.dim != pf.dim)
                throw UsageError("--dim disagrees with the point file");
            return pf;
        }
        const auto grid = grid_from_flags();
        if (!grid)
            throw UsageError("a point source is required: --range or --points");
        return {grid->points(), grid->dim(), grid->m};
    }

    int crush_cmd()
    {
        const auto grid = grid_from_flags();
        if (!grid)
            throw UsageError("crush needs --range (and --dim)");
        CrushOptions opts;
        opts.max_witness_size = cfg_.max_witness_size;
        opts.memoize = !cfg_.no_memo;
        opts.threads = cfg_.threads;
        if (cfg_.snap)
            opts.proposer = make_snap_proposer();
        const CrushOutcome res = crush(*grid, opts);

        json stats{{"steps", res.stats.steps},
                   {"searches", res.stats.searches},
                   {"cache_hits", res.stats.cache_hits},
                   {"proposer_hits", res.stats.proposer_hits},
                   {"distinct_patterns", res.stats.distinct_patterns}};
        if (res.ok()) {
            if (cfg_.out.empty())
                out_ << dump_certificate(*res.certificate);
            else
                write_text(cfg_.out, dump_certificate(*res.certificate));
            if (!cfg_.report.empty())
                write_text(cfg_.report, envelope({{"status", "crushed"}, {"stats", stats}}).dump(2) + "\n");
            std::size_t largest = 0;
            for (const auto& s : res.certificate->steps)
                largest = std::max(largest, s.witness.size());
            say_ << "crushed " << grid->point_count() << " points in " << res.stats.steps
                 << " steps; largest witness " << largest << "; terminal "
                 << to_string(res.certificate->terminal) << "\n";
            return kOk;
        }
        const json report = envelope({{"status", "stuck"}, {"failure", to_json(*res.failure)}, {"stats", stats}});
        emit(report, cfg_.out);
        if (!cfg_.report.empty())
            write_text(cfg_.report, report.dump(2) + "\n");
        say_ << "stuck at step " << res.failure->step << " on point " << to_string(res.failure->stuck) << " with "
             << res.failure->window.size() << " alive neighbours\n";
        return kMathFailure;
    }

    int verify_cmd()
    {
        if (cfg_.certificate.empty())
            throw UsageError("verify needs a certificate file");
        std::ifstream in(cfg_.certificate, std::ios::binary);
        if (!in)
            throw UsageError("cannot open certificate '" + cfg_.certificate + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        CrushCertificate cert;
        try {
            cert = parse_certificate(buf.str());
        } catch (const CertificateFormatError& e) {
            emit(envelope({{"valid", false}, {"status", "unreadable"}, {"reason", e.what()}}), cfg_.out);
            say_ << "unreadable certificate: " << e.what() << "\n";
            return kUsageError;
        }
        metric_ = cert.grid.metric;
        cfg_.scale = to_string(cert.grid.scale);
        cfg_.m = cert.grid.m;
        const VerificationReport rep = verify_certificate(cert);
        json result = to_json(rep);
        result["status"] = rep.status == VerificationStatus::Valid     ? "valid"
                           : rep.status == VerificationStatus::Invalid ? "invalid"
                                                                       : "malformed";
        emit(envelope(result), cfg_.out);
        if (rep.valid()) {
            say_ << "valid: " << rep.steps_checked << " steps checked\n";
            return kOk;
        }
        say_ << "invalid at step " << (rep.failing_step ? std::to_string(*rep.failing_step) : std::string("-"))
             << ": " << rep.reason.value_or("") << "\n";
        return kMathFailure;
    }

    LatticePoint parse_anchor(std::size_t n) const
    {
        LatticePoint p;
        std::string text = cfg_.anchor;
        std::replace(text.begin(), text.end(), ',', ' ');
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            try {
                p.coords.push_back(std::stoll(tok));
            } catch (const std::logic_error&) {
                throw UsageError("bad anchor coordinate '" + tok + "'");
            }
        }
        if (p.dim() != n)
            throw UsageError("anchor needs " + std::to_string(n) + " coordinates");
        return p;
    }

    int witness_cmd()
    {
        PointFile pf = source();
        if (cfg_.anchor.empty())
            throw UsageError("witness needs --anchor");
        const LatticePoint anchor = parse_anchor(pf.dim);
        const NeighborhoodGraph g(pf.points, metric_, scale(), pf.m);
        const auto a = g.find(anchor);
        if (!a)
            throw UsageError("anchor " + to_string(anchor) + " is not in the point set");
        AliveMask alive = g.all_alive();
        if (cfg_.lex_context)
            for (VertexId v = 0; v < g.size(); ++v)
                alive[v] = lex_compare(g.point(v), anchor) >= 0;
        const std::size_t max_size = cfg_.max_witness_size ? cfg_.max_witness_size : pf.dim;
        const auto found = find_witness(g, *a, default_candidates(g, *a, alive), alive, {max_size, cfg_.threads});

        json result{{"anchor", to_json(anchor)}, {"window", LocalWindow::around(g, *a, alive).size()}};
        if (!found) {
            result["found"] = false;
            emit(envelope(result), cfg_.out);
            say_ << "no witness of size <= " << max_size << " for " << to_string(anchor) << "\n";
            return kMathFailure;
        }
        json members = json::array();
        std::vector<LatticePoint> pts;
        for (VertexId v : found->members)
            pts.push_back(g.point(v));
        std::sort(pts.begin(), pts.end(), LexLess{});
        std::string listing;
        for (const auto& p : pts) {
            members.push_back(to_json(p));
            listing += " " + to_string(p);
        }
        result["found"] = true;
        result["mode"] = to_string(found->mode());
        result["witness"] = members;
        emit(envelope(result), cfg_.out);
        say_ << to_string(found->mode()) << " witness for " << to_string(anchor) << ":" << listing << "\n";
        return kOk;
    }

    int homology_cmd()
    {
        const PointFile pf = source();
        const NeighborhoodGraph g(pf.points, metric_, scale(), pf.m);
        BettiVector b;
        try {
            b = betti_numbers(g, cfg_.k_max, cfg_.cap);
        } catch (const ResourceCapExceeded& e) {
            emit(envelope({{"status", "cap-exceeded"}, {"reason", e.what()}}), cfg_.out);
            say_ << e.what() << "\n";
            return kUsageError;
        }
        emit(envelope({{"status", "computed"},
                       {"reduced_betti", b.reduced},
                       {"top_degree_exact", b.top_exact},
                       {"simplex_counts", b.simplex_counts}}),
             cfg_.out);
        say_ << "reduced F2 Betti numbers (degrees 0.." << b.k_max << "):";
        for (std::size_t k = 0; k < b.reduced.size(); ++k)
            say_ << " " << b.reduced[k] << (k == b.k_max && !b.top_exact ? " (upper bound)" : "");
        say_ << "\n";
        return kOk;
    }

    std::vector<RationalPoint> rational_source() const
    {
        const PointFile pf = source();
        std::vector<RationalPoint> pts;
        for (const auto& p : pf.points)
            pts.push_back(to_rational(p, pf.m));
        return pts;
    }

    json ball_json(const std::vector<RationalPoint>& pts) const
    {
        const EnclosingBall ball = enclosing_ball(pts, metric_);
        const Rational diam = diameter(pts, metric_).value;
        json centre = json::array();
        for (const auto& v : ball.center)
            centre.push_back(to_string(v));
        json j{{"radius", to_string(ball.radius)},
               {"center", centre},
               {"diameter", to_string(diam)},
               {"center_in_box", bounding_box(pts).contains(ball.center)}};
        if (diam > 0)
            j["ratio"] = to_string(ball.radius / diam);
        return j;
    }

    int jung_cmd()
    {
        if (cfg_.trials == 0) {
            const auto pts = rational_source();
            json result = ball_json(pts);
            const Rational bound = jung_bound(pts.front().size());
            result["bound"] = to_string(bound);
            bool ok = result["center_in_box"].get<bool>();
            if (result.contains("ratio"))
                ok = ok && parse_rational(result["ratio"].get<std::string>()) <= bound;
            result["within_bound"] = ok;
            emit(envelope(result), cfg_.out);
            say_ << "Rad " << result["radius"].get<std::string>() << ", Diam "
                 << result["diameter"].get<std::string>() << ", bound " << to_string(bound)
                 << (ok ? "" : " VIOLATED") << "\n";
            return ok ? kOk : kMathFailure;
        }
        if (metric_.kind() == Metric::L2)
            throw UsageError("jung supports d1 and dinf");
        const std::size_t max_n = cfg_.dim ? cfg_.dim : 4;
        check_dim(max_n);
        Rng rng(cfg_.seed);
        std::size_t violations = 0, degenerate = 0;
        Rational worst = 0;
        json examples = json::array();
        for (std::size_t t = 0; t < cfg_.trials; ++t) {
            const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
            const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
            const auto pts = random_integer_points(rng, n, k, -5, 5);
            const Rational diam = diameter(pts, metric_).value;
            const EnclosingBall ball = enclosing_ball(pts, metric_);
            const bool in_box = bounding_box(pts).contains(ball.center);
            if (diam == 0) {
                ++degenerate;
                if (ball.radius != 0 || !in_box)
                    ++violations;
                continue;
            }
            const Rational ratio = ball.radius / diam;
            worst = std::max(worst, ratio);
            if (ratio > jung_bound(n) || !in_box) {
                ++violations;
                if (examples.size() < 5)
                    examples.push_back({{"trial", t}, {"dim", n}, {"ratio", to_string(ratio)}});
            }
        }
        emit(envelope({{"trials", cfg_.trials},
                       {"degenerate", degenerate},
                       {"violations", violations},
                       {"max_ratio", to_string(worst)},
                       {"examples", examples}}),
             cfg_.out);
        say_ << cfg_.trials << " trials, " << violations << " violations, largest Rad/Diam " << to_string(worst)
             << "\n";
        return violations == 0 ? kOk : kMathFailure;
    }

    json lec_json(const LecConstruction& c) const
    {
        json centre = json::array();
        for (const auto& v : c.center)
            centre.push_back(to_string(v));
        json trace = json::array();
        for (const auto& e : c.trace)
            trace.push_back({{"to_center", to_string(e.to_center)}, {"convex_bound", to_string(e.convex_bound)}});
        return json{{"center", centre},
                    {"kappa", to_string(c.kappa)},
                    {"target", to_string(c.target)},
                    {"enclosing_radius", to_string(c.enclosing_radius)},
                    {"diameter", to_string(c.diameter)},
                    {"holds", c.holds()},
                    {"trace", trace}};
    }

    int lec_cmd()
    {
        if (cfg_.trials == 0) {
            const auto tau = rational_source();
            const std::size_t n = tau.front().size();
            const Rational kappa = cfg_.kappa.empty() ? jung_bound(n) : parse_positive(cfg_.kappa, "--kappa");
            const Rational rho = cfg_.rho.empty() ? (1 - kappa) / kappa : parse_positive(cfg_.rho, "--rho");
            json result;
            bool ok = true;
            try {
                const LecConstruction c = lec_center_construct(tau, kappa);
                result["construction"] = lec_json(c);
                ok = c.holds();
            } catch (const PreconditionViolation& e) {
                throw UsageError(e.what());
            }
            const LecFeasibility f = lec_feasibility(n, rho, tau);
            json fc = json::array();
            for (const auto& v : f.center)
                fc.push_back(to_string(v));
            result["verify"] = {{"rho", to_string(rho)},
                                {"holds", f.holds},
                                {"min_radius", to_string(f.min_radius)},
                                {"center", fc}};
            ok = ok && f.holds;
            emit(envelope(result), cfg_.out);
            say_ << "LEC(" << n << ", " << to_string(rho) << ") " << (f.holds ? "holds" : "fails")
                 << "; optimal radius " << to_string(f.min_radius) << "\n";
            return ok ? kOk : kMathFailure;
        }
        const std::size_t n = cfg_.dim ? cfg_.dim : 2;
        check_dim(n);
        if (n < 2)
            throw UsageError("lec needs --dim >= 2");
        Rng rng(cfg_.seed);
        const Rational kappa = jung_bound(n);
        std::size_t failures = 0;
        json examples = json::array();
        for (std::size_t t = 0; t < cfg_.trials; ++t) {
            const auto tau = random_admissible_tau(rng, n, 8, 6);
            const LecConstruction c = lec_center_construct(tau, kappa);
            const bool verified = lec_verify(n, (1 - kappa) / kappa, tau);
            if (!c.holds() || !verified) {
                ++failures;
                if (examples.size() < 5)
                    examples.push_back({{"trial", t}, {"construction", c.holds()}, {"verify", verified}});
            }
        }
        emit(envelope({{"trials", cfg_.trials}, {"dim", n}, {"kappa", to_string(kappa)}, {"failures", failures},
                       {"examples", examples}}),
             cfg_.out);
        say_ << cfg_.trials << " admissible sets in dimension " << n << ", " << failures << " failures\n";
        return failures == 0 ? kOk : kMathFailure;
    }

    int cases_cmd()
    {
        if (cfg_.dim == 0)
            throw UsageError("cases needs --dim");
        check_dim(cfg_.dim);
        const Rational r = scale();
        if (denominator_i64(r) != 1)
            throw UsageError("cases needs an integral --scale");
        CaseSearchOptions opts;
        opts.metric = metric_;
        opts.max_witness_size = cfg_.max_witness_size;
        opts.threads = cfg_.threads;
        opts.limit = cfg_.limit;
        const CaseReport rep = conjecture_search(cfg_.dim, r, opts);
        json rows = json::array();
        for (const auto& row : rep.rows) {
            json w = json::array();
            for (const auto& p : row.witness)
                w.push_back(to_json(p));
            rows.push_back({{"lower", row.config.lower},
                            {"upper", row.config.upper},
                            {"status", to_string(row.status)},
                            {"window", row.window_size},
                            {"witness", w}});
        }
        emit(envelope({{"configurations", rep.rows.size()},
                       {"witnessed", rep.count(CaseStatus::Witnessed)},
                       {"terminal", rep.count(CaseStatus::Terminal)},
                       {"failed", rep.count(CaseStatus::Failed)},
                       {"largest_witness", rep.largest_witness()},
                       {"rows", rows}}),
             cfg_.out);
        say_ << rep.rows.size() << " configurations: " << rep.count(CaseStatus::Witnessed) << " witnessed, "
             << rep.count(CaseStatus::Terminal) << " terminal, " << rep.count(CaseStatus::Failed)
             << " failed; largest witness " << rep.largest_witness() << "\n";
        return rep.all_witnessed() ? kOk : kMathFailure;
    }

    int bench_cmd()
    {
        BenchOptions opts;
        opts.dim = cfg_.dim ? cfg_.dim : 3;
        check_dim(opts.dim);
        opts.scale = scale();
        opts.metric = metric_;
        opts.extents = cfg_.sizes;
        opts.repeats = cfg_.repeats;
        opts.threads = cfg_.threads;
        if (opts.extents.empty())
            throw UsageError("bench needs at least one size");
        const auto rows = run_bench(opts);
        json jr = json::array();
        bool ok = true;
        for (const auto& r : rows) {
            ok = ok && r.ok;
            jr.push_back({{"extent", r.extent},
                          {"points", r.points},
                          {"steps", r.steps},
                          {"crushed", r.ok},
                          {"micros_memo", r.micros_memo},
                          {"micros_plain", r.micros_plain},
                          {"searches_memo", r.searches_memo},
                          {"distinct_patterns", r.distinct_patterns}});
            say_ << "N=" << r.extent << " points=" << r.points << " memo=" << r.micros_memo
                 << "us plain=" << r.micros_plain << "us patterns=" << r.distinct_patterns << "\n";
        }
        json result{{"rows", jr}};
        if (rows.size() >= 2) {
            result["linearity_plain"] = to_string(linearity_ratio(rows.front(), rows.back(), false));
            result["linearity_memo"] = to_string(linearity_ratio(rows.front(), rows.back(), true));
            say_ << "linearity ratio (plain) " << result["linearity_plain"].get<std::string>() << "\n";
        }
        emit(envelope(result), cfg_.out);
        return ok ? kOk : kMathFailure;
    }
};

void add_common(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--metric", cfg.metric, "d1, d2 or dinf");
    sub->add_option("--scale", cfg.scale, "Rips scale as p/q");
    sub->add_option("--m", cfg.m, "sublattice denominator: points are numerators over m");
    sub->add_option("--threads", cfg.threads, "worker threads");
    sub->add_option("--out", cfg.out, "output file (JSON)");
    sub->add_option("--max-dim", cfg.max_dim, "largest accepted dimension");
}

void add_source(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--dim", cfg.dim, "dimension");
    sub->add_option("--range", cfg.ranges, "axis range lo..hi (once for a cube, or once per axis)");
    sub->add_option("--points", cfg.points_file, "point file, one point per line");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    cfg.cap = kDefaultSimplexCap;
    CLI::App app{"Contractibility certificates for Rips complexes of lattice grids", kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

    auto* crush = app.add_subcommand("crush", "crush a grid lexicographically and write a certificate");
    add_common(crush, cfg);
    add_source(crush, cfg);
    crush->add_option("--max-witness-size", cfg.max_witness_size, "largest witness searched (default: dim)");
    crush->add_flag("--no-memo", cfg.no_memo, "disable pattern memoisation");
    crush->add_flag("--snap", cfg.snap, "try snapped near-centres before searching");
    crush->add_option("--report", cfg.report, "also write a run report here");

    auto* verify = app.add_subcommand("verify", "check a certificate file");
    add_common(verify, cfg);
    verify->add_option("certificate", cfg.certificate, "certificate JSON")->required();

    auto* witness = app.add_subcommand("witness", "search a witness for one anchor");
    add_common(witness, cfg);
    add_source(witness, cfg);
    witness->add_option("--anchor", cfg.anchor, "anchor coordinates, comma separated")->required();
    witness->add_option("--max-witness-size", cfg.max_witness_size, "largest witness searched (default: dim)");
    witness->add_flag("--lex-context", cfg.lex_context, "treat points before the anchor as removed");

    auto* homology = app.add_subcommand("homology", "reduced F2 Betti numbers");
    add_common(homology, cfg);
    add_source(homology, cfg);
    homology->add_option("--k-max", cfg.k_max, "top degree");
    homology->add_option("--cap", cfg.cap, "simplex count cap (env RIPSCRUSH_SIMPLEX_CAP)");

    auto* jung = app.add_subcommand("jung", "enclosing radius against diameter");
    add_common(jung, cfg);
    add_source(jung, cfg);
    jung->add_option("--trials", cfg.trials, "random point sets (0 = use the given points)");
    jung->add_option("--seed", cfg.seed, "random seed");

    auto* lec = app.add_subcommand("lec", "construct and verify near-centres");
    add_common(lec, cfg);
    add_source(lec, cfg);
    lec->add_option("--kappa", cfg.kappa, "kappa in [n/(n+1), 1)");
    lec->add_option("--rho", cfg.rho, "redundancy to verify (default (1-kappa)/kappa)");
    lec->add_option("--trials", cfg.trials, "random admissible sets (0 = use the given points)");
    lec->add_option("--seed", cfg.seed, "random seed");

    auto* cases = app.add_subcommand("cases", "witness every clipped window configuration");
    add_common(cases, cfg);
    cases->add_option("--dim", cfg.dim, "dimension")->required();
    cases->add_option("--max-witness-size", cfg.max_witness_size, "largest witness searched (default: dim)");
    cases->add_option("--limit", cfg.limit, "examine only the first configurations");

    auto* bench = app.add_subcommand("bench", "timed crush runs");
    add_common(bench, cfg);
    bench->add_option("--dim", cfg.dim, "dimension");
    bench->add_option("--sizes", cfg.sizes, "grid extents N for {0..N}^dim");
    bench->add_option("--repeats", cfg.repeats, "timing repeats (best is kept)");

    try {
        cfg.cap = default_cap();
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolName << " " << kToolVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsageError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    for (auto* sub : app.get_subcommands())
        cfg.subcommand = sub->get_name();

    try {
        return Runner(cfg, out, err).dispatch();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const ResourceCapExceeded& e) {
        err << "resource cap: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
    }
    return kUsageError;
}

}  // namespace ripscrush::cli
