#include "ripscrush/certificate_io.hpp"

namespace ripscrush {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what)
{
    throw CertificateFormatError(what);
}

const json& field(const json& j, const char* key)
{
    if (!j.is_object())
        bad(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end())
        bad(std::string("missing field '") + key + "'");
    return *it;
}

std::int64_t integer(const json& j, const char* what)
{
    if (!j.is_number_integer())
        bad(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

LatticePoint point_from_json(const json& j, const char* what)
{
    if (!j.is_array())
        bad(std::string(what) + " must be an array of integers");
    LatticePoint p;
    for (const auto& c : j)
        p.coords.push_back(integer(c, what));
    return p;
}

}  // namespace

json to_json(const LatticePoint& p)
{
    return json(p.coords);
}

json grid_to_json(const GridSpec& grid)
{
    json ranges = json::array();
    for (const auto& r : grid.ranges)
        ranges.push_back({r.lo, r.hi});
    return {
        {"dim", grid.dim()},
        {"ranges", ranges},
        {"metric", grid.metric.name()},
        {"scale_num", numerator_i64(grid.scale)},
        {"scale_den", denominator_i64(grid.scale)},
        {"m", grid.m},
    };
}

GridSpec grid_from_json(const json& j)
{
    GridSpec g;
    const auto dim = integer(field(j, "dim"), "grid.dim");
    const json& ranges = field(j, "ranges");
    if (!ranges.is_array() || static_cast<std::int64_t>(ranges.size()) != dim || dim <= 0)
        bad("grid.ranges must hold one [lo, hi] pair per dimension");
    for (const auto& r : ranges) {
        if (!r.is_array() || r.size() != 2)
            bad("grid.ranges entries must be [lo, hi]");
        g.ranges.push_back({integer(r[0], "range bound"), integer(r[1], "range bound")});
    }
    const json& metric = field(j, "metric");
    if (!metric.is_string())
        bad("grid.metric must be a string");
    try {
        g.metric = MetricSpec::parse(metric.get<std::string>());
    } catch (const std::invalid_argument& e) {
        bad(e.what());
    }
    const auto num = integer(field(j, "scale_num"), "grid.scale_num");
    const auto den = integer(field(j, "scale_den"), "grid.scale_den");
    if (den <= 0)
        bad("grid.scale_den must be positive");
    g.scale = Rational(num, den);
    g.m = integer(field(j, "m"), "grid.m");
    try {
        g.validate();
    } catch (const std::invalid_argument& e) {
        bad(e.what());
    }
    return g;
}

json to_json(const CrushCertificate& cert)
{
    json steps = json::array();
    for (const auto& s : cert.steps) {
        json wit = json::array();
        for (const auto& w : s.witness)
            wit.push_back(to_json(w));
        steps.push_back({{"point", to_json(s.point)}, {"witness", wit}, {"mode", to_string(s.mode)}});
    }
    return {
        {"version", kCertificateVersion},
        {"grid", grid_to_json(cert.grid)},
        {"steps", steps},
        {"terminal", to_json(cert.terminal)},
    };
}

CrushCertificate certificate_from_json(const json& j)
{
    const auto version = integer(field(j, "version"), "version");
    if (version != kCertificateVersion)
        bad("unsupported certificate version " + std::to_string(version));
    CrushCertificate cert;
    cert.grid = grid_from_json(field(j, "grid"));
    const json& steps = field(j, "steps");
    if (!steps.is_array())
        bad("steps must be an array");
    for (const auto& s : steps) {
        CrushStep step;
        step.point = point_from_json(field(s, "point"), "step.point");
        const json& wit = field(s, "witness");
        if (!wit.is_array())
            bad("step.witness must be an array of points");
        for (const auto& w : wit)
            step.witness.push_back(point_from_json(w, "witness point"));
        const json& mode = field(s, "mode");
        if (!mode.is_string())
            bad("step.mode must be a string");
        try {
            step.mode = parse_step_mode(mode.get<std::string>());
        } catch (const std::invalid_argument& e) {
            bad(e.what());
        }
        cert.steps.push_back(std::move(step));
    }
    cert.terminal = point_from_json(field(j, "terminal"), "terminal");
    return cert;
}

std::string dump_certificate(const CrushCertificate& cert)
{
    return to_json(cert).dump() + "\n";
}

CrushCertificate parse_certificate(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("not valid JSON: ") + e.what());
    }
    return certificate_from_json(j);
}

json to_json(const VerificationReport& report)
{
    json j;
    j["valid"] = report.valid();
    j["failing_step"] = report.failing_step ? json(*report.failing_step) : json(nullptr);
    j["reason"] = report.reason ? json(*report.reason) : json(nullptr);
    j["steps_checked"] = report.steps_checked;
    return j;
}

json to_json(const CrushFailure& failure)
{
    json window = json::array();
    for (const auto& p : failure.window)
        window.push_back(to_json(p));
    return {
        {"step", failure.step},
        {"stuck", to_json(failure.stuck)},
        {"window", window},
        {"remaining", failure.remaining},
    };
}

}  // namespace ripscrush
