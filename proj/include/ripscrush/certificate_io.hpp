#pragma once

/**
 * JSON forms of certificates and verification reports. Every number is an
 * integer; the scale is split into numerator and denominator.
 *
 * Certificate:
 *   {"version": 1,
 *    "grid": {"dim": n, "ranges": [[lo, hi], ...], "metric": "d1",
 *             "scale_num": p, "scale_den": q, "m": m},
 *    "steps": [{"point": [..], "witness": [[..], ..], "mode": "dominated"}, ..],
 *    "terminal": [..]}
 */

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ripscrush/crush.hpp"

namespace ripscrush {

inline constexpr int kCertificateVersion = 1;

class CertificateFormatError : public std::runtime_error
{
public:
    explicit CertificateFormatError(const std::string& what) : std::runtime_error(what) {}
};

nlohmann::json grid_to_json(const GridSpec& grid);
GridSpec grid_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CrushCertificate& cert);
/** Throws CertificateFormatError on any schema violation. */
CrushCertificate certificate_from_json(const nlohmann::json& j);

/** Canonical text: compact JSON plus a trailing newline. */
std::string dump_certificate(const CrushCertificate& cert);
CrushCertificate parse_certificate(const std::string& text);

nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const CrushFailure& failure);
nlohmann::json to_json(const LatticePoint& p);

}  // namespace ripscrush
