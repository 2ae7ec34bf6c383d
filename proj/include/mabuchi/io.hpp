#pragma once

#include <string>
#include <string_view>

#include "mabuchi/admissible.hpp"
#include "mabuchi/classify.hpp"
#include "mabuchi/pn_bundles.hpp"
#include "mabuchi/profile.hpp"

namespace mabuchi {

enum class Format { Table, Csv, Json };

/// "table", "csv" or "json"; throws ParseError otherwise.
Format parse_format(std::string_view name);

/// Parses a manifold manifest:
///   {"d0": 0, "d_inf": 1, "factors": [{"d": 1, "epsilon": 1, "s": "2"}]}
///   {"pn_bundle": {"n": 1, "k": 1, "d0": 0, "d_inf": 1}}
/// Rationals are "p/q" strings (plain JSON integers are accepted too).
/// Throws ParseError on malformed input and NotFano for non-Fano data.
AdmissibleManifold parse_manifest(std::string_view json_text);

/// Parses "n,k,d0,d_inf".
PnTuple parse_pn_tuple(std::string_view text);

/// Decimal renderings accompany the exact values and use this many
/// fractional digits.
inline constexpr unsigned kDecimalDigits = 20;

std::string render_classification(const AdmissibleManifold& m, const ClassificationReport& r, Format format);
std::string render_mabuchi_constant(const AdmissibleManifold& m, const BigRational& value, Format format);
std::string render_scan(const ScanBounds& bounds, const ScanResult& scan, Format format, bool verbose);

struct ProfileExport {
  const Weight* weight = nullptr;
  const Profile* profile = nullptr;
  ProfileVerification verification;
  bool ode_identity = false;
  bool primitive_identity = false;
};

/// CSV output is the sample table "x,theta"; JSON carries exact coefficients
/// and, when samples > 0, the same samples.
std::string render_profile(const AdmissibleManifold& m, const ProfileExport& e, Format format, unsigned samples);

/// `samples` > 0 adds a tabulated KR profile (CSV switches to "x,theta").
std::string render_kr(const AdmissibleManifold& m, const KrSolution& s, const KrConfig& config, Format format,
                      unsigned samples);

}  // namespace mabuchi
