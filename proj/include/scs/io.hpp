#pragma once

// File formats.
//
//   sequence JSON  {"length": L, "domain": "time"|"frequency",
//                   "alphabet_order": P|null, "values": [[re, im], ...]}
//   family JSON    {"L", "K", "M", "omega": [...], "alphabet_order", "params",
//                   "sets": [[<sequence JSON>, ...], ...]}
//   profile CSV    tau,re,im,mag
//   spectrum CSV   f,power,forbidden
//
// Reals are written with 17 significant digits so a reload is bit-exact.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "scs/bounds.hpp"
#include "scs/core.hpp"
#include "scs/spectral.hpp"

namespace scs::io {

/// Raised for malformed or inconsistent input files.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_sequence(std::ostream& os, const ComplexSeq& seq, std::optional<int> alphabet_order = std::nullopt);
ComplexSeq read_sequence(std::istream& is);

void write_family(std::ostream& os, const ScsFamily& family);
ScsFamily read_family(std::istream& is);

void write_profile_csv(std::ostream& os, const CorrelationProfile& profile);
void write_spectrum_csv(std::ostream& os, const spectral::SpectrumReport& report,
                        const SpectralConstraint& constraint);

std::string bounds_report_json(const bounds::BoundsReport& report);

/// Ω listed ascending, comma separated.
std::string format_omega(const SpectralConstraint& constraint);

std::string format_real(double v);

}  // namespace scs::io
