#pragma once

#include <string>

#include "constructions.hpp"
#include "geometry.hpp"

namespace hilbert {

/// JSON text for a domain. Circle-inscribed polygons are written as angles,
/// or as arithmetic runs when they were built from runs; doubles are written
/// in shortest round-trip form so parsing gives back identical bits.
std::string domain_to_json(const ConvexDomain& domain, const ConstructionReport* report = nullptr);

/// Throws ParseError on malformed text or an unknown type, and the geometry
/// errors for invalid shapes. Members other than the shape (such as the
/// construction report) are ignored.
ConvexDomain domain_from_json(const std::string& text);

std::string report_to_json(const ConstructionReport& report);

}  // namespace hilbert
