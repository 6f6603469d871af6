#pragma once

#include <string>

#include "sobwave/conic.hpp"
#include "sobwave/spectral.hpp"

namespace sobwave {

// Binary container for spectral fields: the ASCII magic "SOBW", a u32
// version, u32 dim, u32 N, a length-prefixed provenance string, then the
// row-major coefficient array in natural FFT frequency order as
// little-endian float64 (re, im) pairs.
void write_spectral(const SpectralDistribution& u, const std::string& path);
SpectralDistribution read_spectral(const std::string& path);

// Conic sets as JSON: a list of {boxes: [[lo,hi],...] (or [[lox,hix,loy,hiy],...]
// for dim 2), cone: {centers: [angles in radians, or +-1 signs for dim 1],
// half_angle}} entries, one per maximal arc of each part's direction mask.
std::string conic_to_json(const ConicRegionSet& l);
ConicRegionSet conic_from_json(const std::string& json_text);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace sobwave
