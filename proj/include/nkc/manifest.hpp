#pragma once

#include "nkc/contact.hpp"

#include <string>
#include <string_view>

namespace nkc {

struct LoadedManifest {
  FrameManifold manifold;
  AlmostContactData structure;
};

// JSON document
//   { "dimension": 3, "parameters": ["lambda"],
//     "structure_constants": [{"i": 1, "j": 2, "k": 3, "coeff": "1+lambda"}, ...],
//     "contact": {"xi": 1, "eta": ["1","0","0"], "phi": [["0","0","0"], ...]} }
// Indices are 1-based; phi is row-major with (phi X)^r = sum_c phi[r][c] X^c;
// xi is a frame index or a component list. Collects every problem into a
// ManifestError whose entries are prefixed by the offending path.
LoadedManifest load_manifest(std::string_view document);

// Canonical document: sparse constants in (i, j, k) order, coefficients and
// components in the printer's canonical form, two-space indentation.
std::string emit_manifest(const FrameManifold& m, const AlmostContactData& s);

// FNV-1a 64-bit hash of the canonical manifest, as 16 hex digits.
std::string manifest_hash(const FrameManifold& m, const AlmostContactData& s);

inline constexpr const char* engine_version = "nkc 1.0.0";

}  // namespace nkc
