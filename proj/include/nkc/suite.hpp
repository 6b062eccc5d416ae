#pragma once

#include "nkc/contact.hpp"
#include "nkc/report.hpp"
#include "nkc/tensor.hpp"

#include <string>

namespace nkc {

enum class Suite { frame, nkappa, gtw, concircular, all };

Suite parse_suite(const std::string& name);
std::string to_string(Suite s);

// Ordered report for the selected suite, with provenance filled in. Suites
// beyond "frame" are gated on a contact metric structure with detected kappa;
// when the gate fails they contribute not_applicable entries only.
VerificationReport run_suite(const FrameManifold& m, const AlmostContactData& s, Suite suite);

// Component values of the chosen connection: Gamma, torsion (GTW only),
// nonzero curvature components, Ricci and scalar curvature.
VerificationReport curvature_report(const FrameManifold& m, const AlmostContactData& s, ConnectionKind kind);

}  // namespace nkc
