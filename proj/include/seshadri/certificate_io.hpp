#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "seshadri/abelian_bounds.hpp"

namespace seshadri {

// Certificate documents are emitted as JSON with deterministic key order
// and exact values only: arbitrary-precision integers and rationals as
// decimal strings ("p" or "p/q"), radicals as {radicand, index}. The
// "approx" field on radicals is display-only and never authoritative.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json rational_json(const Rational& q);  // string
Json radical_json(const Radical& r);    // {radicand, index, approx}
Json bounds_json(const SeshadriBounds& b);
Json witness_json(const DivisorWitness& w);
Json bound_report_json(const BoundReport& r);
Json step_json(const InequalityStep& s, const std::string& xvar, const std::string& yvar);

Rational rational_from_json(const Json& j);
Radical radical_from_json(const Json& j);
InequalityStep step_from_json(const Json& j);

// Document builders. Each runs its verification replay in-process and sets
// "verified" accordingly; builders never emit verified = true otherwise.
Json surface_document(const Int& l2, const std::optional<Int>& alpha);
Json abelian_document(unsigned g, const std::string& kind);
Json floor_scan_document(const Int& from, const Int& to);
Json violation_scan_document(const Int& l2, const Int& alpha, const Int& dmax, const Int& mmax);
Json reproduce_paper_document();

// Canonical byte-stable serialization of a document.
std::string dump_document(const Json& doc);

struct ReverifyResult {
    bool ok = false;
    std::string reason;
};

// Replays a previously emitted document: parses the inputs, recomputes the
// result with the same code paths, compares exactly, and re-runs the step
// chain verifier where one is embedded.
ReverifyResult reverify_document(const Json& doc);

// Human-readable rendering of a document (the --pretty view).
std::string render_pretty(const Json& doc);

}  // namespace seshadri
