#pragma once

#include <string>

#include "mgs/quiver.hpp"
#include "mgs/verify.hpp"

namespace mgs {

inline constexpr int kQuiverDocumentVersion = 1;

/// Version-tagged JSON document:
///   {"version": 1,
///    "vertices": [{"id": 0, "label": "c_1", "frozen": false}, ...],
///    "arrows":   [{"src": 0, "dst": 1, "mult": 1}, ...]}
/// Vertices serialize in id order, arrows sorted by (src, dst), so output is
/// deterministic and parse(serialize(q)) == q.
std::string quiver_to_json(const IceQuiver& q);

/// Parses a quiver document. Vertex ids may be arbitrary unique integers;
/// they are re-densified in order of appearance (labels are the stable
/// addressing scheme). Structural violations are rejected with a
/// DocumentError naming the offending entry.
IceQuiver quiver_from_json(const std::string& text);

/// Sequence documents are whitespace-separated vertex labels; '#' starts a
/// comment that runs to end of line.
MutationSequence sequence_from_text(const std::string& text);

/// Normalized form: one label per line, newline-terminated.
std::string sequence_to_text(const MutationSequence& seq);

/// Graphviz DOT export. Mutable vertices are ellipses filled with their
/// current color, frozen vertices are boxes; multiplicities above 1 appear
/// as edge labels.
std::string quiver_to_dot(const IceQuiver& q);

/// Verification report as a JSON object (accepted, failure_step,
/// failure_kind, sequence_length, final color histogram).
std::string report_to_json(const VerificationReport& report);

/// Full trace as JSON: initial document plus one entry per step.
std::string trace_to_json(const Trace& trace);

} // namespace mgs
