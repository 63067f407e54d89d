#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgs/quiver.hpp"

namespace mgs {

/// An ordered list of mutable-vertex labels to mutate, left to right.
struct MutationSequence {
    std::vector<std::string> steps;

    MutationSequence() = default;
    explicit MutationSequence(std::vector<std::string> s) : steps(std::move(s)) {}

    std::size_t length() const { return steps.size(); }
    bool empty() const { return steps.empty(); }

    MutationSequence& append(const MutationSequence& other) {
        steps.insert(steps.end(), other.steps.begin(), other.steps.end());
        return *this;
    }

    friend bool operator==(const MutationSequence&, const MutationSequence&) = default;
};

enum class FailureKind { NotGreen, UnknownLabel, NotAllRedAtEnd };

const char* to_string(FailureKind k);

/// Per-step snapshots of a sequence application.
struct Trace {
    IceQuiver initial;
    struct Entry {
        std::string label;                        // vertex mutated at this step
        IceQuiver resulting;                      // state after the mutation
        std::map<std::string, VertexColor> colors; // mutable-vertex colors after it
    };
    std::vector<Entry> entries;

    const IceQuiver& final_state() const {
        return entries.empty() ? initial : entries.back().resulting;
    }
};

/// Non-throwing sequence application; the trace holds everything up to the
/// failing step (exclusive) when a failure is reported.
struct SequenceRun {
    Trace trace;
    std::optional<std::size_t> failure_step; // 0-based
    std::optional<FailureKind> failure;      // NotGreen or UnknownLabel

    bool completed() const { return !failure.has_value(); }
};

SequenceRun run_sequence(const IceQuiver& start, const MutationSequence& seq,
                         bool require_green);

/// Applies the sequence left to right and records every intermediate state.
/// When require_green is set, throws NotGreenAtError at the first step whose
/// target is not green. Unresolvable labels (including frozen targets) throw
/// UnknownLabelError.
Trace apply_sequence(const IceQuiver& start, const MutationSequence& seq,
                     bool require_green);

/// Outcome of checking one sequence for greenness and maximality.
struct VerificationReport {
    bool accepted = false;
    std::optional<std::size_t> failure_step; // absent for NotAllRedAtEnd
    std::optional<FailureKind> failure_kind;
    std::map<std::string, VertexColor> final_colors; // at acceptance or failure
    std::size_t sequence_length = 0;
};

/// Accepts iff the sequence applies green-only and every mutable vertex is
/// red afterwards. Total: all failure modes are reported, never thrown.
VerificationReport is_maximal_green(const IceQuiver& start, const MutationSequence& seq);

/// is_maximal_green plus the full trace of the attempted application.
VerificationReport verify_with_trace(const IceQuiver& start, const MutationSequence& seq,
                                     Trace& trace_out);

} // namespace mgs
