#include "mgs/verify.hpp"

namespace mgs {

const char* to_string(FailureKind k) {
    switch (k) {
    case FailureKind::NotGreen: return "NotGreen";
    case FailureKind::UnknownLabel: return "UnknownLabel";
    case FailureKind::NotAllRedAtEnd: return "NotAllRedAtEnd";
    }
    return "?";
}

SequenceRun run_sequence(const IceQuiver& start, const MutationSequence& seq,
                         bool require_green) {
    SequenceRun run;
    run.trace.initial = start;
    const IceQuiver* state = &run.trace.initial;
    run.trace.entries.reserve(seq.length());
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const std::string& label = seq.steps[i];
        const auto id = state->find_label(label);
        // A frozen target does not count as resolved: sequences address
        // mutable vertices only.
        if (!id || state->vertex(*id).frozen) {
            run.failure_step = i;
            run.failure = FailureKind::UnknownLabel;
            return run;
        }
        if (require_green && state->color_of(*id) != VertexColor::Green) {
            run.failure_step = i;
            run.failure = FailureKind::NotGreen;
            return run;
        }
        IceQuiver next = state->mutate(*id);
        auto colors = next.colors();
        run.trace.entries.push_back(Trace::Entry{label, std::move(next), std::move(colors)});
        state = &run.trace.entries.back().resulting;
    }
    return run;
}

Trace apply_sequence(const IceQuiver& start, const MutationSequence& seq,
                     bool require_green) {
    SequenceRun run = run_sequence(start, seq, require_green);
    if (run.failure == FailureKind::UnknownLabel) {
        throw UnknownLabelError(*run.failure_step,
                                "step " + std::to_string(*run.failure_step) +
                                    ": label '" + seq.steps[*run.failure_step] +
                                    "' does not resolve to a mutable vertex");
    }
    if (run.failure == FailureKind::NotGreen) {
        throw NotGreenAtError(*run.failure_step,
                              "step " + std::to_string(*run.failure_step) + ": vertex '" +
                                  seq.steps[*run.failure_step] + "' is not green");
    }
    return std::move(run.trace);
}

VerificationReport verify_with_trace(const IceQuiver& start, const MutationSequence& seq,
                                     Trace& trace_out) {
    SequenceRun run = run_sequence(start, seq, true);
    VerificationReport report;
    report.sequence_length = seq.length();
    report.final_colors = run.trace.final_state().colors();
    if (!run.completed()) {
        report.failure_step = run.failure_step;
        report.failure_kind = run.failure;
    } else if (!run.trace.final_state().all_mutable_red()) {
        report.failure_kind = FailureKind::NotAllRedAtEnd;
    } else {
        report.accepted = true;
    }
    trace_out = std::move(run.trace);
    return report;
}

VerificationReport is_maximal_green(const IceQuiver& start, const MutationSequence& seq) {
    Trace trace;
    return verify_with_trace(start, seq, trace);
}

} // namespace mgs
