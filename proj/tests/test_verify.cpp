#include <doctest.h>

#include "mgs/generators.hpp"
#include "mgs/sequences.hpp"
#include "mgs/verify.hpp"
#include "support/common.hpp"

using namespace mgs;
using mgs_test::a2;
using mgs_test::arrow_labels;
using mgs_test::LabeledArrows;

namespace {

MutationSequence seq(std::vector<std::string> steps) {
    return MutationSequence{std::move(steps)};
}

} // namespace

TEST_CASE("applying [1, 2] to the framed A2 turns everything red") {
    const Trace trace = apply_sequence(a2().framed(), seq({"1", "2"}), true);
    REQUIRE(trace.entries.size() == 2);
    for (const auto& [label, color] : trace.entries.back().colors) {
        CHECK(color == VertexColor::Red);
    }
    CHECK(arrow_labels(trace.final_state()) ==
          LabeledArrows{{"1", "2", 1}, {"1'", "1", 1}, {"2'", "2", 1}});
}

TEST_CASE("applying [2, 1, 2] to the framed A2 also ends all red") {
    const Trace trace = apply_sequence(a2().framed(), seq({"2", "1", "2"}), true);
    REQUIRE(trace.entries.size() == 3);
    for (const auto& [label, color] : trace.entries.back().colors) {
        CHECK(color == VertexColor::Red);
    }
    CHECK(arrow_labels(trace.final_state()) ==
          LabeledArrows{{"2", "1", 1}, {"2'", "1", 1}, {"1'", "2", 1}});
}

TEST_CASE("a repeated vertex is red at its second turn") {
    CHECK_THROWS_AS(apply_sequence(a2().framed(), seq({"1", "1"}), true), NotGreenAtError);
    const SequenceRun run = run_sequence(a2().framed(), seq({"1", "1"}), true);
    CHECK(run.failure == FailureKind::NotGreen);
    CHECK(run.failure_step == 1);
    CHECK(run.trace.entries.size() == 1);
}

TEST_CASE("unknown and frozen labels are reported with their step") {
    const IceQuiver f = a2().framed();
    CHECK_THROWS_AS(apply_sequence(f, seq({"1", "nope"}), true), UnknownLabelError);
    const SequenceRun run = run_sequence(f, seq({"1", "2'"}), true);
    CHECK(run.failure == FailureKind::UnknownLabel);
    CHECK(run.failure_step == 1);
}

TEST_CASE("without the green requirement any mutable vertex may be mutated") {
    const Trace trace = apply_sequence(a2().framed(), seq({"1", "1"}), false);
    CHECK(trace.entries.size() == 2);
    CHECK(trace.final_state() == a2().framed());
}

TEST_CASE("a single framed vertex has the one-step maximal green sequence") {
    IceQuiver q;
    q.add_vertex("1");
    const VerificationReport report = is_maximal_green(q.framed(), seq({"1"}));
    CHECK(report.accepted);
    CHECK(report.sequence_length == 1);
    CHECK_FALSE(report.failure_step.has_value());
    CHECK_FALSE(report.failure_kind.has_value());
}

TEST_CASE("[2, 1] on the framed A2 is green but not maximal") {
    const VerificationReport report = is_maximal_green(a2().framed(), seq({"2", "1"}));
    CHECK_FALSE(report.accepted);
    CHECK(report.failure_kind == FailureKind::NotAllRedAtEnd);
    CHECK_FALSE(report.failure_step.has_value());
    CHECK(report.final_colors.at("2") == VertexColor::Green);

    Trace trace;
    const VerificationReport with_trace = verify_with_trace(a2().framed(), seq({"2", "1"}), trace);
    CHECK_FALSE(with_trace.accepted);
    CHECK(arrow_labels(trace.final_state()) ==
          LabeledArrows{{"1", "2", 1}, {"1'", "1", 1}, {"2'", "1", 1}, {"2", "1'", 1}});
}

TEST_CASE("gamma is accepted on the framed 3-cycle") {
    const VerificationReport report =
        is_maximal_green(cycle_quiver(3).framed(), cycle_gamma(3));
    CHECK(report.accepted);
    CHECK(report.sequence_length == 4);
}

TEST_CASE("accepted reports satisfy the structural length bound") {
    const IceQuiver f = a2().framed();
    const VerificationReport report = is_maximal_green(f, seq({"1", "2"}));
    REQUIRE(report.accepted);
    CHECK(report.sequence_length >= f.mutable_count());
    for (const auto& [label, color] : report.final_colors) {
        CHECK(color == VertexColor::Red);
    }
}

TEST_CASE("greenness failures carry the failing step in the report") {
    const VerificationReport report = is_maximal_green(a2().framed(), seq({"1", "1"}));
    CHECK_FALSE(report.accepted);
    CHECK(report.failure_kind == FailureKind::NotGreen);
    CHECK(report.failure_step == 1);
}
