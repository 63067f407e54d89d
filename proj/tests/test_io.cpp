#include <doctest.h>

#include <random>

#include "mgs/generators.hpp"
#include "mgs/io.hpp"
#include "support/common.hpp"
#include "support/dot_check.hpp"
#include "support/random_quivers.hpp"

using namespace mgs;
using mgs_test::a2;

TEST_CASE("quiver documents round-trip through JSON") {
    std::mt19937_64 rng(mgs_test::kSuiteSeed + 2);
    mgs_test::RandomQuiverOptions opt;
    opt.allow_frozen = true;
    std::vector<IceQuiver> cases = {a2(),           a2().framed(),     cycle_quiver(5),
                                    ladder_quiver(3), torus_quiver(2, 5), IceQuiver{}};
    for (int i = 0; i < 20; ++i) cases.push_back(mgs_test::random_quiver(rng, opt));
    for (const IceQuiver& q : cases) {
        CHECK(quiver_from_json(quiver_to_json(q)) == q);
    }
}

TEST_CASE("serialized output is deterministic and newline-terminated") {
    const std::string text = quiver_to_json(torus_quiver(2, 4));
    CHECK(text == quiver_to_json(torus_quiver(2, 4)));
    CHECK(text.back() == '\n');
}

TEST_CASE("documents with sparse ids are re-densified consistently") {
    const std::string text = R"({
      "version": 1,
      "vertices": [{"id": 10, "label": "x", "frozen": false},
                   {"id": 3, "label": "y", "frozen": false}],
      "arrows": [{"src": 10, "dst": 3, "mult": 2}]
    })";
    const IceQuiver q = quiver_from_json(text);
    CHECK(q.vertex_count() == 2);
    CHECK(mgs_test::arrow_labels(q) == mgs_test::LabeledArrows{{"x", "y", 2}});
}

TEST_CASE("parse failures carry the offending position") {
    auto reject = [](const std::string& text, const std::string& needle) {
        try {
            quiver_from_json(text);
            FAIL_CHECK("expected rejection: ", needle);
        } catch (const DocumentError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    reject("{", "not valid JSON");
    reject(R"({"vertices": [], "arrows": []})", "version");
    reject(R"({"version": 7, "vertices": [], "arrows": []})", "version");
    reject(R"({"version": 1, "vertices": [{"id": 0, "label": "", "frozen": false}], "arrows": []})",
           "vertices[0]");
    reject(R"({"version": 1,
               "vertices": [{"id": 0, "label": "a", "frozen": false},
                            {"id": 0, "label": "b", "frozen": false}],
               "arrows": []})",
           "duplicate vertex id");
    reject(R"({"version": 1,
               "vertices": [{"id": 0, "label": "a", "frozen": false},
                            {"id": 1, "label": "a", "frozen": false}],
               "arrows": []})",
           "vertices[1]");
    reject(R"({"version": 1, "vertices": [{"id": 0, "label": "a", "frozen": false}],
               "arrows": [{"src": 0, "dst": 5, "mult": 1}]})",
           "arrows[0]");
    reject(R"({"version": 1, "vertices": [{"id": 0, "label": "a", "frozen": false}],
               "arrows": [{"src": 0, "dst": 0, "mult": 1}]})",
           "loop");
    reject(R"({"version": 1,
               "vertices": [{"id": 0, "label": "a", "frozen": false},
                            {"id": 1, "label": "b", "frozen": false}],
               "arrows": [{"src": 0, "dst": 1, "mult": 0}]})",
           "positive");
    reject(R"({"version": 1,
               "vertices": [{"id": 0, "label": "a", "frozen": false},
                            {"id": 1, "label": "b", "frozen": false}],
               "arrows": [{"src": 0, "dst": 1, "mult": 1}, {"src": 1, "dst": 0, "mult": 1}]})",
           "2-cycle");
    reject(R"({"version": 1,
               "vertices": [{"id": 0, "label": "a", "frozen": true},
                            {"id": 1, "label": "b", "frozen": true}],
               "arrows": [{"src": 0, "dst": 1, "mult": 1}]})",
           "frozen");
}

TEST_CASE("sequence documents accept comments and normalize") {
    const MutationSequence seq = sequence_from_text("a b  # trailing words\n# whole line\n\n c\n");
    CHECK(seq.steps == std::vector<std::string>{"a", "b", "c"});
    CHECK(sequence_to_text(seq) == "a\nb\nc\n");
    CHECK(sequence_from_text(sequence_to_text(seq)) == seq);
    CHECK(sequence_from_text("").empty());
}

TEST_CASE("DOT export is syntactically valid") {
    std::string why;
    for (const IceQuiver& q : {a2(), a2().framed(), torus_quiver(2, 4).framed()}) {
        CHECK_MESSAGE(mgs_test::dot_is_valid(quiver_to_dot(q), &why), why);
    }
}

TEST_CASE("DOT export shows colors, frozen boxes and multiplicities") {
    const IceQuiver f = a2().framed();
    const std::string dot = quiver_to_dot(f);
    CHECK(dot.find("\"1'\" [shape=box") != std::string::npos);
    CHECK(dot.find("fillcolor=palegreen") != std::string::npos);
    CHECK(dot.find("\"1\" -> \"2\";") != std::string::npos);

    const std::string red = quiver_to_dot(a2().coframed());
    CHECK(red.find("fillcolor=lightcoral") != std::string::npos);

    IceQuiver doubled;
    const auto v1 = doubled.add_vertex("x");
    const auto v2 = doubled.add_vertex("y");
    doubled.add_arrow(v1, v2, 2);
    CHECK(quiver_to_dot(doubled).find("[label=\"2\"]") != std::string::npos);
}

TEST_CASE("reports serialize with a color histogram") {
    VerificationReport report;
    report.accepted = false;
    report.failure_kind = FailureKind::NotAllRedAtEnd;
    report.sequence_length = 2;
    report.final_colors = {{"1", VertexColor::Red}, {"2", VertexColor::Green}};
    const std::string text = report_to_json(report);
    CHECK(text.find("\"accepted\": false") != std::string::npos);
    CHECK(text.find("\"failure_kind\": \"NotAllRedAtEnd\"") != std::string::npos);
    CHECK(text.find("\"green\": 1") != std::string::npos);
    CHECK(text.find("\"red\": 1") != std::string::npos);
}
