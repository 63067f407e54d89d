#include "mgs/sequences.hpp"

#include <set>

namespace mgs {

namespace {

std::string sub(const std::string& base, int i) {
    return base + "_" + std::to_string(i);
}

std::string row(int track, int j) {
    return "g_" + std::to_string(track) + "^" + std::to_string(j);
}

void require_index(int i, const char* what) {
    if (i < 1) {
        throw BadParameterError(std::string(what) + " index must be >= 1, got " +
                                std::to_string(i));
    }
}

} // namespace

MutationSequence gamma(const std::vector<std::string>& tokens) {
    const std::size_t m = tokens.size();
    if (m < 3) {
        throw BadParameterError("gamma needs at least 3 tokens, got " + std::to_string(m));
    }
    if (std::set<std::string>(tokens.begin(), tokens.end()).size() != m) {
        throw BadParameterError("gamma tokens must be distinct");
    }
    MutationSequence seq;
    seq.steps.reserve(2 * m - 2);
    seq.steps = tokens;
    for (std::size_t i = m - 2; i-- > 0;) seq.steps.push_back(tokens[i]);
    return seq;
}

MutationSequence sigma(int i) {
    require_index(i, "handle");
    MutationSequence seq;
    for (const char* t : {"e", "d", "b", "c", "a", "b", "d", "e", "c", "a", "b"}) {
        seq.steps.push_back(sub(t, i));
    }
    return seq;
}

MutationSequence tau(int i) {
    require_index(i, "handle");
    MutationSequence seq;
    for (const char* t : {"e", "b", "a", "c", "e", "d", "b", "a", "e"}) {
        seq.steps.push_back(sub(t, i));
    }
    return seq;
}

MutationSequence alpha(int j) {
    if (j < 0) {
        throw BadParameterError("alpha row index must be >= 0, got " + std::to_string(j));
    }
    MutationSequence seq;
    auto& s = seq.steps;
    switch (j) {
    case 0:
        s = {"g_0"};
        break;
    case 1:
        s = {row(3, 1), row(2, 1), row(1, 1), row(3, 1), "g_0"};
        break;
    case 2:
        s = {row(3, 2), row(2, 2), row(2, 1), row(1, 1), row(1, 2),
             row(3, 2), row(2, 1), row(3, 1), "g_0"};
        break;
    default:
        s = {row(3, j), row(2, j), row(1, j - 2), row(1, j - 1), row(1, j), row(3, j)};
        // descending interleaved pairs down to g_1^1 g_3^2
        for (int t = j - 2; t >= 1; --t) {
            s.push_back(row(1, t));
            s.push_back(row(3, t + 1));
        }
        s.push_back(row(2, 1));
        s.push_back(row(3, 1));
        s.push_back("g_0");
        break;
    }
    return seq;
}

MutationSequence beta(int j) {
    if (j < 0) {
        throw BadParameterError("beta row index must be >= 0, got " + std::to_string(j));
    }
    MutationSequence seq;
    auto& s = seq.steps;
    switch (j) {
    case 0:
        break;
    case 1:
        s = {row(1, 1), row(2, 1), row(3, 1)};
        break;
    case 2:
        s = {row(1, 1), row(1, 2), row(1, 1), row(3, 2), row(2, 1), row(3, 1)};
        break;
    default:
        s = {row(1, j - 1), row(1, j), row(1, j - 1), row(3, j)};
        for (int t = j - 2; t >= 1; --t) {
            s.push_back(row(1, t));
            s.push_back(row(3, t + 1));
        }
        s.push_back(row(2, 1));
        s.push_back(row(3, 1));
        break;
    }
    return seq;
}

MutationSequence alpha_chain(int k) {
    if (k < 0) {
        throw BadParameterError("ladder row count k must be >= 0, got " + std::to_string(k));
    }
    MutationSequence seq;
    for (int j = 0; j <= k; ++j) seq.append(alpha(j));
    return seq;
}

MutationSequence cycle_gamma(int m) {
    if (m < 3) {
        throw BadParameterError("cycle length m must be >= 3, got " + std::to_string(m));
    }
    std::vector<std::string> tokens;
    tokens.reserve(m);
    for (int i = m; i >= 1; --i) tokens.push_back(sub("c", i));
    return gamma(tokens);
}

MutationSequence main_sequence(int n, int p) {
    if (n < 2) {
        throw BadParameterError("genus n must be >= 2, got " + std::to_string(n));
    }
    if (p < 4) {
        throw BadParameterError("puncture count p must be >= 4, got " + std::to_string(p));
    }
    MutationSequence seq;

    // full f-cycle, from f_{n+2} down to f_1
    std::vector<std::string> first;
    for (int i = n + 2; i >= 1; --i) first.push_back(sub("f", i));
    seq.append(gamma(first));

    for (int i = n; i >= 1; --i) seq.append(sigma(i));

    seq.append(alpha_chain(p - 3));

    // the (n+1)-cycle the f vertices form mid-run, with f_{n+1} left out
    std::vector<std::string> second = {sub("f", n + 2), sub("f", 2), sub("f", 1)};
    for (int i = 3; i <= n; ++i) second.push_back(sub("f", i));
    seq.append(gamma(second));

    seq.steps.push_back(sub("f", n + 1));

    seq.append(beta(p - 3));

    for (int i = 1; i <= n; ++i) seq.append(tau(i));
    return seq;
}

MutationSequence reference_sequence(const FamilySpec& spec) {
    switch (spec.family) {
    case FamilySpec::Family::Cycle: return cycle_gamma(spec.m);
    case FamilySpec::Family::Ladder: return alpha_chain(spec.k);
    case FamilySpec::Family::Torus: return main_sequence(spec.n, spec.p);
    }
    throw BadParameterError("unknown family");
}

} // namespace mgs
