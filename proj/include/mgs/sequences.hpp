#pragma once

#include <string>
#include <vector>

#include "mgs/generators.hpp"
#include "mgs/verify.hpp"

namespace mgs {

/// Cycle sequence over an explicit token list x_1..x_m (m >= 3, tokens
/// distinct): emits x_1, ..., x_m, x_{m-2}, x_{m-3}, ..., x_1. Length 2m - 2.
/// Listing the cycle's labels in reverse order (c_m, ..., c_1) makes this a
/// maximal green sequence for the oriented cycle.
MutationSequence gamma(const std::vector<std::string>& tokens);

/// 11-step handle sequence e d b c a b d e c a b over the handle-i labels.
MutationSequence sigma(int i);

/// 9-step handle sequence e b a c e d b a e over the handle-i labels.
MutationSequence tau(int i);

/// Row-j descent sequence of the ladder family (j >= 0). alpha(0) is just
/// the apex g_0.
MutationSequence alpha(int j);

/// Row-j cleanup sequence (j >= 0); beta(0) is empty.
MutationSequence beta(int j);

/// Concatenation alpha(0) .. alpha(k): the ladder family's maximal green
/// sequence candidate.
MutationSequence alpha_chain(int k);

/// gamma over c_m, ..., c_1: the cycle family's maximal green sequence.
MutationSequence cycle_gamma(int m);

/// The full torus-family sequence: gamma over the f-cycle, sigma_n..sigma_1,
/// the alpha chain, gamma over the mid-run (n+1)-cycle, f_{n+1}, beta(p-3),
/// then tau_1..tau_n.
MutationSequence main_sequence(int n, int p);

/// The built-in candidate for a family: cycle_gamma, alpha_chain, or
/// main_sequence respectively.
MutationSequence reference_sequence(const FamilySpec& spec);

} // namespace mgs
