#pragma once

#include <string>
#include <string_view>

#include "mimred/weighted_graph.hpp"

namespace mimred {

/// Weight profile of the reduction.
struct Constants {
  Weight tau = 0;
  Weight gamma = 0;
  Weight lambda = 0;
  Weight a = 1;
  Weight b = 1;

  friend bool operator==(const Constants&, const Constants&) = default;
};

/// tau = 24a = 1080, gamma = 3a = 135, lambda = 4a = 180, a = 45,
/// b = 6 tau (tau + gamma) + 1.
Constants paper_profile();
/// tau = 36, gamma = 3, lambda = 6, a = 3 and a configurable copy count.
Constants small_profile(Weight b = 3);

/// Parses "paper", "small" or "custom:tau,gamma,lambda,a,b".
Constants parse_profile(std::string_view text);
std::string profile_to_string(const Constants& c);

/// Throws ValidationError naming the first violated condition among
/// gamma < lambda, 3 gamma + 4 < tau, 2 lambda + gamma < tau, 6 lambda <= tau,
/// then divisibility of tau, gamma, lambda by a, then b >= 1.
void validate_constants(const Constants& c);

/// Constants divided by a (a = 1, same b). Requires divisibility.
Constants unit_constants(const Constants& c);

/// ceil((b - 1) / (6 tau)) - 1.
Weight alpha(const Constants& c);

}  // namespace mimred
