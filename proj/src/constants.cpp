#include "mimred/constants.hpp"

#include <sstream>
#include <vector>

#include "mimred/error.hpp"

namespace mimred {

Constants paper_profile() {
  Constants c;
  c.a = 45;
  c.tau = 24 * c.a;
  c.gamma = 3 * c.a;
  c.lambda = 4 * c.a;
  c.b = 6 * c.tau * (c.tau + c.gamma) + 1;
  return c;
}

Constants small_profile(Weight b) { return {36, 3, 6, 3, b}; }

Constants parse_profile(std::string_view text) {
  if (text == "paper") return paper_profile();
  if (text == "small") return small_profile();
  constexpr std::string_view prefix = "custom:";
  if (text.substr(0, prefix.size()) != prefix)
    throw ValidationError("unknown profile '" + std::string(text) +
                          "', expected paper, small or custom:tau,gamma,lambda,a,b");
  std::string body(text.substr(prefix.size()));
  for (auto& ch : body)
    if (ch == ',') ch = ' ';
  std::istringstream in(body);
  std::vector<Weight> values;
  Weight x = 0;
  while (in >> x) values.push_back(x);
  if (!in.eof() || values.size() != 5)
    throw ValidationError("custom profile needs five integers tau,gamma,lambda,a,b");
  Constants c{values[0], values[1], values[2], values[3], values[4]};
  validate_constants(c);
  return c;
}

std::string profile_to_string(const Constants& c) {
  std::ostringstream out;
  out << "custom:" << c.tau << ',' << c.gamma << ',' << c.lambda << ',' << c.a << ',' << c.b;
  return out.str();
}

void validate_constants(const Constants& c) {
  if (c.tau < 1 || c.gamma < 1 || c.lambda < 1 || c.a < 1)
    throw ValidationError("constants must be positive integers");
  if (!(c.gamma < c.lambda)) throw ValidationError("γ < λ violated");
  if (!(3 * c.gamma + 4 < c.tau)) throw ValidationError("3γ + 4 < τ violated");
  if (!(2 * c.lambda + c.gamma < c.tau)) throw ValidationError("2λ + γ < τ violated");
  if (!(6 * c.lambda <= c.tau)) throw ValidationError("6λ ≤ τ violated");
  if (c.tau % c.a != 0 || c.gamma % c.a != 0 || c.lambda % c.a != 0)
    throw ValidationError("τ, γ, λ must be multiples of a");
  if (c.b < 1) throw ValidationError("b must be at least 1");
}

Constants unit_constants(const Constants& c) {
  if (c.a < 1 || c.tau % c.a != 0 || c.gamma % c.a != 0 || c.lambda % c.a != 0)
    throw ValidationError("τ, γ, λ must be multiples of a");
  return {c.tau / c.a, c.gamma / c.a, c.lambda / c.a, 1, c.b};
}

Weight alpha(const Constants& c) {
  const Weight num = c.b - 1;
  const Weight den = 6 * c.tau;
  return (num + den - 1) / den - 1;
}

}  // namespace mimred
