#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace mimred {

/// A positive not-all-equal 3-clause: three distinct variable indices (1-based).
using Clause = std::array<int, 3>;

/// Positive NAE-3-SAT instance. Literals are always positive.
struct NaeFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  /// Number of clauses containing each variable; index 0 unused.
  std::vector<int> occurrences() const;
  /// True when every variable occurs in exactly four clauses.
  bool is_four_occurrence() const;

  friend bool operator==(const NaeFormula&, const NaeFormula&) = default;
};

/// Truth values indexed by variable - 1.
using Assignment = std::vector<bool>;

/// Parses DIMACS CNF text. Strict mode additionally requires the
/// four-occurrence profile. Throws ParseError or ValidationError.
NaeFormula parse_nae_dimacs(std::istream& in, bool strict = true);
NaeFormula parse_nae_dimacs(const std::string& text, bool strict = true);

/// Checks the clause invariants (and the occurrence profile when strict).
void validate_formula(const NaeFormula& f, bool strict);

std::string to_dimacs(const NaeFormula& f);

/// True iff every clause has at least one true and one false variable.
bool eval_nae(const NaeFormula& f, const Assignment& a);

Assignment complement(const Assignment& a);

inline constexpr int kDefaultBruteForceCap = 24;

/// First NAE-satisfying assignment in the order where variable 1 is the most
/// significant position and false precedes true, or nullopt.
/// Throws BudgetExceeded when num_vars exceeds `cap`.
std::optional<Assignment> brute_force_nae(const NaeFormula& f,
                                          int cap = kDefaultBruteForceCap);

std::string assignment_to_string(const Assignment& a);
Assignment assignment_from_string(const std::string& bits);

}  // namespace mimred
