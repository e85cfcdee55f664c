#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ideallab/ops.hpp"

namespace ideallab {

enum class IdealKind { Right, Left, TwoSided };

std::string to_string(IdealKind kind);
IdealKind ideal_kind_from_string(const std::string& name);

/// Smallest n for which the witness stream of the class is defined:
/// 3 (right), 4 (left), 5 (two-sided).
int min_witness_size(IdealKind kind);

/// C(n, k), exactly; 0 outside 0 <= k <= n.
std::uint64_t binomial(int n, int k);

// Closed-form maximal complexities for ideals of quotient complexity n
// (and m for the left operand of binary operations).  Every function
// rejects arguments below min_witness_size.

/// Right: n^(n-1).  Left: n^(n-1) + n - 1.  Two-sided:
/// n^(n-2) + (n-2) 2^(n-2) + 1.
std::uint64_t expected_syntactic_semigroup(IdealKind kind, int n);

/// Complexity of each quotient of the witness, indexed by state: n for
/// every state, except that right and two-sided ideals have a final state
/// (the last one) whose quotient is the universal language, complexity 1.
std::vector<int> expected_quotient_profile(IdealKind kind, int n);

/// Right: 2^(n-1).  Left: 2^(n-1) + 1.  Two-sided: 2^(n-2) + 1.
std::uint64_t expected_atom_count(IdealKind kind, int n);

/// Complexity of the atom of subset S, by the per-class case formulas.
/// Returns nothing for the one uncovered case (right ideals, S empty,
/// where the atom is always the empty language).
std::optional<std::uint64_t> expected_atom_complexity(IdealKind kind, int n,
                                                      const std::vector<int>& s);

/// Same value as the atom count: reversal complexity of the witness.
std::uint64_t expected_reversal(IdealKind kind, int n);

/// n + 1 for every class.
std::uint64_t expected_star(IdealKind kind, int n);

/// Right: m + 2^(n-2).  Left and two-sided: m + n - 1.
std::uint64_t expected_product(IdealKind kind, int m, int n);

/// Right and two-sided: mn for intersection and symmetric difference,
/// mn - (m-1) for difference, mn - (m+n-2) for union.  Left: mn for all
/// four operations.
std::uint64_t expected_boolean(IdealKind kind, SetOp op, int m, int n);

}  // namespace ideallab
