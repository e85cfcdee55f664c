#pragma once

#include <string>
#include <vector>

#include "ideallab/dfa.hpp"
#include "ideallab/nfa.hpp"

namespace ideallab {

enum class SetOp { Union, Intersection, Difference, SymmetricDifference };

std::string to_string(SetOp op);

/// Renumbers the reachable part of a DFA by breadth-first discovery order
/// from the initial state, trying letters in alphabet order.  This is the
/// only state renaming used anywhere, so equal languages over the same
/// ordered alphabet always land on identical minimal automata.
Dfa canonicalize(const Dfa& dfa);

/// Subset construction with epsilon closure.  Supports up to 64 NFA states.
/// Subsets are numbered in discovery order; the dead subset (no NFA state
/// alive) appears as an ordinary sink state when reachable.
Dfa determinize(const Nfa& nfa);

/// Unique minimal complete DFA of the language, in canonical numbering.
/// Hopcroft partition refinement on the reachable part.
Dfa minimize(const Dfa& dfa);

/// Number of states of the minimal complete DFA: the quotient complexity of
/// the language.
int complexity(const Dfa& dfa);

/// Quotient complexity of the left quotient by each state's access language,
/// indexed by state.  States unreachable from the initial state get 0.
/// For a minimal n-state automaton this has one entry per residual language.
std::vector<int> quotient_complexities(const Dfa& dfa);

/// Language equality via canonical minimal forms.  Requires identical
/// ordered alphabets.
bool equivalent(const Dfa& a, const Dfa& b);

/// True when the two automata are isomorphic as accepting machines after
/// sorting each alphabet: same size, and some bijection of states matches
/// initial, finals and every transition, with letters paired by name.
bool isomorphic(const Dfa& a, const Dfa& b);

/// Same automaton with letters rearranged into lexicographic order.
Dfa sort_alphabet(const Dfa& dfa);

/// Complement within Sigma*: flips accepting states.
Dfa complement(const Dfa& dfa);

/// Direct product on state pairs restricted to the reachable part, with the
/// final set chosen by `op`, then minimized.  Both arguments must carry the
/// same ordered alphabet; otherwise throws, naming the two alphabets.
Dfa boolean_product(const Dfa& a, const Dfa& b, SetOp op);

/// Concatenation L(a)L(b) through an epsilon-NFA, determinized + minimized.
/// Works for arbitrary regular operands.
Dfa concat_epsilon(const Dfa& a, const Dfa& b);

/// Concatenation specialised to a left operand with exactly one accepting
/// state, as a right ideal witness has: drops that accepting state, rewires
/// every edge into it towards b's initial state, and keeps the rest of both
/// machines as-is.  Returns the raw (m+n-1)-state automaton, not minimized.
/// Requires identical ordered alphabets.
Dfa concat_ideal_redirect(const Dfa& a, const Dfa& b);

/// Kleene star through an epsilon-NFA with a fresh accepting initial state,
/// determinized + minimized.
Dfa star(const Dfa& dfa);

/// Reversal through the reversed NFA, determinized + minimized.  The number
/// of reachable determinization subsets also counts the atoms of L, so this
/// doubles as the atom-count oracle.
Dfa reverse(const Dfa& dfa);

}  // namespace ideallab
