#pragma once

#include <vector>

#include "ideallab/dfa.hpp"

namespace ideallab {

/// A non-empty atom of a regular language: for the minimal automaton with
/// quotients K_1..K_n, the atom of S is the intersection of the K_q with
/// q in S and of the complements of the others.  `states` is S, sorted.
struct AtomInfo {
    std::vector<int> states;
    int complexity;
};

/// Minimal DFA of the atom of `s` for a minimal automaton `min_dfa`.  Tracks
/// the pair (image of S, image of Q \ S) under the word read; a pair whose
/// components overlap can never accept and collapses to a sink.  Throws if
/// the automaton is not minimal or a state of `s` is out of range; supports
/// up to 16 states.  An empty atom yields the one-state empty automaton.
Dfa atom_dfa(const Dfa& min_dfa, const std::vector<int>& s);

/// All non-empty atoms of the language of a minimal automaton, with their
/// quotient complexities, ordered by subset (as bitmask, ascending).
/// Supports up to 12 states.
std::vector<AtomInfo> enumerate_atoms(const Dfa& min_dfa);

/// Number of atoms of L(dfa); minimizes first.  Always equal to the
/// complexity of the reverse language.
int atom_count(const Dfa& dfa);

}  // namespace ideallab
