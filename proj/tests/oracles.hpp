#pragma once

// Independent reference computations the test suites measure the library
// against.  Everything here works by brute force over words or states and
// deliberately avoids the algorithms under test.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ideallab/dfa.hpp"
#include "ideallab/nfa.hpp"

namespace oracle {

using ideallab::Dfa;
using ideallab::Nfa;
using ideallab::Word;

/// Calls fn for every word of length 0..max_len over `letters` letters, in
/// length-then-lexicographic order.
void for_each_word(int letters, int max_len,
                   const std::function<void(const Word&)>& fn);

/// Number of equivalence classes of reachable states under "accepts the same
/// words up to length max_len".  With max_len >= state count this is the
/// minimal DFA size of the language.
int distinguishability_classes(const Dfa& dfa, int max_len);

/// Distinct transformations induced by non-empty words, found by extending
/// word length until a full round adds nothing (then the set is closed under
/// appending letters, hence is the whole transition semigroup).
std::uint64_t semigroup_size_by_words(const Dfa& dfa);

/// A minimal DFA accepts a right ideal iff it has exactly one accepting
/// state and every letter fixes it.
bool structurally_right_ideal(const Dfa& min_dfa);

/// Random complete DFA: 1..max_states states, min_letters..max_letters
/// letters from {a, b, c}, uniform transitions, each state accepting with
/// probability 0.4.
Dfa random_dfa(std::mt19937& rng, int max_states = 6, int max_letters = 3,
               int min_letters = 1);

/// Random NFA with epsilon moves, possibly missing transitions and possibly
/// no initial state at all.
Nfa random_nfa(std::mt19937& rng, int max_states = 6, int max_letters = 3);

/// Copy of the automaton with one extra state behaving exactly like q, and
/// one incoming edge of q rerouted to the copy; the language is unchanged
/// but the automaton is no longer minimal.
Dfa duplicate_state(const Dfa& dfa, int q);

/// Renumbers states by perm (1-based, perm[q-1] = new name of q).
Dfa permute_states(const Dfa& dfa, const std::vector<int>& perm);

}  // namespace oracle
