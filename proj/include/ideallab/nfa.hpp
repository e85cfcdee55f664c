#pragma once

#include <string>
#include <vector>

#include "ideallab/dfa.hpp"

namespace ideallab {

/// Nondeterministic automaton with epsilon moves, multiple initial states and
/// possibly missing transitions.  Built edge by edge, then treated as a value.
/// Used as the intermediate form for reversal, star and concatenation.
class Nfa {
public:
    Nfa(int state_count, std::vector<std::string> alphabet);

    void add_transition(int from, int letter, int to);
    void add_epsilon(int from, int to);
    void add_initial(int state);
    void add_final(int state);

    int state_count() const { return n_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    int alphabet_size() const { return static_cast<int>(alphabet_.size()); }
    /// Sorted, duplicate-free target lists.
    const std::vector<int>& targets(int from, int letter) const;
    const std::vector<int>& epsilon_targets(int from) const;
    const std::vector<int>& initial_states() const { return initials_; }
    const std::vector<int>& final_states() const { return finals_; }

    bool accepts(const Word& word) const;

private:
    void check_state(int q) const;

    int n_;
    std::vector<std::string> alphabet_;
    // edges_[letter][from-1] -> sorted targets
    std::vector<std::vector<std::vector<int>>> edges_;
    std::vector<std::vector<int>> eps_;
    std::vector<int> initials_;
    std::vector<int> finals_;
};

/// Views a complete DFA as an NFA with the same states and edges.
Nfa nfa_from_dfa(const Dfa& dfa);

}  // namespace ideallab
