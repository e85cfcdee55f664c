#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ideallab/transformation.hpp"

namespace ideallab {

/// A word is a sequence of 0-based letter indices into an automaton's alphabet.
using Word = std::vector<int>;

/// Complete deterministic automaton over states {1..n}.  The alphabet is an
/// ordered list of distinct letters and each letter acts as a total
/// transformation of the state set, so completeness holds by construction.
/// Instances are immutable once built; the constructor validates everything
/// and throws std::invalid_argument on malformed input.
class Dfa {
public:
    Dfa(int state_count, std::vector<std::string> alphabet,
        std::vector<Transformation> delta, int initial, std::vector<int> finals);

    int state_count() const { return n_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    int alphabet_size() const { return static_cast<int>(alphabet_.size()); }
    const Transformation& transition(int letter) const {
        return delta_[static_cast<std::size_t>(letter)];
    }
    const std::vector<Transformation>& transitions() const { return delta_; }
    int next(int state, int letter) const { return transition(letter).apply(state); }
    int initial_state() const { return initial_; }
    /// Sorted ascending, duplicate-free.
    const std::vector<int>& final_states() const { return finals_; }
    bool is_final(int state) const;

    /// 0-based position of a letter, or -1 when absent.
    int letter_index(std::string_view letter) const;

    /// State reached from `from` by reading `word` (letter indices).
    int run(int from, const Word& word) const;
    bool accepts(const Word& word) const;

    /// Field-by-field equality.  Two minimal automata in canonical numbering
    /// accept the same language iff they compare equal.
    bool operator==(const Dfa&) const = default;

private:
    int n_;
    std::vector<std::string> alphabet_;
    std::vector<Transformation> delta_;
    int initial_;
    std::vector<int> finals_;
};

/// One accepting state with every letter acting as the identity: L = Sigma*.
Dfa universal_dfa(std::vector<std::string> alphabet);

/// Same shape with no accepting state: L is empty.
Dfa empty_language_dfa(std::vector<std::string> alphabet);

}  // namespace ideallab
