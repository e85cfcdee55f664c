#include "ideallab/nfa.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ideallab {

namespace {

void insert_sorted(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
}

}  // namespace

Nfa::Nfa(int state_count, std::vector<std::string> alphabet)
    : n_(state_count), alphabet_(std::move(alphabet)) {
    if (n_ < 1) throw std::invalid_argument("nfa needs at least one state");
    std::set<std::string> seen;
    for (const auto& letter : alphabet_) {
        if (letter.empty()) throw std::invalid_argument("empty letter");
        if (!seen.insert(letter).second)
            throw std::invalid_argument("duplicate letter \"" + letter + "\"");
    }
    edges_.assign(alphabet_.size(), std::vector<std::vector<int>>(static_cast<std::size_t>(n_)));
    eps_.assign(static_cast<std::size_t>(n_), {});
}

void Nfa::check_state(int q) const {
    if (q < 1 || q > n_) throw std::invalid_argument("state out of range");
}

void Nfa::add_transition(int from, int letter, int to) {
    check_state(from);
    check_state(to);
    if (letter < 0 || letter >= alphabet_size())
        throw std::invalid_argument("letter index out of range");
    insert_sorted(edges_[static_cast<std::size_t>(letter)][static_cast<std::size_t>(from) - 1], to);
}

void Nfa::add_epsilon(int from, int to) {
    check_state(from);
    check_state(to);
    if (from != to) insert_sorted(eps_[static_cast<std::size_t>(from) - 1], to);
}

void Nfa::add_initial(int state) {
    check_state(state);
    insert_sorted(initials_, state);
}

void Nfa::add_final(int state) {
    check_state(state);
    insert_sorted(finals_, state);
}

const std::vector<int>& Nfa::targets(int from, int letter) const {
    check_state(from);
    if (letter < 0 || letter >= alphabet_size())
        throw std::invalid_argument("letter index out of range");
    return edges_[static_cast<std::size_t>(letter)][static_cast<std::size_t>(from) - 1];
}

const std::vector<int>& Nfa::epsilon_targets(int from) const {
    check_state(from);
    return eps_[static_cast<std::size_t>(from) - 1];
}

bool Nfa::accepts(const Word& word) const {
    std::vector<char> cur(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack;
    auto close = [&](std::vector<char>& set) {
        stack.clear();
        for (int q = 1; q <= n_; ++q)
            if (set[static_cast<std::size_t>(q) - 1]) stack.push_back(q);
        while (!stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            for (int t : eps_[static_cast<std::size_t>(q) - 1])
                if (!set[static_cast<std::size_t>(t) - 1]) {
                    set[static_cast<std::size_t>(t) - 1] = 1;
                    stack.push_back(t);
                }
        }
    };
    for (int q : initials_) cur[static_cast<std::size_t>(q) - 1] = 1;
    close(cur);
    for (int letter : word) {
        if (letter < 0 || letter >= alphabet_size())
            throw std::invalid_argument("letter index out of range");
        std::vector<char> next(static_cast<std::size_t>(n_), 0);
        for (int q = 1; q <= n_; ++q)
            if (cur[static_cast<std::size_t>(q) - 1])
                for (int t : edges_[static_cast<std::size_t>(letter)][static_cast<std::size_t>(q) - 1])
                    next[static_cast<std::size_t>(t) - 1] = 1;
        close(next);
        cur = std::move(next);
    }
    for (int q : finals_)
        if (cur[static_cast<std::size_t>(q) - 1]) return true;
    return false;
}

Nfa nfa_from_dfa(const Dfa& dfa) {
    Nfa nfa(dfa.state_count(), dfa.alphabet());
    for (int letter = 0; letter < dfa.alphabet_size(); ++letter)
        for (int q = 1; q <= dfa.state_count(); ++q)
            nfa.add_transition(q, letter, dfa.next(q, letter));
    nfa.add_initial(dfa.initial_state());
    for (int f : dfa.final_states()) nfa.add_final(f);
    return nfa;
}

}  // namespace ideallab
