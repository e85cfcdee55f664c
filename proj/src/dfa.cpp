#include "ideallab/dfa.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ideallab {

Dfa::Dfa(int state_count, std::vector<std::string> alphabet,
         std::vector<Transformation> delta, int initial, std::vector<int> finals)
    : n_(state_count),
      alphabet_(std::move(alphabet)),
      delta_(std::move(delta)),
      initial_(initial),
      finals_(std::move(finals)) {
    if (n_ < 1) throw std::invalid_argument("dfa needs at least one state");
    std::set<std::string> seen;
    for (const auto& letter : alphabet_) {
        if (letter.empty()) throw std::invalid_argument("empty letter");
        if (!seen.insert(letter).second)
            throw std::invalid_argument("duplicate letter \"" + letter + "\"");
    }
    if (delta_.size() != alphabet_.size())
        throw std::invalid_argument("need exactly one transformation per letter");
    for (const auto& t : delta_)
        if (t.degree() != n_)
            throw std::invalid_argument("transformation degree does not match state count");
    if (initial_ < 1 || initial_ > n_)
        throw std::invalid_argument("initial state out of range");
    std::sort(finals_.begin(), finals_.end());
    finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
    for (int f : finals_)
        if (f < 1 || f > n_) throw std::invalid_argument("final state out of range");
}

bool Dfa::is_final(int state) const {
    return std::binary_search(finals_.begin(), finals_.end(), state);
}

int Dfa::letter_index(std::string_view letter) const {
    for (std::size_t i = 0; i < alphabet_.size(); ++i)
        if (alphabet_[i] == letter) return static_cast<int>(i);
    return -1;
}

int Dfa::run(int from, const Word& word) const {
    int q = from;
    for (int letter : word) {
        if (letter < 0 || letter >= alphabet_size())
            throw std::invalid_argument("letter index out of range");
        q = next(q, letter);
    }
    return q;
}

bool Dfa::accepts(const Word& word) const { return is_final(run(initial_, word)); }

Dfa universal_dfa(std::vector<std::string> alphabet) {
    std::vector<Transformation> delta(alphabet.size(), Transformation::identity(1));
    return Dfa(1, std::move(alphabet), std::move(delta), 1, {1});
}

Dfa empty_language_dfa(std::vector<std::string> alphabet) {
    std::vector<Transformation> delta(alphabet.size(), Transformation::identity(1));
    return Dfa(1, std::move(alphabet), std::move(delta), 1, {});
}

}  // namespace ideallab
