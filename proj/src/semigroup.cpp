#include "ideallab/semigroup.hpp"

#include <queue>
#include <string>
#include <unordered_map>

#include "ideallab/ops.hpp"

namespace ideallab {

CapExceeded::CapExceeded(std::uint64_t cap, std::uint64_t reached)
    : std::runtime_error("semigroup enumeration exceeded cap " + std::to_string(cap) +
                         " (reached " + std::to_string(reached) + " elements)"),
      cap_(cap),
      reached_(reached) {}

std::uint64_t default_semigroup_cap(int n) {
    std::uint64_t p = 1;
    for (int i = 0; i < n - 1; ++i) p *= static_cast<std::uint64_t>(n);
    return 2 * p + static_cast<std::uint64_t>(n);
}

std::vector<SemigroupElement> transition_semigroup(const Dfa& dfa, std::uint64_t cap) {
    if (dfa.state_count() > 16)
        throw std::invalid_argument("semigroup enumeration supports up to 16 states");
    if (cap == 0) cap = default_semigroup_cap(dfa.state_count());

    std::vector<SemigroupElement> elements;
    std::unordered_map<std::uint64_t, std::size_t> seen;
    std::queue<std::size_t> frontier;
    auto add = [&](Transformation t, Word word) {
        const std::uint64_t key = t.packed_key();
        if (seen.count(key)) return;
        if (elements.size() + 1 > cap) throw CapExceeded(cap, elements.size() + 1);
        seen.emplace(key, elements.size());
        frontier.push(elements.size());
        elements.push_back({std::move(t), std::move(word)});
    };

    for (int c = 0; c < dfa.alphabet_size(); ++c) add(dfa.transition(c), {c});
    while (!frontier.empty()) {
        const std::size_t i = frontier.front();
        frontier.pop();
        for (int c = 0; c < dfa.alphabet_size(); ++c) {
            Word word = elements[i].word;
            word.push_back(c);
            add(elements[i].action.then(dfa.transition(c)), std::move(word));
        }
    }
    return elements;
}

std::uint64_t transition_semigroup_size(const Dfa& dfa, std::uint64_t cap) {
    return transition_semigroup(dfa, cap).size();
}

std::uint64_t syntactic_semigroup_size(const Dfa& dfa, std::uint64_t cap) {
    return transition_semigroup_size(minimize(dfa), cap);
}

}  // namespace ideallab
