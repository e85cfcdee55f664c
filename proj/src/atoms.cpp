#include "ideallab/atoms.hpp"

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "ideallab/ops.hpp"

namespace ideallab {

namespace {

std::uint64_t pack_pair(std::uint64_t x, std::uint64_t y) { return (x << 16) | y; }

}  // namespace

Dfa atom_dfa(const Dfa& min_dfa, const std::vector<int>& s) {
    const int n = min_dfa.state_count();
    if (n > 16) throw std::invalid_argument("atom computation supports up to 16 states");
    if (complexity(min_dfa) != n)
        throw std::invalid_argument("atoms are defined over a minimal automaton");

    std::uint64_t s_mask = 0;
    for (int q : s) {
        if (q < 1 || q > n) throw std::invalid_argument("atom subset state out of range");
        s_mask |= std::uint64_t{1} << (q - 1);
    }
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    std::uint64_t final_mask = 0;
    for (int q : min_dfa.final_states()) final_mask |= std::uint64_t{1} << (q - 1);

    // States are pairs (X, Y) = (image of S, image of Q \ S); overlapping
    // pairs stay overlapping forever, so they all share one sink.
    const std::uint64_t sink = pack_pair(all, all);
    auto normalize = [&](std::uint64_t x, std::uint64_t y) {
        return (x & y) ? sink : pack_pair(x, y);
    };

    std::unordered_map<std::uint64_t, int> id;
    std::vector<std::uint64_t> states;
    std::queue<std::uint64_t> queue;
    const std::uint64_t start = normalize(s_mask, all & ~s_mask);
    id.emplace(start, 0);
    states.push_back(start);
    queue.push(start);
    const int k = min_dfa.alphabet_size();
    std::vector<std::vector<int>> delta(static_cast<std::size_t>(k));
    while (!queue.empty()) {
        const std::uint64_t cur = queue.front();
        queue.pop();
        const int cur_id = id.at(cur);
        const std::uint64_t x = cur >> 16;
        const std::uint64_t y = cur & 0xffff;
        for (int c = 0; c < k; ++c) {
            const auto& t = min_dfa.transition(c);
            const std::uint64_t to =
                cur == sink ? sink : normalize(t.image_of(x), t.image_of(y));
            auto [it, fresh] = id.emplace(to, static_cast<int>(states.size()));
            if (fresh) {
                states.push_back(to);
                queue.push(to);
            }
            auto& row = delta[static_cast<std::size_t>(c)];
            if (row.size() <= static_cast<std::size_t>(cur_id))
                row.resize(static_cast<std::size_t>(cur_id) + 1);
            row[static_cast<std::size_t>(cur_id)] = it->second;
        }
    }

    std::vector<Transformation> transitions;
    for (int c = 0; c < k; ++c) {
        std::vector<int> images(states.size());
        for (std::size_t q = 0; q < states.size(); ++q)
            images[q] = delta[static_cast<std::size_t>(c)][q] + 1;
        transitions.emplace_back(std::move(images));
    }
    std::vector<int> finals;
    for (std::size_t q = 0; q < states.size(); ++q) {
        const std::uint64_t x = states[q] >> 16;
        const std::uint64_t y = states[q] & 0xffff;
        if (states[q] != sink && (x & ~final_mask) == 0 && (y & final_mask) == 0)
            finals.push_back(static_cast<int>(q) + 1);
    }
    return minimize(Dfa(static_cast<int>(states.size()), min_dfa.alphabet(),
                        std::move(transitions), 1, std::move(finals)));
}

std::vector<AtomInfo> enumerate_atoms(const Dfa& min_dfa) {
    const int n = min_dfa.state_count();
    if (n > 12) throw std::invalid_argument("atom enumeration supports up to 12 states");
    if (complexity(min_dfa) != n)
        throw std::invalid_argument("atoms are defined over a minimal automaton");

    std::vector<AtomInfo> atoms;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> s;
        for (int q = 1; q <= n; ++q)
            if (mask & (std::uint64_t{1} << (q - 1))) s.push_back(q);
        const Dfa atom = atom_dfa(min_dfa, s);
        if (atom.final_states().empty()) continue;  // empty language, not an atom
        atoms.push_back({std::move(s), atom.state_count()});
    }
    return atoms;
}

int atom_count(const Dfa& dfa) {
    return static_cast<int>(enumerate_atoms(minimize(dfa)).size());
}

}  // namespace ideallab
