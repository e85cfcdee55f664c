#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ideallab/atoms.hpp"
#include "ideallab/ops.hpp"
#include "ideallab/witnesses.hpp"
#include "oracles.hpp"

using namespace ideallab;

namespace {

// States whose run over `word` ends in an accepting state; `word` belongs to
// the atom of exactly this subset.
std::vector<int> accepting_sources(const Dfa& dfa, const Word& word) {
    std::vector<int> sources;
    for (int q = 1; q <= dfa.state_count(); ++q)
        if (dfa.is_final(dfa.run(q, word))) sources.push_back(q);
    return sources;
}

}  // namespace

TEST_SUITE("atoms") {

TEST_CASE("every word lies in the atom of its accepting sources") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const Dfa min = minimize(oracle::random_dfa(rng, 5, 2));
        oracle::for_each_word(min.alphabet_size(), 5, [&](const Word& w) {
            CHECK(atom_dfa(min, accepting_sources(min, w)).accepts(w));
        });
    }
}

TEST_CASE("atoms are pairwise disjoint and cover nothing else") {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        const Dfa min = minimize(oracle::random_dfa(rng, 4, 2));
        const int n = min.state_count();
        std::vector<Dfa> atoms;
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> s;
            for (int q = 1; q <= n; ++q)
                if (mask & (1 << (q - 1))) s.push_back(q);
            atoms.push_back(atom_dfa(min, s));
        }
        oracle::for_each_word(min.alphabet_size(), 4, [&](const Word& w) {
            int members = 0;
            for (const auto& atom : atoms)
                if (atom.accepts(w)) ++members;
            CHECK(members == 1);
        });
    }
}

TEST_CASE("atom count equals the complexity of the reverse") {
    std::mt19937 rng(33);
    for (int trial = 0; trial < 30; ++trial) {
        const Dfa dfa = oracle::random_dfa(rng, 5, 2);
        CHECK(atom_count(dfa) == complexity(reverse(dfa)));
    }
    CHECK(atom_count(right_ideal_witness(4)) == complexity(reverse(right_ideal_witness(4))));
    CHECK(atom_count(left_ideal_witness(5)) == complexity(reverse(left_ideal_witness(5))));
    CHECK(atom_count(two_sided_witness(5)) == complexity(reverse(two_sided_witness(5))));
}

TEST_CASE("enumeration lists nonempty atoms by subset mask") {
    const auto atoms = enumerate_atoms(right_ideal_witness(4));
    CHECK(atoms.size() == 8);  // 2^(4-1)
    std::uint64_t previous_mask = 0;
    for (const auto& atom : atoms) {
        std::uint64_t mask = 0;
        for (int q : atom.states) mask |= std::uint64_t{1} << (q - 1);
        CHECK(mask > previous_mask);
        previous_mask = mask;
        CHECK(atom.complexity >= 1);
        // Nonempty atoms only: the atom automaton accepts something.
        CHECK_FALSE(atom_dfa(right_ideal_witness(4), atom.states).final_states().empty());
    }
    // Every realized subset of a right ideal witness contains the final state.
    for (const auto& atom : atoms)
        CHECK(std::find(atom.states.begin(), atom.states.end(), 4) != atom.states.end());
}

TEST_CASE("atom complexities are consistent across entry points") {
    const Dfa min = left_ideal_witness(4);
    for (const auto& atom : enumerate_atoms(min))
        CHECK(atom.complexity == complexity(atom_dfa(min, atom.states)));
}

TEST_CASE("empty atom yields the empty language") {
    // For a right ideal, no word can accept from the final state's complement
    // alone, so the atom of the empty subset is empty.
    const Dfa empty_atom = atom_dfa(right_ideal_witness(4), {});
    CHECK(empty_atom.state_count() == 1);
    CHECK(empty_atom.final_states().empty());
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(atom_dfa(oracle::duplicate_state(right_ideal_witness(4), 2), {4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(atom_dfa(right_ideal_witness(4), {5}), std::invalid_argument);

    // 13 states: single atoms still fine, full enumeration refused.
    std::vector<int> images(13);
    for (int q = 1; q <= 13; ++q) images[static_cast<std::size_t>(q) - 1] = q % 13 + 1;
    const Dfa cyclic(13, {"a"}, {Transformation(images)}, 1, {13});
    REQUIRE(complexity(cyclic) == 13);
    CHECK_NOTHROW(atom_dfa(cyclic, {1, 2, 3}));
    CHECK_THROWS_AS(enumerate_atoms(cyclic), std::invalid_argument);
}

}  // TEST_SUITE
