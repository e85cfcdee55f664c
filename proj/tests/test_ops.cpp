#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "ideallab/dfa.hpp"
#include "ideallab/nfa.hpp"
#include "ideallab/ops.hpp"
#include "ideallab/witnesses.hpp"
#include "oracles.hpp"

using namespace ideallab;

namespace {

bool accepts_reversed(const Dfa& dfa, const Word& word) {
    return dfa.accepts(Word(word.rbegin(), word.rend()));
}

bool concat_member(const Dfa& a, const Dfa& b, const Word& word) {
    for (std::size_t i = 0; i <= word.size(); ++i)
        if (a.accepts(Word(word.begin(), word.begin() + static_cast<long>(i))) &&
            b.accepts(Word(word.begin() + static_cast<long>(i), word.end())))
            return true;
    return false;
}

bool star_member(const Dfa& dfa, const Word& word) {
    std::vector<char> dp(word.size() + 1, 0);
    dp[0] = 1;
    for (std::size_t j = 1; j <= word.size(); ++j)
        for (std::size_t i = 0; i < j && !dp[j]; ++i)
            if (dp[i] && dfa.accepts(Word(word.begin() + static_cast<long>(i),
                                          word.begin() + static_cast<long>(j))))
                dp[j] = 1;
    return dp[word.size()];
}

bool apply_op(SetOp op, bool x, bool y) {
    switch (op) {
        case SetOp::Union: return x || y;
        case SetOp::Intersection: return x && y;
        case SetOp::Difference: return x && !y;
        case SetOp::SymmetricDifference: return x != y;
    }
    return false;
}

// The language {a} over {a, b}: 3 states with a sink.
Dfa single_a() {
    return Dfa(3, {"a", "b"},
               {Transformation({2, 3, 3}), Transformation({3, 3, 3})}, 1, {2});
}

}  // namespace

TEST_SUITE("ops") {

TEST_CASE("determinize resolves epsilon closures and dead subsets") {
    Nfa nfa(3, {"a", "b"});
    nfa.add_initial(1);
    nfa.add_epsilon(1, 2);
    nfa.add_transition(2, 0, 3);
    nfa.add_final(3);
    const Dfa det = determinize(nfa);
    CHECK(det.accepts({0}));
    CHECK_FALSE(det.accepts({}));
    CHECK_FALSE(det.accepts({1}));
    CHECK_FALSE(det.accepts({0, 0}));
    CHECK(complexity(det) == 3);  // start, accept, sink

    Nfa orphan(2, {"a"});
    orphan.add_final(1);
    const Dfa dead = determinize(orphan);
    CHECK(complexity(dead) == 1);
    CHECK_FALSE(dead.accepts({}));
    CHECK_FALSE(dead.accepts({0}));
}

TEST_CASE("determinize and minimize agree with enumeration on random nfas") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Nfa nfa = oracle::random_nfa(rng, 5, 2);
        const Dfa det = determinize(nfa);
        const Dfa min = minimize(det);
        oracle::for_each_word(nfa.alphabet_size(), 6, [&](const Word& w) {
            const bool expected = nfa.accepts(w);
            CHECK(det.accepts(w) == expected);
            CHECK(min.accepts(w) == expected);
        });
        if (det.state_count() <= 8)
            CHECK(min.state_count() ==
                  oracle::distinguishability_classes(det, det.state_count()));
    }
}

TEST_CASE("minimize matches the distinguishability oracle on random dfas") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const Dfa dfa = oracle::random_dfa(rng, 6, 2);
        const Dfa min = minimize(dfa);
        CHECK(min.state_count() ==
              oracle::distinguishability_classes(dfa, dfa.state_count()));
        oracle::for_each_word(dfa.alphabet_size(), 6, [&](const Word& w) {
            CHECK(min.accepts(w) == dfa.accepts(w));
        });
        CHECK(minimize(min) == min);
    }
}

TEST_CASE("minimal canonical forms are unique") {
    const Dfa witness = right_ideal_witness(5);
    CHECK(minimize(witness) == witness);

    const Dfa dup = oracle::duplicate_state(witness, 3);
    CHECK(dup.state_count() == 6);
    CHECK(complexity(dup) == 5);
    CHECK(minimize(dup) == witness);

    const Dfa renamed = oracle::permute_states(witness, {4, 2, 5, 1, 3});
    CHECK(renamed != witness);
    CHECK(minimize(renamed) == witness);

    CHECK(minimize(left_ideal_witness(5)) == left_ideal_witness(5));
    CHECK(isomorphic(minimize(two_sided_witness(6)), two_sided_witness(6)));
    CHECK(complexity(two_sided_witness(6)) == 6);
}

TEST_CASE("canonicalize renumbers by breadth-first discovery") {
    const Dfa witness = left_ideal_witness(4);
    CHECK(canonicalize(witness) == witness);
    const Dfa renamed = oracle::permute_states(witness, {2, 3, 4, 1});
    CHECK(canonicalize(renamed) == witness);
    CHECK(canonicalize(canonicalize(renamed)) == canonicalize(renamed));
    CHECK(canonicalize(renamed).initial_state() == 1);
}

TEST_CASE("quotient complexities") {
    const Dfa witness = right_ideal_witness(5);
    CHECK(quotient_complexities(witness) == std::vector<int>{5, 5, 5, 5, 1});
    const Dfa restricted = apply_dialect(witness, PartialPermutation::parse("a,-,-,d"));
    CHECK(quotient_complexities(restricted) == std::vector<int>{5, 5, 5, 5, 1});

    const Dfa dup = oracle::duplicate_state(witness, 2);
    auto profile = quotient_complexities(dup);
    CHECK(profile.size() == 6);
    CHECK(profile[5] == 5);  // the copy of state 2 keeps its quotient

    // A state nothing reaches reports 0.
    const Dfa loop(2, {"a"}, {Transformation({1, 1})}, 1, {1});
    CHECK(quotient_complexities(loop) == std::vector<int>{1, 0});
}

TEST_CASE("equivalence and isomorphism") {
    const Dfa witness = right_ideal_witness(4);
    CHECK(equivalent(witness, oracle::duplicate_state(witness, 2)));
    CHECK_FALSE(equivalent(witness, right_ideal_witness(5)));
    CHECK_THROWS_AS(equivalent(witness, left_ideal_witness(4)), std::invalid_argument);

    CHECK(isomorphic(witness, oracle::permute_states(witness, {3, 1, 4, 2})));
    CHECK_FALSE(isomorphic(witness, right_ideal_witness(5)));
    CHECK_FALSE(isomorphic(witness, left_ideal_witness(4)));
    // Same states and languages up to letter names, but letters pair by name.
    const Dfa swapped = apply_dialect(witness, PartialPermutation::parse("b,a,c,d"));
    CHECK_FALSE(isomorphic(witness, swapped));
    CHECK(isomorphic(witness, sort_alphabet(swapped)) ==
          isomorphic(sort_alphabet(swapped), witness));
}

TEST_CASE("sort alphabet keeps the machine, reorders letters") {
    const Dfa witness = right_ideal_witness(4);
    const Dfa swapped = apply_dialect(witness, PartialPermutation::parse("b,a,c,d"));
    CHECK(swapped.alphabet() == std::vector<std::string>{"b", "a", "c", "d"});
    const Dfa sorted = sort_alphabet(swapped);
    CHECK(sorted.alphabet() == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(sorted.letter_index("a") == 0);
    CHECK(sorted.transition(0) == swapped.transition(1));
    CHECK(sort_alphabet(witness) == witness);
}

TEST_CASE("complement flips membership") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const Dfa dfa = oracle::random_dfa(rng, 5, 2);
        const Dfa comp = complement(dfa);
        oracle::for_each_word(dfa.alphabet_size(), 5, [&](const Word& w) {
            CHECK(comp.accepts(w) != dfa.accepts(w));
        });
        CHECK(complement(comp) == dfa);
    }
}

TEST_CASE("boolean products implement their set operations") {
    std::mt19937 rng(14);
    const SetOp ops[] = {SetOp::Union, SetOp::Intersection, SetOp::Difference,
                         SetOp::SymmetricDifference};
    for (int trial = 0; trial < 15; ++trial) {
        const Dfa a = oracle::random_dfa(rng, 5, 2, 2);
        const Dfa b = oracle::random_dfa(rng, 5, 2, 2);
        for (SetOp op : ops) {
            const Dfa product = boolean_product(a, b, op);
            oracle::for_each_word(2, 6, [&](const Word& w) {
                CHECK(product.accepts(w) == apply_op(op, a.accepts(w), b.accepts(w)));
            });
        }
        // De Morgan, as canonical minimal forms.
        CHECK(minimize(complement(boolean_product(a, b, SetOp::Union))) ==
              boolean_product(complement(a), complement(b), SetOp::Intersection));
    }
}

TEST_CASE("boolean product rejects mismatched alphabets") {
    const Dfa a = universal_dfa({"a", "b"});
    const Dfa b = universal_dfa({"a", "c"});
    try {
        boolean_product(a, b, SetOp::Union);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        CHECK(what.find("(a,b)") != std::string::npos);
        CHECK(what.find("(a,c)") != std::string::npos);
    }
}

TEST_CASE("concatenation") {
    const Dfa a = single_a();
    const Dfa b = apply_dialect(single_a(), PartialPermutation::parse("b,a"));
    const Dfa ab = concat_epsilon(a, sort_alphabet(b));
    oracle::for_each_word(2, 4, [&](const Word& w) {
        CHECK(ab.accepts(w) == (w == Word{0, 1}));
    });

    const Dfa uni = universal_dfa({"a", "b"});
    CHECK(concat_epsilon(uni, uni) == minimize(uni));

    std::mt19937 rng(15);
    for (int trial = 0; trial < 15; ++trial) {
        const Dfa x = oracle::random_dfa(rng, 4, 2, 2);
        const Dfa y = oracle::random_dfa(rng, 4, 2, 2);
        const Dfa xy = concat_epsilon(x, y);
        oracle::for_each_word(2, 6, [&](const Word& w) {
            CHECK(xy.accepts(w) == concat_member(x, y, w));
        });
    }
    CHECK_THROWS_AS(concat_epsilon(a, universal_dfa({"a", "c"})), std::invalid_argument);
}

TEST_CASE("redirect concatenation matches the epsilon route") {
    for (int m = 4; m <= 6; ++m)
        for (int n = 4; n <= 6; ++n) {
            const auto [a, b] = product_witness_pair(IdealKind::Left, m, n);
            const Dfa raw = concat_ideal_redirect(a, b);
            CHECK(raw.state_count() == m + n - 1);
            CHECK(equivalent(raw, concat_epsilon(a, b)));
            CHECK(minimize(raw) == concat_epsilon(a, b));
        }

    // Left operand must have exactly one accepting state.
    const Dfa two_finals(2, {"a"}, {Transformation({2, 1})}, 1, {1, 2});
    CHECK_THROWS_AS(concat_ideal_redirect(two_finals, two_finals), std::invalid_argument);
    const Dfa none(1, {"a"}, {Transformation({1})}, 1, {});
    CHECK_THROWS_AS(concat_ideal_redirect(none, none), std::invalid_argument);
}

TEST_CASE("star") {
    const Dfa none = empty_language_dfa({"a", "b"});
    const Dfa eps_only = star(none);
    CHECK(eps_only.accepts({}));
    CHECK_FALSE(eps_only.accepts({0}));
    CHECK(complexity(eps_only) == 2);

    const Dfa a_star = star(single_a());
    CHECK(complexity(a_star) == 2);
    oracle::for_each_word(2, 5, [&](const Word& w) {
        bool all_a = true;
        for (int c : w) all_a = all_a && c == 0;
        CHECK(a_star.accepts(w) == all_a);
    });

    std::mt19937 rng(16);
    for (int trial = 0; trial < 15; ++trial) {
        const Dfa dfa = oracle::random_dfa(rng, 4, 2);
        const Dfa starred = star(dfa);
        oracle::for_each_word(dfa.alphabet_size(), 6, [&](const Word& w) {
            CHECK(starred.accepts(w) == star_member(dfa, w));
        });
    }
}

TEST_CASE("reversal") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Dfa dfa = oracle::random_dfa(rng, 5, 2);
        const Dfa rev = reverse(dfa);
        oracle::for_each_word(dfa.alphabet_size(), 6, [&](const Word& w) {
            CHECK(rev.accepts(w) == accepts_reversed(dfa, w));
        });
        CHECK(minimize(reverse(rev)) == minimize(dfa));
    }
}

}  // TEST_SUITE
