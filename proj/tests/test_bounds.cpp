#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ideallab/atoms.hpp"
#include "ideallab/bounds.hpp"
#include "ideallab/witnesses.hpp"

using namespace ideallab;

TEST_SUITE("bounds") {

TEST_CASE("kind names") {
    CHECK(to_string(IdealKind::Right) == "right");
    CHECK(to_string(IdealKind::Left) == "left");
    CHECK(to_string(IdealKind::TwoSided) == "two_sided");
    CHECK(ideal_kind_from_string("right") == IdealKind::Right);
    CHECK(ideal_kind_from_string("two_sided") == IdealKind::TwoSided);
    CHECK(ideal_kind_from_string("two-sided") == IdealKind::TwoSided);
    CHECK_THROWS_AS(ideal_kind_from_string("regular"), std::invalid_argument);
    CHECK(min_witness_size(IdealKind::Right) == 3);
    CHECK(min_witness_size(IdealKind::Left) == 4);
    CHECK(min_witness_size(IdealKind::TwoSided) == 5);
}

TEST_CASE("binomial against pascal's triangle") {
    std::vector<std::vector<std::uint64_t>> pascal(31);
    for (int n = 0; n <= 30; ++n) {
        pascal[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 1);
        for (int k = 1; k < n; ++k)
            pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                pascal[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k) - 1] +
                pascal[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k)];
        for (int k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
    }
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("syntactic semigroup bounds") {
    CHECK(expected_syntactic_semigroup(IdealKind::Right, 3) == 9);
    CHECK(expected_syntactic_semigroup(IdealKind::Right, 4) == 64);
    CHECK(expected_syntactic_semigroup(IdealKind::Right, 5) == 625);
    CHECK(expected_syntactic_semigroup(IdealKind::Left, 4) == 67);
    CHECK(expected_syntactic_semigroup(IdealKind::Left, 5) == 629);
    CHECK(expected_syntactic_semigroup(IdealKind::TwoSided, 5) == 150);
    CHECK(expected_syntactic_semigroup(IdealKind::TwoSided, 6) == 1361);
    CHECK_THROWS_AS(expected_syntactic_semigroup(IdealKind::TwoSided, 4),
                    std::invalid_argument);
}

TEST_CASE("quotient profiles") {
    CHECK(expected_quotient_profile(IdealKind::Right, 4) == std::vector<int>{4, 4, 4, 1});
    CHECK(expected_quotient_profile(IdealKind::Left, 4) == std::vector<int>{4, 4, 4, 4});
    CHECK(expected_quotient_profile(IdealKind::TwoSided, 5) ==
          std::vector<int>{5, 5, 5, 5, 1});
}

TEST_CASE("atom counts and reversal agree") {
    CHECK(expected_atom_count(IdealKind::Right, 4) == 8);
    CHECK(expected_atom_count(IdealKind::Left, 4) == 9);
    CHECK(expected_atom_count(IdealKind::TwoSided, 5) == 9);
    for (auto kind : {IdealKind::Right, IdealKind::Left, IdealKind::TwoSided})
        for (int n = min_witness_size(kind); n <= 8; ++n)
            CHECK(expected_reversal(kind, n) == expected_atom_count(kind, n));
}

TEST_CASE("star and product bounds") {
    CHECK(expected_star(IdealKind::Right, 3) == 4);
    CHECK(expected_star(IdealKind::Left, 4) == 5);
    CHECK(expected_star(IdealKind::TwoSided, 5) == 6);
    CHECK(expected_product(IdealKind::Right, 4, 5) == 12);
    CHECK(expected_product(IdealKind::Right, 3, 3) == 5);
    CHECK(expected_product(IdealKind::Left, 4, 5) == 8);
    CHECK(expected_product(IdealKind::TwoSided, 5, 6) == 10);
    CHECK_THROWS_AS(expected_product(IdealKind::TwoSided, 4, 5), std::invalid_argument);
}

TEST_CASE("boolean bounds") {
    CHECK(expected_boolean(IdealKind::Right, SetOp::Intersection, 3, 4) == 12);
    CHECK(expected_boolean(IdealKind::Right, SetOp::SymmetricDifference, 3, 4) == 12);
    CHECK(expected_boolean(IdealKind::Right, SetOp::Difference, 3, 4) == 10);
    CHECK(expected_boolean(IdealKind::Right, SetOp::Union, 3, 4) == 7);
    for (SetOp op : {SetOp::Union, SetOp::Intersection, SetOp::Difference,
                     SetOp::SymmetricDifference})
        CHECK(expected_boolean(IdealKind::Left, op, 4, 5) == 20);
    CHECK(expected_boolean(IdealKind::TwoSided, SetOp::Intersection, 5, 6) == 30);
    CHECK(expected_boolean(IdealKind::TwoSided, SetOp::Difference, 5, 6) == 26);
    CHECK(expected_boolean(IdealKind::TwoSided, SetOp::Union, 5, 6) == 21);
}

TEST_CASE("atom complexity formulas") {
    // Boundary cases per class.
    CHECK(expected_atom_complexity(IdealKind::Right, 4, {1, 2, 3, 4}) == 8);
    CHECK(expected_atom_complexity(IdealKind::Right, 5, {1, 2, 3, 4, 5}) == 16);
    CHECK_FALSE(expected_atom_complexity(IdealKind::Right, 4, {}).has_value());
    CHECK(expected_atom_complexity(IdealKind::Left, 4, {1, 2, 3, 4}) == 4);
    CHECK(expected_atom_complexity(IdealKind::Left, 4, {}) == 8);
    CHECK(expected_atom_complexity(IdealKind::TwoSided, 5, {1, 2, 3, 4, 5}) == 5);
    CHECK(expected_atom_complexity(IdealKind::TwoSided, 5, {2, 3, 4, 5}) == 12);

    // Interior cases, evaluated by hand from the double sums.
    CHECK(expected_atom_complexity(IdealKind::Right, 4, {4}) == 8);
    CHECK(expected_atom_complexity(IdealKind::Right, 4, {1, 4}) == 16);

    CHECK_THROWS_AS(expected_atom_complexity(IdealKind::Right, 4, {5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(expected_atom_complexity(IdealKind::Right, 2, {1}),
                    std::invalid_argument);
}

TEST_CASE("atom complexity formulas match direct computation on witnesses") {
    struct Case {
        IdealKind kind;
        int n;
    };
    for (const auto& c : {Case{IdealKind::Right, 4}, Case{IdealKind::Right, 5},
                          Case{IdealKind::Left, 4}, Case{IdealKind::TwoSided, 5}}) {
        const Dfa witness = ideal_witness(c.kind, c.n);
        const auto atoms = enumerate_atoms(witness);
        CHECK(atoms.size() == expected_atom_count(c.kind, c.n));
        for (const auto& atom : atoms) {
            const auto expected = expected_atom_complexity(c.kind, c.n, atom.states);
            REQUIRE(expected.has_value());
            CHECK(*expected == static_cast<std::uint64_t>(atom.complexity));
        }
    }
}

}  // TEST_SUITE
