#include "ideallab/bounds.hpp"

#include <stdexcept>

namespace ideallab {

namespace {

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

std::uint64_t pow2(int exp) { return std::uint64_t{1} << exp; }

void check_range(IdealKind kind, int n, const char* name) {
    if (n < min_witness_size(kind))
        throw std::invalid_argument(std::string(name) + " = " + std::to_string(n) + " below " +
                                    to_string(kind) + " ideal witness minimum " +
                                    std::to_string(min_witness_size(kind)));
}

}  // namespace

std::string to_string(IdealKind kind) {
    switch (kind) {
        case IdealKind::Right: return "right";
        case IdealKind::Left: return "left";
        case IdealKind::TwoSided: return "two_sided";
    }
    throw std::invalid_argument("unknown ideal kind");
}

IdealKind ideal_kind_from_string(const std::string& name) {
    if (name == "right") return IdealKind::Right;
    if (name == "left") return IdealKind::Left;
    if (name == "two_sided" || name == "two-sided") return IdealKind::TwoSided;
    throw std::invalid_argument("unknown ideal class \"" + name +
                                "\" (expected right, left or two_sided)");
}

int min_witness_size(IdealKind kind) {
    switch (kind) {
        case IdealKind::Right: return 3;
        case IdealKind::Left: return 4;
        case IdealKind::TwoSided: return 5;
    }
    throw std::invalid_argument("unknown ideal kind");
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * static_cast<std::uint64_t>(n - k + i);
        out /= static_cast<std::uint64_t>(i);
    }
    return out;
}

std::uint64_t expected_syntactic_semigroup(IdealKind kind, int n) {
    check_range(kind, n, "n");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    switch (kind) {
        case IdealKind::Right: return ipow(un, n - 1);
        case IdealKind::Left: return ipow(un, n - 1) + un - 1;
        case IdealKind::TwoSided:
            return ipow(un, n - 2) + static_cast<std::uint64_t>(n - 2) * pow2(n - 2) + 1;
    }
    throw std::invalid_argument("unknown ideal kind");
}

std::vector<int> expected_quotient_profile(IdealKind kind, int n) {
    check_range(kind, n, "n");
    std::vector<int> profile(static_cast<std::size_t>(n), n);
    if (kind != IdealKind::Left) profile.back() = 1;
    return profile;
}

std::uint64_t expected_atom_count(IdealKind kind, int n) {
    check_range(kind, n, "n");
    switch (kind) {
        case IdealKind::Right: return pow2(n - 1);
        case IdealKind::Left: return pow2(n - 1) + 1;
        case IdealKind::TwoSided: return pow2(n - 2) + 1;
    }
    throw std::invalid_argument("unknown ideal kind");
}

std::optional<std::uint64_t> expected_atom_complexity(IdealKind kind, int n,
                                                      const std::vector<int>& s) {
    check_range(kind, n, "n");
    for (int q : s)
        if (q < 1 || q > n) throw std::invalid_argument("atom subset state out of range");
    const int size = static_cast<int>(s.size());
    const bool full = size == n;
    const bool empty = size == 0;

    switch (kind) {
        case IdealKind::Right: {
            if (full) return pow2(n - 1);
            if (empty) return std::nullopt;
            std::uint64_t sum = 1;
            for (int x = 1; x <= size; ++x)
                for (int y = 1; y <= n - size; ++y)
                    sum += binomial(n - 1, x - 1) * binomial(n - x, y);
            return sum;
        }
        case IdealKind::Left: {
            if (full) return static_cast<std::uint64_t>(n);
            if (empty) return pow2(n - 1);
            std::uint64_t sum = 1;
            for (int x = 1; x <= size; ++x)
                for (int y = 1; y <= n - size; ++y)
                    sum += binomial(n - 1, x) * binomial(n - x - 1, y - 1);
            return sum;
        }
        case IdealKind::TwoSided: {
            if (full) return static_cast<std::uint64_t>(n);
            bool all_but_first = size == n - 1;
            if (all_but_first)
                for (int q : s)
                    if (q == 1) all_but_first = false;
            if (all_but_first) return pow2(n - 2) + static_cast<std::uint64_t>(n) - 1;
            std::uint64_t sum = 1;
            for (int x = 1; x <= size; ++x)
                for (int y = 1; y <= n - size; ++y)
                    sum += binomial(n - 2, x - 1) * binomial(n - x - 1, y - 1);
            return sum;
        }
    }
    throw std::invalid_argument("unknown ideal kind");
}

std::uint64_t expected_reversal(IdealKind kind, int n) { return expected_atom_count(kind, n); }

std::uint64_t expected_star(IdealKind kind, int n) {
    check_range(kind, n, "n");
    return static_cast<std::uint64_t>(n) + 1;
}

std::uint64_t expected_product(IdealKind kind, int m, int n) {
    check_range(kind, m, "m");
    check_range(kind, n, "n");
    const std::uint64_t um = static_cast<std::uint64_t>(m);
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    if (kind == IdealKind::Right) return um + pow2(n - 2);
    return um + un - 1;
}

std::uint64_t expected_boolean(IdealKind kind, SetOp op, int m, int n) {
    check_range(kind, m, "m");
    check_range(kind, n, "n");
    const std::uint64_t mn = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n);
    if (kind == IdealKind::Left) return mn;
    switch (op) {
        case SetOp::Intersection:
        case SetOp::SymmetricDifference: return mn;
        case SetOp::Difference: return mn - static_cast<std::uint64_t>(m - 1);
        case SetOp::Union: return mn - static_cast<std::uint64_t>(m + n - 2);
    }
    throw std::invalid_argument("unknown set operation");
}

}  // namespace ideallab
