#include "ideallab/witnesses.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ideallab/ops.hpp"

namespace ideallab {

namespace {

void check_witness_range(IdealKind kind, int n) {
    const int lo = min_witness_size(kind);
    if (n < lo)
        throw std::invalid_argument("n >= " + std::to_string(lo) + " required for " +
                                    to_string(kind) + " ideal witness, got " + std::to_string(n));
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> out;
    for (int q = lo; q <= hi; ++q) out.push_back(q);
    return out;
}

}  // namespace

PartialPermutation::PartialPermutation(std::vector<std::optional<std::string>> slots)
    : slots_(std::move(slots)) {
    if (slots_.empty()) throw std::invalid_argument("dialect needs at least one slot");
    std::set<std::string> seen;
    for (const auto& s : slots_) {
        if (!s) continue;
        if (s->empty()) throw std::invalid_argument("dialect slot image must not be empty");
        if (!seen.insert(*s).second)
            throw std::invalid_argument("dialect image \"" + *s + "\" used twice");
    }
}

PartialPermutation PartialPermutation::parse(const std::string& text) {
    std::vector<std::optional<std::string>> slots;
    std::string token;
    auto flush = [&] {
        const auto begin = token.find_first_not_of(" \t");
        const auto end = token.find_last_not_of(" \t");
        std::string trimmed =
            begin == std::string::npos ? "" : token.substr(begin, end - begin + 1);
        if (trimmed.empty())
            throw std::invalid_argument("dialect \"" + text + "\" has an empty slot");
        if (trimmed == "-")
            slots.emplace_back(std::nullopt);
        else
            slots.emplace_back(std::move(trimmed));
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',')
            flush();
        else
            token += ch;
    }
    flush();
    return PartialPermutation(std::move(slots));
}

std::string PartialPermutation::to_string() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (i) out += ",";
        out += slots_[static_cast<std::size_t>(i)] ? *slots_[static_cast<std::size_t>(i)] : "-";
    }
    return out;
}

Dfa regular_witness(int n) {
    if (n < 3) throw std::invalid_argument("n >= 3 required for regular witness, got " +
                                           std::to_string(n));
    std::vector<Transformation> delta = {
        Transformation::cycle(n, range(1, n)),
        Transformation::transposition(n, 1, 2),
        Transformation::redirect(n, n, 1),
    };
    return Dfa(n, {"a", "b", "c"}, std::move(delta), 1, {n});
}

Dfa right_ideal_witness(int n) {
    check_witness_range(IdealKind::Right, n);
    std::vector<Transformation> delta = {
        Transformation::cycle(n, range(1, n - 1)),
        Transformation::cycle(n, range(2, n - 1)),  // identity when n = 3
        Transformation::redirect(n, n - 1, 1),
        Transformation::redirect(n, n - 1, n),
    };
    return Dfa(n, {"a", "b", "c", "d"}, std::move(delta), 1, {n});
}

Dfa left_ideal_witness(int n) {
    check_witness_range(IdealKind::Left, n);
    std::vector<Transformation> delta = {
        Transformation::cycle(n, range(2, n)),
        Transformation::transposition(n, 2, 3),
        Transformation::redirect(n, n, 2),
        Transformation::redirect(n, n, 1),
        Transformation::collapse(n, range(1, n), 2),
    };
    return Dfa(n, {"a", "b", "c", "d", "e"}, std::move(delta), 1, {n});
}

Dfa two_sided_witness(int n) {
    check_witness_range(IdealKind::TwoSided, n);
    std::vector<Transformation> delta = {
        Transformation::cycle(n, range(2, n - 1)),
        Transformation::transposition(n, 2, 3),
        Transformation::redirect(n, n - 1, 2),
        Transformation::redirect(n, n - 1, 1),
        Transformation::collapse(n, range(1, n - 1), 2),
        Transformation::redirect(n, 2, n),
    };
    return Dfa(n, {"a", "b", "c", "d", "e", "f"}, std::move(delta), 1, {n});
}

Dfa ideal_witness(IdealKind kind, int n) {
    switch (kind) {
        case IdealKind::Right: return right_ideal_witness(n);
        case IdealKind::Left: return left_ideal_witness(n);
        case IdealKind::TwoSided: return two_sided_witness(n);
    }
    throw std::invalid_argument("unknown ideal kind");
}

Dfa apply_dialect(const Dfa& dfa, const PartialPermutation& pi) {
    if (pi.size() != dfa.alphabet_size())
        throw std::invalid_argument("dialect has " + std::to_string(pi.size()) +
                                    " slots for an alphabet of " +
                                    std::to_string(dfa.alphabet_size()) + " letters");
    std::vector<std::string> alphabet;
    std::vector<Transformation> delta;
    for (int i = 0; i < pi.size(); ++i) {
        const auto& image = pi.slot(i);
        if (!image) continue;
        if (dfa.letter_index(*image) < 0)
            throw std::invalid_argument("dialect image \"" + *image +
                                        "\" is not a letter of the source alphabet");
        alphabet.push_back(*image);
        delta.push_back(dfa.transition(i));
    }
    if (alphabet.empty())
        throw std::invalid_argument("dialect drops every letter of the alphabet");
    return Dfa(dfa.state_count(), std::move(alphabet), std::move(delta), dfa.initial_state(),
               dfa.final_states());
}

bool check_ideal(const Dfa& dfa, IdealKind kind) {
    const Dfa minimal = minimize(dfa);
    if (minimal.final_states().empty()) return false;  // empty language
    const Dfa universal = universal_dfa(dfa.alphabet());
    Dfa extended = [&] {
        switch (kind) {
            case IdealKind::Right: return concat_epsilon(minimal, universal);
            case IdealKind::Left: return concat_epsilon(universal, minimal);
            case IdealKind::TwoSided:
                return concat_epsilon(universal, concat_epsilon(minimal, universal));
        }
        throw std::invalid_argument("unknown ideal kind");
    }();
    return extended == minimal;
}

std::string product_dialect(IdealKind kind) {
    switch (kind) {
        case IdealKind::Right: return "a,b,-,d";
        case IdealKind::Left: return "a,-,-,-,e";
        case IdealKind::TwoSided: return "a,-,-,-,e,f";
    }
    throw std::invalid_argument("unknown ideal kind");
}

std::pair<std::string, std::string> boolean_dialect_pair(IdealKind kind) {
    switch (kind) {
        case IdealKind::Right: return {"a,b,-,d", "b,a,-,d"};
        case IdealKind::Left: return {"a,-,c,-,e", "a,-,e,-,c"};
        case IdealKind::TwoSided: return {"a,b,-,d,e,f", "b,a,-,d,e,f"};
    }
    throw std::invalid_argument("unknown ideal kind");
}

std::pair<Dfa, Dfa> product_witness_pair(IdealKind kind, int m, int n) {
    const auto pi = PartialPermutation::parse(product_dialect(kind));
    return {sort_alphabet(apply_dialect(ideal_witness(kind, m), pi)),
            sort_alphabet(apply_dialect(ideal_witness(kind, n), pi))};
}

std::pair<Dfa, Dfa> boolean_witness_pair(IdealKind kind, int m, int n, bool same_stream) {
    if (same_stream && kind == IdealKind::Left)
        throw std::invalid_argument(
            "left ideals have no same-stream boolean bound; use the dialect pair");
    if (same_stream && m == n)
        throw std::invalid_argument("same-stream boolean bounds require m != n");
    auto [first, second] = boolean_dialect_pair(kind);
    if (same_stream) second = first;
    return {sort_alphabet(apply_dialect(ideal_witness(kind, m), PartialPermutation::parse(first))),
            sort_alphabet(
                apply_dialect(ideal_witness(kind, n), PartialPermutation::parse(second)))};
}

}  // namespace ideallab
