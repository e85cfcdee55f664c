#include "ideallab/ops.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace ideallab {

namespace {

// 0-based scratch form used by the construction helpers.
struct Flat {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> delta;  // [letter][state] -> state
    std::vector<char> fin;
    int init = 0;
};

Flat to_flat(const Dfa& dfa) {
    Flat f;
    f.n = dfa.state_count();
    f.k = dfa.alphabet_size();
    f.delta.assign(static_cast<std::size_t>(f.k), {});
    for (int c = 0; c < f.k; ++c) {
        f.delta[static_cast<std::size_t>(c)].resize(static_cast<std::size_t>(f.n));
        for (int q = 0; q < f.n; ++q)
            f.delta[static_cast<std::size_t>(c)][static_cast<std::size_t>(q)] =
                dfa.next(q + 1, c) - 1;
    }
    f.fin.assign(static_cast<std::size_t>(f.n), 0);
    for (int q : dfa.final_states()) f.fin[static_cast<std::size_t>(q) - 1] = 1;
    f.init = dfa.initial_state() - 1;
    return f;
}

Dfa from_flat(const Flat& f, std::vector<std::string> alphabet) {
    std::vector<Transformation> delta;
    delta.reserve(static_cast<std::size_t>(f.k));
    for (int c = 0; c < f.k; ++c) {
        std::vector<int> images(static_cast<std::size_t>(f.n));
        for (int q = 0; q < f.n; ++q)
            images[static_cast<std::size_t>(q)] =
                f.delta[static_cast<std::size_t>(c)][static_cast<std::size_t>(q)] + 1;
        delta.emplace_back(std::move(images));
    }
    std::vector<int> finals;
    for (int q = 0; q < f.n; ++q)
        if (f.fin[static_cast<std::size_t>(q)]) finals.push_back(q + 1);
    return Dfa(f.n, std::move(alphabet), std::move(delta), f.init + 1, std::move(finals));
}

// Breadth-first renumbering of the part reachable from the initial state,
// letters tried in alphabet order.
Flat reachable_part(const Flat& f) {
    std::vector<int> order;
    std::vector<int> id(static_cast<std::size_t>(f.n), -1);
    std::queue<int> queue;
    id[static_cast<std::size_t>(f.init)] = 0;
    order.push_back(f.init);
    queue.push(f.init);
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop();
        for (int c = 0; c < f.k; ++c) {
            int t = f.delta[static_cast<std::size_t>(c)][static_cast<std::size_t>(q)];
            if (id[static_cast<std::size_t>(t)] < 0) {
                id[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
                order.push_back(t);
                queue.push(t);
            }
        }
    }
    Flat g;
    g.n = static_cast<int>(order.size());
    g.k = f.k;
    g.init = 0;
    g.delta.assign(static_cast<std::size_t>(g.k),
                   std::vector<int>(static_cast<std::size_t>(g.n)));
    g.fin.assign(static_cast<std::size_t>(g.n), 0);
    for (int nq = 0; nq < g.n; ++nq) {
        int q = order[static_cast<std::size_t>(nq)];
        g.fin[static_cast<std::size_t>(nq)] = f.fin[static_cast<std::size_t>(q)];
        for (int c = 0; c < g.k; ++c)
            g.delta[static_cast<std::size_t>(c)][static_cast<std::size_t>(nq)] =
                id[static_cast<std::size_t>(
                    f.delta[static_cast<std::size_t>(c)][static_cast<std::size_t>(q)])];
    }
    return g;
}

// Hopcroft refinement; returns the block index of each state.  Every state of
// `f` must be reachable.
std::vector<int> hopcroft_blocks(const Flat& f) {
    std::vector<std::vector<std::vector<int>>> inv(
        static_cast<std::size_t>(f.k),
        std::vector<std::vector<int>>(static_cast<std::size_t>(f.n)));
    for (int c = 0; c < f.k; ++c)
        for (int q = 0; q < f.n; ++q)
            inv[static_cast<std::size_t>(c)]
               [static_cast<std::size_t>(
                    f.delta[static_cast<std::size_t>(c)][static_cast<std::size_t>(q)])]
                   .push_back(q);

    std::vector<int> block_of(static_cast<std::size_t>(f.n), -1);
    std::vector<std::vector<int>> blocks;
    {
        std::vector<int> fin, nonfin;
        for (int q = 0; q < f.n; ++q)
            (f.fin[static_cast<std::size_t>(q)] ? fin : nonfin).push_back(q);
        for (auto* part : {&fin, &nonfin})
            if (!part->empty()) {
                for (int q : *part) block_of[static_cast<std::size_t>(q)] =
                    static_cast<int>(blocks.size());
                blocks.push_back(*part);
            }
    }

    std::deque<std::pair<int, int>> work;
    std::vector<std::vector<char>> queued;
    auto push = [&](int b, int c) {
        if (!queued[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)]) {
            queued[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] = 1;
            work.emplace_back(b, c);
        }
    };
    queued.assign(blocks.size(), std::vector<char>(static_cast<std::size_t>(f.k), 0));
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int c = 0; c < f.k; ++c) push(static_cast<int>(b), c);

    std::vector<int> in_x_count;
    std::vector<std::vector<int>> moved;
    while (!work.empty()) {
        auto [splitter, c] = work.front();
        work.pop_front();
        queued[static_cast<std::size_t>(splitter)][static_cast<std::size_t>(c)] = 0;

        // X = preimage of the splitter block under letter c.
        std::vector<int> touched;
        in_x_count.assign(blocks.size(), 0);
        moved.assign(blocks.size(), {});
        for (int a : blocks[static_cast<std::size_t>(splitter)])
            for (int q : inv[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)]) {
                int b = block_of[static_cast<std::size_t>(q)];
                if (in_x_count[static_cast<std::size_t>(b)]++ == 0) touched.push_back(b);
                moved[static_cast<std::size_t>(b)].push_back(q);
            }

        for (int b : touched) {
            auto& whole = blocks[static_cast<std::size_t>(b)];
            const auto& inside = moved[static_cast<std::size_t>(b)];
            if (inside.size() == whole.size()) continue;  // no split

            std::vector<int> outside;
            outside.reserve(whole.size() - inside.size());
            std::vector<char> mark(static_cast<std::size_t>(f.n), 0);
            for (int q : inside) mark[static_cast<std::size_t>(q)] = 1;
            for (int q : whole)
                if (!mark[static_cast<std::size_t>(q)]) outside.push_back(q);

            const int nb = static_cast<int>(blocks.size());
            whole = inside;
            for (int q : outside) block_of[static_cast<std::size_t>(q)] = nb;
            blocks.push_back(std::move(outside));
            queued.emplace_back(static_cast<std::size_t>(f.k), 0);

            for (int l = 0; l < f.k; ++l) {
                if (queued[static_cast<std::size_t>(b)][static_cast<std::size_t>(l)]) {
                    push(nb, l);
                } else {
                    const bool b_smaller = blocks[static_cast<std::size_t>(b)].size() <=
                                           blocks[static_cast<std::size_t>(nb)].size();
                    push(b_smaller ? b : nb, l);
                }
            }
        }
    }
    return block_of;
}

Flat quotient(const Flat& f, const std::vector<int>& block_of) {
    int m = 0;
    for (int b : block_of) m = std::max(m, b + 1);
    Flat g;
    g.n = m;
    g.k = f.k;
    g.init = block_of[static_cast<std::size_t>(f.init)];
    g.delta.assign(static_cast<std::size_t>(g.k),
                   std::vector<int>(static_cast<std::size_t>(m), -1));
    g.fin.assign(static_cast<std::size_t>(m), 0);
    for (int q = 0; q < f.n; ++q) {
        int b = block_of[static_cast<std::size_t>(q)];
        if (f.fin[static_cast<std::size_t>(q)]) g.fin[static_cast<std::size_t>(b)] = 1;
        for (int c = 0; c < g.k; ++c)
            g.delta[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)] =
                block_of[static_cast<std::size_t>(
                    f.delta[static_cast<std::size_t>(c)][static_cast<std::size_t>(q)])];
    }
    return g;
}

std::string alphabet_string(const std::vector<std::string>& alphabet) {
    std::string s = "(";
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        if (i) s += ",";
        s += alphabet[i];
    }
    return s + ")";
}

void require_same_alphabet(const Dfa& a, const Dfa& b, const std::string& op) {
    if (a.alphabet() != b.alphabet())
        throw std::invalid_argument(op + " needs identical ordered alphabets, got " +
                                    alphabet_string(a.alphabet()) + " and " +
                                    alphabet_string(b.alphabet()));
}

}  // namespace

std::string to_string(SetOp op) {
    switch (op) {
        case SetOp::Union: return "union";
        case SetOp::Intersection: return "intersection";
        case SetOp::Difference: return "difference";
        case SetOp::SymmetricDifference: return "symmetric_difference";
    }
    throw std::invalid_argument("unknown set operation");
}

Dfa canonicalize(const Dfa& dfa) {
    return from_flat(reachable_part(to_flat(dfa)), dfa.alphabet());
}

Dfa determinize(const Nfa& nfa) {
    const int n = nfa.state_count();
    if (n > 64) throw std::invalid_argument("determinize supports up to 64 states");
    const int k = nfa.alphabet_size();

    std::vector<std::uint64_t> eps_step(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<std::uint64_t>> step(
        static_cast<std::size_t>(k), std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
    for (int q = 1; q <= n; ++q) {
        for (int t : nfa.epsilon_targets(q))
            eps_step[static_cast<std::size_t>(q) - 1] |= std::uint64_t{1} << (t - 1);
        for (int c = 0; c < k; ++c)
            for (int t : nfa.targets(q, c))
                step[static_cast<std::size_t>(c)][static_cast<std::size_t>(q) - 1] |=
                    std::uint64_t{1} << (t - 1);
    }

    auto close = [&](std::uint64_t mask) {
        std::uint64_t todo = mask;
        while (todo) {
            const int q = std::countr_zero(todo);
            todo &= todo - 1;
            const std::uint64_t add = eps_step[static_cast<std::size_t>(q)] & ~mask;
            mask |= add;
            todo |= add;
        }
        return mask;
    };

    std::uint64_t initial_mask = 0;
    for (int q : nfa.initial_states()) initial_mask |= std::uint64_t{1} << (q - 1);
    initial_mask = close(initial_mask);

    std::uint64_t final_mask = 0;
    for (int q : nfa.final_states()) final_mask |= std::uint64_t{1} << (q - 1);

    std::unordered_map<std::uint64_t, int> id;
    std::vector<std::uint64_t> subsets;
    std::queue<std::uint64_t> queue;
    id.emplace(initial_mask, 0);
    subsets.push_back(initial_mask);
    queue.push(initial_mask);
    std::vector<std::vector<int>> delta(static_cast<std::size_t>(k));
    while (!queue.empty()) {
        const std::uint64_t cur = queue.front();
        queue.pop();
        const int cur_id = id.at(cur);
        for (int c = 0; c < k; ++c) {
            std::uint64_t next = 0;
            std::uint64_t bits = cur;
            while (bits) {
                const int q = std::countr_zero(bits);
                bits &= bits - 1;
                next |= step[static_cast<std::size_t>(c)][static_cast<std::size_t>(q)];
            }
            next = close(next);
            auto [it, fresh] = id.emplace(next, static_cast<int>(subsets.size()));
            if (fresh) {
                subsets.push_back(next);
                queue.push(next);
            }
            auto& row = delta[static_cast<std::size_t>(c)];
            if (row.size() <= static_cast<std::size_t>(cur_id))
                row.resize(static_cast<std::size_t>(cur_id) + 1);
            row[static_cast<std::size_t>(cur_id)] = it->second;
        }
    }

    Flat f;
    f.n = static_cast<int>(subsets.size());
    f.k = k;
    f.init = 0;
    f.delta.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(f.n)));
    for (int c = 0; c < k; ++c)
        for (int q = 0; q < f.n; ++q)
            f.delta[static_cast<std::size_t>(c)][static_cast<std::size_t>(q)] =
                delta[static_cast<std::size_t>(c)][static_cast<std::size_t>(q)];
    f.fin.assign(static_cast<std::size_t>(f.n), 0);
    for (int q = 0; q < f.n; ++q)
        if (subsets[static_cast<std::size_t>(q)] & final_mask)
            f.fin[static_cast<std::size_t>(q)] = 1;
    return from_flat(f, nfa.alphabet());
}

Dfa minimize(const Dfa& dfa) {
    Flat f = reachable_part(to_flat(dfa));
    const auto block_of = hopcroft_blocks(f);
    return from_flat(reachable_part(quotient(f, block_of)), dfa.alphabet());
}

int complexity(const Dfa& dfa) { return minimize(dfa).state_count(); }

std::vector<int> quotient_complexities(const Dfa& dfa) {
    std::vector<int> out(static_cast<std::size_t>(dfa.state_count()), 0);
    std::vector<char> reach(static_cast<std::size_t>(dfa.state_count()), 0);
    std::queue<int> queue;
    reach[static_cast<std::size_t>(dfa.initial_state()) - 1] = 1;
    queue.push(dfa.initial_state());
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop();
        for (int c = 0; c < dfa.alphabet_size(); ++c) {
            int t = dfa.next(q, c);
            if (!reach[static_cast<std::size_t>(t) - 1]) {
                reach[static_cast<std::size_t>(t) - 1] = 1;
                queue.push(t);
            }
        }
    }
    for (int q = 1; q <= dfa.state_count(); ++q) {
        if (!reach[static_cast<std::size_t>(q) - 1]) continue;
        Dfa from_q(dfa.state_count(), dfa.alphabet(), dfa.transitions(), q,
                   dfa.final_states());
        out[static_cast<std::size_t>(q) - 1] = complexity(from_q);
    }
    return out;
}

bool equivalent(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a, b, "equivalence");
    return minimize(a) == minimize(b);
}

Dfa sort_alphabet(const Dfa& dfa) {
    std::vector<int> order(static_cast<std::size_t>(dfa.alphabet_size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return dfa.alphabet()[static_cast<std::size_t>(i)] <
               dfa.alphabet()[static_cast<std::size_t>(j)];
    });
    std::vector<std::string> alphabet;
    std::vector<Transformation> delta;
    for (int c : order) {
        alphabet.push_back(dfa.alphabet()[static_cast<std::size_t>(c)]);
        delta.push_back(dfa.transition(c));
    }
    return Dfa(dfa.state_count(), std::move(alphabet), std::move(delta), dfa.initial_state(),
               dfa.final_states());
}

bool isomorphic(const Dfa& a, const Dfa& b) {
    Dfa sa = sort_alphabet(a);
    Dfa sb = sort_alphabet(b);
    if (sa.alphabet() != sb.alphabet()) return false;
    // Reachable parts; breadth-first renumbering is a complete isomorphism
    // invariant for deterministic machines.
    return canonicalize(sa) == canonicalize(sb);
}

Dfa complement(const Dfa& dfa) {
    std::vector<int> finals;
    for (int q = 1; q <= dfa.state_count(); ++q)
        if (!dfa.is_final(q)) finals.push_back(q);
    return Dfa(dfa.state_count(), dfa.alphabet(), dfa.transitions(), dfa.initial_state(),
               std::move(finals));
}

Dfa boolean_product(const Dfa& a, const Dfa& b, SetOp op) {
    require_same_alphabet(a, b, to_string(op));
    const int k = a.alphabet_size();
    auto keep = [op](bool fa, bool fb) {
        switch (op) {
            case SetOp::Union: return fa || fb;
            case SetOp::Intersection: return fa && fb;
            case SetOp::Difference: return fa && !fb;
            case SetOp::SymmetricDifference: return fa != fb;
        }
        return false;
    };

    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> pairs;
    std::queue<std::pair<int, int>> queue;
    const std::pair<int, int> start{a.initial_state(), b.initial_state()};
    id.emplace(start, 0);
    pairs.push_back(start);
    queue.push(start);
    Flat f;
    f.k = k;
    f.delta.assign(static_cast<std::size_t>(k), {});
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop();
        const int cur = id.at({p, q});
        for (int c = 0; c < k; ++c) {
            const std::pair<int, int> to{a.next(p, c), b.next(q, c)};
            auto [it, fresh] = id.emplace(to, static_cast<int>(pairs.size()));
            if (fresh) {
                pairs.push_back(to);
                queue.push(to);
            }
            auto& row = f.delta[static_cast<std::size_t>(c)];
            if (row.size() <= static_cast<std::size_t>(cur)) row.resize(static_cast<std::size_t>(cur) + 1);
            row[static_cast<std::size_t>(cur)] = it->second;
        }
    }
    f.n = static_cast<int>(pairs.size());
    f.init = 0;
    f.fin.assign(static_cast<std::size_t>(f.n), 0);
    for (int i = 0; i < f.n; ++i) {
        auto [p, q] = pairs[static_cast<std::size_t>(i)];
        f.fin[static_cast<std::size_t>(i)] = keep(a.is_final(p), b.is_final(q));
    }
    return minimize(from_flat(f, a.alphabet()));
}

Dfa concat_epsilon(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a, b, "concatenation");
    const int m = a.state_count();
    Nfa nfa(m + b.state_count(), a.alphabet());
    for (int c = 0; c < a.alphabet_size(); ++c) {
        for (int q = 1; q <= m; ++q) nfa.add_transition(q, c, a.next(q, c));
        for (int q = 1; q <= b.state_count(); ++q)
            nfa.add_transition(m + q, c, m + b.next(q, c));
    }
    for (int fq : a.final_states()) nfa.add_epsilon(fq, m + b.initial_state());
    nfa.add_initial(a.initial_state());
    for (int fq : b.final_states()) nfa.add_final(m + fq);
    return minimize(determinize(nfa));
}

Dfa concat_ideal_redirect(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a, b, "concatenation");
    if (a.final_states().size() != 1)
        throw std::invalid_argument(
            "redirect concatenation needs a left operand with exactly one accepting state");
    const int f = a.final_states().front();
    const int m = a.state_count();
    const int k = a.alphabet_size();

    // a-states except f keep their relative order, then b's states follow.
    std::vector<int> newid(static_cast<std::size_t>(m) + 1, 0);
    int next_id = 0;
    for (int q = 1; q <= m; ++q)
        if (q != f) newid[static_cast<std::size_t>(q)] = ++next_id;
    const int b_base = m - 1;
    auto b_state = [&](int r) { return b_base + r; };
    auto a_image = [&](int t) {
        return t == f ? b_state(b.initial_state()) : newid[static_cast<std::size_t>(t)];
    };

    Flat out;
    out.n = m - 1 + b.state_count();
    out.k = k;
    out.delta.assign(static_cast<std::size_t>(k),
                     std::vector<int>(static_cast<std::size_t>(out.n)));
    for (int c = 0; c < k; ++c) {
        for (int q = 1; q <= m; ++q) {
            if (q == f) continue;
            out.delta[static_cast<std::size_t>(c)]
                     [static_cast<std::size_t>(newid[static_cast<std::size_t>(q)]) - 1] =
                a_image(a.next(q, c)) - 1;
        }
        for (int r = 1; r <= b.state_count(); ++r)
            out.delta[static_cast<std::size_t>(c)][static_cast<std::size_t>(b_state(r)) - 1] =
                b_state(b.next(r, c)) - 1;
    }
    out.init = a_image(a.initial_state()) - 1;
    out.fin.assign(static_cast<std::size_t>(out.n), 0);
    for (int r : b.final_states()) out.fin[static_cast<std::size_t>(b_state(r)) - 1] = 1;
    return from_flat(out, a.alphabet());
}

Dfa star(const Dfa& dfa) {
    const int n = dfa.state_count();
    Nfa nfa(n + 1, dfa.alphabet());
    for (int c = 0; c < dfa.alphabet_size(); ++c)
        for (int q = 1; q <= n; ++q) nfa.add_transition(q, c, dfa.next(q, c));
    nfa.add_epsilon(n + 1, dfa.initial_state());
    for (int fq : dfa.final_states()) nfa.add_epsilon(fq, dfa.initial_state());
    nfa.add_initial(n + 1);
    nfa.add_final(n + 1);
    for (int fq : dfa.final_states()) nfa.add_final(fq);
    return minimize(determinize(nfa));
}

Dfa reverse(const Dfa& dfa) {
    Nfa nfa(dfa.state_count(), dfa.alphabet());
    for (int c = 0; c < dfa.alphabet_size(); ++c)
        for (int q = 1; q <= dfa.state_count(); ++q)
            nfa.add_transition(dfa.next(q, c), c, q);
    for (int fq : dfa.final_states()) nfa.add_initial(fq);
    nfa.add_final(dfa.initial_state());
    return minimize(determinize(nfa));
}

}  // namespace ideallab
