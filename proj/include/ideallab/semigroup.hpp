#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ideallab/dfa.hpp"

namespace ideallab {

/// Raised when semigroup enumeration would exceed its element cap.  `reached`
/// is the element count at the moment enumeration stopped.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::uint64_t cap, std::uint64_t reached);
    std::uint64_t cap() const { return cap_; }
    std::uint64_t reached() const { return reached_; }

private:
    std::uint64_t cap_;
    std::uint64_t reached_;
};

/// A semigroup element together with a shortest word inducing it.
struct SemigroupElement {
    Transformation action;
    Word word;
};

/// Default enumeration cap for an n-state automaton: 2 n^(n-1) + n, twice the
/// largest ideal bound plus slack, so any in-range run fits comfortably.
std::uint64_t default_semigroup_cap(int n);

/// Transition semigroup: all transformations induced by non-empty words,
/// enumerated breadth-first over generator applications, so each element
/// carries a shortest witnessing word and the enumeration order is
/// deterministic.  Supports up to 16 states.  cap = 0 means the default cap;
/// exceeding it throws CapExceeded.
std::vector<SemigroupElement> transition_semigroup(const Dfa& dfa, std::uint64_t cap = 0);

std::uint64_t transition_semigroup_size(const Dfa& dfa, std::uint64_t cap = 0);

/// Size of the syntactic semigroup of L(dfa): the transition semigroup of
/// the minimal automaton.
std::uint64_t syntactic_semigroup_size(const Dfa& dfa, std::uint64_t cap = 0);

}  // namespace ideallab
