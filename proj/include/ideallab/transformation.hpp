#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ideallab {

/// A total map of the state set {1..n} into itself, written in one-line
/// notation: images()[q-1] is the image of state q.  These are the elements
/// of transition semigroups and the per-letter actions of a DFA.
class Transformation {
public:
    explicit Transformation(std::vector<int> images);

    static Transformation identity(int n);
    /// k-cycle (p1,...,pk); a single-element cycle is the identity.
    static Transformation cycle(int n, const std::vector<int>& states);
    static Transformation transposition(int n, int p, int q);
    /// (p -> q): moves p to q, fixes everything else.
    static Transformation redirect(int n, int p, int q);
    /// (P -> q): collapses every state of P to q, fixes the rest.
    static Transformation collapse(int n, const std::vector<int>& from, int q);

    int degree() const { return static_cast<int>(images_.size()); }
    int apply(int q) const { return images_[static_cast<std::size_t>(q) - 1]; }
    int operator()(int q) const { return apply(q); }
    const std::vector<int>& images() const { return images_; }

    /// Left-to-right composition: (this.then(u))(q) == u(this(q)), matching
    /// the action of a word uv where this = delta_u and u = delta_v.
    Transformation then(const Transformation& next) const;

    bool is_identity() const;

    /// Set image {qt | q in mask}; bit q-1 of a mask stands for state q.
    std::uint64_t image_of(std::uint64_t mask) const;

    /// Packs the images into one 64-bit key.  Only valid for degree <= 16;
    /// distinct transformations get distinct keys.
    std::uint64_t packed_key() const;

    auto operator<=>(const Transformation&) const = default;

private:
    std::vector<int> images_;
};

std::string to_string(const Transformation& t);

}  // namespace ideallab
