#include "ideallab/transformation.hpp"

#include <algorithm>
#include <stdexcept>

namespace ideallab {

namespace {

void check_state(int n, int q, const char* what) {
    if (q < 1 || q > n)
        throw std::invalid_argument(std::string(what) + " " + std::to_string(q) +
                                    " out of range 1.." + std::to_string(n));
}

}  // namespace

Transformation::Transformation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty())
        throw std::invalid_argument("transformation needs degree >= 1");
    const int n = degree();
    for (int img : images_) check_state(n, img, "image");
}

Transformation Transformation::identity(int n) {
    if (n < 1) throw std::invalid_argument("transformation needs degree >= 1");
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int q = 1; q <= n; ++q) images[static_cast<std::size_t>(q) - 1] = q;
    return Transformation(std::move(images));
}

Transformation Transformation::cycle(int n, const std::vector<int>& states) {
    if (states.empty()) throw std::invalid_argument("cycle needs at least one state");
    auto t = identity(n);
    for (int q : states) check_state(n, q, "cycle state");
    std::vector<int> sorted = states;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("cycle states must be distinct");
    const std::size_t k = states.size();
    for (std::size_t i = 0; i < k; ++i)
        t.images_[static_cast<std::size_t>(states[i]) - 1] = states[(i + 1) % k];
    return t;
}

Transformation Transformation::transposition(int n, int p, int q) {
    return cycle(n, {p, q});
}

Transformation Transformation::redirect(int n, int p, int q) {
    check_state(n, p, "state");
    check_state(n, q, "state");
    auto t = identity(n);
    t.images_[static_cast<std::size_t>(p) - 1] = q;
    return t;
}

Transformation Transformation::collapse(int n, const std::vector<int>& from, int q) {
    check_state(n, q, "state");
    auto t = identity(n);
    for (int p : from) {
        check_state(n, p, "state");
        t.images_[static_cast<std::size_t>(p) - 1] = q;
    }
    return t;
}

Transformation Transformation::then(const Transformation& next) const {
    if (degree() != next.degree())
        throw std::invalid_argument("composition needs equal degrees");
    std::vector<int> images(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        images[i] = next.images_[static_cast<std::size_t>(images_[i]) - 1];
    return Transformation(std::move(images));
}

bool Transformation::is_identity() const {
    for (int q = 1; q <= degree(); ++q)
        if (apply(q) != q) return false;
    return true;
}

std::uint64_t Transformation::image_of(std::uint64_t mask) const {
    std::uint64_t out = 0;
    for (int q = 1; q <= degree(); ++q)
        if (mask & (std::uint64_t{1} << (q - 1)))
            out |= std::uint64_t{1} << (apply(q) - 1);
    return out;
}

std::uint64_t Transformation::packed_key() const {
    if (degree() > 16)
        throw std::invalid_argument("packed_key supports degree <= 16");
    std::uint64_t key = 0;
    for (int q = degree(); q >= 1; --q)
        key = (key << 4) | static_cast<std::uint64_t>(apply(q) - 1);
    return key;
}

std::string to_string(const Transformation& t) {
    std::string s = "[";
    for (int q = 1; q <= t.degree(); ++q) {
        if (q > 1) s += ",";
        s += std::to_string(t.apply(q));
    }
    return s + "]";
}

}  // namespace ideallab
