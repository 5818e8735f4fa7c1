#include "permlab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace permlab {

Perm Perm::identity(int degree) {
    if (degree < 0) throw InvalidArgument("permutation degree must be >= 0");
    Perm p;
    p.img_.resize(static_cast<std::size_t>(degree));
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
}

Perm Perm::unchecked(std::vector<std::uint16_t> images) {
    Perm p;
    p.img_ = std::move(images);
    return p;
}

Perm Perm::from_images(std::vector<std::uint16_t> images) {
    std::vector<bool> seen(images.size(), false);
    for (std::uint16_t v : images) {
        if (v >= images.size() || seen[v])
            throw InvalidArgument("image array is not a permutation");
        seen[v] = true;
    }
    Perm p;
    p.img_ = std::move(images);
    return p;
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

int Perm::smallest_moved_point() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return static_cast<int>(i);
    return -1;
}

std::uint64_t Perm::order() const {
    std::vector<bool> seen(img_.size(), false);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

Perm Perm::from_cycles(int degree, std::string_view text) {
    if (degree < 0) throw InvalidArgument("permutation degree must be >= 0");
    std::vector<std::uint16_t> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw ParseError("empty cycle expression");

    bool any_cycle = false;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(') throw ParseError("expected '(' in cycle expression");
        ++i;
        any_cycle = true;
        std::vector<std::uint16_t> cycle;
        while (true) {
            skip_ws();
            if (i == text.size()) throw ParseError("unbalanced '(' in cycle expression");
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (text[i] == ',') {
                ++i;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("unexpected character in cycle expression");
            long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 1 << 20) throw ParseError("point out of range in cycle expression");
                ++i;
            }
            if (v < 1 || v > degree)
                throw ParseError("point " + std::to_string(v) + " out of range 1.." +
                                 std::to_string(degree));
            std::uint16_t pt = static_cast<std::uint16_t>(v - 1);
            if (used[pt])
                throw ParseError("point " + std::to_string(v) + " repeated in cycle expression");
            used[pt] = true;
            cycle.push_back(pt);
        }
        if (cycle.size() == 1)
            throw ParseError("a cycle needs at least two points (or use \"()\" for identity)");
        for (std::size_t k = 0; k + 1 < cycle.size(); ++k) img[cycle[k]] = cycle[k + 1];
        if (cycle.size() >= 2) img[cycle.back()] = cycle.front();
    }
    if (!any_cycle) throw ParseError("empty cycle expression");
    return unchecked(std::move(img));
}

std::string Perm::to_cycles() const {
    std::string out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        out += '(';
        std::size_t j = i;
        bool first = true;
        do {
            if (!first) out += ',';
            out += std::to_string(j + 1);
            seen[j] = true;
            j = img_[j];
            first = false;
        } while (j != i);
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

std::size_t Perm::hash() const {
    // FNV-1a over the image words.
    std::size_t h = 1469598103934665603ull;
    for (std::uint16_t v : img_) {
        h ^= static_cast<std::size_t>(v) + 1;
        h *= 1099511628211ull;
    }
    return h;
}

Perm compose(const Perm& g, const Perm& h) {
    if (g.degree() != h.degree())
        throw InvalidArgument("cannot compose permutations of different degrees");
    std::vector<std::uint16_t> img(static_cast<std::size_t>(g.degree()));
    const auto& gi = g.images();
    const auto& hi = h.images();
    for (std::size_t x = 0; x < img.size(); ++x) img[x] = hi[gi[x]];
    return Perm::unchecked(std::move(img));
}

Perm compose(const Perm& a, const Perm& b, const Perm& c) { return compose(compose(a, b), c); }

Perm inverse(const Perm& g) {
    std::vector<std::uint16_t> img(static_cast<std::size_t>(g.degree()));
    const auto& gi = g.images();
    for (std::size_t x = 0; x < img.size(); ++x) img[gi[x]] = static_cast<std::uint16_t>(x);
    return Perm::unchecked(std::move(img));
}

Perm conjugated(const Perm& g, const Perm& x) { return compose(inverse(x), g, x); }

}  // namespace permlab
