#pragma once

#include <numeric>
#include <vector>

#include "distcol/errors.hpp"

namespace distcol {

// Bijection on vertex ids 0..n-1; images[v] is the image of v.
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> imgs) : images(std::move(imgs)) {
        std::vector<bool> seen(images.size(), false);
        for (int w : images) {
            if (w < 0 || w >= static_cast<int>(images.size()) || seen[w])
                throw SizeMismatchError("image sequence is not a bijection");
            seen[w] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> imgs(n);
        std::iota(imgs.begin(), imgs.end(), 0);
        return Permutation(std::move(imgs));
    }

    int size() const { return static_cast<int>(images.size()); }
    int operator()(int v) const { return images[v]; }

    bool is_identity() const {
        for (int v = 0; v < size(); ++v)
            if (images[v] != v) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(images.size());
        for (int v = 0; v < size(); ++v) inv[images[v]] = v;
        return Permutation(std::move(inv));
    }

    // (*this after other): v -> images[other(v)]
    Permutation compose(const Permutation& other) const {
        if (size() != other.size()) throw SizeMismatchError("composing permutations of different sizes");
        std::vector<int> out(images.size());
        for (int v = 0; v < size(); ++v) out[v] = images[other.images[v]];
        return Permutation(std::move(out));
    }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;
};

}  // namespace distcol
