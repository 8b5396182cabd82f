#ifndef ORIGAMI_LAB_PERMUTATION_HPP
#define ORIGAMI_LAB_PERMUTATION_HPP

#include <algorithm>
#include <numeric>
#include <vector>

namespace origami_lab {

// A permutation of {0, ..., n-1} stored as its image array.
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> imgs) : images(std::move(imgs)) {}

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }

    // Cycle built from the standard order 0 -> 1 -> ... -> n-1 -> 0.
    static Permutation standard_cycle(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = (i + 1) % n;
        return Permutation(std::move(v));
    }

    // Permutation from cycle notation, fixing unmentioned points.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
        Permutation p = identity(n);
        for (const auto& c : cycles)
            for (size_t i = 0; i < c.size(); ++i)
                p.images[c[i]] = c[(i + 1) % c.size()];
        return p;
    }

    int size() const { return (int)images.size(); }
    int operator[](int i) const { return images[i]; }

    bool is_bijection() const {
        std::vector<char> seen(images.size(), 0);
        for (int v : images) {
            if (v < 0 || v >= (int)images.size() || seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(images.size());
        for (int i = 0; i < (int)images.size(); ++i) inv[images[i]] = i;
        return Permutation(std::move(inv));
    }

    // this after other: (a * b)(x) = a(b(x)).
    Permutation operator*(const Permutation& other) const {
        std::vector<int> v(images.size());
        for (int i = 0; i < (int)images.size(); ++i) v[i] = images[other.images[i]];
        return Permutation(std::move(v));
    }

    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(images.size(), 0);
        for (int i = 0; i < (int)images.size(); ++i) {
            if (seen[i]) continue;
            std::vector<int> c;
            for (int j = i; !seen[j]; j = images[j]) {
                seen[j] = 1;
                c.push_back(j);
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    bool is_single_cycle() const {
        return !images.empty() && cycles().size() == 1;
    }

    bool operator==(const Permutation& o) const { return images == o.images; }
    bool operator!=(const Permutation& o) const { return images != o.images; }
    bool operator<(const Permutation& o) const { return images < o.images; }
};

}  // namespace origami_lab

#endif
