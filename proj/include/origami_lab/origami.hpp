#ifndef ORIGAMI_LAB_ORIGAMI_HPP
#define ORIGAMI_LAB_ORIGAMI_HPP

#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "origami_lab/permutation.hpp"
#include "origami_lab/rational.hpp"

namespace origami_lab {

// An origami on n unit squares.  The right edge of square s is glued to the
// left edge of h(s); the top edge of s is glued to the bottom edge of v(s).
struct Origami {
    int n = 0;
    Permutation h;
    Permutation v;

    Origami() = default;
    Origami(int n_, Permutation h_, Permutation v_)
        : n(n_), h(std::move(h_)), v(std::move(v_)) {}

    bool operator==(const Origami& o) const { return n == o.n && h == o.h && v == o.v; }
    bool operator!=(const Origami& o) const { return !(*this == o); }
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

inline ValidationReport validate(const Origami& o) {
    ValidationReport rep;
    if (o.n < 1) {
        rep.violations.push_back("square count must be at least 1");
        return rep;
    }
    if ((int)o.h.images.size() != o.n || !o.h.is_bijection())
        rep.violations.push_back("h is not a permutation of {0,...,n-1}");
    if ((int)o.v.images.size() != o.n || !o.v.is_bijection())
        rep.violations.push_back("v is not a permutation of {0,...,n-1}");
    if (!rep.ok()) return rep;

    // Connectivity: the group generated by h and v must act transitively.
    std::vector<char> seen(o.n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int s = q.front();
        q.pop();
        for (int t : {o.h[s], o.v[s], o.h.inverse()[s], o.v.inverse()[s]}) {
            if (!seen[t]) {
                seen[t] = 1;
                ++count;
                q.push(t);
            }
        }
    }
    if (count != o.n)
        rep.violations.push_back("gluing is not connected");
    return rep;
}

inline void require_valid(const Origami& o) {
    ValidationReport rep = validate(o);
    if (!rep.ok()) throw OrigamiError("invalid origami: " + rep.violations.front());
}

// Corners are indexed 4*s + c with c: 0 = BL, 1 = BR, 2 = TL, 3 = TR.
// Vertex classes come from closing the corner identifications induced by the
// edge gluings.
inline std::vector<int> corner_vertex_classes(const Origami& o) {
    std::vector<int> parent(4 * o.n);
    for (int i = 0; i < 4 * o.n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    for (int s = 0; s < o.n; ++s) {
        int hs = o.h[s], vs = o.v[s];
        unite(4 * s + 1, 4 * hs + 0);  // BR(s) ~ BL(h(s))
        unite(4 * s + 3, 4 * hs + 2);  // TR(s) ~ TL(h(s))
        unite(4 * s + 2, 4 * vs + 0);  // TL(s) ~ BL(v(s))
        unite(4 * s + 3, 4 * vs + 1);  // TR(s) ~ BR(v(s))
    }

    // Relabel classes 0..V-1 in order of smallest corner id.
    std::vector<int> label(4 * o.n, -1);
    std::vector<int> out(4 * o.n);
    int next = 0;
    for (int i = 0; i < 4 * o.n; ++i) {
        int r = find(i);
        if (label[r] < 0) label[r] = next++;
        out[i] = label[r];
    }
    return out;
}

inline int vertex_count(const Origami& o) {
    std::vector<int> cls = corner_vertex_classes(o);
    int V = 0;
    for (int c : cls) V = std::max(V, c + 1);
    // Consistency: rotating a full turn about a vertex advances the BL corner
    // by the commutator v h v^-1 h^-1, so its cycle count must also equal V.
    Permutation comm = o.v * o.h * o.v.inverse() * o.h.inverse();
    if ((int)comm.cycles().size() != V)
        throw OrigamiError("vertex count mismatch between corner closure and commutator cycles");
    return V;
}

// V - E + F = 2 - 2g with E = 2n, F = n.
inline int genus(const Origami& o) {
    require_valid(o);
    int V = vertex_count(o);
    int twog = o.n - V + 2;
    if (twog < 0 || twog % 2 != 0)
        throw OrigamiError("Euler characteristic is not that of a closed orientable surface");
    return twog / 2;
}

struct CylinderDecomposition {
    std::vector<std::vector<int>> horizontal;  // cycles of h
    std::vector<std::vector<int>> vertical;    // cycles of v
};

inline CylinderDecomposition cylinders(const Origami& o) {
    require_valid(o);
    return CylinderDecomposition{o.h.cycles(), o.v.cycles()};
}

inline bool is_one_one(const Origami& o) {
    require_valid(o);
    return o.h.is_single_cycle() && o.v.is_single_cycle();
}

struct CanonicalForm {
    Origami origami;
    std::vector<int> relabeling;  // old square index -> new square index
};

// Canonical representative under simultaneous conjugacy: BFS-relabel from
// every base square with generator order (h, v), keep the lexicographically
// least image pair.  Two origamis are isomorphic iff canonical forms agree.
inline CanonicalForm canonical_form(const Origami& o) {
    require_valid(o);
    std::optional<CanonicalForm> best;
    for (int base = 0; base < o.n; ++base) {
        std::vector<int> relabel(o.n, -1);
        std::queue<int> q;
        relabel[base] = 0;
        q.push(base);
        int next = 1;
        while (!q.empty()) {
            int s = q.front();
            q.pop();
            for (int t : {o.h[s], o.v[s]}) {
                if (relabel[t] < 0) {
                    relabel[t] = next++;
                    q.push(t);
                }
            }
        }
        if (next != o.n) throw OrigamiError("BFS did not reach all squares");
        std::vector<int> h2(o.n), v2(o.n);
        for (int s = 0; s < o.n; ++s) {
            h2[relabel[s]] = relabel[o.h[s]];
            v2[relabel[s]] = relabel[o.v[s]];
        }
        Origami cand(o.n, Permutation(std::move(h2)), Permutation(std::move(v2)));
        if (!best || std::make_pair(cand.h.images, cand.v.images) <
                         std::make_pair(best->origami.h.images, best->origami.v.images))
            best = CanonicalForm{std::move(cand), std::move(relabel)};
    }
    return *best;
}

inline Origami relabel(const Origami& o, const std::vector<int>& sigma) {
    std::vector<int> h2(o.n), v2(o.n);
    for (int s = 0; s < o.n; ++s) {
        h2[sigma[s]] = sigma[o.h[s]];
        v2[sigma[s]] = sigma[o.v[s]];
    }
    return Origami(o.n, Permutation(std::move(h2)), Permutation(std::move(v2)));
}

// All [1,1]-origamis with n squares up to isomorphism, optionally filtered by
// genus.  Every class has a representative with h the standard n-cycle, so v
// ranges over all n-cycles.  Output is ordered by canonical (h, v) pair.
inline std::vector<Origami> enumerate_one_one(int n, std::optional<int> genus_filter = {}) {
    if (n < 1) throw OrigamiError("enumerate_one_one requires n >= 1");
    std::map<std::pair<std::vector<int>, std::vector<int>>, Origami> classes;
    Permutation h = Permutation::standard_cycle(n);
    std::vector<int> rest(std::max(0, n - 1));
    for (int i = 0; i < n - 1; ++i) rest[i] = i + 1;
    do {
        std::vector<int> cyc;
        cyc.reserve(n);
        cyc.push_back(0);
        cyc.insert(cyc.end(), rest.begin(), rest.end());
        Permutation v = Permutation::from_cycles(n, {cyc});
        Origami o(n, h, v);
        if (genus_filter && genus(o) != *genus_filter) continue;
        CanonicalForm cf = canonical_form(o);
        classes.emplace(std::make_pair(cf.origami.h.images, cf.origami.v.images),
                        cf.origami);
    } while (std::next_permutation(rest.begin(), rest.end()));
    std::vector<Origami> out;
    out.reserve(classes.size());
    for (auto& kv : classes) out.push_back(kv.second);
    return out;
}

}  // namespace origami_lab

#endif
