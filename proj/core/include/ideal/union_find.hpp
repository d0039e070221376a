#pragma once

#include <numeric>
#include <vector>

namespace ideal {

class UnionFind {
public:
    explicit UnionFind(int n = 0) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // The smaller root survives, so class roots are minimal members.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
};

// Union-find that also tracks a Z/2 parity relative to the root.
class ParityUnionFind {
public:
    explicit ParityUnionFind(int n = 0) : parent_(n), parity_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::pair<int, int> find(int x) {
        int p = 0;
        int r = x;
        while (parent_[r] != r) {
            p ^= parity_[r];
            r = parent_[r];
        }
        // path compression
        int cur = x, acc = p;
        while (parent_[cur] != cur) {
            int next = parent_[cur];
            int pc = parity_[cur];
            parent_[cur] = r;
            parity_[cur] = acc;
            acc ^= pc;
            cur = next;
        }
        return {r, p};
    }

    // Require parity(a) ^ parity(b) == rel. Returns false on contradiction.
    bool unite(int a, int b, int rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == rel;
        if (rb < ra) {
            std::swap(ra, rb);
            std::swap(pa, pb);
        }
        parent_[rb] = ra;
        parity_[rb] = pa ^ pb ^ rel;
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> parity_;
};

}  // namespace ideal
