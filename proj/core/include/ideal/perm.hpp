#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ideal {

// Permutation of the four corners {0,1,2,3} of a tetrahedron.
class Perm4 {
public:
    constexpr Perm4() : img_{0, 1, 2, 3} {}
    constexpr Perm4(int a, int b, int c, int d)
        : img_{static_cast<std::int8_t>(a), static_cast<std::int8_t>(b),
               static_cast<std::int8_t>(c), static_cast<std::int8_t>(d)} {}

    constexpr int operator[](int i) const { return img_[i]; }

    constexpr Perm4 inverse() const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img_[img_[i]] = static_cast<std::int8_t>(i);
        return r;
    }

    // (a * b)[i] == a[b[i]]
    constexpr Perm4 operator*(const Perm4& b) const {
        return Perm4(img_[b[0]], img_[b[1]], img_[b[2]], img_[b[3]]);
    }

    constexpr int sign() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img_[i] > img_[j]) ++inv;
        return inv % 2 ? -1 : 1;
    }

    constexpr bool is_identity() const { return img_[0] == 0 && img_[1] == 1 && img_[2] == 2; }

    // Position in the lexicographic list of all 24 permutations.
    constexpr int index() const {
        int idx = 0;
        for (int i = 0; i < 4; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < 4; ++j)
                if (img_[j] < img_[i]) ++smaller;
            idx = idx * (4 - i) + smaller;
        }
        return idx;
    }

    static constexpr Perm4 from_index(int idx) {
        int digits[4] = {0, 0, 0, 0};
        for (int i = 3; i >= 0; --i) {
            digits[i] = idx % (4 - i);
            idx /= (4 - i);
        }
        bool used[4] = {false, false, false, false};
        int out[4] = {0, 0, 0, 0};
        for (int i = 0; i < 4; ++i) {
            int k = digits[i];
            for (int v = 0; v < 4; ++v) {
                if (used[v]) continue;
                if (k-- == 0) {
                    out[i] = v;
                    used[v] = true;
                    break;
                }
            }
        }
        return Perm4(out[0], out[1], out[2], out[3]);
    }

    // Transposition of corners a and b.
    static constexpr Perm4 swap(int a, int b) {
        Perm4 r;
        r.img_[a] = static_cast<std::int8_t>(b);
        r.img_[b] = static_cast<std::int8_t>(a);
        return r;
    }

    std::string str() const {
        std::string s(4, '0');
        for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + img_[i]);
        return s;
    }

    friend constexpr bool operator==(const Perm4&, const Perm4&) = default;
    friend constexpr auto operator<=>(const Perm4& a, const Perm4& b) { return a.img_ <=> b.img_; }

private:
    std::array<std::int8_t, 4> img_;
};

// Corner missing from a face triple such as "013".
inline int missing_corner(std::string_view abc) {
    int seen = 0;
    for (char ch : abc) seen |= 1 << (ch - '0');
    for (int v = 0; v < 4; ++v)
        if (!(seen & (1 << v))) return v;
    return -1;
}

// Corner bijection a->a', b->b', c->c' extended by the missing corners.
inline Perm4 face_perm(std::string_view abc, std::string_view img) {
    auto ok = [](std::string_view s) {
        if (s.size() != 3) return false;
        int seen = 0;
        for (char ch : s) {
            if (ch < '0' || ch > '3') return false;
            seen |= 1 << (ch - '0');
        }
        return __builtin_popcount(seen) == 3;
    };
    if (!ok(abc) || !ok(img)) throw std::invalid_argument("bad face triple");
    int out[4];
    for (int i = 0; i < 3; ++i) out[abc[i] - '0'] = img[i] - '0';
    out[missing_corner(abc)] = missing_corner(img);
    return Perm4(out[0], out[1], out[2], out[3]);
}

}  // namespace ideal
