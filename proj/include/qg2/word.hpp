#ifndef QG2_WORD_HPP
#define QG2_WORD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qg2 {

/// The 12 generator letters. The numeric order is the letter order used by
/// the rewriter: f-letters < omega'-letters < omega-letters < e-letters.
enum class Gen : uint8_t {
    F1 = 0,
    F2 = 1,
    WP1 = 2,   // omega_1'
    WP2 = 3,   // omega_2'
    WP1I = 4,  // omega_1'^-1
    WP2I = 5,  // omega_2'^-1
    W1 = 6,    // omega_1
    W2 = 7,    // omega_2
    W1I = 8,   // omega_1^-1
    W2I = 9,   // omega_2^-1
    E1 = 10,
    E2 = 11,
};

constexpr int kNumGens = 12;

inline bool isE(Gen g) { return g == Gen::E1 || g == Gen::E2; }
inline bool isF(Gen g) { return g == Gen::F1 || g == Gen::F2; }
inline bool isOmega(Gen g) { return !isE(g) && !isF(g); }
/// True for the omega' family (the B' Cartan letters).
inline bool isOmegaPrime(Gen g) {
    return g == Gen::WP1 || g == Gen::WP2 || g == Gen::WP1I || g == Gen::WP2I;
}
inline bool isOmegaPlain(Gen g) { return isOmega(g) && !isOmegaPrime(g); }
inline bool isInverse(Gen g) {
    return g == Gen::WP1I || g == Gen::WP2I || g == Gen::W1I || g == Gen::W2I;
}

/// 1-based index (the subscript of the generator).
inline int genIndex(Gen g) {
    switch (g) {
        case Gen::F1: case Gen::WP1: case Gen::WP1I: case Gen::W1: case Gen::W1I: case Gen::E1:
            return 1;
        default:
            return 2;
    }
}

/// omega -> omega^-1 and back (identity on e/f letters).
Gen inverseGen(Gen g);

/// Canonical short name, e.g. "w1'", "e2".
std::string genName(Gen g);

std::optional<Gen> genFromName(const std::string& name);

/// A word in the free monoid on the 12 letters. Empty word is the unit.
using Word = std::basic_string<uint8_t>;

inline Word wordOf(std::initializer_list<Gen> gs) {
    Word w;
    for (Gen g : gs) w.push_back(static_cast<uint8_t>(g));
    return w;
}

inline Gen at(const Word& w, size_t i) { return static_cast<Gen>(w[i]); }

/// Degree-lexicographic order (by length, then letter order).
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Net (alpha_1, alpha_2)-degree: e_i adds alpha_i, f_i subtracts, omegas are zero.
struct Weight {
    long m1 = 0;
    long m2 = 0;
    friend bool operator==(const Weight&, const Weight&) = default;
    Weight operator+(const Weight& o) const { return {m1 + o.m1, m2 + o.m2}; }
    Weight operator-() const { return {-m1, -m2}; }
};

Weight weightOfWord(const Word& w);

/// Pretty form with power grouping, e.g. "f1*w1'^3*w2'"; "1" for the empty word.
std::string wordStr(const Word& w);

}  // namespace qg2

#endif
