#ifndef QG2_NCPOLY_HPP
#define QG2_NCPOLY_HPP

#include <map>
#include <optional>

#include "qg2/scalar.hpp"
#include "qg2/word.hpp"

namespace qg2 {

/// Finite linear combination of words with RatFunc coefficients;
/// an element of the free algebra on the 12 generators.
class NcPoly {
public:
    using TermMap = std::map<Word, RatFunc, DegLexLess>;

    NcPoly() = default;
    static NcPoly zero() { return {}; }
    static NcPoly one() { return fromWord(Word{}); }
    static NcPoly fromWord(const Word& w, RatFunc c = RatFunc(1));
    static NcPoly fromGen(Gen g, RatFunc c = RatFunc(1)) {
        return fromWord(wordOf({g}), std::move(c));
    }
    static NcPoly scalar(RatFunc c) { return fromWord(Word{}, std::move(c)); }

    bool isZero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    void add(const Word& w, const RatFunc& c);

    NcPoly operator-() const;
    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);
    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
    NcPoly& operator*=(const NcPoly& o) { return *this = *this * o; }

    NcPoly scaled(const RatFunc& c) const;

    /// Applies the r <-> s^-1 swap to every coefficient.
    NcPoly coeffSwapRS() const;

    friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }

    /// Common weight of all words, or nullopt if inhomogeneous.
    /// The zero polynomial reports weight (0,0).
    std::optional<Weight> weight() const;

    /// Commutator ab - ba in the free algebra.
    static NcPoly commutator(const NcPoly& a, const NcPoly& b) { return a * b - b * a; }

    std::string str() const;

private:
    TermMap terms_;
};

}  // namespace qg2

#endif
