#ifndef QG2_HOPF_HPP
#define QG2_HOPF_HPP

#include <vector>

#include "qg2/rewrite.hpp"

namespace qg2 {

/// Linear combination of n-tuples of words: the image of an iterated coproduct.
class TensorPoly {
public:
    using Key = std::vector<Word>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            if (a.size() != b.size()) return a.size() < b.size();
            DegLexLess lt;
            for (size_t i = 0; i < a.size(); ++i) {
                if (lt(a[i], b[i])) return true;
                if (lt(b[i], a[i])) return false;
            }
            return false;
        }
    };
    using TermMap = std::map<Key, RatFunc, KeyLess>;

    explicit TensorPoly(size_t arity) : arity_(arity) {}
    static TensorPoly unit(size_t arity) {
        TensorPoly t(arity);
        t.add(Key(arity), RatFunc(1));
        return t;
    }

    size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    void add(const Key& k, const RatFunc& c);

    TensorPoly& operator+=(const TensorPoly& o);
    friend TensorPoly operator-(const TensorPoly& a, const TensorPoly& b);
    /// Slotwise (componentwise) product.
    friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b);

    friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    TensorPoly flipped() const;  // arity 2 only

    std::string str() const;

private:
    size_t arity_;
    TermMap terms_;
};

/// Two-slot coproduct, multiplicative extension of the generator formulas.
TensorPoly coproduct2(const NcPoly& a, bool opposite = false);

/// n-slot iterated coproduct computed by the left fold
/// (Delta tensor id^(n-1)) o ... ; with opposite=true the flip is applied at
/// every step. n >= 1 (n = 1 returns the element itself).
TensorPoly coproductN(const NcPoly& a, size_t n, bool opposite = false);

/// Applies the two-slot coproduct to one slot of a tensor (arity grows by 1).
TensorPoly tensorApplyDelta(const TensorPoly& t, size_t slot, bool opposite = false);

RatFunc counit(const NcPoly& a);

/// Anti-algebra map extending S(e_i) = -w_i^-1 e_i, S(f_i) = -f_i w_i'^-1,
/// S(w^±) = w^∓ (computed in the free algebra).
NcPoly antipode(const NcPoly& a);

enum class AdjointSide { Left, Right };

/// ad_l a (b) = sum a_(1) b S(a_(2)); ad_r a (b) = sum S(a_(1)) b a_(2).
/// The result is straightened in the given algebra.
NcPoly adjoint(AdjointSide side, const NcPoly& a, const NcPoly& b, const Algebra& alg);

}  // namespace qg2

#endif
