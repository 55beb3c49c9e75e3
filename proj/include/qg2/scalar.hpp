#ifndef QG2_SCALAR_HPP
#define QG2_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qg2 {

using BigInt = mpz_class;
using Rational = mpq_class;

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// Exponent pair (power of r, power of s) for a monomial r^dr * s^ds.
struct ExpPair {
    int dr = 0;
    int ds = 0;

    friend bool operator==(const ExpPair&, const ExpPair&) = default;
};

/// Graded-lex order with r > s: first by total degree, then by r-degree.
struct ExpLess {
    bool operator()(const ExpPair& a, const ExpPair& b) const {
        int ta = a.dr + a.ds, tb = b.dr + b.ds;
        if (ta != tb) return ta < tb;
        return a.dr < b.dr;
    }
};

/// Polynomial in Z[r,s]. No zero coefficients are stored.
class BiPoly {
public:
    using TermMap = std::map<ExpPair, BigInt, ExpLess>;

    BiPoly() = default;
    explicit BiPoly(long v) { if (v != 0) terms_[{0, 0}] = v; }
    explicit BiPoly(const BigInt& v) { if (v != 0) terms_[{0, 0}] = v; }

    static BiPoly monomial(BigInt c, int dr, int ds);
    static BiPoly varR() { return monomial(1, 1, 0); }
    static BiPoly varS() { return monomial(1, 0, 1); }

    bool isZero() const { return terms_.empty(); }
    bool isOne() const;
    const TermMap& terms() const { return terms_; }

    /// Leading term under graded-lex (r > s).
    const std::pair<const ExpPair, BigInt>& leading() const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    void addTerm(const ExpPair& e, const BigInt& c);

    /// Integer content (gcd of coefficients), nonnegative; 0 for the zero polynomial.
    BigInt content() const;

    /// Exact division; throws std::logic_error if not exact.
    BiPoly divExact(const BiPoly& d) const;

    /// gcd in Z[r,s], normalized with positive leading coefficient.
    static BiPoly gcd(const BiPoly& a, const BiPoly& b);

    Rational eval(const Rational& rv, const Rational& sv) const;

    int degR() const;
    int degS() const;

    std::string str() const;

private:
    TermMap terms_;
};

/// Element of Q(r,s) in canonical reduced form:
/// gcd(num, den) = 1 and the denominator's graded-lex leading coefficient is positive.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long v) : num_(v), den_(1) {}
    explicit RatFunc(const BigInt& v) : num_(v), den_(1) {}
    explicit RatFunc(BiPoly num) : num_(std::move(num)), den_(1) {}
    RatFunc(BiPoly num, BiPoly den);

    static RatFunc r() { return RatFunc(BiPoly::varR()); }
    static RatFunc s() { return RatFunc(BiPoly::varS()); }
    /// r^a * s^b with possibly negative exponents.
    static RatFunc monomial(long coeff, int a, int b);

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }
    bool isOne() const { return num_.isOne() && den_.isOne(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inv() const;
    RatFunc pow(long k) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    /// Arbitrary strict total order (for use as map key).
    friend bool operator<(const RatFunc& a, const RatFunc& b);

    /// The substitution r -> s^-1, s -> r^-1 (a field involution).
    RatFunc swapRS() const;

    Rational eval(const Rational& rv, const Rational& sv) const;

    std::string str() const;
    /// Wraps in parentheses when the printed form is a sum or a quotient.
    std::string strAtom() const;

private:
    void canonicalize();
    BiPoly num_, den_;
};

/// Univariate rational function in q, canonical reduced form.
/// Result type of the specialization r -> q, s -> q^-1.
class UniRatFunc {
public:
    UniRatFunc() : num_{}, den_{BigInt(1)} {}

    /// Build from Laurent polynomials given as exponent -> coefficient maps.
    static UniRatFunc fromLaurent(const std::map<int, BigInt>& num,
                                  const std::map<int, BigInt>& den);

    friend bool operator==(const UniRatFunc&, const UniRatFunc&) = default;

    Rational eval(const Rational& qv) const;
    std::string str() const;

private:
    void canonicalize();
    // Dense coefficient lists, index = power of q.
    std::vector<BigInt> num_, den_;
};

/// Specialization r -> q, s -> q^-1 (throws DivisionByZero if the denominator
/// vanishes identically under the substitution).
UniRatFunc specializeQ(const RatFunc& f);

/// Parse the scalar grammar: integers, r, s, + - * / ^ (integer exponents), parentheses.
RatFunc parseScalar(const std::string& text);

}  // namespace qg2

#endif
