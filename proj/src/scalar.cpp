#include "qg2/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qg2 {

// ---------------------------------------------------------------------------
// BiPoly
// ---------------------------------------------------------------------------

BiPoly BiPoly::monomial(BigInt c, int dr, int ds) {
    BiPoly p;
    if (c != 0) p.terms_[{dr, ds}] = std::move(c);
    return p;
}

bool BiPoly::isOne() const {
    return terms_.size() == 1 && terms_.begin()->first == ExpPair{0, 0} &&
           terms_.begin()->second == 1;
}

const std::pair<const ExpPair, BigInt>& BiPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("leading() of zero polynomial");
    return *terms_.rbegin();
}

void BiPoly::addTerm(const ExpPair& e, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly out;
    for (auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (auto& [e, c] : o.terms_) addTerm(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (auto& [e, c] : o.terms_) addTerm(e, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_)
            out.addTerm({ea.dr + eb.dr, ea.ds + eb.ds}, ca * cb);
    return out;
}

BigInt BiPoly::content() const {
    BigInt g = 0;
    for (auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

BiPoly BiPoly::divExact(const BiPoly& d) const {
    if (d.isZero()) throw DivisionByZero();
    BiPoly rem = *this, quot;
    while (!rem.isZero()) {
        auto& [re, rc] = rem.leading();
        auto& [de, dc] = d.leading();
        if (re.dr < de.dr || re.ds < de.ds) throw std::logic_error("divExact: not divisible");
        BigInt q, r0;
        mpz_tdiv_qr(q.get_mpz_t(), r0.get_mpz_t(), rc.get_mpz_t(), dc.get_mpz_t());
        if (r0 != 0) throw std::logic_error("divExact: not divisible");
        ExpPair qe{re.dr - de.dr, re.ds - de.ds};
        quot.addTerm(qe, q);
        rem -= BiPoly::monomial(q, qe.dr, qe.ds) * d;
    }
    return quot;
}

int BiPoly::degR() const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e.dr);
    return d;
}

int BiPoly::degS() const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e.ds);
    return d;
}

Rational BiPoly::eval(const Rational& rv, const Rational& sv) const {
    Rational acc = 0;
    for (auto& [e, c] : terms_) {
        Rational t(c);
        for (int i = 0; i < e.dr; ++i) t *= rv;
        for (int i = 0; i < e.ds; ++i) t *= sv;
        acc += t;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// gcd in Z[r,s]: primitive PRS over Z[s], main variable r.
// ---------------------------------------------------------------------------

namespace {

// Dense univariate polynomial over Z, index = exponent.
using UPoly = std::vector<BigInt>;

void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool uzero(const UPoly& p) { return p.empty(); }

UPoly umul(const UPoly& a, const UPoly& b) {
    if (uzero(a) || uzero(b)) return {};
    UPoly out(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    utrim(out);
    return out;
}

UPoly uscale(const UPoly& a, const BigInt& c) {
    if (c == 0) return {};
    UPoly out = a;
    for (auto& x : out) x *= c;
    return out;
}

UPoly usub(const UPoly& a, const UPoly& b) {
    UPoly out = a;
    if (out.size() < b.size()) out.resize(b.size(), BigInt(0));
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    utrim(out);
    return out;
}

BigInt ucontent(const UPoly& p) {
    BigInt g = 0;
    for (auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

UPoly uprim(const UPoly& p) {
    BigInt g = ucontent(p);
    if (g == 0 || g == 1) return p;
    UPoly out = p;
    for (auto& c : out) c /= g;
    return out;
}

UPoly udivExact(const UPoly& a, const BigInt& c) {
    UPoly out = a;
    for (auto& x : out) {
        BigInt q, r0;
        mpz_tdiv_qr(q.get_mpz_t(), r0.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        if (r0 != 0) throw std::logic_error("udivExact");
        x = q;
    }
    return out;
}

// Primitive PRS gcd over Z.
UPoly ugcd(UPoly a, UPoly b) {
    if (uzero(a)) {
        if (!b.empty() && b.back() < 0) return uscale(b, BigInt(-1));
        return b;
    }
    if (uzero(b)) {
        if (!a.empty() && a.back() < 0) return uscale(a, BigInt(-1));
        return a;
    }
    BigInt ca = ucontent(a), cb = ucontent(b), cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = uprim(a);
    b = uprim(b);
    while (!uzero(b)) {
        if (a.size() < b.size()) std::swap(a, b);
        // pseudo-remainder of a by b
        UPoly rem = a;
        const BigInt& lead = b.back();
        while (rem.size() >= b.size() && !uzero(rem)) {
            size_t shift = rem.size() - b.size();
            BigInt q = rem.back();
            rem = usub(uscale(rem, lead), [&] {
                UPoly t(shift, BigInt(0));
                t.insert(t.end(), b.begin(), b.end());
                return uscale(t, q);
            }());
        }
        a = b;
        b = uprim(rem);
    }
    a = uprim(a);
    UPoly out = uscale(a, cg);
    if (!out.empty() && out.back() < 0) out = uscale(out, BigInt(-1));
    return out;
}

// Z[s][r]: dense in r, coefficients in Z[s].
using RPoly = std::vector<UPoly>;

void rtrim(RPoly& p) {
    while (!p.empty() && uzero(p.back())) p.pop_back();
}

RPoly toR(const BiPoly& p) {
    RPoly out(p.degR() + 1);
    for (auto& [e, c] : p.terms()) {
        UPoly& u = out[e.dr];
        if ((int)u.size() <= e.ds) u.resize(e.ds + 1, BigInt(0));
        u[e.ds] = c;
    }
    for (auto& u : out) utrim(u);
    rtrim(out);
    return out;
}

BiPoly fromR(const RPoly& p) {
    BiPoly out;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < p[i].size(); ++j)
            if (p[i][j] != 0) out.addTerm({(int)i, (int)j}, p[i][j]);
    return out;
}

UPoly rcontent(const RPoly& p) {
    UPoly g;
    for (auto& u : p) {
        g = ugcd(g, u);
        if (g.size() == 1 && g[0] == 1) break;
    }
    return g;
}

RPoly rdivContent(const RPoly& p, const UPoly& c) {
    if (c.size() == 1) {
        RPoly out = p;
        for (auto& u : out) u = udivExact(u, c[0]);
        return out;
    }
    // exact univariate division of every coefficient by c
    RPoly out;
    out.reserve(p.size());
    for (auto& u : p) {
        // long division u / c over Q, must be exact over Z
        UPoly rem = u, quot;
        if (!uzero(rem)) quot.resize(rem.size() >= c.size() ? rem.size() - c.size() + 1 : 0, BigInt(0));
        while (rem.size() >= c.size() && !uzero(rem)) {
            size_t shift = rem.size() - c.size();
            BigInt q, r0;
            mpz_tdiv_qr(q.get_mpz_t(), r0.get_mpz_t(), rem.back().get_mpz_t(),
                        c.back().get_mpz_t());
            if (r0 != 0) throw std::logic_error("rdivContent: not exact");
            quot[shift] = q;
            UPoly t(shift, BigInt(0));
            t.insert(t.end(), c.begin(), c.end());
            rem = usub(rem, uscale(t, q));
        }
        if (!uzero(rem)) throw std::logic_error("rdivContent: not exact");
        utrim(quot);
        out.push_back(std::move(quot));
    }
    return out;
}

RPoly rscale(const RPoly& p, const UPoly& c) {
    RPoly out = p;
    for (auto& u : out) u = umul(u, c);
    return out;
}

RPoly rsub(const RPoly& a, const RPoly& b) {
    RPoly out = a;
    if (out.size() < b.size()) out.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) out[i] = usub(out[i], b[i]);
    rtrim(out);
    return out;
}

RPoly rshiftMul(const RPoly& p, size_t k, const UPoly& c) {
    RPoly out(k);
    for (auto& u : p) out.push_back(umul(u, c));
    rtrim(out);
    return out;
}

// Primitive PRS gcd in Z[s][r].
RPoly rgcd(RPoly a, RPoly b) {
    rtrim(a);
    rtrim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    UPoly ca = rcontent(a), cb = rcontent(b);
    UPoly cg = ugcd(ca, cb);
    a = rdivContent(a, ca);
    b = rdivContent(b, cb);
    while (!b.empty()) {
        if (a.size() < b.size()) std::swap(a, b);
        // pseudo-remainder of a by b in the variable r
        RPoly rem = a;
        const UPoly& lead = b.back();
        while (rem.size() >= b.size() && !rem.empty()) {
            size_t shift = rem.size() - b.size();
            UPoly q = rem.back();
            rem = rsub(rscale(rem, lead), rshiftMul(b, shift, q));
        }
        a = b;
        if (!rem.empty()) rem = rdivContent(rem, rcontent(rem));
        b = rem;
    }
    RPoly out = rscale(a, cg);
    return out;
}

}  // namespace

BiPoly BiPoly::gcd(const BiPoly& a, const BiPoly& b) {
    if (a.isZero()) {
        if (b.isZero()) return BiPoly();
        BiPoly out = b;
        if (out.leading().second < 0) out = -out;
        return out;
    }
    if (b.isZero()) {
        BiPoly out = a;
        if (out.leading().second < 0) out = -out;
        return out;
    }
    BiPoly g = fromR(rgcd(toR(a), toR(b)));
    if (g.leading().second < 0) g = -g;
    return g;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print leading terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool hasVar = e.dr > 0 || e.ds > 0;
        if (a != 1 || !hasVar) {
            os << a.get_str();
            if (hasVar) os << "*";
        }
        if (e.dr > 0) {
            os << "r";
            if (e.dr > 1) os << "^" << e.dr;
            if (e.ds > 0) os << "*";
        }
        if (e.ds > 0) {
            os << "s";
            if (e.ds > 1) os << "^" << e.ds;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RatFunc
// ---------------------------------------------------------------------------

RatFunc::RatFunc(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.isZero()) throw DivisionByZero();
    canonicalize();
}

void RatFunc::canonicalize() {
    if (num_.isZero()) {
        den_ = BiPoly(1);
        return;
    }
    BiPoly g = BiPoly::gcd(num_, den_);
    if (!g.isOne()) {
        num_ = num_.divExact(g);
        den_ = den_.divExact(g);
    }
    if (den_.leading().second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::monomial(long coeff, int a, int b) {
    BiPoly n = BiPoly::monomial(coeff, std::max(a, 0), std::max(b, 0));
    BiPoly d = BiPoly::monomial(1, std::max(-a, 0), std::max(-b, 0));
    return RatFunc(std::move(n), std::move(d));
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    BiPoly g = BiPoly::gcd(a.den_, b.den_);
    BiPoly da = a.den_.divExact(g), db = b.den_.divExact(g);
    return RatFunc(a.num_ * db + b.num_ * da, da * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.isZero() || b.isZero()) return RatFunc();
    // cross-reduce before multiplying
    BiPoly g1 = BiPoly::gcd(a.num_, b.den_);
    BiPoly g2 = BiPoly::gcd(b.num_, a.den_);
    return RatFunc((a.num_.divExact(g1)) * (b.num_.divExact(g2)),
                   (a.den_.divExact(g2)) * (b.den_.divExact(g1)));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

RatFunc RatFunc::inv() const {
    if (isZero()) throw DivisionByZero();
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    RatFunc acc(1), base = *this;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

bool operator<(const RatFunc& a, const RatFunc& b) {
    auto cmpPoly = [](const BiPoly& x, const BiPoly& y) -> int {
        auto ix = x.terms().begin(), iy = y.terms().begin();
        for (; ix != x.terms().end() && iy != y.terms().end(); ++ix, ++iy) {
            ExpLess lt;
            if (lt(ix->first, iy->first)) return -1;
            if (lt(iy->first, ix->first)) return 1;
            if (ix->second != iy->second) return ix->second < iy->second ? -1 : 1;
        }
        if (ix != x.terms().end()) return 1;
        if (iy != y.terms().end()) return -1;
        return 0;
    };
    int c = cmpPoly(a.num_, b.num_);
    if (c != 0) return c < 0;
    return cmpPoly(a.den_, b.den_) < 0;
}

RatFunc RatFunc::swapRS() const {
    // p(r,s) -> p(s^-1, r^-1): term c r^i s^j -> c r^-j s^-i.
    auto sub = [](const BiPoly& p) -> std::pair<BiPoly, ExpPair> {
        // returns (poly, monomial shift) with p(s^-1,r^-1) = poly * r^-shift.dr * s^-shift.ds
        int mi = 0, mj = 0;
        for (auto& [e, c] : p.terms()) {
            mi = std::max(mi, e.ds);  // r-exponent needed: j
            mj = std::max(mj, e.dr);
        }
        BiPoly out;
        for (auto& [e, c] : p.terms()) out.addTerm({mi - e.ds, mj - e.dr}, c);
        return {out, {mi, mj}};
    };
    auto [n, sn] = sub(num_);
    auto [d, sd] = sub(den_);
    // value = n * r^-sn.dr s^-sn.ds / (d * r^-sd.dr s^-sd.ds)
    int ddr = sd.dr - sn.dr, dds = sd.ds - sn.ds;
    if (ddr >= 0)
        n = n * BiPoly::monomial(1, ddr, 0);
    else
        d = d * BiPoly::monomial(1, -ddr, 0);
    if (dds >= 0)
        n = n * BiPoly::monomial(1, 0, dds);
    else
        d = d * BiPoly::monomial(1, 0, -dds);
    return RatFunc(std::move(n), std::move(d));
}

Rational RatFunc::eval(const Rational& rv, const Rational& sv) const {
    Rational d = den_.eval(rv, sv);
    if (d == 0) throw DivisionByZero();
    Rational out = num_.eval(rv, sv) / d;
    out.canonicalize();
    return out;
}

std::string RatFunc::str() const {
    if (den_.isOne()) return num_.str();
    std::string n = num_.str(), d = den_.str();
    std::string out = num_.terms().size() > 1 ? "(" + n + ")" : n;
    out += "/";
    out += (den_.terms().size() > 1 || den_.leading().first.dr + den_.leading().first.ds > 0)
               ? "(" + d + ")"
               : d;
    return out;
}

std::string RatFunc::strAtom() const {
    std::string out = str();
    if (num_.terms().size() > 1 && den_.isOne()) return "(" + out + ")";
    if (!den_.isOne()) return "(" + out + ")";
    // single-term numerator: wrap if it carries a sign or inner product
    if (out.find_first_of("-") == 0) return "(" + out + ")";
    return out;
}

// ---------------------------------------------------------------------------
// UniRatFunc / specialization
// ---------------------------------------------------------------------------

namespace {

UPoly ulaurent(const std::map<int, BigInt>& m, int shift) {
    UPoly out;
    for (auto& [e, c] : m) {
        int k = e + shift;
        if ((int)out.size() <= k) out.resize(k + 1, BigInt(0));
        out[k] = c;
    }
    utrim(out);
    return out;
}

}  // namespace

UniRatFunc UniRatFunc::fromLaurent(const std::map<int, BigInt>& num,
                                   const std::map<int, BigInt>& den) {
    int lo = 0;
    for (auto& [e, c] : num) lo = std::min(lo, e);
    for (auto& [e, c] : den) lo = std::min(lo, e);
    UniRatFunc out;
    out.num_ = ulaurent(num, -lo);
    out.den_ = ulaurent(den, -lo);
    if (uzero(out.den_)) throw DivisionByZero();
    out.canonicalize();
    return out;
}

void UniRatFunc::canonicalize() {
    if (uzero(num_)) {
        den_ = {BigInt(1)};
        return;
    }
    UPoly g = ugcd(num_, den_);
    if (!(g.size() == 1 && g[0] == 1)) {
        // exact division of both by g
        auto divq = [&](const UPoly& p) {
            UPoly rem = p, quot(p.size() >= g.size() ? p.size() - g.size() + 1 : 0, BigInt(0));
            while (rem.size() >= g.size() && !uzero(rem)) {
                size_t shift = rem.size() - g.size();
                BigInt q, r0;
                mpz_tdiv_qr(q.get_mpz_t(), r0.get_mpz_t(), rem.back().get_mpz_t(),
                            g.back().get_mpz_t());
                if (r0 != 0) throw std::logic_error("UniRatFunc gcd division not exact");
                quot[shift] = q;
                UPoly t(shift, BigInt(0));
                t.insert(t.end(), g.begin(), g.end());
                rem = usub(rem, uscale(t, q));
            }
            if (!uzero(rem)) throw std::logic_error("UniRatFunc gcd division not exact");
            utrim(quot);
            return quot;
        };
        num_ = divq(num_);
        den_ = divq(den_);
    }
    // strip common q^k
    size_t k = 0;
    while (k < num_.size() && k < den_.size() && num_[k] == 0 && den_[k] == 0) ++k;
    if (k > 0) {
        num_.erase(num_.begin(), num_.begin() + k);
        den_.erase(den_.begin(), den_.begin() + k);
    }
    if (den_.back() < 0) {
        for (auto& c : num_) c = -c;
        for (auto& c : den_) c = -c;
    }
}

Rational UniRatFunc::eval(const Rational& qv) const {
    auto evalU = [&](const UPoly& p) {
        Rational acc = 0, pw = 1;
        for (auto& c : p) {
            acc += Rational(c) * pw;
            pw *= qv;
        }
        return acc;
    };
    Rational d = evalU(den_);
    if (d == 0) throw DivisionByZero();
    Rational out = evalU(num_) / d;
    out.canonicalize();
    return out;
}

std::string UniRatFunc::str() const {
    auto polyStr = [](const UPoly& p) -> std::string {
        if (uzero(p)) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = p.size(); i-- > 0;) {
            if (p[i] == 0) continue;
            BigInt a = p[i];
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            if (a != 1 || i == 0) {
                os << a.get_str();
                if (i > 0) os << "*";
            }
            if (i > 0) {
                os << "q";
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    };
    if (den_.size() == 1 && den_[0] == 1) return polyStr(num_);
    return "(" + polyStr(num_) + ")/(" + polyStr(den_) + ")";
}

UniRatFunc specializeQ(const RatFunc& f) {
    auto sub = [](const BiPoly& p) {
        std::map<int, BigInt> m;
        for (auto& [e, c] : p.terms()) {
            m[e.dr - e.ds] += c;
            if (m[e.dr - e.ds] == 0) m.erase(e.dr - e.ds);
        }
        return m;
    };
    auto d = sub(f.den());
    if (d.empty()) throw DivisionByZero();
    return UniRatFunc::fromLaurent(sub(f.num()), d);
}

// ---------------------------------------------------------------------------
// Scalar parser
// ---------------------------------------------------------------------------

namespace {

struct ScalarParser {
    const std::string& text;
    size_t pos = 0;

    explicit ScalarParser(const std::string& t) : text(t) {}

    void skipWs() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("scalar parse error at byte " + std::to_string(pos) + ": " +
                                    msg);
    }

    bool peek(char c) {
        skipWs();
        return pos < text.size() && text[pos] == c;
    }

    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    long parseInt() {
        skipWs();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        if (pos >= text.size() || !std::isdigit((unsigned char)text[pos])) fail("expected integer");
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        return std::stol(text.substr(start, pos - start));
    }

    RatFunc parseAtom() {
        skipWs();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            RatFunc e = parseExpr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == 'r') {
            ++pos;
            return RatFunc::r();
        }
        if (c == 's') {
            ++pos;
            return RatFunc::s();
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
            return RatFunc(BigInt(text.substr(start, pos - start)));
        }
        fail("unexpected character");
    }

    RatFunc parsePower() {
        RatFunc base = parseAtom();
        if (eat('^')) {
            long k = parseInt();
            return base.pow(k);
        }
        return base;
    }

    RatFunc parseUnary() {
        if (eat('-')) return -parseUnary();
        if (eat('+')) return parseUnary();
        return parsePower();
    }

    RatFunc parseTerm() {
        RatFunc acc = parseUnary();
        for (;;) {
            if (eat('*')) {
                acc *= parseUnary();
            } else if (eat('/')) {
                RatFunc d = parseUnary();
                if (d.isZero()) throw DivisionByZero();
                acc /= d;
            } else {
                break;
            }
        }
        return acc;
    }

    RatFunc parseExpr() {
        RatFunc acc = parseTerm();
        for (;;) {
            if (eat('+')) {
                acc += parseTerm();
            } else if (peek('-')) {
                ++pos;
                acc -= parseTerm();
            } else {
                break;
            }
        }
        return acc;
    }
};

}  // namespace

RatFunc parseScalar(const std::string& text) {
    ScalarParser p(text);
    RatFunc out = p.parseExpr();
    p.skipWs();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

}  // namespace qg2
