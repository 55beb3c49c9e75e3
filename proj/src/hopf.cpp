#include "qg2/hopf.hpp"

#include <sstream>

namespace qg2 {

void TensorPoly::add(const Key& k, const RatFunc& c) {
    if (c.isZero()) return;
    if (k.size() != arity_) throw std::logic_error("TensorPoly arity mismatch");
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
    if (o.arity_ != arity_) throw std::logic_error("TensorPoly arity mismatch");
    for (auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

TensorPoly operator-(const TensorPoly& a, const TensorPoly& b) {
    TensorPoly out = a;
    if (b.arity_ != a.arity_) throw std::logic_error("TensorPoly arity mismatch");
    for (auto& [k, c] : b.terms_) out.add(k, -c);
    return out;
}

TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
    if (a.arity_ != b.arity_) throw std::logic_error("TensorPoly arity mismatch");
    TensorPoly out(a.arity_);
    for (auto& [ka, ca] : a.terms_) {
        for (auto& [kb, cb] : b.terms_) {
            TensorPoly::Key k(a.arity_);
            for (size_t i = 0; i < a.arity_; ++i) k[i] = ka[i] + kb[i];
            out.add(k, ca * cb);
        }
    }
    return out;
}

TensorPoly TensorPoly::flipped() const {
    if (arity_ != 2) throw std::logic_error("flipped: arity 2 only");
    TensorPoly out(2);
    for (auto& [k, c] : terms_) out.add({k[1], k[0]}, c);
    return out;
}

std::string TensorPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (!c.isOne()) os << c.strAtom() << "*";
        for (size_t i = 0; i < k.size(); ++i) {
            if (i) os << " (x) ";
            os << wordStr(k[i]);
        }
    }
    return os.str();
}

namespace {

TensorPoly coproduct2Gen(Gen g, bool opposite) {
    TensorPoly t(2);
    Word empty;
    if (isE(g)) {
        Gen wi = genIndex(g) == 1 ? Gen::W1 : Gen::W2;
        t.add({wordOf({g}), empty}, RatFunc(1));
        t.add({wordOf({wi}), wordOf({g})}, RatFunc(1));
    } else if (isF(g)) {
        Gen wpi = genIndex(g) == 1 ? Gen::WP1 : Gen::WP2;
        t.add({empty, wordOf({g})}, RatFunc(1));
        t.add({wordOf({g}), wordOf({wpi})}, RatFunc(1));
    } else {
        t.add({wordOf({g}), wordOf({g})}, RatFunc(1));
    }
    return opposite ? t.flipped() : t;
}

}  // namespace

TensorPoly coproduct2(const NcPoly& a, bool opposite) {
    TensorPoly out(2);
    for (auto& [w, c] : a.terms()) {
        TensorPoly acc = TensorPoly::unit(2);
        for (uint8_t b : w) acc = acc * coproduct2Gen(static_cast<Gen>(b), opposite);
        for (auto& [k, kc] : acc.terms()) out.add(k, kc * c);
    }
    return out;
}

TensorPoly tensorApplyDelta(const TensorPoly& t, size_t slot, bool opposite) {
    if (slot >= t.arity()) throw std::logic_error("tensorApplyDelta: bad slot");
    TensorPoly out(t.arity() + 1);
    for (auto& [k, c] : t.terms()) {
        TensorPoly d = coproduct2(NcPoly::fromWord(k[slot]), opposite);
        for (auto& [dk, dc] : d.terms()) {
            TensorPoly::Key nk;
            nk.reserve(t.arity() + 1);
            for (size_t i = 0; i < slot; ++i) nk.push_back(k[i]);
            nk.push_back(dk[0]);
            nk.push_back(dk[1]);
            for (size_t i = slot + 1; i < t.arity(); ++i) nk.push_back(k[i]);
            out.add(nk, c * dc);
        }
    }
    return out;
}

TensorPoly coproductN(const NcPoly& a, size_t n, bool opposite) {
    if (n < 1) throw std::invalid_argument("coproductN: arity must be >= 1");
    TensorPoly t(1);
    for (auto& [w, c] : a.terms()) t.add({w}, c);
    while (t.arity() < n) t = tensorApplyDelta(t, 0, opposite);
    return t;
}

RatFunc counit(const NcPoly& a) {
    RatFunc out;
    for (auto& [w, c] : a.terms()) {
        bool killed = false;
        for (uint8_t b : w) {
            Gen g = static_cast<Gen>(b);
            if (isE(g) || isF(g)) {
                killed = true;
                break;
            }
        }
        if (!killed) out += c;
    }
    return out;
}

NcPoly antipode(const NcPoly& a) {
    NcPoly out;
    for (auto& [w, c] : a.terms()) {
        NcPoly acc = NcPoly::scalar(c);
        for (size_t i = w.size(); i-- > 0;) {
            Gen g = at(w, i);
            NcPoly img;
            if (isE(g)) {
                Gen wi = genIndex(g) == 1 ? Gen::W1I : Gen::W2I;
                img = NcPoly::fromWord(wordOf({wi, g}), RatFunc(-1));
            } else if (isF(g)) {
                Gen wpi = genIndex(g) == 1 ? Gen::WP1I : Gen::WP2I;
                img = NcPoly::fromWord(wordOf({g, wpi}), RatFunc(-1));
            } else {
                img = NcPoly::fromWord(wordOf({inverseGen(g)}));
            }
            acc = acc * img;
        }
        out += acc;
    }
    return out;
}

NcPoly adjoint(AdjointSide side, const NcPoly& a, const NcPoly& b, const Algebra& alg) {
    TensorPoly d = coproduct2(a);
    NcPoly acc;
    for (auto& [k, c] : d.terms()) {
        NcPoly a1 = NcPoly::fromWord(k[0]);
        NcPoly a2 = NcPoly::fromWord(k[1]);
        if (side == AdjointSide::Left) {
            acc += (a1 * b * antipode(a2)).scaled(c);
        } else {
            acc += (antipode(a1) * b * a2).scaled(c);
        }
    }
    return alg.straighten(acc);
}

}  // namespace qg2
