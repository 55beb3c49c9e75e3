#include "qg2/ncpoly.hpp"

#include <sstream>

namespace qg2 {

NcPoly NcPoly::fromWord(const Word& w, RatFunc c) {
    NcPoly p;
    if (!c.isZero()) p.terms_.emplace(w, std::move(c));
    return p;
}

void NcPoly::add(const Word& w, const RatFunc& c) {
    if (c.isZero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

NcPoly NcPoly::operator-() const {
    NcPoly out;
    for (auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    for (auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
    for (auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    NcPoly out;
    for (auto& [wa, ca] : a.terms_)
        for (auto& [wb, cb] : b.terms_) out.add(wa + wb, ca * cb);
    return out;
}

NcPoly NcPoly::scaled(const RatFunc& c) const {
    NcPoly out;
    if (c.isZero()) return out;
    for (auto& [w, k] : terms_) out.terms_.emplace(w, k * c);
    return out;
}

NcPoly NcPoly::coeffSwapRS() const {
    NcPoly out;
    for (auto& [w, c] : terms_) out.terms_.emplace(w, c.swapRS());
    return out;
}

std::optional<Weight> NcPoly::weight() const {
    Weight acc{0, 0};
    bool got = false;
    for (auto& [w, c] : terms_) {
        Weight wt = weightOfWord(w);
        if (!got) {
            acc = wt;
            got = true;
        } else if (!(wt == acc)) {
            return std::nullopt;
        }
    }
    return acc;
}

std::string NcPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [w, c] = *it;
        std::string cs = c.strAtom();
        bool neg = cs.size() > 1 && cs[0] == '(' && cs[1] == '-' && c.den().isOne() &&
                   c.num().terms().size() == 1;
        if (neg) {
            // single negative monomial coefficient: print with a leading minus
            RatFunc pc = -c;
            std::string ps = pc.strAtom();
            os << (first ? "-" : " - ");
            if (w.empty()) {
                os << pc.str();
            } else if (pc.isOne()) {
                os << wordStr(w);
            } else {
                os << ps << "*" << wordStr(w);
            }
        } else {
            if (!first) os << " + ";
            if (w.empty()) {
                os << c.str();
            } else if (c.isOne()) {
                os << wordStr(w);
            } else {
                os << cs << "*" << wordStr(w);
            }
        }
        first = false;
    }
    return os.str();
}

}  // namespace qg2
