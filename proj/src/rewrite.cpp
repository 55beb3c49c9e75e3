#include "qg2/rewrite.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

namespace qg2 {

namespace {

/// Orients a nonzero homogeneous relator into lead -> rhs form.
Rule orient(const NcPoly& p, std::string provenance) {
    const auto& [lead, c] = *p.terms().rbegin();
    NcPoly rhs;
    for (auto& [w, k] : p.terms()) {
        if (w == lead) continue;
        rhs.add(w, -(k / c));
    }
    return Rule{lead, std::move(rhs), std::move(provenance)};
}

bool sameLetterCounts(const NcPoly& p) {
    auto wt = p.weight();
    if (!wt) return false;
    // one-sided homogeneous words of a common weight have equal length
    size_t len = p.terms().begin()->first.size();
    for (auto& [w, c] : p.terms())
        if (w.size() != len) return false;
    return true;
}

}  // namespace

int RuleSet::maxRuleDegree() const {
    int d = 0;
    for (auto& r : rules_) d = std::max(d, (int)r.lead.size());
    return d;
}

bool RuleSet::reduceOnce(const Word& w, Word& posPrefix, size_t& ruleOut) const {
    for (size_t pos = 0; pos < w.size(); ++pos) {
        for (size_t ri = 0; ri < rules_.size(); ++ri) {
            const Word& lead = rules_[ri].lead;
            if (pos + lead.size() <= w.size() && w.compare(pos, lead.size(), lead) == 0) {
                posPrefix = w.substr(0, pos);
                ruleOut = ri;
                return true;
            }
        }
    }
    return false;
}

NcPoly RuleSet::reduce(const NcPoly& p) const {
    NcPoly result;
    NcPoly::TermMap pending(p.terms());
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        Word w = it->first;
        RatFunc c = it->second;
        pending.erase(it);
        Word prefix;
        size_t ri = 0;
        if (!reduceOnce(w, prefix, ri)) {
            result.add(w, c);
            continue;
        }
        const Rule& rule = rules_[ri];
        Word suffix = w.substr(prefix.size() + rule.lead.size());
        for (auto& [rw, rc] : rule.rhs.terms()) {
            Word nw = prefix + rw + suffix;
            RatFunc nc = c * rc;
            auto pit = pending.find(nw);
            if (pit == pending.end()) {
                pending.emplace(std::move(nw), std::move(nc));
            } else {
                pit->second += nc;
                if (pit->second.isZero()) pending.erase(pit);
            }
        }
    }
    return result;
}

RuleSet RuleSet::complete(const std::vector<std::pair<NcPoly, std::string>>& relators,
                          int bound) {
    RuleSet rs;
    rs.bound_ = bound;
    for (auto& [p, prov] : relators) {
        if (p.isZero()) continue;
        if (!sameLetterCounts(p))
            throw std::invalid_argument("completion requires homogeneous relators");
        rs.rules_.push_back(orient(rs.reduce(p), prov));
    }

    // (degree, rule1, rule2, offset of rule2's lead inside the ambiguity word)
    using PairKey = std::tuple<int, size_t, size_t, size_t>;
    std::set<PairKey> queue;
    std::set<PairKey> seen;

    auto addPairs = [&](size_t i, size_t j) {
        const Word& A = rs.rules_[i].lead;
        const Word& B = rs.rules_[j].lead;
        // proper overlap: a suffix of A equals a prefix of B
        for (size_t k = 1; k < std::min(A.size(), B.size()); ++k) {
            if (A.compare(A.size() - k, k, B, 0, k) == 0) {
                int deg = (int)(A.size() + B.size() - k);
                if (deg <= bound) {
                    PairKey key{deg, i, j, A.size() - k};
                    if (seen.insert(key).second) queue.insert(key);
                }
            }
        }
        // inclusion: B a proper subword of A
        if (i != j && B.size() < A.size()) {
            for (size_t pos = 0; pos + B.size() <= A.size(); ++pos) {
                if (A.compare(pos, B.size(), B) == 0) {
                    PairKey key{(int)A.size(), i, j, pos};
                    if (seen.insert(key).second) queue.insert(key);
                }
            }
        }
    };

    for (size_t i = 0; i < rs.rules_.size(); ++i)
        for (size_t j = 0; j < rs.rules_.size(); ++j) addPairs(i, j);

    while (!queue.empty()) {
        auto [deg, i, j, off] = *queue.begin();
        queue.erase(queue.begin());
        const Word& A = rs.rules_[i].lead;
        const Word& B = rs.rules_[j].lead;
        Word amb;
        if (off + B.size() >= A.size()) {
            amb = A + B.substr(A.size() - off);
        } else {
            amb = A;  // inclusion ambiguity
        }
        // branch 1: apply rule i at position 0
        NcPoly b1;
        {
            Word suffix = amb.substr(A.size());
            for (auto& [rw, rc] : rs.rules_[i].rhs.terms()) b1.add(rw + suffix, rc);
        }
        // branch 2: apply rule j at position off
        NcPoly b2;
        {
            Word prefix = amb.substr(0, off);
            Word suffix = amb.substr(off + B.size());
            for (auto& [rw, rc] : rs.rules_[j].rhs.terms()) b2.add(prefix + rw + suffix, rc);
        }
        NcPoly diff = rs.reduce(b1 - b2);
        CriticalPairWitness wit;
        wit.overlap = amb;
        wit.rule1 = i;
        wit.rule2 = j;
        wit.resolvedToZero = diff.isZero();
        if (!diff.isZero()) {
            std::string prov =
                "cp(" + std::to_string(i) + "," + std::to_string(j) + ")@" + std::to_string(deg);
            wit.newRule = prov;
            rs.rules_.push_back(orient(diff, prov));
            size_t n = rs.rules_.size() - 1;
            for (size_t k = 0; k <= n; ++k) {
                addPairs(k, n);
                addPairs(n, k);
            }
        }
        rs.witnesses_.push_back(std::move(wit));
    }

    // interreduce for a canonical minimal system
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < rs.rules_.size(); ++i) {
            Rule r = rs.rules_[i];
            RuleSet others;
            others.bound_ = bound;
            for (size_t k = 0; k < rs.rules_.size(); ++k)
                if (k != i) others.rules_.push_back(rs.rules_[k]);
            NcPoly full = others.reduce(NcPoly::fromWord(r.lead) - r.rhs);
            if (full.isZero()) {
                rs.rules_.erase(rs.rules_.begin() + i);
                changed = true;
                break;
            }
            Rule re = orient(full, r.provenance);
            if (!(re.lead == r.lead) || !(re.rhs == r.rhs)) {
                rs.rules_[i] = re;
                changed = true;
                break;
            }
        }
    }
    return rs;
}

bool RuleSet::recheckWitnesses() const {
    for (auto& w : witnesses_) {
        // both one-step reductions of the ambiguity word must share a normal form
        NcPoly nf;
        bool first = true;
        for (size_t pos = 0; pos < w.overlap.size(); ++pos) {
            for (auto& r : rules_) {
                if (pos + r.lead.size() <= w.overlap.size() &&
                    w.overlap.compare(pos, r.lead.size(), r.lead) == 0) {
                    NcPoly step;
                    Word prefix = w.overlap.substr(0, pos);
                    Word suffix = w.overlap.substr(pos + r.lead.size());
                    for (auto& [rw, rc] : r.rhs.terms()) step.add(prefix + rw + suffix, rc);
                    NcPoly red = reduce(step);
                    if (first) {
                        nf = red;
                        first = false;
                    } else if (!(red == nf)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

nlohmann::json RuleSet::toJson() const {
    nlohmann::json rules = nlohmann::json::array();
    for (auto& r : rules_) {
        rules.push_back({{"lead", wordStr(r.lead)},
                         {"rhs", r.rhs.str()},
                         {"provenance", r.provenance}});
    }
    nlohmann::json wits = nlohmann::json::array();
    for (auto& w : witnesses_) {
        wits.push_back({{"overlap", wordStr(w.overlap)},
                        {"rule1", w.rule1},
                        {"rule2", w.rule2},
                        {"resolved_to_zero", w.resolvedToZero},
                        {"new_rule", w.newRule}});
    }
    return {{"bound", bound_},
            {"stabilization_degree", maxRuleDegree()},
            {"rules", rules},
            {"critical_pairs", wits}};
}

// ---------------------------------------------------------------------------
// Algebra
// ---------------------------------------------------------------------------

namespace {

NcPoly word1(Gen a) { return NcPoly::fromWord(wordOf({a})); }

NcPoly pw(std::initializer_list<Gen> gs, RatFunc c = RatFunc(1)) {
    return NcPoly::fromWord(wordOf(gs), std::move(c));
}

}  // namespace

NcPoly Algebra::serreE1(const Params& p) {
    RatFunc c1 = p.rho.pow(-3) + p.sigma.pow(-3);
    RatFunc c2 = (p.rho * p.sigma).pow(-3);
    return pw({Gen::E2, Gen::E2, Gen::E1}) - pw({Gen::E2, Gen::E1, Gen::E2}, c1) +
           pw({Gen::E1, Gen::E2, Gen::E2}, c2);
}

NcPoly Algebra::serreE2(const Params& p) {
    const RatFunc &r = p.rho, &s = p.sigma;
    RatFunc c1 = (r + s) * (r * r + s * s);
    RatFunc c2 = r * s * (r * r + s * s) * (r * r + r * s + s * s);
    RatFunc c3 = (r * s).pow(3) * (r + s) * (r * r + s * s);
    RatFunc c4 = (r * s).pow(6);
    return pw({Gen::E1, Gen::E1, Gen::E1, Gen::E1, Gen::E2}) -
           pw({Gen::E1, Gen::E1, Gen::E1, Gen::E2, Gen::E1}, c1) +
           pw({Gen::E1, Gen::E1, Gen::E2, Gen::E1, Gen::E1}, c2) -
           pw({Gen::E1, Gen::E2, Gen::E1, Gen::E1, Gen::E1}, c3) +
           pw({Gen::E2, Gen::E1, Gen::E1, Gen::E1, Gen::E1}, c4);
}

NcPoly Algebra::serreF1(const Params& p) {
    RatFunc c1 = p.rho.pow(-3) + p.sigma.pow(-3);
    RatFunc c2 = (p.rho * p.sigma).pow(-3);
    return pw({Gen::F1, Gen::F2, Gen::F2}) - pw({Gen::F2, Gen::F1, Gen::F2}, c1) +
           pw({Gen::F2, Gen::F2, Gen::F1}, c2);
}

NcPoly Algebra::serreF2(const Params& p) {
    const RatFunc &r = p.rho, &s = p.sigma;
    RatFunc c1 = (r + s) * (r * r + s * s);
    RatFunc c2 = r * s * (r * r + s * s) * (r * r + r * s + s * s);
    RatFunc c3 = (r * s).pow(3) * (r + s) * (r * r + s * s);
    RatFunc c4 = (r * s).pow(6);
    return pw({Gen::F2, Gen::F1, Gen::F1, Gen::F1, Gen::F1}) -
           pw({Gen::F1, Gen::F2, Gen::F1, Gen::F1, Gen::F1}, c1) +
           pw({Gen::F1, Gen::F1, Gen::F2, Gen::F1, Gen::F1}, c2) -
           pw({Gen::F1, Gen::F1, Gen::F1, Gen::F2, Gen::F1}, c3) +
           pw({Gen::F1, Gen::F1, Gen::F1, Gen::F1, Gen::F2}, c4);
}

Algebra::Algebra(Params params, int bound) : params_(std::move(params)), bound_(bound) {
    eRules_ = RuleSet::complete(
        {{serreE1(params_), "serre-e-deg2"}, {serreE2(params_), "serre-e-deg4"}}, bound_);
    fRules_ = RuleSet::complete(
        {{serreF1(params_), "serre-f-deg2"}, {serreF2(params_), "serre-f-deg4"}}, bound_);
}

namespace {

int letterClass(Gen g) {
    if (isF(g)) return 0;
    if (isOmega(g)) return 1;
    return 2;
}

/// Rebuilds the omega block in canonical order
/// (w1'-run, w2'-run, w1-run, w2-run) with inverses cancelled.
void appendOmegaBlock(Word& out, int np1, int np2, int n1, int n2) {
    auto emit = [&out](Gen pos, Gen inv, int n) {
        Gen g = n >= 0 ? pos : inv;
        for (int k = 0; k < std::abs(n); ++k) out.push_back(static_cast<uint8_t>(g));
    };
    emit(Gen::WP1, Gen::WP1I, np1);
    emit(Gen::WP2, Gen::WP2I, np2);
    emit(Gen::W1, Gen::W1I, n1);
    emit(Gen::W2, Gen::W2I, n2);
}

}  // namespace

NcPoly Algebra::straighten(const NcPoly& p, bool serre) const {
    NcPoly result;
    NcPoly::TermMap pending(p.terms());

    auto push = [&pending](Word w, RatFunc c) {
        if (c.isZero()) return;
        auto it = pending.find(w);
        if (it == pending.end()) {
            pending.emplace(std::move(w), std::move(c));
        } else {
            it->second += c;
            if (it->second.isZero()) pending.erase(it);
        }
    };

    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        Word w = it->first;
        RatFunc c = it->second;
        pending.erase(it);

        // first disorder position, scanning left to right
        size_t dis = w.size();
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (letterClass(at(w, i)) > letterClass(at(w, i + 1))) {
                dis = i;
                break;
            }
        }

        if (dis < w.size()) {
            Gen x = at(w, dis), y = at(w, dis + 1);
            Word swapped = w;
            std::swap(swapped[dis], swapped[dis + 1]);
            if (isE(x) && isF(y)) {
                push(swapped, c);
                if (genIndex(x) == genIndex(y)) {
                    int i = genIndex(x);
                    RatFunc k = (params_.rho_i(i) - params_.sigma_i(i)).inv() * c;
                    Word base = w.substr(0, dis) + w.substr(dis + 2);
                    Word wplus = base, wminus = base;
                    wplus.insert(dis, 1, static_cast<uint8_t>(i == 1 ? Gen::W1 : Gen::W2));
                    wminus.insert(dis, 1, static_cast<uint8_t>(i == 1 ? Gen::WP1 : Gen::WP2));
                    push(std::move(wplus), k);
                    push(std::move(wminus), -k);
                }
            } else if (isE(x)) {
                push(swapped, c * params_.conj(y, x).inv());
            } else {
                // omega-letter before f-letter
                push(swapped, c * params_.conj(x, y));
            }
            continue;
        }

        // triangular word: split f* omega* e*
        size_t fEnd = 0;
        while (fEnd < w.size() && isF(at(w, fEnd))) ++fEnd;
        size_t oEnd = fEnd;
        int np1 = 0, np2 = 0, n1 = 0, n2 = 0;
        while (oEnd < w.size() && isOmega(at(w, oEnd))) {
            Gen g = at(w, oEnd);
            int delta = isInverse(g) ? -1 : 1;
            if (g == Gen::WP1 || g == Gen::WP1I) np1 += delta;
            else if (g == Gen::WP2 || g == Gen::WP2I) np2 += delta;
            else if (g == Gen::W1 || g == Gen::W1I) n1 += delta;
            else n2 += delta;
            ++oEnd;
        }
        Word fPart = w.substr(0, fEnd);
        Word ePart = w.substr(oEnd);
        Word canon = fPart;
        appendOmegaBlock(canon, np1, np2, n1, n2);
        canon += ePart;

        if (!serre) {
            result.add(canon, c);
            continue;
        }

        if ((int)ePart.size() > bound_ || (int)fPart.size() > bound_)
            throw DegreeBoundError("one-sided degree " +
                                   std::to_string(std::max(ePart.size(), fPart.size())) +
                                   " exceeds completion bound " + std::to_string(bound_) +
                                   "; recomplete with a larger bound");

        NcPoly eRed = eRules_.reduce(NcPoly::fromWord(ePart));
        NcPoly fRed = fRules_.reduce(NcPoly::fromWord(fPart));
        bool eTrivial = eRed.size() == 1 && eRed.terms().begin()->first == ePart;
        bool fTrivial = fRed.size() == 1 && fRed.terms().begin()->first == fPart;
        if (eTrivial && fTrivial) {
            result.add(canon, c);
            continue;
        }
        Word mid = fPart;
        appendOmegaBlock(mid, np1, np2, n1, n2);
        for (auto& [ew, ec] : eRed.terms()) {
            if (fTrivial) {
                push(mid + ew, c * ec);
            } else {
                for (auto& [fw, fc] : fRed.terms()) {
                    Word nw = fw;
                    appendOmegaBlock(nw, np1, np2, n1, n2);
                    nw += ew;
                    push(std::move(nw), c * ec * fc);
                }
            }
        }
    }
    return result;
}

}  // namespace qg2
