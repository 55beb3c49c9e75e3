#include "qg2/word.hpp"

#include <sstream>
#include <stdexcept>

namespace qg2 {

Gen inverseGen(Gen g) {
    switch (g) {
        case Gen::WP1: return Gen::WP1I;
        case Gen::WP2: return Gen::WP2I;
        case Gen::WP1I: return Gen::WP1;
        case Gen::WP2I: return Gen::WP2;
        case Gen::W1: return Gen::W1I;
        case Gen::W2: return Gen::W2I;
        case Gen::W1I: return Gen::W1;
        case Gen::W2I: return Gen::W2;
        default: return g;
    }
}

std::string genName(Gen g) {
    switch (g) {
        case Gen::F1: return "f1";
        case Gen::F2: return "f2";
        case Gen::WP1: return "w1'";
        case Gen::WP2: return "w2'";
        case Gen::WP1I: return "w1'^-1";
        case Gen::WP2I: return "w2'^-1";
        case Gen::W1: return "w1";
        case Gen::W2: return "w2";
        case Gen::W1I: return "w1^-1";
        case Gen::W2I: return "w2^-1";
        case Gen::E1: return "e1";
        case Gen::E2: return "e2";
    }
    throw std::logic_error("bad Gen");
}

std::optional<Gen> genFromName(const std::string& name) {
    if (name == "f1") return Gen::F1;
    if (name == "f2") return Gen::F2;
    if (name == "w1'") return Gen::WP1;
    if (name == "w2'") return Gen::WP2;
    if (name == "w1") return Gen::W1;
    if (name == "w2") return Gen::W2;
    if (name == "e1") return Gen::E1;
    if (name == "e2") return Gen::E2;
    return std::nullopt;
}

Weight weightOfWord(const Word& w) {
    Weight out;
    for (uint8_t b : w) {
        Gen g = static_cast<Gen>(b);
        if (isE(g)) {
            (genIndex(g) == 1 ? out.m1 : out.m2) += 1;
        } else if (isF(g)) {
            (genIndex(g) == 1 ? out.m1 : out.m2) -= 1;
        }
    }
    return out;
}

std::string wordStr(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        size_t run = j - i;
        Gen g = at(w, i);
        if (!first) os << "*";
        first = false;
        if (isInverse(g)) {
            os << genName(inverseGen(g)) << "^-" << run;
        } else {
            os << genName(g);
            if (run > 1) os << "^" << run;
        }
        i = j;
    }
    return os.str();
}

}  // namespace qg2
