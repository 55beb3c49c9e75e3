#include "qg2/cartan.hpp"

#include <stdexcept>

namespace qg2 {

CartanData::CartanData() {
    // alpha_2 = eps_2 + eps_3 - 2 eps_1 in the epsilon basis
    simpleRoots[1] = {-2, 1, 1};
    // consistency of the Cartan matrix with the inner products
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            if (a(i, j) * innerProduct(i, i) != 2 * innerProduct(i, j))
                throw std::logic_error("Cartan matrix inconsistent with root data");
    if (d[0] != innerProduct(1, 1) / 2 || d[1] != innerProduct(2, 2) / 2)
        throw std::logic_error("d_i inconsistent with root data");
}

int CartanData::innerProduct(int i, int j) const {
    const auto& a1 = simpleRoots[i - 1];
    const auto& a2 = simpleRoots[j - 1];
    return a1[0] * a2[0] + a1[1] * a2[1] + a1[2] * a2[2];
}

Weight CartanData::reflect(int i, const Weight& mu) const {
    // s_i(alpha_j) = alpha_j - a_{ij} alpha_i
    if (i == 1) return {-mu.m1 + 3 * mu.m2, mu.m2};
    return {mu.m1, mu.m1 - mu.m2};
}

int CartanData::deltaPlus(int i, int j) const {
    if (i == j) throw std::logic_error("deltaPlus: i == j");
    return (i < j && a(i, j) != 0) ? 2 : 1;
}

RatFunc Params::lambda(int i, int j) const {
    if (i == 1 && j == 1) return rho / sigma;
    if (i == 1 && j == 2) return rho.pow(-3);
    if (i == 2 && j == 1) return sigma.pow(3);
    return rho.pow(3) / sigma.pow(3);
}

RatFunc Params::conj(Gen g, Gen x) const {
    if (!isOmega(g) || isOmega(x)) throw std::logic_error("conj: bad arguments");
    int j = genIndex(g);
    int i = genIndex(x);
    RatFunc base = isOmegaPrime(g) ? lambda(j, i).inv() : lambda(i, j);
    if (isF(x)) base = base.inv();
    if (isInverse(g)) base = base.inv();
    return base;
}

RatFunc Params::conjWeight(Gen g, const Weight& mu) const {
    if (!isOmega(g)) throw std::logic_error("conjWeight: not an omega letter");
    int j = genIndex(g);
    RatFunc base = isOmegaPrime(g)
                       ? lambda(j, 1).pow(-mu.m1) * lambda(j, 2).pow(-mu.m2)
                       : lambda(1, j).pow(mu.m1) * lambda(2, j).pow(mu.m2);
    if (isInverse(g)) base = base.inv();
    return base;
}

}  // namespace qg2
