#ifndef QG2_CARTAN_HPP
#define QG2_CARTAN_HPP

#include <array>

#include "qg2/scalar.hpp"
#include "qg2/word.hpp"

namespace qg2 {

/// Root and weight bookkeeping for G2. Kept as a value type rather than a
/// table of constants so alternative instantiations stay cheap.
struct CartanData {
    // simple roots in the epsilon-basis of R^3
    std::array<std::array<int, 3>, 2> simpleRoots{{{1, -1, 0}, {-2, 1, 0}}};
    std::array<std::array<int, 2>, 2> cartan{{{2, -3}, {-1, 2}}};
    std::array<int, 2> d{1, 3};  // d_i = (alpha_i, alpha_i)/2

    // positive roots as (m1, m2) coordinates in the alpha-basis
    std::array<Weight, 6> positiveRoots{
        {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}};

    CartanData();

    int a(int i, int j) const { return cartan[i - 1][j - 1]; }

    int innerProduct(int i, int j) const;

    /// Simple reflection s_i acting on alpha-basis coordinates.
    Weight reflect(int i, const Weight& mu) const;

    /// delta^+ exponent table of the f-image formula (only i != j is used).
    int deltaPlus(int i, int j) const;
};

/// The parameter pair (rho, sigma) of a presentation instance:
/// (r, s) for the principal object, (s^-1, r^-1) for the associated one.
struct Params {
    RatFunc rho, sigma;

    static Params source() { return {RatFunc::r(), RatFunc::s()}; }
    static Params swapped() { return {RatFunc::s().inv(), RatFunc::r().inv()}; }

    RatFunc rho_i(int i) const { return i == 1 ? rho : rho.pow(3); }
    RatFunc sigma_i(int i) const { return i == 1 ? sigma : sigma.pow(3); }

    /// lambda(i,j) = <omega_i', omega_j>, the Cartan structure constants:
    /// lambda(1,1)=rho/sigma, lambda(1,2)=rho^-3, lambda(2,1)=sigma^3,
    /// lambda(2,2)=rho^3 sigma^-3.
    RatFunc lambda(int i, int j) const;

    /// Conjugation constant: g x g^-1 = conj(g,x) * x for an omega-letter g
    /// and x in {e1,e2,f1,f2}.
    RatFunc conj(Gen g, Gen x) const;

    /// Conjugation of an omega-letter against a weight-mu homogeneous element.
    RatFunc conjWeight(Gen g, const Weight& mu) const;
};

}  // namespace qg2

#endif
