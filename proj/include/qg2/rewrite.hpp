#ifndef QG2_REWRITE_HPP
#define QG2_REWRITE_HPP

#include <string>
#include <vector>

#include "qg2/cartan.hpp"
#include "qg2/ncpoly.hpp"

#include <nlohmann/json_fwd.hpp>

namespace qg2 {

struct DegreeBoundError : std::runtime_error {
    explicit DegreeBoundError(const std::string& msg) : std::runtime_error(msg) {}
};

/// One oriented rewrite rule on a one-sided alphabet ({e1,e2} or {f1,f2}).
/// The leading word is strictly deglex-greater than every word of the
/// replacement, and both sides are weight-homogeneous of the same degree.
struct Rule {
    Word lead;
    NcPoly rhs;
    std::string provenance;
};

/// Record of one resolved overlap ambiguity.
struct CriticalPairWitness {
    Word overlap;
    size_t rule1 = 0, rule2 = 0;
    bool resolvedToZero = false;  // true when the S-polynomial reduced to 0 directly
    std::string newRule;          // provenance of the rule it spawned, if any
};

/// A confluent (up to the stated degree) oriented rewriting system for one
/// Serre subsystem.
class RuleSet {
public:
    RuleSet() = default;

    const std::vector<Rule>& rules() const { return rules_; }
    int bound() const { return bound_; }
    const std::vector<CriticalPairWitness>& witnesses() const { return witnesses_; }

    /// Largest rule degree in the completed system (the observed
    /// stabilization degree when completion added nothing at the bound).
    int maxRuleDegree() const;

    /// Full normal form of a one-sided polynomial.
    NcPoly reduce(const NcPoly& p) const;

    /// Re-checks every stored critical pair by reducing both branches.
    bool recheckWitnesses() const;

    nlohmann::json toJson() const;

    /// Degree-bounded critical-pair completion of homogeneous one-sided
    /// relators. Throws std::invalid_argument on inhomogeneous input.
    static RuleSet complete(const std::vector<std::pair<NcPoly, std::string>>& relators,
                            int bound);

private:
    bool reduceOnce(const Word& w, Word& prefixOut, size_t& ruleOut) const;

    std::vector<Rule> rules_;
    int bound_ = 0;
    std::vector<CriticalPairWitness> witnesses_;
};

/// A presentation instance: parameters, Cartan data and the two completed
/// Serre systems. Provides straightening to the triangular normal form
/// (f-word)(omega'-block)(omega-block)(e-word).
class Algebra {
public:
    Algebra(Params params, int bound);

    const Params& params() const { return params_; }
    const CartanData& cartan() const { return cartan_; }
    int bound() const { return bound_; }
    const RuleSet& eRules() const { return eRules_; }
    const RuleSet& fRules() const { return fRules_; }

    /// Normal form modulo (G1)-(G6). With serre=false only the triangular
    /// ordering and the omega-group relations are applied (the free Borel
    /// parts stay unreduced).
    NcPoly straighten(const NcPoly& p, bool serre = true) const;

    bool isZero(const NcPoly& p) const { return straighten(p).isZero(); }

    /// The four Serre relators at these parameters.
    static NcPoly serreE1(const Params& p);
    static NcPoly serreE2(const Params& p);
    static NcPoly serreF1(const Params& p);
    static NcPoly serreF2(const Params& p);

private:
    Params params_;
    CartanData cartan_;
    int bound_;
    RuleSet eRules_, fRules_;
};

}  // namespace qg2

#endif
