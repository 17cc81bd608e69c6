#pragma once

// Election events for three candidates as polytopes over voting-situation
// shares, and their limiting probabilities under the impartial anonymous
// culture (IAC) model.
//
// Shares x_1..x_6 belong to the preference orders abc, acb, bac, bca, cab,
// cba. Events are written as homogeneous linear inequalities on the full
// share simplex (sum x_i = 1, x_i >= 0) and then reduced to five dimensions
// by eliminating x_6. The reduced simplex has volume 1/120, so an event of
// reduced volume V that stands for s equally likely relabelings has
// probability 120 * s * V.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "iacpoly/errors.hpp"
#include "iacpoly/polytope.hpp"
#include "iacpoly/rational.hpp"

namespace iacpoly::socialchoice {

enum class Candidate : int { a = 0, b = 1, c = 2 };

using Order = std::array<Candidate, 3>;
using LinearForm = QVector;  // length 6, over the full share space

inline constexpr std::size_t kFullDim = 6;
inline constexpr std::size_t kReducedDim = 5;

inline constexpr std::array<Order, 6> kOrders{{
    {Candidate::a, Candidate::b, Candidate::c},
    {Candidate::a, Candidate::c, Candidate::b},
    {Candidate::b, Candidate::a, Candidate::c},
    {Candidate::b, Candidate::c, Candidate::a},
    {Candidate::c, Candidate::a, Candidate::b},
    {Candidate::c, Candidate::b, Candidate::a},
}};

inline char label(Candidate c) { return static_cast<char>('a' + static_cast<int>(c)); }

inline std::size_t order_index(const Order& o) {
    for (std::size_t i = 0; i < kOrders.size(); ++i)
        if (kOrders[i] == o) return i;
    throw DomainError("not a preference order");
}

inline std::size_t rank_of(const Order& o, Candidate c) {
    for (std::size_t i = 0; i < 3; ++i)
        if (o[i] == c) return i;
    return 3;
}

/// Scoring rule with weights (1, lambda, 0).
class ScoringRule {
public:
    explicit ScoringRule(Rational lambda) : lambda_(std::move(lambda)) {
        if (lambda_ < Rational(0) || lambda_ > Rational(1))
            throw DomainError("scoring weight lambda must lie in [0,1], got " + lambda_.to_string());
    }
    static ScoringRule plurality() { return ScoringRule(0); }
    static ScoringRule borda() { return ScoringRule(Rational(1, 2)); }
    static ScoringRule antiplurality() { return ScoringRule(1); }

    [[nodiscard]] const Rational& lambda() const { return lambda_; }
    [[nodiscard]] Rational weight(std::size_t position) const {
        return position == 0 ? Rational(1) : (position == 1 ? lambda_ : Rational(0));
    }
    [[nodiscard]] std::string name() const {
        if (lambda_ == Rational(0)) return "plurality";
        if (lambda_ == Rational(1, 2)) return "borda";
        if (lambda_ == Rational(1)) return "antiplurality";
        return "lambda=" + lambda_.to_string();
    }

    friend bool operator==(const ScoringRule&, const ScoringRule&) = default;

private:
    Rational lambda_;
};

/// Number of equally likely candidate relabelings one compiled polytope stands for.
struct SymmetryFactor {
    int factor = 1;

    static SymmetryFactor none() { return {1}; }
    static SymmetryFactor fixed_winner() { return {3}; }
    static SymmetryFactor fixed_ranking() { return {6}; }
};

// ---------------------------------------------------------------------------
// Linear forms over shares

inline LinearForm share(std::size_t i) {
    LinearForm f(kFullDim);
    f.at(i) = 1;
    return f;
}

inline LinearForm score(const ScoringRule& rule, Candidate c) {
    LinearForm f(kFullDim);
    for (std::size_t i = 0; i < kOrders.size(); ++i) f[i] = rule.weight(rank_of(kOrders[i], c));
    return f;
}

/// Share preferring x to y minus share preferring y to x.
inline LinearForm pairwise_margin(Candidate x, Candidate y) {
    LinearForm f(kFullDim);
    for (std::size_t i = 0; i < kOrders.size(); ++i) f[i] = rank_of(kOrders[i], x) < rank_of(kOrders[i], y) ? 1 : -1;
    return f;
}

inline LinearForm operator+(LinearForm a, const LinearForm& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
inline LinearForm operator-(LinearForm a, const LinearForm& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}
inline LinearForm operator*(const Rational& k, LinearForm a) {
    for (auto& v : a) v *= k;
    return a;
}

/// Full six-dimensional share simplex.
inline HPolytope share_simplex() {
    HPolytope p(kFullDim);
    for (std::size_t i = 0; i < kFullDim; ++i) p.add_ge(share(i), 0);
    p.add_eq(LinearForm(kFullDim, Rational(1)), 1);
    return p;
}

/// Event in the full space: share simplex plus `form >= 0` for each form.
inline HPolytope full_event(const std::vector<LinearForm>& nonnegative_forms) {
    HPolytope p = share_simplex();
    for (const auto& f : nonnegative_forms) p.add_ge(f, 0);
    return p;
}

/// Eliminates x_6 using sum x_i = 1; the result satisfies the standard inequalities.
inline HPolytope reduce(const HPolytope& full) {
    if (full.dim() != kFullDim) throw DimensionError("reduce expects a six-dimensional share polytope");
    return eliminate_equality(full, kFullDim - 1);
}

/// x_i >= 0, sum_{i<=5} x_i <= 1.
inline HPolytope standard_inequalities() { return standard_simplex(kReducedDim); }

inline const Rational& reduced_simplex_volume() {
    static const Rational v(1, 120);
    return v;
}

/// Coordinate permutation on shares induced by relabeling candidates via `sigma`.
inline std::vector<std::size_t> share_permutation(const std::array<Candidate, 3>& sigma) {
    std::vector<std::size_t> perm(kOrders.size());
    for (std::size_t i = 0; i < kOrders.size(); ++i) {
        Order o = kOrders[i];
        for (auto& c : o) c = sigma[static_cast<int>(c)];
        perm[i] = order_index(o);
    }
    return perm;
}

/// The b <-> c relabeling: x1<->x2, x3<->x5, x4<->x6.
inline std::vector<std::size_t> swap_b_c() { return share_permutation({Candidate::a, Candidate::c, Candidate::b}); }

inline HPolytope relabel(const HPolytope& full, const std::array<Candidate, 3>& sigma) {
    return permute_coordinates(full, share_permutation(sigma));
}

// ---------------------------------------------------------------------------
// Elementary events (full space forms)

inline std::vector<LinearForm> winner_forms(const ScoringRule& rule, Candidate w) {
    std::vector<LinearForm> out;
    for (int k = 0; k < 3; ++k) {
        const auto other = static_cast<Candidate>(k);
        if (other != w) out.push_back(score(rule, w) - score(rule, other));
    }
    return out;
}

inline std::vector<LinearForm> ranking_forms(const ScoringRule& rule, const Order& o) {
    return {score(rule, o[0]) - score(rule, o[1]), score(rule, o[1]) - score(rule, o[2])};
}

inline std::vector<LinearForm> condorcet_winner_forms(Candidate w) {
    std::vector<LinearForm> out;
    for (int k = 0; k < 3; ++k) {
        const auto other = static_cast<Candidate>(k);
        if (other != w) out.push_back(pairwise_margin(w, other));
    }
    return out;
}

inline std::vector<LinearForm> condorcet_loser_forms(Candidate l) {
    std::vector<LinearForm> out;
    for (int k = 0; k < 3; ++k) {
        const auto other = static_cast<Candidate>(k);
        if (other != l) out.push_back(pairwise_margin(other, l));
    }
    return out;
}

inline std::vector<LinearForm> concat(std::vector<LinearForm> a, const std::vector<LinearForm>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// ---------------------------------------------------------------------------
// Reduced-space event polytopes

/// Candidate a wins under (1, lambda, 0): score(a) >= score(b), score(a) >= score(c).
inline HPolytope rule_winner_conditions(const ScoringRule& rule) {
    return reduce(full_event(winner_forms(rule, Candidate::a)));
}

/// The rule ranks candidates in order `o`.
inline HPolytope rule_ranking_conditions(const ScoringRule& rule, const Order& o = kOrders[0]) {
    return reduce(full_event(ranking_forms(rule, o)));
}

/// Candidate beats both others in pairwise majority comparisons.
inline HPolytope condorcet_winner(Candidate w = Candidate::a) {
    const auto base = full_event(condorcet_winner_forms(Candidate::a));
    return reduce(relabel(base, {w, w == Candidate::b ? Candidate::a : Candidate::b,
                                 w == Candidate::c ? Candidate::a : Candidate::c}));
}

/// Candidate loses to both others in pairwise majority comparisons.
inline HPolytope condorcet_loser(Candidate l = Candidate::a) {
    const auto base = full_event(condorcet_loser_forms(Candidate::a));
    return reduce(relabel(base, {l, l == Candidate::b ? Candidate::a : Candidate::b,
                                 l == Candidate::c ? Candidate::a : Candidate::c}));
}

// ---------------------------------------------------------------------------
// Coalitional manipulability (sincere ranking a > b > c)

/// Conditions under which voters preferring b to a can make b win by all
/// ranking b first, splitting their middle slot between a and c as needed.
/// With M the manipulating share and s the part putting a in the middle:
///   b >= a needs lambda*s <= U,  b >= c needs lambda*s >= L,
/// and some s in [0, M] exists iff U >= 0, L <= lambda*M, L <= U.
inline std::vector<LinearForm> strategic_forms_for_b(const ScoringRule& rule) {
    const Rational& lam = rule.lambda();
    const LinearForm x1 = share(0), x2 = share(1), x5 = share(4);
    const LinearForm m = share(2) + share(3) + share(5);  // bac, bca, cba
    const LinearForm upper = m + lam * x1 - x1 - x2 - lam * x5;
    const LinearForm l_room = m + lam * x1 - x5 - lam * x2;  // lambda*M - L
    const LinearForm gap = (Rational(2) - lam) * m + (Rational(2) * lam - Rational(1)) * x1 -
                           (Rational(1) + lam) * x2 - (Rational(1) + lam) * x5;  // U - L
    return {upper, l_room, gap};
}

/// Full-space polytope: sincere a > b > c and manipulation toward `target`
/// (b or c) succeeds. The c version applies the b <-> c relabeling to the
/// strategic conditions only; the sincere ranking stays a > b > c.
inline HPolytope manipulation_polytope_full(const ScoringRule& rule, Candidate target) {
    if (target == Candidate::a) throw DomainError("the sincere winner cannot be the manipulation target");
    HPolytope strategic = full_event(strategic_forms_for_b(rule));
    if (target == Candidate::c) strategic = permute_coordinates(strategic, swap_b_c());
    return intersect(full_event(ranking_forms(rule, kOrders[0])), strategic);
}

/// Inclusion-exclusion region for "manipulable in favour of b or c" with
/// sincere ranking a > b > c. Only plurality and Borda are supported.
inline EventRegion manipulability_event(const ScoringRule& rule) {
    if (rule != ScoringRule::plurality() && rule != ScoringRule::borda())
        throw DomainError("manipulability systems are available for plurality and Borda only (got " + rule.name() +
                          ")");
    const HPolytope pb = reduce(manipulation_polytope_full(rule, Candidate::b));
    const HPolytope pc = reduce(manipulation_polytope_full(rule, Candidate::c));
    EventRegion r;
    r.terms = {{1, pb}, {1, pc}, {-1, intersect(pb, pc)}};
    return r;
}

// ---------------------------------------------------------------------------
// Probabilities

/// factor * volume(region) / volume(reduced simplex), checked to lie in [0,1].
inline Rational iac_probability(const EventRegion& e, SymmetryFactor s) {
    if (e.dim() != kReducedDim) throw DimensionError("IAC probability expects the reduced five-dimensional share space");
    const Rational p = Rational(s.factor) * region_volume(e) / reduced_simplex_volume();
    if (p < Rational(0) || p > Rational(1))
        throw ConsistencyError("probability " + p.to_string() + " outside [0,1]; symmetry factor " +
                               std::to_string(s.factor) + " is wrong for this event");
    return p;
}

inline Rational iac_probability(const HPolytope& p, SymmetryFactor s) { return iac_probability(EventRegion(p), s); }

/// P(E1 | E2) = volume(E1 ∩ E2) / volume(E2); both in the same space.
inline Rational conditional_probability(const HPolytope& e1, const HPolytope& e2) {
    const Rational denom = volume(e2);
    if (denom.is_zero()) throw DomainError("conditioning event has probability zero");
    const Rational p = volume(intersect(e1, e2)) / denom;
    if (p < Rational(0) || p > Rational(1)) throw ConsistencyError("conditional probability outside [0,1]");
    return p;
}

inline Rational condorcet_winner_probability() { return iac_probability(condorcet_winner(), SymmetryFactor::fixed_winner()); }

inline Rational condorcet_paradox_probability() { return Rational(1) - condorcet_winner_probability(); }

/// Probability that the rule picks the Condorcet winner given one exists.
inline Rational condorcet_efficiency(const ScoringRule& rule) {
    return conditional_probability(rule_winner_conditions(rule), condorcet_winner());
}

/// Probability that every listed rule picks the Condorcet winner, given one exists.
inline Rational joint_condorcet_efficiency(const std::vector<ScoringRule>& rules) {
    HPolytope e = condorcet_winner();
    for (const auto& r : rules) e = intersect(e, rule_winner_conditions(r));
    return conditional_probability(e, condorcet_winner());
}

/// P(rule picks the Condorcet winner | each rule in `given` picks it).
inline Rational condorcet_efficiency_given(const ScoringRule& rule, const std::vector<ScoringRule>& given) {
    HPolytope cond = condorcet_winner();
    for (const auto& g : given) cond = intersect(cond, rule_winner_conditions(g));
    return conditional_probability(rule_winner_conditions(rule), cond);
}

/// Borda's paradox: the rule elects the Condorcet loser.
inline Rational condorcet_loser_probability(const ScoringRule& rule) {
    return iac_probability(intersect(rule_winner_conditions(rule), condorcet_loser()), SymmetryFactor::fixed_winner());
}

inline Rational manipulability_probability(const ScoringRule& rule) {
    return iac_probability(manipulability_event(rule), SymmetryFactor::fixed_ranking());
}

// ---------------------------------------------------------------------------
// Agreement between rules

enum class AgreementMode { winner, ranking };

struct CompiledEvent {
    EventRegion region;
    SymmetryFactor symmetry;
};

/// Winner mode: both rules elect a (factor 3). Ranking mode: both rules rank
/// a > b > c (factor 6).
inline CompiledEvent agreement_event(const ScoringRule& r1, const ScoringRule& r2, AgreementMode mode) {
    if (mode == AgreementMode::winner)
        return {EventRegion(intersect(rule_winner_conditions(r1), rule_winner_conditions(r2))),
                SymmetryFactor::fixed_winner()};
    return {EventRegion(intersect(rule_ranking_conditions(r1), rule_ranking_conditions(r2))),
            SymmetryFactor::fixed_ranking()};
}

inline Rational agreement_probability(const ScoringRule& r1, const ScoringRule& r2, AgreementMode mode) {
    const auto e = agreement_event(r1, r2, mode);
    return iac_probability(e.region, e.symmetry);
}

struct AllRulesAgreeBreakdown {
    Rational given_condorcet;       // P(all positional rules elect the Condorcet winner | it exists)
    Rational condorcet_exists;      // P(a Condorcet winner exists)
    Rational cyclic_case;           // P(no Condorcet winner and every positional rule elects a)
    Rational cyclic_multiplier;     // number of cyclic cases the per-case value is scaled by
    Rational cyclic_contribution;
    Rational total;
};

/// All positional and all Condorcet-consistent rules elect the same winner.
/// Without a Condorcet winner the rules agree iff plurality and antiplurality
/// give the same ranking, which must then follow the majority cycle from its
/// winner. The cyclic contribution scales the per-winner value by 32.
inline AllRulesAgreeBreakdown all_rules_agree_breakdown() {
    AllRulesAgreeBreakdown b;
    const auto pa = intersect(rule_winner_conditions(ScoringRule::plurality()),
                              rule_winner_conditions(ScoringRule::antiplurality()));
    b.given_condorcet = conditional_probability(pa, condorcet_winner());
    b.condorcet_exists = condorcet_winner_probability();

    EventRegion cyclic;
    for (const auto& [x, y, z] : {std::array{Candidate::a, Candidate::b, Candidate::c},
                                  std::array{Candidate::a, Candidate::c, Candidate::b}}) {
        const Order o{x, y, z};
        std::vector<LinearForm> f = {pairwise_margin(x, y), pairwise_margin(y, z), pairwise_margin(z, x)};
        f = concat(f, ranking_forms(ScoringRule::plurality(), o));
        f = concat(f, ranking_forms(ScoringRule::antiplurality(), o));
        cyclic.terms.push_back({1, reduce(full_event(f))});
    }
    b.cyclic_case = iac_probability(cyclic, SymmetryFactor::none());
    b.cyclic_multiplier = 32;
    b.cyclic_contribution = b.cyclic_multiplier * b.cyclic_case;
    b.total = b.given_condorcet * b.condorcet_exists + b.cyclic_contribution;
    return b;
}

inline Rational all_rules_agree_probability() { return all_rules_agree_breakdown().total; }

// ---------------------------------------------------------------------------
// Participation and abstention paradoxes for scoring runoff rules

enum class Paradox { PPP, NPP, PAP, NAP };

inline const char* to_string(Paradox p) {
    switch (p) {
        case Paradox::PPP: return "PPP";
        case Paradox::NPP: return "NPP";
        case Paradox::PAP: return "PAP";
        case Paradox::NAP: return "NAP";
    }
    return "?";
}

/// Runoff with first-stage rule (1, lambda, 0); sincere outcome: c is
/// eliminated (a and b both outscore it) and a beats b in the runoff.
/// Each paradox adds the projection, onto the share space, of "some amount
/// t >= 0 of one ballot type joins (or abstains) and the outcome flips":
///   PPP  t acb ballots join; b drops out and c beats a in the runoff.
///   NPP  t cab ballots join (b ranked last); a drops out and b beats c.
///   PAP  t <= x3 bac ballots abstain (b ranked first); a drops out and b beats c.
///   NAP  t <= x4 bca ballots abstain (a ranked last); b drops out and c beats a.
/// Other ballot types only move the outcome away from the flip. Eliminating t
/// leaves the inequalities below, all written as form >= 0.
inline std::vector<LinearForm> participation_forms(const ScoringRule& rule, Paradox paradox) {
    const Rational& lam = rule.lambda();
    const Rational one_minus = Rational(1) - lam;
    const LinearForm sa = score(rule, Candidate::a), sb = score(rule, Candidate::b), sc = score(rule, Candidate::c);
    const LinearForm ca = pairwise_margin(Candidate::c, Candidate::a);
    const LinearForm bc = pairwise_margin(Candidate::b, Candidate::c);

    std::vector<LinearForm> f = {sa - sc, sb - sc, pairwise_margin(Candidate::a, Candidate::b)};
    switch (paradox) {
        case Paradox::PPP:
            // max(S_b - S_a, (S_b - S_c)/lam) <= t <= margin(c over a)
            f.push_back(ca - (sb - sa));
            f.push_back(lam * ca - (sb - sc));
            f.push_back(ca);
            break;
        case Paradox::NPP:
            // (S_a - S_c)/(1-lam) <= t <= min((S_b - S_a)/lam, margin(b over c))
            f.push_back(one_minus * (sb - sa) - lam * (sa - sc));
            f.push_back(one_minus * bc - (sa - sc));
            f.push_back(sb - sa);
            break;
        case Paradox::PAP:
            // (S_a - S_c)/lam <= t <= min((S_b - S_a)/(1-lam), margin(b over c), x3)
            f.push_back(lam * (sb - sa) - one_minus * (sa - sc));
            f.push_back(lam * bc - (sa - sc));
            f.push_back(lam * share(2) - (sa - sc));
            f.push_back(sb - sa);
            break;
        case Paradox::NAP:
            // max(S_b - S_a, (S_b - S_c)/(1-lam)) <= t <= min(x4, margin(c over a))
            f.push_back(share(3) - (sb - sa));
            f.push_back(ca - (sb - sa));
            f.push_back(one_minus * share(3) - (sb - sc));
            f.push_back(one_minus * ca - (sb - sc));
            break;
    }
    return f;
}

/// Reduced-space region; its probability uses the fixed-ranking factor 6
/// (winner, runoff loser, eliminated candidate).
inline EventRegion participation_event(const ScoringRule& rule, Paradox paradox) {
    if (rule != ScoringRule::plurality() && rule != ScoringRule::borda() && rule != ScoringRule::antiplurality())
        throw DomainError("participation paradoxes are defined for plurality, Borda and antiplurality runoff only");
    return EventRegion(reduce(full_event(participation_forms(rule, paradox))));
}

inline Rational participation_probability(const ScoringRule& rule, Paradox paradox) {
    return iac_probability(participation_event(rule, paradox), SymmetryFactor::fixed_ranking());
}

// ---------------------------------------------------------------------------
// Referendum (compound majority) paradox

/// Polytope Q_k in the scaled district space y_i = n_i / n: a wins districts
/// 1..k, b wins the rest, b wins the popular vote. With `cap_districts` the
/// bound y_i <= 1 is imposed on a's districts as well.
inline HPolytope referendum_polytope(std::size_t districts, std::size_t k, bool cap_districts = false) {
    HPolytope q(districts);
    for (std::size_t i = 0; i < districts; ++i) {
        QVector e(districts);
        e[i] = 1;
        if (i < k) {
            q.add_ge(e, Rational(1, 2));
            if (cap_districts) q.add_le(e, 1);
        } else {
            q.add_ge(e, 0);
            q.add_le(e, Rational(1, 2));
        }
    }
    q.add_le(QVector(districts, Rational(1)), Rational(static_cast<long>(districts), 2));
    return q;
}

/// Sum over k in [floor(N/2)+1, N-1] of 2 * C(N,k) * vol(Q_k); the district
/// cube has volume 1.
inline Rational referendum_probability(std::size_t districts, bool cap_districts = false) {
    if (districts < 3) throw DomainError("the referendum paradox needs at least 3 districts");
    Rational total;
    for (std::size_t k = districts / 2 + 1; k + 1 <= districts; ++k)
        total += Rational(2) * Rational(binomial(districts, k)) * volume(referendum_polytope(districts, k, cap_districts));
    return total;
}

// ---------------------------------------------------------------------------
// Rule M (most Condorcet-efficient scoring rule), evaluated at a rational lambda

struct RuleMProbabilities {
    Rational efficiency;
    Rational joint_with_borda;
    Rational condorcet_loser;
};

inline RuleMProbabilities rule_m_probabilities(const Rational& lambda_approx) {
    const ScoringRule m(lambda_approx);
    return {condorcet_efficiency(m), joint_condorcet_efficiency({m, ScoringRule::borda()}),
            condorcet_loser_probability(m)};
}

/// Five-decimal approximation of the optimal lambda.
inline Rational rule_m_default_lambda() { return Rational(37228, 100000); }

}  // namespace iacpoly::socialchoice
