#include <gtest/gtest.h>

#include "iacpoly/ehrhart.hpp"
#include "iacpoly/event_spec.hpp"
#include "iacpoly/socialchoice.hpp"
#include "iacpoly/tables.hpp"
#include "oracles.hpp"

using namespace iacpoly;
using namespace iacpoly::socialchoice;

namespace {

const ScoringRule P = ScoringRule::plurality();
const ScoringRule B = ScoringRule::borda();
const ScoringRule A = ScoringRule::antiplurality();

HPolytope reduced_system(std::initializer_list<std::pair<QVector, Rational>> ge_rows) {
    HPolytope p = standard_inequalities();
    for (const auto& [a, b] : ge_rows) p.add_ge(a, b);
    return p;
}

bool within(const Rational& v, double expected, double tol) { return std::abs(v.to_double() - expected) <= tol; }

// Integer voting situations (n_1..n_6) summing to n that satisfy `pred`.
template <class Pred>
std::uint64_t count_profiles(int n, Pred pred) {
    std::uint64_t c = 0;
    oracle::for_each_point(5, 0, n, [&](const std::vector<std::int64_t>& x) {
        const std::int64_t s = x[0] + x[1] + x[2] + x[3] + x[4];
        if (s > n) return;
        if (pred(x[0], x[1], x[2], x[3], x[4], n - s)) ++c;
    });
    return c;
}

}  // namespace

TEST(ShareSpace, Forms) {
    EXPECT_EQ(score(B, Candidate::a), (QVector{1, 1, Rational(1, 2), 0, Rational(1, 2), 0}));
    EXPECT_EQ(pairwise_margin(Candidate::a, Candidate::b), (QVector{1, 1, -1, -1, 1, -1}));
    EXPECT_EQ(swap_b_c(), (std::vector<std::size_t>{1, 0, 4, 5, 2, 3}));
    EXPECT_TRUE(reduce(share_simplex()).same_constraints(standard_inequalities()));
    EXPECT_EQ(volume(reduce(share_simplex())), reduced_simplex_volume());
    EXPECT_TRUE(reduce(share_simplex()).eliminated().back().lattice_preserving);
}

TEST(ScoringRule, RejectsOutOfRangeWeight) {
    EXPECT_THROW(ScoringRule(Rational(-1, 3)), DomainError);
    EXPECT_THROW(ScoringRule(Rational(4, 3)), DomainError);
    EXPECT_EQ(ScoringRule(Rational(1, 2)), B);
}

TEST(RuleWinner, ReducedInequalities) {
    for (const Rational& lam : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(37228, 100000), Rational(1)}) {
        const auto expected = reduced_system({
            {{1, Rational(1) + lam, Rational(2) * lam - Rational(1), lam - Rational(1), Rational(2) * lam}, lam},
            {{2, Rational(2) - lam, Rational(1) + lam, Rational(1) - lam, lam}, 1},
        });
        EXPECT_TRUE(rule_winner_conditions(ScoringRule(lam)).same_constraints(expected)) << lam;
    }
}

TEST(RuleWinner, ProbabilityIsOneThird) {
    for (const Rational& lam : {Rational(0), Rational(1, 7), Rational(1, 2), Rational(5, 6), Rational(1)})
        EXPECT_EQ(iac_probability(rule_winner_conditions(ScoringRule(lam)), SymmetryFactor::none()),
                  Rational(1, 3));
}

TEST(RuleWinner, BordaSincereRankingMatchesManipulationBase) {
    const auto sincere = reduced_system({
        {{2, 3, 0, -1, 2}, 1},  // a beats b
        {{2, 0, 3, 2, -1}, 1},  // b beats c
    });
    EXPECT_TRUE(rule_ranking_conditions(B).same_constraints(sincere));
}

TEST(Condorcet, WinnerPolytope) {
    const auto expected = reduced_system({{{2, 2, 2, 0, 0}, 1}, {{2, 2, 0, 0, 2}, 1}});
    EXPECT_TRUE(condorcet_winner().same_constraints(expected));
    EXPECT_EQ(volume(condorcet_winner()), Rational(1, 384));
    EXPECT_EQ(condorcet_paradox_probability(), Rational(1, 16));
    EXPECT_EQ(iac_probability(condorcet_winner(), SymmetryFactor::fixed_winner()), Rational(15, 16));
}

TEST(Condorcet, RelabelingInvariance) {
    for (auto c : {Candidate::b, Candidate::c}) {
        EXPECT_EQ(volume(condorcet_winner(c)), Rational(1, 384));
        EXPECT_EQ(volume(condorcet_loser(c)), volume(condorcet_loser()));
    }
    // Compiling the plurality manipulation event for c and relabeling back
    // reproduces a polytope of the b-event's volume when the sincere
    // ranking is relabeled along with it.
    const auto full_b = full_event(concat(ranking_forms(P, {Candidate::a, Candidate::c, Candidate::b}),
                                          strategic_forms_for_b(P)));
    const auto full_c = permute_coordinates(full_b, swap_b_c());
    EXPECT_EQ(volume(reduce(full_b)), volume(reduce(full_c)));
}

TEST(Condorcet, ExistenceMatchesProfileCount) {
    // At n = 13 every profile has a strict majority relation.
    const int n = 13;
    const auto expected = count_profiles(n, [](auto x1, auto x2, auto x3, auto x4, auto x5, auto x6) {
        return 2 * (x1 + x2 + x3) >= x1 + x2 + x3 + x4 + x5 + x6 && 2 * (x1 + x2 + x5) >= x1 + x2 + x3 + x4 + x5 + x6;
    });
    EXPECT_EQ(count_lattice_points(condorcet_winner(), n), BigInt(std::to_string(expected)));
}

TEST(Condorcet, Efficiencies) {
    EXPECT_EQ(condorcet_efficiency(P), Rational(119, 135));
    EXPECT_EQ(condorcet_efficiency(B), Rational(41, 45));
    EXPECT_EQ(condorcet_efficiency(A), Rational(17, 27));
}

TEST(Condorcet, JointEfficienciesAreConsistent) {
    const Rational ba = joint_condorcet_efficiency({B, A});
    const Rational bp = joint_condorcet_efficiency({B, P});
    EXPECT_EQ(condorcet_efficiency_given(B, {A}), ba / condorcet_efficiency(A));
    EXPECT_EQ(condorcet_efficiency_given(B, {P}), bp / condorcet_efficiency(P));
    EXPECT_TRUE(within(ba, 0.61775, 5e-6));
    EXPECT_TRUE(within(joint_condorcet_efficiency({A, P}), 0.53040, 5e-6));
    EXPECT_TRUE(within(bp, 0.81821, 5e-6));
    EXPECT_TRUE(within(condorcet_efficiency_given(B, {A}), 0.98113, 5e-6));
}

TEST(Condorcet, LoserProbabilities) {
    EXPECT_EQ(condorcet_loser_probability(P), Rational(1, 36));
    EXPECT_EQ(condorcet_loser_probability(B), Rational(0));
    EXPECT_EQ(condorcet_loser_probability(A), Rational(17, 576));
}

TEST(Manipulability, PluralityAndBorda) {
    EXPECT_EQ(manipulability_probability(P), Rational(7, 24));
    EXPECT_EQ(manipulability_probability(B), Rational(132953, 264600));
    EXPECT_THROW(manipulability_event(A), DomainError);
}

TEST(Manipulability, BordaRegionsAndPeriods) {
    const auto r = manipulability_event(B);
    EXPECT_EQ(volume(r.terms[0].polytope), Rational(371, 559872));
    EXPECT_EQ(volume(r.terms[1].polytope), Rational(881, 6531840));
    EXPECT_EQ(volume(r.terms[2].polytope), Rational(170873, 1714608000));
    EXPECT_EQ(vertex_denominator_lcm(enumerate_vertices(r.terms[0].polytope)), BigInt(72));
    EXPECT_EQ(vertex_denominator_lcm(enumerate_vertices(r.terms[1].polytope)), BigInt(504));
    EXPECT_EQ(vertex_denominator_lcm(enumerate_vertices(r.terms[2].polytope)), BigInt(1260));
}

TEST(Manipulability, BordaStrategicInequalities) {
    const auto pb = manipulability_event(B).terms[0].polytope;
    const auto expected = reduced_system({
        {{2, 3, 0, -1, 2}, 1},
        {{2, 0, 3, 2, -1}, 1},
        {{-3, -4, 0, 0, -3}, -2},   // b beats a after manipulation
        {{-1, -2, 0, 0, -2}, -1},   // b beats c after manipulation
    });
    EXPECT_EQ(volume(pb), volume(expected));
    EXPECT_EQ(volume(intersect(pb, expected)), volume(pb));
    EXPECT_EQ(volume(pb), Rational(371, 559872));
}

TEST(Manipulability, PluralityStrategicConditionsMatchProfiles) {
    const int n = 9;
    const auto expected = count_profiles(n, [](auto x1, auto x2, auto x3, auto x4, auto x5, auto x6) {
        const bool sincere = x1 + x2 >= x3 + x4 && x3 + x4 >= x5 + x6;
        return sincere && x3 + x4 + x6 >= x1 + x2 && x3 + x4 + x6 >= x5;
    });
    const auto pb = reduce(manipulation_polytope_full(P, Candidate::b));
    EXPECT_EQ(count_lattice_points(pb, n), BigInt(std::to_string(expected)));
}

TEST(Manipulability, AntipluralityExtension) {
    const auto pb = reduce(manipulation_polytope_full(A, Candidate::b));
    const auto pc = reduce(manipulation_polytope_full(A, Candidate::c));
    EventRegion r;
    r.terms = {{1, pb}, {1, pc}, {-1, intersect(pb, pc)}};
    EXPECT_EQ(iac_probability(r, SymmetryFactor::fixed_ranking()), Rational(14, 27));
}

TEST(Agreement, WinnerAndRanking) {
    EXPECT_EQ(agreement_probability(P, A, AgreementMode::winner), Rational(113, 216));
    EXPECT_EQ(volume(agreement_event(P, A, AgreementMode::winner).region.terms[0].polytope), Rational(113, 77760));
    EXPECT_EQ(agreement_probability(P, B, AgreementMode::winner), Rational(89, 108));
    EXPECT_EQ(agreement_probability(A, B, AgreementMode::winner), Rational(1039, 1512));
    EXPECT_EQ(agreement_probability(P, A, AgreementMode::ranking), Rational(8, 27));
    EXPECT_EQ(agreement_probability(B, P, AgreementMode::ranking), Rational(61, 108));
    EXPECT_EQ(agreement_probability(A, B, AgreementMode::ranking), Rational(61, 108));
}

TEST(Agreement, VertexCounts) {
    const auto pa = agreement_event(P, A, AgreementMode::winner).region.terms[0].polytope;
    EXPECT_EQ(enumerate_vertices(pa).vertices.size(), 18u);
    EXPECT_EQ(vertex_denominator_lcm(enumerate_vertices(pa)), BigInt(12));
    const auto pca = intersect(pa, condorcet_winner());
    EXPECT_EQ(enumerate_vertices(pca).vertices.size(), 29u);
    EXPECT_EQ(vertex_denominator_lcm(enumerate_vertices(pca)), BigInt(24));
}

TEST(Agreement, AllRules) {
    const auto b = all_rules_agree_breakdown();
    EXPECT_EQ(b.given_condorcet, Rational(3437, 6480));
    EXPECT_EQ(b.cyclic_case, Rational(5, 10368));
    EXPECT_EQ(b.cyclic_contribution, Rational(5, 324));
    EXPECT_EQ(b.total, Rational(10631, 20736));
    EXPECT_EQ(Rational(3437, 6480) * Rational(15, 16) + Rational(5, 324), Rational(10631, 20736));
}

TEST(Participation, BordaRunoff) {
    EXPECT_EQ(participation_probability(B, Paradox::PPP), Rational(1, 72));
    EXPECT_EQ(participation_probability(B, Paradox::NPP), Rational(1, 48));
    EXPECT_EQ(participation_probability(B, Paradox::PAP), Rational(1, 96));
    EXPECT_EQ(participation_probability(B, Paradox::NAP), Rational(1, 72));
}

TEST(Participation, PluralityAndAntipluralityRunoff) {
    EXPECT_EQ(participation_probability(P, Paradox::PPP), Rational(0));
    EXPECT_EQ(participation_probability(P, Paradox::PAP), Rational(0));
    EXPECT_TRUE(within(participation_probability(P, Paradox::NPP), 0.07292, 5e-6));
    EXPECT_TRUE(within(participation_probability(P, Paradox::NAP), 0.04080, 5e-6));
    EXPECT_TRUE(within(participation_probability(A, Paradox::PPP), 0.03822, 5e-6));
    EXPECT_TRUE(within(participation_probability(A, Paradox::PAP), 0.04253, 5e-6));
    EXPECT_EQ(participation_probability(A, Paradox::NPP), Rational(0));
    EXPECT_EQ(participation_probability(A, Paradox::NAP), Rational(0));
    EXPECT_THROW(participation_event(ScoringRule(Rational(1, 3)), Paradox::PPP), DomainError);
}

TEST(Referendum, DistrictCounts) {
    EXPECT_EQ(referendum_probability(3), Rational(1, 8));
    EXPECT_EQ(referendum_probability(4), Rational(1, 48));
    EXPECT_EQ(referendum_probability(5), Rational(61, 384));
    EXPECT_EQ(referendum_probability(6), Rational(13, 320));
    EXPECT_EQ(referendum_probability(7), Rational(9409, 46080));
    EXPECT_THROW(referendum_probability(2), DomainError);
}

TEST(Referendum, CappedDistrictsVariant) {
    EXPECT_EQ(referendum_probability(5, true), Rational(55, 384));
    EXPECT_EQ(referendum_probability(3, true), referendum_probability(3));
}

TEST(RuleM, Approximations) {
    const auto m = rule_m_probabilities(rule_m_default_lambda());
    EXPECT_TRUE(within(m.efficiency, 0.92546, 1e-3));
    EXPECT_TRUE(within(m.joint_with_borda, 0.89183, 1e-3));
    EXPECT_TRUE(within(m.condorcet_loser, 0.00131, 2e-4));
}

TEST(Probability, FactorCheck) {
    EXPECT_EQ(iac_probability(standard_inequalities(), SymmetryFactor::none()), Rational(1));
    EXPECT_THROW(iac_probability(standard_inequalities(), SymmetryFactor::fixed_winner()), ConsistencyError);
    EXPECT_THROW(iac_probability(unit_cube(3), SymmetryFactor::none()), DimensionError);
    HPolytope empty = standard_inequalities();
    empty.add_ge({1, 1, 1, 1, 1}, 2);
    EXPECT_THROW(conditional_probability(condorcet_winner(), empty), DomainError);
}

// ---------------------------------------------------------------------------
// Event descriptions

TEST(EventSpec, RoundTrip) {
    for (const char* s : {"manipulable:borda", "condorcet-efficiency:borda", "condorcet-efficiency:borda:given=plurality",
                          "agreement:plurality,antiplurality:winner", "agreement:plurality,borda:ranking",
                          "participation:borda:PPP", "referendum:N=7", "referendum:N=5:capped", "condorcet-paradox",
                          "condorcet-winner", "all-rules-agree", "rule-winner:lambda=1/3", "condorcet-loser:antiplurality"})
        EXPECT_EQ(parse_event_spec(s).to_string(), s);
    EXPECT_EQ(parse_event_spec("condorcet-efficiency:lambda=1/2").to_string(), "condorcet-efficiency:borda");
    EXPECT_EQ(parse_event_spec("agreement:0,1").to_string(), "agreement:plurality,antiplurality:winner");
}

TEST(EventSpec, Defaults) {
    SpecDefaults d;
    d.lambda = Rational(1, 2);
    d.districts = 9;
    EXPECT_EQ(parse_event_spec("condorcet-efficiency", d).to_string(), "condorcet-efficiency:borda");
    EXPECT_EQ(parse_event_spec("referendum", d).districts, 9u);
    EXPECT_THROW(parse_event_spec("referendum"), ParseError);
    EXPECT_THROW(parse_event_spec("condorcet-loser"), ParseError);
}

TEST(EventSpec, Errors) {
    for (const char* s : {"", "bogus", "manipulable:borda:extra", "participation:borda:XYZ", "agreement:borda",
                          "agreement:borda,plurality:maybe", "rule-winner:lambda=3/2", "referendum:N=x",
                          "condorcet-efficiency:borda:plurality"})
        EXPECT_THROW(parse_event_spec(s), ParseError) << s;
}

TEST(EventSpec, Evaluate) {
    EXPECT_EQ(evaluate(parse_event_spec("manipulable:plurality")), Rational(7, 24));
    EXPECT_EQ(evaluate(parse_event_spec("condorcet-paradox")), Rational(1, 16));
    EXPECT_EQ(evaluate(parse_event_spec("referendum:N=5")), Rational(61, 384));
    EXPECT_EQ(evaluate(parse_event_spec("condorcet-efficiency:lambda=1/2")), Rational(41, 45));
    EXPECT_EQ(evaluate(parse_event_spec("agreement:plurality,antiplurality:winner")), Rational(113, 216));
    EXPECT_EQ(evaluate(parse_event_spec("participation:borda:PPP")), Rational(1, 72));
    EXPECT_EQ(evaluate(parse_event_spec("all-rules-agree")), Rational(10631, 20736));
    EXPECT_EQ(evaluate(parse_event_spec("condorcet-loser:plurality")), Rational(1, 36));
    EXPECT_THROW(evaluate(parse_event_spec("manipulable:antiplurality")), DomainError);
}

TEST(EventSpec, ConditionalOnSpecs) {
    EXPECT_EQ(conditional_probability(parse_event_spec("rule-winner:plurality"), parse_event_spec("condorcet-winner")),
              Rational(119, 135));
    EXPECT_THROW(conditional_probability(parse_event_spec("manipulable:plurality"), parse_event_spec("condorcet-winner")),
                 DomainError);
    EXPECT_THROW(compile(parse_event_spec("referendum:N=3")), DomainError);
}

// ---------------------------------------------------------------------------
// Tables

TEST(Tables, ParticipationBordaRow) {
    const auto t = make_table(4);
    ASSERT_EQ(t.rows.size(), 12u);
    EXPECT_EQ(t.rows[4].decimal(), "0.01389");
    EXPECT_EQ(t.rows[5].decimal(), "0.02083");
    EXPECT_EQ(t.rows[6].decimal(), "0.01042");
    EXPECT_EQ(t.rows[7].decimal(), "0.01389");
}

TEST(Tables, Referendum) {
    const auto t = make_table(5);
    std::vector<std::string> got;
    for (const auto& r : t.rows) got.push_back(r.decimal());
    EXPECT_EQ(got, (std::vector<std::string>{"0.12500", "0.02083", "0.15885", "0.04063", "0.20419", "0.26954"}));
}

TEST(Tables, CondorcetEfficiencyAndLoser) {
    const auto t1 = make_table(1);
    ASSERT_EQ(t1.rows.size(), 8u);
    EXPECT_EQ(t1.rows[0].value, Rational(119, 135));
    EXPECT_EQ(t1.rows[1].value, Rational(17, 27));
    EXPECT_EQ(t1.rows[2].value, Rational(41, 45));
    const auto t2 = make_table(2);
    EXPECT_EQ(t2.rows[0].decimal(), "0.02778");
    EXPECT_FALSE(t2.rows[1].exact);
    EXPECT_EQ(t2.rows[2].value, Rational(0));
    EXPECT_THROW(make_table(6), DomainError);
}

TEST(Tables, Agreement) {
    const auto t = make_table(3);
    std::vector<std::string> got;
    for (const auto& r : t.rows) got.push_back(r.decimal());
    EXPECT_EQ(got, (std::vector<std::string>{"0.68717", "0.56481", "0.52315", "0.29630", "0.82407", "0.56481",
                                             "0.51268"}));
}
