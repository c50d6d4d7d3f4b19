#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "cbi/builders.hpp"
#include "cbi/model_json.hpp"
#include "cbi/search_models.hpp"
#include "cbi/semantics.hpp"
#include "support.hpp"

using namespace cbi;
using test::NamedModel;

namespace {

const Formula P = Var("P"), Q = Var("Q");

Elem el(const BbiModel& m, const std::string& n) { return m.index(n); }

bool has_failure(const ValidationReport& r, const std::string& axiom) {
    for (const auto& f : r.failures)
        if (f.axiom == axiom) return true;
    return false;
}

// ---------------------------------------------------------------- validation

TEST(Validate, NonconservativityModelIsBbi) {
    BbiModel m = test::nonconservative_model();
    EXPECT_EQ(m.size(), 3u);
    EXPECT_TRUE(validate_bbi(m).ok);
    EXPECT_TRUE(validate_bbi(nonconservativity_bbi_model()).ok);
}

TEST(Validate, SinglePoint) {
    BbiModel m({"e"}, 0, {{0, 0, 0}});
    EXPECT_TRUE(validate_bbi(m).ok);
}

TEST(Validate, UnitLawFailureHasWitness) {
    BbiModel m({"e", "a"}, 0, {{0, 0, 0}, {1, 1, 1}});
    ValidationReport r = validate_bbi(m);
    ASSERT_FALSE(r.ok);
    bool found = false;
    for (const auto& f : r.failures)
        if (f.axiom == "unit" && f.witness == std::vector<std::string>{"a", "e"}) found = true;
    EXPECT_TRUE(found);
}

TEST(Validate, ThreePointRelationalModelIsCbi) {
    ResourceModel m = test::relational_model();
    EXPECT_TRUE(validate_cbi(m).ok);
    EXPECT_TRUE(same_model(m, non_functional_cbi_model()) || find_isomorphism(m, non_functional_cbi_model()));
}

TEST(Validate, BbiModelAdmitsNoInvolution) {
    // Every choice of infinity and involution on the three-point BBI-model
    // leaves some point without a dual.
    BbiModel b = test::nonconservative_model();
    for (Elem inf = 0; inf < 3; ++inf)
        for (Elem i0 = 0; i0 < 3; ++i0)
            for (Elem i1 = 0; i1 < 3; ++i1)
                for (Elem i2 = 0; i2 < 3; ++i2) {
                    ResourceModel m(b.names(), b.unit(), inf, {i0, i1, i2}, b.triples());
                    ValidationReport r = validate_cbi(m);
                    ASSERT_FALSE(r.ok);
                    EXPECT_TRUE(has_failure(r, "dual"));
                }
}

TEST(Validate, ZModFourTwoMatchesArithmetic) {
    ResourceModel m = z_mod(4, 2);
    EXPECT_TRUE(validate_cbi(m).ok);
    for (Elem x = 0; x < 4; ++x)
        for (Elem y = 0; y < 4; ++y)
            for (Elem z = 0; z < 4; ++z) EXPECT_EQ(m.contains(x, y, z), z == (x + y) % 4);
}

TEST(Validate, MalformedInputIsDistinct) {
    EXPECT_THROW(BbiModel({"e"}, 0, {{0, 0, 5}}), MalformedModel);
    EXPECT_THROW(BbiModel({}, 0, {}), MalformedModel);
    EXPECT_THROW(ResourceModel({"e"}, 0, 0, {3}, {{0, 0, 0}}), MalformedModel);
    json j = read_json_file(test::fixture_path("models/relational3.json"));
    j["comp"].push_back({"a", "zz", "e"});
    EXPECT_THROW(model_from_json(j), MalformedModel);
}

TEST(Validate, CommutativityFailure) {
    BbiModel m({"e", "a", "b"}, 0, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {0, 2, 2}, {2, 0, 2}, {1, 2, 2}});
    EXPECT_TRUE(has_failure(validate_bbi(m), "commutativity"));
}

// Direct check of the derived laws: rotation of triples, −−x = x, −e = ∞.
void expect_derived_laws(const ResourceModel& m, const std::string& name) {
    const Elem n = Elem(m.size());
    EXPECT_EQ(m.inv(m.unit()), m.infinity()) << name;
    for (Elem x = 0; x < n; ++x) EXPECT_EQ(m.inv(m.inv(x)), x) << name;
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z) {
                bool a = m.contains(x, y, z);
                ASSERT_EQ(a, m.contains(y, m.inv(z), m.inv(x))) << name;
                ASSERT_EQ(a, m.contains(x, m.inv(z), m.inv(y))) << name;
            }
}

TEST(Validate, FixturesAndDerivedLaws) {
    for (const auto& [name, m] : test::all_fixtures()) {
        ValidationReport r = validate_cbi(m);
        EXPECT_TRUE(r.ok) << name << ": " << (r.ok ? "" : r.failures.front().axiom);
        expect_derived_laws(m, name);
    }
}

// ---------------------------------------------------------------- satisfaction

TEST(Sat, PartialFunctionalityWitness) {
    ResourceModel m = test::relational_model();
    Elem a = el(m, "a");
    EXPECT_TRUE(sat(m, {}, a, macro_K()));
    EXPECT_FALSE(sat(m, {}, a, macro_L()));
    EXPECT_FALSE(sat(m, {}, a, Imp(macro_K(), macro_L())));
}

TEST(Sat, DefinitionalClauses) {
    for (const auto& [name, m] : test::small_fixtures()) {
        for (Elem r = 0; r < m.size(); ++r) EXPECT_TRUE(sat(m, {}, r, Formula::top()));
        EXPECT_TRUE(sat(m, {}, m.unit(), Formula::mtop())) << name;
        EXPECT_FALSE(sat(m, {}, m.infinity(), Formula::mbot())) << name;
    }
}

TEST(Sat, InverseInZMod) {
    ResourceModel m = z_mod(4, 2);
    Environment env{{"P", Bits(4, 0b0011)}};
    EXPECT_EQ(m.inv(1), 1u);
    EXPECT_FALSE(sat(m, env, 1, MNot(P)));
    EXPECT_EQ(m.inv(3), 3u);
}

TEST(Sat, UnknownElement) { EXPECT_THROW(sat(z_mod(2, 0), {}, 7, P), std::out_of_range); }

TEST(Sat, AgreesWithOracleAndDenotation) {
    std::mt19937_64 rng(3);
    for (const auto& [name, m] : test::small_fixtures()) {
        auto envs = test::all_environments(m.size(), {"P", "Q"});
        for (int i = 0; i < 150; ++i) {
            Formula f = test::random_formula(rng, 9, {"P", "Q"});
            const Environment& env = envs[rng() % envs.size()];
            Bits d = denote(m, env, f);
            for (Elem r = 0; r < m.size(); ++r) {
                bool o = test::oracle_sat(m, env, r, f);
                ASSERT_EQ(sat(m, env, r, f), o) << name << " " << render(f) << " at " << m.name(r);
                ASSERT_EQ(d.test(r), o);
            }
        }
    }
}

TEST(Sat, DependsOnlyOnOccurringVariables) {
    std::mt19937_64 rng(5);
    for (const auto& [name, m] : test::small_fixtures()) {
        for (int i = 0; i < 100; ++i) {
            Formula f = test::random_formula(rng, 8, {"P", "Q"});
            Environment a{{"P", Bits(m.size(), rng())}, {"Q", Bits(m.size(), rng())}};
            Environment b = a;
            b["R"] = Bits(m.size(), rng());
            if (!vars(f).count("Q")) b["Q"] = Bits(m.size(), rng());
            ASSERT_EQ(denote(m, a, f), denote(m, b, f)) << name << " " << render(f);
        }
    }
}

TEST(Sat, BbiModelsRejectClassicalMultiplicatives) {
    BbiModel b = test::nonconservative_model();
    EXPECT_THROW(sat(b, {}, 0, MNot(P)), std::invalid_argument);
    EXPECT_THROW(sat(b, {}, 0, Formula::mbot()), std::invalid_argument);
    EXPECT_NO_THROW(sat(b, {}, 0, Wand(P, Formula::mtop())));
}

// ---------------------------------------------------------------- truth

TEST(Truth, NonconservativityWitness) {
    BbiModel b = test::nonconservative_model();
    Formula f = Imp(And(macro_I(), macro_J()), P);
    TruthResult t = truth(b, f);
    ASSERT_EQ(t.verdict, Verdict::False);
    ASSERT_TRUE(t.point && t.env);
    EXPECT_FALSE(sat(b, *t.env, *t.point, f));
    // the published witness
    Environment env = env_from_json(b, read_json_file(test::fixture_path("models/nonconservative_env.json")));
    EXPECT_EQ(render_set(b, env.at("P")), "{a}");
    EXPECT_FALSE(sat(b, env, el(b, "b"), f));
}

TEST(Truth, EquivalencesOnFixtures) {
    for (const auto& [name, m] : test::all_fixtures()) {
        if (m.size() > 16) continue;
        EXPECT_EQ(truth(m, Iff(MNot(MNot(P)), P)).verdict, Verdict::True) << name;
        EXPECT_EQ(truth(m, Formula::top()).verdict, Verdict::True) << name;
    }
}

TEST(Truth, CounterexampleIsGenuine) {
    ResourceModel m = z_mod(3, 1);
    TruthResult t = truth(m, Wand(P, P));
    ASSERT_EQ(t.verdict, Verdict::False);
    EXPECT_FALSE(test::oracle_sat(m, *t.env, *t.point, Wand(P, P)));
}

TEST(Truth, BudgetGivesIndeterminate) {
    TruthResult t = truth(bitvec(3), Imp(And(P, And(Q, Var("R"))), P), TruthBudget{10});
    EXPECT_EQ(t.verdict, Verdict::Indeterminate);
    EXPECT_FALSE(t.env.has_value());
}

TEST(Truth, EnvironmentCount) {
    TruthResult t = truth(z_mod(3, 0), Imp(And(P, Q), P));
    EXPECT_EQ(t.verdict, Verdict::True);
    EXPECT_EQ(t.assignments, 64u);
}

// The ten equivalences, F and G ranging over a small set, by the oracle.
TEST(Truth, EquivalenceSchemataPointwise) {
    std::vector<Formula> args{P, Q, And(P, Q), Star(P, Q)};
    for (const auto& [name, m] : test::small_fixtures()) {
        auto envs = test::all_environments(m.size(), {"P", "Q"});
        for (const auto& f : args)
            for (const auto& g : args)
                for (const auto& s : test::equivalence_schemata(f, g))
                    for (const auto& env : envs)
                        for (Elem r = 0; r < m.size(); ++r)
                            ASSERT_TRUE(test::oracle_sat(m, env, r, s)) << name << " " << render(s);
    }
}

TEST(Truth, ContradictionIsWeak) {
    std::mt19937_64 rng(9);
    for (const auto& [name, m] : test::small_fixtures()) {
        auto envs = test::all_environments(m.size(), {"P", "Q"});
        for (int i = 0; i < 40; ++i) {
            Formula f = test::random_formula(rng, 5, {"P", "Q"});
            Formula contra = Star(f, MNot(f));
            for (const auto& env : envs) {
                Bits c = denote(m, env, contra);
                Bits mb = denote(m, env, Formula::mbot());
                ASSERT_TRUE(c.is_subset_of(mb)) << name << " " << render(f);
            }
            EXPECT_EQ(truth(m, Formula::mbot()).verdict == Verdict::True,
                      truth(m, contra).verdict == Verdict::True);
        }
    }
}

TEST(Truth, PartialFunctionalModelsValidateKL) {
    Formula kl = Imp(macro_K(), macro_L());
    int checked = 0;
    for (const auto& [name, m] : test::all_fixtures())
        if (is_partial_functional(m)) {
            EXPECT_EQ(truth(m, kl).verdict, Verdict::True) << name;
            ++checked;
        }
    for (const auto& m : enumerate_cbi_models(3, false))
        if (is_partial_functional(m)) {
            EXPECT_EQ(truth(m, kl).verdict, Verdict::True);
            ++checked;
        }
    EXPECT_GT(checked, 10);
}

// ---------------------------------------------------------------- classes

TEST(Classes, PartialFunctionAndEffectAlgebra) {
    ResourceModel p29 = test::relational_model();
    EXPECT_FALSE(is_partial_functional(p29));
    EXPECT_EQ(p29.compose(el(p29, "a"), el(p29, "a")).size(), 2u);
    EXPECT_TRUE(is_effect_algebra(powerset_model({"1", "2"})));
    EXPECT_TRUE(is_effect_algebra(action_comm({"a"})));
    EXPECT_FALSE(is_effect_algebra(z_mod(4, 2)));
    EXPECT_TRUE(is_partial_functional(z_mod(4, 2)));
}

// ---------------------------------------------------------------- builders

std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

TEST(Builders, AbelianGroups) {
    ResourceModel z2 = from_abelian_group({"0", "1"}, cyclic_table(2), 0, {0, 1});
    EXPECT_EQ(z2.size(), 2u);
    EXPECT_EQ(z2.inv(0), 0u);
    EXPECT_EQ(z2.inv(1), 1u);
    EXPECT_EQ(z2.infinity(), 0u);

    ResourceModel z4 = from_abelian_group({"0", "1", "2", "3"}, cyclic_table(4), 0, {0, 3, 2, 1});
    ResourceModel ref = z_mod(4, 0);
    for (Elem x = 0; x < 4; ++x) {
        EXPECT_EQ(z4.inv(x), ref.inv(x));
        for (Elem y = 0; y < 4; ++y) EXPECT_EQ(z4.compose(x, y), ref.compose(x, y));
    }

    // Klein four-group as bit pairs under xor
    std::vector<std::vector<std::size_t>> klein(4, std::vector<std::size_t>(4));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) klein[a][b] = a ^ b;
    ResourceModel k4 = from_abelian_group({"e", "a", "b", "c"}, klein, 0, {0, 1, 2, 3});
    for (Elem x = 0; x < 4; ++x) EXPECT_EQ(k4.inv(x), x);
    EXPECT_TRUE(validate_cbi(k4).ok);
    EXPECT_FALSE(is_effect_algebra(k4));
    EXPECT_FALSE(is_effect_algebra(z4));
}

TEST(Builders, AbelianGroupRejectsNonGroups) {
    auto t = cyclic_table(3);
    t[1][2] = 1;
    EXPECT_THROW(from_abelian_group({"0", "1", "2"}, t, 0, {0, 2, 1}), ConstructionError);
    EXPECT_THROW(from_abelian_group({"0", "1"}, cyclic_table(2), 0, {0, 0}), ConstructionError);
}

TEST(Builders, ZMod) {
    EXPECT_EQ(z_mod(1, 0).size(), 1u);
    EXPECT_EQ(z_mod(4, 2).inv(3), 3u);
    EXPECT_THROW(z_mod(3, 3), ConstructionError);
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned m = 0; m < n; ++m) {
            ResourceModel z = z_mod(n, m);
            EXPECT_TRUE(validate_cbi(z).ok) << n << "," << m;
            for (Elem k = 0; k < n; ++k) EXPECT_EQ(z.inv(k), (m + n - k) % n);
            EXPECT_EQ(z.infinity(), m);
        }
}

TEST(Builders, Bitvec) {
    ResourceModel b = bitvec(2);
    EXPECT_EQ(b.inv(el(b, "01")), el(b, "10"));
    EXPECT_EQ(b.compose(el(b, "01"), el(b, "10")), std::vector<Elem>{b.infinity()});
    EXPECT_EQ(b.name(b.infinity()), "11");
    EXPECT_TRUE(find_isomorphism(bitvec(1), z_mod(2, 1)).has_value());
    EXPECT_TRUE(validate_cbi(bitvec(3)).ok);
}

TEST(Builders, Powerset) {
    ResourceModel one = powerset_model({"1"});
    EXPECT_EQ(one.size(), 2u);
    EXPECT_TRUE(is_effect_algebra(one));
    ResourceModel two = powerset_model({"1", "2"});
    EXPECT_EQ(two.compose(el(two, "{1}"), el(two, "{2}")), std::vector<Elem>{el(two, "{1,2}")});
    EXPECT_TRUE(two.compose(el(two, "{1}"), el(two, "{1}")).empty());
    for (int n = 0; n <= 4; ++n) {
        std::vector<std::string> u;
        for (int i = 1; i <= n; ++i) u.push_back(std::to_string(i));
        EXPECT_TRUE(validate_cbi(powerset_model(u)).ok) << n;
    }
}

TEST(Builders, ActionCommunication) {
    ResourceModel m = action_comm({"a"});
    EXPECT_EQ(m.size(), 4u);
    EXPECT_EQ(m.compose(el(m, "a"), el(m, "~a")), std::vector<Elem>{el(m, "tau")});
    EXPECT_TRUE(m.compose(el(m, "tau"), el(m, "a")).empty());
    EXPECT_TRUE(is_effect_algebra(m));
    EXPECT_TRUE(validate_cbi(action_comm({"a", "b"})).ok);
    EXPECT_TRUE(validate_cbi(action_comm({"a", "b", "c"})).ok);
    EXPECT_THROW(action_comm({"tau"}), ConstructionError);
}

TEST(Builders, GeneralisedHeap) {
    ResourceModel h = generalized_heap({"4"}, {"0", "1"});
    EXPECT_EQ(h.size(), 4u);
    EXPECT_EQ(h.name(h.infinity()), "[4:{0,1}]");
    EXPECT_TRUE(validate_cbi(generalized_heap({"4"}, {"0", "1", "2"})).ok);
    ResourceModel h2 = generalized_heap({"1", "2"}, {"0", "1"});
    ResourceModel p = product_model({powerset_model({"0", "1"}), powerset_model({"0", "1"})});
    EXPECT_TRUE(find_isomorphism(h2, p).has_value());
    EXPECT_THROW(generalized_heap({"1", "2", "3"}, {"0", "1", "2", "3", "4"}, 1024), ConstructionError);
}

TEST(Builders, DenyGuarantee) {
    ResourceModel dg2 = fraction_dg(2);
    EXPECT_EQ(dg2.size(), 4u);
    EXPECT_EQ(dg2.compose(el(dg2, "d1/2"), el(dg2, "d1/2")), std::vector<Elem>{el(dg2, "1")});
    ResourceModel dg4 = fraction_dg(4);
    for (unsigned i = 1; i < 4; ++i) {
        std::string a = "d" + std::to_string(i) + "/4", b = "d" + std::to_string(4 - i) + "/4";
        EXPECT_EQ(dg4.inv(el(dg4, a)), el(dg4, b));
    }
    EXPECT_TRUE(find_isomorphism(dg4, test::fraction_table(4)).has_value());
    ResourceModel built = deny_guarantee({"x", "y"}, 4);
    EXPECT_EQ(built.size(), 64u);
    EXPECT_TRUE(validate_cbi(built).ok);
    EXPECT_TRUE(find_isomorphism(built, test::square(test::fraction_table(4))).has_value());
    EXPECT_THROW(deny_guarantee({"x"}, 1), ConstructionError);
}

TEST(Builders, DisjointUnion) {
    ResourceModel a = action_comm({"a"}), b = action_comm({"b"});
    ResourceModel u = disjoint_union(a, b);
    EXPECT_TRUE(validate_cbi(u).ok);
    EXPECT_EQ(u.size(), a.size() + b.size() - 2);
    EXPECT_TRUE(find_isomorphism(u, action_comm({"a", "b"})).has_value());

    ResourceModel fr = disjoint_union(deny_fragment(3, "d"), deny_fragment(3, "g"));
    EXPECT_TRUE(find_isomorphism(fr, test::fraction_table(3)).has_value());

    for (const auto& other : {z_mod(2, 0), action_comm({"c"}), z_mod(3, 1)}) {
        EXPECT_THROW(disjoint_union(z_mod(3, 1), other), ConstructionError);
        EXPECT_THROW(disjoint_union(other, z_mod(3, 1)), ConstructionError);
    }
    try {
        disjoint_union(action_comm({"c"}), z_mod(3, 1));
    } catch (const ConstructionError& e) {
        EXPECT_NE(std::string(e.what()).find("second model's infinity is extensible"), std::string::npos);
    }
}

TEST(Builders, DisjointUnionOfGroupsSharesOnlyTheUnit) {
    ResourceModel u = disjoint_union(z_mod(1, 0), z_mod(2, 0));
    EXPECT_EQ(u.size(), 2u);
    EXPECT_TRUE(validate_cbi(u).ok);
    // two nontrivial groups: associativity breaks across the components
    EXPECT_THROW(disjoint_union(z_mod(2, 0), z_mod(2, 0)), ConstructionError);
}

TEST(Builders, Product) {
    EXPECT_TRUE(find_isomorphism(product_model({z_mod(3, 1)}), z_mod(3, 1)).has_value());
    EXPECT_TRUE(find_isomorphism(product_model({bitvec(1), bitvec(1)}), bitvec(2)).has_value());
    ResourceModel p = product_model({z_mod(2, 0), powerset_model({"1"})});
    EXPECT_TRUE(validate_cbi(p).ok);
    EXPECT_EQ(p.size(), 4u);
    ResourceModel q = product_model({z_mod(3, 1), action_comm({"a"}), bitvec(1)});
    EXPECT_EQ(q.size(), 3u * 4u * 2u);
    EXPECT_TRUE(validate_cbi(q).ok);
    EXPECT_THROW(product_model({}), ConstructionError);
    EXPECT_THROW(product_model({bitvec(4), bitvec(4)}, 100), ConstructionError);
}

TEST(Builders, BbiExtension) {
    BbiModel point({"e"}, 0, {{0, 0, 0}});
    ResourceModel x = bbi_extension(point);
    EXPECT_EQ(x.size(), 2u);
    // the generating rules only add (e, ~e, ~e): ~e o ~e stays empty, so the
    // result is the two-point effect algebra rather than the group Z_2
    EXPECT_TRUE(x.compose(1, 1).empty());
    EXPECT_TRUE(find_isomorphism(x, powerset_model({"1"})).has_value());
    EXPECT_FALSE(find_isomorphism(x, z_mod(2, 1)).has_value());

    ResourceModel ext = bbi_extension(test::nonconservative_model());
    EXPECT_EQ(ext.size(), 6u);
    EXPECT_TRUE(validate_cbi(ext).ok);
    EXPECT_EQ(truth(ext, Imp(And(macro_I(), macro_J()), P)).verdict, Verdict::True);

    // extension of a group model's BBI reduct
    ResourceModel z = z_mod(3, 0);
    EXPECT_TRUE(validate_cbi(bbi_extension(BbiModel(z.names(), z.unit(), z.triples()))).ok);
    EXPECT_THROW(bbi_extension(BbiModel({"e", "a"}, 0, {{0, 0, 0}, {1, 1, 1}})), ConstructionError);
}

// ---------------------------------------------------------------- enumeration

TEST(Enumeration, TrivialSize) {
    auto ms = enumerate_cbi_models(1, false);
    ASSERT_EQ(ms.size(), 1u);
    EXPECT_TRUE(find_isomorphism(ms[0], z_mod(1, 0)).has_value());
}

TEST(Enumeration, ExhaustiveStreamsAreValidAndDistinct) {
    auto t0 = std::chrono::steady_clock::now();
    auto all = enumerate_cbi_models(3, false);
    auto iso = enumerate_cbi_models(3, true);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_LT(secs, 10.0);
    EXPECT_GE(all.size(), iso.size());
    for (const auto& m : all) ASSERT_TRUE(validate_cbi(m).ok);
    for (std::size_t i = 0; i < iso.size(); ++i)
        for (std::size_t j = i + 1; j < iso.size(); ++j)
            if (iso[i].size() == iso[j].size()) ASSERT_FALSE(find_isomorphism(iso[i], iso[j]).has_value());
    // every model in the full stream has a representative
    for (const auto& m : all) {
        bool rep = false;
        for (const auto& r : iso)
            if (r.size() == m.size() && find_isomorphism(m, r)) rep = true;
        ASSERT_TRUE(rep);
    }
    // known members
    for (const auto& known : {z_mod(2, 0), z_mod(2, 1), z_mod(3, 0), z_mod(3, 1), action_comm({"a"}),
                              test::relational_model()}) {
        if (known.size() > 3) continue;
        bool found = false;
        for (const auto& r : iso)
            if (r.size() == known.size() && find_isomorphism(known, r)) found = true;
        EXPECT_TRUE(found) << known.label();
    }
}

TEST(Enumeration, EveryModelSatisfiesTheEquivalences) {
    std::vector<Formula> args{P, Q, And(P, Q)};
    for (const auto& m : enumerate_cbi_models(3, true)) {
        expect_derived_laws(m, m.label());
        for (const auto& f : args)
            for (const auto& g : args)
                for (const auto& s : test::equivalence_schemata(f, g))
                    ASSERT_EQ(truth(m, s).verdict, Verdict::True) << m.label() << " " << render(s);
    }
}

// ---------------------------------------------------------------- countermodels

TEST(Countermodel, Emp) {
    CountermodelResult r = countermodel_search(Formula::mtop());
    ASSERT_TRUE(r.found);
    EXPECT_TRUE(validate_cbi(r.model).ok);
    EXPECT_FALSE(test::oracle_sat(r.model, r.env, r.point, Formula::mtop()));
    EXPECT_NE(r.point, r.model.unit());
}

TEST(Countermodel, KLFindsTheThreePointModel) {
    CountermodelResult r = countermodel_search(Imp(macro_K(), macro_L()));
    ASSERT_TRUE(r.found);
    EXPECT_FALSE(test::oracle_sat(r.model, r.env, r.point, Imp(macro_K(), macro_L())));
    EXPECT_TRUE(find_isomorphism(r.model, test::relational_model()).has_value());
}

TEST(Countermodel, ValidFormulaExhausts) {
    CountermodelResult r = countermodel_search(Iff(MNot(MNot(P)), P));
    EXPECT_FALSE(r.found);
    EXPECT_GT(r.models_checked, 0u);
}

TEST(Countermodel, FamilyRestriction) {
    CountermodelBudget b;
    b.families = {"zmod"};
    CountermodelResult r = countermodel_search(Formula::mtop(), b);
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.family, "zmod");
    auto fams = countermodel_families();
    EXPECT_NE(std::find(fams.begin(), fams.end(), "enumerated"), fams.end());
}

// ---------------------------------------------------------------- json

TEST(ModelJson, RoundTripAndClosure) {
    for (const auto& [name, m] : test::small_fixtures()) {
        ResourceModel back = model_from_json(to_json(m));
        EXPECT_TRUE(same_model(m, back)) << name;
    }
    json j = read_json_file(test::fixture_path("models/relational3.json"));
    j["comp_closed"] = true;
    ResourceModel open = model_from_json(j);
    EXPECT_FALSE(validate_cbi(open).ok);  // only one orientation listed
}

TEST(ModelJson, Environments) {
    ResourceModel m = test::relational_model();
    Environment env = env_from_json(m, json{{"P", {"a", "inf"}}});
    EXPECT_EQ(render_set(m, env.at("P")), "{a, inf}");
    EXPECT_EQ(env_from_json(m, to_json(m, env)), env);
    EXPECT_THROW(env_from_json(m, json{{"P", {"zz"}}}), MalformedModel);
}

}  // namespace
