#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "cbi/modal.hpp"
#include "support.hpp"

using namespace cbi;

namespace {

Formula F(const std::string& s) { return parse_formula(s); }
ModalFormula M(const std::string& s) { return parse_modal(s); }

std::vector<test::NamedModel> transfer_models() {
    return {{"zmod(3,1)", z_mod(3, 1)}, {"powerset{1,2}", powerset_model({"1", "2"})}};
}

// ---------------------------------------------------------------- syntax

TEST(ModalSyntax, ParseRender) {
    EXPECT_EQ(render(M("-.P o Q o- R")), "-.P o Q o- R");
    EXPECT_EQ(render(M("P o (Q o R)")), "P o (Q o R)");
    EXPECT_EQ(M("E o P -> P").op(), MOp::Imp);
    EXPECT_EQ(vars(M("P o- INF & Q")), (std::set<std::string>{"P", "Q"}));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        ModalFormula a = embed_formula(test::random_formula(rng, 12, {"P", "Q"}));
        ASSERT_EQ(M(render(a)), a) << render(a);
    }
}

TEST(Embed, Examples) {
    EXPECT_EQ(embed_formula(F("coemp")), M("!INF"));
    EXPECT_EQ(embed_formula(F("emp")), M("E"));
    EXPECT_EQ(embed_formula(F("~P")), M("!-.P"));
    EXPECT_EQ(embed_formula(F("P |* Q")), M("!-.(!-.P o !-.Q)"));
    EXPECT_EQ(embed_formula(F("P -* Q")), M("!(P o- !Q)"));
    EXPECT_EQ(revembed_formula(embed_formula(F("P |* Q"))), F("!!~(!!~P * !!~Q)"));
}

TEST(Embed, RoundTripMatchesTable) {
    std::size_t n = 0;
    for (const Formula& f : test::formulas_up_to(6, {"P", "Q"})) {
        ASSERT_EQ(revembed_formula(embed_formula(f)), embed_round_trip_table(f)) << render(f);
        ++n;
    }
    EXPECT_GT(n, 190000u);
}

TEST(Embed, TableEntries) {
    EXPECT_EQ(embed_round_trip_table(F("P * Q -> !R")), F("P * Q -> !R"));
    EXPECT_EQ(embed_round_trip_table(F("P * Q -> ~R")), F("P * Q -> !!~R"));
    EXPECT_EQ(embed_round_trip_table(F("coemp")), F("!!coemp"));
    EXPECT_EQ(embed_round_trip_table(F("~P")), F("!!~P"));
    EXPECT_EQ(embed_round_trip_table(F("P -* Q")), F("!!(P -* !!Q)"));
}

// ---------------------------------------------------------------- transfer

TEST(Transfer, PointwiseUpToSix) {
    auto start = std::chrono::steady_clock::now();
    for (const auto& [name, m] : transfer_models()) {
        MLFrame fr = embed_model(m);
        auto envs = test::all_environments(m.size(), {"P", "Q"});
        for (const Formula& f : test::formulas_up_to(6, {"P", "Q"})) {
            ModalFormula a = embed_formula(f);
            for (const auto& env : envs)
                ASSERT_EQ(denote(m, env, f), mdenote(fr, env, a)) << name << " " << render(f);
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_LT(secs, 60.0);
}

TEST(Transfer, PointwiseRandomOnFixtures) {
    std::mt19937_64 rng(11);
    for (const auto& [name, m] : test::all_fixtures()) {
        MLFrame fr = embed_model(m);
        for (int i = 0; i < 200; ++i) {
            Formula f = test::random_formula(rng, 10, {"P", "Q"});
            Environment env{{"P", Bits(m.size(), rng())}, {"Q", Bits(m.size(), rng())}};
            for (Elem r = 0; r < m.size(); ++r)
                ASSERT_EQ(sat(m, env, r, f), msat(fr, env, r, embed_formula(f))) << name << " " << render(f);
        }
    }
}

TEST(Transfer, Truth) {
    std::mt19937_64 rng(12);
    for (const auto& [name, m] : test::small_fixtures()) {
        MLFrame fr = embed_model(m);
        for (int i = 0; i < 60; ++i) {
            Formula f = test::random_formula(rng, 8, {"P", "Q"});
            EXPECT_EQ(truth(m, f).verdict, modal_truth(fr, embed_formula(f)).verdict) << name << " " << render(f);
        }
        for (int id = 1; id <= kAxiomCount; ++id)
            EXPECT_EQ(modal_truth(fr, axiom(id)).verdict, Verdict::True) << name << " axiom " << id;
    }
}

// ---------------------------------------------------------------- frames

TEST(Frames, EmbeddedZmod2) {
    MLFrame fr = embed_model(z_mod(2, 1));
    Elem one = *fr.find("1"), zero = *fr.find("0");
    EXPECT_TRUE(msat(fr, {}, one, M("INF")));
    EXPECT_FALSE(msat(fr, {}, zero, M("INF")));
    EXPECT_TRUE(msat(fr, {}, zero, M("E")));
    // z in x o- y iff y = x + z
    for (Elem x = 0; x < 2; ++x)
        for (Elem y = 0; y < 2; ++y)
            for (Elem z = 0; z < 2; ++z) {
                bool in = std::find(fr.cowand().begin(), fr.cowand().end(), Triple{x, y, z}) != fr.cowand().end();
                EXPECT_EQ(in, y == (x + z) % 2);
            }
}

TEST(Frames, AxiomsOnEmbeddedFixtures) {
    for (const auto& [name, m] : test::all_fixtures()) {
        AxiomReport r = check_axioms(embed_model(m));
        EXPECT_EQ(r.passed(), kAxiomCount) << name << " fails " << r.first_failure().value_or(0);
        EXPECT_TRUE(r.unitary) << name;
        EXPECT_EQ(r.sampled, m.size() > 6) << name;
    }
}

MLFrame with_comp(const MLFrame& fr, std::vector<Triple> comp) {
    return MLFrame(fr.names(), std::move(comp), fr.cowand(), fr.unit_set(), fr.inv_table(), fr.infinity_set());
}

TEST(Frames, MissingCommutativePair) {
    MLFrame fr = embed_model(z_mod(3, 0));
    std::vector<Triple> comp;
    for (const Triple& t : fr.comp())
        if (t != Triple{1, 2, 0}) comp.push_back(t);
    AxiomReport r = check_axioms(with_comp(fr, comp));
    EXPECT_FALSE(r.axioms[2].holds);
    EXPECT_EQ(r.first_failure(), 3);
    ASSERT_TRUE(r.axioms[2].witness_env.has_value());
    EXPECT_TRUE(r.axioms[2].witness_point.has_value());
}

TEST(Frames, EmptyUnitIsNotUnitary) {
    MLFrame fr = embed_model(z_mod(2, 0));
    MLFrame bad(fr.names(), fr.comp(), fr.cowand(), {}, fr.inv_table(), fr.infinity_set());
    AxiomReport r = check_axioms(bad);
    EXPECT_FALSE(r.unitary);
    EXPECT_FALSE(r.axioms[1].holds);  // P -> E o P
    EXPECT_THROW(extract_cbi(bad), FrameError);
}

TEST(Frames, ChosenSubsetOfAxioms) {
    AxiomReport r = check_axioms(embed_model(z_mod(3, 1)), std::vector<int>{1, 8});
    EXPECT_EQ(r.passed(), kAxiomCount);
    EXPECT_THROW(axiom(0), std::out_of_range);
    EXPECT_THROW(axiom(12), std::out_of_range);
}

TEST(Frames, InvolutionFailureIsRejected) {
    MLFrame fr = embed_model(z_mod(3, 0));
    auto inv = fr.inv_table();
    inv[1] = {1, 2};
    MLFrame bad(fr.names(), fr.comp(), fr.cowand(), fr.unit_set(), inv, fr.infinity_set());
    AxiomReport r = check_axioms(bad);
    EXPECT_FALSE(r.axioms[7].holds);  // -.-.P -> P
    EXPECT_THROW(extract_cbi(bad), FrameError);
}

TEST(Frames, ExtractInvertsEmbed) {
    for (const auto& [name, m] : test::all_fixtures()) {
        ResourceModel back = extract_cbi(embed_model(m));
        EXPECT_TRUE(same_model(back, m)) << name;
        EXPECT_EQ(back.names(), m.names()) << name;
    }
}

TEST(Frames, DecomposeUnitary) {
    MLFrame single = embed_model(z_mod(3, 1));
    auto parts = decompose_unitary(single);
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].size(), single.size());
    EXPECT_TRUE(same_model(extract_cbi(parts[0]), z_mod(3, 1)));

    MLFrame u = frame_union(embed_model(z_mod(2, 0)), embed_model(bitvec(1)));
    EXPECT_EQ(u.size(), 4u);
    EXPECT_FALSE(u.unitary());
    parts = decompose_unitary(u);
    ASSERT_EQ(parts.size(), 2u);
    for (const auto& p : parts) {
        EXPECT_TRUE(p.unitary());
        EXPECT_TRUE(check_axioms(p).all());
    }
    bool z2 = false, b1 = false;
    for (const auto& p : parts) {
        ResourceModel m = extract_cbi(p);
        z2 = z2 || find_isomorphism(m, z_mod(2, 0)).has_value();
        b1 = b1 || find_isomorphism(m, bitvec(1)).has_value();
    }
    EXPECT_TRUE(z2);
    EXPECT_TRUE(b1);

    // validity on the union is validity on every component
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        ModalFormula a = embed_formula(test::random_formula(rng, 8, {"P", "Q"}));
        bool whole = modal_truth(u, a).verdict == Verdict::True;
        bool each = true;
        for (const auto& p : parts) each = each && modal_truth(p, a).verdict == Verdict::True;
        ASSERT_EQ(whole, each) << render(a);
    }
}

TEST(Frames, JsonRoundTrip) {
    for (const auto& [name, m] : test::all_fixtures()) {
        MLFrame fr = embed_model(m);
        EXPECT_EQ(frame_from_json(to_json(fr)), fr) << name;
    }
    MLFrame u = frame_union(embed_model(z_mod(2, 0)), embed_model(bitvec(1)));
    EXPECT_EQ(frame_from_json(to_json(u)), u);
    json rep = to_json(check_axioms(u), u);
    EXPECT_FALSE(rep.dump().empty());
}

// Diamonds are monotone: enlarging P never shrinks -.P, P o Q or P o- Q.
TEST(Frames, DiamondsAreMonotone) {
    std::mt19937_64 rng(8);
    for (const auto& [name, m] : test::small_fixtures()) {
        MLFrame fr = embed_model(m);
        const std::size_t n = m.size();
        for (int i = 0; i < 100; ++i) {
            Bits p(n, rng()), q(n, rng());
            Bits p2 = p | Bits(n, rng()), q2 = q | Bits(n, rng());
            Environment lo{{"P", p}, {"Q", q}}, hi{{"P", p2}, {"Q", q2}};
            for (const char* s : {"-.P", "P o Q", "P o- Q", "Q o- P"}) {
                Bits a = mdenote(fr, lo, M(s)), b = mdenote(fr, hi, M(s));
                ASSERT_TRUE(a.is_subset_of(b)) << name << " " << s;
            }
        }
    }
}

// ---------------------------------------------------------------- Sahlqvist

TEST(Sahlqvist, AxiomsHaveTheShape) {
    for (int id = 1; id <= kAxiomCount; ++id) EXPECT_TRUE(is_very_simple_sahlqvist(axiom(id))) << id;
}

TEST(Sahlqvist, NegativeControls) {
    EXPECT_FALSE(is_very_simple_sahlqvist(M("!P -> P")));
    EXPECT_FALSE(is_very_simple_sahlqvist(M("P -> !P")));
    EXPECT_TRUE(is_very_simple_sahlqvist(M("P o Q -> !!P")));
    EXPECT_TRUE(is_very_simple_sahlqvist(M("P -> P")));
    EXPECT_FALSE(is_very_simple_sahlqvist(M("P")));
}

}  // namespace
