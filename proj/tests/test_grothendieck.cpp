#include "support.hpp"

#include <ribbon_schur/grothendieck.hpp>
#include <ribbon_schur/tableaux.hpp>

#include <gtest/gtest.h>

using namespace ribbon_schur;

namespace {

Polynomial X(int i) { return Polynomial(x(i)); }
Polynomial A(int i) { return Polynomial(alpha(i)); }
Polynomial B(int i) { return Polynomial(beta(i)); }

TEST(Specialize, SingleVariables) {
    EXPECT_EQ(g_image(y(3), {2}), B(1));
    EXPECT_EQ(g_image(z(0), {2}), B(1));
    EXPECT_EQ(g_image(y(0), {5}), -A(1));
    EXPECT_EQ(g_image(y(2), {2}), X(2));
    EXPECT_EQ(g_image(z(2), {2}), Polynomial(0));
    EXPECT_EQ(g_image(z(4), {2}), -A(2));
    EXPECT_THROW(g_specialize(Polynomial(x(1)), {2}), std::invalid_argument);
}

TEST(Direct, SmallShapes) {
    EXPECT_EQ(g_direct(RShape::usual({1}), 2), X(1) + X(2));
    EXPECT_EQ(g_direct(RShape::usual({1, 1}), 2), X(1) * X(2) + B(1) * (X(1) + X(2)));
    EXPECT_EQ(g_direct(RShape::usual({2}), 2), X(1) * X(1) + X(1) * X(2) + X(2) * X(2) + A(1) * (X(1) + X(2)));
    EXPECT_EQ(g_direct(RShape::usual({}), 2), Polynomial(1));
}

TEST(Direct, TableauxAndSchurLimit) {
    for (const auto& s : testsupport::connected_corpus(3, 3, 6)) {
        if (!s.is_usual()) continue;
        for (int m = 1; m <= 3; ++m) {
            Polynomial g = g_direct(s, m);
            EXPECT_EQ(g_tableau_weight_sum(s, canonical_g_flags(s, m), m), g) << s.to_string() << " m=" << m;
            Polynomial limit = substitute(g, [](Variable v) {
                return v.alphabet == Alphabet::X ? Polynomial(v) : Polynomial(0);
            });
            EXPECT_EQ(limit, testsupport::schur_by_ssyt(s, m)) << s.to_string() << " m=" << m;
        }
    }
}

TEST(Enumerator, ClosedFormEqualsSubstitution) {
    std::mt19937 rng(60);
    auto corpus = testsupport::connected_corpus(4, 4, 6);
    for (std::size_t k = 0; k < corpus.size(); k += 4) {
        FlagPair f = testsupport::random_column_flags(corpus[k], rng);
        for (int m = 0; m <= 3; ++m)
            EXPECT_EQ(g_enumerator(corpus[k], f, {m}), g_specialize(flagged_schur(corpus[k], f), {m}))
                << corpus[k].to_string() << " " << format_flags(f) << " m=" << m;
    }
}

TEST(Enumerator, CanonicalFlagsGiveDirect) {
    RShape running = RShape::usual({4, 4, 4, 2}, {2, 1});
    EXPECT_EQ(g_enumerator(running, canonical_g_flags(running, 3), {3}), g_direct(running, 3));
    EXPECT_EQ(g_enumerator(RShape::usual({1}), canonical_g_flags(RShape::usual({1}), 2), {2}), X(1) + X(2));
}

TEST(Routes, AllEqualDirect) {
    std::mt19937_64 prng(61);
    auto pick = [&](const RShape& b) { return random_pipe(b, prng); };
    for (const auto& s : testsupport::connected_corpus(3, 3, 6)) {
        if (!s.is_usual()) continue;
        for (int m = 1; m <= 2; ++m) {
            Polynomial g = g_direct(s, m);
            EXPECT_EQ(g_formula(s, m, GRoute::HAMEL_GOULDEN, pick), g) << s.to_string();
            EXPECT_EQ(g_formula(s, m, GRoute::JACOBI_TRUDI), g) << s.to_string();
            EXPECT_EQ(g_formula(s, m, GRoute::DUAL_JACOBI_TRUDI), g) << s.to_string();
            EXPECT_EQ(known_jacobi_trudi(s, m), g) << s.to_string();
            if (giambelli_obstruction(s).empty()) EXPECT_EQ(g_formula(s, m, GRoute::GIAMBELLI), g) << s.to_string();
        }
    }
}

TEST(Routes, RunningExampleDecomposition) {
    RShape running = RShape::usual({4, 4, 4, 2}, {2, 1});
    const PipeVector pi = {{0, 0}, {0, 1}, {1, 1}, {1, 0}, {0, 1}, {1, 1}, {1, 1}};
    auto pick = [&](const RShape&) { return pi; };
    EXPECT_EQ(g_formula(running, 3, GRoute::HAMEL_GOULDEN, pick), g_direct(running, 3));
}

TEST(Routes, KnownJacobiTrudiIsRowSchur) {
    for (const auto& s : testsupport::connected_corpus(3, 3, 5)) {
        if (!s.is_usual()) continue;
        for (int m = 1; m <= 3; ++m) {
            FlagPair f = canonical_g_row_flags(s, m);
            ASSERT_TRUE(validate(s, f));
            EXPECT_EQ(g_specialize(flagged_schur(s, f), {m}), known_jacobi_trudi(s, m)) << s.to_string();
        }
    }
}

TEST(InducedFlags, ClosedFormsMatchGeneric) {
    std::mt19937_64 prng(62);
    for (const auto& s : testsupport::connected_corpus()) {
        if (!s.is_usual() || !s.is_normalized()) continue;
        for (int m = 1; m <= 3; ++m) {
            OuterDecomposition d = pipe_to_decomposition(s, random_pipe(s, prng));
            FlagPair f = canonical_g_flags(s, m), fs = canonical_g_flags(s, m, FlagKind::STRICT);
            ASSERT_TRUE(validate(s, fs));
            for (int i = 1; i <= d.size(); ++i) {
                for (int j = 1; j <= d.size(); ++j) {
                    EXPECT_EQ(g_induced_flags(d, m, i, j), induced_flags(d, f, i, j)) << s.to_string();
                    EXPECT_EQ(g_induced_flags(d, m, i, j, true), induced_flags(d, fs, i, j)) << s.to_string();
                }
            }
        }
    }
}

TEST(LascouxNaruse, Binomials) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(-1, 0), 1);
    EXPECT_EQ(binomial(0, 1), 0);
    EXPECT_EQ(binomial(3, -1), 0);
}

TEST(LascouxNaruse, FirstRowAndColumnHaveNoConstant) {
    for (int u = 0; u <= 3; ++u)
        for (int v = 0; v <= 3; ++v) {
            EXPECT_EQ(lascoux_naruse_constant(u, v, 1, 2), 0);
            EXPECT_EQ(lascoux_naruse_constant(u, v, 2, 1), 0);
            EXPECT_EQ(lascoux_naruse_constant(u, v, 2, 2), 1);
        }
    EXPECT_EQ(lascoux_naruse_hook(0, 0, 1, 1, 1), X(1));
}

TEST(LascouxNaruse, HookEntriesMatchEnumerators) {
    for (const Partition& lam : {Partition{1}, Partition{2, 1}, Partition{3, 2}, Partition{2, 2}, Partition{3, 3, 1}}) {
        RShape s = RShape::usual(lam);
        FrobeniusForm fr = frobenius(lam);
        for (int m = 1; m <= 3; ++m) {
            GiambelliMatrix g = giambelli_matrix(s, canonical_g_flags(s, m), nullptr,
                                                 [&](const RShape& t, const FlagPair& f) { return g_enumerator(t, f, {m}); });
            for (int i = 0; i < g.k; ++i)
                for (int j = 0; j < g.k; ++j)
                    EXPECT_EQ(alpha0_beta1(g.matrix.entries[i][j].value),
                              lascoux_naruse_hook(fr.arms[j], fr.legs[i], j + 1, i + 1, m))
                        << lam.to_string() << " m=" << m << " " << i << j;
            EXPECT_EQ(lascoux_naruse(lam, m), alpha0_beta1(g_direct(s, m))) << lam.to_string();
        }
    }
}

}  // namespace
