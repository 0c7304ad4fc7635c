#include "support.hpp"

#include <ribbon_schur/hamel_goulden.hpp>
#include <ribbon_schur/tableaux.hpp>

#include <gtest/gtest.h>

using namespace ribbon_schur;

namespace {

const RShape running = RShape::usual({4, 4, 4, 2}, {2, 1});
const PipeVector running_pipe = {{0, 0}, {0, 1}, {1, 1}, {1, 0}, {0, 1}, {1, 1}, {1, 1}};

Polynomial tableau_side(const RShape& s, const FlagPair& f) {
    return super_weight_sum(s, f, f.kind == FlagKind::ROW ? Orientation::ROW : Orientation::COLUMN);
}

TEST(HamelGoulden, SingleRibbonIsItsOwnEntry) {
    RShape s = RShape::usual({3, 2}, {1});
    ASSERT_TRUE(is_ribbon(s));
    OuterDecomposition d = pipe_to_decomposition(s, {{0, 0}, {0, 1}, {1, 0}, {0, 0}});
    ASSERT_EQ(d.size(), 1);
    FlagPair f = parse_flags("a=0,0,1;b=2,3,3");
    HGMatrix m = hg_matrix(d, f);
    EXPECT_EQ(m.entries[0][0].sharp.shape, s);
    EXPECT_EQ(m.entries[0][0].flags, f);
    EXPECT_EQ(hg_determinant(d, f), tableau_side(s, f));
}

TEST(HamelGoulden, RunningExampleAgainstTableaux) {
    // narrower upper flag than the figure so the polynomial stays small
    FlagPair f = parse_flags("a=1,0,-1,-2;b=3,3,2,2");
    OuterDecomposition d = pipe_to_decomposition(running, running_pipe);
    HGMatrix m = hg_matrix(d, f);
    EXPECT_EQ(m.entries[2][1].value, Polynomial(0));
    EXPECT_EQ(determinant(m.values()), tableau_side(running, f));
}

TEST(HamelGoulden, RejectsInvalidFlags) {
    OuterDecomposition d = pipe_to_decomposition(running, running_pipe);
    EXPECT_THROW(hg_matrix(d, parse_flags("a=5,0,-1,-2;b=6,6,5,5")), std::invalid_argument);
}

TEST(HamelGoulden, VerticalEntriesAreElementary) {
    // each entry is a one-column shape; its tableaux are strictly increasing columns
    std::mt19937 rng(4);
    for (const auto& s : testsupport::connected_corpus(3, 3, 6)) {
        if (!s.is_normalized()) continue;
        FlagPair f = testsupport::random_column_flags(s, rng);
        OuterDecomposition d = vertical_decomposition(s);
        HGMatrix m = hg_matrix(d, f);
        for (int i = 0; i < m.size; ++i) {
            for (int j = 0; j < m.size; ++j) {
                const HGEntry& e = m.entries[i][j];
                if (!e.sharp.is_shape()) continue;
                ASSERT_EQ(e.sharp.shape.cols(), 1);
                const int k = e.sharp.shape.cell_count();
                const int top = e.sharp.shape.top_content(1), bottom = e.sharp.shape.bottom_content(1);
                Polynomial expect = e_super(k, window(Alphabet::Y, e.flags.a(1), e.flags.b(1)),
                                            window(Alphabet::Z, e.flags.a(1) + top, e.flags.b(1) + bottom));
                EXPECT_EQ(e.value, expect) << s.to_string() << " " << i << j;
            }
        }
    }
}

TEST(HamelGoulden, ColumnRowStrictOnCorpusSample) {
    std::mt19937 rng(17);
    std::mt19937_64 prng(18);
    auto corpus = testsupport::connected_corpus(4, 4, 6);
    auto pick = [&](const RShape& b) { return random_pipe(b, prng); };
    for (std::size_t k = 0; k < corpus.size(); k += 9) {
        const RShape& s = corpus[k];
        FlagPair fc = testsupport::random_column_flags(s, rng, 1);
        FlagPair fr = testsupport::random_row_flags(s, rng, 1);
        FlagPair fs = testsupport::random_column_flags(s, rng, 1, FlagKind::STRICT);
        for (const FlagPair& f : {fc, fr, fs}) {
            Polynomial expect = tableau_side(s, f);
            for (int t = 0; t < 3; ++t)
                EXPECT_EQ(hg_determinant(s, f, pick), expect) << s.to_string() << " " << format_flags(f);
        }
    }
}

TEST(HamelGoulden, CacheDoesNotChangeValues) {
    std::mt19937_64 prng(2);
    FlagPair f = parse_flags("a=0,1,1;b=3,2,2");
    RShape s = RShape::usual({3, 1, 1, 1});
    ASSERT_TRUE(validate(s, f));
    EntryCache cache;
    for (int t = 0; t < 6; ++t) {
        PipeVector pi = random_pipe(s, prng);
        OuterDecomposition d = pipe_to_decomposition(s, pi);
        EXPECT_EQ(hg_determinant(d, f, &cache), hg_determinant(d, f)) << format_pipe(pi);
    }
    EXPECT_GT(cache.size(), 0u);
}

TEST(Strip, SmallValues) {
    FlagPair f{FlagKind::COLUMN, {1, 1}, {2, 2}};
    Polynomial h = strip_function(StripKind::H, 2, 0, f);
    auto w = [](int t, int s) { return Polynomial(y(t)) - Polynomial(z(s)); };
    EXPECT_EQ(h, w(1, 1) * w(1, 2) + w(1, 1) * w(2, 3) + w(2, 2) * w(2, 3));
    EXPECT_EQ(strip_function(StripKind::E, 2, 0, f), w(1, 2) * w(2, 2));
    EXPECT_EQ(strip_function(StripKind::H, 0, 5, f), Polynomial(1));
    EXPECT_EQ(strip_function(StripKind::E, -1, 5, f), Polynomial(0));
}

TEST(Strip, MatchesOneRowAndOneColumnTableaux) {
    std::mt19937 rng(30);
    for (int t = 0; t < 30; ++t) {
        const int n = 1 + t % 4, c = static_cast<int>(rng() % 5) - 2;
        RShape row(Partition({n}), {}, c), col(Partition(std::vector<int>(n, 1)), {}, c);
        FlagPair fr = testsupport::random_row_flags(col, rng, 2);
        FlagPair fc = testsupport::random_column_flags(row, rng, 2);
        // h counts weakly increasing fillings of a row, e strictly increasing fillings of a column
        EXPECT_EQ(strip_function(StripKind::H, n, c, fc), tableau_side(row, fc)) << n << " " << c;
        EXPECT_EQ(strip_function(StripKind::E, n, c, fr), tableau_side(col, fr)) << n << " " << c;
    }
}

TEST(JacobiTrudi, AgreesWithTableaux) {
    std::mt19937 rng(40);
    auto corpus = testsupport::connected_corpus(4, 4, 7);
    for (std::size_t k = 0; k < corpus.size(); k += 5) {
        FlagPair f = testsupport::random_column_flags(corpus[k], rng);
        EXPECT_EQ(jacobi_trudi(corpus[k], f), tableau_side(corpus[k], f)) << corpus[k].to_string();
    }
}

TEST(JacobiTrudi, DualAgreesWithRowTableaux) {
    std::mt19937 rng(41);
    auto corpus = testsupport::connected_corpus(4, 4, 7);
    for (std::size_t k = 0; k < corpus.size(); k += 5) {
        FlagPair f = testsupport::random_row_flags(corpus[k], rng);
        EXPECT_EQ(dual_jacobi_trudi(corpus[k], f), tableau_side(corpus[k], f)) << corpus[k].to_string();
    }
}

TEST(JacobiTrudi, WrongFlagKindRejected) {
    RShape s = RShape::usual({2, 1});
    EXPECT_THROW(jacobi_trudi(s, FlagPair{FlagKind::ROW, {1, 1}, {2, 2}}), std::invalid_argument);
    EXPECT_THROW(dual_jacobi_trudi(s, parse_flags("a=1,1;b=2,2")), std::invalid_argument);
}

TEST(Giambelli, Frobenius) {
    FrobeniusForm f = frobenius(Partition({5, 4, 3, 3}));
    EXPECT_EQ(f.arms, (std::vector<int>{4, 2, 0}));
    EXPECT_EQ(f.legs, (std::vector<int>{3, 2, 1}));
    EXPECT_EQ(frobenius(Partition()).rank(), 0);
}

TEST(Giambelli, SignAndZeroBlock) {
    std::mt19937 rng(50);
    for (const char* text : {"3,2", "2,2/1", "3,2/1", "3,3,2/2,1", "4,3,3/2,1"}) {
        RShape s = parse_shape(text);
        FlagPair f = testsupport::random_column_flags(s, rng);
        GiambelliMatrix g = giambelli_matrix(s, f);
        for (int i = g.k; i < g.k + g.l; ++i)
            for (int j = g.k; j < g.k + g.l; ++j) EXPECT_TRUE(g.matrix.entries[i][j].value.is_zero());
        Polynomial det = determinant(g.matrix.values());
        Polynomial expect = tableau_side(s, f);
        EXPECT_EQ(g.l % 2 ? -det : det, expect) << text;
        EXPECT_EQ(giambelli(s, f), expect) << text;
    }
}

TEST(Giambelli, ObstructionsReported) {
    EXPECT_NE(giambelli_obstruction(RShape::usual({2, 1}, {2})), "");
    EXPECT_NE(giambelli_obstruction(RShape::usual({2, 2}, {1, 1})), "");
    EXPECT_EQ(giambelli_obstruction(RShape::usual({3, 3}, {1})), "");
    EXPECT_THROW(giambelli(RShape::usual({2, 2}, {1, 1}), parse_flags("a=1,1;b=2,2")), std::invalid_argument);
}

TEST(Giambelli, MatchesHooksAndStripsHG) {
    std::mt19937 rng(51);
    for (const auto& s : testsupport::connected_corpus(4, 4, 7)) {
        if (!giambelli_obstruction(s).empty() || !s.is_normalized()) continue;
        FlagPair f = testsupport::random_column_flags(s, rng, 1);
        Polynomial hg = hg_determinant(hooks_and_strips_decomposition(s), f);
        EXPECT_EQ(giambelli(s, f), hg) << s.to_string();
    }
}

}  // namespace
