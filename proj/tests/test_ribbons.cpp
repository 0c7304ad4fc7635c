#include "support.hpp"

#include <ribbon_schur/ribbons.hpp>

#include <gtest/gtest.h>

using namespace ribbon_schur;

namespace {

const RShape running = RShape::usual({4, 4, 4, 2}, {2, 1});
const PipeVector running_pipe = {{0, 0}, {0, 1}, {1, 1}, {1, 0}, {0, 1}, {1, 1}, {1, 1}};

std::vector<int> strip_sizes(const std::vector<RShape>& strips) {
    std::vector<int> out;
    for (const auto& s : strips) out.push_back(s.cell_count());
    return out;
}

TEST(Pipe, RunningExampleRibbons) {
    auto d = pipe_to_decomposition(running, running_pipe);
    ASSERT_EQ(d.size(), 3);
    EXPECT_EQ(format_ribbon(d.ribbon(1)), "Θ[-3,2]");
    EXPECT_EQ(format_ribbon(d.ribbon(2)), "Θ[-2,-2]");
    EXPECT_EQ(format_ribbon(d.ribbon(3)), "Θ[0,3]");
    EXPECT_EQ(decomposition_to_pipe(d), running_pipe);
}

TEST(Pipe, CuttingStripContents) {
    auto d = pipe_to_decomposition(running, running_pipe);
    RShape strip = d.cutting_strip();
    EXPECT_EQ(strip.cell_count(), 7);
    int lo = 100, hi = -100;
    for (const Cell& c : strip.cells()) lo = std::min(lo, strip.content(c)), hi = std::max(hi, strip.content(c));
    EXPECT_EQ(lo, -3);
    EXPECT_EQ(hi, 3);
}

TEST(Pipe, SingleRowAllHorizontal) {
    RShape row = RShape::usual({4});
    auto d = pipe_to_decomposition(row, PipeVector(4, {0, 0}));
    ASSERT_EQ(d.size(), 1);
    EXPECT_EQ(d.ribbon(1).cells.size(), 4u);
}

TEST(Pipe, VerticalDecompositionGivesColumns) {
    for (const auto& s : testsupport::connected_corpus()) {
        if (!s.is_normalized()) continue;
        auto d = vertical_decomposition(s);
        ASSERT_EQ(d.size(), s.cols()) << s.to_string();
        for (const Ribbon& rib : d.ribbons()) {
            for (std::size_t k = 1; k < rib.cells.size(); ++k) EXPECT_EQ(rib.cells[k].col, rib.cells[0].col);
            // head is the bottom cell of its column, tail the top one
            int col = rib.cells[0].col;
            EXPECT_EQ(rib.cells.front().row, s.lambda_conj(col));
            EXPECT_EQ(rib.cells.back().row, s.mu_conj(col) + 1);
        }
    }
}

TEST(Pipe, MalformedRejected) {
    EXPECT_THROW(pipe_to_decomposition(running, {{0, 1}, {1, 1}, {1, 0}, {0, 1}, {1, 1}, {1, 1}, {1, 1}}),
                 std::invalid_argument);
    EXPECT_THROW(pipe_to_decomposition(running, {{0, 0}, {1, 1}}), std::invalid_argument);
    EXPECT_THROW(parse_pipe("(0,2)"), std::invalid_argument);
    EXPECT_EQ(parse_pipe(format_pipe(running_pipe)), running_pipe);
}

TEST(Pipe, RoundTripsAndIsOuterOnCorpus) {
    std::mt19937_64 rng(3);
    for (const auto& s : testsupport::connected_corpus()) {
        if (!s.is_normalized()) continue;
        for (int k = 0; k < 6; ++k) {
            PipeVector pi = random_pipe(s, rng);
            ASSERT_TRUE(is_pipe_vector(pi));
            auto d = pipe_to_decomposition(s, pi);
            EXPECT_EQ(decomposition_to_pipe(d), pi) << s.to_string() << " " << format_pipe(pi);
            EXPECT_EQ(pipe_to_decomposition(s, decomposition_to_pipe(d)), d);
            std::vector<std::vector<Cell>> cells;
            for (const Ribbon& r : d.ribbons()) cells.push_back(r.cells);
            EXPECT_TRUE(is_outer_decomposition(s, cells)) << s.to_string() << " " << format_pipe(pi);
        }
    }
}

TEST(Pipe, OuterDecompositionCheckRejectsBadHeads) {
    RShape sq = RShape::usual({2, 2});
    EXPECT_TRUE(is_outer_decomposition(sq, {{{2, 1}, {2, 2}}, {{1, 1}, {1, 2}}}));
    // the single cell (1,2) as its own ribbon is a head with (1,1) on its left and (2,2) below
    EXPECT_FALSE(is_outer_decomposition(sq, {{{2, 1}, {1, 1}}, {{2, 2}}, {{1, 2}}}));
    EXPECT_FALSE(is_outer_decomposition(sq, {{{2, 1}, {2, 2}}}));
}

TEST(Sharp, RunningExampleMatrix) {
    auto d = pipe_to_decomposition(running, running_pipe);
    EXPECT_EQ(d.sharp(3, 2).kind, SharpResult::Kind::UNDEFINED);
    for (int i = 1; i <= 3; ++i) {
        SharpResult r = d.sharp(i, i);
        ASSERT_TRUE(r.is_shape());
        EXPECT_EQ(r.shape.cell_count(), d.ribbon(i).size());
        EXPECT_EQ(r.shape.root_content(), d.ribbon(i).head);
    }
    SharpResult r13 = d.sharp(1, 3);
    ASSERT_TRUE(r13.is_shape());
    EXPECT_EQ(strip_sizes(canonical_decomposition(r13.shape, Canonical::RIGHT)), (std::vector<int>{1, 3, 3}));
}

TEST(Sharp, EmptyAndUndefinedByContents) {
    auto d = pipe_to_decomposition(running, running_pipe);
    EXPECT_EQ(d.sub_ribbon(1, 0).kind, SharpResult::Kind::EMPTY);
    EXPECT_EQ(d.sub_ribbon(2, 0).kind, SharpResult::Kind::UNDEFINED);
}

TEST(Canonical, SingleCell) {
    RShape one = RShape::usual({1});
    EXPECT_EQ(canonical_decomposition(one, Canonical::RIGHT).size(), 1u);
    EXPECT_EQ(canonical_decomposition(one, Canonical::UP).size(), 1u);
}

TEST(Canonical, Hooks) {
    for (int u = 0; u <= 4; ++u) {
        for (int v = 0; v <= 4; ++v) {
            std::vector<int> parts{u + 1};
            for (int k = 0; k < v; ++k) parts.push_back(1);
            RShape hook = RShape::usual(Partition(parts));
            std::vector<int> expect{v + 1};
            for (int k = 0; k < u; ++k) expect.push_back(1);
            EXPECT_EQ(strip_sizes(canonical_decomposition(hook, Canonical::RIGHT)), expect);
            std::vector<int> expect_up(v, 1);
            expect_up.push_back(u + 1);
            EXPECT_EQ(strip_sizes(canonical_decomposition(hook, Canonical::UP)), expect_up);
        }
    }
}

TEST(Canonical, RejectsNonRibbon) {
    EXPECT_THROW(canonical_decomposition(RShape::usual({2, 2}), Canonical::RIGHT), std::invalid_argument);
}

struct Expected {
    FlagVector a, b, ap, bp;
};

TEST(InducedFlags, RunningExampleTable) {
    auto d = pipe_to_decomposition(running, running_pipe);
    FlagPair f = parse_flags("a=1,0,-1,-2;b=6,6,5,5");
    const Expected table[3][3] = {
        {{{2, 0, -1}, {6, 6, 5}, {-1, 0, 1}, {3, 4, 6}},
         {{2, 1}, {6, 6}, {-1, -1}, {3, 4}},
         {{2, 0, -2}, {6, 6, 5}, {-1, 0, 1}, {3, 4, 6}}},
        {{{0, -1}, {6, 5}, {0, 1}, {4, 6}},
         {{1}, {6}, {-1}, {4}},
         {{0, -2}, {6, 5}, {0, 1}, {4, 6}}},
        {{{0, -1}, {5, 5}, {0, 1}, {5, 6}},
         {{}, {}, {}, {}},
         {{0, -2}, {5, 5}, {0, 1}, {5, 6}}},
    };
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            const Expected& e = table[i - 1][j - 1];
            FlagPair g = induced_flags(d, f, i, j);
            EXPECT_EQ(g.lower, e.a) << i << j;
            EXPECT_EQ(g.upper, e.b) << i << j;
            SharpResult r = d.sharp(i, j);
            if (!r.is_shape()) {
                EXPECT_TRUE(e.a.empty());
                continue;
            }
            FlagPair c = conjugate_flags(r.shape, g);
            EXPECT_EQ(c.lower, e.ap) << i << j;
            EXPECT_EQ(c.upper, e.bp) << i << j;
        }
    }
}

TEST(InducedFlags, ColumnFlagsValidateOnCorpus) {
    std::mt19937 rng(8);
    std::mt19937_64 prng(9);
    for (const auto& s : testsupport::connected_corpus()) {
        if (!s.is_normalized()) continue;
        FlagPair f = testsupport::random_column_flags(s, rng);
        for (int k = 0; k < 4; ++k) {
            auto d = pipe_to_decomposition(s, random_pipe(s, prng));
            for (int i = 1; i <= d.size(); ++i) {
                for (int j = 1; j <= d.size(); ++j) {
                    SharpResult r = d.sharp(i, j);
                    if (!r.is_shape()) continue;
                    FlagPair g = induced_flags(d, f, i, j);
                    EXPECT_EQ(g.width(), r.shape.cols());
                    EXPECT_TRUE(validate(r.shape, g)) << s.to_string() << " " << i << j;
                }
            }
        }
    }
}

TEST(InducedFlags, RowFlagsHaveOneEntryPerRow) {
    auto d = pipe_to_decomposition(running, running_pipe);
    FlagPair rows{FlagKind::ROW, {-1, 0, 1, 1}, {3, 4, 5, 6}};
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            SharpResult r = d.sharp(i, j);
            if (!r.is_shape()) continue;
            EXPECT_EQ(induced_flags(d, rows, i, j).width(), r.shape.rows());
        }
    }
}

TEST(HooksAndStrips, CaseTable) {
    // λ = (5,4,3,3) = (4,2,0|3,2,1), μ = (2,1) = (1|1): k = 3, ℓ = 1
    RShape s = RShape::usual({5, 4, 3, 3}, {2, 1});
    auto d = hooks_and_strips_decomposition(s);
    const int u[] = {4, 2, 0}, v[] = {3, 2, 1}, c1 = 1, d1 = 1;
    ASSERT_EQ(d.size(), 4);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            SharpResult r = d.sub_ribbon(-v[i], u[j]);
            ASSERT_TRUE(r.is_shape());
            std::vector<int> hook{u[j] + 1};
            for (int t = 0; t < v[i]; ++t) hook.push_back(1);
            EXPECT_EQ(r.shape, RShape(Partition(hook), {}, -v[i]));
        }
        SharpResult vert = d.sub_ribbon(-v[i], -d1 - 1);
        if (v[i] == d1) {
            EXPECT_EQ(vert.kind, SharpResult::Kind::EMPTY);
        } else {
            EXPECT_EQ(vert.shape, RShape(Partition(std::vector<int>(v[i] - d1, 1)), {}, -v[i]));
        }
        SharpResult hor = d.sub_ribbon(c1 + 1, u[i]);
        if (u[i] < c1) {
            EXPECT_EQ(hor.kind, SharpResult::Kind::UNDEFINED);
        } else {
            EXPECT_EQ(hor.shape, RShape(Partition({u[i] - c1}), {}, c1 + 1));
        }
    }
    EXPECT_EQ(d.sub_ribbon(c1 + 1, -d1 - 1).kind, SharpResult::Kind::UNDEFINED);
}

}  // namespace
