#pragma once

// Shared corpus generators and independent oracles for the test programs.

#include <ribbon_schur/schur.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace testsupport {

using namespace ribbon_schur;

/// All partitions with at most `rows` parts, each at most `cols`.
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int max_part) {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == rows) return;
        for (int p = 1; p <= max_part; ++p) {
            cur.push_back(p);
            rec(p);
            cur.pop_back();
        }
    };
    rec(cols);
    return out;
}

/// Connected usual skew shapes λ/μ with λ inside the box and 1..max_cells cells.
inline std::vector<RShape> connected_corpus(int rows = 4, int cols = 4, int max_cells = 8) {
    std::vector<RShape> out;
    auto parts = partitions_in_box(rows, cols);
    for (const auto& lam : parts) {
        for (const auto& mu : parts) {
            if (!lam.contains(mu) || lam == mu) continue;
            if (lam.size() - mu.size() > max_cells) continue;
            RShape s = RShape::usual(lam, mu);
            if (s.is_connected()) out.push_back(s);
        }
    }
    return out;
}

/// Straight shapes inside the box with 1..max_cells cells.
inline std::vector<RShape> straight_corpus(int rows = 4, int cols = 4, int max_cells = 8) {
    std::vector<RShape> out;
    for (const auto& lam : partitions_in_box(rows, cols))
        if (!lam.empty() && lam.size() <= max_cells) out.push_back(RShape::usual(lam));
    return out;
}

/**
 * Random valid column flags: each column j gets a_j and b_j = a_j + h_j - 1 + s_j
 * with slack s_j in [0, max_slack], h_j the column height. When max_width is
 * set, b_j - a_j is also kept at most max(h_j - 1, max_width).
 */
inline FlagPair random_column_flags(const RShape& s, std::mt19937& rng, int max_slack = 2,
                                    FlagKind kind = FlagKind::COLUMN, int max_width = -1) {
    const int n = s.cols();
    std::uniform_int_distribution<int> start(-2, 2), slack(0, max_slack), step(-1, 2);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        FlagPair f{kind, std::vector<int>(n), std::vector<int>(n)};
        int a = start(rng);
        for (int j = 1; j <= n; ++j) {
            if (j > 1) a -= step(rng);
            int h = s.lambda_conj(j) - s.mu_conj(j);
            f.lower[j - 1] = a;
            int width = std::max(h, 1) - 1 + slack(rng);
            if (max_width >= 0) width = std::min(width, std::max(h - 1, max_width));
            f.upper[j - 1] = a + width;
        }
        if (validate(s, f)) return f;
    }
    throw std::runtime_error("random_column_flags: no valid flags found for " + s.to_string());
}

/// Random valid row flags, weakly increasing, with windows b_i - a_i <= max_slack.
inline FlagPair random_row_flags(const RShape& s, std::mt19937& rng, int max_slack = 2) {
    const int n = s.rows();
    std::uniform_int_distribution<int> start(-2, 2), slack(0, max_slack), step(0, 1);
    FlagPair f{FlagKind::ROW, std::vector<int>(n), std::vector<int>(n)};
    int a = start(rng), b = a;
    for (int i = 1; i <= n; ++i) {
        if (i > 1) a += step(rng);
        b = std::min(std::max(b + step(rng), a + slack(rng)), a + max_slack);
        f.lower[i - 1] = a;
        f.upper[i - 1] = b;
    }
    return f;
}

/// Signed sum over all permutations, written independently of the library.
inline Polynomial leibniz_determinant(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Polynomial total;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Polynomial term = 1;
        for (int i = 0; i < n && !term.is_zero(); ++i) term *= m[i][perm[i]];
        total += inversions % 2 ? -term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// s_{λ/μ}(x_1..x_m) by brute-force enumeration of semistandard fillings with entries in [m].
inline Polynomial schur_by_ssyt(const RShape& s, int m) {
    std::vector<Cell> cells = s.cells();
    std::map<Cell, int> t;
    Polynomial total;
    std::function<void(std::size_t, Polynomial)> rec = [&](std::size_t k, Polynomial w) {
        if (k == cells.size()) {
            total += w;
            return;
        }
        Cell c = cells[k];
        int lo = 1;
        if (s.contains(c.row, c.col - 1)) lo = std::max(lo, t[{c.row, c.col - 1}]);
        if (s.contains(c.row - 1, c.col)) lo = std::max(lo, t[{c.row - 1, c.col}] + 1);
        for (int v = lo; v <= m; ++v) {
            t[c] = v;
            rec(k + 1, w * Polynomial(x(v)));
        }
    };
    rec(0, 1);
    return total;
}

inline Polynomial random_polynomial(std::mt19937& rng, int terms = 3) {
    std::uniform_int_distribution<int> coeff(-3, 3), idx(-2, 2), alph(0, 4), deg(0, 2);
    Polynomial p;
    for (int t = 0; t < terms; ++t) {
        Polynomial mono = coeff(rng);
        int d = deg(rng);
        for (int k = 0; k < d; ++k) mono *= Polynomial(Variable{static_cast<Alphabet>(alph(rng)), idx(rng)});
        p += mono;
    }
    return p;
}

}  // namespace testsupport
