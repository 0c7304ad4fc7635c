#pragma once

/**
 * @file tableaux.hpp
 * @brief Flagged Z-SSYT, super tableaux and g-tableaux with their weight sums.
 */

#include "schur.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ribbon_schur {

/// Filling of an r-shape; rows[i-1] holds the entries of row i from column mu_i+1 on.
struct ZSSYT {
    RShape shape;
    std::vector<std::vector<int>> rows;

    int at(int i, int j) const { return rows.at(i - 1).at(j - shape.mu(i) - 1); }
    int& at(int i, int j) { return rows.at(i - 1).at(j - shape.mu(i) - 1); }

    bool operator==(const ZSSYT& o) const { return shape == o.shape && rows == o.rows; }

    /// Row-list form, e.g. "[[0,0,1],[-2,1,2,3]]".
    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            s += i ? ",[" : "[";
            for (std::size_t j = 0; j < rows[i].size(); ++j) s += (j ? "," : "") + std::to_string(rows[i][j]);
            s += "]";
        }
        return s + "]";
    }
};

inline ZSSYT make_tableau(const RShape& s, std::vector<std::vector<int>> rows) {
    if (static_cast<int>(rows.size()) != s.rows()) throw std::invalid_argument("tableau: wrong number of rows");
    for (int i = 1; i <= s.rows(); ++i)
        if (static_cast<int>(rows[i - 1].size()) != s.lambda(i) - s.mu(i))
            throw std::invalid_argument("tableau: wrong row length in row " + std::to_string(i));
    return {s, std::move(rows)};
}

namespace detail {

/// Inclusive bounds for the entry in cell (i,j) under the given flags.
inline std::pair<int, int> cell_bounds(const FlagPair& f, int i, int j) {
    if (f.kind == FlagKind::ROW) return {f.a(i), f.b(i)};
    return {f.a(j), f.b(j)};
}

inline ZSSYT empty_filling(const RShape& s) {
    ZSSYT t{s, {}};
    for (int i = 1; i <= s.rows(); ++i) t.rows.emplace_back(s.lambda(i) - s.mu(i), 0);
    return t;
}

}  // namespace detail

/// Semistandard (rows weak, columns strict) and within the flag bounds.
inline bool is_flagged_zssyt(const RShape& s, const FlagPair& f, const ZSSYT& t) {
    if (!(t.shape.outer() == s.outer() && t.shape.inner() == s.inner())) return false;
    for (const Cell& c : s.cells()) {
        int v = t.at(c.row, c.col);
        auto [lo, hi] = detail::cell_bounds(f, c.row, c.col);
        if (v < lo || v > hi) return false;
        if (s.contains(c.row, c.col - 1) && t.at(c.row, c.col - 1) > v) return false;
        if (s.contains(c.row - 1, c.col) && t.at(c.row - 1, c.col) >= v) return false;
    }
    return true;
}

/**
 * Calls visit for every flagged Z-SSYT, filling columns left to right and each
 * column top to bottom. Column flags (COLUMN/STRICT) bound column j by
 * [a_j, b_j]; ROW flags bound row i by [a'_i, b'_i].
 */
inline void for_each_zssyt(const RShape& s, const FlagPair& f, const std::function<void(const ZSSYT&)>& visit) {
    ZSSYT t = detail::empty_filling(s);
    std::vector<Cell> order;
    for (int j = 1; j <= s.cols(); ++j)
        for (int i = s.mu_conj(j) + 1; i <= s.lambda_conj(j); ++i) order.push_back({i, j});
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == order.size()) {
            visit(t);
            return;
        }
        auto [i, j] = order[k];
        auto [lo, hi] = detail::cell_bounds(f, i, j);
        if (s.contains(i, j - 1)) lo = std::max(lo, t.at(i, j - 1));
        if (s.contains(i - 1, j)) lo = std::max(lo, t.at(i - 1, j) + 1);
        for (int v = lo; v <= hi; ++v) {
            t.at(i, j) = v;
            fill(k + 1);
        }
    };
    fill(0);
}

inline std::vector<ZSSYT> enumerate_zssyt(const RShape& s, const FlagPair& f) {
    std::vector<ZSSYT> out;
    for_each_zssyt(s, f, [&](const ZSSYT& t) { out.push_back(t); });
    return out;
}

/// A Z-SSYT with a primed/unprimed choice per cell.
struct SuperTableau {
    ZSSYT base;
    std::vector<std::vector<bool>> primed;

    bool is_primed(int i, int j) const { return primed.at(i - 1).at(j - base.shape.mu(i) - 1); }

    /// Displayed entry: the base entry, or base + content when primed.
    int displayed(int i, int j) const {
        return is_primed(i, j) ? base.at(i, j) + base.shape.content(i, j) : base.at(i, j);
    }

    /// y_r for an unprimed r, -z_r for a primed r'.
    Polynomial weight() const {
        Polynomial w = 1;
        for (const Cell& c : base.shape.cells()) {
            int v = displayed(c.row, c.col);
            w *= is_primed(c.row, c.col) ? -Polynomial(z(v)) : Polynomial(y(v));
        }
        return w;
    }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 1; i <= base.shape.rows(); ++i) {
            s += i > 1 ? ",[" : "[";
            for (int j = base.shape.mu(i) + 1; j <= base.shape.lambda(i); ++j) {
                if (j > base.shape.mu(i) + 1) s += ",";
                s += std::to_string(displayed(i, j));
                if (is_primed(i, j)) s += "'";
            }
            s += "]";
        }
        return s + "]";
    }
};

/// All 2^cells primed variants of every flagged Z-SSYT; meant for small shapes.
inline std::vector<SuperTableau> enumerate_super_tableaux(const RShape& s, const FlagPair& f) {
    std::vector<SuperTableau> out;
    const auto cells = s.cells();
    if (cells.size() > 20) throw std::invalid_argument("enumerate_super_tableaux: shape too large");
    for_each_zssyt(s, f, [&](const ZSSYT& t) {
        for (unsigned mask = 0; mask < (1u << cells.size()); ++mask) {
            SuperTableau st{t, {}};
            for (int i = 1; i <= s.rows(); ++i) st.primed.emplace_back(s.lambda(i) - s.mu(i), false);
            for (std::size_t k = 0; k < cells.size(); ++k)
                if (mask >> k & 1u) st.primed[cells[k].row - 1][cells[k].col - s.mu(cells[k].row) - 1] = true;
            out.push_back(std::move(st));
        }
    });
    return out;
}

/**
 * Sum over Z-SSYT of the product over cells of factor(i, j, T_ij), computed by
 * a transfer over columns: the state is the filling of the previous column.
 */
inline Polynomial weighted_tableau_sum(const RShape& s, const FlagPair& f,
                                       const std::function<Polynomial(int, int, int)>& factor) {
    if (s.empty()) return 1;
    using Column = std::vector<int>;
    std::map<Column, Polynomial> states;
    states[{}] = 1;
    int prev_top = 1, prev_bottom = 0;
    for (int j = 1; j <= s.cols(); ++j) {
        const int top = s.mu_conj(j) + 1, bottom = s.lambda_conj(j);
        // fillings of column j with their weights
        std::vector<std::pair<Column, Polynomial>> fillings;
        Column col(std::max(0, bottom - top + 1));
        std::function<void(int, Polynomial)> build = [&](int i, Polynomial w) {
            if (i > bottom) {
                fillings.emplace_back(col, std::move(w));
                return;
            }
            auto [lo, hi] = detail::cell_bounds(f, i, j);
            if (i > top) lo = std::max(lo, col[i - top - 1] + 1);
            for (int v = lo; v <= hi; ++v) {
                Polynomial fv = factor(i, j, v);
                if (fv.is_zero()) continue;
                col[i - top] = v;
                build(i + 1, w * fv);
            }
        };
        build(top, 1);
        std::map<Column, Polynomial> next;
        for (const auto& [fill, w] : fillings) {
            PolynomialAccumulator acc;
            for (const auto& [prev, pw] : states) {
                bool ok = true;
                for (int i = std::max(top, prev_top); i <= std::min(bottom, prev_bottom) && ok; ++i)
                    ok = prev[i - prev_top] <= fill[i - top];
                if (ok) acc.add(pw);
            }
            Polynomial sum = acc.take();
            if (!sum.is_zero()) next[fill] = sum * w;
        }
        states = std::move(next);
        prev_top = top;
        prev_bottom = bottom;
    }
    PolynomialAccumulator total;
    for (const auto& [col, w] : states) total.add(w);
    return total.take();
}

/// Number of flagged Z-SSYT, by the same transfer with unit weights.
inline Integer count_zssyt(const RShape& s, const FlagPair& f) {
    return weighted_tableau_sum(s, f, [](int, int, int) { return Polynomial(1); }).constant_term();
}

/// Sum of wt(T) over flagged super tableaux: each cell contributes y_t - z_{t+c}.
inline Polynomial super_weight_sum(const RShape& s, const FlagPair& f, Orientation orientation = Orientation::COLUMN) {
    if ((orientation == Orientation::ROW) != (f.kind == FlagKind::ROW))
        throw std::invalid_argument("super_weight_sum: flag kind does not match orientation");
    return weighted_tableau_sum(s, f, [&](int i, int j, int t) {
        return Polynomial(y(t)) - Polynomial(z(t + s.content(i, j)));
    });
}

/// Entry of a g-tableau: a positive label with one of the marks x, alpha (bullet), beta (circle).
struct GEntry {
    Alphabet mark = Alphabet::X;
    int value = 1;  // may be negative for the ±α, ±β labels
    bool operator==(const GEntry&) const = default;

    Polynomial weight() const {
        Polynomial v(Variable{mark, value < 0 ? -value : value});
        return value < 0 ? -v : v;
    }
};

/// Relabels an unprimed entry t.
inline GEntry g_label_unprimed(int t, int m) {
    if (t >= 1 && t <= m) return {Alphabet::X, t};
    if (t > m) return {Alphabet::BETA, t - m};
    return {Alphabet::ALPHA, t - 1};
}

/// Relabels a primed entry p'; entries from [m'] have no label.
inline std::optional<GEntry> g_label_primed(int p, int m) {
    if (p >= 1 && p <= m) return std::nullopt;
    if (p > m) return GEntry{Alphabet::ALPHA, p - m};
    return GEntry{Alphabet::BETA, p - 1};
}

struct GTableau {
    RShape shape;
    std::vector<std::vector<GEntry>> rows;

    Polynomial weight() const {
        Polynomial w = 1;
        for (const auto& row : rows)
            for (const auto& e : row) w *= e.weight();
        return w;
    }
};

/// Explicit g-tableaux from the super tableaux without primed entries in [m'].
inline std::vector<GTableau> enumerate_g_tableaux(const RShape& s, const FlagPair& f, int m) {
    std::vector<GTableau> out;
    for (const auto& st : enumerate_super_tableaux(s, f)) {
        GTableau g{s, {}};
        bool keep = true;
        for (int i = 1; i <= s.rows() && keep; ++i) {
            g.rows.emplace_back();
            for (int j = s.mu(i) + 1; j <= s.lambda(i) && keep; ++j) {
                int v = st.displayed(i, j);
                if (!st.is_primed(i, j)) {
                    g.rows.back().push_back(g_label_unprimed(v, m));
                } else if (auto e = g_label_primed(v, m)) {
                    g.rows.back().push_back(*e);
                } else {
                    keep = false;
                }
            }
        }
        if (keep) out.push_back(std::move(g));
    }
    return out;
}

/// Sum of wt(T) over GT_{λ/μ}(a,b), aggregating the labels of each cell.
inline Polynomial g_tableau_weight_sum(const RShape& s, const FlagPair& f, int m) {
    return weighted_tableau_sum(s, f, [&](int i, int j, int t) {
        Polynomial w = g_label_unprimed(t, m).weight();
        if (auto e = g_label_primed(t + s.content(i, j), m)) w += e->weight();
        return w;
    });
}

}  // namespace ribbon_schur
