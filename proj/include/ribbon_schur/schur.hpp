#pragma once

/**
 * @file schur.hpp
 * @brief Column- and row-flagged supersymmetric Schur functions as determinants.
 */

#include "flags.hpp"
#include "symfunc.hpp"

#include <stdexcept>
#include <utility>

namespace ribbon_schur {

enum class Orientation { COLUMN, ROW };

/**
 * Which alphabets play the roles of y and z. The default is S(y/z); the
 * duality partner S(z̄/ȳ) uses {Z, -1, Y, -1}.
 */
struct SuperAlphabets {
    Alphabet first = Alphabet::Y;
    int first_sign = 1;
    Alphabet second = Alphabet::Z;
    int second_sign = 1;

    VarList firsts(int lo, int hi) const { return window(first, lo, hi, first_sign); }
    VarList seconds(int lo, int hi) const { return window(second, lo, hi, second_sign); }
};

inline constexpr SuperAlphabets yz_alphabets{};
inline constexpr SuperAlphabets dual_alphabets{Alphabet::Z, -1, Alphabet::Y, -1};

struct SchurInput {
    RShape shape;
    FlagPair flags;
    Orientation orientation = Orientation::COLUMN;
};

/// Column-flagged determinant without checking the flag inequalities.
inline Polynomial column_schur_unchecked(const RShape& s, const FlagPair& f,
                                         const SuperAlphabets& alph = yz_alphabets) {
    const int n = s.cols();
    if (s.empty()) return 1;
    if (f.width() < n) throw FlagWidthError("column flags narrower than the shape");
    Matrix m(n, std::vector<Polynomial>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int k = s.lambda_conj(i) - i - s.mu_conj(j) + j;
            if (k < 0) continue;
            int ap = f.a(j) + s.top_content(j);
            int bp = f.b(i) + s.bottom_content(i);
            m[i - 1][j - 1] = e_super(k, alph.firsts(f.a(j), f.b(i)), alph.seconds(ap, bp));
        }
    }
    return determinant(m);
}

/// Row-flagged determinant without checking the flag inequalities.
inline Polynomial row_schur_unchecked(const RShape& s, const FlagPair& f,
                                      const SuperAlphabets& alph = yz_alphabets) {
    const int n = s.rows();
    if (s.empty()) return 1;
    if (f.width() < n) throw FlagWidthError("row flags narrower than the shape");
    Matrix m(n, std::vector<Polynomial>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int k = s.lambda(i) - s.mu(j) - i + j;
            if (k < 0) continue;
            int a = f.a(j) + s.left_content(j);
            int b = f.b(i) + s.right_content(i);
            m[i - 1][j - 1] = h_super(k, alph.firsts(f.a(j), f.b(i)), alph.seconds(a, b));
        }
    }
    return determinant(m);
}

/// S^{a,b} (column) or S̄^{a',b'} (row); rejects invalid flags.
inline Polynomial flagged_schur(const SchurInput& in, const SuperAlphabets& alph = yz_alphabets) {
    const bool row = in.orientation == Orientation::ROW;
    if (row != (in.flags.kind == FlagKind::ROW))
        throw std::invalid_argument("flagged_schur: flag kind does not match orientation");
    if (!validate(in.shape, in.flags)) throw std::invalid_argument("flagged_schur: invalid flags");
    return row ? row_schur_unchecked(in.shape, in.flags, alph) : column_schur_unchecked(in.shape, in.flags, alph);
}

inline Polynomial flagged_schur(const RShape& s, const FlagPair& f) {
    return flagged_schur({s, f, f.kind == FlagKind::ROW ? Orientation::ROW : Orientation::COLUMN});
}

/// (S^{a,b}_{λ/μ}(y/z), S̄^{a',b'}_{λ'/μ'}(z̄/ȳ)).
inline std::pair<Polynomial, Polynomial> duality_pair(const RShape& s, const FlagPair& f) {
    Polynomial lhs = flagged_schur({s, f, Orientation::COLUMN});
    FlagPair fp = conjugate_flags(s, f);
    Polynomial rhs = row_schur_unchecked(conjugate_rshape(s), fp, dual_alphabets);
    return {lhs, rhs};
}

}  // namespace ribbon_schur
