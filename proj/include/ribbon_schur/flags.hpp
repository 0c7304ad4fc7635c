#pragma once

/**
 * @file flags.hpp
 * @brief Column, row and strict flags, their validation and conjugation.
 */

#include "shapes.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ribbon_schur {

enum class FlagKind { COLUMN, ROW, STRICT };

inline const char* flag_kind_name(FlagKind k) {
    switch (k) {
        case FlagKind::COLUMN: return "column";
        case FlagKind::ROW: return "row";
        case FlagKind::STRICT: return "strict";
    }
    return "?";
}

using FlagVector = std::vector<int>;

struct FlagPair {
    FlagKind kind = FlagKind::COLUMN;
    FlagVector lower;  // a
    FlagVector upper;  // b

    int width() const { return static_cast<int>(lower.size()); }
    /// 1-based access
    int a(int i) const { return lower.at(i - 1); }
    int b(int i) const { return upper.at(i - 1); }
    bool operator==(const FlagPair&) const = default;
};

class FlagWidthError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Determinant width the flags must have: cols for column/strict, rows for row flags.
inline int required_width(const RShape& s, FlagKind kind) {
    return kind == FlagKind::ROW ? s.rows() : s.cols();
}

/**
 * Truncate to the required width. Longer vectors are cut and a warning is
 * written to *warning; shorter vectors raise FlagWidthError.
 */
inline FlagPair fit_width(const RShape& s, FlagPair f, std::string* warning = nullptr) {
    const int n = required_width(s, f.kind);
    if (f.lower.size() != f.upper.size()) throw std::invalid_argument("flags: a and b have different lengths");
    if (f.width() < n)
        throw FlagWidthError("flags: width " + std::to_string(f.width()) + " is smaller than " + std::to_string(n));
    if (f.width() > n) {
        if (warning)
            *warning = "flags truncated from width " + std::to_string(f.width()) + " to " + std::to_string(n);
        f.lower.resize(n);
        f.upper.resize(n);
    }
    return f;
}

/// Checks the inequalities of f.kind; throws FlagWidthError when the width is too small.
inline bool validate(const RShape& s, const FlagPair& f) {
    const int n = required_width(s, f.kind);
    if (f.lower.size() != f.upper.size()) throw std::invalid_argument("flags: a and b have different lengths");
    if (f.width() < n)
        throw FlagWidthError("flags: width " + std::to_string(f.width()) + " is smaller than " + std::to_string(n));
    for (int i = 1; i < n; ++i) {
        if (f.kind == FlagKind::ROW) {
            if (s.mu(i) < s.lambda(i + 1) && (f.a(i) > f.a(i + 1) || f.b(i) > f.b(i + 1))) return false;
            continue;
        }
        if (s.mu_conj(i) < s.lambda_conj(i + 1)) {
            if (f.a(i) - f.a(i + 1) > s.mu_conj(i) - s.mu_conj(i + 1) + 1) return false;
            if (f.b(i) - f.b(i + 1) > s.lambda_conj(i) - s.lambda_conj(i + 1) + 1) return false;
        }
        if (f.kind == FlagKind::STRICT && f.a(i) - f.a(i + 1) > 1) return false;
    }
    return true;
}

/**
 * Column (or strict) flags of s to row flags of conjugate_rshape(s):
 * a'_j = a_j + c(top of column j), b'_j = b_j + c(bottom of column j),
 * with virtual contents for columns without cells.
 */
inline FlagPair conjugate_flags(const RShape& s, const FlagPair& f) {
    if (f.kind == FlagKind::ROW) throw std::invalid_argument("conjugate_flags: expected column flags");
    const int n = s.cols();
    if (f.width() < n) throw FlagWidthError("conjugate_flags: flags narrower than the shape");
    FlagPair out{FlagKind::ROW, {}, {}};
    for (int j = 1; j <= n; ++j) {
        out.lower.push_back(f.a(j) + s.top_content(j));
        out.upper.push_back(f.b(j) + s.bottom_content(j));
    }
    return out;
}

/**
 * Row flags of s to column flags of conjugate_rshape(s):
 * a_i = a'_i + c(leftmost cell of row i), b_i = b'_i + c(rightmost cell of row i).
 */
inline FlagPair row_to_column_flags(const RShape& s, const FlagPair& f) {
    if (f.kind != FlagKind::ROW) throw std::invalid_argument("row_to_column_flags: expected row flags");
    const int n = s.rows();
    if (f.width() < n) throw FlagWidthError("row_to_column_flags: flags narrower than the shape");
    FlagPair out{FlagKind::COLUMN, {}, {}};
    for (int i = 1; i <= n; ++i) {
        out.lower.push_back(f.a(i) + s.left_content(i));
        out.upper.push_back(f.b(i) + s.right_content(i));
    }
    return out;
}

/// Parses "a=1,0,-1,-2;b=6,6,5,5".
inline FlagPair parse_flags(const std::string& text, FlagKind kind = FlagKind::COLUMN) {
    FlagPair f{kind, {}, {}};
    bool seen_a = false, seen_b = false;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        if (part.size() < 2 || part[1] != '=' || (part[0] != 'a' && part[0] != 'b'))
            throw std::invalid_argument("flags: expected a=... or b=..., got '" + part + "'");
        FlagVector v;
        std::stringstream items(part.substr(2));
        std::string item;
        while (std::getline(items, item, ',')) {
            std::size_t used = 0;
            int value = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument("flags: bad entry '" + item + "'");
            v.push_back(value);
        }
        if (part[0] == 'a') { f.lower = v; seen_a = true; }
        else { f.upper = v; seen_b = true; }
    }
    if (!seen_a || !seen_b) throw std::invalid_argument("flags: both a and b are required");
    if (f.lower.size() != f.upper.size()) throw std::invalid_argument("flags: a and b have different lengths");
    return f;
}

inline std::string format_vector(const FlagVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

inline std::string format_flags(const FlagPair& f) {
    std::string s = "a=";
    for (std::size_t i = 0; i < f.lower.size(); ++i) s += (i ? "," : "") + std::to_string(f.lower[i]);
    s += ";b=";
    for (std::size_t i = 0; i < f.upper.size(); ++i) s += (i ? "," : "") + std::to_string(f.upper[i]);
    return s;
}

}  // namespace ribbon_schur
