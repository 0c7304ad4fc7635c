#pragma once

/**
 * @file grothendieck.hpp
 * @brief The g-specialization y/z → x, α, β and the determinantal formulas
 * for dual refined canonical stable Grothendieck polynomials
 * g_{λ/μ}(x_m; α, β).
 */

#include "hamel_goulden.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ribbon_schur {

struct GSpec {
    int m = 0;  // number of x variables
};

/// Image of one y or z variable; indices of α and β that fall to 0 or below vanish.
inline Polynomial g_image(Variable v, const GSpec& spec) {
    const int i = v.index, m = spec.m;
    auto al = [](int k) { return k <= 0 ? Polynomial(0) : Polynomial(alpha(k)); };
    auto be = [](int k) { return k <= 0 ? Polynomial(0) : Polynomial(beta(k)); };
    switch (v.alphabet) {
        case Alphabet::Y:
            if (i >= 1 && i <= m) return Polynomial(x(i));
            return i > m ? be(i - m) : -al(-i + 1);
        case Alphabet::Z:
            if (i >= 1 && i <= m) return 0;
            return i > m ? -al(i - m) : be(-i + 1);
        default:
            throw std::invalid_argument("g_specialize: unexpected variable " + v.to_string());
    }
}

inline Polynomial g_specialize(const Polynomial& p, const GSpec& spec) {
    return substitute(p, [&](Variable v) { return g_image(v, spec); });
}

inline Matrix g_specialize(const Matrix& m, const GSpec& spec) {
    Matrix out = m;
    for (auto& row : out)
        for (auto& e : row) e = g_specialize(e, spec);
    return out;
}

namespace detail {

/// x_{lo..hi} ∩ [1, m].
inline VarList xs(int lo, int hi, int m) { return window(Alphabet::X, std::max(lo, 1), std::min(hi, m)); }
/// ᾱ_{lo..hi} = (-α_lo, ..., -α_hi) with indices below 1 dropped.
inline VarList alpha_bar(int lo, int hi) { return window(Alphabet::ALPHA, std::max(lo, 1), hi, -1); }
inline VarList betas(int lo, int hi) { return window(Alphabet::BETA, std::max(lo, 1), hi); }

inline void require_usual(const RShape& s, const char* who) {
    if (!s.is_usual()) throw std::invalid_argument(std::string(who) + ": expected a usual shape");
}

}  // namespace detail

/// a_i = -i + 2, b_i = λ'_i + m - 1; these are also strict flags.
inline FlagPair canonical_g_flags(const RShape& s, int m, FlagKind kind = FlagKind::COLUMN) {
    FlagPair f{kind, {}, {}};
    for (int i = 1; i <= s.cols(); ++i) {
        f.lower.push_back(-i + 2);
        f.upper.push_back(s.lambda_conj(i) + m - 1);
    }
    return f;
}

/// a'_i = -μ_i + 1, b'_i = i + m - 1.
inline FlagPair canonical_g_row_flags(const RShape& s, int m) {
    FlagPair f{FlagKind::ROW, {}, {}};
    for (int i = 1; i <= s.rows(); ++i) {
        f.lower.push_back(-s.mu(i) + 1);
        f.upper.push_back(i + m - 1);
    }
    return f;
}

/// det[e_{λ'_i-i-μ'_j+j}(x, ᾱ_{j-1}, β_{λ'_i-1} / ᾱ_{i-1}, β_{μ'_j})] with n = λ_1.
inline Polynomial g_direct(const RShape& s, int m) {
    detail::require_usual(s, "g_direct");
    const int n = s.cols();
    Matrix mat(n, std::vector<Polynomial>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int k = s.lambda_conj(i) - i - s.mu_conj(j) + j;
            VarList top = concat({detail::xs(1, m, m), detail::alpha_bar(1, j - 1), detail::betas(1, s.lambda_conj(i) - 1)});
            VarList bottom = concat({detail::alpha_bar(1, i - 1), detail::betas(1, s.mu_conj(j))});
            mat[i - 1][j - 1] = e_super(k, top, bottom);
        }
    }
    return determinant(mat);
}

/**
 * Flagged dual Grothendieck enumerator in closed form: the determinant of
 * e(x_{u_j,v_i}, ᾱ_{τ(b_i),τ(a_j)}, β_{η(a_j),η(b_i)} / ᾱ_{η(a'_j),η(b'_i)}, β_{τ(b'_i),τ(a'_j)})
 * with τ(k) = 1 - k, η(k) = k - m and a', b' the conjugate flags.
 */
inline Polynomial g_enumerator(const RShape& s, const FlagPair& f, const GSpec& spec) {
    if (f.kind == FlagKind::ROW) throw std::invalid_argument("g_enumerator: expected column flags");
    if (s.empty()) return 1;
    const int n = s.cols(), m = spec.m;
    if (f.width() < n) throw FlagWidthError("g_enumerator: flags narrower than the shape");
    auto tau = [](int k) { return -k + 1; };
    auto eta = [m](int k) { return k - m; };
    Matrix mat(n, std::vector<Polynomial>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int k = s.lambda_conj(i) - i - s.mu_conj(j) + j;
            if (k < 0) continue;
            const int a = f.a(j), b = f.b(i);
            const int ap = a + s.top_content(j), bp = b + s.bottom_content(i);
            VarList top = concat({detail::xs(a, b, m), detail::alpha_bar(tau(b), tau(a)), detail::betas(eta(a), eta(b))});
            VarList bottom = concat({detail::alpha_bar(eta(ap), eta(bp)), detail::betas(tau(bp), tau(ap))});
            mat[i - 1][j - 1] = e_super(k, top, bottom);
        }
    }
    return determinant(mat);
}

/// det[h_{λ_i-μ_j-i+j}(x, ᾱ_{μ_j}, β_{i-1} / ᾱ_{λ_i-1}, β_{j-1})] over the rows of λ.
inline Polynomial known_jacobi_trudi(const RShape& s, int m) {
    detail::require_usual(s, "known_jacobi_trudi");
    const int n = s.rows();
    Matrix mat(n, std::vector<Polynomial>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int k = s.lambda(i) - s.mu(j) - i + j;
            VarList top = concat({detail::xs(1, m, m), detail::alpha_bar(1, s.mu(j)), detail::betas(1, i - 1)});
            VarList bottom = concat({detail::alpha_bar(1, s.lambda(i) - 1), detail::betas(1, j - 1)});
            mat[i - 1][j - 1] = h_super(k, top, bottom);
        }
    }
    return determinant(mat);
}

/**
 * Closed-form induced flags under the canonical g flags on a usual shape:
 * a_r = -c(m_r) - μ'_{col(m_r)} + 1 (strict: -col(m_r) + 2), b_r = row(M_r) + m - 1.
 */
inline FlagPair g_induced_flags(const OuterDecomposition& d, int m, int i, int j, bool strict = false) {
    const RShape& s = d.shape();
    detail::require_usual(s, "g_induced_flags");
    FlagPair out{FlagKind::COLUMN, {}, {}};
    SharpResult r = d.sharp(i, j);
    if (!r.is_shape()) return out;
    for (const Strip& st : d.canonical_strips(r.lo, r.hi, Canonical::RIGHT)) {
        Cell lo = d.leftmost(st.hi), hi = d.rightmost(st.lo);
        out.lower.push_back(strict ? -lo.col + 2 : -s.content(lo) - s.mu_conj(lo.col) + 1);
        out.upper.push_back(hi.row + m - 1);
    }
    return out;
}

enum class GRoute { HAMEL_GOULDEN, JACOBI_TRUDI, DUAL_JACOBI_TRUDI, GIAMBELLI };

inline const char* g_route_name(GRoute r) {
    switch (r) {
        case GRoute::HAMEL_GOULDEN: return "hg";
        case GRoute::JACOBI_TRUDI: return "jt";
        case GRoute::DUAL_JACOBI_TRUDI: return "dual-jt";
        case GRoute::GIAMBELLI: return "giambelli";
    }
    return "?";
}

using PipePicker = std::function<PipeVector(const RShape&)>;

/**
 * g_{λ/μ}(x_m; α, β) through one of the determinantal routes. Ribbon entries
 * are flagged dual Grothendieck enumerators; strip entries are specialized
 * h and e strips. `pick` chooses the pipe of each block for the HG route and
 * defaults to the vertical decomposition.
 */
inline Polynomial g_formula(const RShape& s, int m, GRoute route, const PipePicker& pick = {}) {
    detail::require_usual(s, "g_formula");
    const GSpec spec{m};
    EntryEvaluator eval = [&](const RShape& t, const FlagPair& f) { return g_enumerator(t, f, spec); };
    if (route == GRoute::GIAMBELLI) {
        GiambelliMatrix g = giambelli_matrix(s, canonical_g_flags(s, m), nullptr, eval);
        Polynomial det = determinant(g.matrix.values());
        return g.l % 2 ? -det : det;
    }
    const FlagPair f = route == GRoute::DUAL_JACOBI_TRUDI ? canonical_g_row_flags(s, m) : canonical_g_flags(s, m);
    Polynomial out = 1;
    for (const Block& b : block_decomposition(s)) {
        FlagPair fb = block_flags(b, f);
        switch (route) {
            case GRoute::HAMEL_GOULDEN: {
                OuterDecomposition d = pick ? pipe_to_decomposition(b.shape, pick(b.shape)) : vertical_decomposition(b.shape);
                out *= determinant(hg_matrix(d, fb, nullptr, eval).values());
                break;
            }
            case GRoute::JACOBI_TRUDI:
                out *= determinant(g_specialize(jacobi_trudi_matrix(b.shape, fb), spec));
                break;
            case GRoute::DUAL_JACOBI_TRUDI:
                out *= determinant(g_specialize(dual_jacobi_trudi_matrix(b.shape, fb), spec));
                break;
            case GRoute::GIAMBELLI: break;
        }
    }
    return out;
}

/// α → 0 and β → 1, the specialization to dual stable Grothendieck polynomials g_λ(x).
inline Polynomial alpha0_beta1(const Polynomial& p) {
    return substitute(p, [](Variable v) -> Polynomial {
        if (v.alphabet == Alphabet::ALPHA) return 0;
        if (v.alphabet == Alphabet::BETA) return 1;
        return Polynomial(v);
    });
}

/// Generalized binomial coefficient, C(n, k) = n(n-1)...(n-k+1)/k! for any integer n.
inline Integer binomial(int n, int k) {
    if (k < 0) return 0;
    Integer num = 1, den = 1;
    for (int t = 0; t < k; ++t) {
        num *= n - t;
        den *= t + 1;
    }
    return num / den;
}

/// g_{u|v}(x_m) at α = 0, β = 1 for the hook (u+1, 1^v).
inline Polynomial hook_g(int u, int v, int m) {
    std::vector<int> parts{u + 1};
    for (int t = 0; t < v; ++t) parts.push_back(1);
    return alpha0_beta1(g_direct(RShape::usual(Partition(parts)), m));
}

/**
 * Constant term of the hook entry: Σ_{t=2}^{min(i,j)} C(u+i-t, u) C(v+j-t, v).
 * Starting the sum at t = 0 adds terms that make the (1,1) entry differ from
 * g_{u|v}; the range from 2 matches the enumerator entries of the hook matrix.
 */
inline Integer lascoux_naruse_constant(int u, int v, int i, int j) {
    Integer c = 0;
    for (int t = 2; t <= std::min(i, j); ++t) c += binomial(u + i - t, u) * binomial(v + j - t, v);
    return c;
}

/// Σ_{p≤u} Σ_{q≤v} C(p+i-2, p) C(q+j-2, q) g_{u-p|v-q}(x_m) plus lascoux_naruse_constant.
inline Polynomial lascoux_naruse_hook(int u, int v, int i, int j, int m) {
    if (u < 0 || v < 0 || i < 1 || j < 1) throw std::invalid_argument("lascoux_naruse_hook: need u, v >= 0 and i, j >= 1");
    Polynomial out(lascoux_naruse_constant(u, v, i, j));
    for (int p = 0; p <= u; ++p) {
        for (int q = 0; q <= v; ++q) {
            Integer w = binomial(p + i - 2, p) * binomial(q + j - 2, q);
            if (w != 0) out += Polynomial(w) * hook_g(u - p, v - q, m);
        }
    }
    return out;
}

/// det[g^{(j,i)}_{u_j|v_i}(x_m)] over the Durfee square of a straight shape.
inline Polynomial lascoux_naruse(const Partition& lambda, int m) {
    FrobeniusForm f = frobenius(lambda);
    const int k = f.rank();
    Matrix mat(k, std::vector<Polynomial>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) mat[i][j] = lascoux_naruse_hook(f.arms[j], f.legs[i], j + 1, i + 1, m);
    return determinant(mat);
}

}  // namespace ribbon_schur
