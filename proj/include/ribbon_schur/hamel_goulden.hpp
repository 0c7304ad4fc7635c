#pragma once

/**
 * @file hamel_goulden.hpp
 * @brief Hamel–Goulden determinants over outer decompositions and their
 * special cases: Jacobi–Trudi, dual Jacobi–Trudi and skew Giambelli.
 */

#include "ribbons.hpp"
#include "schur.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ribbon_schur {

/// Memo of entry polynomials keyed by shape, flags and orientation.
class EntryCache {
public:
    template <class F>
    const Polynomial& get(const std::string& key, F&& compute) {
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        return memo_.emplace(key, compute()).first->second;
    }
    std::size_t size() const { return memo_.size(); }

private:
    std::map<std::string, Polynomial> memo_;
};

struct HGEntry {
    SharpResult sharp;
    FlagPair flags;
    Polynomial value;
};

struct HGMatrix {
    int size = 0;
    std::vector<std::vector<HGEntry>> entries;

    Matrix values() const {
        Matrix m(size, std::vector<Polynomial>(size));
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) m[i][j] = entries[i][j].value;
        return m;
    }
};

/// Replaces the flagged Schur function of an entry, e.g. by an enumerator in other variables.
using EntryEvaluator = std::function<Polynomial(const RShape&, const FlagPair&)>;

namespace detail {

/// Flagged Schur function of Θ(p,q) with induced flags; S_∅ = 1 and S_undefined = 0.
inline HGEntry hg_entry(const OuterDecomposition& d, const FlagPair& f, int p, int q, EntryCache* cache,
                        const EntryEvaluator& eval = {}) {
    HGEntry e;
    e.sharp = d.sub_ribbon(p, q);
    if (e.sharp.kind == SharpResult::Kind::EMPTY) {
        e.value = 1;
        return e;
    }
    if (!e.sharp.is_shape()) return e;
    e.flags = induced_flags_interval(d, f, p, q);
    if (eval) {
        e.value = eval(e.sharp.shape, e.flags);
        return e;
    }
    const bool row = f.kind == FlagKind::ROW;
    auto compute = [&] {
        return row ? row_schur_unchecked(e.sharp.shape, e.flags) : column_schur_unchecked(e.sharp.shape, e.flags);
    };
    if (cache) {
        std::string key = e.sharp.shape.to_string() + (row ? "|R|" : "|C|") + format_flags(e.flags);
        e.value = cache->get(key, compute);
    } else {
        e.value = compute();
    }
    return e;
}

}  // namespace detail

/// [S^{a^{ij},b^{ij}}_{θ_i#θ_j}] with the column, row or strict induced flags chosen by f.kind.
inline HGMatrix hg_matrix(const OuterDecomposition& d, const FlagPair& f, EntryCache* cache = nullptr,
                          const EntryEvaluator& eval = {}) {
    if (!validate(d.shape(), f))
        throw std::invalid_argument(std::string("hamel_goulden: invalid ") + flag_kind_name(f.kind) + " flags");
    HGMatrix m;
    m.size = d.size();
    m.entries.assign(m.size, std::vector<HGEntry>(m.size));
    for (int i = 1; i <= m.size; ++i)
        for (int j = 1; j <= m.size; ++j)
            m.entries[i - 1][j - 1] = detail::hg_entry(d, f, d.ribbon(i).head, d.ribbon(j).tail, cache, eval);
    return m;
}

inline Polynomial hg_determinant(const OuterDecomposition& d, const FlagPair& f, EntryCache* cache = nullptr) {
    return determinant(hg_matrix(d, f, cache).values());
}

/// Flags of a block: columns (or rows, for row flags) shifted by the block offset.
inline FlagPair block_flags(const Block& b, const FlagPair& f) {
    const bool row = f.kind == FlagKind::ROW;
    const int n = row ? b.shape.rows() : b.shape.cols();
    const int off = row ? b.row_offset : b.col_offset;
    FlagPair out{f.kind, {}, {}};
    for (int k = 1; k <= n; ++k) {
        out.lower.push_back(f.a(k + off));
        out.upper.push_back(f.b(k + off));
    }
    return out;
}

/**
 * Hamel–Goulden evaluation of any r-shape: each block is decomposed with
 * the pipe chosen by `pick` and the block determinants are multiplied.
 */
inline Polynomial hg_determinant(const RShape& s, const FlagPair& f,
                                 const std::function<PipeVector(const RShape&)>& pick,
                                 EntryCache* cache = nullptr) {
    if (!validate(s, f))
        throw std::invalid_argument(std::string("hamel_goulden: invalid ") + flag_kind_name(f.kind) + " flags");
    Polynomial out = 1;
    for (const Block& b : block_decomposition(s)) {
        OuterDecomposition d = pipe_to_decomposition(b.shape, pick(b.shape));
        out *= hg_determinant(d, block_flags(b, f), cache);
    }
    return out;
}

enum class StripKind { H, E };

/**
 * h^{p,q}_{n,c}: sum over weakly increasing i_1..i_n with p_k <= i_k <= q_k
 * of the product of (y_{i_r} - z_{i_r + c + r - 1}).
 * e^{p',q'}_{n,c}: strictly increasing, factors (y_{i_r} - z_{i_r + c + n - r}).
 */
inline Polynomial strip_function(StripKind kind, int n, int c, const FlagPair& f) {
    if (n < 0) return 0;
    if (n == 0) return 1;
    if (f.width() < n) throw FlagWidthError("strip_function: flags narrower than the strip");
    std::map<int, Polynomial> layer;  // last index -> weighted count
    for (int r = 1; r <= n; ++r) {
        const int shift = kind == StripKind::H ? c + r - 1 : c + n - r;
        std::map<int, Polynomial> next;
        for (int t = f.a(r); t <= f.b(r); ++t) {
            Polynomial below;
            if (r == 1) {
                below = 1;
            } else {
                for (const auto& [prev, p] : layer)
                    if (kind == StripKind::H ? prev <= t : prev < t) below += p;
            }
            if (below.is_zero()) continue;
            next[t] = below * (Polynomial(y(t)) - Polynomial(z(t + shift)));
        }
        layer = std::move(next);
    }
    Polynomial out;
    for (auto& [t, p] : layer) out += p;
    return out;
}

struct FrobeniusForm {
    std::vector<int> arms;  // u_1 > u_2 > ...
    std::vector<int> legs;  // v_1 > v_2 > ...
    int rank() const { return static_cast<int>(arms.size()); }
};

inline FrobeniusForm frobenius(const Partition& p) {
    FrobeniusForm f;
    Partition c = p.conjugate();
    for (int i = 1; p[i] >= i; ++i) {
        f.arms.push_back(p[i] - i);
        f.legs.push_back(c[i] - i);
    }
    return f;
}

enum class SpecialKind { JACOBI_TRUDI, DUAL_JACOBI_TRUDI, GIAMBELLI };

/// Matrix of h-strips over the rows of a connected, normalized shape.
inline Matrix jacobi_trudi_matrix(const RShape& s, const FlagPair& f, EntryCache* cache = nullptr) {
    OuterDecomposition d = horizontal_decomposition(s);
    const int n = s.rows();
    Matrix m(n, std::vector<Polynomial>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int k = s.lambda(i) - s.mu(j) - i + j;
            int p = s.left_content(j), q = s.right_content(i);
            if (k <= 0) {
                m[i - 1][j - 1] = k == 0 ? 1 : 0;
                continue;
            }
            FlagPair g = induced_flags_interval(d, f, p, q);
            auto compute = [&] { return strip_function(StripKind::H, k, p, g); };
            m[i - 1][j - 1] = cache ? cache->get("h|" + std::to_string(k) + "|" + std::to_string(p) + "|" +
                                                     format_flags(g), compute)
                                    : compute();
        }
    }
    return m;
}

/// Matrix of e-strips over the columns of a connected, normalized shape.
inline Matrix dual_jacobi_trudi_matrix(const RShape& s, const FlagPair& f, EntryCache* cache = nullptr) {
    OuterDecomposition d = vertical_decomposition(s);
    const int n = s.cols();
    Matrix m(n, std::vector<Polynomial>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int k = s.lambda_conj(i) - s.mu_conj(j) - i + j;
            int p = s.bottom_content(i), q = s.top_content(j);
            if (k <= 0) {
                m[i - 1][j - 1] = k == 0 ? 1 : 0;
                continue;
            }
            FlagPair g = induced_flags_interval(d, f, p, q);
            auto compute = [&] { return strip_function(StripKind::E, k, p, g); };
            m[i - 1][j - 1] = cache ? cache->get("e|" + std::to_string(k) + "|" + std::to_string(p) + "|" +
                                                     format_flags(g), compute)
                                    : compute();
        }
    }
    return m;
}

/// Jacobi–Trudi-type determinant of h-strips for column flags, one factor per block.
inline Polynomial jacobi_trudi(const RShape& s, const FlagPair& f, EntryCache* cache = nullptr) {
    if (f.kind != FlagKind::COLUMN || !validate(s, f)) throw std::invalid_argument("jacobi_trudi: invalid column flags");
    Polynomial out = 1;
    for (const Block& b : block_decomposition(s))
        out *= determinant(jacobi_trudi_matrix(b.shape, block_flags(b, f), cache));
    return out;
}

/// Dual Jacobi–Trudi-type determinant of e-strips for row flags, one factor per block.
inline Polynomial dual_jacobi_trudi(const RShape& s, const FlagPair& f, EntryCache* cache = nullptr) {
    if (f.kind != FlagKind::ROW || !validate(s, f)) throw std::invalid_argument("dual_jacobi_trudi: invalid row flags");
    Polynomial out = 1;
    for (const Block& b : block_decomposition(s))
        out *= determinant(dual_jacobi_trudi_matrix(b.shape, block_flags(b, f), cache));
    return out;
}

/**
 * The hooks-and-strips block matrix of a usual shape λ/μ with λ = (u|v) and
 * μ = (c|d): rows are indexed by the heads -v_i and c_i + 1, columns by the
 * tails u_j and -d_j - 1. The lower right block is undefined, hence zero.
 */
struct GiambelliMatrix {
    int k = 0;
    int l = 0;
    HGMatrix matrix;
};

/// Empty string when λ/μ admits the hooks-and-strips decomposition, otherwise the reason.
inline std::string giambelli_obstruction(const RShape& s) {
    if (!s.is_usual()) return "shape is not a usual shape";
    if (s.empty()) return "shape is empty";
    if (!s.is_connected()) return "shape is not connected";
    FrobeniusForm lam = frobenius(s.outer()), mu = frobenius(s.inner());
    for (int i = 0; i < mu.rank(); ++i) {
        if (lam.legs[i] <= mu.legs[i]) return "vertical strip " + std::to_string(i + 1) + " is empty";
        if (lam.arms[i] <= mu.arms[i]) return "horizontal strip " + std::to_string(i + 1) + " is empty";
    }
    return "";
}

inline GiambelliMatrix giambelli_matrix(const RShape& s, const FlagPair& f, EntryCache* cache = nullptr,
                                        const EntryEvaluator& eval = {}) {
    std::string why = giambelli_obstruction(s);
    if (!why.empty()) throw std::invalid_argument("giambelli: " + why);
    if (f.kind != FlagKind::COLUMN || !validate(s, f)) throw std::invalid_argument("giambelli: invalid column flags");
    OuterDecomposition d = hooks_and_strips_decomposition(s);
    FrobeniusForm lam = frobenius(s.outer()), mu = frobenius(s.inner());
    GiambelliMatrix g;
    g.k = lam.rank();
    g.l = mu.rank();
    std::vector<int> heads, tails;
    for (int i = 0; i < g.k; ++i) heads.push_back(-lam.legs[i]);
    for (int i = 0; i < g.l; ++i) heads.push_back(mu.arms[i] + 1);
    for (int j = 0; j < g.k; ++j) tails.push_back(lam.arms[j]);
    for (int j = 0; j < g.l; ++j) tails.push_back(-mu.legs[j] - 1);
    const int n = g.k + g.l;
    g.matrix.size = n;
    g.matrix.entries.assign(n, std::vector<HGEntry>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.matrix.entries[i][j] = detail::hg_entry(d, f, heads[i], tails[j], cache, eval);
    return g;
}

/// (-1)^ℓ det of the hooks-and-strips block matrix.
inline Polynomial giambelli(const RShape& s, const FlagPair& f, EntryCache* cache = nullptr) {
    GiambelliMatrix g = giambelli_matrix(s, f, cache);
    Polynomial det = determinant(g.matrix.values());
    return g.l % 2 ? -det : det;
}

inline Polynomial special_determinant(const RShape& s, const FlagPair& f, SpecialKind kind,
                                      EntryCache* cache = nullptr) {
    switch (kind) {
        case SpecialKind::JACOBI_TRUDI: return jacobi_trudi(s, f, cache);
        case SpecialKind::DUAL_JACOBI_TRUDI: return dual_jacobi_trudi(s, f, cache);
        case SpecialKind::GIAMBELLI: return giambelli(s, f, cache);
    }
    return 0;
}

}  // namespace ribbon_schur
