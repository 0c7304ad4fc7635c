#pragma once

/**
 * @file symfunc.hpp
 * @brief Elementary and complete homogeneous (super)symmetric functions over
 * finite signed variable lists.
 */

#include "algebra.hpp"

#include <vector>

namespace ribbon_schur {

/// A variable together with a sign; sign -1 realizes the overline (negated) alphabet.
struct SignedVar {
    Variable var;
    int sign = 1;

    Polynomial value() const {
        Polynomial p(var);
        return sign < 0 ? -p : p;
    }
};

using VarList = std::vector<SignedVar>;

/// The variables v_lo, ..., v_hi of one alphabet; empty when lo > hi.
struct VarWindow {
    Alphabet alphabet = Alphabet::Y;
    int lo = 1;
    int hi = 0;
    int sign = 1;

    bool empty() const { return lo > hi; }
    int width() const { return empty() ? 0 : hi - lo + 1; }

    VarList vars() const {
        VarList out;
        for (int i = lo; i <= hi; ++i) out.push_back({Variable{alphabet, i}, sign});
        return out;
    }
};

inline VarList window(Alphabet a, int lo, int hi, int sign = 1) { return VarWindow{a, lo, hi, sign}.vars(); }

inline VarList concat(std::initializer_list<VarList> parts) {
    VarList out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

/// e_0, ..., e_k of the variable list.
inline std::vector<Polynomial> e_sym_all(int k, const VarList& vars) {
    if (k < 0) return {};
    std::vector<Polynomial> e(k + 1, Polynomial(0));
    e[0] = 1;
    int seen = 0;
    for (const auto& v : vars) {
        ++seen;
        Polynomial x = v.value();
        for (int d = std::min(k, seen); d >= 1; --d) e[d] += x * e[d - 1];
    }
    return e;
}

/// h_0, ..., h_k of the variable list.
inline std::vector<Polynomial> h_sym_all(int k, const VarList& vars) {
    if (k < 0) return {};
    std::vector<Polynomial> h(k + 1, Polynomial(0));
    h[0] = 1;
    for (const auto& v : vars) {
        Polynomial x = v.value();
        for (int d = 1; d <= k; ++d) h[d] += x * h[d - 1];
    }
    return h;
}

inline Polynomial e_sym(int k, const VarList& vars) {
    if (k < 0) return 0;
    return e_sym_all(k, vars)[k];
}

inline Polynomial h_sym(int k, const VarList& vars) {
    if (k < 0) return 0;
    return h_sym_all(k, vars)[k];
}

/// e_k(xs / ys) = sum_i (-1)^{k-i} e_i(xs) h_{k-i}(ys).
inline Polynomial e_super(int k, const VarList& xs, const VarList& ys) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    auto e = e_sym_all(k, xs);
    auto h = h_sym_all(k, ys);
    Polynomial out;
    for (int i = 0; i <= k; ++i) {
        if (e[i].is_zero() || h[k - i].is_zero()) continue;
        Polynomial t = e[i] * h[k - i];
        if ((k - i) % 2) out -= t;
        else out += t;
    }
    return out;
}

/// h_k(xs / ys) = sum_i (-1)^{k-i} h_i(xs) e_{k-i}(ys).
inline Polynomial h_super(int k, const VarList& xs, const VarList& ys) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    auto h = h_sym_all(k, xs);
    auto e = e_sym_all(k, ys);
    Polynomial out;
    for (int i = 0; i <= k; ++i) {
        if (h[i].is_zero() || e[k - i].is_zero()) continue;
        Polynomial t = h[i] * e[k - i];
        if ((k - i) % 2) out -= t;
        else out += t;
    }
    return out;
}

inline VarList negated(VarList vs) {
    for (auto& v : vs) v.sign = -v.sign;
    return vs;
}

/// Power series in t with polynomial coefficients, truncated at degree N.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order, Polynomial constant = 1) : coeffs_(order + 1, Polynomial(0)) {
        coeffs_[0] = std::move(constant);
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Polynomial& operator[](int n) const { return coeffs_.at(n); }

    /// Multiply by (1 + c t).
    void multiply_linear(const Polynomial& c) {
        for (int n = order(); n >= 1; --n) coeffs_[n] += c * coeffs_[n - 1];
    }

    /// Divide by (1 + c t): q_n = p_n - c q_{n-1}.
    void divide_linear(const Polynomial& c) {
        for (int n = 1; n <= order(); ++n) coeffs_[n] -= c * coeffs_[n - 1];
    }

private:
    std::vector<Polynomial> coeffs_;
};

/// prod (1 + x t) / prod (1 + y t) up to t^N.
inline TruncatedSeries e_generating_series(int order, const VarList& xs, const VarList& ys) {
    TruncatedSeries s(order);
    for (const auto& v : xs) s.multiply_linear(v.value());
    for (const auto& v : ys) s.divide_linear(v.value());
    return s;
}

/// prod (1 - y t) / prod (1 - x t) up to t^N.
inline TruncatedSeries h_generating_series(int order, const VarList& xs, const VarList& ys) {
    TruncatedSeries s(order);
    for (const auto& v : ys) s.multiply_linear(-v.value());
    for (const auto& v : xs) s.divide_linear(-v.value());
    return s;
}

}  // namespace ribbon_schur
