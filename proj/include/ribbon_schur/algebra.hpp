#pragma once

/**
 * @file algebra.hpp
 * @brief Sparse multivariate polynomials with big-integer coefficients.
 *
 * Variables come from five doubly-infinite alphabets (y, z, x, alpha, beta).
 * A monomial is stored as the sorted list of its variable codes with
 * repetition, so x[1]^2*y[3] is {code(y3), code(x1), code(x1)}.
 */

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ribbon_schur {

using Integer = boost::multiprecision::cpp_int;

enum class Alphabet : std::uint8_t { Y = 0, Z = 1, X = 2, ALPHA = 3, BETA = 4 };

inline const char* alphabet_name(Alphabet a) {
    switch (a) {
        case Alphabet::Y: return "y";
        case Alphabet::Z: return "z";
        case Alphabet::X: return "x";
        case Alphabet::ALPHA: return "alpha";
        case Alphabet::BETA: return "beta";
    }
    return "?";
}

struct Variable {
    Alphabet alphabet = Alphabet::Y;
    int index = 0;

    static constexpr int index_bias = 1 << 12;

    /// 16-bit code: alphabet in the top three bits, biased index below.
    std::uint16_t code() const {
        if (index <= -index_bias || index >= index_bias)
            throw std::out_of_range("variable index out of range: " + std::to_string(index));
        return static_cast<std::uint16_t>((static_cast<unsigned>(alphabet) << 13) |
                                          static_cast<unsigned>(index + index_bias));
    }
    static Variable from_code(std::uint16_t c) {
        return {static_cast<Alphabet>(c >> 13), static_cast<int>(c & 0x1FFFu) - index_bias};
    }
    std::string to_string() const {
        return std::string(alphabet_name(alphabet)) + "[" + std::to_string(index) + "]";
    }
    auto operator<=>(const Variable&) const = default;
};

inline Variable y(int i) { return {Alphabet::Y, i}; }
inline Variable z(int i) { return {Alphabet::Z, i}; }
inline Variable x(int i) { return {Alphabet::X, i}; }
inline Variable alpha(int i) { return {Alphabet::ALPHA, i}; }
inline Variable beta(int i) { return {Alphabet::BETA, i}; }

class Monomial {
public:
    using storage = boost::container::small_vector<std::uint16_t, 16>;

    Monomial() = default;
    explicit Monomial(Variable v, unsigned exponent = 1) { codes_.assign(exponent, v.code()); }

    unsigned degree() const { return static_cast<unsigned>(codes_.size()); }
    bool is_unit() const { return codes_.empty(); }
    const storage& codes() const { return codes_; }

    /// (variable, exponent) pairs in increasing variable order.
    std::vector<std::pair<Variable, unsigned>> factors() const {
        std::vector<std::pair<Variable, unsigned>> out;
        for (std::size_t i = 0; i < codes_.size();) {
            std::size_t j = i;
            while (j < codes_.size() && codes_[j] == codes_[i]) ++j;
            out.emplace_back(Variable::from_code(codes_[i]), static_cast<unsigned>(j - i));
            i = j;
        }
        return out;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.codes_.resize(a.codes_.size() + b.codes_.size());
        std::merge(a.codes_.begin(), a.codes_.end(), b.codes_.begin(), b.codes_.end(), r.codes_.begin());
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.codes_ == b.codes_; }

    /// Total order: higher degree first, then lexicographic on the factor sequence.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.codes_.size() != b.codes_.size()) return a.codes_.size() > b.codes_.size();
        return std::lexicographical_compare(a.codes_.begin(), a.codes_.end(), b.codes_.begin(), b.codes_.end());
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ codes_.size();
        for (auto c : codes_) h = (h ^ c) * 0x100000001b3ull;
        return static_cast<std::size_t>(h ^ (h >> 29));
    }

    std::string to_string() const {
        std::string s;
        for (const auto& [v, e] : factors()) {
            if (!s.empty()) s += "*";
            s += v.to_string();
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    storage codes_;
};


/**
 * Polynomial with integer coefficients. Terms are kept sorted by the
 * Monomial order with no zero coefficients, so structural equality is
 * polynomial equality.
 */
class Polynomial {
public:
    using term = std::pair<Monomial, Integer>;

    Polynomial() = default;
    Polynomial(long long c) { if (c != 0) terms_.emplace_back(Monomial{}, Integer(c)); }
    Polynomial(const Integer& c) { if (c != 0) terms_.emplace_back(Monomial{}, c); }
    Polynomial(Variable v) { terms_.emplace_back(Monomial(v), Integer(1)); }
    Polynomial(const Monomial& m, const Integer& c) { if (c != 0) terms_.emplace_back(m, c); }

    static Polynomial from_terms(std::vector<term> ts) {
        Polynomial p;
        std::sort(ts.begin(), ts.end(), [](const term& a, const term& b) { return a.first < b.first; });
        for (auto& t : ts) {
            if (!p.terms_.empty() && p.terms_.back().first == t.first) p.terms_.back().second += t.second;
            else p.terms_.push_back(std::move(t));
            if (p.terms_.back().second == 0) p.terms_.pop_back();
        }
        return p;
    }

    /// Every term multiplied by the monomial m and the coefficient c; order is preserved.
    Polynomial shifted(const Monomial& m, const Integer& c) const {
        Polynomial r;
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, c == 1 ? t.second : Integer(t.second * c));
        return r;
    }

    /// Sum of many polynomials by pairwise merging.
    static Polynomial merge_all(std::vector<Polynomial> runs) {
        if (runs.empty()) return {};
        while (runs.size() > 1) {
            std::vector<Polynomial> next;
            next.reserve((runs.size() + 1) / 2);
            for (std::size_t i = 0; i + 1 < runs.size(); i += 2)
                next.push_back(merge_owned(std::move(runs[i]), std::move(runs[i + 1]), false));
            if (runs.size() % 2) next.push_back(std::move(runs.back()));
            runs = std::move(next);
        }
        return std::move(runs[0]);
    }

    const std::vector<term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first.is_unit() && terms_[0].second == 1; }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.first.degree());
        return d;
    }

    Integer coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const term& t, const Monomial& k) { return t.first < k; });
        if (it != terms_.end() && it->first == m) return it->second;
        return 0;
    }

    Integer constant_term() const { return coefficient(Monomial{}); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
    Polynomial& operator+=(const Polynomial& b) { return *this = merge_owned(std::move(*this), Polynomial(b), false); }
    Polynomial& operator-=(const Polynomial& b) { return *this = merge_owned(std::move(*this), Polynomial(b), true); }
    Polynomial& operator+=(Polynomial&& b) { return *this = merge_owned(std::move(*this), std::move(b), false); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.size() == 1 && a.terms_[0].first.is_unit()) return b.scaled(a.terms_[0].second);
        if (b.size() == 1 && b.terms_[0].first.is_unit()) return a.scaled(b.terms_[0].second);
        if (a.size() == 1 || b.size() == 1) {
            // a single monomial factor preserves distinctness, only the order may change
            const Polynomial& one = a.size() == 1 ? a : b;
            const Polynomial& many = a.size() == 1 ? b : a;
            std::vector<term> ts;
            ts.reserve(many.size());
            for (const auto& t : many.terms_)
                ts.emplace_back(t.first * one.terms_[0].first, t.second * one.terms_[0].second);
            return from_terms(std::move(ts));
        }
        // the order is a monomial order, so each shifted copy of the longer factor stays sorted
        const Polynomial& small = a.size() <= b.size() ? a : b;
        const Polynomial& big = a.size() <= b.size() ? b : a;
        std::vector<Polynomial> runs;
        runs.reserve(small.size());
        for (const auto& t : small.terms_) runs.push_back(big.shifted(t.first, t.second));
        return merge_all(std::move(runs));
    }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    Polynomial scaled(const Integer& k) const {
        if (k == 0) return {};
        Polynomial r = *this;
        for (auto& t : r.terms_) t.second *= k;
        return r;
    }

    Polynomial pow(unsigned e) const {
        Polynomial result(1), base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return result;
    }

    /// Variables occurring in the polynomial, sorted.
    std::vector<Variable> variables() const {
        std::vector<std::uint16_t> codes;
        for (const auto& t : terms_) codes.insert(codes.end(), t.first.codes().begin(), t.first.codes().end());
        std::sort(codes.begin(), codes.end());
        codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
        std::vector<Variable> out;
        for (auto c : codes) out.push_back(Variable::from_code(c));
        return out;
    }

    /// Canonical text: terms by total degree descending, then lexicographic.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            bool neg = c < 0;
            Integer mag = neg ? Integer(-c) : c;
            if (first) s += neg ? "-" : "";
            else s += neg ? " - " : " + ";
            first = false;
            if (m.is_unit()) s += mag.str();
            else {
                if (mag != 1) s += mag.str() + "*";
                s += m.to_string();
            }
        }
        return s;
    }

private:
    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        Polynomial r;
        r.terms_.reserve(a.size() + b.size());
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
                r.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->first < i->first) {
                r.terms_.emplace_back(j->first, subtract ? Integer(-j->second) : j->second);
                ++j;
            } else {
                Integer c = subtract ? Integer(i->second - j->second) : Integer(i->second + j->second);
                if (c != 0) r.terms_.emplace_back(i->first, std::move(c));
                ++i;
                ++j;
            }
        }
        return r;
    }

    /// Like merge, but moves monomials and coefficients out of the operands.
    static Polynomial merge_owned(Polynomial&& a, Polynomial&& b, bool subtract) {
        if (b.terms_.empty()) return std::move(a);
        if (a.terms_.empty()) return subtract ? -b : std::move(b);
        Polynomial r;
        r.terms_.reserve(a.size() + b.size());
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
                r.terms_.push_back(std::move(*i++));
            } else if (i == a.terms_.end() || j->first < i->first) {
                if (subtract) j->second = -j->second;
                r.terms_.push_back(std::move(*j++));
            } else {
                if (subtract) i->second -= j->second;
                else i->second += j->second;
                if (i->second != 0) r.terms_.push_back(std::move(*i));
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<term> terms_;
};

/**
 * Sums many polynomials (or products) by keeping a stack of sorted runs whose
 * sizes shrink towards the top, merging like a binary counter.
 */
class PolynomialAccumulator {
public:
    void add(Polynomial p, bool negate = false) {
        if (p.is_zero()) return;
        push(negate ? -p : std::move(p));
    }

    void add_product(const Polynomial& a, const Polynomial& b, bool negate = false) {
        if (a.is_zero() || b.is_zero()) return;
        const Polynomial& small = a.size() <= b.size() ? a : b;
        const Polynomial& big = a.size() <= b.size() ? b : a;
        for (const auto& [m, c] : small.terms()) push(big.shifted(m, negate ? Integer(-c) : c));
    }

    Polynomial take() {
        Polynomial r = Polynomial::merge_all(std::move(stack_));
        stack_.clear();
        return r;
    }

private:
    void push(Polynomial p) {
        stack_.push_back(std::move(p));
        while (stack_.size() > 1 && stack_[stack_.size() - 2].size() <= 2 * stack_.back().size()) {
            Polynomial top = std::move(stack_.back());
            stack_.pop_back();
            stack_.back() += std::move(top);
        }
    }

    std::vector<Polynomial> stack_;
};

enum class RingOp { ADD, SUB, MUL };

inline Polynomial ring_op(const Polynomial& a, const Polynomial& b, RingOp op) {
    switch (op) {
        case RingOp::ADD: return a + b;
        case RingOp::SUB: return a - b;
        case RingOp::MUL: return a * b;
    }
    return {};
}

/// Parses the canonical text form (whitespace is ignored).
inline Polynomial parse_polynomial(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("polynomial parse error at " + std::to_string(pos) + ": " + what);
    };
    auto read_int = [&]() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected digits");
        return Integer(s.substr(start, pos - start));
    };
    auto read_factor = [&]() -> Polynomial {
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) return Polynomial(read_int());
        static const std::pair<const char*, Alphabet> names[] = {
            {"alpha", Alphabet::ALPHA}, {"beta", Alphabet::BETA}, {"x", Alphabet::X},
            {"y", Alphabet::Y}, {"z", Alphabet::Z}};
        for (const auto& [name, a] : names) {
            std::string_view n(name);
            if (s.compare(pos, n.size(), n) == 0 && pos + n.size() < s.size() && s[pos + n.size()] == '[') {
                pos += n.size() + 1;
                bool neg = false;
                if (pos < s.size() && s[pos] == '-') { neg = true; ++pos; }
                Integer idx = read_int();
                if (pos >= s.size() || s[pos] != ']') fail("expected ]");
                ++pos;
                int index = static_cast<int>(idx) * (neg ? -1 : 1);
                unsigned e = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    e = static_cast<unsigned>(read_int());
                }
                return Polynomial(Monomial(Variable{a, index}, e), Integer(1));
            }
        }
        fail("unknown token");
        return {};
    };
    Polynomial total;
    if (s.empty()) fail("empty input");
    while (pos < s.size()) {
        bool neg = false;
        if (s[pos] == '+' || s[pos] == '-') { neg = s[pos] == '-'; ++pos; }
        else if (pos != 0) fail("expected + or -");
        Polynomial t = read_factor();
        while (pos < s.size() && s[pos] == '*') {
            ++pos;
            t *= read_factor();
        }
        total = neg ? total - t : total + t;
    }
    return total;
}

/**
 * Canonical text form: terms by total degree descending, then descending
 * lexicographic order with x > y > z > alpha > beta and smaller indices
 * first. Factors inside a term are listed by (name, index).
 */
inline std::string format_canonical(const Polynomial& p) {
    if (p.is_zero()) return "0";
    auto rank = [](Variable v) {
        static const int order[] = {1, 2, 0, 3, 4};  // indexed by Alphabet: y, z, x, alpha, beta
        return std::pair<int, int>(order[static_cast<int>(v.alphabet)], v.index);
    };
    struct Row {
        unsigned degree = 0;
        std::vector<std::pair<std::pair<int, int>, unsigned>> lex;
        const Polynomial::term* t = nullptr;
    };
    std::vector<Row> rows;
    for (const auto& t : p.terms()) {
        Row r{t.first.degree(), {}, &t};
        for (const auto& [v, e] : t.first.factors()) r.lex.emplace_back(rank(v), e);
        std::sort(r.lex.begin(), r.lex.end());
        rows.push_back(std::move(r));
    }
    auto lex_greater = [](const Row& a, const Row& b) {
        for (std::size_t k = 0; k < a.lex.size() && k < b.lex.size(); ++k) {
            if (a.lex[k].first != b.lex[k].first) return a.lex[k].first < b.lex[k].first;
            if (a.lex[k].second != b.lex[k].second) return a.lex[k].second > b.lex[k].second;
        }
        return a.lex.size() > b.lex.size();
    };
    std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
        if (a.degree != b.degree) return a.degree > b.degree;
        return lex_greater(a, b);
    });
    std::string s;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& [m, c] = *rows[k].t;
        const bool neg = c < 0;
        const Integer mag = neg ? Integer(-c) : c;
        s += k == 0 ? (neg ? "-" : "") : (neg ? " - " : " + ");
        auto fs = m.factors();
        std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
            const std::string na = alphabet_name(a.first.alphabet), nb = alphabet_name(b.first.alphabet);
            return na != nb ? na < nb : a.first.index < b.first.index;
        });
        std::string body;
        for (const auto& [v, e] : fs) {
            if (!body.empty()) body += "*";
            body += v.to_string();
            if (e > 1) body += "^" + std::to_string(e);
        }
        if (body.empty()) s += mag.str();
        else s += (mag != 1 ? mag.str() + "*" : std::string()) + body;
    }
    return s;
}

using VariableMap = std::map<Variable, Polynomial>;

/// Ring homomorphism image; unmapped variables pass through unchanged.
inline Polynomial substitute(const Polynomial& p, const std::function<Polynomial(Variable)>& image) {
    std::map<std::uint16_t, Polynomial> cache;
    auto img = [&](std::uint16_t code) -> const Polynomial& {
        auto it = cache.find(code);
        if (it == cache.end()) it = cache.emplace(code, image(Variable::from_code(code))).first;
        return it->second;
    };
    std::vector<Polynomial::term> acc;
    for (const auto& [m, c] : p.terms()) {
        Polynomial t(c);
        for (const auto& [v, e] : m.factors()) {
            const Polynomial& base = img(v.code());
            t *= e == 1 ? base : base.pow(e);
            if (t.is_zero()) break;
        }
        if (t.is_zero()) continue;
        for (const auto& tt : t.terms()) acc.push_back(tt);
    }
    return Polynomial::from_terms(std::move(acc));
}

inline Polynomial substitute(const Polynomial& p, const VariableMap& map) {
    return substitute(p, [&](Variable v) -> Polynomial {
        auto it = map.find(v);
        return it == map.end() ? Polynomial(v) : it->second;
    });
}

using Matrix = std::vector<std::vector<Polynomial>>;

namespace detail {

inline void check_square(const Matrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("determinant: matrix is not square");
}

inline void permutation_expand(const Matrix& m, std::size_t row, unsigned used, bool odd,
                               const Polynomial& partial, PolynomialAccumulator& acc) {
    const std::size_t n = m.size();
    if (row == n) {
        acc.add(partial, odd);
        return;
    }
    for (std::size_t c = 0; c < n; ++c) {
        if (used & (1u << c)) continue;
        if (m[row][c].is_zero()) continue;
        // inversions contributed: already used columns greater than c
        unsigned higher = static_cast<unsigned>(__builtin_popcount(used >> (c + 1)));
        bool sign = odd ^ (higher & 1u);
        if (row + 1 == n) acc.add_product(partial, m[row][c], sign);
        else permutation_expand(m, row + 1, used | (1u << c), sign, partial * m[row][c], acc);
    }
}

}  // namespace detail

/// Leibniz expansion over all permutations, skipping zero entries.
inline Polynomial determinant_by_permutations(const Matrix& m) {
    detail::check_square(m);
    if (m.size() > 16) throw std::invalid_argument("determinant: matrix too large for permutation expansion");
    if (m.empty()) return 1;
    PolynomialAccumulator acc;
    detail::permutation_expand(m, 0, 0, false, Polynomial(1), acc);
    return acc.take();
}

namespace detail {

/**
 * Transposes when the heaviest line (by term count) is a column, then sorts
 * rows by ascending weight. Large entries then meet only the final, small
 * minors. Returns the reordered matrix and whether the row permutation is odd.
 */
inline std::pair<Matrix, bool> light_rows_first(const Matrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> rw(n, 0), cw(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            rw[i] += m[i][j].size();
            cw[j] += m[i][j].size();
        }
    const bool transpose = n && *std::max_element(cw.begin(), cw.end()) > *std::max_element(rw.begin(), rw.end());
    const std::vector<std::size_t>& w = transpose ? cw : rw;
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
    bool odd = false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) odd ^= order[i] > order[j];
    Matrix out(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = transpose ? m[j][order[i]] : m[order[i]][j];
    return {std::move(out), odd};
}

}  // namespace detail

/// Laplace expansion along rows, memoized over the set of used columns.
inline Polynomial determinant_by_laplace(const Matrix& input) {
    detail::check_square(input);
    auto [m, odd] = detail::light_rows_first(input);
    const std::size_t n = m.size();
    if (n > 24) throw std::invalid_argument("determinant: matrix too large");
    // minor[S] = det of the first |S| rows restricted to columns S
    std::unordered_map<unsigned, Polynomial> minor;
    minor[0] = Polynomial(1);
    std::vector<unsigned> layer{0};
    for (std::size_t row = 0; row < n; ++row) {
        std::unordered_map<unsigned, PolynomialAccumulator> next;
        for (unsigned s : layer) {
            const Polynomial& base = minor[s];
            if (base.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (s & (1u << c) || m[row][c].is_zero()) continue;
                unsigned higher = static_cast<unsigned>(__builtin_popcount(s >> (c + 1)));
                next[s | (1u << c)].add_product(base, m[row][c], higher & 1u);
            }
        }
        layer.clear();
        minor.clear();
        for (auto& [s, p] : next) {
            layer.push_back(s);
            minor.emplace(s, p.take());
        }
    }
    auto it = minor.find(n == 0 ? 0u : (n >= 32 ? ~0u : ((1u << n) - 1u)));
    if (it == minor.end()) return {};
    return odd ? -it->second : it->second;
}

inline Polynomial determinant(const Matrix& m) {
    detail::check_square(m);
    return m.size() <= 2 ? determinant_by_permutations(m) : determinant_by_laplace(m);
}

}  // namespace ribbon_schur
