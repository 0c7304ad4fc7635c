#pragma once

/**
 * @file ribbons.hpp
 * @brief Outer ribbon decompositions, cutting strips, pipe vectors, the #
 * operation, canonical strip decompositions and induced ribbon flags.
 *
 * A decomposition of a connected shape is stored as one direction per
 * content. Ribbons are recovered by following successors: a cell that goes
 * up continues to the cell above when that cell is in the shape, a cell
 * that goes right continues to the cell on its right, otherwise it is a
 * tail.
 */

#include "flags.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ribbon_schur {

enum class Direction { RIGHT = 0, UP = 1 };

/// Direction of a strip factorization: vertical strips joined by → or horizontal strips joined by ↑.
enum class Canonical { RIGHT, UP };

using Pipe = std::pair<int, int>;
using PipeVector = std::vector<Pipe>;

/// True when the cells of s form a connected diagram without a 2x2 block.
inline bool is_ribbon(const RShape& s) {
    if (s.empty() || !s.is_connected()) return false;
    for (const Cell& c : s.cells())
        if (s.contains(c.row, c.col + 1) && s.contains(c.row + 1, c.col) && s.contains(c.row + 1, c.col + 1))
            return false;
    return true;
}

/// A ribbon of a decomposition, identified by the contents of its head and tail.
struct Ribbon {
    int head = 0;
    int tail = 0;
    std::vector<Cell> cells;  // head first

    int size() const { return tail - head + 1; }
    bool operator==(const Ribbon& o) const { return head == o.head && tail == o.tail && cells == o.cells; }
};

/// Value of θ_i#θ_j: a sub-ribbon of the cutting strip, the empty shape, or undefined.
struct SharpResult {
    enum class Kind { SHAPE, EMPTY, UNDEFINED };
    Kind kind = Kind::UNDEFINED;
    RShape shape;
    int lo = 0;  // content interval [lo, hi]
    int hi = 0;

    bool is_shape() const { return kind == Kind::SHAPE; }
};

/// Content interval [lo, hi] of one strip in a canonical decomposition.
struct Strip {
    int lo = 0;
    int hi = 0;
    int size() const { return hi - lo + 1; }
};

/// Cells of the r-shape Θ(p,q) laid out from a direction per content, as an r-shape with root content p.
inline RShape ribbon_from_directions(int p, const std::vector<Direction>& dirs_between) {
    std::vector<std::pair<int, int>> pos{{0, 0}};  // (row, col), rows grow downwards
    for (Direction d : dirs_between) {
        auto [r, c] = pos.back();
        pos.push_back(d == Direction::UP ? std::pair{r - 1, c} : std::pair{r, c + 1});
    }
    const int top = pos.back().first;
    const int nrows = 1 - top;
    std::vector<int> lam(nrows, 0), mu(nrows, 1 << 20);
    for (auto [r, c] : pos) {
        int i = r - top;
        lam[i] = std::max(lam[i], c + 1);
        mu[i] = std::min(mu[i], c);
    }
    return RShape(Partition(lam), Partition(mu), p);
}

/**
 * Outer decomposition of a connected r-shape whose first row and first
 * column contain cells. The contents of such a shape are exactly
 * [r, r + λ₁ + λ'₁ - 2].
 */
class OuterDecomposition {
public:
    /// dirs[c - lo] for every content c of the shape; the last entry is forced to equal the one before.
    OuterDecomposition(RShape s, std::vector<Direction> dirs) : shape_(std::move(s)), dirs_(std::move(dirs)) {
        if (!shape_.is_connected() || !shape_.is_normalized())
            throw std::invalid_argument("decomposition: shape must be connected with cells in its first row and column");
        lo_ = shape_.root_content();
        hi_ = lo_ + shape_.cols() + shape_.rows() - 2;
        if (static_cast<int>(dirs_.size()) != hi_ - lo_ + 1)
            throw std::invalid_argument("decomposition: need one direction per content");
        if (dirs_.size() >= 2) dirs_.back() = dirs_[dirs_.size() - 2];
        build_ribbons();
    }

    const RShape& shape() const { return shape_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int size() const { return static_cast<int>(ribbons_.size()); }
    Direction direction(int c) const { return dirs_.at(c - lo_); }
    const std::vector<Direction>& directions() const { return dirs_; }

    /// 1-based, ordered by head content.
    const Ribbon& ribbon(int i) const { return ribbons_.at(i - 1); }
    const std::vector<Ribbon>& ribbons() const { return ribbons_; }

    /// The cutting strip Θ(λ/μ) as an r-shape.
    RShape cutting_strip() const { return sub_ribbon(lo_, hi_).shape; }

    /// Θ(p,q) with the empty and undefined conventions.
    SharpResult sub_ribbon(int p, int q) const {
        SharpResult out;
        out.lo = p;
        out.hi = q;
        if (p == q + 1) {
            out.kind = SharpResult::Kind::EMPTY;
            return out;
        }
        if (p > q + 1) return out;
        if (p < lo_ || q > hi_) throw std::out_of_range("sub_ribbon: contents outside the shape");
        std::vector<Direction> between(dirs_.begin() + (p - lo_), dirs_.begin() + (q - lo_));
        out.kind = SharpResult::Kind::SHAPE;
        out.shape = ribbon_from_directions(p, between);
        return out;
    }

    /// θ_i#θ_j = Θ(c(δ_i), c(γ_j)).
    SharpResult sharp(int i, int j) const { return sub_ribbon(ribbon(i).head, ribbon(j).tail); }

    /// Strips of Θ(p,q): RIGHT splits where the strip goes right, UP splits where it goes up.
    std::vector<Strip> canonical_strips(int p, int q, Canonical kind) const {
        std::vector<Strip> out;
        if (p > q) return out;
        const Direction cut = kind == Canonical::RIGHT ? Direction::RIGHT : Direction::UP;
        int start = p;
        for (int c = p; c < q; ++c) {
            if (direction(c) == cut) {
                out.push_back({start, c});
                start = c + 1;
            }
        }
        out.push_back({start, q});
        return out;
    }

    /// Leftmost and rightmost cells of the shape with content c.
    Cell leftmost(int c) const { return diagonal(c).front(); }
    Cell rightmost(int c) const { return diagonal(c).back(); }

private:
    RShape shape_;
    std::vector<Direction> dirs_;
    int lo_ = 0, hi_ = 0;
    std::vector<Ribbon> ribbons_;
    std::map<int, std::vector<Cell>> diagonals_;

    const std::vector<Cell>& diagonal(int c) const {
        auto it = diagonals_.find(c);
        if (it == diagonals_.end()) throw std::out_of_range("no cell with content " + std::to_string(c));
        return it->second;
    }

    std::optional<Cell> successor(const Cell& x) const {
        if (direction(shape_.content(x)) == Direction::UP) {
            if (shape_.contains(x.row - 1, x.col)) return Cell{x.row - 1, x.col};
        } else if (shape_.contains(x.row, x.col + 1)) {
            return Cell{x.row, x.col + 1};
        }
        return std::nullopt;
    }

    void build_ribbons() {
        std::set<Cell> has_pred;
        for (const Cell& x : shape_.cells()) {
            diagonals_[shape_.content(x)].push_back(x);
            if (auto nx = successor(x)) has_pred.insert(*nx);
        }
        // cells on one diagonal, left to right
        for (auto& [c, cells] : diagonals_)
            std::sort(cells.begin(), cells.end(), [](const Cell& u, const Cell& v) { return u.col < v.col; });
        for (const Cell& x : shape_.cells()) {
            if (has_pred.count(x)) continue;
            Ribbon rib;
            rib.head = shape_.content(x);
            std::optional<Cell> cur = x;
            while (cur) {
                rib.cells.push_back(*cur);
                cur = successor(*cur);
            }
            rib.tail = shape_.content(rib.cells.back());
            ribbons_.push_back(std::move(rib));
        }
        std::sort(ribbons_.begin(), ribbons_.end(), [](const Ribbon& u, const Ribbon& v) { return u.head < v.head; });
    }
};

inline bool operator==(const OuterDecomposition& x, const OuterDecomposition& y) {
    return x.shape() == y.shape() && x.ribbons() == y.ribbons();
}

/**
 * Checks the defining properties of an outer decomposition: ribbons cover
 * the shape disjointly, heads lie on the left or bottom perimeter and tails
 * on the top or right perimeter.
 */
inline bool is_outer_decomposition(const RShape& s, const std::vector<std::vector<Cell>>& ribbons) {
    std::set<Cell> seen;
    for (const auto& cells : ribbons) {
        if (cells.empty()) return false;
        std::vector<int> lam, mu;
        int top = cells.front().row, bottom = cells.front().row, left = cells.front().col;
        for (const Cell& c : cells) {
            if (!s.contains(c) || !seen.insert(c).second) return false;
            top = std::min(top, c.row);
            bottom = std::max(bottom, c.row);
            left = std::min(left, c.col);
        }
        for (int i = top; i <= bottom; ++i) {
            int hi = 0, lo = 1 << 20;
            for (const Cell& c : cells)
                if (c.row == i) hi = std::max(hi, c.col - left + 1), lo = std::min(lo, c.col - left);
            if (hi == 0) return false;
            lam.push_back(hi);
            mu.push_back(lo);
        }
        RShape rib;
        try {
            rib = RShape(Partition(lam), Partition(mu), 0);
        } catch (const std::invalid_argument&) {
            return false;
        }
        if (!is_ribbon(rib) || rib.cell_count() != static_cast<int>(cells.size())) return false;
        Cell head = *std::min_element(cells.begin(), cells.end(), [&](const Cell& u, const Cell& v) {
            return s.content(u) < s.content(v);
        });
        Cell tail = *std::max_element(cells.begin(), cells.end(), [&](const Cell& u, const Cell& v) {
            return s.content(u) < s.content(v);
        });
        if (s.contains(head.row, head.col - 1) && s.contains(head.row + 1, head.col)) return false;
        if (s.contains(tail.row - 1, tail.col) && s.contains(tail.row, tail.col + 1)) return false;
    }
    return static_cast<int>(seen.size()) == s.cell_count();
}

inline bool is_pipe_vector(const PipeVector& pi) {
    if (pi.empty()) return false;
    for (auto [x, y] : pi)
        if ((x != 0 && x != 1) || (y != 0 && y != 1)) return false;
    for (std::size_t i = 0; i + 1 < pi.size(); ++i)
        if (pi[i].second != pi[i + 1].first) return false;
    return pi.front().first == pi.front().second && pi.back().first == pi.back().second;
}

inline OuterDecomposition pipe_to_decomposition(const RShape& s, const PipeVector& pi) {
    if (!is_pipe_vector(pi)) throw std::invalid_argument("pipe vector violates the chaining conditions");
    if (static_cast<int>(pi.size()) != s.cols() + s.rows() - 1)
        throw std::invalid_argument("pipe vector length must be λ₁ + λ'₁ - 1 = " +
                                    std::to_string(s.cols() + s.rows() - 1));
    std::vector<Direction> dirs;
    for (auto [x, y] : pi) dirs.push_back(y ? Direction::UP : Direction::RIGHT);
    return OuterDecomposition(s, std::move(dirs));
}

/**
 * Reads the directions back from the ribbons: a cell goes up when the cell
 * above belongs to its ribbon, right when the cell on its right does; tails
 * go up on the top perimeter and right on the right perimeter. The tail at
 * the top-right cell of the shape goes up when the cell below is in its
 * ribbon and right when the cell on its left is.
 */
inline PipeVector decomposition_to_pipe(const OuterDecomposition& d) {
    const RShape& s = d.shape();
    std::map<int, int> dir;
    const Cell top_right{1, s.cols()};
    for (const Ribbon& rib : d.ribbons()) {
        std::set<Cell> mine(rib.cells.begin(), rib.cells.end());
        for (const Cell& x : rib.cells) {
            int v = -1;
            if (mine.count({x.row - 1, x.col})) v = 1;
            else if (mine.count({x.row, x.col + 1})) v = 0;
            else if (x == top_right) {
                if (mine.count({x.row + 1, x.col})) v = 1;
                else if (mine.count({x.row, x.col - 1})) v = 0;
            } else if (!s.contains(x.row - 1, x.col)) v = 1;
            else if (!s.contains(x.row, x.col + 1)) v = 0;
            if (v >= 0) dir[s.content(x)] = v;
        }
    }
    const int m = d.hi() - d.lo() + 1;
    // a one-cell ribbon at the top-right corner has no direction of its own; the pipe conditions fix it
    if (!dir.count(d.hi())) dir[d.hi()] = m >= 2 ? dir.at(d.hi() - 1) : 0;
    PipeVector pi;
    pi.push_back({dir.at(d.lo()), dir.at(d.lo())});
    for (int c = d.lo() + 1; c <= d.hi(); ++c) pi.push_back({dir.at(c - 1), dir.at(c)});
    return pi;
}

inline OuterDecomposition decomposition_from_rule(const RShape& s, Direction (*rule)(int content)) {
    std::vector<Direction> dirs;
    const int lo = s.root_content(), hi = lo + s.cols() + s.rows() - 2;
    for (int c = lo; c <= hi; ++c) dirs.push_back(rule(c));
    return OuterDecomposition(s, std::move(dirs));
}

/// Ribbons are the rows.
inline OuterDecomposition horizontal_decomposition(const RShape& s) {
    return decomposition_from_rule(s, [](int) { return Direction::RIGHT; });
}

/// Ribbons are the columns.
inline OuterDecomposition vertical_decomposition(const RShape& s) {
    return decomposition_from_rule(s, [](int) { return Direction::UP; });
}

/// Hooks along the main diagonal plus vertical and horizontal strips (usual shapes).
inline OuterDecomposition hooks_and_strips_decomposition(const RShape& s) {
    return decomposition_from_rule(s, [](int c) { return c < 0 ? Direction::UP : Direction::RIGHT; });
}

inline PipeVector random_pipe(const RShape& s, std::mt19937_64& rng) {
    const int m = s.cols() + s.rows() - 1;
    std::bernoulli_distribution coin(0.5);
    std::vector<int> d(m);
    for (int i = 0; i + 1 < m; ++i) d[i] = coin(rng);
    if (m >= 2) d[m - 1] = d[m - 2];
    PipeVector pi;
    pi.push_back({d[0], d[0]});
    for (int i = 1; i < m; ++i) pi.push_back({d[i - 1], d[i]});
    return pi;
}

inline std::string format_pipe(const PipeVector& pi) {
    std::string s;
    for (std::size_t i = 0; i < pi.size(); ++i)
        s += (i ? "," : "") + ("(" + std::to_string(pi[i].first) + "," + std::to_string(pi[i].second) + ")");
    return s;
}

/// Parses "(0,0),(0,1),(1,1)".
inline PipeVector parse_pipe(const std::string& text) {
    PipeVector pi;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ',' || text[pos] == ' ') {
            ++pos;
            continue;
        }
        if (pos + 4 >= text.size() || text[pos] != '(' || text[pos + 2] != ',' || text[pos + 4] != ')')
            throw std::invalid_argument("pipe: expected (x,y) at offset " + std::to_string(pos));
        char x = text[pos + 1], y = text[pos + 3];
        if ((x != '0' && x != '1') || (y != '0' && y != '1'))
            throw std::invalid_argument("pipe: entries must be 0 or 1");
        pi.push_back({x - '0', y - '0'});
        pos += 5;
    }
    if (pi.empty()) throw std::invalid_argument("pipe: empty");
    return pi;
}

/// "Θ[p,q]" for a ribbon.
inline std::string format_ribbon(const Ribbon& r) {
    return "Θ[" + std::to_string(r.head) + "," + std::to_string(r.tail) + "]";
}

/**
 * Canonical decomposition of a ribbon into maximal strips, returned as
 * r-shapes in order. RIGHT gives vertical strips joined by →, UP gives
 * horizontal strips joined by ↑.
 */
inline std::vector<RShape> canonical_decomposition(const RShape& rib, Canonical kind) {
    if (!is_ribbon(rib)) throw std::invalid_argument("canonical_decomposition: not a ribbon");
    std::vector<Cell> by_content = rib.cells();
    std::sort(by_content.begin(), by_content.end(),
              [&](const Cell& u, const Cell& v) { return rib.content(u) < rib.content(v); });
    std::vector<RShape> out;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        int len = static_cast<int>(end - start + 1);
        int c = rib.content(by_content[start]);
        out.push_back(kind == Canonical::RIGHT ? RShape(Partition(std::vector<int>(len, 1)), {}, c)
                                               : RShape(Partition({len}), {}, c));
        start = end + 1;
    };
    for (std::size_t k = 0; k + 1 < by_content.size(); ++k) {
        bool up = by_content[k + 1].row < by_content[k].row;
        if (up == (kind == Canonical::UP)) flush(k);
    }
    flush(by_content.size() - 1);
    return out;
}

/**
 * Induced ribbon flags on θ#θ' = Θ(p,q). Column flags use the vertical
 * strips and the extremal cells m (leftmost with the top content) and M
 * (rightmost with the bottom content); row flags use the horizontal strips;
 * strict flags keep ã at the column of m. Empty or undefined intervals give
 * empty flags.
 */
inline FlagPair induced_flags_interval(const OuterDecomposition& d, const FlagPair& f, int p, int q) {
    const RShape& s = d.shape();
    const FlagKind out_kind = f.kind == FlagKind::ROW ? FlagKind::ROW : FlagKind::COLUMN;
    FlagPair out{out_kind, {}, {}};
    if (p > q) return out;
    if (f.kind == FlagKind::ROW) {
        // strips run bottom to top, row flags are indexed top to bottom
        auto strips = d.canonical_strips(p, q, Canonical::UP);
        for (auto it = strips.rbegin(); it != strips.rend(); ++it) {
            out.lower.push_back(f.a(d.leftmost(it->lo).row));
            out.upper.push_back(f.b(d.rightmost(it->hi).row));
        }
        return out;
    }
    for (const Strip& st : d.canonical_strips(p, q, Canonical::RIGHT)) {
        Cell m = d.leftmost(st.hi), big = d.rightmost(st.lo);
        if (f.kind == FlagKind::STRICT) out.lower.push_back(f.a(m.col));
        else out.lower.push_back(f.a(m.col) - (s.mu_conj(m.col) + 1) + m.row);
        out.upper.push_back(f.b(big.col) - s.lambda_conj(big.col) + big.row);
    }
    return out;
}

inline FlagPair induced_flags(const OuterDecomposition& d, const FlagPair& f, int i, int j) {
    return induced_flags_interval(d, f, d.ribbon(i).head, d.ribbon(j).tail);
}

}  // namespace ribbon_schur
