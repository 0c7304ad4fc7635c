#pragma once

/**
 * @file shapes.hpp
 * @brief Partitions, skew shapes with a root content (r-shapes), and blocks.
 */

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ribbon_schur {

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("partition: negative part");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition: parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// 1-based part; zero beyond the length.
    int operator[](int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

    Partition conjugate() const {
        std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++c[j];
        return Partition(c);
    }

    bool contains(const Partition& mu) const {
        for (int i = 1; i <= mu.length(); ++i)
            if (mu[i] > (*this)[i]) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s;
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

/**
 * Skew shape outer/inner together with the root content r, the content of
 * the bottom-left position (outer'_1, 1). Content of (i,j) is
 * j - i + r - 1 + outer'_1.
 */
class RShape {
public:
    RShape() = default;
    RShape(Partition outer, Partition inner, int root)
        : outer_(std::move(outer)), inner_(std::move(inner)), root_(root) {
        if (!outer_.contains(inner_)) throw std::invalid_argument("r-shape: inner partition not contained in outer");
        outer_conj_ = outer_.conjugate();
        inner_conj_ = inner_.conjugate();
    }

    /// Usual skew shape: r = 1 - outer'_1, so contents are j - i.
    static RShape usual(Partition outer, Partition inner = {}) {
        int h = outer.conjugate()[1];
        return RShape(std::move(outer), std::move(inner), 1 - h);
    }

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    const Partition& outer_conj() const { return outer_conj_; }
    const Partition& inner_conj() const { return inner_conj_; }
    int root_content() const { return root_; }

    int rows() const { return outer_.length(); }
    int cols() const { return outer_[1]; }
    int lambda(int i) const { return outer_[i]; }
    int mu(int i) const { return inner_[i]; }
    int lambda_conj(int j) const { return outer_conj_[j]; }
    int mu_conj(int j) const { return inner_conj_[j]; }

    bool is_usual() const { return root_ == 1 - outer_conj_[1]; }

    int content(int i, int j) const { return j - i + root_ - 1 + outer_conj_[1]; }
    int content(Cell c) const { return content(c.row, c.col); }

    bool contains(int i, int j) const {
        return i >= 1 && j >= 1 && i <= rows() && j <= lambda(i) && j > mu(i);
    }
    bool contains(Cell c) const { return contains(c.row, c.col); }

    int cell_count() const { return outer_.size() - inner_.size(); }
    bool empty() const { return cell_count() == 0; }

    /// Cells in row-major order.
    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (int i = 1; i <= rows(); ++i)
            for (int j = mu(i) + 1; j <= lambda(i); ++j) out.push_back({i, j});
        return out;
    }

    /// Contents of the virtual top and bottom cells of column j.
    int top_content(int j) const { return content(mu_conj(j) + 1, j); }
    int bottom_content(int j) const { return content(lambda_conj(j), j); }
    /// Contents of the virtual leftmost and rightmost cells of row i.
    int left_content(int i) const { return content(i, mu(i) + 1); }
    int right_content(int i) const { return content(i, lambda(i)); }

    bool is_connected() const;

    /// True when the first row and the first column both contain cells.
    bool is_normalized() const { return !empty() && mu(1) < lambda(1) && inner_.length() < rows(); }

    std::string to_string() const {
        std::string s = outer_.to_string();
        if (!inner_.empty()) s += "/" + inner_.to_string();
        s += "@r=" + std::to_string(root_);
        return s;
    }

    bool operator==(const RShape& o) const {
        return outer_ == o.outer_ && inner_ == o.inner_ && root_ == o.root_;
    }

private:
    Partition outer_, inner_, outer_conj_, inner_conj_;
    int root_ = 1;
};

inline int content(const RShape& s, Cell c) { return s.content(c); }

/// Conjugate r-shape (outer', inner', -r') with r' the content of the top-right position of outer.
inline RShape conjugate_rshape(const RShape& s) {
    int top_right = s.content(1, s.cols());
    return RShape(s.outer().conjugate(), s.inner().conjugate(), -top_right);
}

/// A connected component of an r-shape, with its offset inside the ambient diagram.
struct Block {
    RShape shape;
    int row_offset = 0;
    int col_offset = 0;
};

namespace detail {

inline std::vector<std::vector<Cell>> components(const RShape& s) {
    std::set<Cell> seen;
    std::vector<std::vector<Cell>> out;
    for (const Cell& start : s.cells()) {
        if (seen.count(start)) continue;
        std::vector<Cell> comp;
        std::queue<Cell> q;
        q.push(start);
        seen.insert(start);
        while (!q.empty()) {
            Cell c = q.front();
            q.pop();
            comp.push_back(c);
            const Cell nbrs[4] = {{c.row - 1, c.col}, {c.row + 1, c.col}, {c.row, c.col - 1}, {c.row, c.col + 1}};
            for (const Cell& n : nbrs)
                if (s.contains(n) && seen.insert(n).second) q.push(n);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace detail

inline bool RShape::is_connected() const { return detail::components(*this).size() == 1; }

/// Edge-connected components, ordered from bottom-left to top-right.
inline std::vector<Block> block_decomposition(const RShape& s) {
    std::vector<Block> out;
    for (const auto& comp : detail::components(s)) {
        int i0 = comp[0].row, i1 = comp[0].row, j0 = comp[0].col;
        for (const Cell& c : comp) {
            i0 = std::min(i0, c.row);
            i1 = std::max(i1, c.row);
            j0 = std::min(j0, c.col);
        }
        std::vector<int> lam, mu;
        for (int i = i0; i <= i1; ++i) {
            lam.push_back(s.lambda(i) - (j0 - 1));
            mu.push_back(std::max(0, s.mu(i) - (j0 - 1)));
        }
        RShape b(Partition(lam), Partition(mu), s.content(i1, j0));
        out.push_back({b, i0 - 1, j0 - 1});
    }
    std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) { return a.col_offset < b.col_offset; });
    return out;
}

inline std::vector<RShape> blocks(const RShape& s) {
    std::vector<RShape> out;
    for (auto& b : block_decomposition(s)) out.push_back(b.shape);
    return out;
}

/// Parses "4,4,4,2/2,1@r=-3"; inner part and root content are optional.
inline RShape parse_shape(const std::string& text) {
    auto parse_parts = [](const std::string& t) {
        std::vector<int> v;
        if (t.empty()) return Partition{};
        std::stringstream ss(t);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t used = 0;
            int value = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument("shape: bad part '" + item + "'");
            v.push_back(value);
        }
        return Partition(v);
    };
    std::string body = text;
    std::optional<int> root;
    auto at = body.find('@');
    if (at != std::string::npos) {
        std::string r = body.substr(at + 1);
        body = body.substr(0, at);
        if (r.rfind("r=", 0) != 0) throw std::invalid_argument("shape: expected @r=<int>");
        std::size_t used = 0;
        root = std::stoi(r.substr(2), &used);
        if (used != r.size() - 2) throw std::invalid_argument("shape: bad root content");
    }
    std::string outer = body, inner;
    auto slash = body.find('/');
    if (slash != std::string::npos) {
        outer = body.substr(0, slash);
        inner = body.substr(slash + 1);
    }
    Partition lam = parse_parts(outer), mu = parse_parts(inner);
    if (root) return RShape(lam, mu, *root);
    return RShape::usual(lam, mu);
}

}  // namespace ribbon_schur
