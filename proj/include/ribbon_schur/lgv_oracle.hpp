#pragma once

/**
 * @file lgv_oracle.hpp
 * @brief The flagged Z-lattice and super lattice of a connected r-shape with
 * a pipe vector, path enumeration, the path-to-tableau map and LGV checks.
 * Used as an oracle independent of the determinant code.
 */

#include "hamel_goulden.hpp"
#include "ribbons.hpp"
#include "tableaux.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace ribbon_schur {

using Node = std::pair<int, int>;  // (x, y) = (content, height)

struct LatticeEdge {
    Node from;
    Node to;
    bool horizontal = false;
};

class Lattice {
public:
    Lattice() = default;

    /// Z-lattice (weighted = false) or super lattice (weighted = true) of a connected, normalized r-shape.
    Lattice(const RShape& s, const PipeVector& pi, const FlagPair& f, bool weighted)
        : weighted_(weighted) {
        if (s.empty()) return;
        if (f.kind == FlagKind::ROW) throw std::invalid_argument("lattice: expected column flags");
        if (!validate(s, f)) throw std::invalid_argument("lattice: invalid flags");
        decomposition_ = pipe_to_decomposition(s, pi);
        pi_ = pi;
        r_ = s.root_content();
        width_ = s.cols() + s.rows() - 1;
        delta_ = r_ - 1 + s.lambda_conj(1);
        const OuterDecomposition& d = *decomposition_;
        for (int c = r_; c < r_ + width_; ++c) {
            Cell lo = d.leftmost(c), hi = d.rightmost(c);
            abar_[c] = f.a(lo.col) - (s.mu_conj(lo.col) + 1) + lo.row;
            bbar_[c] = f.b(hi.col) - s.lambda_conj(hi.col) + hi.row;
            f_[c] = offset(c);
        }
        for (int i = r_; i < r_ + width_; ++i) {
            const int lo = abar_[i] + f_[i], hi = bbar_[i] + f_[i];
            for (int j = lo; j <= hi; ++j) add_edge({i, j}, {i + 1, j}, true);
        }
        for (int x = r_; x <= r_ + width_; ++x) add_verticals(x);
        for (const Ribbon& rib : d.ribbons()) {
            const int h = rib.head, t = rib.tail;
            starts_.push_back({h, (pipe(h).first == 0 ? abar_[h] : bbar_[h]) + f_[h]});
            ends_.push_back({t + 1, (pipe(t).second == 0 ? bbar_[t] : abar_[t]) + f_[t]});
        }
    }

    bool weighted() const { return weighted_; }
    int size() const { return static_cast<int>(starts_.size()); }
    /// 1-based endpoints C_i and D_i.
    Node start(int i) const { return starts_.at(i - 1); }
    Node end(int i) const { return ends_.at(i - 1); }
    const OuterDecomposition& decomposition() const { return *decomposition_; }

    int f(int c) const { return f_.at(c); }
    int abar(int c) const { return abar_.at(c); }
    int bbar(int c) const { return bbar_.at(c); }
    /// True when column x of the lattice lies in an e-region, i.e. π(x) = (0, ·).
    bool in_e_region(int x) const { return pipe(std::min(x, r_ + width_ - 1)).first == 0; }

    const std::map<Node, std::vector<LatticeEdge>>& adjacency() const { return out_; }

    std::vector<Node> nodes() const {
        std::set<Node> all;
        for (const auto& [v, es] : out_) {
            all.insert(v);
            for (const auto& e : es) all.insert(e.to);
        }
        return {all.begin(), all.end()};
    }

    std::vector<LatticeEdge> edges() const {
        std::vector<LatticeEdge> all;
        for (const auto& [v, es] : out_) all.insert(all.end(), es.begin(), es.end());
        return all;
    }

    /// Entry read off a horizontal edge leaving column x at height y.
    int entry(int x, int y) const { return y - f_.at(x); }

    /// y_w - z_{w+x} on the super lattice, 1 on the Z-lattice and on vertical edges.
    Polynomial weight(const LatticeEdge& e) const {
        if (!weighted_ || !e.horizontal) return 1;
        const int w = entry(e.from.first, e.from.second);
        return Polynomial(y(w)) - Polynomial(z(w + e.from.first));
    }

private:
    bool weighted_ = false;
    std::optional<OuterDecomposition> decomposition_;
    PipeVector pi_;
    int r_ = 0, width_ = 0, delta_ = 0;
    std::map<int, int> abar_, bbar_, f_;
    std::map<Node, std::vector<LatticeEdge>> out_;
    std::vector<Node> starts_, ends_;

    /// π(i) = π_{i-r+1}.
    const Pipe& pipe(int i) const { return pi_.at(i - r_); }

    int offset(int c) const {
        int n = 0;
        if (c > delta_) {
            for (int i = delta_ + 1; i <= c; ++i) n += pipe(i).first == 1;
            return n;
        }
        for (int i = c; i < delta_; ++i) n += pipe(i).second == 1;
        return -n;
    }

    void add_edge(Node u, Node v, bool horizontal) { out_[u].push_back({u, v, horizontal}); }

    /**
     * Vertical edges in column x. They span the heights of contents x - 1
     * and x, so a path can both arrive from the left and leave to the right,
     * or finish at an endpoint D placed by content x - 1.
     */
    void add_verticals(int x) {
        int lo = INT_MAX, hi = INT_MIN;
        for (int i : {x - 1, x}) {
            if (i < r_ || i >= r_ + width_) continue;
            lo = std::min(lo, abar_[i] + f_[i]);
            hi = std::max(hi, bbar_[i] + f_[i]);
        }
        if (pipe(std::min(x, r_ + width_ - 1)).first == 0) {
            for (int j = lo; j < hi; ++j) add_edge({x, j}, {x, j + 1}, false);
        } else {
            for (int j = lo + 1; j <= hi; ++j) add_edge({x, j}, {x, j - 1}, false);
        }
    }
};

inline Lattice build_lattice(const RShape& s, const PipeVector& pi, const FlagPair& f, bool weighted) {
    return Lattice(s, pi, f, weighted);
}

struct LatticePath {
    std::vector<Node> nodes;
    std::vector<int> entries;  // one per horizontal edge, left to right
    Polynomial weight = 1;
};

namespace detail {

inline void walk_paths(const Lattice& l, Node v, Node target, LatticePath& cur, std::vector<LatticePath>& out) {
    if (v == target) {
        out.push_back(cur);
        return;
    }
    auto it = l.adjacency().find(v);
    if (it == l.adjacency().end()) return;
    for (const LatticeEdge& e : it->second) {
        if (e.to.first > target.first) continue;
        Polynomial before = cur.weight;
        cur.nodes.push_back(e.to);
        if (e.horizontal) {
            cur.entries.push_back(l.entry(v.first, v.second));
            cur.weight *= l.weight(e);
        }
        walk_paths(l, e.to, target, cur, out);
        cur.nodes.pop_back();
        if (e.horizontal) cur.entries.pop_back();
        cur.weight = std::move(before);
    }
}

}  // namespace detail

/// All directed paths C_i → D_j with their entries and weights.
inline std::vector<LatticePath> enumerate_paths(const Lattice& l, int i, int j) {
    std::vector<LatticePath> out;
    LatticePath cur;
    cur.nodes.push_back(l.start(i));
    detail::walk_paths(l, l.start(i), l.end(j), cur, out);
    return out;
}

/// wt(C_i, D_j): sum of path weights, by memoized recursion over the acyclic lattice.
inline Polynomial path_enumerator(const Lattice& l, int i, int j) {
    const Node target = l.end(j);
    std::map<Node, Polynomial> memo;
    std::function<Polynomial(Node)> sum = [&](Node v) -> Polynomial {
        if (v == target) return 1;
        auto m = memo.find(v);
        if (m != memo.end()) return m->second;
        Polynomial total;
        auto it = l.adjacency().find(v);
        if (it != l.adjacency().end())
            for (const LatticeEdge& e : it->second)
                if (e.to.first <= target.first) total += l.weight(e) * sum(e.to);
        memo.emplace(v, total);
        return total;
    };
    return sum(l.start(i));
}

inline Matrix enumerator_matrix(const Lattice& l) {
    const int k = l.size();
    Matrix m(k, std::vector<Polynomial>(k));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) m[i - 1][j - 1] = path_enumerator(l, i, j);
    return m;
}

/**
 * The tableau of a system of paths P_i: C_i → D_i, read ribbon by ribbon:
 * the cell of content c in θ_i receives the entry of the horizontal edge of
 * P_i leaving column c.
 */
inline ZSSYT system_to_tableau(const Lattice& l, const std::vector<LatticePath>& system) {
    const OuterDecomposition& d = l.decomposition();
    ZSSYT t = detail::empty_filling(d.shape());
    for (int i = 1; i <= l.size(); ++i) {
        const Ribbon& rib = d.ribbon(i);
        const LatticePath& p = system.at(i - 1);
        if (static_cast<int>(p.entries.size()) != static_cast<int>(rib.cells.size()))
            throw std::invalid_argument("system_to_tableau: path does not match its ribbon");
        // ribbon cells run from the head (lowest content) to the tail
        for (std::size_t k = 0; k < rib.cells.size(); ++k) t.at(rib.cells[k].row, rib.cells[k].col) = p.entries[k];
    }
    return t;
}

struct SystemCount {
    Integer count = 0;
    Polynomial weight;  // sum of wt(P) over the systems
};

/**
 * Vertex-disjoint systems P_i: C_i → D_{σ(i)} (σ 0-based), found by
 * backtracking with occupied vertices. `visit` sees each complete system.
 */
inline SystemCount nonintersecting_systems(const Lattice& l, const std::vector<int>& sigma,
                                           const std::function<void(const std::vector<LatticePath>&)>& visit = {}) {
    const int k = l.size();
    SystemCount out;
    PolynomialAccumulator acc;
    std::set<Node> used;
    std::vector<LatticePath> system(k);
    std::function<void(int, const Polynomial&)> place;
    std::function<void(int, Node, Node, const Polynomial&)> extend = [&](int i, Node v, Node target,
                                                                          const Polynomial& w) {
        if (v == target) {
            place(i + 1, w);
            return;
        }
        auto it = l.adjacency().find(v);
        if (it == l.adjacency().end()) return;
        for (const LatticeEdge& e : it->second) {
            if (e.to.first > target.first || used.count(e.to)) continue;
            used.insert(e.to);
            system[i].nodes.push_back(e.to);
            if (e.horizontal) system[i].entries.push_back(l.entry(v.first, v.second));
            extend(i, e.to, target, e.horizontal && l.weighted() ? w * l.weight(e) : w);
            if (e.horizontal) system[i].entries.pop_back();
            system[i].nodes.pop_back();
            used.erase(e.to);
        }
    };
    place = [&](int i, const Polynomial& w) {
        if (i == k) {
            ++out.count;
            acc.add(w);
            if (visit) visit(system);
            return;
        }
        Node s = l.start(i + 1);
        if (used.count(s)) return;
        used.insert(s);
        system[i] = LatticePath{{s}, {}, 1};
        extend(i, s, l.end(sigma.at(i) + 1), w);
        used.erase(s);
    };
    place(0, Polynomial(1));
    out.weight = acc.take();
    return out;
}

struct LGVReport {
    Integer nonintersecting = 0;  // on the Z-lattice
    Integer tableaux = 0;         // |ZT(a, b)|
    bool bijective = false;       // distinct valid tableaux, one per system
    Polynomial super_sum;         // Σ wt over nonintersecting super-lattice systems
    Polynomial determinant;       // det[wt(C_i, D_j)]
    Polynomial schur;             // flagged Schur function
    int permutations_checked = 0;
    int intersecting_failures = 0;  // σ ≠ id with a nonintersecting system

    bool ok() const {
        return nonintersecting == tableaux && bijective && super_sum == determinant && determinant == schur &&
               intersecting_failures == 0;
    }
};

/// All three LGV checks on one connected, normalized shape; σ ≠ id is tried when k <= max_perm_size.
inline LGVReport lgv_verify(const RShape& s, const PipeVector& pi, const FlagPair& f, int max_perm_size = 3) {
    LGVReport rep;
    Lattice zl(s, pi, f, false), sl(s, pi, f, true);
    const int k = zl.size();
    std::vector<int> id(k);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<std::vector<int>>> seen;
    bool valid = true;
    SystemCount zc = nonintersecting_systems(zl, id, [&](const std::vector<LatticePath>& sys) {
        ZSSYT t = system_to_tableau(zl, sys);
        valid = valid && is_flagged_zssyt(s, f, t);
        seen.insert(t.rows);
    });
    rep.nonintersecting = zc.count;
    rep.tableaux = count_zssyt(s, f);
    rep.bijective = valid && Integer(seen.size()) == zc.count;
    rep.super_sum = nonintersecting_systems(sl, id).weight;
    rep.determinant = determinant(enumerator_matrix(sl));
    rep.schur = flagged_schur(s, f);
    if (k <= max_perm_size) {
        std::vector<int> sigma = id;
        while (std::next_permutation(sigma.begin(), sigma.end())) {
            ++rep.permutations_checked;
            if (nonintersecting_systems(zl, sigma).count != 0) ++rep.intersecting_failures;
        }
    }
    return rep;
}

/// lgv_verify on every block of an arbitrary r-shape, with the pipe of each block chosen by `pick`.
inline std::vector<LGVReport> lgv_verify_blocks(const RShape& s, const FlagPair& f,
                                                const std::function<PipeVector(const RShape&)>& pick,
                                                int max_perm_size = 3) {
    std::vector<LGVReport> out;
    for (const Block& b : block_decomposition(s)) out.push_back(lgv_verify(b.shape, pick(b.shape), block_flags(b, f), max_perm_size));
    return out;
}

/// Line-oriented dump: endpoints, then nodes, then edges, each in sorted order.
inline std::string format_lattice(const Lattice& l) {
    std::ostringstream os;
    for (int i = 1; i <= l.size(); ++i)
        os << "C " << i << " " << l.start(i).first << " " << l.start(i).second << "\n";
    for (int i = 1; i <= l.size(); ++i) os << "D " << i << " " << l.end(i).first << " " << l.end(i).second << "\n";
    for (const Node& v : l.nodes()) os << "node " << v.first << " " << v.second << "\n";
    for (const LatticeEdge& e : l.edges()) {
        os << "edge " << e.from.first << " " << e.from.second << " " << e.to.first << " " << e.to.second << " "
           << (e.horizontal ? "H" : "V");
        if (l.weighted() && e.horizontal) os << " " << format_canonical(l.weight(e));
        os << "\n";
    }
    return os.str();
}

}  // namespace ribbon_schur
