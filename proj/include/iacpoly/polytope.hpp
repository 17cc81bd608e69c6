#pragma once

// H-representation polytopes with exact vertex enumeration and volume.
//
// Vertices come from exhaustive enumeration of linearly independent
// d-subsets of the constraints (depth-first, pruning dependent prefixes).
// Volume uses a pulling triangulation: the polytope is coned from its
// lowest-index vertex over every facet not containing it, recursively, and
// each resulting simplex contributes |det(v_i - v_0)| / d!.

#include <algorithm>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "iacpoly/errors.hpp"
#include "iacpoly/linalg.hpp"
#include "iacpoly/rational.hpp"

namespace iacpoly {

enum class Relation { LessEq, GreaterEq, Equal };

inline const char* to_string(Relation r) {
    switch (r) {
        case Relation::LessEq: return "<=";
        case Relation::GreaterEq: return ">=";
        case Relation::Equal: return "=";
    }
    return "?";
}

inline Relation flip(Relation r) {
    if (r == Relation::LessEq) return Relation::GreaterEq;
    if (r == Relation::GreaterEq) return Relation::LessEq;
    return r;
}

struct HalfSpace {
    QVector coefficients;
    Relation relation = Relation::LessEq;
    Rational rhs;

    [[nodiscard]] std::size_t dim() const { return coefficients.size(); }
    [[nodiscard]] bool is_equality() const { return relation == Relation::Equal; }

    [[nodiscard]] bool satisfied_by(const QVector& x) const {
        const Rational lhs = dot(coefficients, x);
        switch (relation) {
            case Relation::LessEq: return lhs <= rhs;
            case Relation::GreaterEq: return lhs >= rhs;
            case Relation::Equal: return lhs == rhs;
        }
        return false;
    }

    [[nodiscard]] bool tight_at(const QVector& x) const { return dot(coefficients, x) == rhs; }

    [[nodiscard]] bool is_zero_row() const {
        return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& c) { return c.is_zero(); });
    }

    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Scales to coprime integer coefficients whose first nonzero entry is positive.
inline HalfSpace normalized(HalfSpace h) {
    BigInt den = 1;
    for (const auto& c : h.coefficients) den = lcm(den, c.denominator());
    BigInt g = 0;
    for (const auto& c : h.coefficients) g = gcd(g, c.numerator() * (den / c.denominator()));
    if (g == 0) return h;
    Rational scale(den, g);
    auto lead = std::find_if(h.coefficients.begin(), h.coefficients.end(),
                             [](const Rational& c) { return !c.is_zero(); });
    if (lead->sign() < 0) {
        scale = -scale;
        h.relation = flip(h.relation);
    }
    for (auto& c : h.coefficients) c *= scale;
    h.rhs *= scale;
    return h;
}

/// x_var = constant + sum coeffs[j] x_j, in the coordinates of the reduced space.
struct Substitution {
    std::size_t var = 0;
    QVector coeffs;
    Rational constant;
    bool lattice_preserving = false;
};

class HPolytope {
public:
    HPolytope() = default;
    explicit HPolytope(std::size_t dim) : dim_(dim) {}
    HPolytope(std::size_t dim, const std::vector<HalfSpace>& constraints) : dim_(dim) {
        for (const auto& h : constraints) add(h);
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::vector<HalfSpace>& constraints() const { return constraints_; }
    [[nodiscard]] std::size_t size() const { return constraints_.size(); }
    [[nodiscard]] const std::vector<Substitution>& eliminated() const { return eliminated_; }

    /// Adds a constraint after normalization. Vacuous rows (0 rel rhs, true)
    /// are dropped; duplicates are ignored.
    HPolytope& add(HalfSpace h) {
        if (h.dim() != dim_) throw DimensionError("constraint has " + std::to_string(h.dim()) +
                                                  " coefficients, polytope dimension is " + std::to_string(dim_));
        if (h.is_zero_row()) {
            if (h.satisfied_by(QVector(dim_))) return *this;
            h.rhs = h.relation == Relation::GreaterEq ? Rational(1) : Rational(-1);
            if (h.relation == Relation::Equal) h.rhs = 1;
        } else {
            h = normalized(std::move(h));
        }
        if (std::find(constraints_.begin(), constraints_.end(), h) == constraints_.end())
            constraints_.push_back(std::move(h));
        return *this;
    }
    HPolytope& add_le(QVector c, Rational rhs) { return add({std::move(c), Relation::LessEq, std::move(rhs)}); }
    HPolytope& add_ge(QVector c, Rational rhs) { return add({std::move(c), Relation::GreaterEq, std::move(rhs)}); }
    HPolytope& add_eq(QVector c, Rational rhs) { return add({std::move(c), Relation::Equal, std::move(rhs)}); }

    void record_elimination(Substitution s) { eliminated_.push_back(std::move(s)); }

    [[nodiscard]] bool has_equalities() const {
        return std::any_of(constraints_.begin(), constraints_.end(), [](const HalfSpace& h) { return h.is_equality(); });
    }

    /// Same set of constraints, order ignored.
    [[nodiscard]] bool same_constraints(const HPolytope& o) const {
        if (dim_ != o.dim_ || constraints_.size() != o.constraints_.size()) return false;
        return std::all_of(constraints_.begin(), constraints_.end(), [&](const HalfSpace& h) {
            return std::find(o.constraints_.begin(), o.constraints_.end(), h) != o.constraints_.end();
        });
    }

private:
    std::size_t dim_ = 0;
    std::vector<HalfSpace> constraints_;
    std::vector<Substitution> eliminated_;
};

struct VPolytope {
    std::size_t dim = 0;
    std::vector<QVector> vertices;
};

/// Signed inclusion-exclusion decomposition of a union of polytopes.
struct EventRegion {
    struct Term {
        int sign = 1;
        HPolytope polytope;
    };
    std::vector<Term> terms;

    EventRegion() = default;
    explicit EventRegion(HPolytope p) { terms.push_back({1, std::move(p)}); }

    [[nodiscard]] std::size_t dim() const { return terms.empty() ? 0 : terms.front().polytope.dim(); }
};

// ---------------------------------------------------------------------------
// Construction helpers

inline HPolytope standard_simplex(std::size_t d) {
    HPolytope p(d);
    for (std::size_t i = 0; i < d; ++i) {
        QVector e(d);
        e[i] = 1;
        p.add_ge(e, 0);
    }
    p.add_le(QVector(d, Rational(1)), 1);
    return p;
}

inline HPolytope unit_cube(std::size_t d) {
    HPolytope p(d);
    for (std::size_t i = 0; i < d; ++i) {
        QVector e(d);
        e[i] = 1;
        p.add_ge(e, 0);
        p.add_le(e, 1);
    }
    return p;
}

inline bool contains(const HPolytope& p, const QVector& x) {
    if (x.size() != p.dim()) throw DimensionError("contains: point dimension differs from polytope");
    return std::all_of(p.constraints().begin(), p.constraints().end(),
                       [&](const HalfSpace& h) { return h.satisfied_by(x); });
}

inline HPolytope intersect(const HPolytope& p, const HPolytope& q) {
    if (p.dim() != q.dim()) throw DimensionError("intersect: dimensions differ");
    HPolytope out(p.dim(), p.constraints());
    for (const auto& h : q.constraints()) out.add(h);
    if (p.eliminated() == q.eliminated() || q.eliminated().empty())
        for (const auto& s : p.eliminated()) out.record_elimination(s);
    return out;
}

inline bool operator==(const Substitution& a, const Substitution& b) {
    return a.var == b.var && a.coeffs == b.coeffs && a.constant == b.constant;
}

/// Applies a coordinate relabeling: variable i of `p` becomes variable perm[i].
inline HPolytope permute_coordinates(const HPolytope& p, const std::vector<std::size_t>& perm) {
    if (perm.size() != p.dim()) throw DimensionError("permutation length differs from dimension");
    HPolytope out(p.dim());
    for (const auto& h : p.constraints()) {
        QVector c(p.dim());
        for (std::size_t i = 0; i < p.dim(); ++i) c[perm[i]] = h.coefficients[i];
        out.add({std::move(c), h.relation, h.rhs});
    }
    return out;
}

/// Uses an equality with a nonzero coefficient on `var` to substitute that
/// variable out of every other constraint. The result lives in dimension d-1
/// (coordinate `var` removed); the substitution is recorded on the result.
inline HPolytope eliminate_equality(const HPolytope& p, std::size_t var) {
    if (var >= p.dim()) throw DimensionError("eliminate_equality: variable index out of range");
    const auto& cs = p.constraints();
    auto eq = std::find_if(cs.begin(), cs.end(),
                           [&](const HalfSpace& h) { return h.is_equality() && !h.coefficients[var].is_zero(); });
    if (eq == cs.end())
        throw GeometryError("eliminate_equality: no equality constraint involves x" + std::to_string(var + 1));

    // x_var = (rhs - sum_{j != var} a_j x_j) / a_var
    const Rational a_var = eq->coefficients[var];
    Substitution sub;
    sub.var = var;
    sub.constant = eq->rhs / a_var;
    bool integral = abs(a_var) == Rational(1) && eq->rhs.is_integer();
    for (std::size_t j = 0; j < p.dim(); ++j) {
        if (j == var) continue;
        sub.coeffs.push_back(-eq->coefficients[j] / a_var);
        integral = integral && sub.coeffs.back().is_integer();
    }
    sub.lattice_preserving = integral;

    HPolytope out(p.dim() - 1);
    for (auto it = cs.begin(); it != cs.end(); ++it) {
        if (it == eq) continue;
        const Rational k = it->coefficients[var];
        QVector c;
        c.reserve(p.dim() - 1);
        for (std::size_t j = 0, r = 0; j < p.dim(); ++j) {
            if (j == var) continue;
            c.push_back(it->coefficients[j] + k * sub.coeffs[r++]);
        }
        out.add({std::move(c), it->relation, it->rhs - k * sub.constant});
    }
    for (const auto& s : p.eliminated()) out.record_elimination(s);
    out.record_elimination(std::move(sub));
    return out;
}

/// Maps a point of the reduced space back through the most recent elimination.
inline QVector lift(const Substitution& s, const QVector& reduced) {
    QVector full;
    full.reserve(reduced.size() + 1);
    const Rational v = s.constant + dot(s.coeffs, reduced);
    for (std::size_t j = 0; j <= reduced.size(); ++j) {
        if (j == s.var) full.push_back(v);
        if (j < reduced.size()) full.push_back(reduced[j]);
    }
    return full;
}

// ---------------------------------------------------------------------------
// Vertex enumeration

inline constexpr std::size_t kMaxConstraints = 256;
using ConstraintSet = std::bitset<kMaxConstraints>;

namespace detail {

// Incrementally built reduced row echelon form over the rationals. Each row
// has `width` entries; pivots are searched among the first `coef_cols`.
class Echelon {
public:
    Echelon(std::size_t coef_cols, std::size_t width) : coef_cols_(coef_cols), width_(width) {}

    enum class Add { Independent, Redundant, Inconsistent };

    Add add(QVector w) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational f = w[pivots_[i]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < width_; ++j)
                if (!rows_[i][j].is_zero()) w[j] -= f * rows_[i][j];
        }
        std::size_t p = 0;
        while (p < coef_cols_ && w[p].is_zero()) ++p;
        if (p == coef_cols_) {
            for (std::size_t j = coef_cols_; j < width_; ++j)
                if (!w[j].is_zero()) return Add::Inconsistent;
            return Add::Redundant;
        }
        const Rational inv = Rational(1) / w[p];
        for (std::size_t j = 0; j < width_; ++j)
            if (!w[j].is_zero()) w[j] *= inv;
        for (auto& r : rows_) {
            const Rational f = r[p];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < width_; ++j)
                if (!w[j].is_zero()) r[j] -= f * w[j];
        }
        rows_.push_back(std::move(w));
        pivots_.push_back(p);
        return Add::Independent;
    }

    [[nodiscard]] std::size_t rank() const { return rows_.size(); }

    // Unique solution once rank == coef_cols (augmented column at coef_cols).
    [[nodiscard]] QVector solution() const {
        QVector x(coef_cols_);
        for (std::size_t i = 0; i < rows_.size(); ++i) x[pivots_[i]] = rows_[i][coef_cols_];
        return x;
    }

    // Basis of {y : row . y = 0 for all rows}, homogeneous part only.
    [[nodiscard]] std::vector<QVector> null_space() const {
        std::vector<bool> is_pivot(coef_cols_, false);
        for (auto p : pivots_) is_pivot[p] = true;
        std::vector<QVector> basis;
        for (std::size_t f = 0; f < coef_cols_; ++f) {
            if (is_pivot[f]) continue;
            QVector y(coef_cols_);
            y[f] = 1;
            for (std::size_t i = 0; i < rows_.size(); ++i) y[pivots_[i]] = -rows_[i][f];
            basis.push_back(std::move(y));
        }
        return basis;
    }

private:
    std::size_t coef_cols_;
    std::size_t width_;
    std::vector<QVector> rows_;
    std::vector<std::size_t> pivots_;
};

struct Enumeration {
    std::vector<QVector> vertices;
    std::vector<ConstraintSet> tight;  // per vertex
};

inline QVector augmented(const HalfSpace& h) {
    QVector w = h.coefficients;
    w.push_back(h.rhs);
    return w;
}

inline void check_capacity(const HPolytope& p) {
    if (p.size() > kMaxConstraints)
        throw DimensionError("polytope has " + std::to_string(p.size()) + " constraints; at most " +
                             std::to_string(kMaxConstraints) + " supported");
}

// Enumerates vertices of {constraints} when the constraint normals span R^d.
inline Enumeration enumerate_pointed(const HPolytope& p) {
    check_capacity(p);
    const std::size_t d = p.dim();
    const auto& cs = p.constraints();
    Enumeration out;
    Echelon base(d, d + 1);
    std::vector<std::size_t> free_rows;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].is_equality()) {
            if (base.add(augmented(cs[i])) == Echelon::Add::Inconsistent) return out;
        } else {
            free_rows.push_back(i);
        }
    }
    std::map<QVector, std::size_t> seen;
    auto visit = [&](auto&& self, const Echelon& e, std::size_t start) -> void {
        if (e.rank() == d) {
            QVector x = e.solution();
            if (seen.count(x)) return;
            for (const auto& h : cs)
                if (!h.satisfied_by(x)) return;
            seen.emplace(x, out.vertices.size());
            out.vertices.push_back(std::move(x));
            return;
        }
        const std::size_t need = d - e.rank();
        for (std::size_t k = start; k + need <= free_rows.size(); ++k) {
            Echelon next = e;
            if (next.add(augmented(cs[free_rows[k]])) != Echelon::Add::Independent) continue;
            self(self, next, k + 1);
        }
    };
    visit(visit, base, 0);
    out.tight.resize(out.vertices.size());
    for (std::size_t v = 0; v < out.vertices.size(); ++v)
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (cs[i].tight_at(out.vertices[v])) out.tight[v].set(i);
    return out;
}

inline std::size_t normal_rank(const HPolytope& p) {
    std::vector<QVector> rows;
    for (const auto& h : p.constraints()) rows.push_back(h.coefficients);
    if (rows.empty()) return 0;
    return rank(QMatrix(rows));
}

// Searches for an extreme ray of the recession cone {y : A y (rel) 0}.
// Assumes the normals span R^d.
inline std::optional<QVector> find_recession_ray(const HPolytope& p) {
    const std::size_t d = p.dim();
    const auto& cs = p.constraints();
    Echelon base(d, d);
    std::vector<std::size_t> free_rows;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].is_equality()) base.add(cs[i].coefficients);
        else free_rows.push_back(i);
    }
    auto admissible = [&](const QVector& y) {
        for (const auto& h : cs) {
            const Rational s = dot(h.coefficients, y);
            if (h.relation == Relation::LessEq && s.sign() > 0) return false;
            if (h.relation == Relation::GreaterEq && s.sign() < 0) return false;
            if (h.relation == Relation::Equal && !s.is_zero()) return false;
        }
        return true;
    };
    std::optional<QVector> found;
    auto visit = [&](auto&& self, const Echelon& e, std::size_t start) -> void {
        if (found) return;
        if (e.rank() + 1 == d) {
            QVector y = e.null_space().front();
            if (admissible(y)) {
                found = y;
                return;
            }
            for (auto& v : y) v = -v;
            if (admissible(y)) found = y;
            return;
        }
        if (e.rank() + 1 > d) return;
        const std::size_t need = d - 1 - e.rank();
        for (std::size_t k = start; k + need <= free_rows.size() && !found; ++k) {
            Echelon next = e;
            if (next.add(cs[free_rows[k]].coefficients) != Echelon::Add::Independent) continue;
            self(self, next, k + 1);
        }
    };
    if (d == 0) return std::nullopt;
    visit(visit, base, 0);
    return found;
}

}  // namespace detail

/// Nonempty check plus boundedness. Throws UnboundedError for a nonempty
/// polyhedron containing a ray or a line; empty input counts as bounded.
inline void require_bounded(const HPolytope& p) {
    const std::size_t d = p.dim();
    if (detail::normal_rank(p) < d) {
        // Lineality space present: P is unbounded unless empty. Test emptiness
        // on the slice orthogonal to the lineality space, which is pointed.
        detail::Echelon e(d, d);
        for (const auto& h : p.constraints()) e.add(h.coefficients);
        HPolytope slice(d, p.constraints());
        for (auto& z : e.null_space()) slice.add_eq(std::move(z), 0);
        if (!detail::enumerate_pointed(slice).vertices.empty())
            throw UnboundedError("polyhedron contains a line");
        return;
    }
    const auto verts = detail::enumerate_pointed(p);
    if (verts.vertices.empty()) return;
    if (detail::find_recession_ray(p)) throw UnboundedError("polyhedron has a recession direction");
}

inline VPolytope enumerate_vertices(const HPolytope& p) {
    require_bounded(p);
    VPolytope v;
    v.dim = p.dim();
    if (detail::normal_rank(p) < p.dim()) return v;  // empty (require_bounded passed)
    v.vertices = detail::enumerate_pointed(p).vertices;
    return v;
}

/// Smallest m with m * v integral for every vertex coordinate.
inline BigInt vertex_denominator_lcm(const VPolytope& v) {
    BigInt m = 1;
    for (const auto& x : v.vertices)
        for (const auto& c : x) m = lcm(m, c.denominator());
    return m;
}

/// Per-coordinate [min, max] over the vertex set. Empty when there are no vertices.
inline std::vector<std::pair<Rational, Rational>> bounding_box(const VPolytope& v) {
    std::vector<std::pair<Rational, Rational>> box;
    if (v.vertices.empty()) return box;
    box.resize(v.dim, {v.vertices.front().front(), v.vertices.front().front()});
    for (std::size_t j = 0; j < v.dim; ++j) box[j] = {v.vertices.front()[j], v.vertices.front()[j]};
    for (const auto& x : v.vertices)
        for (std::size_t j = 0; j < v.dim; ++j) {
            box[j].first = std::min(box[j].first, x[j]);
            box[j].second = std::max(box[j].second, x[j]);
        }
    return box;
}

// ---------------------------------------------------------------------------
// Volume

namespace detail {

class Triangulator {
public:
    Triangulator(const HPolytope& p, Enumeration e) : p_(p), e_(std::move(e)), d_(p.dim()) {
        for (const auto& h : p.constraints()) normals_.push_back(h.coefficients);
    }

    // Sum over simplices of |det(v_i - v_0)|; caller divides by d!.
    Rational sum_abs_det() {
        Face top;
        top.tight.set();
        for (std::uint32_t v = 0; v < e_.vertices.size(); ++v) {
            top.verts.push_back(v);
            top.tight &= e_.tight[v];
        }
        top.dim = d_;
        origin_ = top.verts.front();
        total_ = 0;
        std::vector<QVector> rows;
        std::vector<std::size_t> pivots;
        walk(top, rows, pivots, Rational(1));
        return total_;
    }

private:
    struct Face {
        ConstraintSet tight;
        std::vector<std::uint32_t> verts;
        std::size_t dim = 0;
    };

    struct SetHash {
        std::size_t operator()(const ConstraintSet& s) const noexcept { return std::hash<ConstraintSet>{}(s); }
    };

    std::size_t face_dim(const ConstraintSet& t) {
        auto it = dims_.find(t);
        if (it != dims_.end()) return it->second;
        std::vector<QVector> rows;
        for (std::size_t i = 0; i < normals_.size(); ++i)
            if (t.test(i)) rows.push_back(normals_[i]);
        const std::size_t dim = d_ - (rows.empty() ? 0 : rank(QMatrix(rows)));
        dims_.emplace(t, dim);
        return dim;
    }

    const std::vector<Face>& facets(const Face& f) {
        auto it = facets_.find(f.tight);
        if (it != facets_.end()) return it->second;
        std::vector<Face> out;
        std::vector<ConstraintSet> seen;
        for (std::size_t c = 0; c < normals_.size(); ++c) {
            if (f.tight.test(c)) continue;
            Face g;
            g.tight.set();
            for (auto v : f.verts)
                if (e_.tight[v].test(c)) {
                    g.verts.push_back(v);
                    g.tight &= e_.tight[v];
                }
            if (g.verts.empty()) continue;
            if (std::find(seen.begin(), seen.end(), g.tight) != seen.end()) continue;
            seen.push_back(g.tight);
            g.dim = face_dim(g.tight);
            if (g.dim + 1 == f.dim) out.push_back(std::move(g));
        }
        return facets_.emplace(f.tight, std::move(out)).first->second;
    }

    // rows/pivots: partial echelon form of {apex_k - v0}; `prod` is the product
    // of pivots so far.
    void walk(const Face& f, const std::vector<QVector>& rows, const std::vector<std::size_t>& pivots,
              const Rational& prod) {
        const std::uint32_t apex = f.verts.front();
        std::vector<QVector> my_rows = rows;
        std::vector<std::size_t> my_pivots = pivots;
        Rational my_prod = prod;
        if (f.dim < d_) {
            QVector w(d_);
            for (std::size_t j = 0; j < d_; ++j) w[j] = e_.vertices[apex][j] - e_.vertices[origin_][j];
            for (std::size_t i = 0; i < my_rows.size(); ++i) {
                const Rational fct = w[my_pivots[i]] / my_rows[i][my_pivots[i]];
                if (fct.is_zero()) continue;
                for (std::size_t j = 0; j < d_; ++j)
                    if (!my_rows[i][j].is_zero()) w[j] -= fct * my_rows[i][j];
            }
            std::size_t p = 0;
            while (p < d_ && w[p].is_zero()) ++p;
            if (p == d_) throw ConsistencyError("degenerate simplex in triangulation");
            my_prod *= w[p];
            my_rows.push_back(std::move(w));
            my_pivots.push_back(p);
        }
        if (f.dim == 0) {
            total_ += abs(my_prod);
            return;
        }
        for (const auto& g : facets(f)) {
            if (std::binary_search(g.verts.begin(), g.verts.end(), apex)) continue;
            walk(g, my_rows, my_pivots, my_prod);
        }
    }

    const HPolytope& p_;
    Enumeration e_;
    std::size_t d_;
    std::vector<QVector> normals_;
    std::uint32_t origin_ = 0;
    Rational total_;
    std::unordered_map<ConstraintSet, std::vector<Face>, SetHash> facets_;
    std::unordered_map<ConstraintSet, std::size_t, SetHash> dims_;
};

}  // namespace detail

/// Exact d-dimensional volume; 0 for empty or lower-dimensional polytopes.
inline Rational volume(const HPolytope& p) {
    require_bounded(p);
    const std::size_t d = p.dim();
    if (d == 0) return 0;
    if (detail::normal_rank(p) < d) return 0;
    auto e = detail::enumerate_pointed(p);
    if (e.vertices.size() < d + 1) return 0;
    {
        detail::Echelon aff(d, d);
        for (const auto& v : e.vertices) {
            QVector w(d);
            for (std::size_t j = 0; j < d; ++j) w[j] = v[j] - e.vertices.front()[j];
            aff.add(std::move(w));
            if (aff.rank() == d) break;
        }
        if (aff.rank() < d) return 0;
    }
    detail::Triangulator tri(p, std::move(e));
    return tri.sum_abs_det() / Rational(factorial(static_cast<unsigned>(d)));
}

inline Rational region_volume(const EventRegion& r) {
    Rational total;
    const std::size_t d = r.dim();
    for (const auto& t : r.terms) {
        if (t.polytope.dim() != d) throw DimensionError("region terms live in different dimensions");
        const Rational v = volume(t.polytope);
        total += t.sign > 0 ? v : -v;
    }
    return total;
}

}  // namespace iacpoly
