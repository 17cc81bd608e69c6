#pragma once

// Lattice-point counting in dilations nP, Ehrhart-series coefficient
// extraction, and quasipolynomial reconstruction by per-residue-class
// interpolation.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "iacpoly/errors.hpp"
#include "iacpoly/polytope.hpp"
#include "iacpoly/rational.hpp"

namespace iacpoly {

// ---------------------------------------------------------------------------
// Dense univariate polynomials, ascending powers.

using Polynomial = std::vector<Rational>;

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    if (a.empty() || b.empty()) return {};
    Polynomial c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

inline Polynomial poly_pow(const Polynomial& a, unsigned k) {
    Polynomial out{Rational(1)};
    for (unsigned i = 0; i < k; ++i) out = poly_mul(out, a);
    return out;
}

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    Polynomial c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return c;
}

inline Rational poly_eval(const Polynomial& p, const Rational& x) {
    Rational acc;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// ---------------------------------------------------------------------------
// Rational generating functions

/// F(t) = P(t) / Q(t). Normalized so that Q(0) = 1.
class RationalGF {
public:
    RationalGF(Polynomial numerator, Polynomial denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.empty() || den_.front().is_zero())
            throw DomainError("generating function denominator must have a nonzero constant term");
        const Rational q0 = den_.front();
        for (auto& c : num_) c /= q0;
        for (auto& c : den_) c /= q0;
    }

    [[nodiscard]] const Polynomial& numerator() const { return num_; }
    [[nodiscard]] const Polynomial& denominator() const { return den_; }

    /// Maclaurin coefficients a_0..a_N from sum_k c_k a_{n-k} = b_n.
    [[nodiscard]] std::vector<Rational> series(std::size_t N) const {
        std::vector<Rational> a(N + 1);
        for (std::size_t n = 0; n <= N; ++n) {
            Rational s = n < num_.size() ? num_[n] : Rational(0);
            const std::size_t kmax = std::min(n, den_.size() - 1);
            for (std::size_t k = 1; k <= kmax; ++k)
                if (!den_[k].is_zero()) s -= den_[k] * a[n - k];
            a[n] = s;  // c_0 == 1
        }
        return a;
    }

private:
    Polynomial num_;
    Polynomial den_;
};

struct CountTable {
    std::map<std::uint64_t, BigInt> entries;

    void set(std::uint64_t n, BigInt count) { entries[n] = std::move(count); }
    [[nodiscard]] const BigInt& at(std::uint64_t n) const {
        auto it = entries.find(n);
        if (it == entries.end()) throw std::out_of_range("no count for dilation " + std::to_string(n));
        return it->second;
    }
    [[nodiscard]] std::size_t size() const { return entries.size(); }

    [[nodiscard]] std::string to_csv() const {
        std::ostringstream os;
        os << "n,count\n";
        for (const auto& [n, c] : entries) os << n << ',' << c.get_str() << '\n';
        return os.str();
    }
};

/// Coefficients a_0..a_N of an Ehrhart series. Every coefficient must be an integer.
inline CountTable gf_coefficients(const RationalGF& f, std::size_t N) {
    CountTable t;
    const auto a = f.series(N);
    for (std::size_t n = 0; n <= N; ++n) {
        if (!a[n].is_integer())
            throw DomainError("series coefficient " + std::to_string(n) + " is not an integer: " + a[n].to_string());
        t.set(n, a[n].numerator());
    }
    return t;
}

// ---------------------------------------------------------------------------
// Quasipolynomials

struct Quasipolynomial {
    std::uint64_t period = 1;
    std::size_t degree = 0;
    std::vector<Polynomial> polys;  // polys[r] applies to n = r (mod period), ascending coefficients

    [[nodiscard]] const Polynomial& constituent(std::uint64_t n) const { return polys.at(n % period); }
    [[nodiscard]] Rational evaluate(std::uint64_t n) const {
        return poly_eval(constituent(n), Rational(BigInt(std::to_string(n))));
    }
};

/// Shared top-degree coefficient of all constituents.
inline Rational leading_coefficient(const Quasipolynomial& q) {
    if (q.polys.empty()) throw ConsistencyError("quasipolynomial has no constituents");
    auto top = [&](const Polynomial& p) { return q.degree < p.size() ? p[q.degree] : Rational(0); };
    const Rational lead = top(q.polys.front());
    for (const auto& p : q.polys)
        if (top(p) != lead)
            throw ConsistencyError("constituents disagree on the leading coefficient: " + lead.to_string() + " vs " +
                                   top(p).to_string());
    return lead;
}

/// Degree-(pts-1) interpolating polynomial through (xs[i], ys[i]), Lagrange form expanded.
inline Polynomial lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    Polynomial out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Polynomial basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = poly_mul(basis, Polynomial{-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        const Rational scale = ys[i] / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) out[k] += basis[k] * scale;
    }
    return out;
}

/// Fits one degree-`degree` polynomial per residue class from the first
/// degree+1 counts of that class, then checks every further count.
inline Quasipolynomial interpolate_quasipolynomial(const CountTable& counts, std::uint64_t period, std::size_t degree) {
    if (period == 0) throw DomainError("period must be positive");
    Quasipolynomial q;
    q.period = period;
    q.degree = degree;
    q.polys.resize(period);
    for (std::uint64_t r = 0; r < period; ++r) {
        std::vector<Rational> xs, ys;
        std::vector<std::pair<Rational, Rational>> extra;
        for (const auto& [n, c] : counts.entries) {
            if (n % period != r) continue;
            const Rational x(BigInt(std::to_string(n)));
            if (xs.size() < degree + 1) {
                xs.push_back(x);
                ys.emplace_back(c);
            } else {
                extra.emplace_back(x, Rational(c));
            }
        }
        if (xs.size() < degree + 1)
            throw DomainError("residue class " + std::to_string(r) + " mod " + std::to_string(period) + " has " +
                              std::to_string(xs.size()) + " counts; need " + std::to_string(degree + 1));
        q.polys[r] = lagrange_interpolate(xs, ys);
        for (const auto& [x, y] : extra)
            if (poly_eval(q.polys[r], x) != y)
                throw PeriodTooSmall("count at n = " + x.to_string() + " disagrees with the fitted constituent for class " +
                                     std::to_string(r) + " (period or degree too small)");
    }
    return q;
}

// ---------------------------------------------------------------------------
// Lattice-point counting

struct CountOptions {
    /// Ceiling on the number of candidate prefixes (bounding-box points over
    /// all coordinates but the last, which is counted in closed form).
    unsigned long long budget = 1'000'000'000ULL;
    /// Worker threads splitting the outermost coordinate; 0 = hardware concurrency.
    unsigned threads = 0;
};

namespace detail {

inline std::int64_t to_i64(const BigInt& v) {
    if (!v.fits_slong_p()) throw DomainError("value does not fit in 64 bits: " + v.get_str());
    return v.get_si();
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Integer system  rows[i] . x <= bound[i]  for the dilation nP, with box bounds.
struct CountingSystem {
    std::size_t d = 0;
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::int64_t> bound;
    std::vector<std::int64_t> lo, hi;
    std::vector<std::vector<std::int64_t>> tail_min;  // [row][k] = sum_{j>k} min over box of rows[row][j] x_j
};

class Counter {
public:
    explicit Counter(const CountingSystem& s) : s_(s), partial_(s.rows.size(), 0) {}

    std::uint64_t run_from(std::int64_t first_lo, std::int64_t first_hi) {
        total_ = 0;
        level(0, first_lo, first_hi);
        return total_;
    }

private:
    bool interval(std::size_t k, std::int64_t& lo, std::int64_t& hi) const {
        for (std::size_t i = 0; i < s_.rows.size(); ++i) {
            const std::int64_t c = s_.rows[i][k];
            const std::int64_t rem = s_.bound[i] - partial_[i] - s_.tail_min[i][k];
            if (c == 0) {
                if (rem < 0) return false;
            } else if (c > 0) {
                hi = std::min(hi, floor_div(rem, c));
            } else {
                lo = std::max(lo, ceil_div(rem, c));
            }
            if (lo > hi) return false;
        }
        return true;
    }

    void level(std::size_t k, std::int64_t lo_override, std::int64_t hi_override) {
        std::int64_t lo = std::max(s_.lo[k], lo_override);
        std::int64_t hi = std::min(s_.hi[k], hi_override);
        if (!interval(k, lo, hi)) return;
        if (k + 1 == s_.d) {
            total_ += static_cast<std::uint64_t>(hi - lo + 1);
            return;
        }
        for (std::int64_t x = lo; x <= hi; ++x) {
            for (std::size_t i = 0; i < partial_.size(); ++i) partial_[i] += s_.rows[i][k] * x;
            level(k + 1, std::numeric_limits<std::int64_t>::min(), std::numeric_limits<std::int64_t>::max());
            for (std::size_t i = 0; i < partial_.size(); ++i) partial_[i] -= s_.rows[i][k] * x;
        }
    }

    const CountingSystem& s_;
    std::vector<std::int64_t> partial_;
    std::uint64_t total_ = 0;
};

inline BigInt prefix_candidates(const std::vector<BigInt>& lo, const std::vector<BigInt>& hi) {
    BigInt prod = 1;
    for (std::size_t j = 0; j + 1 < lo.size(); ++j) prod *= (hi[j] >= lo[j] ? BigInt(hi[j] - lo[j] + 1) : BigInt(0));
    return prod;
}

inline void dilated_box(const VPolytope& v, std::uint64_t n, std::vector<BigInt>& lo, std::vector<BigInt>& hi) {
    const auto box = bounding_box(v);
    const BigInt nn(std::to_string(n));
    lo.resize(v.dim);
    hi.resize(v.dim);
    for (std::size_t j = 0; j < v.dim; ++j) {
        const Rational a = box[j].first * Rational(nn), b = box[j].second * Rational(nn);
        lo[j] = ceil_div(a.numerator(), a.denominator());
        hi[j] = floor_div(b.numerator(), b.denominator());
    }
}

}  // namespace detail

/// Number of candidate prefixes the enumeration of nP would scan.
inline BigInt count_cost(const HPolytope& p, std::uint64_t n) {
    const auto v = enumerate_vertices(p);
    if (v.vertices.empty() || p.dim() == 0) return 0;
    std::vector<BigInt> lo, hi;
    detail::dilated_box(v, n, lo, hi);
    return detail::prefix_candidates(lo, hi);
}

/// Number of integer points in the dilation nP (closed constraints).
inline BigInt count_lattice_points(const HPolytope& p, std::uint64_t n, const CountOptions& opts = {}) {
    const auto v = enumerate_vertices(p);  // throws on unbounded input
    if (v.vertices.empty()) return 0;
    const std::size_t d = p.dim();
    if (d == 0 || n == 0) return 1;

    std::vector<BigInt> lo, hi;
    detail::dilated_box(v, n, lo, hi);
    const BigInt cost = detail::prefix_candidates(lo, hi);
    if (cost > BigInt(std::to_string(opts.budget)))
        throw BudgetExceeded("counting dilation n = " + std::to_string(n) + " needs " + cost.get_str() +
                                 " candidate prefixes, budget is " + std::to_string(opts.budget),
                             n);
    for (std::size_t j = 0; j < d; ++j)
        if (lo[j] > hi[j]) return 0;

    detail::CountingSystem s;
    s.d = d;
    for (std::size_t j = 0; j < d; ++j) {
        s.lo.push_back(detail::to_i64(lo[j]));
        s.hi.push_back(detail::to_i64(hi[j]));
    }
    const BigInt nn(std::to_string(n));
    auto push_row = [&](const HalfSpace& h, int sgn) {
        // coefficients are coprime integers after normalization; clear rhs denominator
        const BigInt q = h.rhs.denominator();
        std::vector<std::int64_t> row(d);
        BigInt magnitude = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (!h.coefficients[j].is_integer()) throw ConsistencyError("constraint not integer-normalized");
            const BigInt c = h.coefficients[j].numerator() * q;
            row[j] = detail::to_i64(c * sgn);
            magnitude += abs(c) * std::max(abs(lo[j]), abs(hi[j]));
        }
        const BigInt b = h.rhs.numerator() * nn * sgn;
        magnitude += abs(b);
        if (magnitude >= BigInt(1) << 62) throw DomainError("dilation too large for 64-bit lattice enumeration");
        s.rows.push_back(std::move(row));
        s.bound.push_back(detail::to_i64(b));
    };
    for (const auto& h : p.constraints()) {
        if (h.is_zero_row()) return 0;  // contradictory row (vacuous ones were dropped)
        if (h.relation != Relation::GreaterEq) push_row(h, 1);
        if (h.relation != Relation::LessEq) push_row(h, -1);
    }
    s.tail_min.assign(s.rows.size(), std::vector<std::int64_t>(d, 0));
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        std::int64_t acc = 0;
        for (std::size_t k = d; k-- > 0;) {
            s.tail_min[i][k] = acc;
            const std::int64_t c = s.rows[i][k];
            acc += std::min(c * s.lo[k], c * s.hi[k]);
        }
    }

    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    const std::int64_t span = s.hi[0] - s.lo[0] + 1;
    if (d == 1 || span < 64 || cost < BigInt(2'000'000)) threads = 1;
    threads = static_cast<unsigned>(std::min<std::int64_t>(threads, span));
    if (threads <= 1) {
        detail::Counter c(s);
        return BigInt(std::to_string(c.run_from(s.lo[0], s.hi[0])));
    }
    // Interleave slices of the first coordinate so workers get similar loads.
    std::vector<std::uint64_t> subtotal(threads, 0);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            detail::Counter c(s);
            std::uint64_t acc = 0;
            for (std::int64_t x = s.lo[0] + t; x <= s.hi[0]; x += threads) acc += c.run_from(x, x);
            subtotal[t] = acc;
        });
    for (auto& th : pool) th.join();
    std::uint64_t total = 0;
    for (auto v2 : subtotal) total += v2;
    return BigInt(std::to_string(total));
}

/// Signed sum of term counts.
inline BigInt count_lattice_points(const EventRegion& r, std::uint64_t n, const CountOptions& opts = {}) {
    BigInt total = 0;
    for (const auto& t : r.terms) {
        const BigInt c = count_lattice_points(t.polytope, n, opts);
        total += t.sign > 0 ? c : BigInt(-c);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Pipeline

struct EhrhartOptions {
    CountOptions count;
    /// Validation dilations per residue class beyond the degree+1 used for fitting.
    std::size_t validation_points = 2;
};

struct EhrhartResult {
    Quasipolynomial quasipolynomial;
    BigInt period_bound;  // vertex-denominator LCM used as the period
    CountTable counts;
};

namespace detail {

inline EhrhartResult run_pipeline(const EventRegion& r, const EhrhartOptions& opts) {
    if (r.terms.empty()) throw DomainError("empty region");
    const std::size_t d = r.dim();
    BigInt m = 1;
    for (const auto& t : r.terms) {
        const auto v = enumerate_vertices(t.polytope);
        if (!v.vertices.empty()) m = lcm(m, vertex_denominator_lcm(v));
    }
    if (!m.fits_ulong_p()) throw BudgetExceeded("period bound " + m.get_str() + " is too large", 0);
    const std::uint64_t period = m.get_ui();
    const std::uint64_t per_class = d + 1 + opts.validation_points;
    const std::uint64_t max_n = (period - 1) + period * (per_class - 1);

    // Budget check up front at the largest dilation.
    for (const auto& t : r.terms) {
        const BigInt cost = count_cost(t.polytope, max_n);
        if (cost > BigInt(std::to_string(opts.count.budget)))
            throw BudgetExceeded("quasipolynomial with period " + std::to_string(period) + " needs dilations up to n = " +
                                     std::to_string(max_n) + " (" + cost.get_str() + " candidate prefixes, budget " +
                                     std::to_string(opts.count.budget) + ")",
                                 max_n);
    }

    EhrhartResult res;
    res.period_bound = m;
    for (std::uint64_t r0 = 0; r0 < period; ++r0)
        for (std::uint64_t j = 0; j < per_class; ++j) {
            const std::uint64_t n = r0 + period * j;
            res.counts.set(n, count_lattice_points(r, n, opts.count));
        }
    res.quasipolynomial = interpolate_quasipolynomial(res.counts, period, d);
    return res;
}

}  // namespace detail

inline EhrhartResult ehrhart_pipeline_detailed(const EventRegion& r, const EhrhartOptions& opts = {}) {
    return detail::run_pipeline(r, opts);
}

/// Ehrhart quasipolynomial of nP using the vertex-denominator LCM as period.
inline Quasipolynomial ehrhart_pipeline(const HPolytope& p, const EhrhartOptions& opts = {}) {
    return detail::run_pipeline(EventRegion(p), opts).quasipolynomial;
}

inline Quasipolynomial ehrhart_pipeline(const EventRegion& r, const EhrhartOptions& opts = {}) {
    return detail::run_pipeline(r, opts).quasipolynomial;
}

}  // namespace iacpoly
