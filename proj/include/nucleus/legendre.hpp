#pragma once

// Discrete Legendre-Fenchel calculus on sampled one-dimensional functions.
//
// A sampled function stands for the function equal to its samples on the
// grid and +inf everywhere else. Conjugation is the push/pull pair of the
// pairing profunctor <x, k> = x * k between a primal and a dual grid, so
// every identity here is an instance of the generic nucleus machinery.

#include <span>
#include <string>
#include <vector>

#include "nucleus/profunctor.hpp"

namespace nucleus::legendre {

/// Strictly increasing, non-empty list of abscissae.
class Grid {
public:
    /// Throws std::invalid_argument unless strictly increasing, finite and non-empty.
    explicit Grid(std::vector<double> points);

    /// lo, lo + step, ... up to hi (inclusive within 1e-9 of a step).
    static Grid range(double lo, double hi, double step);

    std::span<const double> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    double operator[](std::size_t i) const noexcept { return points_[i]; }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::vector<double> points_;
};

enum class Space { Primal, Dual };

struct SampledFunction {
    Grid grid;
    Presheaf<ExtReal> values;
    Space space = Space::Primal;

    /// Throws SizeError if the value count differs from the grid size.
    SampledFunction(Grid g, Presheaf<ExtReal> v, Space s = Space::Primal);

    /// Samples `fn` on every grid point.
    template <class Fn>
    static SampledFunction sample(const Grid& g, Fn&& fn, Space s = Space::Primal) {
        Presheaf<ExtReal> v(static_cast<Eigen::Index>(g.size()));
        for (std::size_t i = 0; i < g.size(); ++i) v(static_cast<Eigen::Index>(i)) = ExtReal(fn(g[i]));
        return SampledFunction(g, std::move(v), s);
    }
};

/// Lazily evaluated pairing profunctor M(x, k) = x * k.
inline auto pairing(const Grid& primal, const Grid& dual) {
    return Profunctor<ExtReal>::NullaryExpr(
        static_cast<Eigen::Index>(primal.size()), static_cast<Eigen::Index>(dual.size()),
        [p = primal.points(), d = dual.points()](Eigen::Index i, Eigen::Index j) {
            return ExtReal(p[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(j)]);
        });
}

/// f^(k) = sup_x { k x - f(x) } on the dual grid.
SampledFunction conjugate(const SampledFunction& f, const Grid& dual);
/// g^(x) = sup_k { k x - g(k) } on the primal grid.
SampledFunction reverse_conjugate(const SampledFunction& g, const Grid& primal);
/// reverse_conjugate(conjugate(f, dual), f.grid): the closed convex hull.
SampledFunction biconjugate(const SampledFunction& f, const Grid& dual);

/// sup_x { f2(x) - f1(x) }.
ExtReal climb_distance(const SampledFunction& f1, const SampledFunction& f2);
/// sup_k { g1(k) - g2(k) }.
ExtReal fall_distance(const SampledFunction& g1, const SampledFunction& g2);

/// Lower convex hull of the finite samples, computed geometrically.
/// +inf outside the span of the finite points; a single -inf sample makes
/// the hull -inf everywhere.
SampledFunction convex_hull_oracle(const SampledFunction& f);

/// All difference quotients between finite samples, sorted and deduplicated.
/// With this dual grid the biconjugate reproduces the hull on the finite
/// span of f. Fewer than two finite samples yield the single slope 0.
Grid default_dual_grid(const SampledFunction& f);

enum class Relation { Equal, GreaterEqual };
enum class Outcome { Holds, Violated, HypothesisNotMet };

struct DualityReport {
    std::string check;
    ExtReal lhs;
    ExtReal rhs;
    Relation relation = Relation::Equal;
    Outcome outcome = Outcome::Violated;
    double tolerance = 1e-9;

    bool holds() const noexcept { return outcome == Outcome::Holds; }

    /// Fixed-key `key: value` block, one line per field.
    std::string to_text() const;
    /// JSON object; infinite sides are rendered as the strings "inf" / "-inf".
    std::string to_json() const;
};

inline constexpr double kDefaultTolerance = 1e-9;

/// fall(f^, g) against climb(f, g^).
DualityReport check_lf_adjunction(const SampledFunction& f, const SampledFunction& g,
                                  double tol = kDefaultTolerance);
/// climb(f1, f2) >= fall(f1^, f2^).
DualityReport check_short(const SampledFunction& f1, const SampledFunction& f2, const Grid& dual,
                          double tol = kDefaultTolerance);
/// climb(f1, f2) == fall(f1^, f2^), provided f2 is its own biconjugate.
DualityReport check_toland_singer(const SampledFunction& f1, const SampledFunction& f2, const Grid& dual,
                                  double tol = kDefaultTolerance);

// Limits, colimits and scalar actions on closed convex functions.

/// Pointwise supremum. The empty product on `grid` is -inf everywhere.
SampledFunction cvx_product(const Grid& grid, std::span<const SampledFunction> fs);
/// Biconjugate of the pointwise infimum. The empty coproduct is +inf everywhere.
SampledFunction cvx_coproduct(const Grid& grid, std::span<const SampledFunction> fs, const Grid& dual);
/// (a (.) f)(x) = f(x) + a.
SampledFunction cvx_tensor(const ExtReal& a, const SampledFunction& f);
/// (a |> f)(x) = f(x) - a.
SampledFunction cvx_cotensor(const ExtReal& a, const SampledFunction& f);

}  // namespace nucleus::legendre
