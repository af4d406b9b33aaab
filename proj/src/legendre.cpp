#include "nucleus/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace nucleus::legendre {

Grid::Grid(std::vector<double> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("grid: at least one point required");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i])) throw std::invalid_argument("grid: non-finite abscissa");
        if (i > 0 && !(points_[i - 1] < points_[i])) {
            throw std::invalid_argument("grid: abscissae must be strictly increasing");
        }
    }
}

Grid Grid::range(double lo, double hi, double step) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo <= hi)) {
        throw std::invalid_argument("grid range: need finite lo <= hi");
    }
    if (lo == hi) return Grid({lo});
    if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("grid range: step must be positive");
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
    std::vector<double> pts;
    pts.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) pts.push_back(lo + static_cast<double>(i) * step);
    return Grid(std::move(pts));
}

SampledFunction::SampledFunction(Grid g, Presheaf<ExtReal> v, Space s)
    : grid(std::move(g)), values(std::move(v)), space(s) {
    if (values.size() != static_cast<Eigen::Index>(grid.size())) {
        throw SizeError("sampled function: " + std::to_string(values.size()) + " values on a grid of " +
                        std::to_string(grid.size()) + " points");
    }
}

namespace {

void require_same_grid(const SampledFunction& a, const SampledFunction& b, const char* what) {
    if (!(a.grid == b.grid)) throw SizeError(std::string(what) + ": functions live on different grids");
}

bool within(const ExtReal& lhs, const ExtReal& rhs, Relation rel, double tol) {
    if (approx_equal(lhs, rhs, tol)) return true;
    return rel == Relation::GreaterEqual && lhs >= rhs;
}

DualityReport make_report(std::string check, ExtReal lhs, ExtReal rhs, Relation rel, double tol) {
    if (tol < 0.0) throw PreconditionError(check + ": negative tolerance");
    DualityReport r;
    r.check = std::move(check);
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = rel;
    r.tolerance = tol;
    r.outcome = within(lhs, rhs, rel, tol) ? Outcome::Holds : Outcome::Violated;
    return r;
}

const char* relation_name(Relation r) { return r == Relation::Equal ? "equal" : "geq"; }

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Holds: return "holds";
        case Outcome::Violated: return "violated";
        case Outcome::HypothesisNotMet: return "hypothesis_not_met";
    }
    return "?";
}

nlohmann::json extreal_json(const ExtReal& x) {
    if (x.is_finite()) return x.value();
    return to_string(x);
}

}  // namespace

SampledFunction conjugate(const SampledFunction& f, const Grid& dual) {
    return SampledFunction(dual, push(pairing(f.grid, dual), f.values), Space::Dual);
}

SampledFunction reverse_conjugate(const SampledFunction& g, const Grid& primal) {
    return SampledFunction(primal, pull(pairing(primal, g.grid), g.values), Space::Primal);
}

SampledFunction biconjugate(const SampledFunction& f, const Grid& dual) {
    return reverse_conjugate(conjugate(f, dual), f.grid);
}

ExtReal climb_distance(const SampledFunction& f1, const SampledFunction& f2) {
    require_same_grid(f1, f2, "climb_distance");
    return hom_distance(f1.values, f2.values, Side::Pre);
}

ExtReal fall_distance(const SampledFunction& g1, const SampledFunction& g2) {
    require_same_grid(g1, g2, "fall_distance");
    return hom_distance(g1.values, g2.values, Side::Opco);
}

SampledFunction convex_hull_oracle(const SampledFunction& f) {
    const auto n = static_cast<Eigen::Index>(f.grid.size());
    struct Point {
        double x, y;
    };
    std::vector<Point> pts;
    for (Eigen::Index i = 0; i < n; ++i) {
        const ExtReal& v = f.values(i);
        if (v.is_neg_inf()) {
            return SampledFunction(f.grid, Presheaf<ExtReal>::Constant(n, kNegInf), f.space);
        }
        if (v.is_finite()) pts.push_back({f.grid[static_cast<std::size_t>(i)], v.value()});
    }

    // Monotone chain, lower half only; points are already sorted by x.
    std::vector<Point> hull;
    for (const Point& p : pts) {
        while (hull.size() >= 2) {
            const Point& o = hull[hull.size() - 2];
            const Point& a = hull.back();
            const double cross = (a.x - o.x) * (p.y - o.y) - (a.y - o.y) * (p.x - o.x);
            if (cross > 0.0) break;
            hull.pop_back();
        }
        hull.push_back(p);
    }

    Presheaf<ExtReal> out(n);
    std::size_t seg = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = f.grid[static_cast<std::size_t>(i)];
        if (hull.empty() || x < hull.front().x || x > hull.back().x) {
            out(i) = kPosInf;
            continue;
        }
        while (seg + 1 < hull.size() && hull[seg + 1].x < x) ++seg;
        if (x == hull[seg].x) {
            out(i) = hull[seg].y;
        } else if (seg + 1 < hull.size() && x == hull[seg + 1].x) {
            out(i) = hull[seg + 1].y;
        } else {
            const Point& a = hull[seg];
            const Point& b = hull[seg + 1];
            out(i) = a.y + (b.y - a.y) * ((x - a.x) / (b.x - a.x));
        }
    }
    return SampledFunction(f.grid, std::move(out), f.space);
}

Grid default_dual_grid(const SampledFunction& f) {
    std::vector<std::size_t> finite;
    for (std::size_t i = 0; i < f.grid.size(); ++i) {
        if (f.values(static_cast<Eigen::Index>(i)).is_finite()) finite.push_back(i);
    }
    if (finite.size() < 2) return Grid({0.0});
    std::vector<double> slopes;
    slopes.reserve(finite.size() * (finite.size() - 1) / 2);
    for (std::size_t a = 0; a < finite.size(); ++a) {
        for (std::size_t b = a + 1; b < finite.size(); ++b) {
            const std::size_t i = finite[a];
            const std::size_t j = finite[b];
            const double dy = f.values(static_cast<Eigen::Index>(j)).value() - f.values(static_cast<Eigen::Index>(i)).value();
            const double q = dy / (f.grid[j] - f.grid[i]);
            if (std::isfinite(q)) slopes.push_back(q == 0.0 ? 0.0 : q);
        }
    }
    if (slopes.empty()) return Grid({0.0});
    std::sort(slopes.begin(), slopes.end());
    slopes.erase(std::unique(slopes.begin(), slopes.end()), slopes.end());
    return Grid(std::move(slopes));
}

std::string DualityReport::to_text() const {
    std::ostringstream out;
    out << "check: " << check << "\n"
        << "lhs: " << to_string(lhs) << "\n"
        << "rhs: " << to_string(rhs) << "\n"
        << "relation: " << relation_name(relation) << "\n"
        << "tolerance: " << to_string(ExtReal(tolerance)) << "\n"
        << "status: " << outcome_name(outcome) << "\n"
        << "holds: " << (holds() ? "true" : "false") << "\n";
    return out.str();
}

std::string DualityReport::to_json() const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["lhs"] = extreal_json(lhs);
    j["rhs"] = extreal_json(rhs);
    j["relation"] = relation_name(relation);
    j["tolerance"] = tolerance;
    j["status"] = outcome_name(outcome);
    j["holds"] = holds();
    return j.dump(2) + "\n";
}

DualityReport check_lf_adjunction(const SampledFunction& f, const SampledFunction& g, double tol) {
    const auto [lhs, rhs] = adjunction_gap(pairing(f.grid, g.grid), f.values, g.values);
    return make_report("adjunction", lhs, rhs, Relation::Equal, tol);
}

DualityReport check_short(const SampledFunction& f1, const SampledFunction& f2, const Grid& dual, double tol) {
    require_same_grid(f1, f2, "check_short");
    return make_report("short", climb_distance(f1, f2), fall_distance(conjugate(f1, dual), conjugate(f2, dual)),
                       Relation::GreaterEqual, tol);
}

DualityReport check_toland_singer(const SampledFunction& f1, const SampledFunction& f2, const Grid& dual,
                                  double tol) {
    require_same_grid(f1, f2, "check_toland_singer");
    DualityReport r = make_report("toland-singer", climb_distance(f1, f2),
                                  fall_distance(conjugate(f1, dual), conjugate(f2, dual)), Relation::Equal, tol);
    if (!approx_equal(biconjugate(f2, dual).values, f2.values, tol)) r.outcome = Outcome::HypothesisNotMet;
    return r;
}

SampledFunction cvx_product(const Grid& grid, std::span<const SampledFunction> fs) {
    Presheaf<ExtReal> acc = Presheaf<ExtReal>::Constant(static_cast<Eigen::Index>(grid.size()), kNegInf);
    for (const auto& f : fs) {
        if (!(f.grid == grid)) throw SizeError("cvx_product: function on a different grid");
        acc = pointwise_meet(acc, f.values);
    }
    return SampledFunction(grid, std::move(acc));
}

SampledFunction cvx_coproduct(const Grid& grid, std::span<const SampledFunction> fs, const Grid& dual) {
    Presheaf<ExtReal> acc = Presheaf<ExtReal>::Constant(static_cast<Eigen::Index>(grid.size()), kPosInf);
    for (const auto& f : fs) {
        if (!(f.grid == grid)) throw SizeError("cvx_coproduct: function on a different grid");
        acc = pointwise_join(acc, f.values);
    }
    return biconjugate(SampledFunction(grid, std::move(acc)), dual);
}

SampledFunction cvx_tensor(const ExtReal& a, const SampledFunction& f) {
    return SampledFunction(f.grid, pointwise_tensor(a, f.values), f.space);
}

SampledFunction cvx_cotensor(const ExtReal& a, const SampledFunction& f) {
    return SampledFunction(f.grid, pointwise_residuate(a, f.values), f.space);
}

}  // namespace nucleus::legendre
