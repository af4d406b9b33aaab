#include "nucleus/metric.hpp"

namespace nucleus {

namespace {

void require_square(const Profunctor<ExtReal>& d, const char* what) {
    if (d.rows() != d.cols()) {
        throw SizeError(std::string(what) + ": distance matrix must be square, got " + std::to_string(d.rows()) +
                        "x" + std::to_string(d.cols()));
    }
}

}  // namespace

Profunctor<bool> underlying_preorder(const Profunctor<ExtReal>& d) {
    require_square(d, "underlying_preorder");
    return d.unaryExpr([](const ExtReal& x) { return ExtReal(0.0) >= x; });
}

std::string RSpaceViolation::describe() const {
    if (kind == Kind::Diagonal) {
        return "d(" + std::to_string(i) + "," + std::to_string(i) + ") is neither 0 nor -inf";
    }
    return "triangle inequality fails for (" + std::to_string(i) + "," + std::to_string(j) + "," +
           std::to_string(k) + ")";
}

RSpaceReport check_rspace_axioms(const Profunctor<ExtReal>& d) {
    require_square(d, "check_rspace_axioms");
    RSpaceReport report;
    const Eigen::Index n = d.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        const ExtReal& self = d(i, i);
        if (!(self == ExtReal(0.0) || self.is_neg_inf())) {
            report.violations.push_back({RSpaceViolation::Kind::Diagonal, i, i, i});
        }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            for (Eigen::Index k = 0; k < n; ++k) {
                if (add(d(i, j), d(j, k)) < d(i, k)) {
                    report.violations.push_back({RSpaceViolation::Kind::Triangle, i, j, k});
                }
            }
        }
    }
    return report;
}

}  // namespace nucleus
