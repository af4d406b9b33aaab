#pragma once

#include <string>
#include <vector>

#include "nucleus/profunctor.hpp"

namespace nucleus {

/// relation(i, j) holds iff 0 >= d(i, j).
Profunctor<bool> underlying_preorder(const Profunctor<ExtReal>& d);

struct RSpaceViolation {
    enum class Kind { Triangle, Diagonal };
    Kind kind;
    Eigen::Index i;
    Eigen::Index j;  // equals i for a diagonal violation
    Eigen::Index k;  // equals i for a diagonal violation

    std::string describe() const;
};

struct RSpaceReport {
    std::vector<RSpaceViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Checks d(x,x') + d(x',x'') >= d(x,x'') for every triple and d(x,x) in {0, -inf}.
RSpaceReport check_rspace_axioms(const Profunctor<ExtReal>& d);

}  // namespace nucleus
