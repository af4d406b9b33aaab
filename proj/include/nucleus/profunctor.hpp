#pragma once

// Nucleus machinery for a profunctor between two finite discrete object sets.
//
// A profunctor is a dense matrix M(a, b) of quantale values (rows index A,
// columns index B). Presheaves on A and opcopresheaves on B are plain
// column vectors; which side a vector lives on is given explicitly.
// Every function accepts any Eigen expression, so lazily generated
// profunctors (NullaryExpr) work without materialising the matrix.

#include <span>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "nucleus/errors.hpp"
#include "nucleus/quantale.hpp"

namespace nucleus {

template <class T>
using Profunctor = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

template <class T>
using Presheaf = Eigen::Matrix<T, Eigen::Dynamic, 1>;

enum class Side { Pre, Opco };

namespace detail {

inline void require_size(Eigen::Index got, Eigen::Index want, const char* what) {
    if (got != want) {
        throw SizeError(std::string(what) + ": expected length " + std::to_string(want) + ", got " +
                        std::to_string(got));
    }
}

}  // namespace detail

/// (M^* P)(b) = meet over a of [P(a), M(a, b)].
template <class MD, class PD>
Presheaf<typename MD::Scalar> push(const Eigen::MatrixBase<MD>& m, const Eigen::MatrixBase<PD>& p) {
    using T = typename MD::Scalar;
    using Q = QuantaleTraits<T>;
    detail::require_size(p.size(), m.rows(), "push");
    Presheaf<T> out(m.cols());
    for (Eigen::Index b = 0; b < m.cols(); ++b) {
        T acc = Q::top();
        for (Eigen::Index a = 0; a < m.rows(); ++a) {
            acc = Q::meet(acc, Q::residuate(p(a), m(a, b)));
        }
        out(b) = acc;
    }
    return out;
}

/// (M_* Q)(a) = meet over b of [Q(b), M(a, b)].
template <class MD, class QD>
Presheaf<typename MD::Scalar> pull(const Eigen::MatrixBase<MD>& m, const Eigen::MatrixBase<QD>& q) {
    using T = typename MD::Scalar;
    using Q = QuantaleTraits<T>;
    detail::require_size(q.size(), m.cols(), "pull");
    Presheaf<T> out(m.rows());
    for (Eigen::Index a = 0; a < m.rows(); ++a) {
        T acc = Q::top();
        for (Eigen::Index b = 0; b < m.cols(); ++b) {
            acc = Q::meet(acc, Q::residuate(q(b), m(a, b)));
        }
        out(a) = acc;
    }
    return out;
}

/// pull . push on presheaves, push . pull on opcopresheaves.
template <class MD, class FD>
Presheaf<typename MD::Scalar> closure(const Eigen::MatrixBase<MD>& m, const Eigen::MatrixBase<FD>& f, Side side) {
    return side == Side::Pre ? pull(m, push(m, f)) : push(m, pull(m, f));
}

/// Coordinatewise comparison; infinite tags must match exactly.
template <class AD, class BD>
bool approx_equal(const Eigen::MatrixBase<AD>& a, const Eigen::MatrixBase<BD>& b, double tol) {
    using Q = QuantaleTraits<typename AD::Scalar>;
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (!Q::approx_equal(a(i), b(i), tol)) return false;
    }
    return true;
}

template <class MD, class FD>
bool is_fixed(const Eigen::MatrixBase<MD>& m, const Eigen::MatrixBase<FD>& f, Side side,
              double tol = QuantaleTraits<typename MD::Scalar>::default_tolerance()) {
    if (tol < 0.0) throw PreconditionError("is_fixed: negative tolerance");
    return approx_equal(closure(m, f, side), f, tol);
}

/// Enriched hom between two (op)presheaves.
///
/// Pre:  meet_x [F1(x), F2(x)]  (extended reals: sup of F2 - F1, the climb distance)
/// Opco: meet_x [F2(x), F1(x)]  (extended reals: sup of F1 - F2, the fall distance)
template <class AD, class BD>
typename AD::Scalar hom_distance(const Eigen::MatrixBase<AD>& f1, const Eigen::MatrixBase<BD>& f2, Side side) {
    using T = typename AD::Scalar;
    using Q = QuantaleTraits<T>;
    detail::require_size(f2.size(), f1.size(), "hom_distance");
    T acc = Q::top();
    for (Eigen::Index i = 0; i < f1.size(); ++i) {
        acc = Q::meet(acc, side == Side::Pre ? Q::residuate(f1(i), f2(i)) : Q::residuate(f2(i), f1(i)));
    }
    return acc;
}

/// Underlying order of the (op)presheaf space: unit <= hom(F1, F2).
/// For truth values on the Pre side this is subset inclusion; for extended
/// reals on the Pre side it is pointwise domination F1 >= F2.
template <class AD, class BD>
bool underlying_leq(const Eigen::MatrixBase<AD>& f1, const Eigen::MatrixBase<BD>& f2, Side side) {
    using Q = QuantaleTraits<typename AD::Scalar>;
    return Q::leq(Q::unit(), hom_distance(f1, f2, side));
}

/// Both sides of the push/pull adjunction:
/// (hom_Opco(push P, Q), hom_Pre(P, pull Q)).
template <class MD, class PD, class QD>
std::pair<typename MD::Scalar, typename MD::Scalar> adjunction_gap(const Eigen::MatrixBase<MD>& m,
                                                                   const Eigen::MatrixBase<PD>& p,
                                                                   const Eigen::MatrixBase<QD>& q) {
    return {hom_distance(push(m, p), q, Side::Opco), hom_distance(p, pull(m, q), Side::Pre)};
}

/// (J o I)(c, e) = join over d of I(c, d) (x) J(d, e).
/// For extended reals this is the min-plus matrix product.
template <class ID, class JD>
Profunctor<typename ID::Scalar> compose_profunctors(const Eigen::MatrixBase<ID>& i, const Eigen::MatrixBase<JD>& j) {
    using T = typename ID::Scalar;
    using Q = QuantaleTraits<T>;
    detail::require_size(j.rows(), i.cols(), "compose_profunctors");
    Profunctor<T> out(i.rows(), j.cols());
    for (Eigen::Index e = 0; e < j.cols(); ++e) {
        for (Eigen::Index c = 0; c < i.rows(); ++c) {
            T acc = Q::bottom();
            for (Eigen::Index d = 0; d < i.cols(); ++d) {
                acc = Q::join(acc, Q::tensor(i(c, d), j(d, e)));
            }
            out(c, e) = acc;
        }
    }
    return out;
}

/// Unit on the diagonal, bottom elsewhere.
template <QuantaleScalar T>
Profunctor<T> identity_profunctor(Eigen::Index n) {
    using Q = QuantaleTraits<T>;
    return Profunctor<T>::NullaryExpr(n, n, [](Eigen::Index r, Eigen::Index c) {
        return r == c ? Q::unit() : Q::bottom();
    });
}

// Pointwise (co)limits of presheaves and opcopresheaves.

template <class AD, class BD>
Presheaf<typename AD::Scalar> pointwise_meet(const Eigen::MatrixBase<AD>& a, const Eigen::MatrixBase<BD>& b) {
    using Q = QuantaleTraits<typename AD::Scalar>;
    detail::require_size(b.size(), a.size(), "pointwise_meet");
    return a.binaryExpr(b, [](const auto& x, const auto& y) { return Q::meet(x, y); });
}

template <class AD, class BD>
Presheaf<typename AD::Scalar> pointwise_join(const Eigen::MatrixBase<AD>& a, const Eigen::MatrixBase<BD>& b) {
    using Q = QuantaleTraits<typename AD::Scalar>;
    detail::require_size(b.size(), a.size(), "pointwise_join");
    return a.binaryExpr(b, [](const auto& x, const auto& y) { return Q::join(x, y); });
}

/// v (x) F(x) at every coordinate.
template <class FD>
Presheaf<typename FD::Scalar> pointwise_tensor(const typename FD::Scalar& v, const Eigen::MatrixBase<FD>& f) {
    using Q = QuantaleTraits<typename FD::Scalar>;
    return f.unaryExpr([&v](const auto& x) { return Q::tensor(v, x); });
}

/// [v, F(x)] at every coordinate.
template <class FD>
Presheaf<typename FD::Scalar> pointwise_residuate(const typename FD::Scalar& v, const Eigen::MatrixBase<FD>& f) {
    using Q = QuantaleTraits<typename FD::Scalar>;
    return f.unaryExpr([&v](const auto& x) { return Q::residuate(v, x); });
}

/// A point of the nucleus: P = pull(Q) and Q = push(P).
template <class T>
struct NucleusPair {
    Presheaf<T> pre;
    Presheaf<T> opco;
};

template <class MD>
bool in_nucleus(const Eigen::MatrixBase<MD>& m, const NucleusPair<typename MD::Scalar>& pair,
                double tol = QuantaleTraits<typename MD::Scalar>::default_tolerance()) {
    if (pair.pre.size() != m.rows() || pair.opco.size() != m.cols()) return false;
    return approx_equal(push(m, pair.pre), pair.opco, tol) && approx_equal(pull(m, pair.opco), pair.pre, tol);
}

namespace detail {

template <class MD>
void require_nucleus(const Eigen::MatrixBase<MD>& m, const NucleusPair<typename MD::Scalar>& pair, double tol,
                     const char* what) {
    if (!in_nucleus(m, pair, tol)) {
        throw PreconditionError(std::string(what) + ": input pair is not a fixed pair of the profunctor");
    }
}

}  // namespace detail

/// Product in the nucleus: meet the presheaves, close the product of the
/// opcopresheaves (a pointwise join).
template <class MD>
NucleusPair<typename MD::Scalar> nucleus_product(const Eigen::MatrixBase<MD>& m,
                                                 std::span<const NucleusPair<typename MD::Scalar>> pairs,
                                                 double tol = QuantaleTraits<typename MD::Scalar>::default_tolerance()) {
    using T = typename MD::Scalar;
    using Q = QuantaleTraits<T>;
    Presheaf<T> pre = Presheaf<T>::Constant(m.rows(), Q::top());
    Presheaf<T> opco = Presheaf<T>::Constant(m.cols(), Q::bottom());
    for (const auto& pair : pairs) {
        detail::require_nucleus(m, pair, tol, "nucleus_product");
        pre = pointwise_meet(pre, pair.pre);
        opco = pointwise_join(opco, pair.opco);
    }
    return {std::move(pre), closure(m, opco, Side::Opco)};
}

/// Coproduct in the nucleus: close the pointwise join of the presheaves,
/// take the coproduct of the opcopresheaves (a pointwise meet).
template <class MD>
NucleusPair<typename MD::Scalar> nucleus_coproduct(const Eigen::MatrixBase<MD>& m,
                                                   std::span<const NucleusPair<typename MD::Scalar>> pairs,
                                                   double tol = QuantaleTraits<typename MD::Scalar>::default_tolerance()) {
    using T = typename MD::Scalar;
    using Q = QuantaleTraits<T>;
    Presheaf<T> pre = Presheaf<T>::Constant(m.rows(), Q::bottom());
    Presheaf<T> opco = Presheaf<T>::Constant(m.cols(), Q::top());
    for (const auto& pair : pairs) {
        detail::require_nucleus(m, pair, tol, "nucleus_coproduct");
        pre = pointwise_join(pre, pair.pre);
        opco = pointwise_meet(opco, pair.opco);
    }
    return {closure(m, pre, Side::Pre), std::move(opco)};
}

/// v (.) (P, Q) = (closure of v (x) P, [v, Q]).
template <class MD>
NucleusPair<typename MD::Scalar> nucleus_tensor(const Eigen::MatrixBase<MD>& m, const typename MD::Scalar& v,
                                                const NucleusPair<typename MD::Scalar>& pair,
                                                double tol = QuantaleTraits<typename MD::Scalar>::default_tolerance()) {
    detail::require_nucleus(m, pair, tol, "nucleus_tensor");
    return {closure(m, pointwise_tensor(v, pair.pre), Side::Pre), pointwise_residuate(v, pair.opco)};
}

/// v |> (P, Q) = ([v, P], closure of v (x) Q).
/// On opcopresheaves the cotensor is the pointwise tensor.
template <class MD>
NucleusPair<typename MD::Scalar> nucleus_cotensor(const Eigen::MatrixBase<MD>& m, const typename MD::Scalar& v,
                                                  const NucleusPair<typename MD::Scalar>& pair,
                                                  double tol = QuantaleTraits<typename MD::Scalar>::default_tolerance()) {
    detail::require_nucleus(m, pair, tol, "nucleus_cotensor");
    return {pointwise_residuate(v, pair.pre), closure(m, pointwise_tensor(v, pair.opco), Side::Opco)};
}

}  // namespace nucleus
