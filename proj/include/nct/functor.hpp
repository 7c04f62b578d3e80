#pragma once

#include <string>
#include <variant>

#include "nct/surd.hpp"

namespace nct {

// Classification of an integer matrix (a b; c d) acting on a rank-2
// pseudo-lattice, after the scaling equation k l1 = a l1 + b l2,
// k l2 = c l1 + d l2 with (l1, l2) = (1, theta).  Writing
// delta = (a+d)^2 - 4(ad-bc) and delta' = (a+d)^2 - 4bc:

/// delta > 0 and not a square: theta solves b t^2 + (a-d) t - c = 0 and
/// k = a + b theta; k theta = c + d theta holds exactly.
struct ScalingCase1 {
    QuadSurd theta;
    QElem k;
    Int delta;
};

/// delta < 0 and delta' not a square: after flipping the sign of the second
/// basis vector, theta solves b t^2 + (a+d) t + c = 0 and k = a + b theta;
/// here k theta = -(c + d theta).  delta' > 0 always (bc < 0).
struct ScalingCase4 {
    QuadSurd theta;
    QElem k;
    Int delta_prime;
};

/// The would-be slope is rational, so no rank-2 solution exists.
struct RationalRejected {
    enum class Branch { delta_square, delta_prime_square, linear };
    Branch branch;

    friend bool operator==(const RationalRejected&, const RationalRejected&) = default;
};

/// delta = 0: double rational root, rank-1 degeneration.
struct RankDegenerate {
    friend bool operator==(const RankDegenerate&, const RankDegenerate&) = default;
};

/// b = 0, a = d, c != 0: no slope satisfies the system.
struct EmptySolution {
    friend bool operator==(const EmptySolution&, const EmptySolution&) = default;
};

/// b = 0, a = d, c = 0: the matrix is an integer scalar; every irrational
/// slope is fixed and k = a.
struct TrivialInteger {
    Int k;

    friend bool operator==(const TrivialInteger&, const TrivialInteger&) = default;
};

using ScalingOutcome = std::variant<ScalingCase1, ScalingCase4, RationalRejected, RankDegenerate,
                                   EmptySolution, TrivialInteger>;

/// Total classification; exactly one alternative fires for every matrix.
ScalingOutcome classify_scaling(const Mat2Z& m);

/// Slope transport along an isogeny acting by m on homology:
/// theta -> (c + d theta)/(a + b theta).  det m = +-1 preserves the stable
/// isomorphism class.
QuadSurd isogeny_transport(const QuadSurd& theta, const Mat2Z& m);

enum class OrderForm {
    sqrt_form,  // omega = sqrt(-d)
    half_form,  // omega = (1 + sqrt(-d))/2, needs d = 3 mod 4
};

/// Order Z[omega] in an imaginary quadratic field, d positive squarefree.
class CmOrder {
public:
    CmOrder(Int d, OrderForm form);

    const Int& d() const noexcept { return d_; }
    OrderForm form() const noexcept { return form_; }

    friend bool operator==(const CmOrder&, const CmOrder&) = default;

private:
    Int d_;
    OrderForm form_;
};

/// Matrix of multiplication by omega on the basis {1, omega} in the row
/// convention above: (0, 1; -d, 0) for sqrt, (0, 1; -(1+d)/4, 1) for half.
Mat2Z cm_generator_matrix(const CmOrder& order);

struct RealMultiplication {
    QuadSurd theta;
    QElem k;
    std::string generator;  // "omega" or "1+omega"
};

/// Classifies the multiplication-by-omega matrix; on a degenerate outcome
/// retries with 1 + omega and records which generator succeeded.
RealMultiplication real_multiplication_theta(const CmOrder& order);

struct FoliationParams {
    Rat mu;
    SurdOrRational theta;
};

/// Slope and transverse measure of the foliation with periods (l1, l2):
/// mu = l1 and theta = l2/l1.  Both periods must be positive.
FoliationParams foliation_params(const Rat& lambda1, const Rat& lambda2);

}  // namespace nct
