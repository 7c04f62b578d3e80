#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "nct/errors.hpp"
#include "nct/numeric.hpp"

namespace nct {

/// Integer 2x2 matrix (a b; c d).  The Moebius action on a surd x is
/// x -> (c + d x)/(a + b x), matching the row action on a basis (l1, l2):
/// l1' = a l1 + b l2, l2' = c l1 + d l2.  Applying m1 then m2 equals
/// applying the product m2 * m1.
struct Mat2Z {
    Int a, b, c, d;

    Int det() const { return a * d - b * c; }

    friend Mat2Z operator*(const Mat2Z& lhs, const Mat2Z& rhs) {
        return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
                lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
    }

    friend bool operator==(const Mat2Z&, const Mat2Z&) = default;

    static Mat2Z identity() { return {1, 0, 0, 1}; }
};

enum class RootChoice { larger, smaller, positive_preferred };

class QElem;

/// Canonical quadratic surd (P + sqrt(D))/Q.
///
/// Invariants: D > 0 and not a perfect square, Q != 0, Q divides D - P^2,
/// and the triple is the unique reduced representative of its value, so
/// equal real numbers construct equal triples.
class QuadSurd {
public:
    /// Canonicalizes (p + sqrt(d))/q, rescaling by q and removing the
    /// largest square factor of d consistent with integrality.
    QuadSurd(Int p, Int d, Int q);

    /// Selected real root of a x^2 + b x + c = 0.  The discriminant must be
    /// positive and not a perfect square.  positive_preferred picks the
    /// unique positive root when the roots differ in sign and the larger
    /// root otherwise.
    static QuadSurd from_quadratic(const Int& a, const Int& b, const Int& c,
                                   RootChoice which = RootChoice::positive_preferred);

    /// Canonical surd for the irrational value u + v*sqrt(d), v != 0.
    static QuadSurd from_value(const Rat& u, const Rat& v, const Int& d);

    const Int& p() const noexcept { return p_; }
    const Int& d() const noexcept { return d_; }
    const Int& q() const noexcept { return q_; }

    int sign() const;
    Int floor() const;
    QuadSurd conjugate() const;  // (P - sqrt(D))/Q
    QuadSurd negated() const;
    QuadSurd mobius(const Mat2Z& m) const;
    QElem to_elem() const;

    /// Canonical literal: "sqrt(D)", "(P+sqrt(D))/Q" with Q > 0, or the
    /// "(P-sqrt(D))/Q" spelling when the internal Q is negative.
    std::string str() const;

    friend bool operator==(const QuadSurd&, const QuadSurd&) = default;

private:
    struct canonical_tag {};
    QuadSurd(canonical_tag, Int p, Int d, Int q)
        : p_(std::move(p)), d_(std::move(d)), q_(std::move(q)) {}

    Int p_, d_, q_;
};

/// Element x + y*sqrt(D) of the real quadratic field Q(sqrt(D)).
/// Elements of distinct D never mix; mixed-field arithmetic throws
/// field_mismatch_error even when one operand is rational.
class QElem {
public:
    QElem(Rat x, Rat y, Int d);

    static QElem from_rational(Rat x, Int d) { return QElem(std::move(x), Rat(0), std::move(d)); }

    const Rat& x() const noexcept { return x_; }
    const Rat& y() const noexcept { return y_; }
    const Int& d() const noexcept { return d_; }

    bool is_rational() const { return y_ == 0; }
    bool is_zero() const { return x_ == 0 && y_ == 0; }

    /// Exact sign in {-1, 0, +1}; integer arithmetic only.
    int sign() const;

    QElem conjugate() const { return QElem(x_, -y_, d_); }

    friend QElem operator+(const QElem& u, const QElem& v);
    friend QElem operator-(const QElem& u, const QElem& v);
    friend QElem operator*(const QElem& u, const QElem& v);
    friend QElem operator/(const QElem& u, const QElem& v);
    friend QElem operator-(const QElem& u) { return QElem(-u.x_, -u.y_, u.d_); }

    friend bool operator==(const QElem&, const QElem&) = default;

    std::string str() const;

private:
    Rat x_, y_;
    Int d_;
};

using SurdOrRational = std::variant<Rat, QuadSurd>;

/// Parses the literal grammar
///   expr     := rational | surd
///   surd     := "sqrt(" uint ")" | "(" int ("+"|"-") "sqrt(" uint ")" ")/" nzint
///   rational := int ["/" nzint]
/// with optional leading sign and whitespace between tokens.
SurdOrRational parse_surd_literal(std::string_view text);

std::string to_literal(const SurdOrRational& value);

}  // namespace nct
