#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nct/surd.hpp"

namespace nct {

/// Regular continued fraction, split into a minimal preperiod and a minimal
/// period.  The period is empty exactly for rationals.  a0 may be any
/// integer; every later partial quotient is >= 1, and a finite expansion of
/// length > 1 ends with a term >= 2.
struct CFExpansion {
    std::vector<Int> preperiod;
    std::vector<Int> period;

    bool rational() const { return period.empty(); }

    /// Textual form "[a0; a1, a2, (b1, b2, ...)]"; the parenthesized block
    /// is the period.  Parses back bit-exactly with CFExpansion::parse.
    std::string str() const;
    static CFExpansion parse(std::string_view text);

    friend bool operator==(const CFExpansion&, const CFExpansion&) = default;
};

struct Convergent {
    Int p;
    Int q;  // positive; gcd(p, q) = 1

    Rat value() const { return make_rational(p, q); }

    friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// Finite canonical expansion via the Euclidean algorithm.
CFExpansion cf_of_rational(const Rat& r);

/// Expansion of a canonical surd by the integer recurrence
///   a_n = floor((P_n + sqrt(D))/Q_n),
///   P_{n+1} = a_n Q_n - P_n,  Q_{n+1} = (D - P_{n+1}^2)/Q_n,
/// cutting at the first repeated state (P, Q).
CFExpansion cf_of_surd(const QuadSurd& x);

/// First n convergents.  Throws not_enough_terms_error when a rational
/// expansion has fewer than n terms.
std::vector<Convergent> cf_convergents(const CFExpansion& cf, std::size_t n);

/// Value of an eventually periodic expansion: solves the fixed-point
/// quadratic of the periodic tail, then transports through the preperiod.
/// Throws rational_expansion_error when the period is empty.
QuadSurd cf_to_surd(const CFExpansion& cf);

/// GL(2,Z) equivalence of quadratic irrationalities: true iff the minimal
/// periods are cyclic rotations of one another.
bool cf_tail_equivalent(const QuadSurd& x, const QuadSurd& y);

}  // namespace nct
