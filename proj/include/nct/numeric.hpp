#pragma once

#include <gmpxx.h>

#include <string>

namespace nct {

using Int = mpz_class;
using Rat = mpq_class;

/// Reduced rational num/den with a positive denominator.
/// Throws zero_denominator_error when den == 0.
Rat make_rational(const Int& num, const Int& den);

/// Floor division (rounds toward minus infinity). d != 0.
Int floor_div(const Int& n, const Int& d);

/// Floor of sqrt(n) for n >= 0.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n);

/// Splits n >= 1 as root^2 * kernel with kernel squarefree.
///
/// Exact for word-sized n and for larger n whose squarefree kernel is at
/// most 10^6 (which covers every radicand this library produces from
/// canonical inputs); otherwise throws canonicalization_error rather than
/// returning a representative that might not be fully reduced.
void squarefree_split(const Int& n, Int& kernel, Int& root);

}  // namespace nct
