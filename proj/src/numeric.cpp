#include "nct/numeric.hpp"

#include <cstdint>

#include "nct/errors.hpp"

namespace nct {

namespace {

constexpr unsigned long kStripBound = 10'000;      // small-prime square stripping
constexpr unsigned long kKernelScanMax = 1'000'000;  // ascending kernel search

// Trial division for n that fits an unsigned 64-bit word.
void squarefree_split_word(std::uint64_t n, Int& kernel, Int& root) {
    Int k = 1;
    Int r = 1;
    for (std::uint64_t f = 2; f <= n / f; f += (f == 2) ? 1 : 2) {
        if (n % f == 0) {
            int count = 0;
            while (n % f == 0) {
                n /= f;
                ++count;
            }
            for (int i = 0; i < count / 2; ++i) r *= static_cast<unsigned long>(f);
            if (count % 2) k *= static_cast<unsigned long>(f);
        }
    }
    k *= static_cast<unsigned long>(n);
    kernel = k;
    root = r;
}

}  // namespace

Rat make_rational(const Int& num, const Int& den) {
    if (den == 0) throw zero_denominator_error("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int floor_div(const Int& n, const Int& d) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

void squarefree_split(const Int& n, Int& kernel, Int& root) {
    if (n.fits_ulong_p()) {
        squarefree_split_word(n.get_ui(), kernel, root);
        return;
    }

    // Large radicands arise from fixed-point quadratics whose coefficients
    // grow with the period length; their kernel stays small, so scan
    // candidate kernels upward.  The first divisor with a square cofactor
    // is the squarefree kernel.
    Int rest = n;
    Int r = 1;
    for (int pass = 0; pass < 2; ++pass) {
        Int quot;
        for (unsigned long k = 1; k <= kKernelScanMax; ++k) {
            if (!mpz_divisible_ui_p(rest.get_mpz_t(), k)) continue;
            mpz_divexact_ui(quot.get_mpz_t(), rest.get_mpz_t(), k);
            if (mpz_perfect_square_p(quot.get_mpz_t())) {
                kernel = static_cast<unsigned long>(k);
                root = r * isqrt(quot);
                return;
            }
        }
        if (pass == 1) break;
        // Strip small square prime factors and rescan.
        for (unsigned long p = 2; p <= kStripBound; p += (p == 2) ? 1 : 2) {
            const unsigned long p2 = p * p;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), p2)) {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p2);
                r *= p;
            }
        }
        if (rest.fits_ulong_p()) {
            squarefree_split_word(rest.get_ui(), kernel, root);
            root *= r;
            return;
        }
    }
    throw canonicalization_error(
        "square-part extraction failed: radicand " + n.get_str() +
        " is too large to reduce within the supported bounds");
}

}  // namespace nct
