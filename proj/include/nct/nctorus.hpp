#pragma once

#include <cstddef>
#include <vector>

#include "nct/cfrac.hpp"
#include "nct/surd.hpp"

namespace nct {

/// Noncommutative torus with real multiplication, modeled entirely by its
/// irrational slope theta and the K-theoretic data derived from it.
class NcTorus {
public:
    explicit NcTorus(QuadSurd theta) : theta_(std::move(theta)) {}

    /// Rejects rational input with rational_theta_error.
    static NcTorus make(const SurdOrRational& value);

    const QuadSurd& theta() const noexcept { return theta_; }

private:
    QuadSurd theta_;
};

/// Length of the minimal period of the continued fraction of theta.
std::size_t arithmetic_complexity(const NcTorus& t);

/// Minimal period rotated to its lexicographically smallest representative
/// (unless canonicalize is false, which keeps the period as expanded),
/// divided entrywise by its first element.  Invariant under cyclic
/// permutation of the period when canonicalized.
std::vector<Rat> normalized_period(const NcTorus& t, bool canonicalize = true);

/// theta' == theta mod GL(2, Z), via continued-fraction tails.
bool stably_isomorphic(const NcTorus& t1, const NcTorus& t2);

/// Element of K0 = Z^2.
struct K0Class {
    Int p;
    Int q;

    friend bool operator==(const K0Class&, const K0Class&) = default;
};

/// Membership in the positive cone { (p, q) : p + theta q >= 0 }.
bool k0_positive(const NcTorus& t, const K0Class& cls);

/// Pseudo-lattice mu (Z + theta Z) inside the real quadratic field; mu > 0
/// and mu shares the field of theta.
class PseudoLattice {
public:
    PseudoLattice(QElem mu, QuadSurd theta);

    const QElem& mu() const noexcept { return mu_; }
    const QuadSurd& theta() const noexcept { return theta_; }

private:
    QElem mu_;
    QuadSurd theta_;
};

/// Equality of pseudo-lattices as subsets of R: true iff the basis
/// (mu2, mu2 theta2) has integer coordinates in (mu1, mu1 theta1) with
/// determinant +-1.
bool module_equal(const PseudoLattice& m1, const PseudoLattice& m2);

}  // namespace nct
