#include "nct/nctorus.hpp"

#include <stdexcept>
#include <utility>

namespace nct {

NcTorus NcTorus::make(const SurdOrRational& value) {
    if (const auto* r = std::get_if<Rat>(&value))
        throw rational_theta_error("rational slope " + r->get_str() +
                                   " does not define a noncommutative torus");
    return NcTorus(std::get<QuadSurd>(value));
}

std::size_t arithmetic_complexity(const NcTorus& t) {
    return cf_of_surd(t.theta()).period.size();
}

namespace {

std::vector<Int> lex_min_rotation(const std::vector<Int>& w) {
    const std::size_t n = w.size();
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Int& lhs = w[(i + k) % n];
            const Int& rhs = w[(best + k) % n];
            if (lhs < rhs) {
                best = i;
                break;
            }
            if (lhs > rhs) break;
        }
    }
    std::vector<Int> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(w[(best + k) % n]);
    return out;
}

}  // namespace

std::vector<Rat> normalized_period(const NcTorus& t, bool canonicalize) {
    std::vector<Int> period = cf_of_surd(t.theta()).period;
    if (canonicalize) period = lex_min_rotation(period);
    std::vector<Rat> out;
    out.reserve(period.size());
    for (const Int& a : period) out.push_back(make_rational(a, period.front()));
    return out;
}

bool stably_isomorphic(const NcTorus& t1, const NcTorus& t2) {
    return cf_tail_equivalent(t1.theta(), t2.theta());
}

bool k0_positive(const NcTorus& t, const K0Class& cls) {
    const Int& d = t.theta().d();
    QElem value = QElem::from_rational(Rat(cls.p), d) +
                  QElem::from_rational(Rat(cls.q), d) * t.theta().to_elem();
    return value.sign() >= 0;
}

PseudoLattice::PseudoLattice(QElem mu, QuadSurd theta)
    : mu_(std::move(mu)), theta_(std::move(theta)) {
    if (mu_.d() != theta_.d())
        throw field_mismatch_error("pseudo-lattice scale and slope lie in different fields");
    if (mu_.sign() <= 0) throw std::invalid_argument("pseudo-lattice scale must be positive");
}

bool module_equal(const PseudoLattice& m1, const PseudoLattice& m2) {
    if (m1.theta().d() != m2.theta().d())
        throw field_mismatch_error("pseudo-lattices lie in different fields");

    // Coordinates of z in the basis {1, theta1}: with theta1 = (P+sqrt(D))/Q
    // one has sqrt(D) = Q theta1 - P, so x + y sqrt(D) = (x - yP) + yQ theta1.
    const QuadSurd& th = m1.theta();
    auto coords = [&th](const QElem& z) {
        return std::pair<Rat, Rat>(z.x() - z.y() * Rat(th.p()), z.y() * Rat(th.q()));
    };

    QElem r1 = m2.mu() / m1.mu();
    QElem r2 = m2.mu() * m2.theta().to_elem() / m1.mu();
    auto [a, b] = coords(r1);
    auto [c, d] = coords(r2);
    auto integral = [](const Rat& r) { return r.get_den() == 1; };
    if (!integral(a) || !integral(b) || !integral(c) || !integral(d)) return false;
    Int det = a.get_num() * d.get_num() - b.get_num() * c.get_num();
    return det == 1 || det == -1;
}

}  // namespace nct
