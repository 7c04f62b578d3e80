#include "nct/functor.hpp"

#include <optional>
#include <utility>

namespace nct {

namespace {

QElem scale_from_theta(const Mat2Z& m, const QuadSurd& theta) {
    // k = a + b theta
    return QElem::from_rational(Rat(m.a), theta.d()) +
           QElem::from_rational(Rat(m.b), theta.d()) * theta.to_elem();
}

}  // namespace

ScalingOutcome classify_scaling(const Mat2Z& m) {
    if (m.b != 0) {
        Int trace = m.a + m.d;
        Int delta = trace * trace - 4 * m.det();
        if (delta > 0) {
            if (is_perfect_square(delta))
                return RationalRejected{RationalRejected::Branch::delta_square};
            QuadSurd theta = QuadSurd::from_quadratic(m.b, m.a - m.d, -m.c,
                                                      RootChoice::positive_preferred);
            return ScalingCase1{theta, scale_from_theta(m, theta), std::move(delta)};
        }
        if (delta == 0) return RankDegenerate{};
        Int delta_prime = trace * trace - 4 * m.b * m.c;
        if (is_perfect_square(delta_prime))
            return RationalRejected{RationalRejected::Branch::delta_prime_square};
        QuadSurd theta =
            QuadSurd::from_quadratic(m.b, m.a + m.d, m.c, RootChoice::positive_preferred);
        return ScalingCase4{theta, scale_from_theta(m, theta), std::move(delta_prime)};
    }
    if (m.a != m.d) return RationalRejected{RationalRejected::Branch::linear};
    if (m.c != 0) return EmptySolution{};
    return TrivialInteger{m.a};
}

QuadSurd isogeny_transport(const QuadSurd& theta, const Mat2Z& m) {
    return theta.mobius(m);
}

CmOrder::CmOrder(Int d, OrderForm form) : d_(std::move(d)), form_(form) {
    if (d_ <= 0) throw invalid_order_error("order parameter must be positive");
    Int kernel, root;
    squarefree_split(d_, kernel, root);
    if (root != 1)
        throw invalid_order_error("order parameter " + d_.get_str() + " is not squarefree");
    if (form_ == OrderForm::half_form && d_ % 4 != 3)
        throw invalid_order_error("half-integer generator needs d = 3 mod 4, got " + d_.get_str());
}

Mat2Z cm_generator_matrix(const CmOrder& order) {
    if (order.form() == OrderForm::sqrt_form) {
        // omega * 1 = omega; omega * omega = -d
        return {0, 1, -order.d(), 0};
    }
    // omega^2 = omega - (1+d)/4 for omega = (1 + sqrt(-d))/2
    return {0, 1, -((1 + order.d()) / 4), 1};
}

RealMultiplication real_multiplication_theta(const CmOrder& order) {
    Mat2Z gen = cm_generator_matrix(order);
    auto quadratic = [](const ScalingOutcome& out)
        -> std::optional<std::pair<QuadSurd, QElem>> {
        if (const auto* c1 = std::get_if<ScalingCase1>(&out)) return {{c1->theta, c1->k}};
        if (const auto* c4 = std::get_if<ScalingCase4>(&out)) return {{c4->theta, c4->k}};
        return std::nullopt;
    };

    if (auto hit = quadratic(classify_scaling(gen)))
        return {std::move(hit->first), std::move(hit->second), "omega"};

    Mat2Z shifted{gen.a + 1, gen.b, gen.c, gen.d + 1};
    if (auto hit = quadratic(classify_scaling(shifted)))
        return {std::move(hit->first), std::move(hit->second), "1+omega"};

    throw no_nontrivial_generator_error("both omega and 1+omega degenerate for d=" +
                                        order.d().get_str());
}

FoliationParams foliation_params(const Rat& lambda1, const Rat& lambda2) {
    if (lambda1 <= 0 || lambda2 <= 0)
        throw nonpositive_period_error("periods must be positive, got (" + lambda1.get_str() +
                                       ", " + lambda2.get_str() + ")");
    return {lambda1, SurdOrRational(Rat(lambda2 / lambda1))};
}

}  // namespace nct
