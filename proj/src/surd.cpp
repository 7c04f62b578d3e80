#include "nct/surd.hpp"

#include <cctype>
#include <utility>

namespace nct {

namespace {

void validate_radicand(const Int& d) {
    if (d <= 0 || is_perfect_square(d))
        throw perfect_square_error("radicand " + d.get_str() +
                                   " does not define a real quadratic irrationality");
}

struct Triple {
    Int p, d, q;
};

// Canonical triple of the value u + v*sqrt(kernel) with kernel squarefree
// and v != 0.  Valid representations (p + sqrt(t^2 kernel))/q of the value
// correspond to the multiples of one minimal scale t, so the minimal t is
// canonical.  Writing u = p/q, v = r/s in lowest terms and putting
// K = r^2 kernel q^2 - p^2 s^2, the constraints on w = t/|r| are
//   q | w s           (integrality of P)
//   s q^2 | w s K     (Q divides D - P^2)
// and the minimal w is their lcm of moduli.
Triple canonical_triple(const Rat& u, const Rat& v, const Int& kernel) {
    const Int& p = u.get_num();
    const Int& q = u.get_den();
    const Int& r = v.get_num();
    const Int& s = v.get_den();

    Int big_k = r * r * kernel * q * q - p * p * s * s;
    Int m1 = q / gcd(q, s);
    Int sq2 = s * q * q;
    Int m2 = sq2 / gcd(sq2, big_k);
    Int w = lcm(m1, m2);
    Int t = abs(r) * w;

    Triple out;
    out.d = t * t * kernel;
    out.q = t * s / r;
    out.p = p * out.q / q;
    return out;
}

Triple canonical_from_value(const Rat& u, const Rat& v, const Int& d) {
    Int kernel, root;
    squarefree_split(d, kernel, root);
    return canonical_triple(u, v * Rat(root), kernel);
}

}  // namespace

QuadSurd::QuadSurd(Int p, Int d, Int q) {
    if (q == 0) throw zero_denominator_error("zero denominator in quadratic surd");
    validate_radicand(d);
    Triple t = canonical_from_value(make_rational(p, q), make_rational(1, q), d);
    p_ = std::move(t.p);
    d_ = std::move(t.d);
    q_ = std::move(t.q);
}

QuadSurd QuadSurd::from_value(const Rat& u, const Rat& v, const Int& d) {
    validate_radicand(d);
    if (v == 0) throw std::invalid_argument("value is rational, not a quadratic surd");
    Triple t = canonical_from_value(u, v, d);
    return QuadSurd(canonical_tag{}, std::move(t.p), std::move(t.d), std::move(t.q));
}

QuadSurd QuadSurd::from_quadratic(const Int& a, const Int& b, const Int& c, RootChoice which) {
    if (a == 0) throw degenerate_linear_error("leading coefficient is zero");
    Int disc = b * b - 4 * a * c;
    if (disc < 0)
        throw negative_discriminant_error("discriminant " + disc.get_str() + " is negative");
    if (is_perfect_square(disc))
        throw rational_roots_error("discriminant " + disc.get_str() +
                                   " is a perfect square; roots are rational");

    QuadSurd plus(-b, disc, 2 * a);
    QuadSurd minus(b, disc, -2 * a);
    const bool plus_is_larger = a > 0;
    switch (which) {
        case RootChoice::larger:
            return plus_is_larger ? plus : minus;
        case RootChoice::smaller:
            return plus_is_larger ? minus : plus;
        case RootChoice::positive_preferred:
            break;
    }
    const bool plus_pos = plus.sign() > 0;
    const bool minus_pos = minus.sign() > 0;
    if (plus_pos != minus_pos) return plus_pos ? plus : minus;
    return plus_is_larger ? plus : minus;
}

int QuadSurd::sign() const {
    // P + sqrt(D) is never zero; its sign is +1 unless P < 0 and P^2 > D.
    int numerator_sign = (p_ >= 0 || d_ > p_ * p_) ? 1 : -1;
    return numerator_sign * sgn(q_);
}

Int QuadSurd::floor() const {
    Int s = isqrt(d_);
    if (q_ > 0) return floor_div(p_ + s, q_);
    // (P + sqrt(D))/Q = (-P - sqrt(D))/(-Q); an integer m satisfies
    // m <= -sqrt(D) exactly when m <= -(s+1).
    return floor_div(-p_ - s - 1, -q_);
}

QuadSurd QuadSurd::conjugate() const {
    // (P - sqrt(D))/Q rewritten over +sqrt(D); the triple stays canonical.
    return QuadSurd(canonical_tag{}, -p_, d_, -q_);
}

QuadSurd QuadSurd::negated() const {
    return QuadSurd(canonical_tag{}, p_, d_, -q_);
}

QElem QuadSurd::to_elem() const {
    return QElem(make_rational(p_, q_), make_rational(1, q_), d_);
}

QuadSurd QuadSurd::mobius(const Mat2Z& m) const {
    if (m.det() == 0)
        throw singular_matrix_error("moebius action requires a nonsingular matrix");
    QElem x = to_elem();
    QElem num = QElem::from_rational(Rat(m.c), d_) + QElem::from_rational(Rat(m.d), d_) * x;
    QElem den = QElem::from_rational(Rat(m.a), d_) + QElem::from_rational(Rat(m.b), d_) * x;
    QElem r = num / den;
    return from_value(r.x(), r.y(), d_);
}

std::string QuadSurd::str() const {
    if (q_ == 1 && p_ == 0) return "sqrt(" + d_.get_str() + ")";
    if (q_ > 0)
        return "(" + p_.get_str() + "+sqrt(" + d_.get_str() + "))/" + q_.get_str();
    Int np = -p_;
    Int nq = -q_;
    return "(" + np.get_str() + "-sqrt(" + d_.get_str() + "))/" + nq.get_str();
}

// --- QElem -------------------------------------------------------------------

QElem::QElem(Rat x, Rat y, Int d) : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {
    validate_radicand(d_);
}

namespace {

void require_same_field(const QElem& u, const QElem& v) {
    if (u.d() != v.d())
        throw field_mismatch_error("field mismatch: sqrt(" + u.d().get_str() + ") vs sqrt(" +
                                   v.d().get_str() + ")");
}

}  // namespace

QElem operator+(const QElem& u, const QElem& v) {
    require_same_field(u, v);
    return QElem(u.x_ + v.x_, u.y_ + v.y_, u.d_);
}

QElem operator-(const QElem& u, const QElem& v) {
    require_same_field(u, v);
    return QElem(u.x_ - v.x_, u.y_ - v.y_, u.d_);
}

QElem operator*(const QElem& u, const QElem& v) {
    require_same_field(u, v);
    Rat dd(u.d_);
    return QElem(u.x_ * v.x_ + dd * u.y_ * v.y_, u.x_ * v.y_ + u.y_ * v.x_, u.d_);
}

QElem operator/(const QElem& u, const QElem& v) {
    require_same_field(u, v);
    if (v.is_zero()) throw division_by_zero_error("division by zero field element");
    // Multiply by the conjugate; the norm x^2 - D y^2 vanishes only at zero.
    Rat norm = v.x_ * v.x_ - Rat(v.d_) * v.y_ * v.y_;
    QElem num = u * v.conjugate();
    return QElem(num.x_ / norm, num.y_ / norm, u.d_);
}

int QElem::sign() const {
    int sx = sgn(x_);
    int sy = sgn(y_);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // Opposite signs: compare x^2 against D y^2 (both sides squared keeps
    // the comparison in the rationals; equality cannot occur since D is
    // not a square).
    Rat cmp = x_ * x_ - Rat(d_) * y_ * y_;
    return sx > 0 ? sgn(cmp) : -sgn(cmp);
}

std::string QElem::str() const {
    if (y_ == 0) return x_.get_str();
    std::string root = "sqrt(" + d_.get_str() + ")";
    Rat ay = abs(y_);
    std::string ypart = (ay == 1 ? root : ay.get_str() + "*" + root);
    if (x_ == 0) return (y_ < 0 ? "-" : "") + ypart;
    return x_.get_str() + (y_ < 0 ? "-" : "+") + ypart;
}

// --- literal parser ----------------------------------------------------------

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }
    std::size_t pos() const { return pos_; }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!consume(c)) fail(std::string("expected '") + c + "' (" + what + ")");
    }

    bool consume_word(std::string_view w) {
        if (text_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    Int parse_uint() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
        return Int(digits);
    }

    Int parse_int() {
        bool neg = false;
        if (consume('-'))
            neg = true;
        else
            consume('+');
        skip_ws();
        Int v = parse_uint();
        return neg ? Int(-v) : v;
    }

    [[noreturn]] void fail(const std::string& what) const { throw syntax_error(what, pos_); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// "sqrt" has already been consumed.
Int parse_radicand(Scanner& sc) {
    sc.skip_ws();
    sc.expect('(', "radicand");
    sc.skip_ws();
    Int d = sc.parse_uint();
    sc.skip_ws();
    sc.expect(')', "radicand");
    return d;
}

SurdOrRational parse_body(Scanner& sc) {
    if (sc.consume_word("sqrt")) {
        Int d = parse_radicand(sc);
        return QuadSurd(0, d, 1);
    }
    if (sc.consume('(')) {
        sc.skip_ws();
        Int p = sc.parse_int();
        sc.skip_ws();
        bool minus;
        if (sc.consume('+'))
            minus = false;
        else if (sc.consume('-'))
            minus = true;
        else
            sc.fail("expected '+' or '-' before sqrt");
        sc.skip_ws();
        if (!sc.consume_word("sqrt")) sc.fail("expected sqrt");
        Int d = parse_radicand(sc);
        sc.skip_ws();
        sc.expect(')', "surd");
        sc.skip_ws();
        sc.expect('/', "surd denominator");
        sc.skip_ws();
        std::size_t qpos = sc.pos();
        Int q = sc.parse_int();
        if (q == 0) throw syntax_error("denominator must be nonzero", qpos);
        // (p - sqrt(d))/q equals ((-p) + sqrt(d))/(-q).
        return minus ? QuadSurd(-p, d, -q) : QuadSurd(p, d, q);
    }
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        Int n = sc.parse_uint();
        sc.skip_ws();
        if (sc.consume('/')) {
            sc.skip_ws();
            std::size_t dpos = sc.pos();
            Int den = sc.parse_int();
            if (den == 0) throw syntax_error("denominator must be nonzero", dpos);
            return make_rational(n, den);
        }
        return Rat(n);
    }
    sc.fail("expected a rational or a surd");
}

}  // namespace

SurdOrRational parse_surd_literal(std::string_view text) {
    Scanner sc(text);
    sc.skip_ws();
    bool neg = false;
    if (sc.consume('-'))
        neg = true;
    else
        sc.consume('+');
    sc.skip_ws();
    SurdOrRational value = parse_body(sc);
    sc.skip_ws();
    if (!sc.eof()) sc.fail("unexpected trailing characters");
    if (!neg) return value;
    if (auto* r = std::get_if<Rat>(&value)) return Rat(-*r);
    return std::get<QuadSurd>(value).negated();
}

std::string to_literal(const SurdOrRational& value) {
    if (const auto* r = std::get_if<Rat>(&value)) return r->get_str();
    return std::get<QuadSurd>(value).str();
}

}  // namespace nct
