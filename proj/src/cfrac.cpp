#include "nct/cfrac.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

namespace nct {

CFExpansion cf_of_rational(const Rat& r) {
    std::vector<Int> terms;
    Int n = r.get_num();
    Int d = r.get_den();
    while (true) {
        Int a = floor_div(n, d);
        terms.push_back(a);
        Int rem = n - a * d;
        if (rem == 0) break;
        n = d;
        d = rem;
    }
    return {std::move(terms), {}};
}

CFExpansion cf_of_surd(const QuadSurd& x) {
    const Int& big_d = x.d();
    const Int root = isqrt(big_d);
    Int p = x.p();
    Int q = x.q();

    std::vector<Int> digits;
    std::map<std::pair<Int, Int>, std::size_t> seen;
    for (std::size_t idx = 0;; ++idx) {
        auto [it, fresh] = seen.emplace(std::pair(p, q), idx);
        if (!fresh) {
            std::size_t start = it->second;
            return {{digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start)},
                    {digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end()}};
        }
        Int a = (q > 0) ? floor_div(p + root, q) : floor_div(-p - root - 1, -q);
        digits.push_back(a);
        p = a * q - p;
        q = (big_d - p * p) / q;
    }
}

namespace {

const Int& digit_at(const CFExpansion& cf, std::size_t i) {
    if (i < cf.preperiod.size()) return cf.preperiod[i];
    return cf.period[(i - cf.preperiod.size()) % cf.period.size()];
}

}  // namespace

std::vector<Convergent> cf_convergents(const CFExpansion& cf, std::size_t n) {
    if (n == 0) throw std::invalid_argument("need at least one convergent");
    if (cf.rational() && n > cf.preperiod.size())
        throw not_enough_terms_error("expansion has only " + std::to_string(cf.preperiod.size()) +
                                     " terms, " + std::to_string(n) + " requested");
    std::vector<Convergent> out;
    out.reserve(n);
    Int p_prev = 1, p_prev2 = 0;
    Int q_prev = 0, q_prev2 = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const Int& a = digit_at(cf, i);
        Int p = a * p_prev + p_prev2;
        Int q = a * q_prev + q_prev2;
        out.push_back({p, q});
        p_prev2 = std::move(p_prev);
        p_prev = std::move(p);
        q_prev2 = std::move(q_prev);
        q_prev = std::move(q);
    }
    return out;
}

QuadSurd cf_to_surd(const CFExpansion& cf) {
    if (cf.period.empty()) throw rational_expansion_error("expansion has an empty period");
    for (std::size_t i = 1; i < cf.preperiod.size(); ++i)
        if (cf.preperiod[i] < 1) throw std::invalid_argument("partial quotients after a0 must be >= 1");
    for (const Int& b : cf.period)
        if (b < 1) throw std::invalid_argument("period entries must be >= 1");

    // Fixed point of the periodic tail: y = (h y + h') / (k y + k') for the
    // period's convergent matrix, hence k y^2 + (k' - h) y - h' = 0.
    Int h_prev = 1, h_prev2 = 0;
    Int k_prev = 0, k_prev2 = 1;
    for (const Int& b : cf.period) {
        Int h = b * h_prev + h_prev2;
        Int k = b * k_prev + k_prev2;
        h_prev2 = std::move(h_prev);
        h_prev = std::move(h);
        k_prev2 = std::move(k_prev);
        k_prev = std::move(k);
    }
    QuadSurd tail = QuadSurd::from_quadratic(k_prev, k_prev2 - h_prev, -h_prev2, RootChoice::larger);

    if (cf.preperiod.empty()) return tail;

    Int p_prev = 1, p_prev2 = 0;
    Int q_prev = 0, q_prev2 = 1;
    for (const Int& a : cf.preperiod) {
        Int p = a * p_prev + p_prev2;
        Int q = a * q_prev + q_prev2;
        p_prev2 = std::move(p_prev);
        p_prev = std::move(p);
        q_prev2 = std::move(q_prev);
        q_prev = std::move(q);
    }
    // x = (p_k y + p_{k-1}) / (q_k y + q_{k-1})
    return tail.mobius({q_prev2, q_prev, p_prev2, p_prev});
}

bool cf_tail_equivalent(const QuadSurd& x, const QuadSurd& y) {
    std::vector<Int> px = cf_of_surd(x).period;
    std::vector<Int> py = cf_of_surd(y).period;
    if (px.size() != py.size()) return false;
    std::vector<Int> doubled = px;
    doubled.insert(doubled.end(), px.begin(), px.end());
    return std::search(doubled.begin(), doubled.end(), py.begin(), py.end()) != doubled.end();
}

// --- textual form --------------------------------------------------------------

std::string CFExpansion::str() const {
    auto join = [](const std::vector<Int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += v[i].get_str();
        }
        return s;
    };
    std::string out = "[";
    if (preperiod.empty()) {
        out += "(" + join(period) + ")";
    } else {
        out += preperiod.front().get_str();
        std::vector<std::string> rest;
        for (std::size_t i = 1; i < preperiod.size(); ++i) rest.push_back(preperiod[i].get_str());
        if (!period.empty()) rest.push_back("(" + join(period) + ")");
        if (!rest.empty()) {
            out += "; ";
            for (std::size_t i = 0; i < rest.size(); ++i) {
                if (i) out += ", ";
                out += rest[i];
            }
        }
    }
    out += "]";
    return out;
}

namespace {

class CfScanner {
public:
    explicit CfScanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }
    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }
    Int parse_int() {
        bool neg = consume('-');
        if (!neg) consume('+');
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
        Int v(digits);
        return neg ? Int(-v) : v;
    }
    [[noreturn]] void fail(const std::string& what) const { throw syntax_error(what, pos_); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::vector<Int> parse_paren_list(CfScanner& sc) {
    std::vector<Int> out;
    sc.expect('(');
    sc.skip_ws();
    out.push_back(sc.parse_int());
    sc.skip_ws();
    while (sc.consume(',')) {
        sc.skip_ws();
        out.push_back(sc.parse_int());
        sc.skip_ws();
    }
    sc.expect(')');
    return out;
}

}  // namespace

CFExpansion CFExpansion::parse(std::string_view text) {
    CfScanner sc(text);
    CFExpansion cf;
    sc.skip_ws();
    sc.expect('[');
    sc.skip_ws();
    if (sc.peek() == '(') {
        cf.period = parse_paren_list(sc);
    } else {
        cf.preperiod.push_back(sc.parse_int());
        sc.skip_ws();
        if (sc.consume(';')) {
            bool saw_period = false;
            do {
                sc.skip_ws();
                if (sc.peek() == '(') {
                    cf.period = parse_paren_list(sc);
                    saw_period = true;
                    sc.skip_ws();
                    break;
                }
                cf.preperiod.push_back(sc.parse_int());
                sc.skip_ws();
            } while (sc.consume(','));
            if (saw_period && sc.consume(',')) sc.fail("period block must come last");
        }
    }
    sc.skip_ws();
    sc.expect(']');
    sc.skip_ws();
    if (!sc.eof()) sc.fail("unexpected trailing characters");
    return cf;
}

}  // namespace nct
