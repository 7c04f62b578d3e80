#include "nct/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "nct/harness.hpp"
#include "nct/nctorus.hpp"

namespace nct {

namespace {

constexpr const char* kLiteralGrammar =
    "literal grammar:\n"
    "  expr     := rational | surd\n"
    "  surd     := \"sqrt(\" uint \")\" | \"(\" int (\"+\"|\"-\") \"sqrt(\" uint \")\" \")/\" nzint\n"
    "  rational := int [\"/\" nzint]\n";

Int parse_integer_arg(const std::string& text, const char* what) {
    try {
        return Int(text);
    } catch (const std::invalid_argument&) {
        throw syntax_error(std::string(what) + ": not an integer: " + text, 0);
    }
}

QuadSurd parse_surd_arg(const std::string& text) {
    return NcTorus::make(parse_surd_literal(text)).theta();
}

Rat parse_rational_arg(const std::string& text) {
    SurdOrRational v = parse_surd_literal(text);
    if (const auto* r = std::get_if<Rat>(&v)) return *r;
    throw rational_theta_error("expected a rational, got the surd " + to_literal(v));
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string scaling_text(const ScalingOutcome& out) {
    struct Printer {
        std::string operator()(const ScalingCase1& c) const {
            return "case=1 theta=" + c.theta.str() + " k=" + c.k.str() +
                   " delta=" + c.delta.get_str();
        }
        std::string operator()(const ScalingCase4& c) const {
            return "case=4 theta=" + c.theta.str() + " k=" + c.k.str() +
                   " delta_prime=" + c.delta_prime.get_str();
        }
        std::string operator()(const RationalRejected& c) const {
            switch (c.branch) {
                case RationalRejected::Branch::delta_square:
                    return "case=rational-rejected branch=2";
                case RationalRejected::Branch::delta_prime_square:
                    return "case=rational-rejected branch=5";
                case RationalRejected::Branch::linear:
                    return "case=rational-rejected branch=b0-linear";
            }
            return {};
        }
        std::string operator()(const RankDegenerate&) const { return "case=rank-degenerate"; }
        std::string operator()(const EmptySolution&) const { return "case=empty-solution"; }
        std::string operator()(const TrivialInteger& c) const {
            return "case=trivial-integer k=" + c.k.get_str();
        }
    };
    return std::visit(Printer{}, out);
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact invariants of noncommutative tori with real multiplication"};
    app.require_subcommand(1);

    std::function<void()> action;

    // cf <literal>
    auto* cf_cmd = app.add_subcommand("cf", "continued fraction of a rational or quadratic surd");
    std::string cf_literal;
    cf_cmd->add_option("value", cf_literal, "surd or rational literal")->required();
    cf_cmd->callback([&] {
        action = [&] {
            SurdOrRational v = parse_surd_literal(cf_literal);
            if (const auto* r = std::get_if<Rat>(&v))
                out << cf_of_rational(*r).str() << "\n";
            else
                out << cf_of_surd(std::get<QuadSurd>(v)).str() << "\n";
        };
    });

    // complexity <surd>
    auto* cx_cmd = app.add_subcommand("complexity", "arithmetic complexity (minimal period length)");
    std::string cx_literal;
    cx_cmd->add_option("theta", cx_literal, "surd literal")->required();
    cx_cmd->callback([&] {
        action = [&] { out << arithmetic_complexity(NcTorus(parse_surd_arg(cx_literal))) << "\n"; };
    });

    // equiv <surd> <surd>
    auto* eq_cmd = app.add_subcommand("equiv", "stable isomorphism (GL(2,Z) equivalence)");
    std::string eq_a, eq_b;
    eq_cmd->add_option("theta1", eq_a, "surd literal")->required();
    eq_cmd->add_option("theta2", eq_b, "surd literal")->required();
    eq_cmd->callback([&] {
        action = [&] {
            out << bool_text(stably_isomorphic(NcTorus(parse_surd_arg(eq_a)),
                                               NcTorus(parse_surd_arg(eq_b))))
                << "\n";
        };
    });

    // k0 <surd> <p> <q>
    auto* k0_cmd = app.add_subcommand("k0", "positivity of (p, q) in K0 of the torus");
    std::string k0_literal, k0_p, k0_q;
    k0_cmd->add_option("theta", k0_literal, "surd literal")->required();
    k0_cmd->add_option("p", k0_p, "integer")->required();
    k0_cmd->add_option("q", k0_q, "integer")->required();
    k0_cmd->callback([&] {
        action = [&] {
            K0Class cls{parse_integer_arg(k0_p, "p"), parse_integer_arg(k0_q, "q")};
            out << bool_text(k0_positive(NcTorus(parse_surd_arg(k0_literal)), cls)) << "\n";
        };
    });

    // mobius <surd> a b c d
    auto* mo_cmd = app.add_subcommand("mobius", "apply (c + d x)/(a + b x) to a surd");
    std::string mo_literal;
    std::vector<std::string> mo_entries;
    mo_cmd->add_option("theta", mo_literal, "surd literal")->required();
    mo_cmd->add_option("entries", mo_entries, "matrix entries a b c d")->expected(4)->required();
    mo_cmd->callback([&] {
        action = [&] {
            Mat2Z m{parse_integer_arg(mo_entries[0], "a"), parse_integer_arg(mo_entries[1], "b"),
                    parse_integer_arg(mo_entries[2], "c"), parse_integer_arg(mo_entries[3], "d")};
            out << parse_surd_arg(mo_literal).mobius(m).str() << "\n";
        };
    });

    // lemma2 a b c d
    auto* l2_cmd = app.add_subcommand("lemma2", "classify an integer matrix");
    std::vector<std::string> l2_entries;
    l2_cmd->add_option("entries", l2_entries, "matrix entries a b c d")->expected(4)->required();
    l2_cmd->callback([&] {
        action = [&] {
            Mat2Z m{parse_integer_arg(l2_entries[0], "a"), parse_integer_arg(l2_entries[1], "b"),
                    parse_integer_arg(l2_entries[2], "c"), parse_integer_arg(l2_entries[3], "d")};
            out << scaling_text(classify_scaling(m)) << "\n";
        };
    });

    // cm-theta <d> [--half]
    auto* cm_cmd = app.add_subcommand("cm-theta", "real-multiplication slope of a CM order");
    std::string cm_d;
    bool cm_half = false;
    cm_cmd->add_option("d", cm_d, "positive squarefree integer")->required();
    cm_cmd->add_flag("--half", cm_half, "use omega = (1+sqrt(-d))/2 instead of sqrt(-d)");
    cm_cmd->callback([&] {
        action = [&] {
            CmOrder order(parse_integer_arg(cm_d, "d"),
                          cm_half ? OrderForm::half_form : OrderForm::sqrt_form);
            RealMultiplication rm = real_multiplication_theta(order);
            out << "theta=" << rm.theta.str() << " k=" << rm.k.str()
                << " generator=" << rm.generator << "\n";
        };
    });

    // jlambda <rational> [--paper-constant]
    auto* jl_cmd = app.add_subcommand("jlambda", "j-invariant of the Legendre cubic");
    std::string jl_literal;
    bool jl_paper = false;
    jl_cmd->add_option("lambda", jl_literal, "rational literal")->required();
    jl_cmd->add_flag("--paper-constant", jl_paper, "use the constant 64 instead of 256");
    jl_cmd->callback([&] {
        action = [&] {
            Rat lambda = parse_rational_arg(jl_literal);
            out << j_invariant_lambda(lambda, jl_paper ? JConstant::paper_64
                                                       : JConstant::standard_256)
                       .get_str()
                << "\n";
        };
    });

    // report <dataset.json> [--format json|tsv]
    auto* rp_cmd = app.add_subcommand("report", "conjecture report over a curve dataset");
    std::string rp_path, rp_format = "tsv";
    rp_cmd->add_option("dataset", rp_path, "path to a dataset JSON file")->required();
    rp_cmd->add_option("--format", rp_format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}));
    rp_cmd->callback([&] {
        action = [&] {
            auto rows = conjecture_report(load_dataset(rp_path));
            out << (rp_format == "json" ? report_to_json(rows) : report_to_tsv(rows));
        };
    });

    // normalized-period <surd> [--no-canonicalize]
    auto* np_cmd = app.add_subcommand("normalized-period", "normalized period of the torus");
    std::string np_literal;
    bool np_raw = false;
    np_cmd->add_option("theta", np_literal, "surd literal")->required();
    np_cmd->add_flag("--no-canonicalize", np_raw, "keep the period rotation as expanded");
    np_cmd->callback([&] {
        action = [&] {
            auto entries = normalized_period(NcTorus(parse_surd_arg(np_literal)), !np_raw);
            out << "(";
            for (std::size_t i = 0; i < entries.size(); ++i) {
                if (i) out << ", ";
                out << entries[i].get_str();
            }
            out << ")\n";
        };
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
        action();
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const syntax_error& e) {
        err << "usage error: " << e.what() << "\n" << kLiteralGrammar;
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace nct
