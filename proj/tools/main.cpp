#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hypereq/builders.hpp"
#include "hypereq/classify.hpp"
#include "hypereq/equations.hpp"
#include "hypereq/errors.hpp"
#include "hypereq/families.hpp"
#include "hypereq/io.hpp"
#include "hypereq/linearization.hpp"

namespace {

using namespace hypereq;

// "p/q" or integer text reads exact; anything with a decimal point or an
// exponent reads floating.
Scalar parse_scalar_literal(const std::string& text) {
    if (text.empty()) throw ParseError("empty numeric literal");
    if (text.find('/') != std::string::npos) return Scalar(parse_rational(text));
    if (text.find_first_of(".eE") == std::string::npos) return Scalar(parse_rational(text));
    char* end = nullptr;
    double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size())
        throw ParseError("bad numeric literal '" + text + "'");
    return Scalar::floating(value);
}

// Command-line complex literal: `re` or `re+imi` / `re-imi`, e.g. "2",
// "0.5+0i", "0+1i", "3/5-4/5i". The imaginary coefficient must be written
// out; the splitting sign skips exponent signs as in "1e+3+2i".
Complex parse_complex_literal(const std::string& text) {
    if (text.empty()) throw ParseError("empty complex literal");
    if (text.back() != 'i') {
        Scalar re = parse_scalar_literal(text);
        return Complex(re, Scalar().to_mode(re.mode()));
    }
    std::string body = text.substr(0, text.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < body.size(); ++i) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos)
        throw ParseError("complex literal must look like `re` or `re+imi`, got '" + text +
                         "'");
    std::string re_text = body.substr(0, split);
    std::string im_text = body.substr(split + 1);
    if (im_text.empty())
        throw ParseError("the imaginary part needs an explicit coefficient, e.g. `0+1i`");
    Scalar re = parse_scalar_literal(re_text);
    Scalar im = parse_scalar_literal(im_text);
    if (body[split] == '-') im = -im;
    Mode m = join(re.mode(), im.mode());
    return Complex(re.to_mode(m), im.to_mode(m));
}

void print_json(const JValue& value) { std::cout << value.dump(2) << "\n"; }

struct Options {
    std::string spec_path;
    std::string table_path;
    std::string out_path;
    std::string f_path;
    std::string g_path;
    std::string family;
    std::string equation;
    std::string lambda_text;
    int nmax = 0;
    int depth = 0;
    int n = 0;
    std::optional<double> tol;
    bool force_float = false;
};

Tolerance make_tolerance(const std::optional<double>& override_rtol) {
    Tolerance tol;
    if (override_rtol) tol.rtol = *override_rtol;
    return tol;
}

int cmd_table(const Options& opt) {
    Recurrence R = parse_recurrence_spec(read_text_file(opt.spec_path));
    Hypergroup H = polynomial_hypergroup(R, opt.nmax);
    write_text_file(opt.out_path, table_json(H, &R).dump(2) + "\n");
    std::cerr << "wrote " << H.pairs().size() << " rows (nmax = " << H.nmax() << ") to "
              << opt.out_path << "\n";
    return 0;
}

int cmd_axioms(const Options& opt) {
    LoadedTable loaded = parse_table(read_text_file(opt.table_path));
    AxiomReport report = check_axioms(loaded.H, opt.depth);
    print_json(axiom_report_json(report));
    return report.all_pass() ? 0 : 1;
}

int cmd_eval(const Options& opt) {
    Recurrence R = parse_recurrence_spec(read_text_file(opt.spec_path));
    Complex lambda = parse_complex_literal(opt.lambda_text);
    HFunction fn = opt.family == "exponential" ? exponential_fn(R, lambda, opt.n)
                   : opt.family == "sine"      ? sine_fn(R, lambda, opt.n)
                                               : additive_fn(R, lambda, opt.n);
    print_json(eval_json(opt.family, lambda, opt.n, fn(opt.n)));
    return 0;
}

bool equation_needs_g(const std::string& equation) {
    return equation == "sine" || equation == "cosine" || equation == "msine";
}

int cmd_verify(const Options& opt) {
    LoadedTable loaded = parse_table(read_text_file(opt.table_path));
    const Recurrence* rec = loaded.recurrence ? &*loaded.recurrence : nullptr;
    HFunction f = parse_function_spec(read_text_file(opt.f_path), loaded.H.nmax(), rec);
    if (opt.force_float) f = f.to_mode(Mode::floating);

    std::optional<HFunction> g;
    if (!opt.g_path.empty()) {
        g = parse_function_spec(read_text_file(opt.g_path), loaded.H.nmax(), rec);
        if (opt.force_float) g = g->to_mode(Mode::floating);
    }
    if (equation_needs_g(opt.equation) && !g)
        throw ParseError("--g is required for equation '" + opt.equation + "'");

    Tolerance tol = make_tolerance(opt.tol);
    EquationResidual residual;
    if (opt.equation == "sine") {
        residual = residual_sine(loaded.H, f, *g, tol);
    } else if (opt.equation == "cosine") {
        residual = residual_cosine(loaded.H, f, *g, tol);
    } else if (opt.equation == "msine") {
        residual = is_m_sine(loaded.H, f, *g, tol).residual;
    } else if (opt.equation == "exponential") {
        residual = residual_exponential(loaded.H, f, tol);
    } else {
        residual = residual_additive(loaded.H, f, tol);
    }
    print_json(verify_json(opt.equation, residual));
    return residual.pass ? 0 : 1;
}

int cmd_classify(const Options& opt) {
    LoadedTable loaded = parse_table(read_text_file(opt.table_path));
    const Recurrence* rec = loaded.recurrence ? &*loaded.recurrence : nullptr;
    HFunction f = parse_function_spec(read_text_file(opt.f_path), loaded.H.nmax(), rec);
    HFunction g = parse_function_spec(read_text_file(opt.g_path), loaded.H.nmax(), rec);
    ClassifierConfig cfg;
    cfg.equation_tol = make_tolerance(opt.tol);
    ClassificationResult result = opt.equation == "sine"
                                      ? classify_sine(loaded.H, f, g, cfg, rec)
                                      : classify_cosine(loaded.H, f, g, cfg, rec);
    print_json(classification_json(result));
    return result.tag == CaseTag::NOT_A_SOLUTION ? 1 : 0;
}

int cmd_counterexample(const Options& opt) {
    Recurrence R = parse_recurrence_spec(read_text_file(opt.spec_path));
    Complex lambda = parse_complex_literal(opt.lambda_text);
    CounterexampleReport report = counterexample_report(R, lambda, opt.nmax);

    double threshold = 0.0;
    bool demonstrated;
    if (report.mode == Mode::exact) {
        demonstrated = !report.max_deviation.is_zero();
    } else {
        Tolerance tol;
        double scale = 0.0;
        for (int n = 1; n <= opt.nmax; ++n) {
            Complex target = eval_poly_derivative(R, n, lambda.to_mode(Mode::floating));
            scale = std::max(scale, std::abs(target.approx()));
        }
        threshold = 10.0 * (tol.atol + tol.rtol * scale);
        demonstrated = report.max_deviation.dbl() > threshold;
    }
    print_json(counterexample_json(report, opt.nmax, threshold, demonstrated));
    return demonstrated ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete commutative hypergroups: linearization tables, function "
                 "families, and functional-equation tools"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* table = app.add_subcommand(
        "table", "Generate a hypergroup table file from a recurrence spec");
    table->add_option("--spec", opt.spec_path, "Recurrence spec JSON file")->required();
    table->add_option("--nmax", opt.nmax, "Largest tabulated level")
        ->required()
        ->check(CLI::NonNegativeNumber);
    table->add_option("--out", opt.out_path, "Output table file")->required();

    CLI::App* axioms =
        app.add_subcommand("axioms", "Check the hypergroup axioms on a table file");
    axioms->add_option("--table", opt.table_path, "Hypergroup table file")->required();
    axioms->add_option("--depth", opt.depth, "Largest element drawn into the checks")
        ->required()
        ->check(CLI::NonNegativeNumber);

    CLI::App* eval = app.add_subcommand("eval", "Evaluate a function family member");
    eval->add_option("--spec", opt.spec_path, "Recurrence spec JSON file")->required();
    eval->add_option("--family", opt.family, "Function family")
        ->required()
        ->check(CLI::IsMember({"exponential", "sine", "additive"}));
    eval->add_option("--lambda", opt.lambda_text,
                     "Family parameter, `re` or `re+imi` (the additive constant)")
        ->required();
    eval->add_option("--n", opt.n, "Element to evaluate at")
        ->required()
        ->check(CLI::NonNegativeNumber);

    CLI::App* verify =
        app.add_subcommand("verify", "Check a functional equation on a table");
    verify->add_option("--table", opt.table_path, "Hypergroup table file")->required();
    verify->add_option("--equation", opt.equation, "Equation to check")
        ->required()
        ->check(CLI::IsMember({"sine", "cosine", "exponential", "msine", "additive"}));
    verify->add_option("--f", opt.f_path, "Function spec JSON file")->required();
    verify->add_option("--g", opt.g_path,
                       "Second function spec (required for sine, cosine, msine)");
    verify->add_option("--tol", opt.tol, "Relative tolerance for floating mode");
    verify->add_flag("--float", opt.force_float, "Force floating-point arithmetic");

    CLI::App* classify =
        app.add_subcommand("classify", "Match a solution pair to its structure case");
    classify->add_option("--table", opt.table_path, "Hypergroup table file")->required();
    classify->add_option("--equation", opt.equation, "Equation the pair solves")
        ->required()
        ->check(CLI::IsMember({"sine", "cosine"}));
    classify->add_option("--f", opt.f_path, "Function spec JSON file")->required();
    classify->add_option("--g", opt.g_path, "Function spec JSON file")->required();
    classify->add_option("--tol", opt.tol, "Relative tolerance for floating mode");

    CLI::App* counterexample = app.add_subcommand(
        "counterexample",
        "Show that n -> P_n'(lambda) is not const * P_n'(x0) * P_n(lambda)");
    counterexample->add_option("--spec", opt.spec_path, "Recurrence spec JSON file")
        ->required();
    counterexample->add_option("--lambda", opt.lambda_text, "Evaluation point")->required();
    counterexample->add_option("--nmax", opt.nmax, "Largest level in the deviation scan")
        ->required();

    int code = 0;
    table->callback([&] { code = cmd_table(opt); });
    axioms->callback([&] { code = cmd_axioms(opt); });
    eval->callback([&] { code = cmd_eval(opt); });
    verify->callback([&] { code = cmd_verify(opt); });
    classify->callback([&] { code = cmd_classify(opt); });
    counterexample->callback([&] { code = cmd_counterexample(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const hypereq::NotAHypergroup& e) {
        hypereq::JValue::Object o;
        o["error"] = "not-a-hypergroup";
        o["k"] = e.k;
        o["m"] = e.m;
        o["n"] = e.n;
        o["value"] = e.value;
        print_json(hypereq::JValue(std::move(o)));
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const hypereq::LambdaInconsistent& e) {
        std::cerr << "inconsistent parameters: " << e.what() << "\n";
        return 1;
    } catch (const hypereq::ExactUnavailable& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "hint: rerun with --float for a floating-point answer\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}
