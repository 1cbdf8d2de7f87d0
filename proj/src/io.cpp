#include "hypereq/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hypereq/errors.hpp"

namespace hypereq {

namespace {

using njson = nlohmann::json;

njson parse_document(const std::string& text) {
    try {
        return njson::parse(text);
    } catch (const njson::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

const njson& require_key(const njson& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string(where) + ": missing required key \"" + key + "\"");
    return j.at(key);
}

int require_int(const njson& j, const char* what) {
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::string require_string(const njson& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

// Exact quantities ("x0", recurrence coefficients) accept "p/q" strings and
// integer JSON numbers; a fractional number has no exact reading and is
// rejected rather than silently rounded.
Rational rational_from_json(const njson& j, const char* what) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError(std::string(what) +
                     " must be exact: a \"p/q\" string or an integer");
}

// Numeric leaf of a general value: "p/q" string reads exact, JSON number
// reads floating.
Scalar scalar_from_json(const njson& j, const char* what) {
    if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
    if (j.is_number()) return Scalar::floating(j.get<double>());
    throw ParseError(std::string(what) + " must be a number or a \"p/q\" string");
}

// Complex value: [re, im], or a bare real given as a number or "p/q" string.
Complex complex_from_json(const njson& j, const char* what) {
    if (j.is_array()) {
        if (j.size() != 2)
            throw ParseError(std::string(what) + " must be a two-element [re, im] array");
        Scalar re = scalar_from_json(j.at(0), what);
        Scalar im = scalar_from_json(j.at(1), what);
        Mode m = join(re.mode(), im.mode());
        return Complex(re.to_mode(m), im.to_mode(m));
    }
    Scalar re = scalar_from_json(j, what);
    return Complex(re, Scalar().to_mode(re.mode()));
}

Recurrence recurrence_from_json(const njson& j) {
    if (!j.is_object()) throw ParseError("recurrence spec must be a JSON object");
    std::string kind = require_string(require_key(j, "kind", "recurrence spec"), "kind");
    Rational x0 = rational_from_json(require_key(j, "x0", "recurrence spec"), "x0");

    if (kind == "chebyshev") {
        if (x0 != 1)
            throw ParseError("the chebyshev preset is normalized at x0 = 1, got " +
                             format_rational(x0));
        return Recurrence::chebyshev();
    }
    if (kind == "cartier") {
        const njson& params = require_key(j, "params", "cartier spec");
        const njson& q = require_key(params, "q", "cartier params");
        if (!q.is_number_integer()) throw ParseError("cartier parameter q must be an integer");
        if (x0 != 1)
            throw ParseError("the cartier preset is normalized at x0 = 1, got " +
                             format_rational(x0));
        return Recurrence::cartier(q.get<long>());
    }
    if (kind == "explicit") {
        const njson& coeffs = require_key(j, "coeffs", "explicit spec");
        if (!coeffs.is_array() || coeffs.empty())
            throw ParseError("explicit spec needs a nonempty \"coeffs\" array");
        std::vector<RecurrenceCoeffs> rows;
        for (const njson& row : coeffs) {
            if (!row.is_array() || row.size() != 3)
                throw ParseError("each coeffs row must be a three-element [a, b, c] array");
            rows.push_back({rational_from_json(row.at(0), "a_n"),
                            rational_from_json(row.at(1), "b_n"),
                            rational_from_json(row.at(2), "c_n")});
        }
        std::string name = j.contains("name")
                               ? require_string(j.at("name"), "name")
                               : std::string("explicit");
        return Recurrence::explicit_list(std::move(name), x0, std::move(rows));
    }
    throw ParseError("unknown recurrence kind \"" + kind +
                     "\" (expected chebyshev, cartier, or explicit)");
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) throw Error("error while reading: " + path);
    return std::move(buf).str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << content;
    out.flush();
    if (!out.good()) throw Error("error while writing: " + path);
}

JValue scalar_json(const Scalar& s) {
    if (s.is_exact()) return JValue(format_rational(s.rat()));
    return JValue(s.dbl());
}

JValue complex_json(const Complex& z) {
    return JValue(JValue::Array{scalar_json(z.re()), scalar_json(z.im())});
}

Recurrence parse_recurrence_spec(const std::string& json_text) {
    return recurrence_from_json(parse_document(json_text));
}

JValue recurrence_json(const Recurrence& R) {
    JValue::Object o;
    o["kind"] = R.kind();
    o["name"] = R.name();
    o["x0"] = format_rational(R.x0());
    if (R.kind() == "cartier") {
        o["params"] = JValue::Object{{"q", JValue(R.cartier_q())}};
    } else if (R.kind() == "explicit") {
        JValue::Array rows;
        for (const RecurrenceCoeffs& rc : R.listed_coeffs())
            rows.push_back(JValue::Array{format_rational(rc.a), format_rational(rc.b),
                                         format_rational(rc.c)});
        o["coeffs"] = std::move(rows);
    }
    return JValue(std::move(o));
}

JValue table_json(const Hypergroup& H, const Recurrence* rec) {
    JValue::Array rows;
    for (auto [x, y] : H.pairs()) {
        JValue::Array measure;
        for (const auto& [element, weight] : H.convolve(x, y).atoms())
            measure.push_back(JValue::Array{JValue(element), scalar_json(weight)});
        JValue::Object row;
        row["measure"] = std::move(measure);
        row["x"] = x;
        row["y"] = y;
        rows.push_back(std::move(row));
    }
    JValue::Object o;
    o["identity"] = H.identity();
    o["nmax"] = H.nmax();
    o["rows"] = std::move(rows);
    if (rec) o["recurrence"] = recurrence_json(*rec);
    return JValue(std::move(o));
}

LoadedTable parse_table(const std::string& json_text) {
    njson j = parse_document(json_text);
    if (!j.is_object()) throw ParseError("table file must be a JSON object");
    int nmax = require_int(require_key(j, "nmax", "table file"), "nmax");
    Element identity = require_int(require_key(j, "identity", "table file"), "identity");
    const njson& rows = require_key(j, "rows", "table file");
    if (!rows.is_array()) throw ParseError("table rows must be an array");

    struct RawRow {
        Element x;
        Element y;
        std::vector<FiniteMeasure::Atom> atoms;
    };
    std::vector<RawRow> raws;
    bool any_floating = false;
    for (const njson& row : rows) {
        if (!row.is_object()) throw ParseError("each table row must be an object");
        RawRow raw;
        raw.x = require_int(require_key(row, "x", "table row"), "x");
        raw.y = require_int(require_key(row, "y", "table row"), "y");
        const njson& measure = require_key(row, "measure", "table row");
        if (!measure.is_array() || measure.empty())
            throw ParseError("row measure must be a nonempty [[element, weight], ...] array");
        for (const njson& atom : measure) {
            if (!atom.is_array() || atom.size() != 2)
                throw ParseError("each measure atom must be an [element, weight] pair");
            Element element = require_int(atom.at(0), "measure element");
            Scalar weight = scalar_from_json(atom.at(1), "measure weight");
            any_floating = any_floating || !weight.is_exact();
            raw.atoms.push_back({element, std::move(weight)});
        }
        raws.push_back(std::move(raw));
    }

    std::map<Hypergroup::Key, FiniteMeasure> table_rows;
    for (RawRow& raw : raws) {
        if (any_floating)
            for (auto& [element, weight] : raw.atoms) weight = weight.to_mode(Mode::floating);
        auto [it, inserted] = table_rows.emplace(Hypergroup::Key{raw.x, raw.y},
                                                 FiniteMeasure::from_atoms(std::move(raw.atoms)));
        if (!inserted)
            throw ParseError("duplicate table row for pair (" + std::to_string(raw.x) + ", " +
                             std::to_string(raw.y) + ")");
    }

    std::optional<Recurrence> rec;
    if (j.contains("recurrence")) rec = recurrence_from_json(j.at("recurrence"));
    std::string provenance = rec ? rec->name() : std::string("table-file");
    return LoadedTable{Hypergroup(nmax, identity, std::move(table_rows), std::move(provenance)),
                       std::move(rec)};
}

HFunction parse_function_spec(const std::string& json_text, int nmax,
                              const Recurrence* table_recurrence) {
    njson j = parse_document(json_text);
    if (!j.is_object()) throw ParseError("function spec must be a JSON object");
    std::string kind = require_string(require_key(j, "kind", "function spec"), "kind");

    if (kind == "table") {
        const njson& values = require_key(j, "values", "function spec");
        if (!values.is_array()) throw ParseError("function values must be an array");
        if (static_cast<int>(values.size()) != nmax + 1)
            throw ParseError("function table has " + std::to_string(values.size()) +
                             " values but the hypergroup needs nmax+1 = " +
                             std::to_string(nmax + 1));
        std::vector<Complex> parsed;
        Mode m = Mode::exact;
        for (const njson& v : values) {
            parsed.push_back(complex_from_json(v, "function value"));
            m = join(m, parsed.back().mode());
        }
        for (Complex& v : parsed) v = v.to_mode(m);
        return HFunction::table(std::move(parsed), "table");
    }

    if (kind != "family")
        throw ParseError("unknown function spec kind \"" + kind +
                         "\" (expected table or family)");

    std::string family = require_string(require_key(j, "family", "function spec"), "family");
    auto parameter = [&](const char* primary, const char* fallback) {
        if (j.contains(primary)) return complex_from_json(j.at(primary), primary);
        if (fallback && j.contains(fallback)) return complex_from_json(j.at(fallback), fallback);
        throw ParseError("family \"" + family + "\" needs a \"" + primary + "\" parameter");
    };

    if (family == "constant") return HFunction::constant(parameter("const", "lambda"), nmax);

    std::optional<Recurrence> embedded;
    if (j.contains("recurrence")) embedded = recurrence_from_json(j.at("recurrence"));
    const Recurrence* rec = embedded ? &*embedded : table_recurrence;
    if (!rec)
        throw ParseError("family \"" + family +
                         "\" needs a recurrence, either embedded in the spec or carried "
                         "by the table file");

    if (family == "exponential") return exponential_fn(*rec, parameter("lambda", nullptr), nmax);
    if (family == "sine") return sine_fn(*rec, parameter("lambda", nullptr), nmax);
    if (family == "additive") return additive_fn(*rec, parameter("const", "lambda"), nmax);
    throw ParseError("unknown function family \"" + family +
                     "\" (expected exponential, sine, additive, or constant)");
}

JValue function_json(const HFunction& fn) {
    JValue::Array values;
    for (const Complex& v : fn.values()) values.push_back(complex_json(v));
    JValue::Object o;
    o["kind"] = "table";
    o["values"] = std::move(values);
    if (fn.descriptor() && fn.descriptor()->family == "exponential")
        o["lambda_fit"] = complex_json(fn.descriptor()->parameter);
    return JValue(std::move(o));
}

namespace {

JValue axiom_check_json(const AxiomCheckResult& check) {
    JValue::Array witnesses;
    for (const AxiomWitness& w : check.witnesses) {
        JValue::Object wo;
        wo["detail"] = w.detail;
        wo["x"] = w.x;
        wo["y"] = w.y;
        if (w.z >= 0) wo["z"] = w.z;
        if (w.k >= 0) wo["k"] = w.k;
        if (!w.value.empty()) wo["value"] = w.value;
        witnesses.push_back(std::move(wo));
    }
    JValue::Object o;
    o["pass"] = check.pass;
    o["witnesses"] = std::move(witnesses);
    return JValue(std::move(o));
}

}  // namespace

JValue axiom_report_json(const AxiomReport& report) {
    JValue::Object o;
    o["all_pass"] = report.all_pass();
    o["associativity"] = axiom_check_json(report.associativity);
    o["commutativity"] = axiom_check_json(report.commutativity);
    o["depth"] = report.depth;
    o["identity"] = axiom_check_json(report.identity);
    o["mode"] = mode_name(report.mode);
    o["nonnegativity"] = axiom_check_json(report.nonnegativity);
    o["normalization"] = axiom_check_json(report.normalization);
    return JValue(std::move(o));
}

JValue classification_json(const ClassificationResult& result) {
    JValue::Object params;
    if (result.c) params["c"] = complex_json(*result.c);
    if (result.lambda) params["lambda"] = complex_json(*result.lambda);
    if (result.d) params["d"] = complex_json(*result.d);
    if (result.M) params["M"] = function_json(*result.M);
    if (result.N) params["N"] = function_json(*result.N);

    JValue::Array notes;
    for (const std::string& note : result.notes) notes.push_back(note);
    if (result.sign)
        notes.push_back(std::string("sign = ") + (*result.sign > 0 ? "+1" : "-1"));

    JValue::Object o;
    o["case"] = case_name(result.tag);
    o["notes"] = std::move(notes);
    o["params"] = std::move(params);
    o["residual_input"] = result.residual_input;
    o["residual_reconstruction"] = result.residual_reconstruction;
    return JValue(std::move(o));
}

JValue verify_json(const std::string& equation, const EquationResidual& residual) {
    JValue::Object o;
    o["equation"] = equation;
    o["max_residual"] = residual.max_abs.approx();
    o["pass"] = residual.pass;
    o["worst_pair"] = JValue::Array{JValue(residual.worst.first), JValue(residual.worst.second)};
    return JValue(std::move(o));
}

JValue eval_json(const std::string& family, const Complex& lambda, int n,
                 const Complex& value) {
    JValue::Object o;
    o["family"] = family;
    o["lambda"] = complex_json(lambda);
    o["mode"] = mode_name(value.mode());
    o["n"] = n;
    o["value"] = complex_json(value);
    return JValue(std::move(o));
}

JValue counterexample_json(const CounterexampleReport& report, int nmax, double threshold,
                           bool demonstrated) {
    JValue::Array deviations;
    for (std::size_t i = 0; i < report.deviations.size(); ++i)
        deviations.push_back(JValue::Array{JValue(static_cast<int>(i) + 2),
                                           scalar_json(report.deviations[i])});
    JValue::Object o;
    o["argmax_n"] = report.argmax_n;
    o["const"] = complex_json(report.fitted_const);
    o["demonstrated"] = demonstrated;
    o["deviations"] = std::move(deviations);
    o["lambda"] = complex_json(report.lambda);
    o["least_squares_fallback"] = report.least_squares_fallback;
    o["max_deviation"] = scalar_json(report.max_deviation);
    o["mode"] = mode_name(report.mode);
    o["nmax"] = nmax;
    o["threshold"] = threshold;
    return JValue(std::move(o));
}

}  // namespace hypereq
