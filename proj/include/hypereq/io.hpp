#pragma once

#include <optional>
#include <string>

#include "hypereq/classify.hpp"
#include "hypereq/equations.hpp"
#include "hypereq/families.hpp"
#include "hypereq/hypergroup.hpp"
#include "hypereq/jwriter.hpp"
#include "hypereq/recurrence.hpp"

namespace hypereq {

// Conversions between the library types and their JSON document formats.
// Writing is deterministic (see JValue); parsing throws ParseError on any
// schema violation and homogenizes numeric modes: a single floating value
// switches the whole document to floating mode, since exact and floating
// scalars never mix inside one structure.

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Scalars render as "p/q" strings when exact and as JSON numbers when
// floating; complex values as two-element [re, im] arrays.
JValue scalar_json(const Scalar& s);
JValue complex_json(const Complex& z);

// Recurrence spec document: { "kind": "chebyshev" | "cartier" | "explicit",
// "name": str, "x0": "p/q", "params": { "q": int } (cartier),
// "coeffs": [["a","b","c"], ...] (explicit) }. "x0" is always required;
// unknown keys are ignored.
Recurrence parse_recurrence_spec(const std::string& json_text);
JValue recurrence_json(const Recurrence& R);

// Hypergroup table document: { "identity": int, "nmax": int, "rows":
// [{ "measure": [[element, weight], ...], "x": int, "y": int }, ...] } plus
// an optional embedded "recurrence" spec so family function specs can be
// resolved against a loaded table.
struct LoadedTable {
    Hypergroup H;
    std::optional<Recurrence> recurrence;
};
JValue table_json(const Hypergroup& H, const Recurrence* rec = nullptr);
LoadedTable parse_table(const std::string& json_text);

// Function spec document: { "kind": "table", "values": [[re, im], ...] } or
// { "kind": "family", "family": "exponential" | "sine" | "additive" |
// "constant", "lambda": complex, "const": complex, "recurrence": {...} }.
// Families other than "constant" need a recurrence, either embedded in the
// spec or inherited from the table the function will live on.
HFunction parse_function_spec(const std::string& json_text, int nmax,
                              const Recurrence* table_recurrence);

// Serializes to the "table" kind; a recovered exponential parameter is
// reported alongside the values as "lambda_fit".
JValue function_json(const HFunction& fn);

JValue axiom_report_json(const AxiomReport& report);
JValue classification_json(const ClassificationResult& result);
JValue verify_json(const std::string& equation, const EquationResidual& residual);
JValue eval_json(const std::string& family, const Complex& lambda, int n,
                 const Complex& value);
JValue counterexample_json(const CounterexampleReport& report, int nmax, double threshold,
                           bool demonstrated);

}  // namespace hypereq
