#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "qtower/daha.hpp"
#include "qtower/qkz.hpp"
#include "qtower/suite.hpp"
#include "qtower/zpoly.hpp"

namespace qtower::io {

using Json = nlohmann::ordered_json;

// Symbolic: {"num": [[k_s, k_v, c], ...], "den": [...]}; rational-s: "p/q";
// cyclotomic: {"a": "p/q", "b": "r/u"}. Plain integers take the form of the field.
Json scalar_to_json(const Scalar& x, const Field& f);
Scalar scalar_from_json(const Json& j, const Field& f);

// [[expVector, Scalar], ...] in increasing monomial order.
Json zpoly_to_json(const ZPoly& p, const Field& f);
ZPoly zpoly_from_json(const Json& j, int nvars, const Field& f);

// {"n", "s_mode", "q", "c", "degree", "components": {patternKey: terms}}
Json solution_to_json(const QkzParams& p, const PolyVec& g);
struct LoadedSolution {
  QkzParams params;
  PolyVec g;
};
LoadedSolution solution_from_json(const Json& j);

// {"n", "basis": [keys], "rows": [[Scalar, ...], ...]}; the column basis is
// recorded separately when it differs from the row basis.
Json matrix_to_json(const Matrix& m, const Field& f, int row_n, int col_n);

Json macdonald_to_json(const MacdonaldResult& r, const Field& f);

// [{"check", "n", "status", "millis"}, ...] plus the per-criterion verdicts.
Json suite_summary(const std::vector<CriterionResult>& results, bool with_timing);

Json read_file(const std::string& path);
// Writes pretty-printed JSON followed by a newline; creates parent directories.
void write_file(const std::string& path, const Json& j);

}  // namespace qtower::io
