#pragma once

// Machine-readable forms used by the CLI.  Rationals are written as decimal
// strings so that nothing is rounded.

#include <nlohmann/json.hpp>

#include <vector>

#include "qcov/algebra.hpp"
#include "qcov/commcontrol.hpp"
#include "qcov/covering.hpp"
#include "qcov/matrep.hpp"
#include "qcov/obstruction.hpp"
#include "qcov/report.hpp"
#include "qcov/tensor.hpp"

namespace qcov {

using Json = nlohmann::ordered_json;

Json to_json(const Word& w);
/// [{"zexp", "texp", "num", "den"}, ...]
Json to_json(const Scalar& c);
/// {"n", "terms": [{"apow", "g", "gs", "coeff"}]}; "order" is added when the
/// coefficient ring differs from R_n.
Json to_json(const Element& x);
/// {"legs", "order", "terms": [{"words": [...], "coeff"}]}
Json to_json(const TensorElement& x);
Json to_json(const ModuleVector& v);
Json to_json(const CheckReport& r);
Json to_json(const ObstructionReport& r);
Json to_json(const std::vector<NumericResidual>& rows);
Json to_json(const LemmaReport& r);

Scalar scalar_from_json(const Json& j, int order);
Element element_from_json(const Json& j);

}  // namespace qcov
