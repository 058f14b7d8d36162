#pragma once

#include <json.hpp>

#include "pinf/kzero.hpp"
#include "pinf/leavitt.hpp"
#include "pinf/ratseries.hpp"
#include "pinf/realize.hpp"
#include "pinf/truncseries.hpp"

namespace pinf {

/// Keys keep insertion order so that output is stable and readable.
using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const Field& f);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const Field& f);

Json to_json(const FreeElem& p);
Json to_json(const TruncSeries& s);

/// {field, letters, dimension, lambda, mu, gamma, text}.
Json to_json(const LinRep& r);
LinRep linrep_from_json(const Json& j);

/// {field, letters, dynamic, text, terms}; terms maps each Y-word to its
/// coefficient series.
Json to_json(const SkewElem<LinRep>& s);
SkewElem<LinRep> skew_from_json(const Json& j);

Json to_json(const UElem& u);

/// Skew element as a parseable string when every coefficient is a
/// polynomial, as an object otherwise.
Json compact_json(const SkewElem<LinRep>& s);
Json to_json(const SkewMatrix& m);

Json to_json(const HomSpec& h);
Json to_json(const GeneratorMatrices& g);
Json to_json(const VerificationReport& r);
Json to_json(const ChainPlan& p);

Json to_json(const AbGroup& g);
Json to_json(const MonoidShapeReport& r);

}  // namespace pinf
