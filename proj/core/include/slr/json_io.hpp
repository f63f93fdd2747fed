#pragma once

#include <nlohmann/json.hpp>

#include "slr/constructions.hpp"
#include "slr/domination.hpp"
#include "slr/pipeline.hpp"
#include "slr/semilinear.hpp"
#include "slr/streamline.hpp"

// JSON forms of the core types. Rationals are strings ("p" or "p/q"); no
// floating point appears anywhere.
namespace slr {

using Json = nlohmann::json;

void to_json(Json& j, const Rational& x);
void from_json(const Json& j, Rational& x);
Json integer_to_json(const Integer& x);  // number when it fits in 64 bits, else string
Integer integer_from_json(const Json& j);

Json matrix_to_json(const Matrix<Rational>& m);
Matrix<Rational> rational_matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix<Integer>& m);
Matrix<Integer> integer_matrix_from_json(const Json& j);

void to_json(Json& j, const Threshold& h);
void from_json(const Json& j, Threshold& h);

void to_json(Json& j, const LinearFunction& f);
void from_json(const Json& j, LinearFunction& f);
void to_json(Json& j, const SignTable& t);
void from_json(const Json& j, SignTable& t);
void to_json(Json& j, const LinearDescription& d);
void from_json(const Json& j, LinearDescription& d);

void to_json(Json& j, const PolynomialFunction& f);
void from_json(const Json& j, PolynomialFunction& f);
void to_json(Json& j, const SemialgebraicDescription& d);
void from_json(const Json& j, SemialgebraicDescription& d);

Json hypergraph_to_json(const OrderedHypergraph& h, std::uint64_t budget = kDefaultBudget);
OrderedHypergraph hypergraph_from_json(const Json& j);

void to_json(Json& j, const DominationInstance& inst);
void from_json(const Json& j, DominationInstance& inst);
void to_json(Json& j, const DominationStep& s);
void from_json(const Json& j, DominationStep& s);
void to_json(Json& j, const DominationResult& r);

void to_json(Json& j, const CertificateStage& s);
void from_json(const Json& j, CertificateStage& s);
void to_json(Json& j, const ExtractionCertificate& c);
void from_json(const Json& j, ExtractionCertificate& c);

void to_json(Json& j, const BlockData& b);
void from_json(const Json& j, BlockData& b);
void to_json(Json& j, const StageWidths& w);
void from_json(const Json& j, StageWidths& w);
void to_json(Json& j, const CoreResult& c);
void from_json(const Json& j, CoreResult& c);
void to_json(Json& j, const PipelineResult& r);
void from_json(const Json& j, PipelineResult& r);

void to_json(Json& j, const GrowthParams& p);
void from_json(const Json& j, GrowthParams& p);

}  // namespace slr
