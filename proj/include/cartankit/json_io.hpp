#pragma once

#include "cartankit/complement.hpp"
#include "cartankit/tensor.hpp"

#include <json.hpp>

namespace cartan {

using Json = nlohmann::json;

// All parsers throw std::invalid_argument on schema errors.
Json to_json(const Scalar &s);
Scalar scalar_from_json(const Json &j);

Json to_json(const Vector &v); // [[index, "coeff"], ...]
Vector vector_from_json(const Json &j);

Json to_json(const LieElement &x); // [{"i":..,"j":..,"coeff":".."}, ...]
LieElement element_from_json(Kind k, const Json &j);

Json to_json(const Matrix &m); // row-major list of rows of strings
Matrix matrix_from_json(const Json &j, int rows, int cols);

Json to_json(const CovecSeq &s);
CovecSeq covec_seq_from_json(const Json &j, int dim);
Json to_json(const ScalarSeq &s);
ScalarSeq scalar_seq_from_json(const Json &j);

// {kind, X_dim, Y_dim?, omega, lambdas, lambdas_neg?, mus?}
Json to_json(const ComplementDatum &d);
ComplementDatum datum_from_json(const Json &j);

Json to_json(const Certificate &c);
Certificate certificate_from_json(const Json &j);

Json to_json(const StandardInvariants &inv);

} // namespace cartan
