#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "quatkyp/kyp.hpp"
#include "quatkyp/minimality.hpp"
#include "quatkyp/qmatrix.hpp"
#include "quatkyp/realization.hpp"
#include "quatkyp/witness.hpp"

namespace quatkyp {

using Json = nlohmann::ordered_json;

// Writers produce ordered objects so that dumps are stable.  Readers throw
// InvalidArgument (or DimensionError) on malformed documents.

Json to_json(const Quaternion& q);
Json to_json(const QMatrix& m);
Json to_json(const ComplexMatrix& m);
Json to_json(const Signature& s);
Json to_json(const Realization& r);
Json to_json(const Certificate& c);
Json to_json(const VerificationReport& v);
Json to_json(const MinimalityReport& m);
Json to_json(const SignatureReport& s);

Quaternion quaternion_from_json(const Json& j);
QMatrix qmatrix_from_json(const Json& j);
Signature signature_from_json(const Json& j);
Realization realization_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace quatkyp
