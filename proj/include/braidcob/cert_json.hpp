#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "braidcob/cobordism.hpp"
#include "braidcob/replication.hpp"

namespace braidcob {

using Json = nlohmann::json;

/// Input that does not follow the file schema (missing keys, wrong types,
/// unknown step ops).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json word_to_json(const BraidWord& w);
BraidWord word_from_json(const Json& j);

Json link_to_json(const FormalLink& l);
FormalLink link_from_json(const Json& j);

Json step_to_json(const Step& s);
Step step_from_json(const Json& j);

Json certificate_to_json(const CobordismCertificate& c);
CobordismCertificate certificate_from_json(const Json& j);

Json report_to_json(const CertificateReport& r);
CertificateReport report_from_json(const Json& j);

Json bound_to_json(const BoundReport& r);

/// Parses text, mapping parse errors to FormatError.
Json parse_json(const std::string& text);

}  // namespace braidcob
