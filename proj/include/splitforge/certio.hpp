#ifndef SPLITFORGE_CERTIO_HPP
#define SPLITFORGE_CERTIO_HPP

#include <string>

#include "splitforge/certificate.hpp"

namespace splitforge {

// JSON certificate format, schema version 1. Every numeric value is a
// decimal string; serialize(parse(serialize(c))) is byte-identical to
// serialize(c). Parsing throws MalformedCertificate on any structural or
// lexical problem.
std::string certificate_to_json(const SplitCertificate& cert);
SplitCertificate certificate_from_json(const std::string& text);

std::string report_to_json(const VerificationReport& report);

}  // namespace splitforge

#endif
