#pragma once

// JSON documents for presentation certificates and search reports.  Field
// order is fixed and numbers are written exactly, so equal inputs give
// equal bytes.

#include <string>

#include "fusion/certify.hpp"

namespace fusion {

std::string certificate_to_json(const PresentationCertificate& cert);
std::string certificate_to_json(const CIReport& report);
std::string search_report_to_json(const SearchReport& report);

}  // namespace fusion
