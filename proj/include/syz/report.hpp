#ifndef SYZ_REPORT_HPP
#define SYZ_REPORT_HPP

#include <string>
#include <vector>

#include "syz/harness.hpp"

namespace syz {

Json toJson(const Setting& s);
Json toJson(const BettiTable& t);
Json toJson(const RangeReport& r);
Json toJson(const WitnessCocycle& w);
Json toJson(const VerificationRecord& r);
Json toJson(const std::vector<VerificationRecord>& rs);
// exact rationals travel as "a/b" strings
std::string rationalText(const mpq_class& v);

std::string toCsv(const BettiTable& t, bool withMode = false);
std::string toCsv(const std::vector<VerificationRecord>& rs);

// two-space indent and a trailing newline
std::string dump(const Json& j);
void writeText(const std::string& path, const std::string& text);

}  // namespace syz

#endif
