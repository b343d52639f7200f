#ifndef SYZ_HARNESS_HPP
#define SYZ_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "syz/witness.hpp"

namespace syz {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, SkippedHypothesis, SkippedSize };
std::string toString(Status s);

struct VerificationRecord {
    std::string instance;
    std::string claim;
    Status status = Status::Pass;
    Json details = Json::object();
};

struct SuiteConfig {
    std::uint32_t ch = 32003;
    std::size_t sizeLimit = 200000;
    int corruptG = -1;
    std::uint64_t seed = 0x5eed2024;
    int samples = 1000;  // random monomials per membership instance
};

// What is known about one K_{p,q}. A verified witness gives a lower bound of 1,
// a rank computation gives the exact value.
struct Cell {
    int p = 0, q = 0;
    std::optional<long long> dim;
    bool nonzero = false;
    std::string method;  // "rank", "witness", "size-limit"
    int k = -1;          // witness index when method is "witness"
    std::string note;
    bool known() const { return dim.has_value() || nonzero; }
};

// Cached cells of one Artinian engine, so the range and rho claims share their work.
class InstanceProbe {
public:
    InstanceProbe(const Setting& s, const SuiteConfig& cfg);
    const Setting& setting() const { return s_; }
    const KoszulEngine<PrimeField>& engine() const { return *eng_; }
    // witness first when withWitness, then the rank computation
    const Cell& cell(int p, int q, bool withWitness = true);

private:
    Setting s_;
    std::unique_ptr<KoszulEngine<PrimeField>> eng_;
    std::map<std::pair<int, int>, Cell> cells_;
    std::map<std::pair<int, int>, std::optional<WitnessSpan>> spans_;
};

VerificationRecord verifyRange(InstanceProbe& probe, int q);
VerificationRecord verifyRho(InstanceProbe& probe, int q);

std::vector<VerificationRecord> quadricSuite(const SuiteConfig& cfg);
std::vector<VerificationRecord> artinianSuite(const SuiteConfig& cfg);
std::vector<VerificationRecord> artinianCheck(const Setting& s, const SuiteConfig& cfg);
// range and rho records for each instance of the default grid
std::vector<VerificationRecord> rangeSuite(const SuiteConfig& cfg);
std::vector<VerificationRecord> triDegreeSuite(const SuiteConfig& cfg);
std::vector<VerificationRecord> membershipSuite(const SuiteConfig& cfg);
VerificationRecord membershipCheck(const Setting& s, const SuiteConfig& cfg);
std::vector<VerificationRecord> witnessSuite(const SuiteConfig& cfg);
std::vector<VerificationRecord> witnessChecks(const Setting& s, int q, int k, const SuiteConfig& cfg, bool keyCase);
std::vector<VerificationRecord> ftildeSuite(const SuiteConfig& cfg);

struct ConjectureScan {
    Json report;  // contents of conjecture-report.json
    std::vector<VerificationRecord> records;
};
// d = (1,1) and every n with n1, n2 >= 1 and n1 + n2 <= maxN
ConjectureScan scanConjecture(int maxN, const SuiteConfig& cfg);
ConjectureScan scanConjecture(const std::vector<std::pair<int, int>>& ns, const SuiteConfig& cfg);

// degreewise injectivity of g_t on S(b;d)/(g_0..g_{t-1}) for internal degrees up to bound
VerificationRecord regularSequenceCheck(const Setting& s, int bound);

// everything in the default grid, grouped by claim
std::vector<VerificationRecord> defaultSuite(const SuiteConfig& cfg);

// runs jobs on the worker pool; results keep job order
std::vector<VerificationRecord> runJobs(const std::vector<std::function<std::vector<VerificationRecord>()>>& jobs);

std::string instanceId(const Setting& s);

}  // namespace syz

#endif
