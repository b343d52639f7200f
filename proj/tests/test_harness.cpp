#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "syz/report.hpp"

using namespace syz;

static Setting mk(int n1, int n2, int d1, int d2, int b1 = 0, int b2 = 0) {
    Setting s;
    s.n1 = n1;
    s.n2 = n2;
    s.d1 = d1;
    s.d2 = d2;
    s.b1 = b1;
    s.b2 = b2;
    return s;
}

static const VerificationRecord& find(const std::vector<VerificationRecord>& rs, const std::string& claim, const std::string& prefix) {
    for (auto& r : rs)
        if (r.claim == claim && r.instance.rfind(prefix, 0) == 0) return r;
    FAIL("no record " << claim << " " << prefix);
    return rs.front();
}

TEST_CASE("status names") {
    CHECK(toString(Status::Pass) == "pass");
    CHECK(toString(Status::Fail) == "fail");
    CHECK(toString(Status::SkippedHypothesis) == "skipped-hypothesis");
    CHECK(toString(Status::SkippedSize) == "skipped-size");
}

TEST_CASE("quadric records") {
    auto rs = quadricSuite({});
    REQUIRE(rs.size() == 2);
    for (auto& r : rs) {
        CHECK(toString(r.status) == "pass");
        long long total = 0;
        for (auto& e : r.details["entries"]) total += e["dim"].get<long long>();
        CHECK(total == 2);
    }
}

TEST_CASE("range record on P1 x P1, d=(3,3)") {
    SuiteConfig cfg;
    InstanceProbe probe(mk(1, 1, 3, 3), cfg);
    auto r = verifyRange(probe, 1);
    CHECK(toString(r.status) == "pass");
    CHECK(r.details["lo"] == 1);
    CHECK(r.details["hi"] == 8);
    CHECK(r.details["cells"].size() == 8);
    CHECK(r.details["reduction"]["ok"] == true);
    CHECK(r.details["reduction"]["degree"] == 18);
    CHECK(r.details["raw_cross_check"]["agree"] == true);
    // sentinels: p = 0 is zero, p = 9 is not
    CHECK(r.details["sentinels"][0]["dim"] == 0);
    CHECK(r.details["sentinels"][1]["dim"] == 3861);

    auto rho = verifyRho(probe, 1);
    CHECK(toString(rho.status) == "pass");
    CHECK(rho.details["rho"] == "11/15");
    CHECK(rho.details["bound"] == "-1/15");

    // q = 2 is the top row: the range is empty and the claim is vacuous
    auto r2 = verifyRange(probe, 2);
    CHECK(toString(r2.status) == "pass");
    CHECK(r2.details["cells"].empty());
}

TEST_CASE("range record hypotheses") {
    SuiteConfig cfg;
    InstanceProbe probe(mk(1, 2, 3, 3), cfg);
    auto r = verifyRange(probe, 3);
    CHECK(toString(r.status) == "skipped-hypothesis");
    CHECK(r.details["reason"].get<std::string>().find("d1 > q") != std::string::npos);
    CHECK(toString(verifyRho(probe, 3).status) == "skipped-hypothesis");
}

TEST_CASE("oversized cells are skipped-size, never dropped") {
    SuiteConfig cfg;
    cfg.sizeLimit = 20;
    InstanceProbe probe(mk(1, 1, 4, 3), cfg);
    // witnesses still certify through the zero-row certificate; the rank-only sentinels cannot run
    auto r = verifyRange(probe, 1);
    CHECK(toString(r.status) == "pass");
    bool sawSize = false;
    for (auto& c : r.details["sentinels"]) sawSize |= c["method"] == "size-limit";
    CHECK(sawSize);

    // without witnesses in reach a cell stays undetermined
    InstanceProbe bare(mk(1, 1, 4, 3), cfg);
    const Cell& c = bare.cell(8, 1, false);
    CHECK_FALSE(c.known());
    CHECK(c.method == "size-limit");
}

TEST_CASE("corrupted generator makes thmA fail") {
    for (int t : {1, 2}) {
        Setting s = mk(1, 1, 3, 3);
        s.corruptG = t;
        SuiteConfig cfg;
        cfg.corruptG = t;
        InstanceProbe probe(s, cfg);
        auto r = verifyRange(probe, 1);
        CHECK(toString(r.status) == "fail");
        CHECK(r.details["reduction"]["ok"] == false);
        CHECK(r.instance.find("corrupt-g=" + std::to_string(t)) != std::string::npos);
    }
    // dropping the last term of g_1 also moves K_{1,1}: 82 against 87
    Setting s = mk(1, 1, 3, 3);
    s.corruptG = 1;
    SuiteConfig cfg;
    cfg.corruptG = 1;
    InstanceProbe probe(s, cfg);
    auto r = verifyRange(probe, 1);
    CHECK(r.details["raw_cross_check"]["artinian"] == 82);
    CHECK(r.details["raw_cross_check"]["raw"] == 87);
}

TEST_CASE("artinian check") {
    SuiteConfig cfg;
    auto rs = artinianCheck(mk(1, 1, 2, 2), cfg);
    REQUIRE(rs.size() == 1);
    CHECK(toString(rs[0].status) == "pass");
    CHECK(rs[0].details["compared"] == 36);
    // non Cohen-Macaulay twist: no reduction to compare
    auto bad = artinianCheck(mk(1, 1, 2, 2, 5, 0), cfg);
    CHECK(toString(bad[0].status) == "skipped-hypothesis");
}

TEST_CASE("membership check is seeded and agrees") {
    SuiteConfig cfg;
    cfg.samples = 200;
    auto a = membershipCheck(mk(1, 2, 3, 2), cfg);
    auto b = membershipCheck(mk(1, 2, 3, 2), cfg);
    CHECK(toString(a.status) == "pass");
    CHECK(a.details == b.details);
    CHECK(a.details["agree"] == 200);
    long long in = a.details["in_ideal"].get<long long>();
    CHECK(in > 0);
    CHECK(in < 200);
    cfg.seed += 1;
    CHECK(membershipCheck(mk(1, 2, 3, 2), cfg).details["seed"] != a.details["seed"]);
}

TEST_CASE("witness checks") {
    SuiteConfig cfg;
    auto rs = witnessChecks(mk(1, 1, 3, 3), 2, 1, cfg, true);
    REQUIRE(rs.size() == 3);
    CHECK(toString(find(rs, "prop-annihilator", "n=(1,1)").status) == "pass");
    CHECK(find(rs, "prop-annihilator", "n=(1,1)").details["f"] == "x0^2*x1^4*y0^5*y1");
    CHECK(toString(find(rs, "witness-L", "n=(1,1)").status) == "pass");
    auto& sp = find(rs, "thm-special", "n=(1,1)");
    CHECK(toString(sp.status) == "pass");
    CHECK(sp.details["anchor"] == 12);

    // P^2 with O(3): the anchor p = 6 is outside the witness span and the strand is zero there
    auto p2 = witnessChecks(mk(0, 2, 3, 3), 2, 2, cfg, true);
    auto& s2 = find(p2, "thm-special", "n=(0,2)");
    CHECK(toString(s2.status) == "fail");
    CHECK(s2.details["strand_dim_at_anchor"] == 0);
    CHECK(s2.details["first_witness_p"] == 7);
    CHECK(toString(find(p2, "witness-L", "n=(0,2)").status) == "pass");

    // two negative shifts are rejected before any engine is built
    auto hy = witnessChecks(mk(1, 1, 3, 3, -2, -1), 1, 0, cfg, false);
    REQUIRE(hy.size() == 1);
    CHECK(toString(hy[0].status) == "skipped-hypothesis");
}

TEST_CASE("f~ suite") {
    auto rs = ftildeSuite({});
    REQUIRE(rs.size() == 1);
    CHECK(toString(rs[0].status) == "pass");
    CHECK(rs[0].details["f_5_2"] == "x2*x3*y0^2*y1");
    CHECK(rs[0].details["relations"].get<long long>() > 40);
}

TEST_CASE("conjecture scan") {
    auto scan = scanConjecture(std::vector<std::pair<int, int>>{{1, 1}, {1, 2}}, {});
    REQUIRE(scan.records.size() == 2);
    for (auto& r : scan.records) {
        CHECK(r.claim == "conj-4");
        CHECK(toString(r.status) == "pass");
        CHECK(r.details["clause4"]["status"] == "conjectural");
    }
    CHECK(scan.report["proven"]["violations"] == 0);
    // P1 x P1, a = (1,1): dims along k = 0..2 are 0, 1, 0
    auto& pieces = scan.report["instances"][0]["pieces"];
    bool seen = false;
    for (auto& row : pieces)
        if (row["a"] == Json::array({1, 1})) {
            CHECK(row["dims"] == Json::array({0, 1, 0}));
            CHECK(row["top_dim"] == 1);
            seen = true;
        }
    CHECK(seen);
    CHECK(dump(scan.report) == dump(scanConjecture(std::vector<std::pair<int, int>>{{1, 1}, {1, 2}}, {}).report));
}

TEST_CASE("regular sequence check") {
    auto ok = regularSequenceCheck(mk(1, 2, 3, 3), 6);
    CHECK(toString(ok.status) == "pass");
    CHECK(ok.details["injective_up_to_bound"] == true);
    CHECK(ok.details["kunneth_support_ok"] == true);

    // b violating the inequalities: a kernel shows up within the bound
    auto out = regularSequenceCheck(mk(1, 1, 2, 2, 5, 0), 4);
    CHECK(out.details["cohen_macaulay"] == false);
    CHECK(out.details["injective_up_to_bound"] == false);
    CHECK(toString(out.status) == "pass");

    // duplicated form: the check itself must fail
    Setting s = mk(1, 1, 3, 3);
    s.corruptG = 2;
    auto bad = regularSequenceCheck(s, 5);
    CHECK(toString(bad.status) == "fail");
    CHECK(bad.details["kernels"][0]["t"] == 2);
}

TEST_CASE("default suite: one record per instance and claim, deterministic bytes") {
    SuiteConfig cfg;
    auto a = defaultSuite(cfg);
    std::set<std::pair<std::string, std::string>> keys;
    for (auto& r : a) CHECK_MESSAGE(keys.emplace(r.instance, r.claim).second, r.instance << " " << r.claim);
    std::set<std::string> claims;
    for (auto& r : a) claims.insert(r.claim);
    for (auto c : {"quadric", "cor-artinian", "thmA", "cor-rho", "tridegvanish", "oracle-membership", "prop-annihilator", "witness-L", "thm-special",
                   "lemma-ftilde", "conj-4"})
        CHECK(claims.count(c) == 1);
    CHECK(dump(toJson(a)) == dump(toJson(defaultSuite(cfg))));
}

TEST_CASE("worker count leaves record order alone") {
    SuiteConfig cfg;
    setenv("SYZ_THREADS", "1", 1);
    auto one = dump(toJson(membershipSuite(cfg)));
    setenv("SYZ_THREADS", "3", 1);
    auto three = dump(toJson(membershipSuite(cfg)));
    unsetenv("SYZ_THREADS");
    CHECK(one == three);
}

TEST_CASE("report formats") {
    Setting s = mk(1, 1, 1, 1);
    KoszulEngine<PrimeField> E(s, PrimeField(32003), Mode::Artinian);
    auto t = bettiTable(E, BettiRequest{0, 1, 0, 1});
    Json j = toJson(t);
    CHECK(j.begin().key() == "setting");
    CHECK(j["char"] == 32003);
    CHECK(j["mode"] == "artinian");
    CHECK(j["r"] == 3);
    CHECK(j["entries"].size() == 4);
    CHECK(toCsv(t) == "p,q,dim\n0,0,1\n1,0,0\n0,1,0\n1,1,1\n");
    CHECK(toCsv(t, true).rfind("mode,p,q,dim\nartinian,0,0,1\n", 0) == 0);

    Json rr = toJson(rangeReport(mk(1, 1, 3, 3), 1));
    CHECK(rr["lo"] == 1);
    CHECK(rr["hi"] == 8);
    CHECK(rr["rho_lower_bound"] == "-1/15");
    CHECK(toJson(rangeReport(mk(1, 1, 3, 3), 3))["status"] == "skipped-hypothesis");

    WitnessCocycle w;
    w.q = 1;
    w.k = 0;
    w.p = 1;
    w.factors = {parseMonomial(s, "x0*y0")};
    w.payload = Monomial::one(s);
    w.flags = WitnessFlags{true, true, false, "exact"};
    Json wj = toJson(w);
    CHECK(wj.dump() == R"({"q":1,"k":0,"p":1,"factors":["x0*y0"],"payload":"1","flags":{"nonzero":true,"cocycle":true,"coboundary":false},"method":"exact"})");

    VerificationRecord r{"a,b", "thmA", Status::SkippedSize, Json::object()};
    CHECK(toCsv(std::vector<VerificationRecord>{r}) == "instance,claim,status\n\"a,b\",thmA,skipped-size\n");
    CHECK(toJson(r).dump() == R"({"instance":"a,b","claim":"thmA","status":"skipped-size","details":{}})");
    CHECK(rationalText(mpq_class(6, 4)) == "3/2");
    CHECK(dump(Json::object()) == "{}\n");
}
