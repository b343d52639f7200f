#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "syz/report.hpp"

using namespace syz;

namespace {

struct Options {
    std::string n = "1,1", d = "1,1", b = "0,0";
    std::uint32_t ch = 32003;
    std::string mode = "artinian";
    std::string pWindow;
    std::size_t sizeLimit = 200000;
    std::string out;
    std::string format = "json";
    std::optional<int> q, k, p;
    std::string suite;
    int corruptG = -1;
    std::optional<int> bound;
    int maxN = 6;
};

struct ConfigError : Error {
    using Error::Error;
};

std::pair<int, int> parsePair(const std::string& flag, const std::string& v) {
    auto comma = v.find(',');
    if (comma == std::string::npos) throw ConfigError("--" + flag + " expects a,b (got '" + v + "')");
    try {
        std::size_t u = 0, w = 0;
        int a = std::stoi(v.substr(0, comma), &u);
        int c = std::stoi(v.substr(comma + 1), &w);
        if (u != comma || w != v.size() - comma - 1) throw std::invalid_argument(v);
        return {a, c};
    } catch (const std::logic_error&) {
        throw ConfigError("--" + flag + " expects two integers a,b (got '" + v + "')");
    }
}

Setting settingFrom(const Options& o) {
    Setting s;
    std::tie(s.n1, s.n2) = parsePair("n", o.n);
    std::tie(s.d1, s.d2) = parsePair("d", o.d);
    std::tie(s.b1, s.b2) = parsePair("b", o.b);
    s.ch = o.ch;
    s.corruptG = o.corruptG;
    s.validate(false);
    if (o.sizeLimit < 1) throw ConfigError("invariant violated: size limit >= 1");
    return s;
}

SuiteConfig suiteFrom(const Options& o) {
    SuiteConfig c;
    c.ch = o.ch;
    c.sizeLimit = o.sizeLimit;
    c.corruptG = o.corruptG;
    return c;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty())
        std::cout << text;
    else
        writeText(o.out, text);
}

int recordsExit(const std::vector<VerificationRecord>& rs) {
    bool fail = false, size = false;
    for (auto& r : rs) {
        fail |= r.status == Status::Fail;
        size |= r.status == Status::SkippedSize;
    }
    return fail ? 1 : size ? 3 : 0;
}

void emitRecords(const Options& o, const std::vector<VerificationRecord>& rs) {
    emit(o, o.format == "csv" ? toCsv(rs) : dump(toJson(rs)));
}

template <class F>
int runBetti(const Options& o, const Setting& s, const F& field) {
    BettiRequest req;
    if (!o.pWindow.empty()) std::tie(req.pLo, req.pHi) = parsePair("p-window", o.pWindow);
    if (req.pLo < 0 || (req.pHi >= 0 && req.pHi < req.pLo)) throw ConfigError("--p-window needs 0 <= lo <= hi");
    if (o.q) req.qLo = req.qHi = *o.q;
    std::vector<BettiTable> tables;
    if (o.mode == "artinian" || o.mode == "both") tables.push_back(bettiTable(KoszulEngine<F>(s, field, Mode::Artinian, o.sizeLimit), req));
    if (o.mode == "raw" || o.mode == "both") tables.push_back(bettiTable(KoszulEngine<F>(s, field, Mode::Raw, o.sizeLimit), req));
    if (tables.size() == 1) {
        emit(o, o.format == "csv" ? toCsv(tables[0]) : dump(toJson(tables[0])));
        return 0;
    }
    bool agree = tables[0].entries.size() == tables[1].entries.size();
    for (std::size_t i = 0; agree && i < tables[0].entries.size(); ++i) agree = tables[0].entries[i].dim == tables[1].entries[i].dim;
    if (o.format == "csv") {
        std::string text = toCsv(tables[0], true);
        text += toCsv(tables[1], true).substr(std::string("mode,p,q,dim\n").size());
        emit(o, text);
    } else {
        Json j;
        j["tables"] = {toJson(tables[0]), toJson(tables[1])};
        j["agree"] = agree;
        emit(o, dump(j));
    }
    if (!agree) std::cerr << "artinian and raw tables disagree\n";
    return agree ? 0 : 1;
}

int cmdBetti(const Options& o) {
    Setting s = settingFrom(o);
    if (s.ch == 0) return runBetti(o, s, RationalField());
    return runBetti(o, s, PrimeField(s.ch));
}

int cmdRange(const Options& o) {
    Setting s = settingFrom(o);
    std::vector<int> qs;
    if (o.q)
        qs.push_back(*o.q);
    else
        for (int q = 1; q <= s.absN(); ++q) qs.push_back(q);
    std::vector<RangeReport> reps;
    for (int q : qs) reps.push_back(rangeReport(s, q));
    if (o.format == "csv") {
        std::string text = "q,applies,lo,hi,rho_lower_bound\n";
        for (auto& r : reps) {
            text += std::to_string(r.q) + "," + (r.applies ? "true" : "false") + ",";
            if (r.applies) text += std::to_string(r.lo) + "," + std::to_string(r.hi) + "," + rationalText(r.rhoLower);
            else text += ",,";
            text += "\n";
        }
        emit(o, text);
    } else if (reps.size() == 1) {
        emit(o, dump(toJson(reps[0])));
    } else {
        Json j = Json::array();
        for (auto& r : reps) j.push_back(toJson(r));
        emit(o, dump(j));
    }
    return 0;
}

int cmdVerify(const Options& o) {
    SuiteConfig cfg = suiteFrom(o);
    std::vector<VerificationRecord> rs;
    if (!o.suite.empty()) {
        if (o.suite != "paper") throw ConfigError("unknown suite '" + o.suite + "' (known: paper)");
        if (o.ch == 0) throw HypothesisViolation("verification suites run over a prime field; pass --char P with P prime");
        rs = defaultSuite(cfg);
    } else {
        Setting s = settingFrom(o);
        if (o.mode == "both") for (auto& r : artinianCheck(s, cfg)) rs.push_back(r);
        InstanceProbe probe(s, cfg);
        std::vector<int> qs;
        if (o.q)
            qs.push_back(*o.q);
        else
            for (int q = 1; q <= s.absN(); ++q) qs.push_back(q);
        for (int q : qs) rs.push_back(verifyRange(probe, q));
        for (int q : qs) rs.push_back(verifyRho(probe, q));
    }
    emitRecords(o, rs);
    return recordsExit(rs);
}

int cmdScan(const Options& o) {
    SuiteConfig cfg = suiteFrom(o);
    ConjectureScan scan;
    if (o.maxN < 2) throw ConfigError("--max-n must be at least 2");
    scan = scanConjecture(o.maxN, cfg);
    writeText(o.out.empty() ? "conjecture-report.json" : o.out, dump(scan.report));
    std::cout << (o.format == "csv" ? toCsv(scan.records) : dump(toJson(scan.records)));
    return recordsExit(scan.records);
}

int cmdRegSeq(const Options& o) {
    Setting s = settingFrom(o);
    if (s.ch == 0) throw HypothesisViolation("regseq-check runs over a prime field; pass --char P with P prime");
    int bound = o.bound ? *o.bound : s.absN() + 3;
    std::vector<VerificationRecord> rs{regularSequenceCheck(s, bound)};
    emitRecords(o, rs);
    return recordsExit(rs);
}

template <class F>
int runWitness(const Options& o, const Setting& s, const F& field) {
    if (!o.q || !o.k) throw ConfigError("witness needs --q and --k");
    if (o.mode != "artinian") throw HypothesisViolation("witnesses live in the Artinian reduction; use artinian mode");
    KoszulEngine<F> eng(s, field, Mode::Artinian, o.sizeLimit);
    int p = o.p ? *o.p : (int)buildLSet(eng.ring(), buildFqkb(s, *o.q, *o.k)).size();
    WitnessCocycle w = constructWitness(eng, *o.q, *o.k, p);
    WitnessFlags fl = verifyWitness(eng, w);
    emit(o, dump(toJson(w)));
    return fl.valid() ? 0 : 1;
}

int cmdWitness(const Options& o) {
    Setting s = settingFrom(o);
    if (s.ch == 0) return runWitness(o, s, RationalField());
    return runWitness(o, s, PrimeField(s.ch));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Koszul cohomology of Segre-Veronese embeddings"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--n", o.n, "dimensions n1,n2");
    app.add_option("--d", o.d, "embedding bidegree d1,d2");
    app.add_option("--b", o.b, "twist b1,b2");
    app.add_option("--char", o.ch, "field characteristic, 0 for rationals");
    app.add_option("--mode", o.mode, "artinian, raw or both")->check(CLI::IsMember({"artinian", "raw", "both"}));
    app.add_option("--p-window", o.pWindow, "lo,hi");
    app.add_option("--size-limit", o.sizeLimit, "max strand component columns");
    app.add_option("--out", o.out, "output path");
    app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--q", o.q, "cohomological row");
    app.add_option("--k", o.k, "witness index");
    app.add_option("--p", o.p, "homological degree");
    app.add_option("--corrupt-g", o.corruptG)->group("");

    auto* betti = app.add_subcommand("betti", "Betti table over a window");
    auto* range = app.add_subcommand("range", "nonvanishing range and rho bound");
    auto* verify = app.add_subcommand("verify", "verification records");
    verify->add_option("--suite", o.suite, "paper runs the whole default grid");
    auto* scan = app.add_subcommand("scan-conjecture", "tri-degree vanishing scan for d=(1,1)");
    scan->add_option("--max-n", o.maxN, "largest n1+n2");
    auto* regseq = app.add_subcommand("regseq-check", "degreewise regular sequence check");
    regseq->add_option("--bound", o.bound, "largest internal degree");
    auto* witness = app.add_subcommand("witness", "build and verify a monomial witness");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*betti) return cmdBetti(o);
        if (*range) return cmdRange(o);
        if (*verify) return cmdVerify(o);
        if (*scan) return cmdScan(o);
        if (*regseq) return cmdRegSeq(o);
        if (*witness) return cmdWitness(o);
    } catch (const SizeLimitExceeded& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
