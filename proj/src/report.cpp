#include "syz/report.hpp"

#include <fstream>
#include <sstream>

namespace syz {

std::string rationalText(const mpq_class& v) {
    mpq_class c = v;
    c.canonicalize();
    return c.get_str();
}

Json toJson(const Setting& s) {
    Json j;
    j["n"] = {s.n1, s.n2};
    j["d"] = {s.d1, s.d2};
    j["b"] = {s.b1, s.b2};
    return j;
}

Json toJson(const BettiTable& t) {
    Json j;
    j["setting"] = toJson(t.setting);
    j["char"] = t.setting.ch;
    j["mode"] = toString(t.mode);
    Json e = Json::array();
    for (auto& x : t.entries) e.push_back({{"p", x.p}, {"q", x.q}, {"dim", x.dim}});
    j["entries"] = e;
    j["r"] = t.r;
    return j;
}

Json toJson(const RangeReport& r) {
    Json j;
    j["setting"] = toJson(r.setting);
    j["q"] = r.q;
    j["applies"] = r.applies;
    if (!r.applies) {
        j["status"] = "skipped-hypothesis";
        j["reason"] = r.reason;
        return j;
    }
    j["lo"] = r.lo;
    j["hi"] = r.hi;
    Json pk = Json::array();
    for (auto& k : r.perK) pk.push_back({{"k", k.k}, {"lo", k.lo}, {"hi", k.hi}});
    j["per_k"] = pk;
    j["rho_lower_bound"] = rationalText(r.rhoLower);
    return j;
}

Json toJson(const WitnessCocycle& w) {
    Json j;
    j["q"] = w.q;
    j["k"] = w.k;
    j["p"] = w.p;
    Json f = Json::array();
    for (auto& m : w.factors) f.push_back(toText(m));
    j["factors"] = f;
    j["payload"] = toText(w.payload);
    if (w.flags) {
        j["flags"] = {{"nonzero", w.flags->nonzero}, {"cocycle", w.flags->cocycle}, {"coboundary", w.flags->coboundary}};
        j["method"] = w.flags->method;
    }
    return j;
}

Json toJson(const VerificationRecord& r) {
    Json j;
    j["instance"] = r.instance;
    j["claim"] = r.claim;
    j["status"] = toString(r.status);
    j["details"] = r.details;
    return j;
}

Json toJson(const std::vector<VerificationRecord>& rs) {
    Json j = Json::array();
    for (auto& r : rs) j.push_back(toJson(r));
    return j;
}

std::string toCsv(const BettiTable& t, bool withMode) {
    std::ostringstream o;
    o << (withMode ? "mode,p,q,dim\n" : "p,q,dim\n");
    for (auto& e : t.entries) {
        if (withMode) o << toString(t.mode) << ',';
        o << e.p << ',' << e.q << ',' << e.dim << '\n';
    }
    return o.str();
}

static std::string csvField(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string toCsv(const std::vector<VerificationRecord>& rs) {
    std::ostringstream o;
    o << "instance,claim,status\n";
    for (auto& r : rs) o << csvField(r.instance) << ',' << csvField(r.claim) << ',' << toString(r.status) << '\n';
    return o.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void writeText(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path + " for writing");
    f << text;
    if (!f) throw Error("write to " + path + " failed");
}

}  // namespace syz
