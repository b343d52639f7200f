#include "syz/witness.hpp"

#include <algorithm>
#include <set>

namespace syz {

static std::string qk(int q, int k) { return "(q=" + std::to_string(q) + ", k=" + std::to_string(k) + ")"; }

static void checkIndices(const Setting& s, int q, int k, bool allowZero) {
    if (q < (allowZero ? 0 : 1) || q > s.absN()) throw OutOfRange("q out of range " + qk(q, k));
    if (k < 0 || k > q) throw OutOfRange("k out of range " + qk(q, k));
    if (q - k > s.n1) throw OutOfRange("q-k > n1 " + qk(q, k));
    if (k > s.n2) throw OutOfRange("k > n2 " + qk(q, k));
}

Monomial buildTildeF(const Setting& s, int q, int k) {
    checkIndices(s, q, k, true);
    Monomial m = Monomial::one(s);
    while (q > 0) {
        if (k == 0) {
            m.yexp(0) += q;
            break;
        }
        if (k == q) {
            m.xexp(0) += q;
            break;
        }
        m.xexp(q - k) += 1;
        m.yexp(k - 1) += 1;
        q -= 2;
        k -= 1;
    }
    return m;
}

int fqkbCase(const Setting& s, int q, int k) {
    checkIndices(s, q, k, false);
    int A = q - k + s.b1, B = k + s.b2;
    if (!(s.d1 > std::abs(A))) throw HypothesisViolation("d1 > |q-k+b1| fails " + qk(q, k));
    if (!(s.d2 > std::abs(B))) throw HypothesisViolation("d2 > |k+b2| fails " + qk(q, k));
    if (A < 0 && B < 0) throw HypothesisViolation("q-k+b1 and k+b2 are both negative " + qk(q, k));
    if (A < 0) {
        if (k == 0) throw HypothesisViolation("q-k+b1 < 0 needs k != 0 " + qk(q, k));
        return 2;
    }
    if (B < 0) {
        if (k == q) throw HypothesisViolation("k+b2 < 0 needs k < q " + qk(q, k));
        return 3;
    }
    return 1;
}

Monomial expectedFloor(const Setting& s, int q, int k) {
    switch (fqkbCase(s, q, k)) {
        case 2: return buildTildeF(s, q - 1, k - 1);
        case 3: return buildTildeF(s, q - 1, k);
        default: return buildTildeF(s, q, k);
    }
}

Monomial buildFqkb(const Setting& s, int q, int k) {
    int c = fqkbCase(s, q, k);
    int A = q - k + s.b1, B = k + s.b2;
    Monomial m = dthPower(s, expectedFloor(s, q, k));
    for (int i = 0; i < q - k; ++i) m.xexp(i) += s.d1 - 1;
    m.xexp(q - k) += c == 2 ? A + s.d1 : A;
    if (k == 0) {
        m.yexp(0) += c == 3 ? s.b2 + s.d2 : s.b2;
    } else {
        for (int j = 0; j < k; ++j) m.yexp(j) += s.d2 - 1;
        m.yexp(k) += c == 3 ? B + s.d2 : B;
    }
    return m;
}

std::vector<Monomial> linearAnnihilatorVariables(const Setting& s, int q, int k) {
    int c = fqkbCase(s, q, k);
    int xs = q - k - (c == 3 ? 1 : 0);
    int ys = k - (c == 2 ? 1 : 0);
    std::vector<Monomial> out;
    for (int i = 0; i < xs; ++i) out.push_back(Monomial::x(s, i));
    for (int j = 0; j < ys; ++j) out.push_back(Monomial::y(s, j));
    return out;
}

template <class F>
std::vector<Monomial> buildLSet(const QuotientRing<F>& ring, const Monomial& f) {
    const Setting& s = ring.setting();
    long long idx = indexWeightedDegree(s, f);
    std::vector<Monomial> out;
    for (auto& m : ring.piece({s.d1, s.d2}).basis)
        if (indexWeightedDegree(s, m) <= idx) out.push_back(m);
    return out;
}

template <class F>
std::vector<Monomial> buildZSet(const QuotientRing<F>& ring, const Monomial& f) {
    const Setting& s = ring.setting();
    std::vector<Monomial> out;
    for (auto& m : ring.piece({s.d1, s.d2}).basis)
        if (ring.isZero(m * f)) out.push_back(m);
    return out;
}

template <class F>
std::vector<Monomial> divisorSet(const QuotientRing<F>& ring, const Monomial& f) {
    const Setting& s = ring.setting();
    auto nf = ring.normalForm(f);
    std::set<std::uint32_t> supp;
    for (auto& [j, c] : nf) supp.insert(j);
    BiDegree lower = bidegree(f) - BiDegree{s.d1, s.d2};
    std::vector<Monomial> out;
    if (!lower.nonneg() || supp.empty()) return out;
    GradeKey fk = ring.key(f);
    const auto& below = ring.piece(lower).basis;
    for (auto& u : ring.piece({s.d1, s.d2}).basis) {
        GradeKey uk = ring.key(u);
        bool hit = false;
        for (auto& g : below) {
            if (!(ring.addKeys(uk, ring.key(g)) == fk)) continue;
            for (auto& [j, c] : ring.normalForm(u * g))
                if (supp.count(j)) hit = true;
            if (hit) break;
        }
        if (hit) out.push_back(u);
    }
    return out;
}

static bool contains(const std::vector<Monomial>& set, const Monomial& m) { return std::find(set.begin(), set.end(), m) != set.end(); }

static bool subset(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
    for (auto& m : a)
        if (!contains(b, m)) return false;
    return true;
}

template <class F>
static void needArtinian(const KoszulEngine<F>& eng) {
    if (eng.mode() != Mode::Artinian) throw HypothesisViolation("witnesses live in the Artinian reduction; use artinian mode");
}

template <class F>
WitnessSpan witnessSpan(const KoszulEngine<F>& eng, int q, int k) {
    needArtinian(eng);
    const auto& ring = eng.ring();
    Monomial f = buildFqkb(eng.setting(), q, k);
    if (ring.isZero(f)) throw HypothesisViolation("f_{q,k,b} vanishes in the quotient " + qk(q, k));
    auto L = buildLSet(ring, f), Z = buildZSet(ring, f);
    WitnessSpan sp;
    sp.top = Z.size();
    sp.lInsideZ = subset(L, Z);
    auto U = divisorSet(ring, f);
    if (!subset(U, Z)) throw HypothesisViolation("divisor set is not inside Z(f) " + qk(q, k));
    sp.base = U.size();
    return sp;
}

template <class F>
WitnessCocycle constructWitness(const KoszulEngine<F>& eng, int q, int k, int p) {
    needArtinian(eng);
    const Setting& s = eng.setting();
    const auto& ring = eng.ring();
    Monomial f = buildFqkb(s, q, k);
    if (ring.isZero(f)) throw HypothesisViolation("f_{q,k,b} vanishes in the quotient " + qk(q, k));
    auto L = buildLSet(ring, f), Z = buildZSet(ring, f);
    auto base = divisorSet(ring, f);
    if (!subset(base, Z)) throw HypothesisViolation("divisor set is not inside Z(f) " + qk(q, k));
    if (p < (int)base.size() || p > (int)Z.size())
        throw RangeEmpty("p=" + std::to_string(p) + " outside [" + std::to_string(base.size()) + ", " + std::to_string(Z.size()) + "] for " + qk(q, k));

    // after U: the rest of L, then annihilator-ideal monomials, then the rest of Z, each in generator order
    auto vars = linearAnnihilatorVariables(s, q, k);
    auto rank = [&](const Monomial& m) {
        if (contains(L, m)) return 0;
        for (auto& v : vars)
            if (v.divides(m)) return 1;
        return 2;
    };
    std::vector<Monomial> extra;
    for (int pass = 0; pass < 3; ++pass)
        for (auto& m : eng.generators())
            if (contains(Z, m) && !contains(base, m) && rank(m) == pass) extra.push_back(m);

    WitnessCocycle w;
    w.q = q;
    w.k = k;
    w.p = p;
    w.payload = f;
    std::vector<Monomial> chosen = base;
    chosen.insert(chosen.end(), extra.begin(), extra.begin() + (p - (int)base.size()));
    for (auto& m : eng.generators())
        if (contains(chosen, m)) w.factors.push_back(m);
    return w;
}

template <class F>
std::vector<WedgeTerm<F>> witnessVector(const KoszulEngine<F>& eng, const WitnessCocycle& w) {
    const F& fld = eng.ring().field();
    std::vector<int> idx;
    for (auto& m : w.factors) {
        auto i = eng.generatorIndex(m);
        if (!i) throw HypothesisViolation("factor " + toText(m) + " is not a quotient basis monomial of degree d");
        idx.push_back(*i);
    }
    // sign of the sorting permutation
    bool odd = false;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            if (idx[a] == idx[b]) return {};
            if (idx[a] > idx[b]) odd = !odd;
        }
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t(1) << i;
    std::vector<WedgeTerm<F>> z;
    for (auto& [j, c] : eng.ring().normalForm(w.payload)) z.push_back({mask, j, odd ? fld.neg(c) : c});
    return z;
}

template <class F>
WitnessFlags verifyWitness(const KoszulEngine<F>& eng, WitnessCocycle& w) {
    needArtinian(eng);
    const Setting& s = eng.setting();
    WitnessFlags fl;
    if (bidegree(w.payload) != BiDegree{w.q * s.d1 + s.b1, w.q * s.d2 + s.b2})
        throw HypothesisViolation("payload has the wrong bidegree for q=" + std::to_string(w.q));
    auto z = witnessVector(eng, w);
    fl.nonzero = !z.empty();
    std::sort(w.factors.begin(), w.factors.end(),
              [&](const Monomial& a, const Monomial& b) { return *eng.generatorIndex(a) < *eng.generatorIndex(b); });
    w.p = (int)w.factors.size();
    if (!fl.nonzero) {
        fl.cocycle = true;
        fl.coboundary = true;
        fl.method = "exact";
        w.flags = fl;
        return fl;
    }
    fl.cocycle = eng.applyDout(w.p, w.q, z).empty();
    try {
        fl.coboundary = eng.inImageOfDin(w.p, w.q, z);
        fl.method = "exact";
    } catch (const SizeLimitExceeded&) {
        if (!subset(divisorSet(eng.ring(), w.payload), w.factors)) throw;
        fl.coboundary = false;
        fl.method = "certificate";
    }
    w.flags = fl;
    return fl;
}

std::string rangeHypothesisFailure(const Setting& s, int q) {
    if (q < 1 || q > s.absN()) return "needs 1 <= q <= |n|";
    if (s.n1 < 1 || s.n2 < 1) return "needs n1, n2 >= 1";
    if (s.d1 < 2 || s.d2 < 2) return "needs d1, d2 > 1";
    if (s.b1 < 0 || s.b2 < 0) return "needs b >= 0";
    if (!(s.d1 > q + s.b1)) return "d1 > q + b1 fails";
    if (!(s.d2 > q + s.b2)) return "d2 > q + b2 fails";
    return cohenMacaulayFailure(s);
}

static long long lowTerm(const Setting& s, int i, int j) { return checkedMul(binomial(s.d1 + i, i), binomial(s.d2 + j, j)); }
static long long highTerm(const Setting& s, int i, int j) {
    return checkedMul(binomial(s.d1 + s.n1 - i, s.n1 - i), binomial(s.d2 + s.n2 - j, s.n2 - j));
}

template <class Fn>
static void forAdmissible(const Setting& s, int q, Fn fn) {
    for (int i = 0; i <= q; ++i) {
        int j = q - i;
        if (i <= s.n1 && j <= s.n2) fn(i, j);
    }
}

std::pair<long long, long long> theoremARange(const Setting& s, int q) {
    std::string why = rangeHypothesisFailure(s, q);
    if (!why.empty()) throw HypothesisViolation(why);
    long long lo = -1, hi = -1;
    forAdmissible(s, q, [&](int i, int j) {
        long long a = lowTerm(s, i, j), b = highTerm(s, i, j);
        if (lo < 0 || a < lo) lo = a;
        if (hi < 0 || b < hi) hi = b;
    });
    return {lo - (q + 2), rND(s) - hi - (s.absN() + 1)};
}

std::pair<long long, long long> perKRange(const Setting& s, int q, int k) {
    std::string why = rangeHypothesisFailure(s, q);
    if (!why.empty()) throw HypothesisViolation(why);
    int i = q - k, j = k;
    if (k < 0 || k > q || i > s.n1 || j > s.n2) throw OutOfRange("k not admissible " + qk(q, k));
    return {lowTerm(s, i, j) - (q + 2), rND(s) - highTerm(s, i, j) - (s.absN() + 1)};
}

mpq_class rhoLowerBound(const Setting& s, int q) {
    std::string why = rangeHypothesisFailure(s, q);
    if (!why.empty()) throw HypothesisViolation(why);
    long long r = rND(s);
    mpq_class sum = 0;
    forAdmissible(s, q, [&](int i, int j) { sum += mpq_class(std::to_string(checkedAdd(highTerm(s, i, j), lowTerm(s, i, j)))); });
    mpq_class out = 1 - (sum + (s.absN() - q - 1)) / mpq_class(std::to_string(r));
    out.canonicalize();
    return out;
}

RangeReport rangeReport(const Setting& s, int q) {
    RangeReport rep;
    rep.setting = s;
    rep.q = q;
    rep.reason = rangeHypothesisFailure(s, q);
    rep.applies = rep.reason.empty();
    if (!rep.applies) return rep;
    std::tie(rep.lo, rep.hi) = theoremARange(s, q);
    for (int k = 0; k <= q; ++k)
        if (q - k <= s.n1 && k <= s.n2) {
            auto [lo, hi] = perKRange(s, q, k);
            rep.perK.push_back({k, lo, hi});
        }
    rep.rhoLower = rhoLowerBound(s, q);
    return rep;
}

#define SYZ_WITNESS_INST(F)                                                                   \
    template std::vector<Monomial> buildLSet<F>(const QuotientRing<F>&, const Monomial&);     \
    template std::vector<Monomial> buildZSet<F>(const QuotientRing<F>&, const Monomial&);     \
    template std::vector<Monomial> divisorSet<F>(const QuotientRing<F>&, const Monomial&);    \
    template WitnessSpan witnessSpan<F>(const KoszulEngine<F>&, int, int);                    \
    template WitnessCocycle constructWitness<F>(const KoszulEngine<F>&, int, int, int);       \
    template WitnessFlags verifyWitness<F>(const KoszulEngine<F>&, WitnessCocycle&);          \
    template std::vector<WedgeTerm<F>> witnessVector<F>(const KoszulEngine<F>&, const WitnessCocycle&);

SYZ_WITNESS_INST(PrimeField)
SYZ_WITNESS_INST(RationalField)

}  // namespace syz
