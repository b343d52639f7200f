#include "syz/koszul.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <unordered_map>

namespace syz {

std::string toString(Mode m) { return m == Mode::Artinian ? "artinian" : "raw"; }

WedgeBasis::WedgeBasis(std::size_t n, int p) : n_(n), p_(p) {
    if (n > 64) throw SizeLimitExceeded("wedge basis supports at most 64 generators");
    size_ = p < 0 ? 0 : (std::uint64_t)binomial((long long)n, p);
}

std::vector<int> WedgeBasis::positions(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(__builtin_ctzll(mask));
        mask &= mask - 1;
    }
    return out;
}

std::uint64_t WedgeBasis::rank(std::uint64_t mask) const {
    auto c = positions(mask);
    if ((int)c.size() != p_) throw OutOfRange("mask has the wrong weight");
    std::uint64_t r = 0;
    int prev = -1;
    for (int i = 0; i < p_; ++i) {
        for (int j = prev + 1; j < c[i]; ++j) r += (std::uint64_t)binomial((long long)n_ - 1 - j, p_ - 1 - i);
        prev = c[i];
    }
    return r;
}

std::uint64_t WedgeBasis::unrank(std::uint64_t idx) const {
    if (idx >= size_) throw OutOfRange("wedge index out of range");
    std::uint64_t mask = 0;
    int j = 0;
    for (int i = 0; i < p_; ++i) {
        for (;; ++j) {
            std::uint64_t block = (std::uint64_t)binomial((long long)n_ - 1 - j, p_ - 1 - i);
            if (idx < block) break;
            idx -= block;
        }
        mask |= std::uint64_t(1) << j;
        ++j;
    }
    return mask;
}

bool isCohenMacaulay(const Setting& s) { return cohenMacaulayFailure(s).empty(); }

std::string cohenMacaulayFailure(const Setting& s) {
    long long d1 = s.d1, d2 = s.d2, b1 = s.b1, b2 = s.b2;
    if (!(d1 * b2 - d2 * b1 < d2 * (s.n1 + 1))) return "(d1/d2)*b2 - b1 < n1 + 1 fails";
    if (!(d2 * b1 - d1 * b2 < d1 * (s.n2 + 1))) return "(d2/d1)*b1 - b2 < n2 + 1 fails";
    return "";
}

bool regularityVanishingHolds(const Setting& s) {
    long long d1 = s.d1, d2 = s.d2, b1 = s.b1, b2 = s.b2, n1 = s.n1, n2 = s.n2;
    bool r1 = d1 + b1 * n2 > -n1 - 1 || d2 + b2 * n2 < 0;
    bool r2 = d1 + b1 * n1 < 0 || d2 + b2 * n1 > -n2 - 1;
    return r1 && r2;
}

static long long hP(int n, long long a, int i) {
    if (i == 0) return a >= 0 ? binomial(a + n, n) : 0;
    if (i == n) return a <= -n - 1 ? binomial(-a - 1, n) : 0;
    return 0;
}

std::vector<long long> kunnethCohomology(int n1, int n2, long long a1, long long a2) {
    std::vector<long long> h(n1 + n2 + 1, 0);
    std::vector<int> I1{0}, I2{0};
    if (n1) I1.push_back(n1);
    if (n2) I2.push_back(n2);
    for (int i1 : I1)
        for (int i2 : I2) h[i1 + i2] = checkedAdd(h[i1 + i2], checkedMul(hP(n1, a1, i1), hP(n2, a2, i2)));
    return h;
}

bool noIntermediateCohomology(const Setting& s) {
    // outside this window one of b + k d is large positive or both are very negative
    long long span = std::abs(s.b1) + std::abs(s.b2) + s.absN() + 2;
    for (long long k = -span; k <= span; ++k) {
        auto h = kunnethCohomology(s.n1, s.n2, s.b1 + k * s.d1, s.b2 + k * s.d2);
        for (int i = 1; i < s.absN(); ++i)
            if (h[i]) return false;
    }
    return true;
}

bool regularityByKunneth(const Setting& s) {
    int N = s.absN();
    for (int i = 1; i <= N; ++i) {
        auto h = kunnethCohomology(s.n1, s.n2, s.b1 + (long long)(N - i) * s.d1, s.b2 + (long long)(N - i) * s.d2);
        if (h[i]) return false;
    }
    return true;
}

template <class F>
KoszulEngine<F>::KoszulEngine(const Setting& s, const F& f, Mode mode, std::size_t sizeLimit)
    : s_(s), f_(f), mode_(mode), limit_(sizeLimit), ring_(s, f, mode == Mode::Raw) {
    if (limit_ < 1) throw HypothesisViolation("size limit must be at least 1");
    if (mode_ == Mode::Artinian) {
        std::string why = cohenMacaulayFailure(s_);
        if (!why.empty()) throw HypothesisViolation("Artinian reduction needs the Cohen-Macaulay inequalities: " + why + "; use raw mode");
    }
    gens_ = ring_.piece({s_.d1, s_.d2}).basis;
    if (gens_.size() > 63) throw SizeLimitExceeded("more than 63 wedge generators");
    for (auto& g : gens_) genKeys_.push_back(ring_.key(g));
}

template <class F>
BiDegree KoszulEngine<F>::coefficientDegree(int q) const {
    return {q * s_.d1 + s_.b1, q * s_.d2 + s_.b2};
}

template <class F>
const typename KoszulEngine<F>::Tables& KoszulEngine<F>::tables(int q) const {
    std::unique_lock<std::mutex> lock(mu_);
    auto it = tables_.find(q);
    if (it != tables_.end() && it->second->upReady) return *it->second;
    lock.unlock();
    auto T = std::make_unique<Tables>();
    T->a = coefficientDegree(q);
    if (T->a.nonneg()) T->basis = ring_.piece(T->a).basis;
    for (auto& m : T->basis) T->keys.push_back(ring_.key(m));
    T->up.assign(gens_.size(), std::vector<SparseVec<F>>(T->basis.size()));
    BiDegree next = coefficientDegree(q + 1);
    if (next.nonneg())
        for (std::size_t i = 0; i < gens_.size(); ++i)
            for (std::size_t w = 0; w < T->basis.size(); ++w) T->up[i][w] = ring_.normalForm(gens_[i] * T->basis[w]);
    T->upReady = true;
    lock.lock();
    auto& slot = tables_[q];
    if (!slot) slot = std::move(T);
    return *slot;
}

template <class F>
const std::vector<Monomial>& KoszulEngine<F>::coefficients(int q) const {
    return tables(q).basis;
}

template <class F>
std::optional<int> KoszulEngine<F>::generatorIndex(const Monomial& m) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i] == m) return (int)i;
    return std::nullopt;
}

static std::uint64_t satMul(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t cap = std::uint64_t(1) << 62;
    if (a && b > cap / a) return cap;
    return std::min(a * b, cap);
}

template <class F>
std::uint64_t KoszulEngine<F>::termDim(int p, int q) const {
    if (p < 0 || p > (int)gens_.size()) return 0;
    if (!coefficientDegree(q).nonneg()) return 0;
    return satMul((std::uint64_t)binomial((long long)gens_.size(), p), tables(q).basis.size());
}

template <class F>
GradeKey KoszulEngine<F>::subsetKey(std::uint64_t mask) const {
    GradeKey k;
    while (mask) {
        int i = __builtin_ctzll(mask);
        k = ring_.addKeys(k, genKeys_[i]);
        mask &= mask - 1;
    }
    return k;
}

template <class F>
void KoszulEngine<F>::guard(int p, int q) const {
    std::uint64_t total = termDim(p + 1, q - 1);
    total += termDim(p, q);
    total += termDim(p - 1, q + 1);
    if (total > 32 * (std::uint64_t)limit_)
        throw SizeLimitExceeded("strand (p=" + std::to_string(p) + ", q=" + std::to_string(q) + ") has " + std::to_string(total) +
                                " basis elements over its three terms, above 32 x size limit");
}

namespace {

// all p-subsets of n bits in increasing numeric order
void forEachSubset(int n, int p, const std::function<void(std::uint64_t)>& fn) {
    if (p < 0 || p > n) return;
    if (p == 0) {
        fn(0);
        return;
    }
    std::uint64_t m = (std::uint64_t(1) << p) - 1;
    const std::uint64_t limit = std::uint64_t(1) << n;
    while (m < limit) {
        fn(m);
        std::uint64_t c = m & (~m + 1), r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
}

GradeKey subKeys(const Setting& s, bool raw, const GradeKey& a, const GradeKey& b, bool& ok) {
    GradeKey k;
    ok = true;
    if (raw) {
        for (int v = 0; v < s.nvars(); ++v) {
            k.v[v] = a.v[v] - b.v[v];
            if (k.v[v] < 0) ok = false;
        }
        return k;
    }
    for (int v = 0; v < 3; ++v) {
        k.v[v] = a.v[v] - b.v[v];
        if (k.v[v] < 0) ok = false;
    }
    for (int i = 0; i < s.nx(); ++i) k.v[3 + i] = ((a.v[3 + i] - b.v[3 + i]) % s.d1 + s.d1) % s.d1;
    for (int j = 0; j < s.ny(); ++j) {
        int p = 3 + s.nx() + j;
        k.v[p] = ((a.v[p] - b.v[p]) % s.d2 + s.d2) % s.d2;
    }
    return k;
}

using Groups = std::unordered_map<GradeKey, std::vector<std::uint64_t>, GradeKeyHash>;

template <class Eng>
Groups groupSubsets(const Eng& e, int n, int p, const std::function<GradeKey(std::uint64_t)>& key) {
    (void)e;
    Groups g;
    forEachSubset(n, p, [&](std::uint64_t m) { g[key(m)].push_back(m); });
    return g;
}

// one fine-graded piece of a term: for each coefficient index, the subset group it pairs with
struct Slice {
    std::vector<std::int64_t> offset;                    // per coefficient index, -1 when absent
    std::vector<const std::vector<std::uint64_t>*> group;  // per coefficient index
    std::size_t size = 0;
};

Slice sliceFor(const Setting& s, bool raw, const GradeKey& w, const std::vector<GradeKey>& coeffKeys, const Groups& groups) {
    Slice sl;
    sl.offset.assign(coeffKeys.size(), -1);
    sl.group.assign(coeffKeys.size(), nullptr);
    for (std::size_t j = 0; j < coeffKeys.size(); ++j) {
        bool ok;
        GradeKey gk = subKeys(s, raw, w, coeffKeys[j], ok);
        if (!ok) continue;
        auto it = groups.find(gk);
        if (it == groups.end()) continue;
        sl.offset[j] = (std::int64_t)sl.size;
        sl.group[j] = &it->second;
        sl.size += it->second.size();
    }
    return sl;
}

std::int64_t locate(const Slice& sl, std::uint32_t j, std::uint64_t mask) {
    if (sl.offset[j] < 0) return -1;
    auto& g = *sl.group[j];
    auto it = std::lower_bound(g.begin(), g.end(), mask);
    if (it == g.end() || *it != mask) return -1;
    return sl.offset[j] + (it - g.begin());
}

}  // namespace

template <class F>
long long KoszulEngine<F>::kpqDim(int p, int q, StrandInfo* info) const {
    if (info) *info = StrandInfo{};
    int N = (int)gens_.size();
    if (p < 0 || p > N || !coefficientDegree(q).nonneg()) return 0;
    const Tables& Tq = tables(q);
    if (Tq.basis.empty()) return 0;
    guard(p, q);
    const Tables& Tin = tables(q - 1);
    const Tables& Tout = tables(q + 1);
    bool raw = mode_ == Mode::Raw;
    auto key = [&](std::uint64_t m) { return subsetKey(m); };
    Groups gMid = groupSubsets(*this, N, p, key);
    Groups gIn = coefficientDegree(q - 1).nonneg() ? groupSubsets(*this, N, p + 1, key) : Groups{};
    Groups gOut = groupSubsets(*this, N, p - 1, key);

    // component weights present in the middle term, in a fixed order
    std::vector<GradeKey> weights;
    {
        std::unordered_map<GradeKey, char, GradeKeyHash> seen;
        std::vector<std::pair<std::uint64_t, GradeKey>> order;
        for (auto& [gk, masks] : gMid)
            for (std::size_t w = 0; w < Tq.basis.size(); ++w) {
                GradeKey k = ring_.addKeys(gk, Tq.keys[w]);
                if (seen.emplace(k, 1).second) order.emplace_back(masks.front() * 131 + w, k);
            }
        std::sort(order.begin(), order.end(), [](auto& a, auto& b) { return a.first < b.first; });
        for (auto& o : order) weights.push_back(o.second);
    }

    long long total = 0;
    for (const GradeKey& wk : weights) {
        Slice mid = sliceFor(s_, raw, wk, Tq.keys, gMid);
        if (mid.size == 0) continue;
        if (mid.size > limit_)
            throw SizeLimitExceeded("component of strand (p=" + std::to_string(p) + ", q=" + std::to_string(q) + ") has " + std::to_string(mid.size) +
                                    " columns, above size limit " + std::to_string(limit_));
        Slice out = sliceFor(s_, raw, wk, Tout.keys, gOut);
        Slice in = Tin.basis.empty() ? Slice{} : sliceFor(s_, raw, wk, Tin.keys, gIn);
        if (in.size > limit_)
            throw SizeLimitExceeded("component of strand (p=" + std::to_string(p) + ", q=" + std::to_string(q) + ") has " + std::to_string(in.size) +
                                    " incoming columns, above size limit " + std::to_string(limit_));

        std::size_t rkOut = 0, rkIn = 0;
        if (p > 0 && out.size > 0) {
            SparseMatrix<F> D(out.size, mid.size);
            for (std::size_t w = 0; w < Tq.basis.size(); ++w) {
                if (mid.offset[w] < 0) continue;
                auto& g = *mid.group[w];
                for (std::size_t t = 0; t < g.size(); ++t) {
                    auto& col = D.columns[mid.offset[w] + t];
                    std::uint64_t S = g[t];
                    int pos = 0;
                    for (std::uint64_t rest = S; rest; rest &= rest - 1, ++pos) {
                        int i = __builtin_ctzll(rest);
                        std::uint64_t face = S & ~(std::uint64_t(1) << i);
                        bool neg = (pos % 2) == 0;  // sign (-1)^(pos+1)
                        for (auto& [j, c] : Tq.up[i][w]) {
                            std::int64_t row = locate(out, j, face);
                            if (row < 0) throw Error("differential left its graded component");
                            col.emplace_back((std::uint32_t)row, neg ? f_.neg(c) : c);
                        }
                    }
                    canonicalize(f_, col);
                }
            }
            rkOut = matrixRank(f_, D);
        }
        if (in.size > 0) {
            SparseMatrix<F> D(mid.size, in.size);
            for (std::size_t w = 0; w < Tin.basis.size(); ++w) {
                if (in.offset[w] < 0) continue;
                auto& g = *in.group[w];
                for (std::size_t t = 0; t < g.size(); ++t) {
                    auto& col = D.columns[in.offset[w] + t];
                    std::uint64_t M = g[t];
                    int pos = 0;
                    for (std::uint64_t rest = M; rest; rest &= rest - 1, ++pos) {
                        int i = __builtin_ctzll(rest);
                        std::uint64_t face = M & ~(std::uint64_t(1) << i);
                        bool neg = (pos % 2) == 0;
                        for (auto& [j, c] : Tin.up[i][w]) {
                            std::int64_t row = locate(mid, j, face);
                            if (row < 0) throw Error("differential left its graded component");
                            col.emplace_back((std::uint32_t)row, neg ? f_.neg(c) : c);
                        }
                    }
                    canonicalize(f_, col);
                }
            }
            rkIn = matrixRank(f_, D);
        }
        long long kw = (long long)mid.size - (long long)rkOut - (long long)rkIn;
        if (kw < 0) throw Error("negative cohomology dimension; complex property violated");
        total += kw;
        if (info) {
            info->components++;
            info->largestComponent = std::max(info->largestComponent, mid.size);
            info->middle += mid.size;
        }
    }
    if (info) info->dim = total;
    return total;
}

template <class F>
KoszulStrand<F> KoszulEngine<F>::buildStrand(int p, int q, bool checkComplex) const {
    KoszulStrand<F> K;
    K.p = p;
    K.q = q;
    std::uint64_t cIn = termDim(p + 1, q - 1), cMid = termDim(p, q), cOut = termDim(p - 1, q + 1);
    if (cIn + cMid > limit_)
        throw SizeLimitExceeded("strand (p=" + std::to_string(p) + ", q=" + std::to_string(q) + ") needs " + std::to_string(cIn + cMid) +
                                " columns, above size limit " + std::to_string(limit_));
    std::size_t N = gens_.size();
    auto build = [&](int pp, int qq, std::uint64_t rows, std::uint64_t cols) {
        SparseMatrix<F> D(rows, cols);
        if (!cols || !rows) return D;
        const Tables& T = tables(qq);
        std::size_t Wsrc = T.basis.size(), Wdst = tables(qq + 1).basis.size();
        WedgeBasis src(N, pp), dst(N, pp - 1);
        for (std::uint64_t r = 0; r < src.size(); ++r) {
            std::uint64_t S = src.unrank(r);
            auto pos = WedgeBasis::positions(S);
            for (std::size_t w = 0; w < Wsrc; ++w) {
                auto& col = D.columns[r * Wsrc + w];
                for (std::size_t t = 0; t < pos.size(); ++t) {
                    std::uint64_t face = S & ~(std::uint64_t(1) << pos[t]);
                    std::uint64_t base = dst.rank(face) * Wdst;
                    bool neg = (t % 2) == 0;
                    for (auto& [j, c] : T.up[pos[t]][w]) col.emplace_back((std::uint32_t)(base + j), neg ? f_.neg(c) : c);
                }
                canonicalize(f_, col);
            }
        }
        return D;
    };
    K.din = build(p + 1, q - 1, cMid, cIn);
    K.dout = build(p, q, cOut, cMid);
    if (checkComplex && K.din.cols && K.dout.rows) {
        if (multiply(f_, K.dout, K.din).nnz() != 0) throw Error("dout * din != 0");
        K.complexChecked = true;
    }
    return K;
}

template <class F>
std::vector<WedgeTerm<F>> KoszulEngine<F>::applyDout(int p, int q, const std::vector<WedgeTerm<F>>& z) const {
    (void)p;
    const Tables& T = tables(q);
    std::map<std::pair<std::uint64_t, std::uint32_t>, typename F::Elem> acc;
    for (auto& t : z) {
        int pos = 0;
        for (std::uint64_t rest = t.mask; rest; rest &= rest - 1, ++pos) {
            int i = __builtin_ctzll(rest);
            std::uint64_t face = t.mask & ~(std::uint64_t(1) << i);
            for (auto& [j, c] : T.up[i][t.w]) {
                auto v = f_.mul(t.c, c);
                if (pos % 2 == 0) v = f_.neg(v);
                auto key = std::make_pair(face, j);
                auto it = acc.find(key);
                if (it == acc.end()) acc.emplace(key, v);
                else it->second = f_.add(it->second, v);
            }
        }
    }
    std::vector<WedgeTerm<F>> out;
    for (auto& [k, v] : acc)
        if (!f_.isZero(v)) out.push_back({k.first, k.second, v});
    return out;
}

template <class F>
bool KoszulEngine<F>::inImageOfDin(int p, int q, const std::vector<WedgeTerm<F>>& z) const {
    if (z.empty()) return true;
    int N = (int)gens_.size();
    const Tables& Tq = tables(q);
    GradeKey wk = ring_.addKeys(subsetKey(z[0].mask), Tq.keys[z[0].w]);
    for (auto& t : z)
        if (!(ring_.addKeys(subsetKey(t.mask), Tq.keys[t.w]) == wk)) throw NotHomogeneous("cochain is not homogeneous for the fine grading");
    if (!coefficientDegree(q - 1).nonneg() || p + 1 > N) return false;
    std::uint64_t total = termDim(p + 1, q - 1) + termDim(p, q);
    if (total > 32 * (std::uint64_t)limit_)
        throw SizeLimitExceeded("coboundary test for (p=" + std::to_string(p) + ", q=" + std::to_string(q) + ") enumerates " + std::to_string(total) +
                                " basis elements, above 32 x size limit");
    const Tables& Tin = tables(q - 1);
    if (Tin.basis.empty()) return false;
    bool raw = mode_ == Mode::Raw;
    auto key = [&](std::uint64_t m) { return subsetKey(m); };
    Groups gMid = groupSubsets(*this, N, p, key);
    Groups gIn = groupSubsets(*this, N, p + 1, key);
    Slice mid = sliceFor(s_, raw, wk, Tq.keys, gMid);
    Slice in = sliceFor(s_, raw, wk, Tin.keys, gIn);
    if (in.size > limit_ || mid.size > limit_)
        throw SizeLimitExceeded("coboundary test component exceeds size limit " + std::to_string(limit_));
    Echelon<F> ech(f_, mid.size);
    for (std::size_t w = 0; w < Tin.basis.size(); ++w) {
        if (in.offset[w] < 0) continue;
        for (std::uint64_t M : *in.group[w]) {
            SparseVec<F> col;
            int pos = 0;
            for (std::uint64_t rest = M; rest; rest &= rest - 1, ++pos) {
                int i = __builtin_ctzll(rest);
                std::uint64_t face = M & ~(std::uint64_t(1) << i);
                for (auto& [j, c] : Tin.up[i][w]) {
                    std::int64_t row = locate(mid, j, face);
                    if (row < 0) throw Error("differential left its graded component");
                    col.emplace_back((std::uint32_t)row, pos % 2 == 0 ? f_.neg(c) : c);
                }
            }
            canonicalize(f_, col);
            if (!col.empty()) ech.insert(col);
        }
    }
    SparseVec<F> v;
    for (auto& t : z) {
        std::int64_t row = locate(mid, t.w, t.mask);
        if (row < 0) throw Error("cochain term outside its component");
        v.emplace_back((std::uint32_t)row, t.c);
    }
    canonicalize(f_, v);
    return ech.inSpan(v);
}

template class KoszulEngine<PrimeField>;
template class KoszulEngine<RationalField>;

std::optional<long long> BettiTable::at(int p, int q) const {
    for (auto& e : entries)
        if (e.p == p && e.q == q) return e.dim;
    return std::nullopt;
}

unsigned workerCount() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SYZ_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return (unsigned)std::min<long>(v, 256);
    }
    return hw;
}

template <class F>
BettiTable bettiTable(const KoszulEngine<F>& eng, const BettiRequest& req) {
    const Setting& s = eng.setting();
    BettiTable t;
    t.setting = s;
    t.mode = eng.mode();
    t.r = rND(s);
    int pHi = req.pHi < 0 ? (int)t.r : req.pHi;
    int qHi = req.qHi < 0 ? s.absN() + 1 : req.qHi;
    std::vector<std::pair<int, int>> jobs;
    for (int q = req.qLo; q <= qHi; ++q)
        for (int p = req.pLo; p <= pHi; ++p) jobs.emplace_back(p, q);
    std::vector<long long> dims(jobs.size(), 0);
    std::vector<std::exception_ptr> errs(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
            try {
                dims[i] = eng.kpqDim(jobs[i].first, jobs[i].second);
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
    };
    unsigned nw = std::min<unsigned>(workerCount(), (unsigned)std::max<std::size_t>(jobs.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < nw; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    // first failure in job order, so reruns report the same error
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    for (std::size_t i = 0; i < jobs.size(); ++i) t.entries.push_back({jobs[i].first, jobs[i].second, dims[i]});
    return t;
}

template BettiTable bettiTable(const KoszulEngine<PrimeField>&, const BettiRequest&);
template BettiTable bettiTable(const KoszulEngine<RationalField>&, const BettiRequest&);

mpq_class rhoQ(const BettiTable& t, int q) {
    long long c = 0;
    for (auto& e : t.entries)
        if (e.q == q && e.dim > 0) ++c;
    mpq_class r((long)c, (unsigned long)t.r);
    r.canonicalize();
    return r;
}

}  // namespace syz
