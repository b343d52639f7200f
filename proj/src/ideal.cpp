#include "syz/ideal.hpp"

#include <algorithm>
#include <unordered_map>

namespace syz {

Polynomial::Polynomial(const Monomial& m, long long c) {
    if (c) terms_.emplace_back(m, c);
}

Polynomial& Polynomial::add(const Monomial& m, long long c) {
    if (!c) return *this;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const auto& t, const Monomial& x) { return grevlexGreater(t.first, x); });
    if (it != terms_.end() && it->first == m) {
        it->second = checkedAdd(it->second, c);
        if (!it->second) terms_.erase(it);
    } else {
        terms_.insert(it, {m, c});
    }
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

Polynomial Polynomial::operator*(const Monomial& m) const {
    Polynomial r;
    r.terms_.reserve(terms_.size());
    for (auto& [t, c] : terms_) r.terms_.emplace_back(t * m, c);
    return r;
}

BiDegree Polynomial::bidegree() const {
    if (terms_.empty()) return {};
    BiDegree a = syz::bidegree(terms_[0].first);
    for (auto& t : terms_)
        if (syz::bidegree(t.first) != a) throw NotHomogeneous("polynomial is not bihomogeneous");
    return a;
}

std::string toText(const Polynomial& f) {
    if (f.isZero()) return "0";
    std::string out;
    for (auto& [m, c] : f.terms()) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        long long a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a) + "*";
        out += toText(m);
    }
    return out;
}

std::vector<Polynomial> buildRegularSequenceForms(const Setting& s) {
    std::vector<Polynomial> g;
    for (int t = 0; t <= s.absN(); ++t) {
        Polynomial p;
        for (int i = 0; i <= s.n1; ++i) {
            int j = t - i;
            if (j < 0 || j > s.n2) continue;
            Monomial m = Monomial::one(s);
            m.xexp(i) = s.d1;
            m.yexp(j) = s.d2;
            p.add(m, 1);
        }
        if (t == s.corruptG) {
            if (p.terms().size() > 1) {
                p.add(p.terms().back().first, -1);
            } else {
                Monomial m = Monomial::one(s);
                m.xexp(0) = s.d1;
                m.yexp(0) = s.d2;
                p = Polynomial(m);
            }
        }
        g.push_back(p);
    }
    return g;
}

std::optional<Monomial> restrictMonomial(const Setting& s, const Monomial& m, int i, int j) {
    Monomial r(s.nx() - i, s.ny() - j);
    for (int a = 0; a < s.nx(); ++a) {
        if (a >= s.nx() - i) {
            if (m.xexp(a)) return std::nullopt;
        } else {
            r.xexp(a) = m.xexp(a);
        }
    }
    for (int b = 0; b < s.ny(); ++b) {
        if (b >= s.ny() - j) {
            if (m.yexp(b)) return std::nullopt;
        } else {
            r.yexp(b) = m.yexp(b);
        }
    }
    return r;
}

Monomial extendMonomial(const Setting& big, const Monomial& m) {
    if (m.nx() > big.nx() || m.ny() > big.ny()) throw OutOfRange("monomial has more variables than the target ring");
    Monomial r = Monomial::one(big);
    for (int a = 0; a < m.nx(); ++a) r.xexp(a) = m.xexp(a);
    for (int b = 0; b < m.ny(); ++b) r.yexp(b) = m.yexp(b);
    return r;
}

Restriction restrictToSubproduct(const Setting& s, int i, int j) {
    if (i < 0 || j < 0 || i > s.n1 || j > s.n2) throw OutOfRange("restriction indices out of range");
    Restriction out;
    out.setting = s.withN(s.n1 - i, s.n2 - j);
    out.setting.validate();
    for (auto& g : buildRegularSequenceForms(s)) {
        Polynomial img;
        for (auto& [m, c] : g.terms()) {
            auto r = restrictMonomial(s, m, i, j);
            if (r) img.add(*r, c);
        }
        if (!img.isZero()) out.forms.push_back(img);
    }
    return out;
}

template <class F>
QuotientRing<F>::QuotientRing(const Setting& s, const F& f, bool raw)
    : s_(s), f_(f), raw_(raw), fine_(true), forms_(buildRegularSequenceForms(s)) {
    s_.validate();
}

template <class F>
GradeKey QuotientRing<F>::key(const Monomial& m) const {
    GradeKey k;
    if (raw_) {
        for (int v = 0; v < m.nvars(); ++v) k.v[v] = m.raw(v);
        return k;
    }
    BiDegree a = bidegree(m);
    k.v[0] = a.a1;
    k.v[1] = a.a2;
    k.v[2] = (int32_t)indexWeightedDegree(s_, m);
    for (int i = 0; i < m.nx(); ++i) k.v[3 + i] = m.xexp(i) % s_.d1;
    for (int j = 0; j < m.ny(); ++j) k.v[3 + m.nx() + j] = m.yexp(j) % s_.d2;
    return k;
}

template <class F>
GradeKey QuotientRing<F>::addKeys(const GradeKey& a, const GradeKey& b) const {
    GradeKey k;
    if (raw_) {
        for (int v = 0; v < s_.nvars(); ++v) k.v[v] = a.v[v] + b.v[v];
        return k;
    }
    for (int v = 0; v < 3; ++v) k.v[v] = a.v[v] + b.v[v];
    for (int i = 0; i < s_.nx(); ++i) k.v[3 + i] = (a.v[3 + i] + b.v[3 + i]) % s_.d1;
    for (int j = 0; j < s_.ny(); ++j) {
        int p = 3 + s_.nx() + j;
        k.v[p] = (a.v[p] + b.v[p]) % s_.d2;
    }
    return k;
}

// reduced row echelon form of rows over width columns; leads are smallest column indices
template <class F>
static void rref(const F& f, std::vector<SparseVec<F>>& rows, std::size_t width) {
    if (rows.empty()) return;
    if (width <= 4096 && rows.size() * width <= (std::size_t(1) << 22)) {
        std::size_t R = rows.size();
        std::vector<typename F::Elem> m(R * width, f.zero());
        for (std::size_t i = 0; i < R; ++i)
            for (auto& [c, v] : rows[i]) m[i * width + c] = v;
        std::size_t r = 0;
        std::vector<std::size_t> pivcols;
        for (std::size_t c = 0; c < width && r < R; ++c) {
            std::size_t piv = R;
            for (std::size_t i = r; i < R; ++i)
                if (!f.isZero(m[i * width + c])) {
                    piv = i;
                    break;
                }
            if (piv == R) continue;
            if (piv != r)
                for (std::size_t j = 0; j < width; ++j) std::swap(m[piv * width + j], m[r * width + j]);
            auto il = f.inv(m[r * width + c]);
            for (std::size_t j = c; j < width; ++j) m[r * width + j] = f.mul(m[r * width + j], il);
            for (std::size_t i = 0; i < R; ++i) {
                if (i == r) continue;
                auto a = m[i * width + c];
                if (f.isZero(a)) continue;
                for (std::size_t j = c; j < width; ++j) m[i * width + j] = f.subMul(m[i * width + j], a, m[r * width + j]);
            }
            pivcols.push_back(c);
            ++r;
        }
        rows.assign(r, {});
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < width; ++j)
                if (!f.isZero(m[i * width + j])) rows[i].emplace_back((std::uint32_t)j, m[i * width + j]);
        return;
    }
    Echelon<F> ech(f, width);
    for (auto& v : rows) ech.insert(v);
    ech.backSubstitute();
    rows = ech.rows();
}

template <class F>
std::unique_ptr<typename QuotientRing<F>::Piece> QuotientRing<F>::build(BiDegree a) const {
    auto P = std::make_unique<Piece>();
    P->a = a;
    P->ambient = enumerateMonomials(s_, a);
    std::size_t N = P->ambient.size();
    P->ambientIndex.reserve(N * 2);
    for (std::uint32_t i = 0; i < N; ++i) P->ambientIndex.emplace(P->ambient[i], i);
    P->basisPos.assign(N, -1);
    P->reduced.assign(N, {});
    std::vector<char> isPivot(N, 0);

    BiDegree dd{s_.d1, s_.d2};
    if (!raw_ && (a - dd).nonneg()) {
        // group ambient positions by fine grade; each product m*g_t lies in one group
        std::unordered_map<GradeKey, std::vector<std::uint32_t>, GradeKeyHash> groups;
        std::vector<GradeKey> keys(N);
        for (std::uint32_t i = 0; i < N; ++i) {
            keys[i] = key(P->ambient[i]);
            groups[keys[i]].push_back(i);
        }
        std::unordered_map<GradeKey, std::vector<SparseVec<F>>, GradeKeyHash> rowsByGroup;
        std::vector<std::uint32_t> local(N);
        for (auto& [k, pos] : groups)
            for (std::uint32_t t = 0; t < pos.size(); ++t) local[pos[t]] = t;
        for (const Monomial& m : enumerateMonomials(s_, a - dd)) {
            for (const Polynomial& g : forms_) {
                if (g.isZero()) continue;
                SparseVec<F> row;
                const GradeKey* gk = nullptr;
                bool homogeneous = true;
                for (auto& [t, c] : g.terms()) {
                    std::uint32_t pos = P->ambientIndex.at(t * m);
                    if (!gk) gk = &keys[pos];
                    else if (!(keys[pos] == *gk)) homogeneous = false;
                    row.emplace_back(local[pos], f_.fromInt(c));
                }
                if (!homogeneous) throw Error("form is not homogeneous for the fine grading");
                canonicalize(f_, row);
                if (!row.empty()) rowsByGroup[*gk].push_back(std::move(row));
            }
        }
        for (auto& [k, rows] : rowsByGroup) {
            const auto& pos = groups.at(k);
            rref(f_, rows, pos.size());
            for (auto& r : rows) isPivot[pos[r[0].first]] = 1;
            // store coordinates after the basis is numbered
            for (auto& r : rows) {
                SparseVec<F> tail;
                for (std::size_t e = 1; e < r.size(); ++e) tail.emplace_back(pos[r[e].first], f_.neg(r[e].second));
                P->reduced[pos[r[0].first]] = std::move(tail);
            }
        }
    }
    for (std::uint32_t i = 0; i < N; ++i) {
        if (isPivot[i]) {
            P->pivotColumns.push_back(i);
        } else {
            P->basisPos[i] = (std::int32_t)P->basis.size();
            P->basis.push_back(P->ambient[i]);
        }
    }
    // translate ambient positions in pivot tails to basis indices
    for (auto i : P->pivotColumns) {
        for (auto& e : P->reduced[i]) e.first = (std::uint32_t)P->basisPos[e.first];
        std::sort(P->reduced[i].begin(), P->reduced[i].end(), [](auto& x, auto& y) { return x.first < y.first; });
    }
    return P;
}

template <class F>
const typename QuotientRing<F>::Piece& QuotientRing<F>::piece(BiDegree a) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(a);
    if (it != cache_.end()) return *it->second;
    auto P = build(a);
    auto& ref = *P;
    cache_.emplace(a, std::move(P));
    return ref;
}

template <class F>
std::size_t QuotientRing<F>::dim(BiDegree a) const {
    if (!a.nonneg()) return 0;
    return piece(a).basis.size();
}

template <class F>
std::size_t QuotientRing<F>::dim(BiDegree a, long long k) const {
    if (!a.nonneg()) return 0;
    std::size_t n = 0;
    for (auto& m : piece(a).basis)
        if (indexWeightedDegree(s_, m) == k) ++n;
    return n;
}

template <class F>
std::optional<std::uint32_t> QuotientRing<F>::basisIndex(const Monomial& m) const {
    const Piece& P = piece(bidegree(m));
    auto it = P.ambientIndex.find(m);
    if (it == P.ambientIndex.end() || P.basisPos[it->second] < 0) return std::nullopt;
    return (std::uint32_t)P.basisPos[it->second];
}

template <class F>
SparseVec<F> QuotientRing<F>::normalForm(const Monomial& m) const {
    if (m.nx() != s_.nx() || m.ny() != s_.ny()) throw OutOfRange("monomial does not belong to this ring");
    const Piece& P = piece(bidegree(m));
    std::uint32_t pos = P.ambientIndex.at(m);
    if (P.basisPos[pos] >= 0) return {{(std::uint32_t)P.basisPos[pos], f_.one()}};
    return P.reduced[pos];
}

template <class F>
SparseVec<F> QuotientRing<F>::normalForm(const Polynomial& g) const {
    g.bidegree();
    SparseVec<F> acc;
    for (auto& [m, c] : g.terms()) {
        auto cc = f_.fromInt(c);
        for (auto& [i, v] : normalForm(m)) acc.emplace_back(i, f_.mul(cc, v));
    }
    canonicalize(f_, acc);
    return acc;
}

template <class F>
bool QuotientRing<F>::isInIdealBruteForce(const Polynomial& g) const {
    if (raw_) return g.isZero();
    return normalForm(g).empty();
}

template <class F>
const QuotientRing<F>& QuotientRing<F>::unitRing() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!unit_) unit_ = std::make_unique<QuotientRing>(s_.withD(1, 1), f_, raw_);
    return *unit_;
}

template <class F>
bool QuotientRing<F>::isInIdealModularPath(const Polynomial& g) const {
    if (g.isZero()) return true;
    Monomial r = remd(s_, g.terms()[0].first);
    for (auto& [m, c] : g.terms())
        if (!(remd(s_, m) == r)) throw NotModularHomogeneous("terms have different modular degrees");
    if (s_.d1 == 1 && s_.d2 == 1) return isInIdealBruteForce(g);
    const QuotientRing& U = unitRing();
    Polynomial root;
    for (auto& [m, c] : g.terms()) root.add(dthRoot(s_, m / r), c);
    return U.isInIdealBruteForce(root);
}

template class QuotientRing<PrimeField>;
template class QuotientRing<RationalField>;

}  // namespace syz
