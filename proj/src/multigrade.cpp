#include "syz/multigrade.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace syz {

static bool isPrime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

void Setting::validate(bool allowZeroDims) const {
    int lo = allowZeroDims ? 0 : 1;
    if (n1 < lo || n2 < lo) throw HypothesisViolation("invariant violated: n1 >= " + std::to_string(lo) + " and n2 >= " + std::to_string(lo));
    if (n1 + n2 < 1) throw HypothesisViolation("invariant violated: n1 + n2 >= 1");
    if (nvars() > kMaxVars) throw HypothesisViolation("too many variables (max " + std::to_string(kMaxVars) + ")");
    if (d1 < 1 || d2 < 1) throw HypothesisViolation("invariant violated: d1 >= 1 and d2 >= 1");
    if (ch != 0 && !isPrime(ch)) throw HypothesisViolation("invariant violated: char must be 0 or a prime");
    if (ch > 2147483647u) throw HypothesisViolation("char must be below 2^31");
}

Setting Setting::withD(int e1, int e2) const {
    Setting s = *this;
    s.d1 = e1;
    s.d2 = e2;
    return s;
}

Setting Setting::withN(int m1, int m2) const {
    Setting s = *this;
    s.n1 = m1;
    s.n2 = m2;
    return s;
}

std::string Setting::id() const {
    std::ostringstream o;
    o << "n=(" << n1 << "," << n2 << ") d=(" << d1 << "," << d2 << ") b=(" << b1 << "," << b2 << ")";
    return o.str();
}

Monomial::Monomial(int nx, int ny) : nx_(static_cast<int8_t>(nx)), ny_(static_cast<int8_t>(ny)) {
    if (nx < 0 || ny < 0 || nx + ny > kMaxVars) throw OutOfRange("monomial variable count out of range");
}

Monomial::Monomial(const std::vector<int>& xe, const std::vector<int>& ye) : Monomial((int)xe.size(), (int)ye.size()) {
    for (int i = 0; i < nx_; ++i) {
        if (xe[i] < 0) throw OutOfRange("negative exponent");
        e_[i] = xe[i];
    }
    for (int j = 0; j < ny_; ++j) {
        if (ye[j] < 0) throw OutOfRange("negative exponent");
        e_[nx_ + j] = ye[j];
    }
}

Monomial Monomial::x(const Setting& s, int i, int e) {
    Monomial m = one(s);
    m.xexp(i) = e;
    return m;
}

Monomial Monomial::y(const Setting& s, int j, int e) {
    Monomial m = one(s);
    m.yexp(j) = e;
    return m;
}

std::vector<int> Monomial::xexps() const { return std::vector<int>(e_.begin(), e_.begin() + nx_); }
std::vector<int> Monomial::yexps() const { return std::vector<int>(e_.begin() + nx_, e_.begin() + nx_ + ny_); }

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (int v = 0; v < nvars(); ++v) r.e_[v] += o.e_[v];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (int v = 0; v < nvars(); ++v)
        if (e_[v] > o.e_[v]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r = *this;
    for (int v = 0; v < nvars(); ++v) {
        r.e_[v] -= o.e_[v];
        if (r.e_[v] < 0) throw OutOfRange("monomial division is not exact");
    }
    return r;
}

bool Monomial::isOne() const {
    for (int v = 0; v < nvars(); ++v)
        if (e_[v]) return false;
    return true;
}

std::size_t Monomial::hash() const {
    std::uint64_t h = 1469598103934665603ULL ^ (std::uint64_t)nx_;
    for (int v = 0; v < nvars(); ++v) {
        h ^= (std::uint64_t)(std::uint32_t)e_[v];
        h *= 1099511628211ULL;
    }
    return (std::size_t)h;
}

bool Monomial::operator==(const Monomial& o) const {
    if (nx_ != o.nx_ || ny_ != o.ny_) return false;
    for (int v = 0; v < nvars(); ++v)
        if (e_[v] != o.e_[v]) return false;
    return true;
}

bool grevlexGreater(const Monomial& a, const Monomial& b) {
    long long ta = 0, tb = 0;
    for (int v = 0; v < a.nvars(); ++v) {
        ta += a.raw(v);
        tb += b.raw(v);
    }
    if (ta != tb) return ta > tb;
    for (int v = a.nvars() - 1; v >= 0; --v)
        if (a.raw(v) != b.raw(v)) return a.raw(v) < b.raw(v);
    return false;
}

BiDegree bidegree(const Monomial& m) {
    BiDegree a;
    for (int i = 0; i < m.nx(); ++i) a.a1 += m.xexp(i);
    for (int j = 0; j < m.ny(); ++j) a.a2 += m.yexp(j);
    return a;
}

long long indexWeightedDegree(const Setting& s, const Monomial& m) {
    long long k = 0;
    for (int i = 0; i < m.nx(); ++i) k += (long long)s.d2 * i * m.xexp(i);
    for (int j = 0; j < m.ny(); ++j) k += (long long)s.d1 * j * m.yexp(j);
    return k;
}

ModularDegree modularDegree(const Setting& s, const Monomial& m) {
    ModularDegree r;
    for (int i = 0; i < m.nx(); ++i) r.xres.push_back(m.xexp(i) % s.d1);
    for (int j = 0; j < m.ny(); ++j) r.yres.push_back(m.yexp(j) % s.d2);
    return r;
}

Monomial remd(const Setting& s, const Monomial& m) {
    Monomial r = m;
    for (int i = 0; i < m.nx(); ++i) r.xexp(i) %= s.d1;
    for (int j = 0; j < m.ny(); ++j) r.yexp(j) %= s.d2;
    return r;
}

Monomial dthRoot(const Setting& s, const Monomial& m) {
    Monomial r = m;
    for (int i = 0; i < m.nx(); ++i) {
        if (m.xexp(i) % s.d1) throw NotInSubring("exponent of x" + std::to_string(i) + " not divisible by d1");
        r.xexp(i) /= s.d1;
    }
    for (int j = 0; j < m.ny(); ++j) {
        if (m.yexp(j) % s.d2) throw NotInSubring("exponent of y" + std::to_string(j) + " not divisible by d2");
        r.yexp(j) /= s.d2;
    }
    return r;
}

Monomial dthPower(const Setting& s, const Monomial& m) {
    Monomial r = m;
    for (int i = 0; i < m.nx(); ++i) r.xexp(i) *= s.d1;
    for (int j = 0; j < m.ny(); ++j) r.yexp(j) *= s.d2;
    return r;
}

// exponent vectors of length len summing to total, lexicographically descending
static void compositions(int len, int total, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(len, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == len - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[pos] = e;
            rec(pos + 1, left - e);
        }
    };
    if (len == 0) {
        if (total == 0) out.push_back({});
        return;
    }
    rec(0, total);
}

std::vector<Monomial> enumerateMonomials(const Setting& s, BiDegree a) {
    std::vector<Monomial> out;
    if (!a.nonneg()) return out;
    std::vector<std::vector<int>> xs, ys;
    compositions(s.nx(), a.a1, xs);
    compositions(s.ny(), a.a2, ys);
    out.reserve(xs.size() * ys.size());
    for (auto& xe : xs)
        for (auto& ye : ys) out.emplace_back(xe, ye);
    std::sort(out.begin(), out.end(), GrevlexDesc());
    return out;
}

std::vector<Monomial> enumerateMonomials(const Setting& s, BiDegree a, long long k) {
    std::vector<Monomial> all = enumerateMonomials(s, a), out;
    for (auto& m : all)
        if (indexWeightedDegree(s, m) == k) out.push_back(m);
    return out;
}

long long checkedMul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OutOfRange("integer overflow in multiplication");
    return r;
}

long long checkedAdd(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OutOfRange("integer overflow in addition");
    return r;
}

long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (__int128)LLONG_MAX) throw OutOfRange("binomial overflow");
    }
    return (long long)r;
}

long long rND(int n1, int n2, int d1, int d2) {
    return checkedMul(binomial(d1 + n1, n1), binomial(d2 + n2, n2)) - 1;
}

long long rND(const Setting& s) { return rND(s.n1, s.n2, s.d1, s.d2); }

std::string toText(const Monomial& m) {
    std::string out;
    auto emit = [&](char c, int idx, int e) {
        if (!e) return;
        if (!out.empty()) out += '*';
        out += c;
        out += std::to_string(idx);
        if (e != 1) out += "^" + std::to_string(e);
    };
    for (int i = 0; i < m.nx(); ++i) emit('x', i, m.xexp(i));
    for (int j = 0; j < m.ny(); ++j) emit('y', j, m.yexp(j));
    return out.empty() ? "1" : out;
}

Monomial parseMonomial(const Setting& s, const std::string& text) {
    Monomial m = Monomial::one(s);
    if (text == "1") return m;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y')) throw OutOfRange("bad monomial factor '" + tok + "'");
        auto caret = tok.find('^');
        int idx, e = 1;
        try {
            std::size_t used = 0;
            std::string is = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
            idx = std::stoi(is, &used);
            if (used != is.size()) throw OutOfRange("bad index");
            if (caret != std::string::npos) {
                std::string es = tok.substr(caret + 1);
                e = std::stoi(es, &used);
                if (used != es.size() || e < 0) throw OutOfRange("bad exponent");
            }
        } catch (const std::logic_error&) {
            throw OutOfRange("bad monomial factor '" + tok + "'");
        }
        if (tok[0] == 'x') {
            if (idx < 0 || idx >= s.nx()) throw OutOfRange("variable x" + std::to_string(idx) + " not in ring");
            m.xexp(idx) += e;
        } else {
            if (idx < 0 || idx >= s.ny()) throw OutOfRange("variable y" + std::to_string(idx) + " not in ring");
            m.yexp(idx) += e;
        }
    }
    return m;
}

}  // namespace syz
