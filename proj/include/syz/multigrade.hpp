#ifndef SYZ_MULTIGRADE_HPP
#define SYZ_MULTIGRADE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace syz {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// bad configuration or a failed hypothesis of a construction
struct HypothesisViolation : Error {
    using Error::Error;
};
struct SizeLimitExceeded : Error {
    using Error::Error;
};
struct NotInSubring : Error {
    using Error::Error;
};
struct OutOfRange : Error {
    using Error::Error;
};
struct RangeEmpty : Error {
    using Error::Error;
};
struct NotHomogeneous : Error {
    using Error::Error;
};

constexpr int kMaxVars = 16;

// n = dimensions of the two factors, d = embedding bidegree, b = twist.
// ch is the field characteristic (0 = rationals).
// corruptG >= 0 perturbs that generator; it only exists for negative controls.
struct Setting {
    int n1 = 1, n2 = 1;
    int d1 = 1, d2 = 1;
    int b1 = 0, b2 = 0;
    std::uint32_t ch = 32003;
    int corruptG = -1;

    int nx() const { return n1 + 1; }
    int ny() const { return n2 + 1; }
    int nvars() const { return n1 + n2 + 2; }
    int absN() const { return n1 + n2; }

    // throws HypothesisViolation naming the broken invariant
    void validate(bool allowZeroDims = true) const;
    Setting withD(int e1, int e2) const;
    Setting withN(int m1, int m2) const;
    std::string id() const;
    bool operator==(const Setting&) const = default;
};

struct BiDegree {
    int a1 = 0, a2 = 0;
    BiDegree operator+(BiDegree o) const { return {a1 + o.a1, a2 + o.a2}; }
    BiDegree operator-(BiDegree o) const { return {a1 - o.a1, a2 - o.a2}; }
    bool nonneg() const { return a1 >= 0 && a2 >= 0; }
    auto operator<=>(const BiDegree&) const = default;
};

inline BiDegree scaled(int k, BiDegree d, BiDegree b = {}) { return {k * d.a1 + b.a1, k * d.a2 + b.a2}; }

struct ModularDegree {
    std::vector<int> xres, yres;
    bool operator==(const ModularDegree&) const = default;
};

// x-exponents occupy e[0..nx), y-exponents e[nx..nx+ny)
class Monomial {
public:
    Monomial() = default;
    Monomial(int nx, int ny);
    Monomial(const std::vector<int>& xexp, const std::vector<int>& yexp);
    static Monomial one(const Setting& s) { return Monomial(s.nx(), s.ny()); }
    static Monomial x(const Setting& s, int i, int e = 1);
    static Monomial y(const Setting& s, int j, int e = 1);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nvars() const { return nx_ + ny_; }
    int xexp(int i) const { return e_[i]; }
    int yexp(int j) const { return e_[nx_ + j]; }
    int& xexp(int i) { return e_[i]; }
    int& yexp(int j) { return e_[nx_ + j]; }
    int raw(int v) const { return e_[v]; }
    int& raw(int v) { return e_[v]; }
    std::vector<int> xexps() const;
    std::vector<int> yexps() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // requires divides
    Monomial operator/(const Monomial& o) const;
    bool isOne() const;
    std::size_t hash() const;

    bool operator==(const Monomial& o) const;
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::array<int32_t, kMaxVars> e_{};
    int8_t nx_ = 0, ny_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// graded reverse lexicographic, x-block before y-block; true if a > b
bool grevlexGreater(const Monomial& a, const Monomial& b);
struct GrevlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlexGreater(a, b); }
};

BiDegree bidegree(const Monomial& m);
long long indexWeightedDegree(const Setting& s, const Monomial& m);
ModularDegree modularDegree(const Setting& s, const Monomial& m);
Monomial remd(const Setting& s, const Monomial& m);
Monomial dthRoot(const Setting& s, const Monomial& m);
Monomial dthPower(const Setting& s, const Monomial& m);

// all monomials of bidegree a, descending grevlex; optional index filter
std::vector<Monomial> enumerateMonomials(const Setting& s, BiDegree a);
std::vector<Monomial> enumerateMonomials(const Setting& s, BiDegree a, long long k);

// overflow-checked binomial, 0 outside 0 <= k <= n
long long binomial(long long n, long long k);
long long checkedMul(long long a, long long b);
long long checkedAdd(long long a, long long b);
long long rND(const Setting& s);
long long rND(int n1, int n2, int d1, int d2);

std::string toText(const Monomial& m);
Monomial parseMonomial(const Setting& s, const std::string& text);

}  // namespace syz

template <>
struct std::hash<syz::Monomial> {
    std::size_t operator()(const syz::Monomial& m) const { return m.hash(); }
};

#endif
