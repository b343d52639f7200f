#ifndef SYZ_FIELD_HPP
#define SYZ_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace syz {

// Z/p with p < 2^31
struct PrimeField {
    using Elem = std::uint32_t;
    std::uint32_t p;

    explicit PrimeField(std::uint32_t prime = 32003) : p(prime) {}
    std::uint32_t characteristic() const { return p; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem fromInt(long long v) const {
        long long r = v % (long long)p;
        return (Elem)(r < 0 ? r + p : r);
    }
    bool isZero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const {
        Elem r = a + b;
        return r >= p ? r - p : r;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem neg(Elem a) const { return a ? p - a : 0; }
    Elem mul(Elem a, Elem b) const { return (Elem)((std::uint64_t)a * b % p); }
    Elem inv(Elem a) const {
        // a^(p-2)
        std::uint64_t r = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return (Elem)r;
    }
    // a - c*b
    Elem subMul(Elem a, Elem c, Elem b) const { return sub(a, mul(c, b)); }
    std::string str(Elem a) const {
        // symmetric representative
        long long v = a > p / 2 ? (long long)a - p : a;
        return std::to_string(v);
    }
};

struct RationalField {
    using Elem = mpq_class;

    std::uint32_t characteristic() const { return 0; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem fromInt(long long v) const { return mpq_class((long)v); }
    bool isZero(const Elem& a) const { return sgn(a) == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const { return 1 / a; }
    Elem subMul(const Elem& a, const Elem& c, const Elem& b) const { return a - c * b; }
    std::string str(const Elem& a) const { return a.get_str(); }
};

}  // namespace syz

#endif
