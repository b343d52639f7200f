#ifndef SYZ_IDEAL_HPP
#define SYZ_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "syz/field.hpp"
#include "syz/linalg.hpp"
#include "syz/multigrade.hpp"

namespace syz {

struct NotModularHomogeneous : Error {
    using Error::Error;
};

// integer coefficients; terms sorted by descending grevlex, no zeros
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const Monomial& m, long long c = 1);

    const std::vector<std::pair<Monomial, long long>>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    Polynomial& add(const Monomial& m, long long c);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator*(const Monomial& m) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    // bidegree of the terms; throws NotHomogeneous if they disagree
    BiDegree bidegree() const;

private:
    std::vector<std::pair<Monomial, long long>> terms_;
};

std::string toText(const Polynomial& f);

// g_0..g_{|n|}. A nonnegative corruptG drops the last term of that form
// (a single-term form is replaced by x0^d1*y0^d2); test hook only.
std::vector<Polynomial> buildRegularSequenceForms(const Setting& s);

// sets the last i x-variables and last j y-variables to zero
struct Restriction {
    Setting setting;
    std::vector<Polynomial> forms;  // nonzero images of the g_t, re-embedded
};
Restriction restrictToSubproduct(const Setting& s, int i, int j);
// image of a monomial under the restriction; nullopt if it vanishes
std::optional<Monomial> restrictMonomial(const Setting& s, const Monomial& m, int i, int j);
// inclusion of the smaller ring's monomials into the bigger ring
Monomial extendMonomial(const Setting& big, const Monomial& m);

// Key of the fine grading kept by R: bidegree, index-weighted degree and modular degree.
// In raw mode the key is the full exponent vector.
struct GradeKey {
    std::array<int32_t, kMaxVars + 3> v{};
    bool operator==(const GradeKey& o) const { return v == o.v; }
};
struct GradeKeyHash {
    std::size_t operator()(const GradeKey& k) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto x : k.v) {
            h ^= (std::uint32_t)x;
            h *= 1099511628211ULL;
        }
        return (std::size_t)h;
    }
};

template <class F>
class QuotientRing {
public:
    using Elem = typename F::Elem;

    // a chosen monomial basis of the quotient in bidegree a, plus reduction data
    struct Piece {
        BiDegree a;
        std::vector<Monomial> ambient;
        std::vector<std::uint32_t> pivotColumns;
        std::vector<Monomial> basis;
        std::vector<std::int32_t> basisPos;  // ambient position -> basis index, -1 for pivots
        std::vector<SparseVec<F>> reduced;   // ambient position -> coordinates (pivots only)
        std::unordered_map<Monomial, std::uint32_t, MonomialHash> ambientIndex;
        std::size_t idealDim() const { return pivotColumns.size(); }
    };

    QuotientRing(const Setting& s, const F& f, bool raw = false);

    const Setting& setting() const { return s_; }
    const F& field() const { return f_; }
    bool raw() const { return raw_; }
    const std::vector<Polynomial>& forms() const { return forms_; }

    const Piece& piece(BiDegree a) const;
    std::size_t dim(BiDegree a) const;
    std::size_t dim(BiDegree a, long long k) const;
    std::optional<std::uint32_t> basisIndex(const Monomial& m) const;

    // coordinates in piece(bidegree(m)).basis
    SparseVec<F> normalForm(const Monomial& m) const;
    SparseVec<F> normalForm(const Polynomial& f) const;
    bool isZero(const Monomial& m) const { return normalForm(m).empty(); }

    bool isInIdealBruteForce(const Polynomial& f) const;
    bool isInIdealBruteForce(const Monomial& m) const { return isZero(m); }
    bool isInIdealModularPath(const Polynomial& f) const;
    bool isInIdealModularPath(const Monomial& m) const { return isInIdealModularPath(Polynomial(m)); }

    GradeKey key(const Monomial& m) const;
    GradeKey addKeys(const GradeKey& a, const GradeKey& b) const;
    bool fineGraded() const { return fine_; }

private:
    std::unique_ptr<Piece> build(BiDegree a) const;
    const QuotientRing& unitRing() const;

    Setting s_;
    F f_;
    bool raw_;
    bool fine_;
    std::vector<Polynomial> forms_;
    mutable std::mutex mu_;
    mutable std::map<BiDegree, std::unique_ptr<Piece>> cache_;
    mutable std::unique_ptr<QuotientRing> unit_;
};

extern template class QuotientRing<PrimeField>;
extern template class QuotientRing<RationalField>;

}  // namespace syz

#endif
