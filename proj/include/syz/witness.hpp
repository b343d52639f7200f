#ifndef SYZ_WITNESS_HPP
#define SYZ_WITNESS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syz/koszul.hpp"

namespace syz {

// f~_{q,k}: the monomial spanning S/R(n,1) in bidegree (k,q-k), index degree k(q-k).
// Built with f~_{q,k} = x_{q-k} y_{k-1} f~_{q-2,k-1} from f~_{q,0} = y0^q, f~_{q,q} = x0^q.
Monomial buildTildeF(const Setting& s, int q, int k);

// which branch of the f_{q,k,b} construction applies:
// 1 when q-k+b1 >= 0 and k+b2 >= 0, 2 when q-k+b1 < 0, 3 when k+b2 < 0.
// Throws HypothesisViolation naming the failed inequality.
int fqkbCase(const Setting& s, int q, int k);
Monomial buildFqkb(const Setting& s, int q, int k);
// the f~ that (f/remd f)^(1/d) should equal for this branch
Monomial expectedFloor(const Setting& s, int q, int k);
std::vector<Monomial> linearAnnihilatorVariables(const Setting& s, int q, int k);

// degree-d quotient basis monomials with index degree <= that of f
template <class F>
std::vector<Monomial> buildLSet(const QuotientRing<F>& ring, const Monomial& f);
// degree-d quotient basis monomials m with m f = 0 in the quotient
template <class F>
std::vector<Monomial> buildZSet(const QuotientRing<F>& ring, const Monomial& f);
// generators u such that u*g has a nonzero coordinate on the support of f for some
// basis monomial g one degree lower. A wedge containing all of them, tensored with f,
// has rows of din that vanish identically, so it cannot be a coboundary.
template <class F>
std::vector<Monomial> divisorSet(const QuotientRing<F>& ring, const Monomial& f);

struct WitnessFlags {
    bool nonzero = false;
    bool cocycle = false;
    bool coboundary = true;
    std::string method;  // "exact" or "certificate"
    bool valid() const { return nonzero && cocycle && !coboundary; }
};

struct WitnessCocycle {
    int q = 0, k = 0, p = 0;
    std::vector<Monomial> factors;  // sorted by generator index
    Monomial payload;
    std::optional<WitnessFlags> flags;
};

// bounds of p for which constructWitness succeeds for (q,k)
// factors are U(f), then the rest of L(f), then further members of Z(f)
struct WitnessSpan {
    std::size_t base = 0;  // #U(f)
    std::size_t top = 0;   // #Z(f)
    bool lInsideZ = false;
};

template <class F>
WitnessSpan witnessSpan(const KoszulEngine<F>& eng, int q, int k);
template <class F>
WitnessCocycle constructWitness(const KoszulEngine<F>& eng, int q, int k, int p);
// arbitrary factors and payload; the factors are sorted into generator order with the sign absorbed
template <class F>
WitnessFlags verifyWitness(const KoszulEngine<F>& eng, WitnessCocycle& w);
template <class F>
std::vector<WedgeTerm<F>> witnessVector(const KoszulEngine<F>& eng, const WitnessCocycle& w);

struct KRange {
    int k = 0;
    long long lo = 0, hi = 0;
};

struct RangeReport {
    Setting setting;
    int q = 0;
    bool applies = false;
    std::string reason;  // failed hypothesis when !applies
    long long lo = 0, hi = 0;
    std::vector<KRange> perK;
    mpq_class rhoLower;
};

// empty string when the range theorem applies at (s, q)
std::string rangeHypothesisFailure(const Setting& s, int q);
// min over admissible i+j=q of binom(d1+i,i)binom(d2+j,j) - (q+2), and
// r - min binom(d1+n1-i,n1-i)binom(d2+n2-j,n2-j) - (|n|+1)
std::pair<long long, long long> theoremARange(const Setting& s, int q);
// the two terms above for the single pair (i,j) = (q-k,k)
std::pair<long long, long long> perKRange(const Setting& s, int q, int k);
// 1 - sum over admissible (i,j) of (binom(d1+n1-i,n1-i)binom(d2+n2-j,n2-j) + binom(d1+i,i)binom(d2+j,j))/r - (|n|-q-1)/r
mpq_class rhoLowerBound(const Setting& s, int q);
RangeReport rangeReport(const Setting& s, int q);

}  // namespace syz

#endif
