#ifndef SYZ_KOSZUL_HPP
#define SYZ_KOSZUL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "syz/ideal.hpp"

namespace syz {

enum class Mode { Artinian, Raw };
std::string toString(Mode m);

// Sorted position tuples of p elements out of n, in lexicographic order.
// Subsets are carried as 64-bit masks, so n <= 64.
class WedgeBasis {
public:
    WedgeBasis(std::size_t n, int p);
    std::size_t n() const { return n_; }
    int p() const { return p_; }
    std::uint64_t size() const { return size_; }
    std::uint64_t rank(std::uint64_t mask) const;
    std::uint64_t unrank(std::uint64_t idx) const;
    static std::vector<int> positions(std::uint64_t mask);

private:
    std::size_t n_;
    int p_;
    std::uint64_t size_;
};

// CM inequalities d1*b2 - d2*b1 < d2*(n1+1) and d2*b1 - d1*b2 < d1*(n2+1)
bool isCohenMacaulay(const Setting& s);
std::string cohenMacaulayFailure(const Setting& s);
// no intermediate cohomology of O(b + k d) for any integer k; the inequalities above imply it
bool noIntermediateCohomology(const Setting& s);
// the two pairs of inequalities under which K_{p,q} = 0 for q > |n|
bool regularityVanishingHolds(const Setting& s);
// H^i(O(b + (|n|-i) d)) = 0 for all i > 0, checked with the Kunneth formula
bool regularityByKunneth(const Setting& s);

// dims of H^i(P^n1 x P^n2, O(a1,a2)), index i = 0..n1+n2
std::vector<long long> kunnethCohomology(int n1, int n2, long long a1, long long a2);

template <class F>
struct KoszulStrand {
    int p = 0, q = 0;
    SparseMatrix<F> din;   // wedge^{p+1} V (x) W_{q-1} -> wedge^p V (x) W_q
    SparseMatrix<F> dout;  // wedge^p V (x) W_q -> wedge^{p-1} V (x) W_{q+1}
    bool complexChecked = false;
};

struct StrandInfo {
    long long dim = 0;
    std::size_t components = 0;
    std::size_t largestComponent = 0;
    std::size_t middle = 0;
};

// A coordinate of wedge^p V (x) W_q: factor mask plus basis index of W_q.
template <class F>
struct WedgeTerm {
    std::uint64_t mask;
    std::uint32_t w;
    typename F::Elem c;
};

template <class F>
class KoszulEngine {
public:
    KoszulEngine(const Setting& s, const F& f, Mode mode, std::size_t sizeLimit = 200000);

    const Setting& setting() const { return s_; }
    Mode mode() const { return mode_; }
    const QuotientRing<F>& ring() const { return ring_; }
    std::size_t sizeLimit() const { return limit_; }

    // basis of S̄_d (or S_d in raw mode); the wedge generators
    const std::vector<Monomial>& generators() const { return gens_; }
    // S̄_{qd+b}
    const std::vector<Monomial>& coefficients(int q) const;
    BiDegree coefficientDegree(int q) const;
    // binom(N,p) * dim W_q, saturating at 2^62
    std::uint64_t termDim(int p, int q) const;

    // whole strand with global indices rank(mask) * dim W_q + w, for small strands only
    KoszulStrand<F> buildStrand(int p, int q, bool checkComplex = true) const;
    // K_{p,q} via components of the fine grading
    long long kpqDim(int p, int q, StrandInfo* info = nullptr) const;

    // image of a single tensor m_S (x) w under the outgoing differential
    std::vector<WedgeTerm<F>> applyDout(int p, int q, const std::vector<WedgeTerm<F>>& z) const;
    // whether z (a combination in wedge^p V (x) W_q) lies in the image of din
    bool inImageOfDin(int p, int q, const std::vector<WedgeTerm<F>>& z) const;

    // position of a monomial among the generators
    std::optional<int> generatorIndex(const Monomial& m) const;

private:
    struct Tables {
        BiDegree a;
        std::vector<Monomial> basis;
        std::vector<GradeKey> keys;
        // up[i][w] = coordinates of gen_i * basis_w in the next coefficient space
        std::vector<std::vector<SparseVec<F>>> up;
        bool upReady = false;
    };
    const Tables& tables(int q) const;
    GradeKey subsetKey(std::uint64_t mask) const;
    void guard(int p, int q) const;

    Setting s_;
    F f_;
    Mode mode_;
    std::size_t limit_;
    QuotientRing<F> ring_;
    std::vector<Monomial> gens_;
    std::vector<GradeKey> genKeys_;
    mutable std::mutex mu_;
    mutable std::map<int, std::unique_ptr<Tables>> tables_;
};

extern template class KoszulEngine<PrimeField>;
extern template class KoszulEngine<RationalField>;

struct BettiEntry {
    int p, q;
    long long dim;
};

struct BettiTable {
    Setting setting;
    Mode mode = Mode::Artinian;
    long long r = 0;
    std::vector<BettiEntry> entries;  // sorted by (q, p)
    std::optional<long long> at(int p, int q) const;
};

struct BettiRequest {
    int pLo = 0, pHi = -1;  // pHi < 0 means r
    int qLo = 0, qHi = -1;  // qHi < 0 means |n|+1
};

// number of workers: SYZ_THREADS if set, else hardware concurrency
unsigned workerCount();

template <class F>
BettiTable bettiTable(const KoszulEngine<F>& eng, const BettiRequest& req = {});

// #{p : K_{p,q} != 0} / r over the table row (entries outside the table count as zero)
mpq_class rhoQ(const BettiTable& t, int q);

}  // namespace syz

#endif
