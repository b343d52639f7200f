#include "syz/linalg.hpp"

namespace syz {

template class Echelon<PrimeField>;
template class Echelon<RationalField>;
template std::size_t matrixRank(const PrimeField&, const SparseMatrix<PrimeField>&, RankStats*);
template std::size_t matrixRank(const RationalField&, const SparseMatrix<RationalField>&, RankStats*);

}  // namespace syz
