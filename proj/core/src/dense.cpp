#include "modsuper/dense.hpp"

namespace modsuper {

template class DenseMatrix<PrimeField>;
template class DenseMatrix<RationalField>;
template class Echelon<PrimeField>;
template class Echelon<RationalField>;
template class RowSpace<PrimeField>;
template class RowSpace<RationalField>;

}  // namespace modsuper
