#ifndef SYMNORM_DECOMP_HPP
#define SYMNORM_DECOMP_HPP

#include <utility>
#include <vector>

#include "symnorm/matrix.hpp"

namespace symnorm {

// Unitary diagonalization of a normal matrix.  Eigenvalues are sorted by
// descending modulus, ties by descending real then descending imaginary part,
// so decompositions are reproducible across runs.
struct SpectralDecomposition {
    ComplexMatrix unitary;
    std::vector<Complex> eigenvalues;
};

// Hermitian eigensystem, eigenvalues descending.
struct HermitianEigen {
    ComplexMatrix unitary;
    std::vector<double> eigenvalues;
};

// A = U diag(sigma) V*, sigma descending, U and V unitary (completed over the
// kernel when A is singular).
struct Svd {
    ComplexMatrix u;
    ComplexMatrix v;
    std::vector<double> sigma;
};

// non-negative, sorted descending
using SingularValueList = std::vector<double>;

HermitianEigen eig_hermitian(const ComplexMatrix& h, double tol = kPredicateTol);

Svd svd(const ComplexMatrix& a);

// requires is_normal(a, tol); the error message carries the normality defect
SpectralDecomposition spectral_decompose(const ComplexMatrix& a, double tol = kPredicateTol);

SingularValueList singular_values(const ComplexMatrix& a);

// |A| = (A* A)^(1/2); PSD, tiny negative rounding clamped to 0
ComplexMatrix matrix_abs(const ComplexMatrix& a);

// f(|A|) = V f(sigma) V* from an SVD A = U sigma V*.  Hermitian; PSD when
// f >= 0.  Throws Domain if f evaluates to a non-finite value.
ComplexMatrix apply_fn_abs(const RealFn& f, const ComplexMatrix& a);

// H = H+ - H- with both parts PSD and H+ H- = 0; requires Hermitian input
std::pair<ComplexMatrix, ComplexMatrix> pos_neg_parts(const ComplexMatrix& h,
                                                      double tol = kPredicateTol);

// [[0, A*], [A, 0]]; Hermitian, singular values of A doubled
ComplexMatrix hermitian_dilation(const ComplexMatrix& a);

// [[A, 0], [0, B]]
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

enum class PolarSide { Left, Right };

// Left:  A = |A*| W, returns (|A*|, W).  Right: A = W |A|, returns (W, |A|).
// W is unitary, completed via the SVD factors when A is singular.
std::pair<ComplexMatrix, ComplexMatrix> polar_factors(const ComplexMatrix& a, PolarSide side);

} // namespace symnorm

#endif
