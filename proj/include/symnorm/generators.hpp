#ifndef SYMNORM_GENERATORS_HPP
#define SYMNORM_GENERATORS_HPP

#include <vector>

#include "symnorm/matrix.hpp"
#include "symnorm/rng.hpp"

namespace symnorm {

// Haar-distributed unitary: QR of a complex Gaussian matrix with the phase
// correction that makes the distribution exactly Haar.
ComplexMatrix gen_unitary(SeedStream& rng, int n);

// U diag(lambda) U* with lambda drawn in the disk of radius spectrum_scale;
// real_spectrum restricts to the real interval (Hermitian output).
ComplexMatrix gen_normal(SeedStream& rng, int n, double spectrum_scale = 1.0,
                         bool real_spectrum = false);

// non-negative spectrum; one eigenvalue is zeroed a quarter of the time so
// rank-deficient operands show up in the suites
ComplexMatrix gen_psd(SeedStream& rng, int n, double scale = 1.0);

ComplexMatrix gen_hermitian(SeedStream& rng, int n, double scale = 1.0);

// U diag(1 + x_j) V* with x_j >= 0; boundary (a singular value exactly 1)
// a quarter of the time
ComplexMatrix gen_expansive(SeedStream& rng, int n, double scale = 1.0);

// m blocks sliced from the first n columns of a Haar unitary on an (m n)-dim
// space, scaled by a factor <= 1, so sum Z_i* Z_i <= I by construction
std::vector<ComplexMatrix> gen_contractive_family(SeedStream& rng, int m, int n,
                                                  double scale = 1.0);

} // namespace symnorm

#endif
