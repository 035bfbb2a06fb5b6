#ifndef SYMNORM_NORMS_HPP
#define SYMNORM_NORMS_HPP

#include <string>
#include <vector>

#include "symnorm/decomp.hpp"
#include "symnorm/matrix.hpp"

namespace symnorm {

// Symmetric (unitarily invariant) norm selector.  Trace == KyFan(n) ==
// Schatten(1); Operator == KyFan(1).
struct SymmetricNorm {
    enum class Kind { KyFan, Schatten, Trace, Operator };
    Kind kind = Kind::Trace;
    int k = 1;      // KyFan only
    double p = 1.0; // Schatten only

    static SymmetricNorm ky_fan(int k) { return {Kind::KyFan, k, 1.0}; }
    static SymmetricNorm schatten(double p) { return {Kind::Schatten, 1, p}; }
    static SymmetricNorm trace() { return {Kind::Trace, 1, 1.0}; }
    static SymmetricNorm op() { return {Kind::Operator, 1, 1.0}; }

    // "kyfan:k" | "schatten:p" | "trace" | "operator"
    std::string spec() const;
    static SymmetricNorm parse(const std::string& text);
};

// sum of the k largest singular values, 1 <= k <= dim
double ky_fan(const ComplexMatrix& a, int k);
double ky_fan(const SingularValueList& sv, int k); // k may exceed the list (missing values are 0)

// (sum_j sigma_j^p)^(1/p), p >= 1
double schatten(const ComplexMatrix& a, double p);

double norm_eval(const SymmetricNorm& norm, const ComplexMatrix& a);

// Ky Fan Principle: margins rhs_k - lhs_k over all k decide every symmetric norm.
struct MajorizationVerdict {
    bool holds = false;
    std::vector<double> per_k_margins; // ky_fan(B, k) - ky_fan(A, k), k = 1..n
    int worst_k = 1;                   // most negative margin (relative), ties to smallest k
};

// A weakly majorized by B: every Ky Fan norm of A at most that of B within
// tol * max(1, ky_fan(B, k))
MajorizationVerdict weakly_majorized(const ComplexMatrix& a, const ComplexMatrix& b,
                                     double tol = kVerdictTol);

} // namespace symnorm

#endif
