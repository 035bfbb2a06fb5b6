#ifndef SYMNORM_MATRIX_HPP
#define SYMNORM_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "symnorm/errors.hpp"

namespace symnorm {

using Complex = std::complex<double>;
using RealFn = std::function<double(double)>;

// validated entry points (JSON, C API, trial configs) reject larger operands
inline constexpr int kMaxDim = 64;

// default tolerances; every operation that takes a tolerance can override
inline constexpr double kPredicateTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kReconTol = 1e-9;
inline constexpr double kVerdictTol = 1e-9;

// Dense square complex matrix, the universal operand.  Immutable in spirit:
// operations return fresh values, nothing is cached.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim) : m_(Eigen::MatrixXcd::Zero(dim, dim)) { require_square(); }
    explicit ComplexMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) { require_square(); }

    static ComplexMatrix identity(int dim) { return ComplexMatrix(Eigen::MatrixXcd::Identity(dim, dim)); }
    static ComplexMatrix diagonal(std::span<const double> d);
    static ComplexMatrix diagonal(std::span<const Complex> d);
    static ComplexMatrix diagonal(std::initializer_list<double> d) {
        return diagonal(std::span<const double>(d.begin(), d.size()));
    }

    // 2x2 / 3x3 row-major real literals, handy for fixtures
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXcd& raw() const { return m_; }

    Complex operator()(int i, int j) const { return m_(i, j); }
    Complex& operator()(int i, int j) { return m_(i, j); }

    ComplexMatrix adjoint() const { return ComplexMatrix(m_.adjoint().eval()); }
    ComplexMatrix operator+(const ComplexMatrix& o) const;
    ComplexMatrix operator-(const ComplexMatrix& o) const;
    ComplexMatrix operator*(const ComplexMatrix& o) const;
    ComplexMatrix operator*(Complex s) const { return ComplexMatrix((m_ * s).eval()); }
    ComplexMatrix operator*(double s) const { return ComplexMatrix((m_ * s).eval()); }

    double frobenius() const { return m_.norm(); }
    Complex trace() const { return m_.trace(); }
    bool all_finite() const { return m_.allFinite(); }

    // { "dim": n, "re": [[...]], "im": [[...]] }, row-major doubles
    std::string to_json() const;
    static ComplexMatrix from_json(const std::string& text);

    bool same_dim(const ComplexMatrix& o) const { return dim() == o.dim(); }

private:
    void require_square() const {
        if (m_.rows() != m_.cols() || m_.rows() < 1)
            fail(ErrorCode::InvalidArgument, "matrix must be square and non-empty");
    }

    Eigen::MatrixXcd m_;
};

inline ComplexMatrix operator*(double s, const ComplexMatrix& m) { return m * s; }

// throws InvalidArgument unless every entry is finite
void require_finite(const ComplexMatrix& a, const char* who);

// ---- structural predicates ----------------------------------------------
// Hermitian:  |A - A*|_F <= tol * max(1, |A|_F)
bool is_hermitian(const ComplexMatrix& a, double tol = kPredicateTol);
// normal:  |A A* - A* A|_F <= tol * max(1, |A|_F^2)
bool is_normal(const ComplexMatrix& a, double tol = kPredicateTol);
// Hermitian with min eigenvalue >= -tol * max(1, |A|_2)
bool is_psd(const ComplexMatrix& a, double tol = kPredicateTol);
// min eigenvalue of Z*Z - I >= -tol
bool is_expansive(const ComplexMatrix& z, double tol = kPredicateTol);
// max eigenvalue of sum Z_i* Z_i <= 1 + tol
bool is_contractive_family(std::span<const ComplexMatrix> zs, double tol = kPredicateTol);

double normality_defect(const ComplexMatrix& a);   // |A A* - A* A|_F
double hermitian_defect(const ComplexMatrix& a);   // |A - A*|_F

} // namespace symnorm

#endif
