#include "symnorm/matrix.hpp"

#include <json.hpp>

namespace symnorm {

using ordered_json = nlohmann::ordered_json;

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return ComplexMatrix(std::move(m));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> d) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return ComplexMatrix(std::move(m));
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const int n = static_cast<int>(rows.size());
    Eigen::MatrixXcd m(n, n);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            fail(ErrorCode::InvalidArgument, "row length does not match matrix dimension");
        int j = 0;
        for (const auto& v : row) m(i, j++) = v;
        ++i;
    }
    return ComplexMatrix(std::move(m));
}

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* who) {
    if (!a.same_dim(b))
        fail(ErrorCode::InvalidArgument,
             std::string(who) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                 std::to_string(b.dim()) + ")");
}

} // namespace

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
    require_same_dim(*this, o, "operator+");
    return ComplexMatrix((m_ + o.m_).eval());
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
    require_same_dim(*this, o, "operator-");
    return ComplexMatrix((m_ - o.m_).eval());
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
    require_same_dim(*this, o, "operator*");
    return ComplexMatrix((m_ * o.m_).eval());
}

std::string ComplexMatrix::to_json() const {
    const int n = dim();
    ordered_json j;
    j["dim"] = n;
    ordered_json re = ordered_json::array();
    ordered_json im = ordered_json::array();
    for (int i = 0; i < n; ++i) {
        ordered_json re_row = ordered_json::array();
        ordered_json im_row = ordered_json::array();
        for (int k = 0; k < n; ++k) {
            re_row.push_back(m_(i, k).real());
            im_row.push_back(m_(i, k).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j.dump();
}

ComplexMatrix ComplexMatrix::from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::Parse, "matrix literal: invalid JSON");
    if (!j.is_object() || !j.contains("dim") || !j.contains("re"))
        fail(ErrorCode::Parse, "matrix literal: expected { \"dim\", \"re\", \"im\" }");
    if (!j["dim"].is_number_integer()) fail(ErrorCode::Parse, "matrix literal: dim must be an integer");
    const int n = j["dim"].get<int>();
    if (n < 1 || n > kMaxDim)
        fail(ErrorCode::InvalidArgument,
             "matrix literal: dim must be in 1.." + std::to_string(kMaxDim));

    auto read_plane = [&](const char* key, bool required) -> std::vector<std::vector<double>> {
        if (!j.contains(key)) {
            if (required) fail(ErrorCode::Parse, std::string("matrix literal: missing \"") + key + "\"");
            return std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0));
        }
        const auto& plane = j[key];
        if (!plane.is_array() || static_cast<int>(plane.size()) != n)
            fail(ErrorCode::Parse, std::string("matrix literal: \"") + key + "\" must be " +
                                       std::to_string(n) + " rows");
        std::vector<std::vector<double>> out;
        out.reserve(n);
        for (const auto& row : plane) {
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                fail(ErrorCode::Parse, std::string("matrix literal: \"") + key + "\" rows must have " +
                                           std::to_string(n) + " entries");
            std::vector<double> r;
            r.reserve(n);
            for (const auto& v : row) {
                if (!v.is_number()) fail(ErrorCode::Parse, "matrix literal: entries must be numbers");
                r.push_back(v.get<double>());
            }
            out.push_back(std::move(r));
        }
        return out;
    };

    const auto re = read_plane("re", true);
    const auto im = read_plane("im", false);
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m(i, k) = Complex(re[i][k], im[i][k]);
    ComplexMatrix out(std::move(m));
    require_finite(out, "matrix literal");
    return out;
}

void require_finite(const ComplexMatrix& a, const char* who) {
    if (!a.all_finite())
        fail(ErrorCode::InvalidArgument, std::string(who) + ": matrix has non-finite entries");
}

double hermitian_defect(const ComplexMatrix& a) { return (a.raw() - a.raw().adjoint()).norm(); }

double normality_defect(const ComplexMatrix& a) {
    return (a.raw() * a.raw().adjoint() - a.raw().adjoint() * a.raw()).norm();
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    require_finite(a, "is_hermitian");
    if (tol < 0) fail(ErrorCode::InvalidArgument, "is_hermitian: tol must be >= 0");
    return hermitian_defect(a) <= tol * std::max(1.0, a.frobenius());
}

bool is_normal(const ComplexMatrix& a, double tol) {
    require_finite(a, "is_normal");
    if (tol < 0) fail(ErrorCode::InvalidArgument, "is_normal: tol must be >= 0");
    const double f = a.frobenius();
    return normality_defect(a) <= tol * std::max(1.0, f * f);
}

} // namespace symnorm
