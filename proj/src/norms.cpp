#include "symnorm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace symnorm {

std::string SymmetricNorm::spec() const {
    switch (kind) {
        case Kind::KyFan: return "kyfan:" + std::to_string(k);
        case Kind::Schatten: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", p);
            return std::string("schatten:") + buf;
        }
        case Kind::Trace: return "trace";
        case Kind::Operator: return "operator";
    }
    return "trace";
}

SymmetricNorm SymmetricNorm::parse(const std::string& text) {
    if (text == "trace") return trace();
    if (text == "operator") return op();
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    try {
        if (head == "kyfan") {
            std::size_t used = 0;
            const int k = std::stoi(rest, &used);
            if (used != rest.size()) throw std::invalid_argument(rest);
            return ky_fan(k);
        }
        if (head == "schatten") {
            std::size_t used = 0;
            const double p = std::stod(rest, &used);
            if (used != rest.size()) throw std::invalid_argument(rest);
            return schatten(p);
        }
    } catch (const std::exception&) {
        fail(ErrorCode::Parse, "norm selector: bad parameter in '" + text + "'");
    }
    fail(ErrorCode::Parse, "unknown norm selector '" + text + "'");
}

double ky_fan(const SingularValueList& sv, int k) {
    if (k < 1) fail(ErrorCode::InvalidArgument, "ky_fan: k must be >= 1");
    double sum = 0.0;
    const int stop = std::min<int>(k, static_cast<int>(sv.size()));
    for (int j = 0; j < stop; ++j) sum += sv[j];
    return sum;
}

double ky_fan(const ComplexMatrix& a, int k) {
    if (k < 1 || k > a.dim())
        fail(ErrorCode::InvalidArgument,
             "ky_fan: k must be in 1.." + std::to_string(a.dim()) + ", got " + std::to_string(k));
    return ky_fan(singular_values(a), k);
}

double schatten(const ComplexMatrix& a, double p) {
    if (!(p >= 1.0)) fail(ErrorCode::InvalidArgument, "schatten: p must be >= 1 (not a norm otherwise)");
    const auto sv = singular_values(a);
    double sum = 0.0;
    for (double s : sv) sum += std::pow(s, p);
    return std::pow(sum, 1.0 / p);
}

double norm_eval(const SymmetricNorm& norm, const ComplexMatrix& a) {
    switch (norm.kind) {
        case SymmetricNorm::Kind::KyFan: return ky_fan(a, norm.k);
        case SymmetricNorm::Kind::Schatten: return schatten(a, norm.p);
        case SymmetricNorm::Kind::Trace: return ky_fan(a, a.dim());
        case SymmetricNorm::Kind::Operator: return ky_fan(a, 1);
    }
    fail(ErrorCode::Internal, "norm_eval: unreachable selector");
}

MajorizationVerdict weakly_majorized(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (!a.same_dim(b)) fail(ErrorCode::InvalidArgument, "weakly_majorized: dimension mismatch");
    const auto sa = singular_values(a);
    const auto sb = singular_values(b);
    const int n = a.dim();
    MajorizationVerdict v;
    v.per_k_margins.resize(n);
    v.holds = true;
    double worst = std::numeric_limits<double>::infinity();
    v.worst_k = 1;
    double lhs = 0.0, rhs = 0.0;
    for (int k = 1; k <= n; ++k) {
        lhs += sa[k - 1];
        rhs += sb[k - 1];
        const double margin = rhs - lhs;
        v.per_k_margins[k - 1] = margin;
        const double rel = margin / std::max(1.0, rhs);
        if (rel < worst) {
            worst = rel;
            v.worst_k = k;
        }
        if (margin < -tol * std::max(1.0, rhs)) v.holds = false;
    }
    return v;
}

} // namespace symnorm
