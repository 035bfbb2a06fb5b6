#include "symnorm/symnorm.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "symnorm/concave.hpp"
#include "symnorm/decomp.hpp"
#include "symnorm/harness.hpp"
#include "symnorm/norms.hpp"
#include "symnorm/theorems.hpp"

// Opaque handle: a plain wrapper around the value type.
struct symnorm_matrix {
    symnorm::ComplexMatrix value;
};

namespace {

using symnorm::ErrorCode;
using ordered_json = nlohmann::ordered_json;

thread_local std::string g_last_error;

symnorm_status to_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return SYMNORM_ERR_INVALID_ARGUMENT;
        case ErrorCode::Precondition: return SYMNORM_ERR_PRECONDITION;
        case ErrorCode::Domain: return SYMNORM_ERR_DOMAIN;
        case ErrorCode::Parse: return SYMNORM_ERR_PARSE;
        case ErrorCode::UnknownId: return SYMNORM_ERR_UNKNOWN_ID;
        case ErrorCode::Internal: return SYMNORM_ERR_INTERNAL;
    }
    return SYMNORM_ERR_INTERNAL;
}

// run the body, translating exceptions into status codes + the thread-local message
template <typename Fn>
symnorm_status guarded(Fn&& body) {
    try {
        body();
        return SYMNORM_OK;
    } catch (const symnorm::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SYMNORM_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SYMNORM_ERR_INTERNAL;
    }
}

symnorm_status null_arg(const char* what) {
    g_last_error = std::string(what) + " must not be NULL";
    return SYMNORM_ERR_NULL_POINTER;
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// config parsing shared by run_check / run_search; dims accept [2,3] or "2..8"
std::vector<int> parse_dims_field(const ordered_json& j) {
    std::vector<int> dims;
    if (j.is_string()) {
        const std::string text = j.get<std::string>();
        const auto dots = text.find("..");
        try {
            if (dots != std::string::npos) {
                const int lo = std::stoi(text.substr(0, dots));
                const int hi = std::stoi(text.substr(dots + 2));
                if (hi < lo) throw std::invalid_argument(text);
                for (int d = lo; d <= hi; ++d) dims.push_back(d);
            } else {
                std::size_t pos = 0;
                while (pos < text.size()) {
                    std::size_t next = text.find(',', pos);
                    if (next == std::string::npos) next = text.size();
                    dims.push_back(std::stoi(text.substr(pos, next - pos)));
                    pos = next + 1;
                }
            }
        } catch (const std::exception&) {
            symnorm::fail(ErrorCode::Parse, "config: bad dims '" + text + "'");
        }
        return dims;
    }
    if (j.is_array()) {
        for (const auto& v : j) {
            if (!v.is_number_integer()) symnorm::fail(ErrorCode::Parse, "config: dims must be integers");
            dims.push_back(v.get<int>());
        }
        return dims;
    }
    symnorm::fail(ErrorCode::Parse, "config: dims must be an array or a range string");
}

ordered_json parse_config(const char* text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        symnorm::fail(ErrorCode::Parse, "config must be a JSON object");
    return j;
}

} // namespace

extern "C" {

const char* symnorm_version(void) { return "1.0.0"; }

const char* symnorm_last_error(void) { return g_last_error.c_str(); }

void symnorm_string_free(char* s) { delete[] s; }

symnorm_status symnorm_matrix_create(int dim, const double* re, const double* im,
                                     symnorm_matrix** out) {
    if (!out) return null_arg("out");
    if (!re) return null_arg("re");
    *out = nullptr;
    return guarded([&] {
        if (dim < 1 || dim > symnorm::kMaxDim)
            symnorm::fail(ErrorCode::InvalidArgument,
                          "dim must be in 1.." + std::to_string(symnorm::kMaxDim));
        Eigen::MatrixXcd m(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                m(i, j) = symnorm::Complex(re[i * dim + j], im ? im[i * dim + j] : 0.0);
        symnorm::ComplexMatrix value(std::move(m));
        symnorm::require_finite(value, "symnorm_matrix_create");
        *out = new symnorm_matrix{std::move(value)};
    });
}

symnorm_status symnorm_matrix_from_json(const char* json_text, symnorm_matrix** out) {
    if (!out) return null_arg("out");
    if (!json_text) return null_arg("json_text");
    *out = nullptr;
    return guarded([&] {
        *out = new symnorm_matrix{symnorm::ComplexMatrix::from_json(json_text)};
    });
}

symnorm_status symnorm_matrix_to_json(const symnorm_matrix* m, char** out_json) {
    if (!m) return null_arg("matrix");
    if (!out_json) return null_arg("out_json");
    return guarded([&] { *out_json = copy_string(m->value.to_json()); });
}

symnorm_status symnorm_matrix_dim(const symnorm_matrix* m, int* out_dim) {
    if (!m) return null_arg("matrix");
    if (!out_dim) return null_arg("out_dim");
    *out_dim = m->value.dim();
    return SYMNORM_OK;
}

symnorm_status symnorm_matrix_entry(const symnorm_matrix* m, int row, int col, double* out_re,
                                    double* out_im) {
    if (!m) return null_arg("matrix");
    if (!out_re || !out_im) return null_arg("out_re/out_im");
    return guarded([&] {
        if (row < 0 || col < 0 || row >= m->value.dim() || col >= m->value.dim())
            symnorm::fail(ErrorCode::InvalidArgument, "entry index out of range");
        const symnorm::Complex v = m->value(row, col);
        *out_re = v.real();
        *out_im = v.imag();
    });
}

void symnorm_matrix_free(symnorm_matrix* m) { delete m; }

#define SYMNORM_PREDICATE(name, call)                                       \
    symnorm_status name(const symnorm_matrix* m, double tol, int* out) {    \
        if (!m) return null_arg("matrix");                                  \
        if (!out) return null_arg("out");                                   \
        return guarded([&] { *out = call(m->value, tol) ? 1 : 0; });        \
    }

SYMNORM_PREDICATE(symnorm_is_hermitian, symnorm::is_hermitian)
SYMNORM_PREDICATE(symnorm_is_normal, symnorm::is_normal)
SYMNORM_PREDICATE(symnorm_is_psd, symnorm::is_psd)
SYMNORM_PREDICATE(symnorm_is_expansive, symnorm::is_expansive)

#undef SYMNORM_PREDICATE

symnorm_status symnorm_singular_values(const symnorm_matrix* m, double* out_values) {
    if (!m) return null_arg("matrix");
    if (!out_values) return null_arg("out_values");
    return guarded([&] {
        const auto sv = symnorm::singular_values(m->value);
        for (std::size_t j = 0; j < sv.size(); ++j) out_values[j] = sv[j];
    });
}

symnorm_status symnorm_ky_fan(const symnorm_matrix* m, int k, double* out) {
    if (!m) return null_arg("matrix");
    if (!out) return null_arg("out");
    return guarded([&] { *out = symnorm::ky_fan(m->value, k); });
}

symnorm_status symnorm_norm_eval(const symnorm_matrix* m, const char* norm_spec, double* out) {
    if (!m) return null_arg("matrix");
    if (!norm_spec) return null_arg("norm_spec");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = symnorm::norm_eval(symnorm::SymmetricNorm::parse(norm_spec), m->value);
    });
}

symnorm_status symnorm_apply_fn_abs(const symnorm_matrix* m, const char* fn_spec,
                                    symnorm_matrix** out) {
    if (!m) return null_arg("matrix");
    if (!fn_spec) return null_arg("fn_spec");
    if (!out) return null_arg("out");
    *out = nullptr;
    return guarded([&] {
        const symnorm::ConcaveFn f = symnorm::ConcaveFn::parse(fn_spec);
        *out = new symnorm_matrix{symnorm::apply_fn_abs(f.as_fn(), m->value)};
    });
}

symnorm_status symnorm_weakly_majorized(const symnorm_matrix* a, const symnorm_matrix* b,
                                        double tol, int* out_holds, char** out_verdict_json) {
    if (!a || !b) return null_arg("matrix");
    if (!out_holds) return null_arg("out_holds");
    return guarded([&] {
        const auto verdict = symnorm::weakly_majorized(a->value, b->value, tol);
        *out_holds = verdict.holds ? 1 : 0;
        if (out_verdict_json) {
            ordered_json j;
            j["holds"] = verdict.holds;
            j["per_k_margins"] = verdict.per_k_margins;
            j["worst_k"] = verdict.worst_k;
            *out_verdict_json = copy_string(j.dump());
        }
    });
}

symnorm_status symnorm_fn_eval(const char* fn_spec, double t, double* out) {
    if (!fn_spec) return null_arg("fn_spec");
    if (!out) return null_arg("out");
    return guarded([&] { *out = symnorm::ConcaveFn::parse(fn_spec).eval(t); });
}

symnorm_status symnorm_list_checks(char** out_json) {
    if (!out_json) return null_arg("out_json");
    return guarded([&] { *out_json = copy_string(symnorm::list_json()); });
}

symnorm_status symnorm_run_check(const char* config_json, char** out_report_json) {
    if (!config_json) return null_arg("config_json");
    if (!out_report_json) return null_arg("out_report_json");
    *out_report_json = nullptr;
    return guarded([&] {
        const ordered_json j = parse_config(config_json);
        symnorm::TrialConfig config;
        if (!j.contains("theorem") || !j["theorem"].is_string())
            symnorm::fail(ErrorCode::Parse, "config: \"theorem\" id is required");
        config.theorem_id = j["theorem"].get<std::string>();
        if (j.contains("dims")) config.dims = parse_dims_field(j["dims"]);
        if (j.contains("trials")) config.trials = j["trials"].get<long>();
        if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("tol")) config.tol = j["tol"].get<double>();
        if (j.contains("fn")) config.function_spec = j["fn"].get<std::string>();
        if (j.contains("norm_scope")) config.norm_scope = j["norm_scope"].get<std::string>();
        *out_report_json = copy_string(symnorm::run_suite(config).to_json());
    });
}

symnorm_status symnorm_run_repro(const char* case_name, char** out_report_json) {
    if (!case_name) return null_arg("case_name");
    if (!out_report_json) return null_arg("out_report_json");
    *out_report_json = nullptr;
    return guarded([&] { *out_report_json = copy_string(symnorm::run_repro(case_name).to_json()); });
}

symnorm_status symnorm_run_search(const char* config_json, char** out_report_json) {
    if (!config_json) return null_arg("config_json");
    if (!out_report_json) return null_arg("out_report_json");
    *out_report_json = nullptr;
    return guarded([&] {
        const ordered_json j = parse_config(config_json);
        symnorm::SearchConfig config;
        if (!j.contains("target") || !j["target"].is_string())
            symnorm::fail(ErrorCode::Parse, "config: \"target\" id is required");
        config.target = j["target"].get<std::string>();
        if (j.contains("budget")) config.budget = j["budget"].get<long>();
        if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("dims")) config.dims = parse_dims_field(j["dims"]);
        if (j.contains("tol")) config.tol = j["tol"].get<double>();
        *out_report_json = copy_string(symnorm::search_violation(config).to_json());
    });
}

} // extern "C"
