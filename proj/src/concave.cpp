#include "symnorm/concave.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace symnorm {

namespace {

double parse_number(const std::string& text, const char* who) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v))
            fail(ErrorCode::Parse, std::string(who) + ": bad number '" + text + "'");
        return v;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(ErrorCode::Parse, std::string(who) + ": bad number '" + text + "'");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    if (!text.empty() && text.back() == sep) parts.push_back("");
    return parts;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

ConcaveFn::ConcaveFn(PiecewiseLinear pwl) : kind_(std::move(pwl)) {
    const auto& f = std::get<PiecewiseLinear>(kind_);
    const std::size_t n = f.breakpoints.size();
    if (n == 0 || f.values.size() != n)
        fail(ErrorCode::InvalidArgument, "pwl: breakpoints and values must be non-empty and equal length");
    if (f.breakpoints.front() != 0.0)
        fail(ErrorCode::InvalidArgument, "pwl: first breakpoint must be 0");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(f.breakpoints[i] < f.breakpoints[i + 1]))
            fail(ErrorCode::InvalidArgument, "pwl: breakpoints must be strictly ascending");
    if (!std::isfinite(f.tail_slope)) fail(ErrorCode::InvalidArgument, "pwl: tail slope must be finite");
    // chord slopes non-increasing, tail slope at most the last interior slope
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double s = (f.values[i + 1] - f.values[i]) / (f.breakpoints[i + 1] - f.breakpoints[i]);
        if (s > prev + 1e-12) fail(ErrorCode::InvalidArgument, "pwl: chord slopes must be non-increasing");
        prev = s;
    }
    if (f.tail_slope > prev + 1e-12)
        fail(ErrorCode::InvalidArgument, "pwl: tail slope exceeds the last interior slope");
}

ConcaveFn::ConcaveFn(Power p) : kind_(p) {
    if (!(p.p > 0.0 && p.p <= 1.0)) fail(ErrorCode::InvalidArgument, "power: p must be in (0, 1]");
}

ConcaveFn::ConcaveFn(MinCap c) : kind_(c) {
    if (!(c.c > 0.0) || !std::isfinite(c.c)) fail(ErrorCode::InvalidArgument, "mincap: c must be > 0");
}

ConcaveFn::ConcaveFn(Affine af) : kind_(af) {
    if (!std::isfinite(af.a) || !std::isfinite(af.b))
        fail(ErrorCode::InvalidArgument, "affine: coefficients must be finite");
}

ConcaveFn::ConcaveFn(Sqrt s) : kind_(s) {}

double ConcaveFn::eval(double t) const {
    if (t < 0.0 || !std::isfinite(t))
        fail(ErrorCode::Domain, "concave function evaluated at t = " + format_number(t) +
                                    " outside [0, inf)");
    return std::visit(
        [&](const auto& f) -> double {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, PiecewiseLinear>) {
                const auto& bp = f.breakpoints;
                if (t >= bp.back()) return f.values.back() + f.tail_slope * (t - bp.back());
                auto it = std::upper_bound(bp.begin(), bp.end(), t);
                const std::size_t hi = static_cast<std::size_t>(it - bp.begin());
                const std::size_t lo = hi - 1;
                const double w = (t - bp[lo]) / (bp[hi] - bp[lo]);
                return f.values[lo] + w * (f.values[hi] - f.values[lo]);
            } else if constexpr (std::is_same_v<T, Power>) {
                return std::pow(t, f.p);
            } else if constexpr (std::is_same_v<T, MinCap>) {
                return std::min(t, f.c);
            } else if constexpr (std::is_same_v<T, Affine>) {
                return f.a * t + f.b;
            } else {
                return std::sqrt(t);
            }
        },
        kind_);
}

RealFn ConcaveFn::as_fn() const {
    return [copy = *this](double t) { return copy.eval(t); };
}

bool ConcaveFn::non_negative() const {
    return std::visit(
        [](const auto& f) -> bool {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, PiecewiseLinear>) {
                if (f.values.front() < 0.0 || f.tail_slope < 0.0) return false;
                // slopes are non-increasing, so the last interior slope >= tail >= 0
                // means every slope is >= 0 and the function never dips below f(0)
                for (std::size_t i = 0; i + 1 < f.values.size(); ++i)
                    if (f.values[i + 1] < f.values[i]) return false;
                return true;
            } else if constexpr (std::is_same_v<T, Affine>) {
                return f.a >= 0.0 && f.b >= 0.0;
            } else {
                return true; // power, mincap, sqrt
            }
        },
        kind_);
}

ConcaveFn ConcaveFn::shift_to_zero() const {
    return std::visit(
        [&](const auto& f) -> ConcaveFn {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, PiecewiseLinear>) {
                PiecewiseLinear g = f;
                const double v0 = g.values.front();
                for (double& v : g.values) v -= v0;
                return ConcaveFn(std::move(g));
            } else if constexpr (std::is_same_v<T, Affine>) {
                return ConcaveFn(Affine{f.a, 0.0});
            } else {
                return *this; // power, mincap, sqrt already vanish at 0
            }
        },
        kind_);
}

std::string ConcaveFn::spec() const {
    return std::visit(
        [](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, PiecewiseLinear>) {
                std::string out = "pwl:[";
                for (std::size_t i = 0; i < f.breakpoints.size(); ++i) {
                    out += format_number(f.breakpoints[i]);
                    out += ',';
                    out += format_number(f.values[i]);
                    out += ';';
                }
                out += format_number(f.tail_slope);
                out += ']';
                return out;
            } else if constexpr (std::is_same_v<T, Power>) {
                return "power:" + format_number(f.p);
            } else if constexpr (std::is_same_v<T, MinCap>) {
                return "mincap:" + format_number(f.c);
            } else if constexpr (std::is_same_v<T, Affine>) {
                return "affine:" + format_number(f.a) + "," + format_number(f.b);
            } else {
                return "sqrt";
            }
        },
        kind_);
}

ConcaveFn ConcaveFn::parse(const std::string& text) {
    if (text == "sqrt") return ConcaveFn(Sqrt{});
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (head == "power") return ConcaveFn(Power{parse_number(rest, "power")});
    if (head == "mincap") return ConcaveFn(MinCap{parse_number(rest, "mincap")});
    if (head == "affine") {
        const auto parts = split(rest, ',');
        if (parts.size() != 2) fail(ErrorCode::Parse, "affine: expected 'affine:a,b'");
        return ConcaveFn(Affine{parse_number(parts[0], "affine"), parse_number(parts[1], "affine")});
    }
    if (head == "pwl") {
        if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
            fail(ErrorCode::Parse, "pwl: expected 'pwl:[t0,v0;t1,v1;...;slope]'");
        const auto parts = split(rest.substr(1, rest.size() - 2), ';');
        if (parts.size() < 2) fail(ErrorCode::Parse, "pwl: need at least one breakpoint and a slope");
        PiecewiseLinear pwl;
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
            const auto pair = split(parts[i], ',');
            if (pair.size() != 2) fail(ErrorCode::Parse, "pwl: breakpoints are 't,v' pairs");
            pwl.breakpoints.push_back(parse_number(pair[0], "pwl"));
            pwl.values.push_back(parse_number(pair[1], "pwl"));
        }
        pwl.tail_slope = parse_number(parts.back(), "pwl");
        return ConcaveFn(std::move(pwl));
    }
    fail(ErrorCode::Parse, "unknown function literal '" + text + "'");
}

ConvexPower parse_convex_power(const std::string& text) {
    const auto colon = text.find(':');
    if (text.substr(0, colon) != "power" || colon == std::string::npos)
        fail(ErrorCode::Parse, "convex power: expected 'power:p' with p > 1");
    const double p = parse_number(text.substr(colon + 1), "power");
    if (!(p > 1.0)) fail(ErrorCode::InvalidArgument, "convex power: p must be > 1");
    return ConvexPower{p};
}

namespace {

void require_grid(std::span<const double> grid, const char* who, bool allow_negative) {
    if (grid.size() < 3) fail(ErrorCode::InvalidArgument, std::string(who) + ": grid needs >= 3 points");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i]))
            fail(ErrorCode::InvalidArgument, std::string(who) + ": grid has non-finite points");
        if (!allow_negative && grid[i] < 0.0)
            fail(ErrorCode::InvalidArgument, std::string(who) + ": grid points must be >= 0");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            fail(ErrorCode::InvalidArgument, std::string(who) + ": grid must be strictly ascending");
    }
}

// chord slopes over consecutive grid intervals
std::vector<double> chord_slopes(const RealFn& f, std::span<const double> grid, bool through_exp) {
    std::vector<double> slopes;
    slopes.reserve(grid.size() - 1);
    double prev_t = grid[0];
    double prev_v = f(through_exp ? std::exp(grid[0]) : grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double t = grid[i];
        const double v = f(through_exp ? std::exp(t) : t);
        slopes.push_back((v - prev_v) / (t - prev_t));
        prev_t = t;
        prev_v = v;
    }
    return slopes;
}

} // namespace

bool is_concave_on_grid(const RealFn& f, std::span<const double> grid, double tol) {
    require_grid(grid, "is_concave_on_grid", false);
    const auto slopes = chord_slopes(f, grid, false);
    for (std::size_t i = 0; i + 1 < slopes.size(); ++i)
        if (slopes[i + 1] - slopes[i] > tol) return false;
    return true;
}

bool is_e_convex(const RealFn& f, std::span<const double> grid, double tol) {
    require_grid(grid, "is_e_convex", true);
    const auto slopes = chord_slopes(f, grid, true);
    for (std::size_t i = 0; i + 1 < slopes.size(); ++i)
        if (slopes[i + 1] - slopes[i] < -tol) return false;
    return true;
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
    if (points < 3 || !(hi > lo)) fail(ErrorCode::InvalidArgument, "uniform_grid: bad parameters");
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) g[i] = lo + (hi - lo) * i / (points - 1);
    return g;
}

bool is_concave_default_grid(const RealFn& f, double scale, double tol) {
    const auto grid = uniform_grid(0.0, 4.0 * std::max(scale, 1e-6), 512);
    return is_concave_on_grid(f, grid, tol);
}

bool is_e_convex_default_grid(const RealFn& f, double scale, double tol) {
    const auto grid = uniform_grid(-8.0, std::log(4.0 * std::max(scale, 1e-6)), 512);
    return is_e_convex(f, grid, tol);
}

ConcaveFn random_concave(SeedStream& rng, int max_breaks, double scale) {
    if (max_breaks < 1) fail(ErrorCode::InvalidArgument, "random_concave: max_breaks must be >= 1");
    const int breaks = 1 + static_cast<int>(rng.index(static_cast<std::uint64_t>(max_breaks)));
    ConcaveFn::PiecewiseLinear pwl;
    pwl.breakpoints.push_back(0.0);
    pwl.values.push_back(rng.chance(0.5) ? 0.0 : rng.uniform(0.0, 0.5 * scale));
    double t = 0.0;
    // strictly decreasing positive slopes keep the function concave by construction
    double slope = rng.uniform(0.5, 2.0);
    for (int i = 0; i < breaks; ++i) {
        t += rng.uniform(0.1, 1.0) * scale;
        pwl.breakpoints.push_back(t);
        pwl.values.push_back(pwl.values.back() + slope * (t - pwl.breakpoints[pwl.breakpoints.size() - 2]));
        slope *= rng.uniform(0.3, 0.95);
    }
    pwl.tail_slope = rng.chance(0.5) ? 0.0 : slope;
    return ConcaveFn(std::move(pwl));
}

} // namespace symnorm
