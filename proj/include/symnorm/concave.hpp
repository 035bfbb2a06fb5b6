#ifndef SYMNORM_CONCAVE_HPP
#define SYMNORM_CONCAVE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symnorm/matrix.hpp"
#include "symnorm/rng.hpp"

namespace symnorm {

// Scalar function classes the inequalities quantify over.  Parametric kinds
// cover the named examples; piecewise-linear is the generator class, concave
// by construction (chord slopes non-increasing, tail slope at most the last
// interior slope).
class ConcaveFn {
public:
    struct PiecewiseLinear {
        std::vector<double> breakpoints; // ascending, breakpoints[0] == 0
        std::vector<double> values;      // same length
        double tail_slope = 0.0;         // extrapolation slope past the last breakpoint
    };
    struct Power {
        double p = 1.0; // in (0, 1]
    };
    struct MinCap {
        double c = 1.0; // > 0;  f(t) = min(t, c)
    };
    struct Affine {
        double a = 0.0, b = 0.0; // f(t) = a t + b
    };
    struct Sqrt {};

    explicit ConcaveFn(PiecewiseLinear pwl);
    explicit ConcaveFn(Power p);
    explicit ConcaveFn(MinCap c);
    explicit ConcaveFn(Affine af);
    explicit ConcaveFn(Sqrt s);

    double eval(double t) const; // Domain error for t < 0
    double operator()(double t) const { return eval(t); }
    RealFn as_fn() const;

    // f(0) >= 0 together with non-negative slopes everywhere
    bool non_negative() const;

    // g(t) = f(t) - f(0)
    ConcaveFn shift_to_zero() const;

    // literal syntax: "power:0.5", "mincap:0.7071", "sqrt", "affine:a,b",
    // "pwl:[t0,v0;t1,v1;...;slope]"
    std::string spec() const;
    static ConcaveFn parse(const std::string& text);

private:
    std::variant<PiecewiseLinear, Power, MinCap, Affine, Sqrt> kind_;
};

// convex power t^p with p > 1 (the reversed-inequality family)
struct ConvexPower {
    double p;
};
ConvexPower parse_convex_power(const std::string& text);

// second chord-slope differences <= tol on the grid (>= 3 ascending points, all >= 0)
bool is_concave_on_grid(const RealFn& f, std::span<const double> grid, double tol = 1e-12);

// t -> f(e^t) convex on the grid (grid lives in the log domain)
bool is_e_convex(const RealFn& f, std::span<const double> grid, double tol = 1e-12);

std::vector<double> uniform_grid(double lo, double hi, int points = 512);

// default grids used by the predicate wrappers: [0, 4*scale] for concavity,
// [-8, log(4*scale)] in the log domain for e-convexity
bool is_concave_default_grid(const RealFn& f, double scale = 1.0, double tol = 1e-9);
bool is_e_convex_default_grid(const RealFn& f, double scale = 1.0, double tol = 1e-9);

// Random non-negative concave piecewise-linear function: value(0) >= 0,
// strictly decreasing positive slopes, tail slope >= 0 (zero half the time, so
// cap-like shapes appear often).
ConcaveFn random_concave(SeedStream& rng, int max_breaks = 4, double scale = 1.0);

} // namespace symnorm

#endif
