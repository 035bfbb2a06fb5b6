#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "symnorm/concave.hpp"

using namespace symnorm;
using std::numbers::sqrt2;

TEST_CASE("eval on the named kinds") {
    CHECK(ConcaveFn(ConcaveFn::MinCap{sqrt2 / 2.0}).eval(1.0) == doctest::Approx(sqrt2 / 2.0));
    CHECK(ConcaveFn(ConcaveFn::Power{1.0}).eval(0.37) == doctest::Approx(0.37));
    CHECK(ConcaveFn(ConcaveFn::Sqrt{}).eval(9.0) == doctest::Approx(3.0));
    CHECK(ConcaveFn(ConcaveFn::Affine{2.0, 3.0}).eval(4.0) == doctest::Approx(11.0));

    ConcaveFn::PiecewiseLinear pwl;
    pwl.breakpoints = {0.0, 1.0, 2.0};
    pwl.values = {0.5, 2.0, 3.0};
    pwl.tail_slope = 0.25;
    const ConcaveFn f{pwl};
    CHECK(f.eval(0.5) == doctest::Approx(1.25));  // interpolation
    CHECK(f.eval(4.0) == doctest::Approx(3.5));   // tail extrapolation
    CHECK_THROWS_AS(f.eval(-0.1), Error);
}

TEST_CASE("construction validates the class invariants") {
    CHECK_THROWS_AS(ConcaveFn{ConcaveFn::Power{1.5}}, Error);
    CHECK_THROWS_AS(ConcaveFn{ConcaveFn::Power{0.0}}, Error);
    CHECK_THROWS_AS(ConcaveFn{ConcaveFn::MinCap{0.0}}, Error);
    ConcaveFn::PiecewiseLinear convex;
    convex.breakpoints = {0.0, 1.0, 2.0};
    convex.values = {0.0, 1.0, 3.0}; // slopes 1 then 2: not concave
    convex.tail_slope = 0.0;
    CHECK_THROWS_AS(ConcaveFn{convex}, Error);
    ConcaveFn::PiecewiseLinear bad_tail;
    bad_tail.breakpoints = {0.0, 1.0};
    bad_tail.values = {0.0, 1.0};
    bad_tail.tail_slope = 2.0;
    CHECK_THROWS_AS(ConcaveFn{bad_tail}, Error);
}

TEST_CASE("shift_to_zero") {
    const ConcaveFn af{ConcaveFn::Affine{2.0, 3.0}};
    CHECK(af.shift_to_zero().eval(1.0) == doctest::Approx(2.0));
    CHECK(af.shift_to_zero().eval(0.0) == doctest::Approx(0.0));

    const ConcaveFn cap{ConcaveFn::MinCap{0.7}};
    CHECK(cap.shift_to_zero().spec() == cap.spec());

    // idempotence on a grid
    const auto grid = uniform_grid(0.0, 5.0, 64);
    ConcaveFn::PiecewiseLinear pwl;
    pwl.breakpoints = {0.0, 1.0};
    pwl.values = {0.75, 1.75};
    pwl.tail_slope = 0.5;
    const ConcaveFn f{pwl};
    const ConcaveFn once = f.shift_to_zero();
    const ConcaveFn twice = once.shift_to_zero();
    for (double t : grid) CHECK(once.eval(t) == doctest::Approx(twice.eval(t)).epsilon(1e-14));
}

TEST_CASE("is_concave_on_grid") {
    const auto grid = uniform_grid(0.0, 10.0, 101);
    CHECK(is_concave_on_grid([](double t) { return std::sqrt(t); }, grid));
    CHECK_FALSE(is_concave_on_grid([](double t) { return t * t; }, grid));
    CHECK(is_concave_on_grid([](double t) { return t; }, grid));
    CHECK_THROWS_AS(is_concave_on_grid([](double t) { return t; }, std::vector<double>{0.0, 1.0}),
                    Error);
    CHECK_THROWS_AS(
        is_concave_on_grid([](double t) { return t; }, std::vector<double>{0.0, 1.0, 0.5}), Error);
}

TEST_CASE("is_e_convex") {
    // power functions: f(e^t) = e^(p t) is convex
    for (double p : {0.25, 0.5, 1.0}) {
        const ConcaveFn f{ConcaveFn::Power{p}};
        CHECK(is_e_convex_default_grid(f.as_fn()));
    }
    // affine with positive intercept: b + a e^t convex
    CHECK(is_e_convex_default_grid(ConcaveFn(ConcaveFn::Affine{1.5, 2.0}).as_fn()));
    // the cap has a concave kink at t = 0 in the log domain
    CHECK_FALSE(is_e_convex_default_grid(ConcaveFn(ConcaveFn::MinCap{1.0}).as_fn()));
}

TEST_CASE("random_concave draws are valid by construction") {
    SeedStream rng(2024);
    int zero_at_origin = 0;
    for (int i = 0; i < 1000; ++i) {
        const ConcaveFn f = random_concave(rng, 4, 1.0);
        CHECK(f.non_negative());
        if (i < 100) CHECK(is_concave_default_grid(f.as_fn(), 1.0, 1e-12));
        if (f.eval(0.0) == 0.0) ++zero_at_origin;
        // round trip through the literal syntax
        if (i < 50) {
            const ConcaveFn back = ConcaveFn::parse(f.spec());
            for (double t : {0.0, 0.3, 1.1, 4.5})
                CHECK(back.eval(t) == doctest::Approx(f.eval(t)).epsilon(1e-14));
        }
    }
    CHECK(zero_at_origin > 300); // both f(0) = 0 and f(0) > 0 shapes appear
}

TEST_CASE("random_concave shapes") {
    SeedStream rng(77);
    // single-break draws are cap-like or affine-like two-piece functions
    for (int i = 0; i < 50; ++i) {
        const ConcaveFn f = random_concave(rng, 1, 1.0);
        const std::string s = f.spec();
        CHECK(std::count(s.begin(), s.end(), ';') == 2); // one breakpoint pair + tail slope
    }
    // draws starting at the origin are fixed points of shift_to_zero
    int checked = 0;
    for (int i = 0; i < 200 && checked < 30; ++i) {
        const ConcaveFn f = random_concave(rng, 4, 1.0);
        if (f.eval(0.0) != 0.0) continue;
        ++checked;
        const ConcaveFn g = f.shift_to_zero();
        for (double t : {0.0, 0.4, 1.3, 5.0}) CHECK(g.eval(t) == f.eval(t));
    }
    CHECK(checked == 30);
}

TEST_CASE("scalar subadditivity and monotonicity of generated functions") {
    SeedStream rng(55);
    for (int i = 0; i < 300; ++i) {
        const ConcaveFn f = random_concave(rng, 4, 1.0);
        const double a = rng.uniform(0.0, 3.0);
        const double b = rng.uniform(0.0, 3.0);
        CHECK(f.eval(a + b) <= f.eval(a) + f.eval(b) + 1e-12);
        const double lo = std::min(a, b), hi = std::max(a, b);
        CHECK(f.eval(lo) <= f.eval(hi) + 1e-12);
    }
}

TEST_CASE("literal parsing") {
    CHECK(ConcaveFn::parse("power:0.5").eval(4.0) == doctest::Approx(2.0));
    CHECK(ConcaveFn::parse("mincap:0.7071").eval(2.0) == doctest::Approx(0.7071));
    CHECK(ConcaveFn::parse("sqrt").eval(16.0) == doctest::Approx(4.0));
    CHECK(ConcaveFn::parse("affine:0.5,1").eval(3.0) == doctest::Approx(2.5));
    const ConcaveFn pwl = ConcaveFn::parse("pwl:[0,0;1,1;0.5]");
    CHECK(pwl.eval(3.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(ConcaveFn::parse("nope"), Error);
    CHECK_THROWS_AS(ConcaveFn::parse("power:abc"), Error);
    CHECK_THROWS_AS(ConcaveFn::parse("affine:1"), Error);
    CHECK_THROWS_AS(ConcaveFn::parse("pwl:[0,0]"), Error);

    CHECK(parse_convex_power("power:2.5").p == doctest::Approx(2.5));
    CHECK_THROWS_AS(parse_convex_power("power:1"), Error);
    CHECK_THROWS_AS(parse_convex_power("mincap:2"), Error);
}
