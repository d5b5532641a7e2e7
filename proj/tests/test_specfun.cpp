#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "identity_set.hpp"
#include "rfso/bivariate_h.hpp"
#include "rfso/errors.hpp"
#include "rfso/fox_h.hpp"
#include "rfso/gamma.hpp"

using namespace rfso;
using namespace rfso::testing;

TEST_CASE("identity battery against independent closed forms") {
    auto ids = specfun_identities();
    CHECK(ids.size() >= 30);
    for (const auto& id : ids) {
        CAPTURE(id.name);
        double scale = std::max(std::abs(id.want), 1e-30);
        CHECK(std::abs(id.got - id.want) / scale < 1e-8);
    }
}

TEST_CASE("reported error bounds the observed deviation") {
    auto ids = specfun_identities();
    int with_estimate = 0;
    for (const auto& id : ids) {
        if (id.err_estimate <= 0.0) continue;
        ++with_estimate;
        CAPTURE(id.name);
        double dev = std::abs(id.got - id.want);
        // the oracle side carries its own (tiny) error; allow that floor
        CHECK(dev <= id.err_estimate + 1e-12 * std::abs(id.want) + 1e-15);
    }
    CHECK(with_estimate >= 20);
}

TEST_CASE("log_gamma throws on non-positive integers") {
    CHECK_THROWS_AS(log_gamma(cplx(0.0, 0.0)), PoleError);
    CHECK_THROWS_AS(log_gamma(cplx(-3.0, 0.0)), PoleError);
    CHECK(std::abs(std::exp(log_gamma(cplx(5.0, 0.0))) - 24.0) < 1e-10);
}

TEST_CASE("contour rejects kernels without a separating strip") {
    // Gamma(s) poles at 0,-1,... and Gamma(1+s) in the same family with
    // a right family Gamma(-1-s): right bound below left bound.
    GammaTriple k;
    k.lower_left = {{2.0, 1.0}};
    k.upper_left = {{0.0, 1.0}};  // right-family poles start at s = 1
    // left family reaches up to -2... make them overlap instead:
    k.lower_left = {{2.0, 1.0}};   // poles at -2, -3, ...
    k.upper_left = {{4.0, 1.0}};   // right poles at s = -3, -4, ... overlap
    CHECK_THROWS_AS(fox_h(k, 1.0), ContourError);
}

TEST_CASE("delta_list spacing") {
    auto d = delta_list(4, 2.0);
    REQUIRE(d.size() == 4);
    CHECK(d[0] == doctest::Approx(0.5));
    CHECK(d[3] == doctest::Approx(1.25));
}

TEST_CASE("argument scaling law of the exponential kernel") {
    // H[k; x] with lower_left (b,1): value is x^b e^{-x}.
    GammaTriple k;
    k.lower_left = {{1.5, 1.0}};
    Precision prec;
    prec.rel_tol = 1e-10;
    for (double x : {0.4, 2.2}) {
        auto r = fox_h(k, x, prec);
        CHECK(r.value ==
              doctest::Approx(std::pow(x, 1.5) * std::exp(-x)).epsilon(1e-9));
    }
}

TEST_CASE("coupled bivariate kernel against its exact closed form") {
    // Gamma(a+s+t) Gamma(s) Gamma(t): writing the joint factor as an
    // Euler integral folds the two exponential axes into
    //   int_0^inf u^{a-1} e^{-u - (x+y)/u} du = 2 (x+y)^{a/2} K_a(2 sqrt(x+y)).
    const double a = 1.2;
    BivariateKernel bk;
    bk.joint = {{a, 1.0, 1.0, true}};
    bk.s_kernel = exp_kernel();
    bk.t_kernel = exp_kernel();
    Precision prec;
    prec.rel_tol = 1e-10;
    struct { double x, y; } cs[] = {{0.45, 0.8}, {1.3, 0.25}, {2.0, 2.0}};
    for (auto c : cs) {
        CAPTURE(c.x);
        CAPTURE(c.y);
        auto r = bivariate_h(bk, c.x, c.y, prec);
        double s = c.x + c.y;
        double oracle =
            2.0 * std::pow(s, 0.5 * a) * std::cyl_bessel_k(a, 2.0 * std::sqrt(s));
        CHECK(r.value == doctest::Approx(oracle).epsilon(1e-8));
    }
}
