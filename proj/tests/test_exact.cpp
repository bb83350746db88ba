#include <doctest.h>

#include "respole/exact.hpp"
#include "respole/model.hpp"
#include "respole/states.hpp"

using namespace respole;

TEST_SUITE("exact") {

TEST_CASE("exact binomials") {
    CHECK(binom_exact(0, 0) == 1);
    CHECK(binom_exact(5, 2) == 10);
    CHECK(binom_exact(5, 6) == 0);
    CHECK(binom_exact(40, 20) == BigInt("137846528820"));
    CHECK(factorial_exact(20) == BigInt("2432902008176640000"));
}

TEST_CASE("binomial product identity") {
    SUBCASE("spot value: both sides equal 6") {
        CHECK(binom_product_identity(3, 2, 1, 1));
        const BigInt lhs = binom_exact(3, 2) * binom_exact(2, 1) * binom_exact(1, 1);
        CHECK(lhs == 6);
    }
    SUBCASE("collapsing case l = k, m = n-k") {
        for (int n = 0; n <= 8; ++n)
            for (int k = 0; k <= n; ++k) {
                CHECK(binom_product_identity(n, k, k, n - k));
                const BigInt lhs =
                    binom_exact(n, k) * binom_exact(k, k) * binom_exact(n - k, n - k);
                CHECK(lhs == binom_exact(n, k));
            }
    }
    SUBCASE("exhaustive through n = 12") {
        for (int n = 0; n <= 12; ++n)
            for (int k = 0; k <= n; ++k)
                for (int l = 0; l <= k; ++l)
                    for (int m = 0; m <= n - k; ++m) CHECK(binom_product_identity(n, k, l, m));
    }
    SUBCASE("lattice preconditions") {
        CHECK_THROWS_AS((void)binom_product_identity(3, 4, 0, 0), ValidationError);
        CHECK_THROWS_AS((void)binom_product_identity(3, 2, 3, 0), ValidationError);
        CHECK_THROWS_AS((void)binom_product_identity(3, 2, 1, 2), ValidationError);
    }
}

TEST_CASE("binomial cancellation polynomial") {
    SUBCASE("l = n-m collapses to the constant 1") {
        CHECK(binom_cancellation(5, 2, 3).is_constant_one());
        CHECK(binom_cancellation(3, 3, 0).is_constant_one());  // empty nilpotent part
    }
    SUBCASE("interior case cancels exactly") {
        const auto p = binom_cancellation(4, 1, 0);
        CHECK(p.is_zero());
    }
    SUBCASE("all lattice points up to n = 12") {
        for (int n = 0; n <= 12; ++n)
            for (int m = 0; m <= n; ++m)
                for (int l = 0; l <= n - m; ++l) {
                    const auto p = binom_cancellation(n, m, l);
                    if (l == n - m)
                        CHECK(p.is_constant_one());
                    else
                        CHECK(p.is_zero());
                }
    }
}

TEST_CASE("summation reorder is a lattice bijection") {
    SUBCASE("n = 3 has twenty triples") {
        int count = 0;
        for (int k = 0; k <= 3; ++k)
            for (int l = 0; l <= k; ++l)
                for (int m = 0; m <= 3 - k; ++m) ++count;
        CHECK(count == 20);
        CHECK(reorder_check(3));
    }
    SUBCASE("n = 0") { CHECK(reorder_check(0)); }
    SUBCASE("exhaustive through n = 15") {
        for (int n = 0; n <= 15; ++n) CHECK(reorder_check(n));
    }
}

TEST_CASE("symbolic state evolution") {
    SUBCASE("n = 0 is the constant-one dyad") {
        const auto ev = symbolic_state_evolution(0);
        CHECK(ev.dyads[0][0].reduced.is_constant_one());
        CHECK(ev.matches_antidiagonal());
    }
    SUBCASE("n = 1 keeps exactly the two antidiagonal dyads") {
        const auto ev = symbolic_state_evolution(1);
        CHECK(ev.dyads[0][1].reduced.is_constant_one());
        CHECK(ev.dyads[1][0].reduced.is_constant_one());
        CHECK(ev.dyads[0][0].reduced.is_zero());
        CHECK(ev.dyads[1][1].reduced.is_zero());
        CHECK(ev.matches_antidiagonal());
    }
    SUBCASE("antidiagonal identity through n = 10") {
        for (int n = 0; n <= 10; ++n) {
            CAPTURE(n);
            CHECK(symbolic_state_evolution(n).matches_antidiagonal());
        }
    }
    SUBCASE("sampled large orders up to the bound") {
        for (int n : {15, 18, 20}) {
            CAPTURE(n);
            CHECK(symbolic_state_evolution(n).matches_antidiagonal());
            CHECK(reorder_check(n));
            CHECK(binom_cancellation(n, 3, 2).is_zero());
            CHECK(binom_cancellation(n, 3, n - 3).is_constant_one());
        }
    }
    SUBCASE("every dyad carries the overall decay flag") {
        const auto ev = symbolic_state_evolution(3);
        for (const auto& row : ev.dyads)
            for (const auto& term : row) CHECK(term.decay_factor);
    }
    SUBCASE("size bound") {
        CHECK_THROWS_AS((void)symbolic_state_evolution(21), ValidationError);
        CHECK_THROWS_AS((void)symbolic_state_evolution(-1), ValidationError);
    }
}

TEST_CASE("symbolic evaluation matches the floating-point triple sum") {
    ResonanceModel m(1.0, 0.45, 7);
    for (int n : {1, 3, 6})
        for (double tg : {0.2, 1.0, 4.0}) {
            const double t = tg / m.Gamma;
            const auto ev = symbolic_state_evolution(n);
            const auto ts = evolve_state_triple_sum(m, n, t);
            const double decay = std::exp(-m.Gamma * t);
            for (int l = 0; l <= n; ++l)
                for (int j = 0; j <= n; ++j) {
                    const cplx symbolic = decay * ev.eval_raw(l, j, tg);
                    CAPTURE(n);
                    CAPTURE(tg);
                    CAPTURE(l);
                    CAPTURE(j);
                    CHECK(std::abs(symbolic - ts.c(l, j)) < 1e-12);
                }
        }
}

}  // TEST_SUITE
