#include <catch2/catch_amalgamated.hpp>

#include "weylschur/schur.hpp"
#include "weylschur/symfunc.hpp"

using namespace weylschur;

namespace {

SymFunc p_mono(std::initializer_list<int> lam, Rational c = 1) {
    return SymFunc::monomial(Basis::P, Partition(lam), c);
}

/// Independent oracle for the complete/elementary generators: coefficient of
/// t^n in exp(sum_k sgn^{k-1} p_k t^k / k), computed by expanding the finite
/// exponential series (degree-truncated polynomial in t with SymFunc
/// coefficients).
SymFunc exp_series_gen(int n, bool elementary) {
    // poly[d] = coefficient of t^d
    std::vector<SymFunc> arg(n + 1, SymFunc::zero());
    for (int k = 1; k <= n; ++k) {
        Rational c(1, k);
        if (elementary && k % 2 == 0) c = -c;
        arg[k] = p_mono({k}, c);
    }
    std::vector<SymFunc> acc(n + 1, SymFunc::zero());
    acc[0] = SymFunc::one();
    std::vector<SymFunc> power = acc;  // arg^j / j!
    for (int j = 1; j <= n; ++j) {
        std::vector<SymFunc> next(n + 1, SymFunc::zero());
        for (int a = 0; a <= n; ++a)
            for (int b = 1; a + b <= n; ++b)
                next[a + b] = next[a + b] + power[a] * arg[b];
        for (int d = 0; d <= n; ++d) {
            next[d] = next[d] * Rational(1, j);
            acc[d] = acc[d] + next[d];
        }
        power = std::move(next);
    }
    return acc[n];
}

}  // namespace

TEST_CASE("ring operations", "[symring]") {
    const SymFunc f = p_mono({2}) + p_mono({1, 1}, Rational(1, 2));
    const SymFunc g = p_mono({1});

    CHECK((f + f).coeff(Partition{2}) == 2);
    CHECK((f - f).is_zero());
    CHECK((f * Rational(3)).coeff(Partition{1, 1}) == Rational(3, 2));
    CHECK((-f).coeff(Partition{2}) == -1);

    // monomial product merges index partitions
    const SymFunc prod = f * g;
    CHECK(prod.coeff(Partition{2, 1}) == 1);
    CHECK(prod.coeff(Partition{1, 1, 1}) == Rational(1, 2));

    CHECK(f.degree() == 2);
    CHECK(f.component(2) == f);
    CHECK(f.component(1).is_zero());
    CHECK(SymFunc::zero().is_zero());
    CHECK(SymFunc::one().coeff(Partition{}) == 1);

    SECTION("zero coefficients are never stored") {
        SymFunc h = f;
        h.add_term(Partition{2}, -1);
        CHECK(h.terms().count(Partition{2}) == 0);
        CHECK(SymFunc::monomial(Basis::P, Partition{3}, 0).is_zero());
    }

    SECTION("basis mismatch throws") {
        const SymFunc hh = SymFunc::monomial(Basis::H, Partition{1});
        const SymFunc ee = SymFunc::monomial(Basis::E, Partition{1});
        CHECK_THROWS_AS(hh + ee, std::invalid_argument);
        CHECK_THROWS_AS(hh * ee, std::invalid_argument);
    }

    SECTION("product is undefined in the Schur basis") {
        const SymFunc s = SymFunc::monomial(Basis::S, Partition{1});
        CHECK_THROWS_AS(s * s, std::invalid_argument);
    }
}

TEST_CASE("complete and elementary generators", "[symring]") {
    SECTION("frozen small values") {
        CHECK(gen_h(0) == SymFunc::one());
        CHECK(gen_h(1) == p_mono({1}));
        CHECK(gen_h(2) == p_mono({2}, Rational(1, 2)) + p_mono({1, 1}, Rational(1, 2)));
        CHECK(gen_h(3) == p_mono({3}, Rational(1, 3)) + p_mono({2, 1}, Rational(1, 2)) +
                              p_mono({1, 1, 1}, Rational(1, 6)));
        CHECK(gen_e(2) == p_mono({1, 1}, Rational(1, 2)) - p_mono({2}, Rational(1, 2)));
        CHECK(gen_e(3) == p_mono({3}, Rational(1, 3)) - p_mono({2, 1}, Rational(1, 2)) +
                              p_mono({1, 1, 1}, Rational(1, 6)));
        CHECK(gen_h(-1).is_zero());
        CHECK(gen_e(-3).is_zero());
    }

    SECTION("match the exponential generating-series oracle") {
        for (int n = 0; n <= 8; ++n) {
            CHECK(gen_h(n) == exp_series_gen(n, false));
            CHECK(gen_e(n) == exp_series_gen(n, true));
        }
    }

    SECTION("Newton recurrences hold as ring identities") {
        for (int n = 1; n <= 12; ++n) {
            SymFunc rh = SymFunc::zero(), re = SymFunc::zero();
            for (int k = 1; k <= n; ++k) {
                rh = rh + p_mono({k}) * gen_h(n - k);
                SymFunc t = p_mono({k}) * gen_e(n - k);
                re = (k % 2 == 1) ? re + t : re - t;
            }
            CHECK(gen_h(n) * Rational(n) == rh);
            CHECK(gen_e(n) * Rational(n) == re);
        }
    }
}

TEST_CASE("hat and check generators", "[symring]") {
    CHECK(gen_hhat(0) == SymFunc::one());
    CHECK(gen_hhat(1) == gen_h(1));
    CHECK(gen_hhat(2) == gen_h(2) - SymFunc::one());
    CHECK(gen_ehat(3) == gen_e(3) - gen_e(1));
    CHECK(gen_hcheck(4) == gen_h(4) + gen_h(2) + SymFunc::one());
    CHECK(gen_echeck(3) == gen_e(3) + gen_e(1));
    CHECK(gen_hcheck(0) == SymFunc::one());

    SECTION("hat and check invert each other against h") {
        for (int n = 0; n <= 12; ++n) {
            // check minus shifted check telescopes back to h
            CHECK(gen_hcheck(n) - gen_hcheck(n - 2) == gen_h(n));
            CHECK(gen_echeck(n) - gen_echeck(n - 2) == gen_e(n));
            // summing hats telescopes back to h
            SymFunc acc_h = SymFunc::zero(), acc_e = SymFunc::zero();
            for (int m = n; m >= 0; m -= 2) {
                acc_h = acc_h + gen_hhat(m);
                acc_e = acc_e + gen_ehat(m);
            }
            CHECK(acc_h == gen_h(n));
            CHECK(acc_e == gen_e(n));
        }
    }
}

TEST_CASE("basis conversions round-trip", "[symring]") {
    for (const auto& lam : partitions_up_to(10)) {
        const SymFunc f = SymFunc::monomial(Basis::P, lam);
        const SymFunc via_h = to_h_basis(f);
        const SymFunc via_e = to_e_basis(f);
        CHECK(via_h.basis() == Basis::H);
        CHECK(via_e.basis() == Basis::E);
        CHECK(to_p_basis(via_h) == f);
        CHECK(to_p_basis(via_e) == f);
    }

    SECTION("h_n expressed in E and back") {
        for (int n = 0; n <= 8; ++n) {
            CHECK(to_p_basis(to_e_basis(gen_h(n))) == gen_h(n));
            CHECK(to_h_basis(gen_h(n)) == SymFunc::monomial(Basis::H, Partition{n == 0 ? 0 : n}));
        }
    }
}

TEST_CASE("omega involution", "[symring]") {
    CHECK(omega(p_mono({2})) == p_mono({2}, -1));
    CHECK(omega(p_mono({3})) == p_mono({3}));
    CHECK(omega(p_mono({2, 1})) == p_mono({2, 1}, -1));
    CHECK(omega(SymFunc::one()) == SymFunc::one());

    SECTION("swaps h and e") {
        for (int n = 0; n <= 8; ++n) {
            CHECK(omega(gen_h(n)) == gen_e(n));
            CHECK(omega(gen_e(n)) == gen_h(n));
        }
    }

    SECTION("is an involutive ring homomorphism") {
        const SymFunc f = gen_h(3) + p_mono({2, 2}, Rational(5, 3));
        const SymFunc g = gen_e(2) - p_mono({1});
        CHECK(omega(omega(f)) == f);
        CHECK(omega(f * g) == omega(f) * omega(g));
        CHECK(omega(f + g) == omega(f) + omega(g));
    }

    SECTION("conjugates Schur functions") {
        for (const auto& lam : partitions_up_to(7))
            CHECK(omega(schur(lam)) == schur(lam.conjugate()));
    }
}

TEST_CASE("hall inner product", "[symring]") {
    CHECK(hall_inner(p_mono({1, 1}), p_mono({1, 1})) == 2);
    CHECK(hall_inner(p_mono({2}), p_mono({1, 1})) == 0);
    CHECK(hall_inner(p_mono({3}), p_mono({3})) == 3);
    CHECK(hall_inner(gen_h(2), gen_h(2)) == 1);
    // <h_2, e_2> = <(p2+p11)/2, (p11-p2)/2> = (-2 + 2)/4 = 0
    CHECK(hall_inner(gen_h(2), gen_e(2)) == 0);

    SECTION("h and the power sums are dual to the monomial/forgotten data") {
        // <h_n, p_n> = 1 for all n (h_n has coefficient 1/n on p_n, z_(n) = n)
        for (int n = 1; n <= 8; ++n) CHECK(hall_inner(gen_h(n), p_mono({n})) == 1);
    }

    SECTION("Schur functions are orthonormal") {
        for (const auto& lam : partitions_up_to(5))
            for (const auto& mu : partitions_up_to(5))
                CHECK(hall_inner(schur(lam), schur(mu)) == (lam == mu ? 1 : 0));
    }

    SECTION("omega is an isometry") {
        const SymFunc f = gen_h(3) * gen_h(1);
        const SymFunc g = p_mono({2, 2}) + p_mono({4}, Rational(1, 3));
        CHECK(hall_inner(omega(f), omega(g)) == hall_inner(f, g));
    }
}

TEST_CASE("schur functions", "[symring]") {
    CHECK(schur(Partition{}) == SymFunc::one());
    CHECK(schur(Partition{2}) == gen_h(2));
    CHECK(schur(Partition{1, 1}) == gen_e(2));
    CHECK(schur(Partition{2, 1}) ==
          p_mono({1, 1, 1}, Rational(1, 3)) - p_mono({3}, Rational(1, 3)));

    SECTION("Schur-basis round trip") {
        for (const auto& lam : partitions_up_to(9)) {
            const SymFunc f = SymFunc::monomial(Basis::P, lam);
            const SymFunc s = to_schur_expansion(f);
            CHECK(s.basis() == Basis::S);
            CHECK(from_schur(s) == f);
        }
    }

    SECTION("frozen expansion example") {
        // e_2 e_1 = s_{2,1} + s_{1,1,1}
        const SymFunc f = gen_e(2) * gen_e(1);
        const SymFunc s = to_schur_expansion(f);
        CHECK(s == SymFunc::monomial(Basis::S, Partition{2, 1}) +
                       SymFunc::monomial(Basis::S, Partition{1, 1, 1}));
        // h_2 h_1 = s_3 + s_{2,1}
        const SymFunc g = to_schur_expansion(gen_h(2) * gen_h(1));
        CHECK(g == SymFunc::monomial(Basis::S, Partition{3}) +
                       SymFunc::monomial(Basis::S, Partition{2, 1}));
    }

    SECTION("to_basis dispatch") {
        const SymFunc f = gen_h(2);
        CHECK(to_basis(f, Basis::H) == SymFunc::monomial(Basis::H, Partition{2}));
        CHECK(to_basis(f, Basis::S) == SymFunc::monomial(Basis::S, Partition{2}));
        CHECK(to_basis(to_basis(f, Basis::S), Basis::P) == f);
    }
}

TEST_CASE("serialization", "[symring]") {
    SECTION("exact JSON form, descending weight then lex") {
        const nlohmann::json j = to_json(gen_h(2));
        CHECK(j.dump() ==
              R"({"basis":"p","terms":[{"coeff":"1/2","partition":[2]},{"coeff":"1/2","partition":[1,1]}]})");
    }

    SECTION("JSON round trip") {
        const SymFunc samples[] = {
            SymFunc::zero(),
            SymFunc::one(),
            gen_h(4) - gen_e(3) * p_mono({1}, Rational(-7, 5)),
            to_h_basis(gen_e(3)),
            to_schur_expansion(gen_h(2) * gen_h(2)),
        };
        for (const SymFunc& f : samples) CHECK(symfunc_from_json(to_json(f)) == f);
    }

    SECTION("text rendering") {
        CHECK(to_text(SymFunc::zero()) == "0");
        CHECK(to_text(SymFunc::one()) == "1");
        CHECK(to_text(gen_h(2)) == "1/2*p[2] + 1/2*p[1,1]");
        CHECK(to_text(to_h_basis(gen_hhat(2))) == "h[2] - 1");
        CHECK(to_text(p_mono({2}, -1) + p_mono({1, 1}, 2)) == "-p[2] + 2*p[1,1]");
    }

    SECTION("rational literals") {
        CHECK(to_string(Rational(-3, 6)) == "-1/2");
        CHECK(to_string(Rational(4)) == "4");
        CHECK(rational_from_string("7/3") == Rational(7, 3));
        CHECK(rational_from_string("-2") == Rational(-2));
        CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
        CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    }
}
