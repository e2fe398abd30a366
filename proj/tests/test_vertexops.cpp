#include <catch2/catch_amalgamated.hpp>

#include "weylschur/schur.hpp"
#include "weylschur/vertexops.hpp"
#include "weylschur/weyldet.hpp"

using namespace weylschur;

namespace {

SymFunc p_mono(std::initializer_list<int> lam, Rational c = 1) {
    return SymFunc::monomial(Basis::P, Partition(lam), c);
}

/// d/dp_k on a P-basis polynomial: p_lambda -> m_k(lambda) p_{lambda - k}.
SymFunc dp(const SymFunc& f, int k) {
    SymFunc out;
    for (const auto& [lam, c] : f.terms()) {
        int mult = 0;
        for (int part : lam.parts()) mult += part == k;
        if (mult == 0) continue;
        std::vector<int> reduced = lam.parts();
        reduced.erase(std::find(reduced.begin(), reduced.end(), k));
        out.add_term(Partition(std::move(reduced)), c * mult);
    }
    return out;
}

/// Independent oracle for the annihilation exponential: the substitution
/// p_k -> p_k + s u_k is exp(sum_k s u_k d/dp_k) by Taylor's theorem, and the
/// derivation strictly lowers weight, so the exponential series is finite.
LaurentSlice exp_derivation_oracle(const OperatorSpec& spec, const SymFunc& f) {
    const Rational s(spec.annih_sign);
    const int N = static_cast<int>(f.degree());
    LaurentSlice acc;
    acc.add(0, f);
    LaurentSlice power = acc;  // D^j f / j!
    for (int j = 1; j <= N; ++j) {
        LaurentSlice next;
        for (const auto& [e, g] : power.coeffs)
            for (int k = 1; k <= N; ++k) {
                const SymFunc d = dp(g, k) * s * Rational(1, j);
                if (d.is_zero()) continue;
                next.add(e - k, d);
                if (spec.two_sided) next.add(e + k, d);
            }
        for (const auto& [e, g] : next.coeffs) acc.add(e, g);
        power = std::move(next);
    }
    return acc;
}

bool slices_equal(const LaurentSlice& a, const LaurentSlice& b) {
    return a.coeffs == b.coeffs;
}

SymFunc word(std::initializer_list<std::pair<Family, int>> w) {
    return mode_word(std::vector<std::pair<Family, int>>(w));
}

}  // namespace

TEST_CASE("annihilation exponential", "[vertexops]") {
    const OperatorSpec S = spec_for(Family::S);
    const OperatorSpec Sstar = spec_for(Family::SStar);
    const OperatorSpec Y = spec_for(Family::Y);

    SECTION("frozen slices") {
        const LaurentSlice on_one = apply_annihilation(S, SymFunc::one());
        REQUIRE(on_one.coeffs.size() == 1);
        CHECK(on_one.at(0) == SymFunc::one());

        // one-sided, s = -1 on p_1: p_1 - z^{-1}
        const LaurentSlice s_p1 = apply_annihilation(S, p_mono({1}));
        CHECK(s_p1.at(0) == p_mono({1}));
        CHECK(s_p1.at(-1) == -SymFunc::one());
        CHECK(s_p1.coeffs.size() == 2);

        // one-sided, s = +1 (starred) on p_1: p_1 + z^{-1}
        const LaurentSlice star_p1 = apply_annihilation(Sstar, p_mono({1}));
        CHECK(star_p1.at(-1) == SymFunc::one());

        // two-sided on p_1: p_1 - z^{-1} - z
        const LaurentSlice y_p1 = apply_annihilation(Y, p_mono({1}));
        CHECK(y_p1.at(0) == p_mono({1}));
        CHECK(y_p1.at(-1) == -SymFunc::one());
        CHECK(y_p1.at(1) == -SymFunc::one());

        // one-sided on p_2: p_2 - z^{-2}
        const LaurentSlice s_p2 = apply_annihilation(S, p_mono({2}));
        CHECK(s_p2.at(0) == p_mono({2}));
        CHECK(s_p2.at(-2) == -SymFunc::one());
        CHECK(s_p2.at(-1).is_zero());

        // two-sided on p_1^2: (p_1 - z^{-1} - z)^2
        const LaurentSlice y_p11 = apply_annihilation(Y, p_mono({1, 1}));
        CHECK(y_p11.at(0) == p_mono({1, 1}) + SymFunc::one() * Rational(2));
        CHECK(y_p11.at(-1) == p_mono({1}, -2));
        CHECK(y_p11.at(-2) == SymFunc::one());
        CHECK(y_p11.at(2) == SymFunc::one());
    }

    SECTION("requires the power-sum basis") {
        CHECK_THROWS_AS(apply_annihilation(S, SymFunc::monomial(Basis::H, Partition{1})),
                        std::invalid_argument);
    }

    SECTION("matches the exponential-of-derivation oracle") {
        for (const Family fam : {Family::S, Family::SStar, Family::Y, Family::YStar}) {
            const OperatorSpec spec = spec_for(fam);
            for (const auto& mu : partitions_up_to(4)) {
                const SymFunc f = SymFunc::monomial(Basis::P, mu);
                CHECK(slices_equal(apply_annihilation(spec, f),
                                   exp_derivation_oracle(spec, f)));
            }
        }
    }
}

TEST_CASE("single modes", "[vertexops]") {
    SECTION("lowering modes on the vacuum produce the generators") {
        for (int n = 0; n <= 5; ++n) {
            CHECK(mode(Family::S, -n, SymFunc::one()) == gen_h(n));
            CHECK(mode(Family::Y, -n, SymFunc::one()) == gen_h(n));
            // W has the (1 - z^2) prefactor
            CHECK(mode(Family::W, -n, SymFunc::one()) == gen_h(n) - gen_h(n - 2));
        }
        // starred raising modes on the vacuum
        CHECK(mode(Family::SStar, 2, SymFunc::one()) == gen_e(2));
        CHECK(mode(Family::WStar, 2, SymFunc::one()) == gen_e(2));
        CHECK(mode(Family::YStar, 2, SymFunc::one()) == gen_e(2) - SymFunc::one());
        // odd starred modes pick up the (-1)^m sign from the creation series
        CHECK(mode(Family::YStar, 3, SymFunc::one()) == gen_e(1) - gen_e(3));
        CHECK(mode(Family::SStar, 3, SymFunc::one()) == -gen_e(3));
    }

    SECTION("all six families fix the vacuum at mode zero") {
        for (const Family fam : {Family::S, Family::SStar, Family::Y, Family::YStar,
                                 Family::W, Family::WStar})
            CHECK(mode(fam, 0, SymFunc::one()) == SymFunc::one());
    }

    SECTION("vanishing bounds") {
        // plain modes annihilate above the degree
        CHECK(mode(Family::S, 1, SymFunc::one()).is_zero());
        CHECK(mode(Family::Y, 1, SymFunc::one()).is_zero());
        CHECK(mode(Family::W, 3, p_mono({2})).is_zero());
        CHECK(mode(Family::Y, 4, p_mono({2, 1})).is_zero());
        // starred modes annihilate below minus the degree
        CHECK(mode(Family::SStar, -1, SymFunc::one()).is_zero());
        CHECK(mode(Family::WStar, -3, p_mono({2})).is_zero());
        CHECK(mode(Family::YStar, -4, p_mono({2, 1})).is_zero());
    }

    SECTION("degree bookkeeping for the one-sided family") {
        // S_n is homogeneous of degree -n, S*_n of degree +n.
        for (const auto& mu : partitions_up_to(4)) {
            const SymFunc f = SymFunc::monomial(Basis::P, mu);
            const long d = mu.weight();
            for (int n = -4; n <= 4; ++n) {
                const SymFunc plain = mode(Family::S, n, f);
                if (!plain.is_zero()) {
                    CHECK(plain.weights().size() == 1);
                    CHECK(plain.degree() == d - n);
                }
                const SymFunc starred = mode(Family::SStar, n, f);
                if (!starred.is_zero()) {
                    CHECK(starred.weights().size() == 1);
                    CHECK(starred.degree() == d + n);
                }
            }
        }
    }
}

TEST_CASE("mode words and realizations", "[vertexops]") {
    CHECK(mode_word({}) == SymFunc::one());
    CHECK(word({{Family::Y, -1}, {Family::Y, -1}}) == sp_vertex(Partition{1, 1}));

    SECTION("frozen realizations") {
        CHECK(sp_vertex(Partition{}) == SymFunc::one());
        CHECK(sp_vertex(Partition{1}) == p_mono({1}));
        CHECK(sp_vertex(Partition{1, 1}) == gen_e(2) - SymFunc::one());
        CHECK(o_vertex(Partition{2}) == gen_h(2) - SymFunc::one());
        CHECK(schur_vertex(Partition{2, 1}) == schur(Partition{2, 1}));
    }

    SECTION("vertex words agree with the determinant values") {
        for (const auto& lam : partitions_up_to(6)) {
            CHECK(schur_vertex(lam) == schur(lam));
            CHECK(sp_vertex(lam) == sp_det(lam));
            CHECK(o_vertex(lam) == o_det(lam));
        }
    }

    SECTION("dual starred words agree with the plain words") {
        for (const auto& lam : partitions_up_to(6)) {
            CHECK(schur_dual_vertex(lam) == schur_vertex(lam));
            CHECK(sp_dual_vertex(lam) == sp_vertex(lam));
            CHECK(o_dual_vertex(lam) == o_vertex(lam));
        }
    }
}

TEST_CASE("frobenius mode words", "[vertexops]") {
    SECTION("frozen examples") {
        const FrobeniusCoords hook = to_frobenius(Partition{1, 1});  // (0 | 1)
        CHECK(frobenius_vertex(VertexKind::SP, hook, FrobVariant::CREATION_FIRST) ==
              gen_e(2) - SymFunc::one());
        CHECK(frobenius_vertex(VertexKind::SP, hook, FrobVariant::ANNIHILATION_FIRST) ==
              gen_e(2) - SymFunc::one());

        const FrobeniusCoords row = to_frobenius(Partition{2});  // (1 | 0)
        CHECK(frobenius_vertex(VertexKind::O, row, FrobVariant::CREATION_FIRST) ==
              gen_h(2) - SymFunc::one());
        CHECK(frobenius_vertex(VertexKind::O, row, FrobVariant::ANNIHILATION_FIRST) ==
              gen_h(2) - SymFunc::one());

        const FrobeniusCoords sq = to_frobenius(Partition{2, 2});  // (1,0 | 1,0)
        CHECK(frobenius_vertex(VertexKind::SCHUR, sq, FrobVariant::CREATION_FIRST) ==
              schur(Partition{2, 2}));
        CHECK(frobenius_vertex(VertexKind::SCHUR, sq, FrobVariant::ANNIHILATION_FIRST) ==
              schur(Partition{2, 2}));

        CHECK(frobenius_vertex(VertexKind::SP, to_frobenius(Partition{}),
                               FrobVariant::CREATION_FIRST) == SymFunc::one());
    }

    SECTION("both variants match the determinant values, rank <= 2") {
        for (const auto& lam : partitions_up_to(6)) {
            const FrobeniusCoords fc = to_frobenius(lam);
            if (fc.rank() > 2) continue;
            for (const FrobVariant v :
                 {FrobVariant::CREATION_FIRST, FrobVariant::ANNIHILATION_FIRST}) {
                CHECK(frobenius_vertex(VertexKind::SCHUR, fc, v) == schur(lam));
                CHECK(frobenius_vertex(VertexKind::SP, fc, v) == sp_det(lam));
                CHECK(frobenius_vertex(VertexKind::O, fc, v) == o_det(lam));
            }
        }
    }

    SECTION("invalid coordinates are rejected") {
        CHECK_THROWS_AS(
            frobenius_vertex(VertexKind::SP, {{1, 1}, {1, 0}}, FrobVariant::CREATION_FIRST),
            std::invalid_argument);
    }
}

TEST_CASE("clifford relations", "[vertexops]") {
    SECTION("the mixed relation carries the delta normalization") {
        // X_2 X*_2 + X*_3 X_3 acts as the identity on the vacuum.
        for (const Family plain : {Family::Y, Family::W}) {
            const Family star = plain == Family::Y ? Family::YStar : Family::WStar;
            const SymFunc lhs = mode(plain, 2, mode(star, 2, SymFunc::one())) +
                                mode(star, 3, mode(plain, 3, SymFunc::one()));
            CHECK(lhs == SymFunc::one());
        }
    }

    SECTION("all six residuals vanish on a small box") {
        for (const CliffordPair pair :
             {CliffordPair::YY, CliffordPair::YSTAR_YSTAR, CliffordPair::Y_YSTAR,
              CliffordPair::WW, CliffordPair::WSTAR_WSTAR, CliffordPair::W_WSTAR})
            for (int m = -2; m <= 2; ++m)
                for (int n = -2; n <= 2; ++n)
                    for (const auto& mu : partitions_up_to(3))
                        CHECK(clifford_residual(pair, m, n,
                                                SymFunc::monomial(Basis::P, mu))
                                  .is_zero());
    }
}

TEST_CASE("relations between the W and Y families", "[vertexops]") {
    SECTION("generating-function variants vanish") {
        for (const ModeRelation rel :
             {ModeRelation::W_FROM_Y_GF, ModeRelation::YSTAR_FROM_WSTAR_GF,
              ModeRelation::WSTAR_FROM_YSTAR_SUM, ModeRelation::Y_FROM_W_SUM})
            for (int n = -4; n <= 4; ++n)
                for (const auto& mu : partitions_up_to(4))
                    CHECK(mode_relation_residual(rel, n, SymFunc::monomial(Basis::P, mu))
                              .is_zero());
    }

    SECTION("the alternative printed variants do not vanish") {
        // W_0 . 1 - Y_0 . 1 + Y_{-2} . 1 = 1 - 1 + h_2
        CHECK(mode_relation_residual(ModeRelation::W_FROM_Y_PRINTED, 0, SymFunc::one()) ==
              gen_h(2));
        // Y*_0 . 1 - W*_0 . 1 + W*_2 . 1 = 1 - 1 + e_2
        CHECK(mode_relation_residual(ModeRelation::YSTAR_FROM_WSTAR_PRINTED, 0,
                                     SymFunc::one()) == gen_e(2));
    }
}
