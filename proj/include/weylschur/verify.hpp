#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "weylschur/schur.hpp"
#include "weylschur/specialize.hpp"
#include "weylschur/vertexops.hpp"
#include "weylschur/weyldet.hpp"

namespace weylschur {

/// One identity instance checked by a verification suite. `replay` is a
/// machine-readable JSON snippet that reproduces the instance.
struct CheckResult {
    std::string name;
    bool pass;
    std::string replay;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    int passed() const {
        int n = 0;
        for (const auto& c : checks) n += c.pass;
        return n;
    }
    bool all_pass() const { return passed() == static_cast<int>(checks.size()); }
};

namespace detail {

inline std::string replay_json(const std::string& suite, const std::string& extra) {
    return "{\"suite\":\"" + suite + "\"," + extra + "}";
}

/// Small random nonzero rational, for exact identity testing at generic
/// points.
inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    int n = 0;
    while (n == 0) n = num(rng);
    return Rational(n, den(rng));
}

/// Draws k distinct nonzero rationals avoiding z_i z_j = 1.
inline std::vector<Rational> random_generic_point(std::mt19937_64& rng, int k) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Rational> zs;
        for (int i = 0; i < k; ++i) zs.push_back(random_rational(rng));
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            for (int j = i; j < k && ok; ++j) {
                if (j > i && zs[i] == zs[j]) ok = false;
                if (zs[i] * zs[j] == 1) ok = false;
            }
        if (ok) return zs;
    }
    throw std::runtime_error("random_generic_point: rejection sampling failed");
}

}  // namespace detail

/// Clifford residuals for all six operator pairs over a mode-index box and
/// all power-sum monomials up to max_weight.
inline SuiteReport verify_clifford(int range, int max_weight) {
    SuiteReport rep{"clifford", {}};
    static constexpr std::pair<CliffordPair, const char*> kPairs[] = {
        {CliffordPair::YY, "YY"},
        {CliffordPair::YSTAR_YSTAR, "Y*Y*"},
        {CliffordPair::Y_YSTAR, "YY*"},
        {CliffordPair::WW, "WW"},
        {CliffordPair::WSTAR_WSTAR, "W*W*"},
        {CliffordPair::W_WSTAR, "WW*"},
    };
    for (const auto& [pair, pname] : kPairs)
        for (int m = -range; m <= range; ++m)
            for (int n = -range; n <= range; ++n)
                for (const auto& mu : partitions_up_to(max_weight)) {
                    const SymFunc f = SymFunc::monomial(Basis::P, mu);
                    const bool ok = clifford_residual(pair, m, n, f).is_zero();
                    rep.checks.push_back(
                        {std::string(pname) + " m=" + std::to_string(m) +
                             " n=" + std::to_string(n) + " mu=" + mu.str(),
                         ok,
                         detail::replay_json("clifford",
                                             "\"pair\":\"" + std::string(pname) +
                                                 "\",\"m\":" + std::to_string(m) +
                                                 ",\"n\":" + std::to_string(n) +
                                                 ",\"mu\":" + mu.str())});
                }
    return rep;
}

/// The dual-basis theorem: lowering word equals signed starred word on the
/// conjugate, for all three families, plus integrality of the Schur
/// expansions.
inline SuiteReport verify_dualbasis(int max_weight) {
    SuiteReport rep{"dualbasis", {}};
    for (const auto& lam : partitions_up_to(max_weight)) {
        const std::string replay =
            detail::replay_json("dualbasis", "\"lambda\":" + lam.str());
        rep.checks.push_back(
            {"Y-word = (-1)^|l| Y*-word' " + lam.str(),
             sp_vertex(lam) == sp_dual_vertex(lam), replay});
        rep.checks.push_back(
            {"W-word = (-1)^|l| W*-word' " + lam.str(),
             o_vertex(lam) == o_dual_vertex(lam), replay});
        rep.checks.push_back(
            {"S-word = s = (-1)^|l| S*-word' " + lam.str(),
             schur_vertex(lam) == schur(lam) && schur_dual_vertex(lam) == schur(lam),
             replay});
        bool integral = true;
        const SymFunc sp_exp = to_schur_expansion(sp_vertex(lam));
        const SymFunc o_exp = to_schur_expansion(o_vertex(lam));
        for (const auto& [mu, c] : sp_exp.terms())
            if (denominator(c) != 1) integral = false;
        for (const auto& [mu, c] : o_exp.terms())
            if (denominator(c) != 1) integral = false;
        rep.checks.push_back({"Z-basis (integer Schur coeffs) " + lam.str(), integral, replay});
    }
    return rep;
}

/// The eight determinant formulae: all four symplectic expressions agree and
/// all four orthogonal expressions agree.
inline SuiteReport verify_dets8(int max_weight) {
    SuiteReport rep{"dets8", {}};
    static constexpr DetFormula kSp[] = {
        {CharKind::SP, GenFamily::H, DetShape::PLUS, false},
        {CharKind::SP, GenFamily::HCHECK, DetShape::MINUS, false},
        {CharKind::SP, GenFamily::E, DetShape::MINUS, true},
        {CharKind::SP, GenFamily::EHAT, DetShape::PLUS, true},
    };
    static constexpr DetFormula kO[] = {
        {CharKind::O, GenFamily::H, DetShape::MINUS, false},
        {CharKind::O, GenFamily::HHAT, DetShape::PLUS, false},
        {CharKind::O, GenFamily::E, DetShape::PLUS, true},
        {CharKind::O, GenFamily::ECHECK, DetShape::MINUS, true},
    };
    static constexpr const char* kSpNames[] = {"h-plus", "hcheck-minus", "e-minus'", "ehat-plus'"};
    static constexpr const char* kONames[] = {"h-minus", "hhat-plus", "e-plus'", "echeck-minus'"};
    for (const auto& lam : partitions_up_to(max_weight)) {
        const std::string replay = detail::replay_json("dets8", "\"lambda\":" + lam.str());
        const SymFunc sp0 = sp_det(lam, kSp[0]);
        for (int i = 1; i < 4; ++i)
            rep.checks.push_back({"sp " + std::string(kSpNames[i]) + " " + lam.str(),
                                  sp_det(lam, kSp[i]) == sp0, replay});
        const SymFunc o0 = o_det(lam, kO[0]);
        for (int i = 1; i < 4; ++i)
            rep.checks.push_back({"o " + std::string(kONames[i]) + " " + lam.str(),
                                  o_det(lam, kO[i]) == o0, replay});
    }
    return rep;
}

/// Both Frobenius mode-word variants against the determinant values.
inline SuiteReport verify_frobenius(int max_weight, int max_rank = 3) {
    SuiteReport rep{"frobenius", {}};
    for (const auto& lam : partitions_up_to(max_weight)) {
        const FrobeniusCoords fc = to_frobenius(lam);
        if (fc.rank() > max_rank) continue;
        const std::string replay =
            detail::replay_json("frobenius", "\"lambda\":" + lam.str());
        const SymFunc s = schur(lam);
        const SymFunc sp = sp_det(lam);
        const SymFunc o = o_det(lam);
        for (FrobVariant v : {FrobVariant::CREATION_FIRST, FrobVariant::ANNIHILATION_FIRST}) {
            const char* vn = v == FrobVariant::CREATION_FIRST ? "cf" : "af";
            rep.checks.push_back({"schur " + std::string(vn) + " " + lam.str(),
                                  frobenius_vertex(VertexKind::SCHUR, fc, v) == s, replay});
            rep.checks.push_back({"sp " + std::string(vn) + " " + lam.str(),
                                  frobenius_vertex(VertexKind::SP, fc, v) == sp, replay});
            rep.checks.push_back({"o " + std::string(vn) + " " + lam.str(),
                                  frobenius_vertex(VertexKind::O, fc, v) == o, replay});
        }
    }
    return rep;
}

/// Three-way agreement of the Vandermonde-like kernels at seeded generic
/// points.
inline SuiteReport verify_vandermonde(int kmax, std::uint64_t seed, int points = 20) {
    SuiteReport rep{"vandermonde", {}};
    std::mt19937_64 rng(seed);
    static constexpr std::pair<VanKind, const char*> kKinds[] = {
        {VanKind::D_TYPE, "D"}, {VanKind::C_TYPE, "C"}, {VanKind::C_REVERSED, "Crev"}};
    for (int k = 1; k <= kmax; ++k)
        for (int p = 0; p < points; ++p) {
            const auto zs = detail::random_generic_point(rng, k);
            std::string pt = "[";
            for (int i = 0; i < k; ++i)
                pt += (i ? "," : "") + std::string("\"") + to_string(zs[i]) + "\"";
            pt += "]";
            for (const auto& [kind, kn] : kKinds) {
                const VanResult r = vandermonde_kernel(kind, k, zs);
                rep.checks.push_back(
                    {std::string(kn) + " k=" + std::to_string(k) + " point#" +
                         std::to_string(p),
                     r.det == r.product && r.det == r.sum,
                     detail::replay_json("vandermonde", "\"kind\":\"" + std::string(kn) +
                                                            "\",\"k\":" + std::to_string(k) +
                                                            ",\"point\":" + pt)});
            }
        }
    return rep;
}

/// Littlewood duality: omega(sp_lambda) = o_{lambda'}.
inline SuiteReport verify_duality(int max_weight) {
    SuiteReport rep{"duality", {}};
    for (const auto& lam : partitions_up_to(max_weight))
        rep.checks.push_back({"omega(sp) = o' " + lam.str(),
                              omega(sp_det(lam)) == o_det(lam.conjugate()),
                              detail::replay_json("duality", "\"lambda\":" + lam.str())});
    return rep;
}

/// Universal characters against brute-force Weyl-group oracles at seeded
/// generic points. For O_ODD the drawn rationals are the square roots y_i
/// (variables x_i = y_i^2).
inline SuiteReport verify_characters(int max_weight, std::uint64_t seed,
                                     int points_per_case = 5) {
    SuiteReport rep{"characters", {}};
    std::mt19937_64 rng(seed);
    auto run = [&](GroupKind kind, const char* gname, int rank, const Partition& lam) {
        for (int p = 0; p < points_per_case; ++p) {
            for (int attempt = 0;; ++attempt) {
                const auto xs = detail::random_generic_point(rng, rank);
                try {
                    const CrosscheckResult r = character_crosscheck(kind, lam, xs);
                    std::string pt = "[";
                    for (int i = 0; i < rank; ++i)
                        pt += (i ? "," : "") + std::string("\"") + to_string(xs[i]) + "\"";
                    pt += "]";
                    rep.checks.push_back(
                        {std::string(gname) + " n=" + std::to_string(rank) + " " +
                             lam.str() + " point#" + std::to_string(p),
                         r.universal == r.oracle,
                         detail::replay_json(
                             "characters", "\"group\":\"" + std::string(gname) +
                                               "\",\"rank\":" + std::to_string(rank) +
                                               ",\"lambda\":" + lam.str() +
                                               ",\"point\":" + pt)});
                    break;
                } catch (const degenerate_point_error&) {
                    if (attempt > 100)
                        throw std::runtime_error("verify_characters: cannot find generic point");
                }
            }
        }
    };
    for (int rank = 1; rank <= 3; ++rank)
        for (const auto& lam : partitions_up_to(max_weight)) {
            if (lam.length() <= rank) {
                run(GroupKind::SP, "Sp", rank, lam);
                run(GroupKind::O_ODD, "SOodd", rank, lam);
            }
            if (rank >= 2 && lam.length() < rank) run(GroupKind::O_EVEN, "SOeven", rank, lam);
        }
    return rep;
}

}  // namespace weylschur
