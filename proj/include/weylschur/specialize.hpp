#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "weylschur/symfunc.hpp"
#include "weylschur/weyldet.hpp"

namespace weylschur {

/// Thrown by the Weyl-character oracle when the chosen point kills the
/// denominator; the caller should redraw and retry.
struct degenerate_point_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class PointKind { SYMPLECTIC, ODD_ORTHOGONAL, EVEN_ORTHOGONAL, RAW };

/// Specialization homomorphism Lambda -> Q, recorded by the values it
/// assigns to p_1..p_N.
struct EvalPoint {
    PointKind kind = PointKind::RAW;
    std::vector<Rational> xs;  // originating variables, if any
    std::map<int, Rational> p_values;

    static EvalPoint raw(std::vector<Rational> values) {
        EvalPoint pt;
        pt.kind = PointKind::RAW;
        for (std::size_t i = 0; i < values.size(); ++i)
            pt.p_values[static_cast<int>(i) + 1] = values[i];
        return pt;
    }

    /// p_n = sum_i (x_i^n + x_i^{-n})
    static EvalPoint symplectic(std::vector<Rational> xs, int max_n) {
        return from_doubled(PointKind::SYMPLECTIC, std::move(xs), max_n, false);
    }

    /// p_n = 1 + sum_i (x_i^n + x_i^{-n})
    static EvalPoint odd_orthogonal(std::vector<Rational> xs, int max_n) {
        return from_doubled(PointKind::ODD_ORTHOGONAL, std::move(xs), max_n, true);
    }

    /// p_n = sum_i (x_i^n + x_i^{-n})
    static EvalPoint even_orthogonal(std::vector<Rational> xs, int max_n) {
        return from_doubled(PointKind::EVEN_ORTHOGONAL, std::move(xs), max_n, false);
    }

private:
    static EvalPoint from_doubled(PointKind kind, std::vector<Rational> xs, int max_n,
                                  bool plus_one) {
        for (const auto& x : xs)
            if (x == 0) throw std::invalid_argument("EvalPoint: zero variable");
        EvalPoint pt;
        pt.kind = kind;
        pt.xs = std::move(xs);
        for (int n = 1; n <= max_n; ++n) {
            Rational v = plus_one ? 1 : 0;
            for (const auto& x : pt.xs)
                v += pow_rational(x, n) + pow_rational(x, -n);
            pt.p_values[n] = v;
        }
        return pt;
    }
};

/// Exact value of f at the point: p_lambda -> prod_i p_values[lambda_i].
inline Rational evaluate(const SymFunc& f, const EvalPoint& pt) {
    const SymFunc fp = to_p_basis(f);
    Rational acc = 0;
    for (const auto& [lam, c] : fp.terms()) {
        Rational term = c;
        for (int part : lam.parts()) {
            auto it = pt.p_values.find(part);
            if (it == pt.p_values.end())
                throw std::invalid_argument("evaluate: p_" + std::to_string(part) +
                                            " not assigned at this point");
            term *= it->second;
        }
        acc += term;
    }
    return acc;
}

enum class LieType { B, C, D };

namespace detail {

/// Alternating sum over the signed-permutation group:
///   sum_{sigma, eps} sgn(sigma) (prod eps_i if signs count) prod_i x_i^{eps_i m_{sigma(i)}}
/// Types B and C use all sign patterns with det = prod eps_i; type D only the
/// even patterns, with det = sgn(sigma).
inline Rational signed_perm_alternant(LieType type, const std::vector<Rational>& xs,
                                      const std::vector<long>& m) {
    const int n = static_cast<int>(xs.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Rational total = 0;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        const int sgn = inv % 2 == 0 ? 1 : -1;
        for (unsigned bits = 0; bits < (1u << n); ++bits) {
            int flips = 0;
            Rational term = sgn;
            for (int i = 0; i < n; ++i) {
                const int eps = (bits >> i & 1u) ? -1 : 1;
                if (eps < 0) ++flips;
                term *= pow_rational(xs[i], eps * m[perm[i]]);
            }
            if (type == LieType::D) {
                if (flips % 2 != 0) continue;
            } else {
                if (flips % 2 != 0) term = -term;
            }
            total += term;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace detail

/// Irreducible character by brute-force Weyl summation over the
/// signed-permutation Weyl group: chi = A(lambda+rho) / A(rho).
///
/// For type B the weights lambda+rho are half-integers; the xs passed in are
/// square roots y_i of the intended variables (x_i = y_i^2), which keeps all
/// exponents integral and the arithmetic rational.
inline Rational weyl_character(LieType type, int n, const Partition& lambda,
                               const std::vector<Rational>& xs) {
    if (static_cast<int>(xs.size()) != n)
        throw std::invalid_argument("weyl_character: point size != rank");
    if (lambda.length() > n)
        throw std::invalid_argument("weyl_character: partition longer than rank");
    for (const auto& x : xs)
        if (x == 0) throw std::invalid_argument("weyl_character: zero coordinate");

    std::vector<long> top(n), rho(n);
    for (int i = 1; i <= n; ++i) {
        switch (type) {
            case LieType::C:
                rho[i - 1] = n - i + 1;
                top[i - 1] = lambda.part(i) + rho[i - 1];
                break;
            case LieType::D:
                rho[i - 1] = n - i;
                top[i - 1] = lambda.part(i) + rho[i - 1];
                break;
            case LieType::B:
                // doubled exponents over y: 2(lambda_i + n - i + 1/2)
                rho[i - 1] = 2 * (n - i) + 1;
                top[i - 1] = 2 * lambda.part(i) + rho[i - 1];
                break;
        }
    }
    const Rational denom = detail::signed_perm_alternant(type, xs, rho);
    if (denom == 0) throw degenerate_point_error("weyl_character: degenerate point");
    return detail::signed_perm_alternant(type, xs, top) / denom;
}

/// Same, but the D-type weight may have a negative last entry (needed to
/// report the chi_lambda + chi_{sigma(lambda)} split for O(2n)).
inline Rational weyl_character_weight(LieType type, int n, std::vector<long> weight,
                                      const std::vector<Rational>& xs) {
    std::vector<long> top(n), rho(n);
    for (int i = 1; i <= n; ++i) {
        switch (type) {
            case LieType::C: rho[i - 1] = n - i + 1; break;
            case LieType::D: rho[i - 1] = n - i; break;
            case LieType::B: rho[i - 1] = 2 * (n - i) + 1; break;
        }
        const long w = i <= static_cast<int>(weight.size()) ? weight[i - 1] : 0;
        top[i - 1] = (type == LieType::B ? 2 * w : w) + rho[i - 1];
    }
    const Rational denom = detail::signed_perm_alternant(type, xs, rho);
    if (denom == 0) throw degenerate_point_error("weyl_character: degenerate point");
    return detail::signed_perm_alternant(type, xs, top) / denom;
}

enum class GroupKind { SP, O_ODD, O_EVEN };

struct CrosscheckResult {
    Rational universal;
    Rational oracle;
};

/// Pairs the universal-character specialization against the brute-force Weyl
/// oracle; the caller asserts equality. For O_ODD the xs are square roots
/// y_i of the variables (x_i = y_i^2), matching the type-B convention above.
inline CrosscheckResult character_crosscheck(GroupKind kind, const Partition& lambda,
                                             const std::vector<Rational>& xs) {
    const int n = static_cast<int>(xs.size());
    const int max_n = std::max<int>(1, static_cast<int>(lambda.weight()));
    CrosscheckResult r;
    switch (kind) {
        case GroupKind::SP: {
            if (lambda.length() > n)
                throw std::invalid_argument("character_crosscheck: l(lambda) > rank");
            r.universal = evaluate(sp_det(lambda), EvalPoint::symplectic(xs, max_n));
            r.oracle = weyl_character(LieType::C, n, lambda, xs);
            break;
        }
        case GroupKind::O_ODD: {
            if (lambda.length() > n)
                throw std::invalid_argument("character_crosscheck: l(lambda) > rank");
            std::vector<Rational> squares;
            for (const auto& y : xs) squares.push_back(y * y);
            r.universal = evaluate(o_det(lambda), EvalPoint::odd_orthogonal(squares, max_n));
            r.oracle = weyl_character(LieType::B, n, lambda, xs);
            break;
        }
        case GroupKind::O_EVEN: {
            if (lambda.length() >= n)
                throw std::invalid_argument(
                    "character_crosscheck: O(2n) requires l(lambda) < rank");
            r.universal = evaluate(o_det(lambda), EvalPoint::even_orthogonal(xs, max_n));
            r.oracle = weyl_character(LieType::D, n, lambda, xs);
            break;
        }
    }
    return r;
}

}  // namespace weylschur
