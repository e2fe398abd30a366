#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "weylschur/symfunc.hpp"

namespace weylschur {

/// Square matrix of SymFunc entries.
struct RingMatrix {
    int k = 0;
    std::vector<SymFunc> entries;  // row-major, k*k

    explicit RingMatrix(int dim, Basis b = Basis::P)
        : k(dim), entries(static_cast<std::size_t>(dim) * dim, SymFunc::zero(b)) {}

    SymFunc& at(int i, int j) { return entries[static_cast<std::size_t>(i) * k + j]; }
    const SymFunc& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * k + j];
    }
};

/// Division-free determinant: Laplace expansion memoized on column subsets.
/// D[mask] is the determinant of the first popcount(mask) rows restricted to
/// the columns in mask. Cost O(2^k k) ring operations.
inline SymFunc det_over_ring(const RingMatrix& M) {
    const int k = M.k;
    if (k == 0) return SymFunc::one(M.entries.empty() ? Basis::P : Basis::P);
    if (k > 20) throw std::invalid_argument("det_over_ring: dimension too large");
    const Basis b = M.at(0, 0).basis();
    const std::uint32_t full = (1u << k) - 1;
    std::vector<SymFunc> memo(full + 1, SymFunc::zero(b));
    memo[0] = SymFunc::one(b);

    // Enumerate masks grouped by popcount so dependencies are ready.
    std::vector<std::vector<std::uint32_t>> by_count(k + 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask)
        by_count[std::popcount(mask)].push_back(mask);

    for (int r = 1; r <= k; ++r) {
        for (std::uint32_t mask : by_count[r]) {
            SymFunc acc = SymFunc::zero(b);
            int pos = 0;  // index of column j within mask
            for (int j = 0; j < k; ++j) {
                if (!(mask >> j & 1u)) continue;
                const SymFunc& entry = M.at(r - 1, j);
                if (!entry.is_zero()) {
                    SymFunc term = entry * memo[mask ^ (1u << j)];
                    acc = ((r - 1 + pos) % 2 == 0) ? acc + term : acc - term;
                }
                ++pos;
            }
            memo[mask] = std::move(acc);
        }
    }
    return memo[full];
}

enum class CharKind { SP, O };
enum class GenFamily { H, E, HHAT, EHAT, HCHECK, ECHECK };

/// PLUS: (1/2) det(g_{l_i-i+j} + g_{l_i-i-j+2});  MINUS: det(g_{l_i-i+j} - g_{l_i-i-j}).
enum class DetShape { PLUS, MINUS };

struct DetFormula {
    CharKind character;
    GenFamily generator;
    DetShape shape;
    bool conjugated;  // indices run over the conjugate partition
};

/// The eight admissible combinations of the four-determinant theorem.
inline bool admissible(const DetFormula& f) {
    using G = GenFamily;
    using S = DetShape;
    if (f.character == CharKind::SP) {
        return (f.generator == G::H && f.shape == S::PLUS && !f.conjugated) ||
               (f.generator == G::HCHECK && f.shape == S::MINUS && !f.conjugated) ||
               (f.generator == G::E && f.shape == S::MINUS && f.conjugated) ||
               (f.generator == G::EHAT && f.shape == S::PLUS && f.conjugated);
    }
    return (f.generator == G::H && f.shape == S::MINUS && !f.conjugated) ||
           (f.generator == G::HHAT && f.shape == S::PLUS && !f.conjugated) ||
           (f.generator == G::E && f.shape == S::PLUS && f.conjugated) ||
           (f.generator == G::ECHECK && f.shape == S::MINUS && f.conjugated);
}

inline SymFunc gen_of_family(GenFamily g, int n) {
    switch (g) {
        case GenFamily::H: return gen_h(n);
        case GenFamily::E: return gen_e(n);
        case GenFamily::HHAT: return gen_hhat(n);
        case GenFamily::EHAT: return gen_ehat(n);
        case GenFamily::HCHECK: return gen_hcheck(n);
        case GenFamily::ECHECK: return gen_echeck(n);
    }
    return SymFunc::zero();
}

/// det(g_{l_i-i+j} +/- g_{l_i-i-j+2 or -j}) with the PLUS shape carrying the
/// 1/2 prefactor; indices taken on lambda as given.
inline SymFunc shaped_det(const Partition& lambda, GenFamily g, DetShape shape) {
    const int k = lambda.length();
    if (k == 0) return SymFunc::one();
    RingMatrix M(k);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            const int a = lambda.part(i) - i + j;
            if (shape == DetShape::PLUS)
                M.at(i - 1, j - 1) =
                    gen_of_family(g, a) + gen_of_family(g, lambda.part(i) - i - j + 2);
            else
                M.at(i - 1, j - 1) =
                    gen_of_family(g, a) - gen_of_family(g, lambda.part(i) - i - j);
        }
    SymFunc d = det_over_ring(M);
    return shape == DetShape::PLUS ? d * Rational(1, 2) : d;
}

/// Determinant value for one of the admissible symplectic/orthogonal formulae.
inline SymFunc char_det(const Partition& lambda, const DetFormula& f) {
    if (!admissible(f))
        throw std::invalid_argument("char_det: inadmissible (character, generator, shape)");
    const Partition idx = f.conjugated ? lambda.conjugate() : lambda;
    return shaped_det(idx, f.generator, f.shape);
}

inline SymFunc sp_det(const Partition& lambda,
                      const DetFormula& f = {CharKind::SP, GenFamily::H, DetShape::PLUS, false}) {
    if (f.character != CharKind::SP)
        throw std::invalid_argument("sp_det: formula is not symplectic");
    return char_det(lambda, f);
}

inline SymFunc o_det(const Partition& lambda,
                     const DetFormula& f = {CharKind::O, GenFamily::H, DetShape::MINUS, false}) {
    if (f.character != CharKind::O)
        throw std::invalid_argument("o_det: formula is not orthogonal");
    return char_det(lambda, f);
}

/// Jacobi-Trudi determinant in the requested generator family; the result is
/// expressed in that family's basis (H or E).
inline SymFunc jacobi_trudi(const Partition& lambda, GenFamily family) {
    if (family != GenFamily::H && family != GenFamily::E)
        throw std::invalid_argument("jacobi_trudi: family must be H or E");
    const Basis b = family == GenFamily::H ? Basis::H : Basis::E;
    const Partition idx = family == GenFamily::H ? lambda : lambda.conjugate();
    const int k = idx.length();
    if (k == 0) return SymFunc::one(b);
    RingMatrix M(k, b);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            const int a = idx.part(i) - i + j;
            if (a == 0)
                M.at(i - 1, j - 1) = SymFunc::one(b);
            else if (a > 0)
                M.at(i - 1, j - 1) = SymFunc::monomial(b, Partition{a});
        }
    return det_over_ring(M);
}

// -- Vandermonde-like kernels --------------------------------------------

enum class VanKind { D_TYPE, C_TYPE, C_REVERSED };

struct VanResult {
    Rational det;
    Rational product;
    Rational sum;
};

namespace detail {

inline Rational rational_det(std::vector<std::vector<Rational>> m) {
    const std::size_t k = m.size();
    // Gaussian elimination with exact pivoting; exact over the rationals.
    Rational det = 1;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && m[pivot][col] == 0) ++pivot;
        if (pivot == k) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < k; ++row) {
            if (m[row][col] == 0) continue;
            const Rational factor = m[row][col] / m[col][col];
            for (std::size_t j = col; j < k; ++j) m[row][j] -= factor * m[col][j];
        }
    }
    return det;
}

inline void for_each_permutation(int k, const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    // Iterate in lexicographic order, tracking sign by inversion count.
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inversions;
        fn(perm, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace detail

/// Evaluates one Vandermonde-like identity three ways at an exact point:
/// determinant form, product form, and the signed double sum over
/// S_k x {±1}^k. The caller asserts all three agree.
inline VanResult vandermonde_kernel(VanKind kind, int k, const std::vector<Rational>& zs) {
    if (static_cast<int>(zs.size()) != k)
        throw std::invalid_argument("vandermonde_kernel: point size != k");
    for (int i = 0; i < k; ++i) {
        if (zs[i] == 0) throw std::invalid_argument("vandermonde_kernel: zero coordinate");
        for (int j = i; j < k; ++j) {
            if (j > i && zs[i] == zs[j])
                throw std::invalid_argument("vandermonde_kernel: coordinates must be distinct");
            if (zs[i] * zs[j] == 1)
                throw std::invalid_argument("vandermonde_kernel: pairwise products must avoid 1");
        }
    }

    VanResult r;

    // Determinant form.
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            const Rational& z = zs[i - 1];
            switch (kind) {
                case VanKind::D_TYPE:
                    m[i - 1][j - 1] = pow_rational(z, k - j) + pow_rational(z, k + j - 2);
                    break;
                case VanKind::C_TYPE:
                    m[i - 1][j - 1] = pow_rational(z, k - j) - pow_rational(z, k + j);
                    break;
                case VanKind::C_REVERSED:
                    m[i - 1][j - 1] = pow_rational(z, j - 1) - pow_rational(z, 2 * k - j + 1);
                    break;
            }
        }
    r.det = detail::rational_det(std::move(m));

    // Product form.
    Rational prod = kind == VanKind::D_TYPE ? 2 : 1;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            prod *= (kind == VanKind::C_REVERSED) ? zs[j] - zs[i] : zs[i] - zs[j];
    if (kind == VanKind::D_TYPE) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) prod *= 1 - zs[i] * zs[j];
    } else {
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) prod *= 1 - zs[i] * zs[j];
    }
    r.product = prod;

    // Signed double sum over S_k x {±1}^k.
    Rational zprod = 1;
    for (const auto& z : zs) zprod *= z;
    Rational sum = 0;
    detail::for_each_permutation(k, [&](const std::vector<int>& perm, int sgn) {
        for (unsigned eps_bits = 0; eps_bits < (1u << k); ++eps_bits) {
            Rational term = sgn;
            int eps_sign = 1;
            for (int i = 0; i < k; ++i) {
                const int eps = (eps_bits >> i & 1u) ? -1 : 1;
                eps_sign *= eps;
                const int s = perm[i] + 1;  // sigma(i+1) in 1..k
                long exponent = 0;
                switch (kind) {
                    case VanKind::D_TYPE: exponent = eps * (s - 1); break;
                    case VanKind::C_TYPE: exponent = k - eps * s; break;
                    case VanKind::C_REVERSED: exponent = eps * (-k + s - 1); break;
                }
                term *= pow_rational(zs[i], exponent);
            }
            switch (kind) {
                case VanKind::D_TYPE:
                    term *= pow_rational(zprod, k - 1);
                    break;
                case VanKind::C_TYPE:
                    term *= eps_sign;
                    break;
                case VanKind::C_REVERSED:
                    term *= eps_sign;
                    term *= pow_rational(zprod, k);
                    break;
            }
            sum += term;
        }
    });
    r.sum = sum;
    return r;
}

}  // namespace weylschur
