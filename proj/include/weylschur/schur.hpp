#pragma once

#include <map>

#include "weylschur/weyldet.hpp"

namespace weylschur {

/// Schur function s_lambda in the power-sum basis, through the h-form
/// Jacobi-Trudi determinant. Cached: Schur expansions evaluate this once per
/// partition per weight component.
inline SymFunc schur(const Partition& lambda) {
    static std::map<Partition, SymFunc> cache;
    auto it = cache.find(lambda);
    if (it == cache.end())
        it = cache.emplace(lambda, to_p_basis(jacobi_trudi(lambda, GenFamily::H))).first;
    return it->second;
}

/// Schur-basis element expanded into the power-sum basis.
inline SymFunc from_schur(const SymFunc& f) {
    if (f.basis() != Basis::S) return to_p_basis(f);
    SymFunc out = SymFunc::zero();
    for (const auto& [lam, c] : f.terms()) out = out + schur(lam) * c;
    return out;
}

/// Expansion in the Schur basis via orthonormality: c_mu = <f, s_mu>, one
/// weight component at a time.
inline SymFunc to_schur_expansion(const SymFunc& f) {
    if (f.basis() == Basis::S) return f;
    const SymFunc fp = to_p_basis(f);
    SymFunc out(Basis::S);
    for (long w : fp.weights()) {
        const SymFunc comp = fp.component(w);
        for (const auto& mu : partitions_of(static_cast<int>(w))) {
            const Rational c = hall_inner(comp, schur(mu));
            if (c != 0) out.add_term(mu, c);
        }
    }
    return out;
}

inline SymFunc to_basis(const SymFunc& f, Basis target) {
    const SymFunc fp = f.basis() == Basis::S ? from_schur(f) : to_p_basis(f);
    switch (target) {
        case Basis::P: return fp;
        case Basis::H: return to_h_basis(fp);
        case Basis::E: return to_e_basis(fp);
        case Basis::S: return to_schur_expansion(fp);
    }
    return fp;
}

}  // namespace weylschur
