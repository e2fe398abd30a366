#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "weylschur/partition.hpp"
#include "weylschur/rational.hpp"

namespace weylschur {

/// Declared basis of a SymFunc. P is the canonical internal basis; every
/// computation that needs ring structure happens there. H and E are
/// multiplicative generator bases, S is the Schur basis (conversions for S
/// live in schur.hpp).
enum class Basis { P, H, E, S };

inline char basis_letter(Basis b) {
    switch (b) {
        case Basis::P: return 'p';
        case Basis::H: return 'h';
        case Basis::E: return 'e';
        case Basis::S: return 's';
    }
    return '?';
}

inline Basis basis_from_letter(char c) {
    switch (c) {
        case 'p': return Basis::P;
        case 'h': return Basis::H;
        case 'e': return Basis::E;
        case 's': return Basis::S;
    }
    throw std::invalid_argument(std::string("unknown basis letter: ") + c);
}

/// Element of the ring of symmetric functions: sparse map partition ->
/// rational coefficient in a declared basis. Immutable in spirit; all
/// operations return fresh values. Zero coefficients are never stored.
class SymFunc {
public:
    SymFunc() = default;
    explicit SymFunc(Basis b) : basis_(b) {}

    static SymFunc zero(Basis b = Basis::P) { return SymFunc(b); }

    static SymFunc one(Basis b = Basis::P) {
        SymFunc f(b);
        f.terms_[Partition{}] = 1;
        return f;
    }

    static SymFunc monomial(Basis b, Partition lambda, Rational c = 1) {
        SymFunc f(b);
        if (c != 0) f.terms_[std::move(lambda)] = std::move(c);
        return f;
    }

    Basis basis() const { return basis_; }
    const std::map<Partition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Partition& lambda, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    long degree() const {
        long d = 0;
        for (const auto& [lam, c] : terms_) d = std::max(d, lam.weight());
        return d;
    }

    /// Homogeneous component of the given weight, same basis.
    SymFunc component(long weight) const {
        SymFunc out(basis_);
        for (const auto& [lam, c] : terms_)
            if (lam.weight() == weight) out.terms_[lam] = c;
        return out;
    }

    std::vector<long> weights() const {
        std::vector<long> ws;
        for (const auto& [lam, c] : terms_)
            if (ws.empty() || ws.back() != lam.weight()) {
                if (std::find(ws.begin(), ws.end(), lam.weight()) == ws.end())
                    ws.push_back(lam.weight());
            }
        return ws;
    }

    friend SymFunc operator+(const SymFunc& f, const SymFunc& g) {
        if (f.basis_ != g.basis_)
            throw std::invalid_argument("SymFunc: basis mismatch in addition");
        SymFunc out = f;
        for (const auto& [lam, c] : g.terms_) out.add_term(lam, c);
        return out;
    }

    friend SymFunc operator-(const SymFunc& f) {
        SymFunc out(f.basis_);
        for (const auto& [lam, c] : f.terms_) out.terms_[lam] = -c;
        return out;
    }

    friend SymFunc operator-(const SymFunc& f, const SymFunc& g) {
        return f + (-g);
    }

    friend SymFunc operator*(const SymFunc& f, const Rational& c) {
        SymFunc out(f.basis_);
        if (c != 0)
            for (const auto& [lam, k] : f.terms_) out.terms_[lam] = k * c;
        return out;
    }
    friend SymFunc operator*(const Rational& c, const SymFunc& f) { return f * c; }

    /// Product in a multiplicative basis (P, H, E): monomials multiply by
    /// merging their index partitions.
    friend SymFunc operator*(const SymFunc& f, const SymFunc& g) {
        if (f.basis_ != g.basis_)
            throw std::invalid_argument("SymFunc: basis mismatch in product");
        if (f.basis_ == Basis::S)
            throw std::invalid_argument("SymFunc: product undefined in Schur basis; convert first");
        SymFunc out(f.basis_);
        for (const auto& [lam, a] : f.terms_)
            for (const auto& [mu, b] : g.terms_) {
                std::vector<int> merged = lam.parts();
                merged.insert(merged.end(), mu.parts().begin(), mu.parts().end());
                std::sort(merged.begin(), merged.end(), std::greater<int>());
                out.add_term(Partition(std::move(merged)), a * b);
            }
        return out;
    }

    friend bool operator==(const SymFunc& f, const SymFunc& g) {
        return f.basis_ == g.basis_ && f.terms_ == g.terms_;
    }
    friend bool operator!=(const SymFunc& f, const SymFunc& g) { return !(f == g); }

private:
    Basis basis_ = Basis::P;
    std::map<Partition, Rational> terms_;
};

/// p_n as a P-basis element, n >= 1.
inline SymFunc gen_p(int n) {
    if (n < 1) throw std::invalid_argument("gen_p: index must be >= 1");
    return SymFunc::monomial(Basis::P, Partition{n});
}

/// h_n in the power-sum basis via the Newton recurrence
/// n h_n = sum_{k=1}^{n} p_k h_{n-k}; h_n = 0 for n < 0, h_0 = 1.
/// Memoized: these are hot in the mode and determinant evaluations.
inline SymFunc gen_h(int n) {
    if (n < 0) return SymFunc::zero();
    static std::vector<SymFunc> h{SymFunc::one()};
    for (int m = static_cast<int>(h.size()); m <= n; ++m) {
        SymFunc acc = SymFunc::zero();
        for (int k = 1; k <= m; ++k) acc = acc + gen_p(k) * h[m - k];
        h.push_back(acc * Rational(1, m));
    }
    return h[n];
}

/// e_n in the power-sum basis via n e_n = sum_{k=1}^{n} (-1)^{k-1} p_k e_{n-k}.
inline SymFunc gen_e(int n) {
    if (n < 0) return SymFunc::zero();
    static std::vector<SymFunc> e{SymFunc::one()};
    for (int m = static_cast<int>(e.size()); m <= n; ++m) {
        SymFunc acc = SymFunc::zero();
        for (int k = 1; k <= m; ++k) {
            SymFunc t = gen_p(k) * e[m - k];
            acc = (k % 2 == 1) ? acc + t : acc - t;
        }
        e.push_back(acc * Rational(1, m));
    }
    return e[n];
}

inline SymFunc gen_hhat(int n) { return gen_h(n) - gen_h(n - 2); }
inline SymFunc gen_ehat(int n) { return gen_e(n) - gen_e(n - 2); }

inline SymFunc gen_hcheck(int n) {
    SymFunc acc = SymFunc::zero();
    for (int m = n; m >= 0; m -= 2) acc = acc + gen_h(m);
    return acc;
}

inline SymFunc gen_echeck(int n) {
    SymFunc acc = SymFunc::zero();
    for (int m = n; m >= 0; m -= 2) acc = acc + gen_e(m);
    return acc;
}

// -- basis conversions among the multiplicative bases --------------------

namespace detail {

/// p_n expanded in the H basis, by inverting the Newton recurrence:
/// p_n = n h_n - sum_{k=1}^{n-1} h_{n-k} p_k.
inline SymFunc p_in_h(int n) {
    static std::vector<SymFunc> p{SymFunc::zero(Basis::H)};
    for (int m = static_cast<int>(p.size()); m <= n; ++m) {
        SymFunc acc = SymFunc::monomial(Basis::H, Partition{m}, m);
        for (int k = 1; k < m; ++k)
            acc = acc - SymFunc::monomial(Basis::H, Partition{m - k}) * p[k];
        p.push_back(acc);
    }
    return p[n];
}

/// p_n in the E basis: p_n = (-1)^{n-1}(n e_n - sum_{k=1}^{n-1}(-1)^{k-1} e_{n-k} p_k).
inline SymFunc p_in_e(int n) {
    static std::vector<SymFunc> p{SymFunc::zero(Basis::E)};
    for (int m = static_cast<int>(p.size()); m <= n; ++m) {
        SymFunc acc = SymFunc::monomial(Basis::E, Partition{m}, m);
        for (int k = 1; k < m; ++k) {
            SymFunc t = SymFunc::monomial(Basis::E, Partition{m - k}) * p[k];
            acc = (k % 2 == 1) ? acc - t : acc + t;
        }
        p.push_back((m % 2 == 1) ? acc : -acc);
    }
    return p[n];
}

/// Substitute each generator index n of f's monomials by gen(n) and multiply
/// out in the target basis.
inline SymFunc substitute(const SymFunc& f, Basis target, SymFunc (*gen)(int)) {
    SymFunc out = SymFunc::zero(target);
    for (const auto& [lam, c] : f.terms()) {
        SymFunc prod = SymFunc::one(target);
        for (int part : lam.parts()) prod = prod * gen(part);
        out = out + prod * c;
    }
    return out;
}

}  // namespace detail

/// Convert a P/H/E-basis element to the canonical P basis.
inline SymFunc to_p_basis(const SymFunc& f) {
    switch (f.basis()) {
        case Basis::P: return f;
        case Basis::H: return detail::substitute(f, Basis::P, &gen_h);
        case Basis::E: return detail::substitute(f, Basis::P, &gen_e);
        case Basis::S:
            throw std::invalid_argument("to_p_basis: use from_schur for Schur-basis input");
    }
    return f;
}

inline SymFunc to_h_basis(const SymFunc& f) {
    if (f.basis() == Basis::H) return f;
    return detail::substitute(to_p_basis(f), Basis::H, &detail::p_in_h);
}

inline SymFunc to_e_basis(const SymFunc& f) {
    if (f.basis() == Basis::E) return f;
    return detail::substitute(to_p_basis(f), Basis::E, &detail::p_in_e);
}

/// The involution omega: p_n -> (-1)^{n-1} p_n, so p_lambda picks up
/// (-1)^{|lambda| - l(lambda)}.
inline SymFunc omega(const SymFunc& f) {
    const SymFunc fp = to_p_basis(f);
    SymFunc out = SymFunc::zero();
    for (const auto& [lam, c] : fp.terms()) {
        const long sign_exp = lam.weight() - lam.length();
        out.add_term(lam, sign_exp % 2 == 0 ? c : -c);
    }
    return out;
}

/// Hall inner product: <p_lambda, p_mu> = z_lambda delta, extended bilinearly.
inline Rational hall_inner(const SymFunc& f, const SymFunc& g) {
    const SymFunc fp = to_p_basis(f);
    const SymFunc gp = to_p_basis(g);
    Rational acc = 0;
    for (const auto& [lam, a] : fp.terms()) {
        const Rational b = gp.coeff(lam);
        if (b != 0) acc += a * b * Rational(z_of(lam));
    }
    return acc;
}

// -- serialization -------------------------------------------------------

/// Canonical term order for output: descending (weight, lex) — the reverse
/// of the internal map order.
inline nlohmann::json to_json(const SymFunc& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        terms.push_back({{"partition", it->first.parts()},
                         {"coeff", to_string(it->second)}});
    }
    return {{"basis", std::string(1, basis_letter(f.basis()))}, {"terms", terms}};
}

inline SymFunc symfunc_from_json(const nlohmann::json& j) {
    SymFunc f(basis_from_letter(j.at("basis").get<std::string>().at(0)));
    for (const auto& t : j.at("terms")) {
        f.add_term(Partition(t.at("partition").get<std::vector<int>>()),
                   rational_from_string(t.at("coeff").get<std::string>()));
    }
    return f;
}

/// Human-readable rendering, e.g. "h[2] - 1" or "s[2,1] + 2*s[1,1,1]".
/// The empty-partition term renders as a bare constant.
inline std::string to_text(const SymFunc& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const Partition& lam = it->first;
        Rational c = it->second;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (lam.empty()) {
            out += to_string(c);
        } else {
            if (c != 1) out += to_string(c) + "*";
            out += basis_letter(f.basis());
            out += lam.str();
        }
    }
    return out;
}

}  // namespace weylschur
