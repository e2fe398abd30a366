#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylschur/rational.hpp"

namespace weylschur {

/// A partition: weakly decreasing sequence of positive integers.
/// Trailing zeros in the input are normalized away; the empty sequence is
/// the empty partition.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; zero beyond the length.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    long weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0L);
    }

    Partition conjugate() const {
        std::vector<int> conj;
        if (!parts_.empty()) {
            conj.resize(parts_[0]);
            for (int j = 1; j <= parts_[0]; ++j)
                conj[j - 1] = static_cast<int>(
                    std::count_if(parts_.begin(), parts_.end(),
                                  [j](int p) { return p >= j; }));
        }
        return Partition(std::move(conj));
    }

    /// Ordering: by weight, then lexicographically on the part lists.
    /// Serialized output iterates this order in reverse.
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.parts_ < b.parts_;
    }
    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) {
        return !(a == b);
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

private:
    std::vector<int> parts_;
};

/// Frobenius coordinates (alpha | beta): arm and leg lengths along the main
/// diagonal, both strictly decreasing, of equal length r.
struct FrobeniusCoords {
    std::vector<int> alpha;
    std::vector<int> beta;

    int rank() const { return static_cast<int>(alpha.size()); }

    void validate() const {
        if (alpha.size() != beta.size())
            throw std::invalid_argument("frobenius: alpha/beta length mismatch");
        auto check = [](const std::vector<int>& v, const char* name) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] < 0)
                    throw std::invalid_argument(std::string("frobenius: negative ") + name);
                if (i + 1 < v.size() && v[i] <= v[i + 1])
                    throw std::invalid_argument(
                        std::string("frobenius: ") + name + " not strictly decreasing");
            }
        };
        check(alpha, "alpha");
        check(beta, "beta");
    }
};

inline FrobeniusCoords to_frobenius(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    FrobeniusCoords fc;
    for (int i = 1; i <= lambda.length() && lambda.part(i) >= i; ++i) {
        fc.alpha.push_back(lambda.part(i) - i);
        fc.beta.push_back(conj.part(i) - i);
    }
    return fc;
}

inline Partition from_frobenius(const FrobeniusCoords& fc) {
    fc.validate();
    const int r = fc.rank();
    std::vector<int> parts;
    for (int i = 1; i <= r; ++i) parts.push_back(fc.alpha[i - 1] + i);
    // Rows below the diagonal square are read off the column lengths
    // beta_j + j.
    const int max_col = r > 0 ? fc.beta[0] + 1 : 0;
    for (int i = r + 1; i <= max_col; ++i) {
        int row = 0;
        for (int j = 1; j <= r; ++j)
            if (fc.beta[j - 1] + j >= i) ++row;
        if (row == 0) break;
        parts.push_back(row);
    }
    Partition result(std::move(parts));
    const FrobeniusCoords back = to_frobenius(result);
    if (back.alpha != fc.alpha || back.beta != fc.beta)
        throw std::invalid_argument("frobenius: coordinates do not describe a partition");
    return result;
}

/// z_lambda = prod_i i^{m_i} m_i!  with m_i the multiplicity of i.
inline Integer z_of(const Partition& lambda) {
    Integer z = 1;
    int run = 0;
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
        ++run;
        z *= Integer(p[i]) * run;
        if (i + 1 == p.size() || p[i + 1] != p[i]) run = 0;
    }
    return z;
}

namespace detail {
inline void partitions_rec(int n, int max_part, std::vector<int>& stack,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        stack.push_back(p);
        partitions_rec(n - p, p, stack, out);
        stack.pop_back();
    }
}
}  // namespace detail

/// All partitions of n in reverse-lexicographic order, (n) first.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> stack;
    detail::partitions_rec(n, n, stack, out);
    return out;
}

/// All partitions of weight 0..max_weight, ascending weight.
inline std::vector<Partition> partitions_up_to(int max_weight) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_weight; ++n) {
        auto pn = partitions_of(n);
        out.insert(out.end(), pn.begin(), pn.end());
    }
    return out;
}

}  // namespace weylschur
