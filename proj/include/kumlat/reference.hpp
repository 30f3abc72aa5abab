#pragma once

// Explicit generator lists for the lattices attached to the subgroups
// S = {1}, {1,2}, {1,2,3}, {1,2,3,4}, and the block forms they are expected
// to realise. Computed lattices are checked against these by lattice
// equality and exact Gram comparison.

#include <kumlat/kummer.hpp>

#include <optional>
#include <vector>

namespace kumlat::reference {

namespace detail {

using kummer::curve;
using kummer::half_sum;
using kummer::k_hat;
using kummer::omega;

inline RatVector K(int a1, int a2, int a3, int a4) { return curve(TorsionIndex(a1, a2, a3, a4)); }
inline RatVector w(int i, int j) { return omega(i, j); }
inline RatVector hw(int i, int j) { return Rational(1, 2) * omega(i, j); }
inline RatVector Kbar(const AffineSubspace& W) { return half_sum(W); }
inline RatVector twice(const RatVector& v) { return Rational(2) * v; }
inline RatVector half(const RatVector& v) { return Rational(1, 2) * v; }

inline std::vector<RatVector> all_omegas() {
    return {w(1, 2), w(3, 4), w(1, 3), w(2, 4), w(1, 4), w(2, 3)};
}

inline void check_k(int k) {
    if (k < 1 || k > 4) throw error("reference lists exist for |S| = 1..4 only");
}

}  // namespace detail

/// Generators of Lambda^G for S = {1..k}.
inline std::vector<RatVector> fixed_generators(int k) {
    using namespace detail;
    check_k(k);
    using A = AffineSubspace;
    switch (k) {
        case 4: {
            std::vector<RatVector> g{k_hat()};
            for (auto& o : all_omegas()) g.push_back(o);
            return g;
        }
        case 3: {
            auto g = all_omegas();
            g.push_back(Kbar(A::W(4)));
            g.push_back(Kbar(A::W(4).complement()));
            return g;
        }
        case 2:
            return {w(1, 2), w(1, 3), w(2, 4), w(1, 4), w(2, 3), hw(3, 4) + Kbar(A::V(1, 2)),
                    Kbar(A::W(3)), Kbar(A::W(4)), Kbar(A::W(3, 4)), twice(Kbar(A::V(1, 2)))};
        default: {
            auto g = all_omegas();
            for (int i = 2; i <= 4; ++i) g.push_back(Kbar(A::W(i)));
            g.push_back(k_hat());
            g.push_back(K(0, 0, 1, 1) + K(1, 0, 1, 1));
            g.push_back(K(0, 1, 0, 1) + K(1, 1, 0, 1));
            g.push_back(K(0, 1, 1, 0) + K(1, 1, 1, 0));
            g.push_back(K(0, 1, 1, 1) + K(1, 1, 1, 1));
            return g;
        }
    }
}

/// Generators of theta*(P_G^vee) for S = {1..k}.
inline std::vector<RatVector> theta_generators(int k) {
    using namespace detail;
    check_k(k);
    using A = AffineSubspace;
    switch (k) {
        case 4: {
            std::vector<RatVector> g{k_hat()};
            for (auto& o : all_omegas()) g.push_back(twice(o));
            return g;
        }
        case 3:
            return {twice(w(1, 2)), w(3, 4), twice(w(1, 3)), w(2, 4), w(1, 4), twice(w(2, 3)),
                    Kbar(A::W(4)), Kbar(A::W(4).complement())};
        case 2:
            return {twice(w(1, 2)), w(1, 3), w(1, 4), w(2, 3), w(2, 4), hw(3, 4) + Kbar(A::V(1, 2)),
                    Kbar(A::W(3)), Kbar(A::W(4)), Kbar(A::W(3, 4)), twice(Kbar(A::V(1, 2)))};
        default:
            return fixed_generators(1);
    }
}

/// Generators of P_G for S = {1..k}.
inline std::vector<RatVector> p_generators(int k) {
    using namespace detail;
    check_k(k);
    using A = AffineSubspace;
    switch (k) {
        case 4: {
            std::vector<RatVector> g{K(0, 0, 0, 0)};
            for (auto& o : all_omegas()) g.push_back(o);
            return g;
        }
        case 3: {
            auto g = all_omegas();
            g.push_back(K(0, 0, 0, 0));
            g.push_back(K(0, 0, 0, 1));
            return g;
        }
        case 2:
            return {Kbar(A::V(3, 4)) + hw(1, 2), w(3, 4), w(1, 3), w(2, 4), w(1, 4), w(2, 3),
                    K(0, 0, 0, 0), K(0, 0, 0, 1), K(0, 0, 1, 0), K(0, 0, 1, 1)};
        default:
            return {Kbar(A::V(3, 4)) + hw(1, 2), w(3, 4), Kbar(A::V(2, 4)) + hw(1, 3), w(2, 4),
                    Kbar(A::V(2, 3)) + hw(1, 4), w(2, 3), Kbar(A::W(1)),
                    K(0, 0, 0, 1), K(0, 0, 1, 0), K(0, 1, 0, 0), K(0, 0, 1, 1), K(0, 1, 0, 1), K(0, 1, 1, 0),
                    K(0, 1, 1, 1)};
    }
}

/// Generators of P_G^vee, listed for S = {1,2} and S = {1,2,3,4}.
inline std::optional<std::vector<RatVector>> p_dual_generators(int k) {
    using namespace detail;
    check_k(k);
    if (k == 4) {
        std::vector<RatVector> g{half(K(0, 0, 0, 0))};
        for (auto& o : all_omegas()) g.push_back(half(o));
        return g;
    }
    if (k == 2) {
        const RatVector K0 = K(0, 0, 0, 0);
        return std::vector<RatVector>{hw(1, 2), hw(1, 3), hw(1, 4), hw(2, 3), hw(2, 4), half(w(3, 4) + K0),
                                      half(K0 + K(0, 0, 0, 1)), half(K0 + K(0, 0, 1, 0)), half(K0 + K(0, 0, 1, 1)),
                                      K0};
    }
    return std::nullopt;
}

inline IntMatrix block_form(const std::vector<StandardBlock>& blocks) {
    IntMatrix g = standard_gram(blocks.front());
    for (std::size_t i = 1; i < blocks.size(); ++i) g = direct_sum(g, standard_gram(blocks[i]));
    return g;
}

/// Expected Gram matrix of fixed_generators(k), when stated as a block form.
inline std::optional<IntMatrix> fixed_form(int k) {
    using K_ = StandardKind;
    if (k == 4) return block_form({{K_::Rank1, -8}, {K_::U, 2}, {K_::U, 2}, {K_::U, 2}});
    if (k == 3) return block_form({{K_::U, 2}, {K_::U, 2}, {K_::U, 2}, {K_::Rank1, -4}, {K_::Rank1, -4}});
    return std::nullopt;
}

/// Expected Gram matrix of theta_generators(k), when stated as a block form.
inline std::optional<IntMatrix> theta_form(int k) {
    using K_ = StandardKind;
    if (k == 4) return block_form({{K_::Rank1, -8}, {K_::U, 8}, {K_::U, 8}, {K_::U, 8}});
    if (k == 3) return block_form({{K_::U, 4}, {K_::U, 4}, {K_::U, 4}, {K_::Rank1, -4}, {K_::Rank1, -4}});
    return std::nullopt;
}

/// Expected Gram matrix of p_generators(k), when stated as a block form.
inline std::optional<IntMatrix> p_form(int k) {
    using K_ = StandardKind;
    if (k == 4) return block_form({{K_::Rank1, -2}, {K_::U, 2}, {K_::U, 2}, {K_::U, 2}});
    return std::nullopt;
}

/// Surjectivity defects [Lambda^G : theta*(P_G^vee)] for |S| = 1..4.
inline Integer expected_defect(int k) {
    detail::check_k(k);
    static const long values[] = {1, 2, 8, 64};
    return values[k - 1];
}

}  // namespace kumlat::reference
