#pragma once

// Integral cohomology H^n(G, Z) of finite abelian groups from the cyclic
// formula and the Kunneth formula with Tor terms.

#include <kumlat/abelian_group.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace kumlat {

/// H^n(Z/m, Z): Z for n = 0, 0 for n odd, Z/m for n even and positive.
inline FGAbelianGroup cyclic_cohomology(const Integer& m, std::size_t n) {
    if (m < 1) throw error("cyclic group order must be at least 1");
    if (n == 0) return FGAbelianGroup::integers();
    if (n % 2 == 1) return FGAbelianGroup::trivial();
    return FGAbelianGroup::cyclic(m);
}

inline FGAbelianGroup tensor_fg(const FGAbelianGroup& A, const FGAbelianGroup& B) {
    const std::size_t a = A.free_rank(), b = B.free_rank();
    IntVector t;
    for (std::size_t k = 0; k < b; ++k) t.insert(t.end(), A.torsion().begin(), A.torsion().end());
    for (std::size_t k = 0; k < a; ++k) t.insert(t.end(), B.torsion().begin(), B.torsion().end());
    for (const auto& d : A.torsion())
        for (const auto& e : B.torsion()) t.push_back(gcd(d, e));
    return FGAbelianGroup::from_cyclic(a * b, t);
}

inline FGAbelianGroup tor_fg(const FGAbelianGroup& A, const FGAbelianGroup& B) {
    IntVector t;
    for (const auto& d : A.torsion())
        for (const auto& e : B.torsion()) t.push_back(gcd(d, e));
    return FGAbelianGroup::from_cyclic(0, t);
}

/// H^0 .. H^max_degree of a group given as a list of cyclic orders.
struct GradedCohomology {
    IntVector group;
    std::vector<FGAbelianGroup> degrees;

    const FGAbelianGroup& operator[](std::size_t n) const { return degrees.at(n); }
    std::size_t max_degree() const { return degrees.size() - 1; }
};

/// Kunneth: H^n(G1 x G2) = sum_{p+q=n} H^p(G1) (x) H^q(G2)
///                      + sum_{p+q=n+1} Tor(H^p(G1), H^q(G2)).
/// Inputs must cover degrees 0..top+1; the result covers 0..top.
inline std::vector<FGAbelianGroup> kunneth(const std::vector<FGAbelianGroup>& h1,
                                           const std::vector<FGAbelianGroup>& h2, std::size_t top) {
    if (h1.size() < top + 2 || h2.size() < top + 2) throw error("kunneth: not enough degrees supplied");
    std::vector<FGAbelianGroup> out;
    for (std::size_t n = 0; n <= top; ++n) {
        FGAbelianGroup h;
        for (std::size_t p = 0; p <= n; ++p) h = h + tensor_fg(h1[p], h2[n - p]);
        for (std::size_t p = 0; p <= n + 1; ++p) h = h + tor_fg(h1[p], h2[n + 1 - p]);
        out.push_back(std::move(h));
    }
    return out;
}

/// Cohomology in degrees 0..max_degree, folding the Kunneth formula over the
/// cyclic factors. Each fold step consumes one degree, so the first factor is
/// seeded up to max_degree + (number of factors - 1).
inline GradedCohomology graded_cohomology(const IntVector& orders, std::size_t max_degree) {
    for (const auto& m : orders)
        if (m < 2) throw error("cyclic factor orders must be at least 2");
    GradedCohomology g{orders, {}};
    if (orders.empty()) {
        g.degrees.push_back(FGAbelianGroup::integers());
        for (std::size_t n = 1; n <= max_degree; ++n) g.degrees.push_back(FGAbelianGroup::trivial());
        return g;
    }
    std::size_t top = max_degree + orders.size() - 1;
    std::vector<FGAbelianGroup> acc;
    for (std::size_t n = 0; n <= top; ++n) acc.push_back(cyclic_cohomology(orders[0], n));
    for (std::size_t k = 1; k < orders.size(); ++k) {
        std::vector<FGAbelianGroup> factor;
        for (std::size_t n = 0; n <= top; ++n) factor.push_back(cyclic_cohomology(orders[k], n));
        --top;
        acc = kunneth(acc, factor, top);
    }
    g.degrees = std::move(acc);
    return g;
}

inline GradedCohomology graded_cohomology(std::initializer_list<long> orders, std::size_t max_degree) {
    IntVector v;
    for (long o : orders) v.emplace_back(o);
    return graded_cohomology(v, max_degree);
}

inline FGAbelianGroup cohomology(const IntVector& orders, std::size_t n) { return graded_cohomology(orders, n)[n]; }

inline FGAbelianGroup cohomology(std::initializer_list<long> orders, std::size_t n) {
    IntVector v;
    for (long o : orders) v.emplace_back(o);
    return cohomology(v, n);
}

/// Every finite abelian group of order n, as invariant factors d1 | d2 | ... (di >= 2).
inline std::vector<IntVector> abelian_groups_of_order(long n) {
    if (n < 1) throw error("group order must be positive");
    std::vector<IntVector> out;
    // build the chain from the largest factor down; each factor divides the previous one
    auto rec = [&](auto&& self, long rest, long bound, IntVector chain) -> void {
        if (rest == 1) {
            std::reverse(chain.begin(), chain.end());
            out.push_back(std::move(chain));
            return;
        }
        for (long d = 2; d <= rest; ++d)
            if (rest % d == 0 && bound % d == 0) {
                IntVector next = chain;
                next.emplace_back(d);
                self(self, rest / d, d, std::move(next));
            }
    };
    for (long top = 2; top <= n; ++top)
        if (n % top == 0) rec(rec, n / top, top, IntVector{Integer(top)});
    if (n == 1) out.push_back({});
    return out;
}

/// V_G as tabulated for the finite abelian groups acting symplectically on a
/// K3 surface, next to H^3(G, Z) evaluated from the formulas above.
struct VTableEntry {
    FGAbelianGroup group;
    FGAbelianGroup tabulated;
    FGAbelianGroup computed;
    bool agrees = false;
};

/// Tabulated V_G for a group in invariant-factor form, or nullopt if the
/// shape is not listed.
inline std::optional<FGAbelianGroup> tabulated_v(const FGAbelianGroup& G) {
    if (!G.is_finite() || G.is_trivial()) return std::nullopt;
    const auto& t = G.torsion();
    auto is = [&](std::initializer_list<long> shape) {
        if (t.size() != shape.size()) return false;
        std::size_t k = 0;
        for (long d : shape)
            if (t[k++] != d) return false;
        return true;
    };
    using A = FGAbelianGroup;
    if (t.size() == 1) return A::trivial();
    if (is({2, 2})) return A::from_cyclic(0, {2});
    if (is({2, 2, 2})) return A::from_cyclic(0, {2, 2, 2});
    if (is({2, 2, 2, 2})) return A::from_cyclic(0, {2, 2, 2, 2, 2, 2});
    if (is({3, 3})) return A::from_cyclic(0, {3});
    if (is({2, 4})) return A::from_cyclic(0, {4});
    if (is({4, 4})) return A::from_cyclic(0, {4});
    if (is({2, 6})) return A::from_cyclic(0, {6});
    return std::nullopt;
}

inline VTableEntry v_table(const IntVector& orders) {
    const auto G = FGAbelianGroup::from_cyclic(0, orders);
    auto tab = tabulated_v(G);
    if (!tab) throw error("group " + G.to_string() + " is not a tabulated symplectic group shape");
    VTableEntry e{G, *tab, cohomology(orders, 3), false};
    e.agrees = e.tabulated == e.computed;
    return e;
}

inline VTableEntry v_table(std::initializer_list<long> orders) {
    IntVector v;
    for (long o : orders) v.emplace_back(o);
    return v_table(v);
}

}  // namespace kumlat
