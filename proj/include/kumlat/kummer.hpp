#pragma once

// The combinatorial Kummer model of the K3 lattice.
//
// Ambient coordinates 0..15 are the curve classes K_a, ordered by the integer
// a1 + 2 a2 + 4 a3 + 8 a4; coordinates 16..21 are w12, w34, w13, w24, w14, w23.
// Curves are pairwise orthogonal (-2)-classes, <w12,w34> = <w13,w24> =
// <w14,w23> = 2, and the two blocks are orthogonal.

#include <kumlat/lattice.hpp>

#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kumlat {

/// An element a = (a1, a2, a3, a4) of (Z/2Z)^4.
class TorsionIndex {
public:
    constexpr TorsionIndex() = default;
    constexpr explicit TorsionIndex(unsigned bits) : bits_(static_cast<std::uint8_t>(bits & 0xF)) {}
    constexpr TorsionIndex(int a1, int a2, int a3, int a4)
        : bits_(static_cast<std::uint8_t>((a1 & 1) | (a2 & 1) << 1 | (a3 & 1) << 2 | (a4 & 1) << 3)) {}

    /// alpha_i, i in 1..4
    static constexpr TorsionIndex unit(int i) { return TorsionIndex(1u << (i - 1)); }

    constexpr unsigned value() const { return bits_; }
    constexpr int coord(int i) const { return (bits_ >> (i - 1)) & 1; }

    friend constexpr TorsionIndex operator+(TorsionIndex a, TorsionIndex b) { return TorsionIndex(a.bits_ ^ b.bits_); }
    friend constexpr bool operator==(TorsionIndex, TorsionIndex) = default;
    friend constexpr auto operator<=>(TorsionIndex a, TorsionIndex b) { return a.bits_ <=> b.bits_; }

    /// "a1a2a3a4", e.g. "1000" for alpha_1
    std::string str() const {
        std::string s;
        for (int i = 1; i <= 4; ++i) s += static_cast<char>('0' + coord(i));
        return s;
    }

    static std::vector<TorsionIndex> all() {
        std::vector<TorsionIndex> v;
        for (unsigned b = 0; b < 16; ++b) v.emplace_back(b);
        return v;
    }

private:
    std::uint8_t bits_ = 0;
};

/// An affine subspace of (Z/2Z)^4.
class AffineSubspace {
public:
    /// Validates affine closure (x + y + z stays inside) and nonemptiness.
    static AffineSubspace from_elements(const std::vector<TorsionIndex>& elements) {
        std::bitset<16> set;
        for (auto a : elements) set.set(a.value());
        return from_mask(set);
    }

    static AffineSubspace from_mask(std::bitset<16> set) {
        if (set.none()) throw error("empty set is not an affine subspace");
        for (unsigned x = 0; x < 16; ++x)
            for (unsigned y = 0; y < 16; ++y)
                for (unsigned z = 0; z < 16; ++z)
                    if (set[x] && set[y] && set[z] && !set[x ^ y ^ z])
                        throw error("set is not an affine subspace of (Z/2Z)^4");
        AffineSubspace s;
        s.set_ = set;
        return s;
    }

    static AffineSubspace full() { return from_mask(std::bitset<16>().set()); }
    static AffineSubspace singleton(TorsionIndex a) { return from_elements({a}); }

    /// W_i = {a : a_i = 0}
    static AffineSubspace W(int i) {
        check_coord(i);
        return where([i](TorsionIndex a) { return a.coord(i) == 0; });
    }

    /// W_{i,j} = {a : a_i + a_j = 0}
    static AffineSubspace W(int i, int j) {
        check_pair(i, j);
        return where([i, j](TorsionIndex a) { return a.coord(i) == a.coord(j); });
    }

    /// V_{i,j} = {0, alpha_i, alpha_j, alpha_i + alpha_j}
    static AffineSubspace V(int i, int j) {
        check_pair(i, j);
        const auto ai = TorsionIndex::unit(i), aj = TorsionIndex::unit(j);
        return from_elements({TorsionIndex(0), ai, aj, ai + aj});
    }

    /// Complement in (Z/2Z)^4; only affine for hyperplanes.
    AffineSubspace complement() const { return from_mask(~set_); }

    AffineSubspace translate(TorsionIndex g) const {
        std::bitset<16> t;
        for (unsigned x = 0; x < 16; ++x)
            if (set_[x]) t.set(x ^ g.value());
        AffineSubspace s;
        s.set_ = t;
        return s;
    }

    bool contains(TorsionIndex a) const { return set_[a.value()]; }
    std::size_t size() const { return set_.count(); }
    bool is_linear() const { return set_[0]; }
    const std::bitset<16>& mask() const { return set_; }

    std::vector<TorsionIndex> elements() const {
        std::vector<TorsionIndex> v;
        for (unsigned x = 0; x < 16; ++x)
            if (set_[x]) v.emplace_back(x);
        return v;
    }

    friend bool operator==(const AffineSubspace&, const AffineSubspace&) = default;

    /// All linear subspaces of the given dimension.
    static std::vector<AffineSubspace> linear_subspaces(std::size_t dim) {
        std::vector<AffineSubspace> out;
        for (unsigned long m = 0; m < (1ul << 16); ++m) {
            std::bitset<16> s(m);
            if (!s[0] || s.count() != (1u << dim)) continue;
            bool closed = true;
            for (unsigned x = 0; x < 16 && closed; ++x)
                for (unsigned y = 0; y < 16 && closed; ++y)
                    if (s[x] && s[y] && !s[x ^ y]) closed = false;
            if (closed) out.push_back(from_mask(s));
        }
        return out;
    }

private:
    AffineSubspace() = default;

    template <typename Pred>
    static AffineSubspace where(Pred p) {
        std::bitset<16> s;
        for (unsigned x = 0; x < 16; ++x)
            if (p(TorsionIndex(x))) s.set(x);
        return from_mask(s);
    }

    static void check_coord(int i) {
        if (i < 1 || i > 4) throw error("coordinate index must be in 1..4");
    }
    static void check_pair(int i, int j) {
        check_coord(i);
        check_coord(j);
        if (i >= j) throw error("subspace pair must satisfy i < j");
    }

    std::bitset<16> set_;
};

namespace kummer {

inline constexpr std::size_t kDim = 22;
inline constexpr std::size_t kCurves = 16;

/// Order of the six omega coordinates: (12,34), (13,24), (14,23).
inline constexpr std::array<std::pair<int, int>, 6> kOmegaPairs{{{1, 2}, {3, 4}, {1, 3}, {2, 4}, {1, 4}, {2, 3}}};

inline std::size_t curve_coord(TorsionIndex a) { return a.value(); }

inline std::size_t omega_coord(int i, int j) {
    for (std::size_t k = 0; k < kOmegaPairs.size(); ++k)
        if (kOmegaPairs[k].first == i && kOmegaPairs[k].second == j) return kCurves + k;
    throw error("no omega class w" + std::to_string(i) + std::to_string(j));
}

inline IntMatrix ambient_gram() {
    IntMatrix g(kDim, kDim);
    for (std::size_t a = 0; a < kCurves; ++a) g(a, a) = -2;
    for (std::size_t k = 0; k < 6; k += 2) {
        g(kCurves + k, kCurves + k + 1) = 2;
        g(kCurves + k + 1, kCurves + k) = 2;
    }
    return g;
}

/// Shared 22-dimensional ambient space.
inline const SpacePtr& ambient() {
    static const SpacePtr space = make_space(ambient_gram());
    return space;
}

inline RatVector zero() { return RatVector(kDim, Rational(0)); }

inline RatVector curve(TorsionIndex a) {
    RatVector v = zero();
    v[curve_coord(a)] = 1;
    return v;
}

inline RatVector omega(int i, int j) {
    RatVector v = zero();
    v[omega_coord(i, j)] = 1;
    return v;
}

/// (1/2) sum_{a in W} K_a
inline RatVector half_sum(const AffineSubspace& W) {
    RatVector v = zero();
    for (auto a : W.elements()) v[curve_coord(a)] = Rational(1, 2);
    return v;
}

/// K-hat, the half sum over all sixteen curves.
inline RatVector k_hat() { return half_sum(AffineSubspace::full()); }

/// Partner plane used by the glue class of w_{i,j}: V of the complementary pair.
inline AffineSubspace glue_plane(int i, int j) {
    int rest[2];
    int k = 0;
    for (int t = 1; t <= 4; ++t)
        if (t != i && t != j) rest[k++] = t;
    return AffineSubspace::V(rest[0], rest[1]);
}

/// w_{i,j}/2 + K-bar_{V_{complement}}
inline RatVector glue(int i, int j) { return Rational(1, 2) * omega(i, j) + half_sum(glue_plane(i, j)); }

/// The sixteen Kummer lattice generators in their standard order: K-hat,
/// K-bar_{W_1..W_4}, then eleven single curves.
inline std::vector<RatVector> kummer_generators() {
    std::vector<RatVector> g{k_hat()};
    for (int i = 1; i <= 4; ++i) g.push_back(half_sum(AffineSubspace::W(i)));
    const TorsionIndex singles[] = {
        {0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 0},
        {1, 1, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
    };
    for (auto a : singles) g.push_back(curve(a));
    return g;
}

}  // namespace kummer

/// Rank-16 Kummer lattice; basis rows are the generators in standard order.
inline Lattice kummer_lattice() {
    return Lattice(kummer::ambient(), RatMatrix::from_rows(kummer::kummer_generators(), kummer::kDim));
}

/// Eight orthogonal (-2)-vectors N_1..N_8 and their half sum, in Z^8.
inline Lattice nikulin_lattice() {
    const std::size_t n = 8;
    auto space = make_space(IntMatrix::identity(n) * Integer(-2));
    RatMatrix gens = RatMatrix::identity(n);
    RatVector half(n, Rational(1, 2));
    gens = vstack(gens, row_matrix(half));
    return Lattice::from_generators(space, gens);
}

/// The 22 generators of the Kummer model: the Kummer lattice generators
/// followed by the glue classes of w12, w34, w13, w24, w14, w23.
inline std::vector<RatVector> k3_model_generators() {
    auto g = kummer::kummer_generators();
    for (auto [i, j] : kummer::kOmegaPairs) g.push_back(kummer::glue(i, j));
    return g;
}

inline const Lattice& k3_kummer_model() {
    static const Lattice model(kummer::ambient(), RatMatrix::from_rows(k3_model_generators(), kummer::kDim));
    return model;
}

struct DiscriminantCensus {
    std::size_t total = 0;
    Rational zero_q;              ///< q of the zero class
    std::size_t q0_count = 0;     ///< nonzero classes with q = 0 mod 2
    std::size_t q1_count = 0;     ///< nonzero classes with q = 1 mod 2
    std::size_t other_count = 0;  ///< nonzero classes with any other q
};

/// Evaluates q on every class of K^vee/K.
inline DiscriminantCensus disc_census(const Lattice& K = kummer_lattice()) {
    const auto form = discriminant_form(K);
    DiscriminantCensus c;
    for (const auto& coeffs : form.all_coefficients()) {
        const RatVector x = form.element(coeffs, K.dim());
        const Rational q = mod2(K.pair(x, x));
        ++c.total;
        const bool is_zero = std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& e) { return e == 0; });
        if (is_zero)
            c.zero_q = q;
        else if (q == 0)
            ++c.q0_count;
        else if (q == 1)
            ++c.q1_count;
        else
            ++c.other_count;
    }
    return c;
}

}  // namespace kumlat
