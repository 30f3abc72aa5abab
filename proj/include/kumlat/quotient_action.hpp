#pragma once

// Coordinate translation subgroups G of (Z/2Z)^4 acting on the Kummer model:
// invariant lattices, branch-curve lattices M_G, complements P_G, the
// pullback theta* and the index [Lambda^G : theta*(P_G^vee)].

#include <kumlat/kummer.hpp>

#include <bit>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace kumlat {

/// The subgroup of (Z/2Z)^4 spanned by alpha_i for i in a nonempty S of
/// {1,2,3,4}; the quotient map doubles exactly the coordinates in S.
class TranslationSubgroup {
public:
    static TranslationSubgroup from_coords(const std::vector<int>& coords) {
        if (coords.empty()) throw error("translation subgroup needs at least one coordinate");
        unsigned mask = 0;
        for (int c : coords) {
            if (c < 1 || c > 4) throw error("coordinate " + std::to_string(c) + " is outside 1..4");
            const unsigned bit = 1u << (c - 1);
            if (mask & bit) throw error("coordinate " + std::to_string(c) + " repeated");
            mask |= bit;
        }
        return TranslationSubgroup(mask);
    }

    /// "1,2,3" style list.
    static TranslationSubgroup parse(std::string_view text) {
        std::vector<int> coords;
        std::string item;
        std::stringstream ss{std::string(text)};
        while (std::getline(ss, item, ',')) {
            if (item.size() != 1 || item[0] < '0' || item[0] > '9') throw error("malformed group '" + std::string(text) + "'");
            coords.push_back(item[0] - '0');
        }
        if (!text.empty() && text.back() == ',') throw error("malformed group '" + std::string(text) + "'");
        return from_coords(coords);
    }

    /// The four shapes computed throughout: S = {1}, {1,2}, {1,2,3}, {1,2,3,4}.
    static TranslationSubgroup first(int k) {
        std::vector<int> c;
        for (int i = 1; i <= k; ++i) c.push_back(i);
        return from_coords(c);
    }

    unsigned mask() const { return mask_; }
    std::size_t rank() const { return static_cast<std::size_t>(std::popcount(mask_)); }
    std::size_t order() const { return std::size_t{1} << rank(); }
    bool doubles(int i) const { return (mask_ >> (i - 1)) & 1u; }

    std::vector<int> coords() const {
        std::vector<int> c;
        for (int i = 1; i <= 4; ++i)
            if (doubles(i)) c.push_back(i);
        return c;
    }

    bool contains(TorsionIndex g) const { return (g.value() & ~mask_) == 0; }

    std::vector<TorsionIndex> elements() const {
        std::vector<TorsionIndex> out;
        for (unsigned b = 0; b < 16; ++b)
            if ((b & ~mask_) == 0) out.emplace_back(b);
        return out;
    }

    std::vector<TorsionIndex> generators() const {
        std::vector<TorsionIndex> out;
        for (int i : coords()) out.push_back(TorsionIndex::unit(i));
        return out;
    }

    /// "1,2,3"
    std::string str() const {
        std::string s;
        for (int i : coords()) s += (s.empty() ? "" : ",") + std::to_string(i);
        return s;
    }

    friend bool operator==(const TranslationSubgroup&, const TranslationSubgroup&) = default;

private:
    explicit TranslationSubgroup(unsigned mask) : mask_(mask) {}
    unsigned mask_;
};

namespace detail {

inline const RatMatrix& model_basis_inverse() {
    static const RatMatrix inv = inverse(k3_kummer_model().basis());
    return inv;
}

/// Coordinates of the rows of an ambient matrix in the model basis.
inline RatMatrix model_coordinates(const RatMatrix& ambient_rows) { return ambient_rows * model_basis_inverse(); }

}  // namespace detail

struct ActionMatrix {
    TorsionIndex element;
    IntMatrix matrix;  ///< x -> x * matrix on model coordinates
};

/// Translation by g: K_a -> K_{a+g}, omegas fixed, written in the model basis.
inline ActionMatrix action_matrix(const TranslationSubgroup& G, TorsionIndex g) {
    if (!G.contains(g)) throw error("element " + g.str() + " is not in the subgroup");
    RatMatrix P(kummer::kDim, kummer::kDim);
    for (auto a : TorsionIndex::all()) P(kummer::curve_coord(a), kummer::curve_coord(a + g)) = 1;
    for (std::size_t k = kummer::kCurves; k < kummer::kDim; ++k) P(k, k) = 1;
    const RatMatrix& B = k3_kummer_model().basis();
    const RatMatrix M = B * P * detail::model_basis_inverse();
    auto Mi = as_integer(M);
    if (!Mi) throw error("action does not preserve Lambda");
    return {g, std::move(*Mi)};
}

/// Lambda^G, in canonical basis.
inline Lattice fixed_lattice(const TranslationSubgroup& G) {
    const std::size_t n = kummer::kDim;
    IntMatrix stacked(0, n);
    for (auto g : G.generators()) {
        IntMatrix D = action_matrix(G, g).matrix - IntMatrix::identity(n);
        stacked = vstack(stacked, D.transpose());
    }
    const IntMatrix Y = integer_kernel(stacked);
    return Lattice::from_generators(kummer::ambient(), to_rational(Y) * k3_kummer_model().basis());
}

/// Curves K_a with (a_i)_{i in S} nonzero.
inline std::vector<TorsionIndex> branch_curves(const TranslationSubgroup& G) {
    std::vector<TorsionIndex> out;
    for (auto a : TorsionIndex::all())
        if ((a.value() & G.mask()) != 0) out.push_back(a);
    return out;
}

struct BranchLattice {
    Lattice curve_span;        ///< direct sum of the branch curves
    Lattice M;                 ///< its saturation in the model
    FGAbelianGroup quotient;   ///< M / curve_span
};

inline BranchLattice m_lattice(const TranslationSubgroup& G) {
    std::vector<RatVector> curves;
    for (auto a : branch_curves(G)) curves.push_back(kummer::curve(a));
    Lattice span(kummer::ambient(), RatMatrix::from_rows(curves, kummer::kDim));
    Lattice M = saturate(span, k3_kummer_model());
    RatMatrix C(span.rank(), M.rank());
    for (std::size_t i = 0; i < span.rank(); ++i) C.set_row(i, *M.coordinates(span.basis().row(i)));
    auto q = FGAbelianGroup::cokernel(require_integer(C, "branch curve coordinates"));
    return {std::move(span), std::move(M), std::move(q)};
}

inline Lattice p_lattice(const TranslationSubgroup& G) { return orthogonal_complement(m_lattice(G).M, k3_kummer_model()); }

inline Lattice p_dual(const TranslationSubgroup& G) { return dual(p_lattice(G)); }

/// Pullback along the quotient: K_b -> sum_{g in G} K_{b+g} for curves with
/// b_i = 0 on S, and w_{i,j} -> 2^{|{i,j} & S|} w_{i,j}. Scales pairings by |G|.
class ThetaMap {
public:
    explicit ThetaMap(TranslationSubgroup G) : G_(G) {}

    bool in_source(const RatVector& v) const {
        for (auto a : TorsionIndex::all())
            if ((a.value() & G_.mask()) != 0 && v[kummer::curve_coord(a)] != 0) return false;
        return true;
    }

    RatVector operator()(const RatVector& v) const {
        if (v.size() != kummer::kDim || !in_source(v)) throw error("theta undefined on class");
        RatVector out = kummer::zero();
        const auto elems = G_.elements();
        for (auto b : TorsionIndex::all()) {
            const Rational& c = v[kummer::curve_coord(b)];
            if (c == 0) continue;
            for (auto g : elems) out[kummer::curve_coord(b + g)] += c;
        }
        for (auto [i, j] : kummer::kOmegaPairs) {
            const std::size_t k = kummer::omega_coord(i, j);
            const int doubled = int(G_.doubles(i)) + int(G_.doubles(j));
            out[k] = v[k] * Rational(1 << doubled);
        }
        return out;
    }

    const TranslationSubgroup& group() const { return G_; }

private:
    TranslationSubgroup G_;
};

/// theta*(P_G^vee)
inline Lattice theta_image(const TranslationSubgroup& G) {
    const Lattice Pd = p_dual(G);
    const ThetaMap theta(G);
    std::vector<RatVector> images;
    for (std::size_t i = 0; i < Pd.rank(); ++i) images.push_back(theta(Pd.basis().row(i)));
    return Lattice::from_generators(kummer::ambient(), images);
}

/// [Lambda^G : theta*(P_G^vee)], after checking containment vector by vector.
inline Integer surjectivity_defect(const Lattice& fixed, const Lattice& theta) {
    for (std::size_t i = 0; i < theta.rank(); ++i)
        if (!fixed.contains(theta.basis().row(i)))
            throw error("theta image is not contained in the invariant lattice");
    if (fixed.rank() != theta.rank()) throw error("theta image does not have full rank in the invariant lattice");
    return index_of_sublattice(theta, fixed);
}

inline Integer surjectivity_defect(const TranslationSubgroup& G) {
    return surjectivity_defect(fixed_lattice(G), theta_image(G));
}

/// All lattices attached to one subgroup, computed once.
struct QuotientCase {
    TranslationSubgroup group;
    std::vector<TorsionIndex> branch;
    Lattice fixed;
    BranchLattice m;
    Lattice P;
    Lattice P_dual;
    Lattice theta;
    Integer defect;
};

inline QuotientCase analyze(const TranslationSubgroup& G) {
    auto m = m_lattice(G);
    Lattice P = orthogonal_complement(m.M, k3_kummer_model());
    Lattice Pd = dual(P);
    const ThetaMap theta_map(G);
    std::vector<RatVector> images;
    for (std::size_t i = 0; i < Pd.rank(); ++i) images.push_back(theta_map(Pd.basis().row(i)));
    Lattice theta = Lattice::from_generators(kummer::ambient(), images);
    Lattice fixed = fixed_lattice(G);
    Integer defect = surjectivity_defect(fixed, theta);
    return {G, branch_curves(G), std::move(fixed), std::move(m), std::move(P), std::move(Pd), std::move(theta),
            std::move(defect)};
}

/// Image of the model under y -> <y, .> restricted to P, realised inside
/// span(P) by orthogonal projection. Equals P^vee.
inline Lattice pairing_image(const Lattice& P) {
    const Lattice& model = k3_kummer_model();
    std::vector<RatVector> images;
    for (std::size_t i = 0; i < model.rank(); ++i) images.push_back(orthogonal_projection(P, model.basis().row(i)));
    return Lattice::from_generators(P.space(), images);
}

/// Lambda / M as an abstract group.
inline FGAbelianGroup model_quotient(const Lattice& M) {
    const Lattice& model = k3_kummer_model();
    RatMatrix C(M.rank(), model.rank());
    for (std::size_t i = 0; i < M.rank(); ++i) {
        auto c = model.coordinates(M.basis().row(i));
        if (!c) throw error("lattice is not inside the model span");
        C.set_row(i, *c);
    }
    return FGAbelianGroup::cokernel(require_integer(C, "model quotient"));
}

}  // namespace kumlat
