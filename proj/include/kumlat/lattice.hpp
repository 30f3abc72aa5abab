#pragma once

// Lattices inside a fixed ambient quadratic space: duals, complements,
// saturation, discriminant groups and forms, signatures and indices.

#include <kumlat/abelian_group.hpp>
#include <kumlat/normal_forms.hpp>

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kumlat {

/// Q^dim with an integral symmetric bilinear form.
class QuadraticSpace {
public:
    explicit QuadraticSpace(IntMatrix gram) : gram_(std::move(gram)), rgram_(to_rational(gram_)) {
        if (!gram_.is_symmetric()) throw error("Gram matrix of a quadratic space must be symmetric");
    }

    std::size_t dim() const { return gram_.rows(); }
    const IntMatrix& gram() const { return gram_; }

    Rational pair(const RatVector& x, const RatVector& y) const { return dot(x * rgram_, y); }

    /// B * G * B^T
    RatMatrix gram_of(const RatMatrix& basis) const { return basis * rgram_ * basis.transpose(); }

    /// B * G, so that (B * G) * v^T gives the pairings of the rows of B with v.
    RatMatrix pairing_matrix(const RatMatrix& basis) const { return basis * rgram_; }

    friend bool operator==(const QuadraticSpace& a, const QuadraticSpace& b) { return a.gram_ == b.gram_; }

private:
    IntMatrix gram_;
    RatMatrix rgram_;
};

using SpacePtr = std::shared_ptr<const QuadraticSpace>;

inline SpacePtr make_space(IntMatrix gram) { return std::make_shared<const QuadraticSpace>(std::move(gram)); }

inline bool same_space(const SpacePtr& a, const SpacePtr& b) { return a == b || *a == *b; }

/// A free Z-module spanned by linearly independent rational row vectors of
/// an ambient quadratic space. The Gram matrix may be degenerate.
class Lattice {
public:
    Lattice(SpacePtr space, RatMatrix basis) : space_(std::move(space)), basis_(std::move(basis)) {
        if (!space_) throw error("lattice without ambient space");
        if (basis_.rows() > 0 && basis_.cols() != space_->dim())
            throw error("basis vectors do not live in the ambient space");
        if (basis_.rows() == 0) basis_ = RatMatrix(0, space_->dim());
        if (kumlat::rank(basis_) != basis_.rows()) throw error("lattice basis rows are linearly dependent");
    }

    /// Lattice generated by arbitrary (possibly dependent) rational vectors;
    /// the basis is returned in canonical Hermite form.
    static Lattice from_generators(SpacePtr space, const RatMatrix& generators) {
        const std::size_t dim = space->dim();
        if (generators.rows() == 0) return Lattice(std::move(space), RatMatrix(0, dim));
        if (generators.cols() != dim) throw error("generators do not live in the ambient space");
        return Lattice(space, canonical_rows(generators));
    }

    static Lattice from_generators(SpacePtr space, const std::vector<RatVector>& generators) {
        const std::size_t dim = space->dim();
        return from_generators(std::move(space), RatMatrix::from_rows(generators, dim));
    }

    /// Z^n with the given Gram matrix.
    static Lattice standard(IntMatrix gram) {
        const std::size_t n = gram.rows();
        return Lattice(make_space(std::move(gram)), RatMatrix::identity(n));
    }

    const SpacePtr& space() const { return space_; }
    const RatMatrix& basis() const { return basis_; }
    std::size_t rank() const { return basis_.rows(); }
    std::size_t dim() const { return space_->dim(); }

    RatMatrix gram() const { return space_->gram_of(basis_); }

    Rational pair(const RatVector& x, const RatVector& y) const { return space_->pair(x, y); }

    /// Coefficients c with c * basis == v, or nullopt if v is outside the span.
    std::optional<RatVector> coordinates(const RatVector& v) const { return solve_rational(basis_, v); }

    bool contains(const RatVector& v) const {
        auto c = coordinates(v);
        return c && is_integral(*c);
    }

    bool contains(const Lattice& other) const {
        if (!same_space(space_, other.space_)) return false;
        for (std::size_t i = 0; i < other.rank(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    /// Basis in canonical (Hermite) form; equal lattices have equal canonical bases.
    RatMatrix canonical_basis() const { return rank() ? canonical_rows(basis_) : basis_; }

    Lattice canonical() const { return Lattice(space_, canonical_basis()); }

    friend bool operator==(const Lattice& a, const Lattice& b) {
        return same_space(a.space_, b.space_) && a.canonical_basis() == b.canonical_basis();
    }

private:
    static RatMatrix canonical_rows(const RatMatrix& rows) {
        auto [M, d] = clear_denominators(rows);
        auto h = hnf(M);
        RatMatrix out = to_rational(h.H.row_range(0, h.rank));
        out *= Rational(1) / Rational(d);
        return out;
    }

    SpacePtr space_;
    RatMatrix basis_;
};

// ---------------------------------------------------------------------------
// Standard lattices

inline IntMatrix gram_U(const Integer& n = 1) {
    if (n == 0) throw error("U(0) is degenerate");
    return IntMatrix{{0, n}, {n, 0}};
}

inline IntMatrix gram_rank1(const Integer& m) {
    if (m == 0) throw error("<0> is degenerate");
    return IntMatrix{{m}};
}

/// Negated Cartan matrix of E8 (Bourbaki labelling, node 2 attached to node 4).
inline IntMatrix gram_E8_neg() {
    IntMatrix c = IntMatrix::identity(8) * Integer(-2);
    const int edges[7][2] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
    for (const auto& e : edges) {
        c(e[0], e[1]) = 1;
        c(e[1], e[0]) = 1;
    }
    return c;
}

/// U + U + U + E8(-1) + E8(-1)
inline IntMatrix gram_lambda_k3() {
    IntMatrix g = gram_U();
    g = direct_sum(g, gram_U());
    g = direct_sum(g, gram_U());
    g = direct_sum(g, gram_E8_neg());
    return direct_sum(g, gram_E8_neg());
}

enum class StandardKind { U, Rank1, E8Neg, LambdaK3 };

struct StandardBlock {
    StandardKind kind;
    Integer scale = 1;  ///< n for U(n), m for <m>; ignored otherwise
};

inline IntMatrix standard_gram(const StandardBlock& b) {
    switch (b.kind) {
        case StandardKind::U: return gram_U(b.scale);
        case StandardKind::Rank1: return gram_rank1(b.scale);
        case StandardKind::E8Neg: return gram_E8_neg();
        case StandardKind::LambdaK3: return gram_lambda_k3();
    }
    throw error("unknown standard lattice kind");
}

/// Orthogonal direct sum of standard blocks, as Z^n in its own space.
inline Lattice standard_lattice(const std::vector<StandardBlock>& blocks) {
    if (blocks.empty()) throw error("empty standard lattice description");
    IntMatrix g = standard_gram(blocks.front());
    for (std::size_t i = 1; i < blocks.size(); ++i) g = direct_sum(g, standard_gram(blocks[i]));
    return Lattice::standard(std::move(g));
}

inline Lattice standard_lattice(const StandardBlock& b) { return standard_lattice(std::vector<StandardBlock>{b}); }

/// Parses "U", "U(n)", "<m>", "E8(-1)", "K3" joined by '+', e.g. "<-2>+U(2)+U(2)".
inline std::vector<StandardBlock> parse_standard_spec(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto parse_int = [](const std::string& t) -> Integer {
        if (t.empty()) throw error("missing integer in lattice description");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw error("malformed integer '" + t + "'");
        for (std::size_t k = i; k < t.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(t[k]))) throw error("malformed integer '" + t + "'");
        return Integer(t[0] == '+' ? t.substr(1) : t);
    };
    std::vector<StandardBlock> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        // '+' separates terms; a leading sign inside <...> or (...) is not a separator
        std::size_t end = pos;
        int depth = 0;
        while (end < s.size() && !(s[end] == '+' && depth == 0)) {
            if (s[end] == '(' || s[end] == '<') ++depth;
            if (s[end] == ')' || s[end] == '>') --depth;
            ++end;
        }
        const std::string term = s.substr(pos, end - pos);
        if (term == "U") {
            out.push_back({StandardKind::U, 1});
        } else if (term.size() > 3 && term.rfind("U(", 0) == 0 && term.back() == ')') {
            out.push_back({StandardKind::U, parse_int(term.substr(2, term.size() - 3))});
        } else if (term.size() > 2 && term.front() == '<' && term.back() == '>') {
            out.push_back({StandardKind::Rank1, parse_int(term.substr(1, term.size() - 2))});
        } else if (term == "E8(-1)" || term == "E8") {
            out.push_back({StandardKind::E8Neg, 1});
        } else if (term == "K3" || term == "LK3") {
            out.push_back({StandardKind::LambdaK3, 1});
        } else {
            throw error("unrecognized lattice term '" + term + "'");
        }
        if (out.back().scale == 0) throw error("degenerate lattice term '" + term + "'");
        if (end == s.size()) break;
        pos = end + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Invariants

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric rational matrix by congruence diagonalization.
inline Signature inertia(RatMatrix M) {
    if (!M.is_symmetric()) throw error("inertia of a non-symmetric matrix");
    const std::size_t n = M.rows();
    Signature s;
    for (std::size_t k = 0; k < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t j = k + 1;
            while (j < n && M(j, j) == 0) ++j;
            if (j < n) {
                M.swap_rows(k, j);
                M.swap_cols(k, j);
            } else {
                j = k + 1;
                while (j < n && M(k, j) == 0) ++j;
                if (j == n) {
                    ++s.zero;
                    continue;
                }
                // M(k,k) becomes 2 M(k,j) since M(j,j) == 0
                M.add_row_multiple(k, j, Rational(1));
                M.add_col_multiple(k, j, Rational(1));
            }
        }
        const Rational pivot = M(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (M(i, k) == 0) continue;
            const Rational f = -M(i, k) / pivot;
            M.add_row_multiple(i, k, f);
            M.add_col_multiple(i, k, f);
        }
        if (pivot > 0)
            ++s.positive;
        else
            ++s.negative;
    }
    return s;
}

inline Signature signature(const Lattice& L) { return inertia(L.gram()); }

inline bool is_nondegenerate(const Lattice& L) { return determinant(L.gram()) != 0; }

/// {v in span(L) : <v, x> in Z for all x in L}
inline Lattice dual(const Lattice& L) {
    const RatMatrix G = L.gram();
    if (determinant(G) == 0) throw error("degenerate lattice has no dual in its span");
    return Lattice(L.space(), inverse(G) * L.basis());
}

/// ambient intersected with the rational span of L.
inline Lattice saturate(const Lattice& L, const Lattice& ambient) {
    if (!same_space(L.space(), ambient.space())) throw error("saturate: lattices live in different spaces");
    const std::size_t r = ambient.rank();
    RatMatrix C(L.rank(), r);
    for (std::size_t i = 0; i < L.rank(); ++i) {
        auto c = ambient.coordinates(L.basis().row(i));
        if (!c) throw error("saturate: span not contained in the ambient lattice's span");
        C.set_row(i, *c);
    }
    if (L.rank() == 0) return Lattice(L.space(), RatMatrix(0, L.dim()));
    auto [Ci, d] = clear_denominators(C);
    (void)d;
    const IntMatrix Y = integer_kernel(integer_kernel(Ci));
    return Lattice(L.space(), to_rational(Y) * ambient.basis());
}

/// {v in ambient : <v, m> = 0 for all m in M}
inline Lattice orthogonal_complement(const Lattice& M, const Lattice& ambient) {
    if (!same_space(M.space(), ambient.space()))
        throw error("orthogonal_complement: lattices live in different spaces");
    if (M.rank() == 0) return ambient;
    const RatMatrix X = ambient.space()->pairing_matrix(ambient.basis()) * M.basis().transpose();
    auto [Xi, d] = clear_denominators(X.transpose());
    (void)d;
    const IntMatrix Y = integer_kernel(Xi);
    return Lattice(M.space(), to_rational(Y) * ambient.basis());
}

/// Orthogonal projection of v onto span(L); L must be nondegenerate.
inline RatVector orthogonal_projection(const Lattice& L, const RatVector& v) {
    const RatMatrix Ginv = inverse(L.gram());
    RatVector p(L.rank(), Rational(0));
    for (std::size_t i = 0; i < L.rank(); ++i) p[i] = L.pair(L.basis().row(i), v);
    return (p * Ginv) * L.basis();
}

/// L^vee / L of an integral nondegenerate lattice.
inline FGAbelianGroup discriminant_group(const Lattice& L) {
    const RatMatrix G = L.gram();
    if (determinant(G) == 0) throw error("discriminant group of a degenerate lattice");
    return FGAbelianGroup::cokernel(require_integer(G, "discriminant group"));
}

/// Discriminant quadratic form: generators of L^vee/L with q in [0,2) and b in [0,1).
struct DiscriminantForm {
    FGAbelianGroup group;
    IntVector orders;                   ///< order of each generator (the invariant factors)
    std::vector<RatVector> generators;  ///< lifts in the ambient space
    RatVector q_values;                 ///< q(g_i) mod 2Z
    RatMatrix b_values;                 ///< b(g_i, g_j) mod Z

    std::size_t size() const { return generators.size(); }

    /// Lift of sum_i c_i g_i.
    RatVector element(const IntVector& coeffs, std::size_t dim) const {
        RatVector v(dim, Rational(0));
        for (std::size_t i = 0; i < coeffs.size(); ++i) v = v + Rational(coeffs[i]) * generators[i];
        return v;
    }

    /// All coefficient vectors c with 0 <= c_i < orders[i].
    std::vector<IntVector> all_coefficients() const {
        std::vector<IntVector> out{IntVector(orders.size(), Integer(0))};
        for (std::size_t i = 0; i < orders.size(); ++i) {
            std::vector<IntVector> next;
            for (const auto& c : out)
                for (Integer k = 0; k < orders[i]; ++k) {
                    IntVector e = c;
                    e[i] = k;
                    next.push_back(std::move(e));
                }
            out = std::move(next);
        }
        return out;
    }
};

inline Rational mod2(const Rational& r) { return mod_positive(r, Rational(2)); }
inline Rational mod1(const Rational& r) { return mod_positive(r, Rational(1)); }

struct LatticeProperties {
    std::size_t rank = 0;
    bool integral = false;
    bool even = false;
    bool unimodular = false;
    Rational determinant;
};

inline LatticeProperties properties(const Lattice& L) {
    const RatMatrix G = L.gram();
    LatticeProperties p;
    p.rank = L.rank();
    p.integral = is_integral(G);
    p.even = p.integral;
    for (std::size_t i = 0; i < G.rows() && p.even; ++i)
        if (numerator(G(i, i)) % 2 != 0) p.even = false;
    p.determinant = determinant(G);
    p.unimodular = p.integral && abs(p.determinant) == 1;
    return p;
}

inline DiscriminantForm discriminant_form(const Lattice& L) {
    const auto props = properties(L);
    if (props.determinant == 0) throw error("discriminant form of a degenerate lattice");
    if (!props.even) throw error("discriminant form requires an even lattice");
    const IntMatrix G = require_integer(L.gram(), "discriminant form");
    const auto s = snf(G);
    const RatMatrix dual_basis = inverse(L.gram()) * L.basis();
    const RatMatrix Vinv = inverse(to_rational(s.V));
    DiscriminantForm f;
    for (std::size_t i = 0; i < G.rows(); ++i) {
        const Integer d = s.D(i, i);
        if (d == 1) continue;
        f.orders.push_back(d);
        f.generators.push_back(Vinv.row(i) * dual_basis);
    }
    f.group = FGAbelianGroup::from_cyclic(0, f.orders);
    const std::size_t k = f.generators.size();
    f.b_values = RatMatrix(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        f.q_values.push_back(mod2(L.pair(f.generators[i], f.generators[i])));
        for (std::size_t j = 0; j < k; ++j) f.b_values(i, j) = mod1(L.pair(f.generators[i], f.generators[j]));
    }
    return f;
}

/// |L / S| for a full-rank sublattice S of L.
inline Integer index_of_sublattice(const Lattice& S, const Lattice& L) {
    if (!same_space(S.space(), L.space())) throw error("index: lattices live in different spaces");
    if (S.rank() != L.rank()) throw error("index: rank mismatch");
    RatMatrix C(S.rank(), L.rank());
    for (std::size_t i = 0; i < S.rank(); ++i) {
        auto c = L.coordinates(S.basis().row(i));
        if (!c || !is_integral(*c)) throw error("index: sublattice is not contained in the lattice");
        C.set_row(i, *c);
    }
    return abs(numerator(determinant(C)));
}

}  // namespace kumlat
