#pragma once

// Reproduction report: every checked identity as a claim record, lattice
// payloads for the objects involved, JSON and plain-text serializers.

#include <kumlat/cohomology.hpp>
#include <kumlat/quotient_action.hpp>
#include <kumlat/reference.hpp>

#include <json.hpp>

#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifndef KUMLAT_VERSION
#define KUMLAT_VERSION "0.0.0"
#endif

namespace kumlat {

inline constexpr const char* version() { return KUMLAT_VERSION; }

enum class ClaimStatus { match, mismatch, reported_only };

inline std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::match: return "match";
        case ClaimStatus::mismatch: return "mismatch";
        case ClaimStatus::reported_only: return "reported-only";
    }
    return "?";
}

struct Claim {
    std::string id;
    std::string location;
    std::string expected;
    std::string computed;
    ClaimStatus status = ClaimStatus::mismatch;
};

struct LatticePayload {
    RatMatrix basis;
    RatMatrix gram;
    std::size_t rank = 0;
    Signature signature;
    Rational determinant;
    bool integral = false;
    bool even = false;
    std::optional<IntVector> discriminant;  ///< invariant factors, for even nondegenerate lattices
    RatVector q_values;                     ///< q of the discriminant generators, mod 2
};

inline LatticePayload payload(const Lattice& L) {
    LatticePayload p;
    p.basis = L.basis();
    p.gram = L.gram();
    p.rank = L.rank();
    p.signature = inertia(p.gram);
    const auto props = properties(L);
    p.determinant = props.determinant;
    p.integral = props.integral;
    p.even = props.even;
    if (props.even && props.determinant != 0) {
        const auto f = discriminant_form(L);
        p.discriminant = f.orders;
        p.q_values = f.q_values;
    }
    return p;
}

struct ReportDocument {
    std::string tool_version = version();
    std::vector<Claim> claims;
    std::vector<Integer> defects;
    DiscriminantCensus census;
    std::vector<std::pair<std::string, LatticePayload>> lattices;

    std::size_t count(ClaimStatus s) const {
        std::size_t n = 0;
        for (const auto& c : claims) n += c.status == s;
        return n;
    }
    bool ok() const { return count(ClaimStatus::mismatch) == 0; }
};

// ---------------------------------------------------------------------------
// formatting helpers

inline std::string signature_string(const Signature& s) {
    std::string out = "(" + std::to_string(s.positive) + "," + std::to_string(s.negative);
    if (s.zero) out += "," + std::to_string(s.zero);
    return out + ")";
}

inline std::string block_string(const std::vector<StandardBlock>& blocks) {
    std::string s;
    for (const auto& b : blocks) {
        if (!s.empty()) s += "+";
        switch (b.kind) {
            case StandardKind::U: s += b.scale == 1 ? "U" : "U(" + b.scale.str() + ")"; break;
            case StandardKind::Rank1: s += "<" + b.scale.str() + ">"; break;
            case StandardKind::E8Neg: s += "E8(-1)"; break;
            case StandardKind::LambdaK3: s += "K3"; break;
        }
    }
    return s;
}

inline std::string factors_string(const IntVector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + "]";
}

inline std::string bool_string(bool b) { return b ? "true" : "false"; }

/// "equal", "index N sublattice", "index N overlattice" or "different".
inline std::string compare_lattices(const Lattice& listed, const Lattice& computed) {
    if (listed == computed) return "equal";
    if (listed.rank() == computed.rank()) {
        if (computed.contains(listed)) return "index " + index_of_sublattice(listed, computed).str() + " sublattice";
        if (listed.contains(computed)) return "index " + index_of_sublattice(computed, listed).str() + " overlattice";
    }
    return "different (rank " + std::to_string(listed.rank()) + " vs " + std::to_string(computed.rank()) + ")";
}

namespace detail {

struct ClaimSink {
    std::vector<Claim>& out;

    void add(std::string id, std::string location, std::string expected, std::string computed) {
        const ClaimStatus s = expected == computed ? ClaimStatus::match : ClaimStatus::mismatch;
        out.push_back({std::move(id), std::move(location), std::move(expected), std::move(computed), s});
    }
    void reported(std::string id, std::string location, std::string expected, std::string computed) {
        out.push_back({std::move(id), std::move(location), std::move(expected), std::move(computed),
                       ClaimStatus::reported_only});
    }
};

inline std::string case_name(int k) { return "S={" + TranslationSubgroup::first(k).str() + "}"; }

inline std::vector<StandardBlock> blocks_of(const char* spec) { return parse_standard_spec(spec); }

/// Gram of the listed vectors, in the listed order, against a block form.
inline std::string listed_gram(const std::vector<RatVector>& v, const IntMatrix& form, const std::string& form_name) {
    const RatMatrix G = kummer::ambient()->gram_of(RatMatrix::from_rows(v, kummer::kDim));
    return G == to_rational(form) ? form_name : "other Gram matrix";
}

/// gcd of all k x k minors, k = 1..min(rows, cols), by brute force over index sets.
inline IntVector determinantal_divisors(const IntMatrix& A) {
    const std::size_t m = A.rows(), n = A.cols();
    IntVector out;
    for (std::size_t k = 1; k <= std::min(m, n); ++k) {
        Integer g = 0;
        std::vector<bool> rs(m, false), cs(n, false);
        std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
        do {
            std::fill(cs.begin(), cs.end(), false);
            std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
            do {
                IntMatrix sub(k, k);
                std::size_t r = 0;
                for (std::size_t i = 0; i < m; ++i) {
                    if (!rs[i]) continue;
                    std::size_t c = 0;
                    for (std::size_t j = 0; j < n; ++j)
                        if (cs[j]) sub(r, c++) = A(i, j);
                    ++r;
                }
                g = gcd(g, determinant(sub));
            } while (std::prev_permutation(cs.begin(), cs.end()));
        } while (std::prev_permutation(rs.begin(), rs.end()));
        out.push_back(g);
    }
    return out;
}

}  // namespace detail

/// Runs every check and collects the results.
inline ReportDocument build_report() {
    using detail::case_name;
    ReportDocument doc;
    detail::ClaimSink sink{doc.claims};

    // Kummer model of the K3 lattice
    const Lattice& model = k3_kummer_model();
    {
        const auto p = properties(model);
        const std::string loc = "Kummer model: 22 generators built from the Kummer lattice and six glue classes";
        sink.add("model.even", loc, "true", bool_string(p.even));
        sink.add("model.abs_det", loc, "1", abs(p.determinant).str());
        sink.add("model.signature", loc, "(3,19)", signature_string(signature(model)));
        doc.lattices.emplace_back("k3_model", payload(model));
    }

    // Kummer lattice
    const Lattice K = kummer_lattice();
    {
        const std::string loc = "Kummer lattice: sixteen generators and its discriminant form";
        sink.add("kummer.rank", loc, "16", std::to_string(K.rank()));
        sink.add("kummer.signature", loc, "(0,16)", signature_string(signature(K)));
        sink.add("kummer.discriminant", loc, "(Z/2)^6", discriminant_group(K).to_string());
        doc.census = disc_census(K);
        sink.add("kummer.census", loc, "total=64 q0=35 q1=28 other=0",
                 "total=" + std::to_string(doc.census.total) + " q0=" + std::to_string(doc.census.q0_count) +
                     " q1=" + std::to_string(doc.census.q1_count) +
                     " other=" + std::to_string(doc.census.other_count));
        doc.lattices.emplace_back("kummer", payload(K));
    }

    // Nikulin lattice and its copy inside K
    {
        const Lattice N = nikulin_lattice();
        const auto p = properties(N);
        const std::string loc = "Nikulin lattice: eight (-2)-curves and their half sum";
        sink.add("nikulin.rank", loc, "8", std::to_string(N.rank()));
        sink.add("nikulin.even", loc, "true", bool_string(p.even));
        sink.add("nikulin.discriminant", loc, "(Z/2)^6", discriminant_group(N).to_string());
        // embed N_i -> K_a for a in W_1 (increasing order); the half sum goes to K-bar_{W_1}
        const auto W1 = AffineSubspace::W(1).elements();
        RatMatrix E(8, kummer::kDim);
        for (std::size_t i = 0; i < 8; ++i) E.set_row(i, kummer::curve(W1[i]));
        std::vector<RatVector> gens;
        for (auto a : W1) gens.push_back(kummer::curve(a));
        gens.push_back(kummer::half_sum(AffineSubspace::W(1)));
        const Lattice inside = Lattice::from_generators(kummer::ambient(), gens);
        const Lattice image(kummer::ambient(), N.basis() * E);
        const bool same = image == inside && image.gram() == N.gram();
        sink.add("nikulin.inside_kummer", loc, "Gram-equal to <K_a (a in W1), K-bar_W1>",
                 same ? "Gram-equal to <K_a (a in W1), K-bar_W1>" : "not Gram-equal");
        doc.lattices.emplace_back("nikulin", payload(N));
    }

    // the four translation subgroups
    std::vector<QuotientCase> cases;
    for (int k = 1; k <= 4; ++k) cases.push_back(analyze(TranslationSubgroup::first(k)));

    const char* fixed_forms[] = {nullptr, nullptr, "U(2)+U(2)+U(2)+<-4>+<-4>", "<-8>+U(2)+U(2)+U(2)"};
    const char* theta_forms[] = {nullptr, nullptr, "U(4)+U(4)+U(4)+<-4>+<-4>", "<-8>+U(8)+U(8)+U(8)"};
    const std::map<int, std::string> list_location = {
        {1, "explicit generator lists for one coordinate doubled"},
        {2, "explicit generator lists for two coordinates doubled"},
        {3, "canonical forms for three coordinates doubled"},
        {4, "canonical forms for all four coordinates doubled"},
    };

    for (int k = 1; k <= 4; ++k) {
        const auto& c = cases[k - 1];
        const std::string S = case_name(k);
        const std::string loc = "invariant lattice, " + list_location.at(k);
        const auto sp = kummer::ambient();

        const auto fixed_list = reference::fixed_generators(k);
        sink.add("fixed.list." + S, loc, "equal", compare_lattices(Lattice::from_generators(sp, fixed_list), c.fixed));
        if (const char* f = fixed_forms[k - 1]) {
            const std::string name = block_string(detail::blocks_of(f));
            sink.add("fixed.form." + S, loc, name, detail::listed_gram(fixed_list, *reference::fixed_form(k), name));
        }
        sink.add("fixed.rank." + S, loc, std::to_string(22 - c.branch.size()), std::to_string(c.fixed.rank()));

        const auto theta_list = reference::theta_generators(k);
        sink.add("theta.list." + S, "theta image, " + list_location.at(k), "equal",
                 compare_lattices(Lattice::from_generators(sp, theta_list), c.theta));
        if (const char* f = theta_forms[k - 1]) {
            const std::string name = block_string(detail::blocks_of(f));
            sink.add("theta.form." + S, "theta image, " + list_location.at(k), name,
                     detail::listed_gram(theta_list, *reference::theta_form(k), name));
        }
        {
            // <theta x, theta y> = |G| <x, y> on every pair of P^vee basis vectors
            const ThetaMap theta(c.group);
            const Rational scale(c.group.order());
            bool law = true;
            for (std::size_t i = 0; i < c.P_dual.rank() && law; ++i)
                for (std::size_t j = 0; j < c.P_dual.rank() && law; ++j) {
                    const RatVector x = c.P_dual.basis().row(i), y = c.P_dual.basis().row(j);
                    law = c.P_dual.pair(theta(x), theta(y)) == scale * c.P_dual.pair(x, y);
                }
            sink.add("theta.scaling." + S, "pullback scales the pairing by the group order",
                     "factor " + std::to_string(c.group.order()), law ? "factor " + std::to_string(c.group.order()) : "violated");
        }

        sink.add("p.list." + S, "complement of the branch curves, " + list_location.at(k), "equal",
                 compare_lattices(Lattice::from_generators(sp, reference::p_generators(k)), c.P));
        if (auto pd = reference::p_dual_generators(k))
            sink.add("p_dual.list." + S, "dual of the complement, " + list_location.at(k), "equal",
                     compare_lattices(Lattice::from_generators(sp, *pd), c.P_dual));
        if (auto pf = reference::p_form(k)) {
            const std::string name = "<-2>+U(2)+U(2)+U(2)";
            sink.add("p.form." + S, "complement of the branch curves, " + list_location.at(k), name,
                     detail::listed_gram(reference::p_generators(k), *pf, name));
        }

        const std::string rank_g = k == 1 ? "Z/2" : "(Z/2)^" + std::to_string(k);
        sink.add("m.quotient." + S, "saturation of the branch curves modulo their direct sum", rank_g,
                 c.m.quotient.to_string());
        // Lambda/M_G is free and maps isomorphically onto P_G^vee; the glue
        // Lambda/(M_G + P_G) is the discriminant group of P_G
        {
            const std::string loc = "Lambda/M_G compared with P_G^vee";
            sink.add("m.model_quotient." + S, loc, FGAbelianGroup::integers(c.P.rank()).to_string(),
                     model_quotient(c.m.M).to_string());
            sink.add("p_dual.pairing_image." + S, loc, "P^vee", pairing_image(c.P) == c.P_dual ? "P^vee" : "other lattice");
            const Lattice MP = Lattice::from_generators(sp, vstack(c.m.M.basis(), c.P.basis()));
            sink.add("m.glue." + S, loc, discriminant_group(c.P).to_string(), model_quotient(MP).to_string());
        }

        sink.add("defect." + S, "index of the theta image in the invariant lattice", reference::expected_defect(k).str(),
                 c.defect.str());
        doc.defects.push_back(c.defect);

        const auto h3 = cohomology(IntVector(static_cast<std::size_t>(k), Integer(2)), 3);
        sink.add("crosscheck." + S, "order of V_G against the defect", c.defect.str(), h3.order().str());

        doc.lattices.emplace_back("fixed " + S, payload(c.fixed));
        doc.lattices.emplace_back("P " + S, payload(c.P));
        doc.lattices.emplace_back("P_dual " + S, payload(c.P_dual));
        doc.lattices.emplace_back("theta " + S, payload(c.theta));
        doc.lattices.emplace_back("M " + S, payload(c.m.M));
    }

    // group cohomology
    {
        std::size_t checked = 0, bad = 0;
        for (long n = 2; n <= 16; ++n)
            for (const auto& g : abelian_groups_of_order(n)) {
                const auto H = graded_cohomology(g, 2);
                ++checked;
                if (!H[1].is_trivial() || H[2] != FGAbelianGroup::from_cyclic(0, g)) ++bad;
            }
        sink.add("cohomology.h1_h2", "low-degree cohomology of finite abelian groups",
                 "H^1=0, H^2=G for " + std::to_string(checked) + " groups",
                 bad ? std::to_string(bad) + " failures" : "H^1=0, H^2=G for " + std::to_string(checked) + " groups");

        std::vector<IntVector> rows;
        for (long n = 2; n <= 8; ++n) rows.push_back({Integer(n)});
        for (auto shape : {IntVector{2, 2}, IntVector{2, 2, 2}, IntVector{2, 2, 2, 2}, IntVector{3, 3}, IntVector{4, 4}})
            rows.push_back(shape);
        for (const auto& r : rows) {
            const auto e = v_table(r);
            sink.add("v_table." + e.group.to_string(), "table of V_G for symplectic abelian groups",
                     e.tabulated.to_string(), e.computed.to_string());
        }
        for (auto shape : {IntVector{2, 4}, IntVector{2, 6}}) {
            const auto e = v_table(shape);
            sink.reported("v_table." + e.group.to_string(), "table of V_G for symplectic abelian groups",
                          e.tabulated.to_string(), e.computed.to_string());
        }
    }

    // structural properties
    {
        std::mt19937 rng(20240501u);
        std::uniform_int_distribution<int> entry(-9, 9);
        std::size_t bad = 0;
        const std::size_t trials = 200;
        for (std::size_t t = 0; t < trials; ++t) {
            IntMatrix A(4, 4);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) A(i, j) = entry(rng);
            const auto d = detail::determinantal_divisors(A);
            const auto e = elementary_divisors(A);
            Integer prod = 1;
            for (std::size_t k = 0; k < 4; ++k) {
                prod *= k < e.size() ? e[k] : Integer(0);
                if (prod != d[k]) {
                    ++bad;
                    break;
                }
            }
        }
        sink.add("property.snf_minors", "Smith form against gcds of minors, random 4x4 matrices",
                 std::to_string(trials) + " agree", std::to_string(trials - bad) + " agree");

        std::vector<std::pair<std::string, Lattice>> nondeg{{"kummer", K}, {"model", model}};
        for (int k = 1; k <= 4; ++k) {
            nondeg.emplace_back("fixed " + case_name(k), cases[k - 1].fixed);
            nondeg.emplace_back("P " + case_name(k), cases[k - 1].P);
        }
        std::size_t dd_bad = 0;
        for (const auto& [name, L] : nondeg) dd_bad += !(dual(dual(L)) == L);
        sink.add("property.dual_dual", "duality is an involution on nondegenerate lattices",
                 std::to_string(nondeg.size()) + " lattices", std::to_string(nondeg.size() - dd_bad) + " lattices");

        std::size_t cc_bad = 0, cc_total = 0;
        std::vector<Lattice> subs{K};
        for (const auto& c : cases) {
            subs.push_back(c.m.M);
            subs.push_back(c.P);
            subs.push_back(c.fixed);
            subs.push_back(c.m.curve_span);
        }
        for (const auto& L : subs) {
            ++cc_total;
            cc_bad += !(orthogonal_complement(orthogonal_complement(L, model), model) == saturate(L, model));
        }
        sink.add("property.complement_twice", "double orthogonal complement is the saturation",
                 std::to_string(cc_total) + " lattices", std::to_string(cc_total - cc_bad) + " lattices");

        // [L:S]^2 |det L| = |det S|
        std::vector<std::pair<Lattice, Lattice>> pairs;
        for (const auto& c : cases) {
            pairs.emplace_back(c.theta, c.fixed);
            pairs.emplace_back(c.m.curve_span, c.m.M);
            pairs.emplace_back(c.P, c.P_dual);
        }
        {
            std::vector<RatVector> curves;
            for (auto a : TorsionIndex::all()) curves.push_back(kummer::curve(a));
            pairs.emplace_back(Lattice::from_generators(kummer::ambient(), curves), K);
        }
        std::size_t id_bad = 0;
        for (const auto& [S, L] : pairs) {
            const Integer idx = index_of_sublattice(S, L);
            id_bad += !(Rational(idx * idx) * abs(determinant(L.gram())) == abs(determinant(S.gram())));
        }
        sink.add("property.index_det", "index squared times determinant on sublattice pairs",
                 std::to_string(pairs.size()) + " pairs", std::to_string(pairs.size() - id_bad) + " pairs");
    }

    return doc;
}

// ---------------------------------------------------------------------------
// serialization

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const RatMatrix& M) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        ordered_json r = ordered_json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) r.push_back(to_string(M(i, j)));
        rows.push_back(std::move(r));
    }
    return rows;
}

inline ordered_json to_json(const LatticePayload& p) {
    ordered_json j;
    j["rank"] = p.rank;
    j["signature"] = {p.signature.positive, p.signature.negative, p.signature.zero};
    j["determinant"] = to_string(p.determinant);
    j["integral"] = p.integral;
    j["even"] = p.even;
    if (p.discriminant) {
        ordered_json d = ordered_json::array();
        for (const auto& x : *p.discriminant) d.push_back(x.str());
        j["discriminant"] = std::move(d);
        ordered_json q = ordered_json::array();
        for (const auto& x : p.q_values) q.push_back(to_string(x));
        j["q_values"] = std::move(q);
    } else {
        j["discriminant"] = nullptr;
        j["q_values"] = nullptr;
    }
    j["basis"] = to_json(p.basis);
    j["gram"] = to_json(p.gram);
    return j;
}

inline ordered_json to_json(const ReportDocument& doc) {
    ordered_json j;
    j["tool"] = "kumlat";
    j["version"] = doc.tool_version;
    j["summary"] = {{"claims", doc.claims.size()},
                    {"match", doc.count(ClaimStatus::match)},
                    {"mismatch", doc.count(ClaimStatus::mismatch)},
                    {"reported_only", doc.count(ClaimStatus::reported_only)}};
    ordered_json defects = ordered_json::array();
    for (const auto& d : doc.defects) defects.push_back(d.convert_to<long long>());
    j["defects"] = std::move(defects);
    j["kummer_census"] = {{"q0", doc.census.q0_count}, {"q1", doc.census.q1_count}};
    ordered_json claims = ordered_json::array();
    for (const auto& c : doc.claims)
        claims.push_back({{"id", c.id},
                          {"location", c.location},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"status", to_string(c.status)}});
    j["claims"] = std::move(claims);
    ordered_json lat;
    for (const auto& [name, p] : doc.lattices) lat[name] = to_json(p);
    j["lattices"] = std::move(lat);
    return j;
}

inline std::string to_text(const ReportDocument& doc) {
    std::ostringstream os;
    os << "kumlat " << doc.tool_version << " reproduction report\n\n";
    for (const auto& c : doc.claims) {
        os << "[" << to_string(c.status) << "] " << c.id << "\n"
           << "    " << c.location << "\n"
           << "    expected: " << c.expected << "\n"
           << "    computed: " << c.computed << "\n";
    }
    os << "\ndefects:";
    for (const auto& d : doc.defects) os << " " << d;
    os << "\nkummer census: q0=" << doc.census.q0_count << " q1=" << doc.census.q1_count << "\n";
    os << "claims: " << doc.claims.size() << ", match " << doc.count(ClaimStatus::match) << ", mismatch "
       << doc.count(ClaimStatus::mismatch) << ", reported-only " << doc.count(ClaimStatus::reported_only) << "\n";
    return os.str();
}

}  // namespace kumlat
