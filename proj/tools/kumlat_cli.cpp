// kumlat: command-line front end for the Kummer lattice computations.
//
// Exit codes: 0 success, 1 a report claim did not match, 2 usage error.

#include <kumlat/kumlat.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace kumlat;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void print_matrix(std::ostream& os, const RatMatrix& M) {
    std::vector<std::size_t> width(M.cols(), 1);
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) width[j] = std::max(width[j], to_string(M(i, j)).size());
    for (std::size_t i = 0; i < M.rows(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < M.cols(); ++j) {
            const std::string s = to_string(M(i, j));
            os << (j ? " " : "") << std::string(width[j] - s.size(), ' ') << s;
        }
        os << "]\n";
    }
}

void print_summary(std::ostream& os, const LatticePayload& p) {
    os << "rank: " << p.rank << "\n"
       << "signature: " << signature_string(p.signature) << "\n"
       << "determinant: " << to_string(p.determinant) << "\n"
       << "integral: " << bool_string(p.integral) << "\n"
       << "even: " << bool_string(p.even) << "\n";
    if (p.discriminant) {
        os << "discriminant: " << FGAbelianGroup::from_cyclic(0, *p.discriminant).to_string() << " "
           << factors_string(*p.discriminant) << "\n";
        os << "q-values:";
        for (const auto& q : p.q_values) os << " " << to_string(q);
        os << "\n";
    }
}

void emit_lattice(const Lattice& L, const std::string& format, bool json, const std::string& name) {
    const auto p = payload(L);
    if (json) {
        ordered_json j;
        j["lattice"] = name;
        if (format == "gram")
            j["gram"] = to_json(p.gram);
        else if (format == "basis")
            j["basis"] = to_json(p.basis);
        else
            j["payload"] = to_json(p);
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << name << "\n";
    if (format == "gram")
        print_matrix(std::cout, p.gram);
    else if (format == "basis")
        print_matrix(std::cout, p.basis);
    else
        print_summary(std::cout, p);
}

IntVector parse_orders(const std::string& text) {
    IntVector out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw usage_error("malformed group orders '" + text + "'");
        Integer m(item);
        if (m < 2) throw usage_error("cyclic orders must be at least 2");
        out.push_back(m);
    }
    if (out.empty() || text.back() == ',') throw usage_error("malformed group orders '" + text + "'");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice computations on the Kummer model of the K3 lattice"};
    app.set_version_flag("--version", std::string("kumlat ") + version());
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false;
    bool text = false;
    auto* json_opt = app.add_flag("--json", json, "machine-readable output");
    app.add_flag("--text", text, "human-readable output (default)")->excludes(json_opt);

    auto* report = app.add_subcommand("report", "run every check and print the reproduction report");

    auto* fixed = app.add_subcommand("fixed", "invariant lattice of a coordinate translation subgroup");
    std::string group;
    std::string fixed_format = "summary";
    bool want_p = false, want_p_dual = false, want_theta = false, want_defect = false;
    fixed->add_option("--group", group, "doubled coordinates, e.g. 1,2")->required();
    fixed->add_option("--format", fixed_format, "gram, basis or summary")
        ->check(CLI::IsMember({"gram", "basis", "summary"}));
    fixed->add_flag("--p", want_p, "complement P_G of the branch curves");
    fixed->add_flag("--p-dual", want_p_dual, "dual of P_G");
    fixed->add_flag("--theta", want_theta, "pullback image of the dual of P_G");
    fixed->add_flag("--defect", want_defect, "index of the pullback image");

    auto* lattice = app.add_subcommand("lattice", "inspect a standard lattice such as U(2)+<-4>+E8(-1)");
    std::string lattice_spec;
    std::string lattice_format = "summary";
    lattice->add_option("spec", lattice_spec, "blocks joined by '+': U, U(n), <m>, E8(-1), K3")->required();
    lattice->add_option("--format", lattice_format)->check(CLI::IsMember({"gram", "basis", "summary"}));

    auto* kummer_cmd = app.add_subcommand("kummer", "Kummer lattice, Nikulin lattice and the K3 model");
    std::string which = "kummer";
    std::string kummer_format = "summary";
    bool census = false;
    kummer_cmd->add_option("--lattice", which)->check(CLI::IsMember({"kummer", "nikulin", "model"}));
    kummer_cmd->add_option("--format", kummer_format)->check(CLI::IsMember({"gram", "basis", "summary"}));
    kummer_cmd->add_flag("--census", census, "q-values over the whole discriminant group");

    auto* coh = app.add_subcommand("cohomology", "H^n(G, Z) for G a product of cyclic groups");
    std::string orders_text;
    std::size_t degree = 0;
    bool v_table_flag = false;
    coh->add_option("group", orders_text, "cyclic orders, e.g. 2,2,2")->required();
    coh->add_option("--degree", degree, "cohomological degree")->required();
    coh->add_flag("--v-table", v_table_flag, "compare H^3 with the tabulated V_G");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*report) {
            const auto doc = build_report();
            if (json)
                std::cout << to_json(doc).dump(2) << "\n";
            else
                std::cout << to_text(doc);
            return doc.ok() ? kOk : kMismatch;
        }

        if (*fixed) {
            TranslationSubgroup G = [&] {
                try {
                    return TranslationSubgroup::parse(group);
                } catch (const error& e) {
                    throw usage_error(e.what());
                }
            }();
            const auto c = analyze(G);
            const std::string S = "S={" + G.str() + "}";
            if (want_defect) {
                if (json) {
                    ordered_json j;
                    j["group"] = G.str();
                    j["defect"] = c.defect.str();
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << c.defect << "\n";
                }
                return kOk;
            }
            if (want_p) emit_lattice(c.P, fixed_format, json, "P " + S);
            else if (want_p_dual) emit_lattice(c.P_dual, fixed_format, json, "P_dual " + S);
            else if (want_theta) emit_lattice(c.theta, fixed_format, json, "theta " + S);
            else emit_lattice(c.fixed, fixed_format, json, "fixed " + S);
            return kOk;
        }

        if (*lattice) {
            std::vector<StandardBlock> blocks;
            try {
                blocks = parse_standard_spec(lattice_spec);
            } catch (const error& e) {
                throw usage_error(e.what());
            }
            emit_lattice(standard_lattice(blocks), lattice_format, json, block_string(blocks));
            return kOk;
        }

        if (*kummer_cmd) {
            const Lattice L = which == "nikulin" ? nikulin_lattice() : which == "model" ? k3_kummer_model() : kummer_lattice();
            if (census) {
                if (which == "model") throw usage_error("the model is unimodular; its discriminant group is trivial");
                const auto c = disc_census(L);
                if (json) {
                    ordered_json j;
                    j["lattice"] = which;
                    j["total"] = c.total;
                    j["zero_q"] = to_string(c.zero_q);
                    j["q0"] = c.q0_count;
                    j["q1"] = c.q1_count;
                    j["other"] = c.other_count;
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << which << " discriminant census\n"
                              << "classes: " << c.total << "\n"
                              << "nonzero with q = 0: " << c.q0_count << "\n"
                              << "nonzero with q = 1: " << c.q1_count << "\n"
                              << "other: " << c.other_count << "\n";
                }
                return kOk;
            }
            emit_lattice(L, kummer_format, json, which);
            return kOk;
        }

        if (*coh) {
            const IntVector orders = parse_orders(orders_text);
            const auto H = cohomology(orders, degree);
            const auto G = FGAbelianGroup::from_cyclic(0, orders);
            std::optional<VTableEntry> row;
            if (v_table_flag) {
                if (!tabulated_v(G)) throw usage_error("no tabulated V_G for " + G.to_string());
                row = v_table(orders);
            }
            if (json) {
                ordered_json j;
                j["group"] = G.to_string();
                j["degree"] = degree;
                j["cohomology"] = H.to_string();
                if (row) {
                    j["v_table"] = {{"tabulated", row->tabulated.to_string()},
                                    {"computed", row->computed.to_string()},
                                    {"agrees", row->agrees}};
                }
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << H.to_string() << "\n";
                if (row)
                    std::cout << "V_G tabulated: " << row->tabulated.to_string()
                              << ", H^3 computed: " << row->computed.to_string()
                              << ", agrees: " << bool_string(row->agrees) << "\n";
            }
            return kOk;
        }
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
