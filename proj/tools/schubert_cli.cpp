// Command-line front end: root-system data dumps, exact cap products and
// localization integrals, residual-invariant bases, non-integrality
// certificates, and the full reproduction table.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "schubert/chevalley.hpp"
#include "schubert/fixtures.hpp"
#include "schubert/integrality.hpp"
#include "schubert/localization.hpp"
#include "schubert/parallel.hpp"
#include "schubert/reproduce.hpp"

using namespace schubert;
using nlohmann::json;

namespace {

struct CommonOpts {
    std::string family;
    int rank = 0;
    std::string output = "text";
    int threads = 0;
};

const RootSystem& system_for(const CommonOpts& o) {
    Family f = parse_family(o.family);
    int rank = o.rank;
    if (f == Family::E6) rank = 6;
    if (f == Family::E7) rank = 7;
    if (rank == 0) throw CLI::ValidationError("--rank is required for the classical families");
    return RootSystem::catalog(f, rank);
}

json rational_json(const Rational& v) {
    return json{{"num", v.num().get_str()}, {"den", v.den().get_str()}};
}

struct PolySource {
    std::string inline_text;
    std::string file;
    std::string fixture;

    bool present() const { return !inline_text.empty() || !file.empty() || !fixture.empty(); }

    MultiPoly resolve(const RootSystem& sys) const {
        int given = (!inline_text.empty()) + (!file.empty()) + (!fixture.empty());
        if (given != 1)
            throw CLI::ValidationError("give exactly one of --poly, --poly-file, --fixture");
        if (!fixture.empty()) {
            MultiPoly p = fixture_polynomial(fixture);
            if (p.system() != &sys)
                throw MathError("fixture '" + fixture + "' belongs to " + p.system()->name());
            return p;
        }
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw CLI::ValidationError("cannot open polynomial file " + file);
            std::stringstream buf;
            buf << in.rdbuf();
            return parse_poly(sys, buf.str());
        }
        return parse_poly(sys, inline_text);
    }
};

void add_poly_options(CLI::App* cmd, PolySource& src) {
    cmd->add_option("--poly", src.inline_text, "polynomial in the z/t/e grammar");
    cmd->add_option("--poly-file", src.file, "file containing one polynomial");
    cmd->add_option("--fixture", src.fixture, "named fixture (e7-p5, e7-p6)");
}

Coweight coweight_for(const RootSystem& sys, const std::string& generator, long d,
                      const std::string& explicit_coords) {
    if (!explicit_coords.empty()) {
        RatVector coords;
        std::istringstream is(explicit_coords);
        std::string token;
        while (std::getline(is, token, ',')) coords.push_back(Rational::parse(token));
        if (static_cast<int>(coords.size()) != sys.rank())
            throw MathError("coweight needs " + std::to_string(sys.rank()) + " coordinates");
        return Coweight{&sys, coords};
    }
    return sys.coweight_generator(generator).scaled(Rational(d));
}

int run_rootinfo(const CommonOpts& common) {
    const RootSystem& sys = system_for(common);
    json j;
    j["family"] = family_name(sys.family());
    j["group"] = family_group_name(sys.family());
    j["rank"] = sys.rank();
    json cartan = json::array();
    for (int i = 1; i <= sys.rank(); ++i) {
        json row = json::array();
        for (int k = 1; k <= sys.rank(); ++k) row.push_back(sys.cartan(i, k).get_si());
        cartan.push_back(row);
    }
    j["cartan"] = cartan;
    json bases;
    for (const auto& [name, info] : sys.bases()) {
        json cols = json::array();
        for (std::size_t c = 0; c < info.to_zeta.cols(); ++c) {
            json col = json::array();
            for (std::size_t r = 0; r < info.to_zeta.rows(); ++r)
                col.push_back(info.to_zeta.at(r, c).str());
            cols.push_back(col);
        }
        bases[name] = cols;
    }
    j["bases"] = bases;
    json gens;
    for (const auto& [name, cw] : sys.coweight_generators()) {
        json coords = json::array();
        for (const auto& c : cw.coords) coords.push_back(c.str());
        gens[name] = coords;
    }
    j["coweight_generators"] = gens;
    json torsion;
    torsion["group"] = sys.torsion().group;
    json orders = json::array();
    for (const auto& [name, order] : sys.torsion().generator_orders)
        orders.push_back({{"generator", name}, {"order", order}});
    torsion["generators"] = orders;
    j["torsion"] = torsion;
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Schubert-calculus pairings on coadjoint-orbit bundles"};
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("--threads", common.threads, "kernel threads (0 = default)");

    auto add_common = [&](CLI::App* cmd, bool need_rank = true) {
        cmd->add_option("--family", common.family, "A|C|B|D|E6|E7")->required();
        if (need_rank) cmd->add_option("--rank", common.rank, "rank n of the family");
        cmd->add_option("--output", common.output, "text|json");
    };

    // rootinfo
    auto* rootinfo = app.add_subcommand("rootinfo", "dump a catalogued root system as JSON");
    add_common(rootinfo);

    // cap
    auto* capcmd = app.add_subcommand("cap", "pairing against a fibered or vertical cell");
    add_common(capcmd);
    PolySource cap_poly;
    add_poly_options(capcmd, cap_poly);
    std::string word_text, generator = "z0", coweight_text, mode = "fibered";
    long dvalue = 1;
    int orbit_r = 0;
    capcmd->add_option("--word", word_text, "comma-separated letters, leftmost printed first");
    capcmd->add_option("--d", dvalue, "multiplier of the coweight generator");
    capcmd->add_option("--generator", generator, "coweight generator name (z0, z1)");
    capcmd->add_option("--coweight", coweight_text, "explicit coroot coordinates p/q,...");
    capcmd->add_option("--mode", mode, "fibered|vertical");
    capcmd->add_option("--r", orbit_r, "optional orbit check: word must end at r");

    // localize
    auto* loccmd = app.add_subcommand("localize", "fixed-point integral over a subdiagram sweep");
    add_common(loccmd);
    PolySource loc_poly;
    add_poly_options(loccmd, loc_poly);
    std::string subdiagram = "auto", path_text;
    int loc_r = 0;
    long loc_d = 1;
    std::string loc_generator = "z0", loc_coweight;
    loccmd->add_option("--r", loc_r, "removed simple root")->required();
    loccmd->add_option("--subdiagram", subdiagram, "Gamma|GammaPrime|GammaDoublePrime|auto");
    loccmd->add_option("--path", path_text, "explicit node path r,i2,...");
    loccmd->add_option("--d", loc_d, "multiplier of the coweight generator");
    loccmd->add_option("--generator", loc_generator, "coweight generator name");
    loccmd->add_option("--coweight", loc_coweight, "explicit coroot coordinates");

    // invariants
    auto* invcmd = app.add_subcommand("invariants", "residual-invariant bases");
    add_common(invcmd);
    int inv_r = 0, inv_degree = 0;
    bool mod_iplus = false;
    invcmd->add_option("--r", inv_r, "removed simple root")->required();
    invcmd->add_option("--degree", inv_degree, "homogeneous degree")->required();
    invcmd->add_flag("--mod-iplus", mod_iplus, "invariance modulo the coinvariant ideal");

    // certify
    auto* certcmd = app.add_subcommand("certify", "non-integrality certificate for an orbit");
    add_common(certcmd);
    int cert_r = 0;
    long cert_d = 1;
    std::string cert_generator = "z0";
    certcmd->add_option("--r", cert_r, "removed simple root")->required();
    certcmd->add_option("--d", cert_d, "multiplier of the coweight generator");
    certcmd->add_option("--generator", cert_generator, "coweight generator name");

    // reproduce
    auto* repcmd = app.add_subcommand("reproduce", "re-run the catalogued pairing table");
    std::string scope = "all";
    repcmd->add_option("--scope", scope, "A|C|B|D|E6|E7|all");
    repcmd->add_option("--output", common.output, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (common.threads > 0) set_thread_count(common.threads);

    try {
        if (rootinfo->parsed()) return run_rootinfo(common);

        if (capcmd->parsed()) {
            const RootSystem& sys = system_for(common);
            MultiPoly poly = cap_poly.resolve(sys);
            WeylWord word = WeylWord::parse(sys, word_text);
            if (orbit_r > 0 && (word.empty() || word.letters().back() != orbit_r))
                throw MathError("word does not end at the removed root r");
            CapQuery q{poly, word, coweight_for(sys, generator, dvalue, coweight_text),
                       mode == "vertical" ? CapMode::Vertical : CapMode::Fibered};
            Rational v = cap(q);
            if (common.output == "json") {
                json j;
                j["family"] = family_name(sys.family());
                j["rank"] = sys.rank();
                j["word"] = word.letters();
                j["mode"] = mode;
                j["polynomial"] = poly.str();
                j["value"] = rational_json(v);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << v.str() << "\n";
            }
            return 0;
        }

        if (loccmd->parsed()) {
            const RootSystem& sys = system_for(common);
            std::vector<int> path;
            if (!path_text.empty()) {
                std::istringstream is(path_text);
                std::string token;
                while (std::getline(is, token, ',')) path.push_back(std::stoi(token));
            } else {
                std::string name = subdiagram;
                if (name == "auto")
                    name = (sys.family() == Family::D && loc_r == sys.rank() - 1)
                               ? "GammaDoublePrime"
                               : "Gamma";
                path = named_subdiagram_path(sys, loc_r, name);
            }
            MultiPoly poly = loc_poly.present() ? loc_poly.resolve(sys)
                                                : half_delta_class(sys, loc_r);
            Coweight z = coweight_for(sys, loc_generator, loc_d, loc_coweight);
            Rational v = localize(sys, path, poly, z);
            if (common.output == "json") {
                json j;
                j["family"] = family_name(sys.family());
                j["rank"] = sys.rank();
                j["path"] = path;
                j["polynomial"] = poly.str();
                j["value"] = rational_json(v);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << v.str() << "\n";
            }
            return 0;
        }

        if (invcmd->parsed()) {
            const RootSystem& sys = system_for(common);
            std::vector<MultiPoly> polys;
            if (mod_iplus)
                polys = invariant_basis_mod_iplus(sys, inv_r, inv_degree).representatives;
            else
                polys = invariant_basis(sys, inv_r, inv_degree);
            if (common.output == "json") {
                json j = json::array();
                for (const auto& p : polys) j.push_back(p.str());
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& p : polys) std::cout << p.str() << "\n";
            }
            return 0;
        }

        if (certcmd->parsed()) {
            const RootSystem& sys = system_for(common);
            auto cert = certify(sys, cert_r, cert_generator, cert_d);
            std::cout << cert.to_json() << "\n";
            return 0;
        }

        if (repcmd->parsed()) {
            auto lines = reproduce(scope);
            bool all_pass = true;
            if (common.output == "json") {
                json j = json::array();
                for (const auto& line : lines) {
                    j.push_back({{"id", line.id},
                                 {"expected", line.expected},
                                 {"computed", line.computed},
                                 {"pass", line.pass}});
                    all_pass = all_pass && line.pass;
                }
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& line : lines) {
                    std::cout << (line.pass ? "PASS " : "FAIL ") << line.id
                              << " expected=" << line.expected
                              << " computed=" << line.computed << "\n";
                    all_pass = all_pass && line.pass;
                }
                std::cout << (all_pass ? "all " : "SOME FAILURES among ") << lines.size()
                          << " checks" << (all_pass ? " passed" : "") << "\n";
            }
            return all_pass ? 0 : 1;
        }
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
