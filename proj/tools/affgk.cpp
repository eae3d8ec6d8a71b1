#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "affgk/acceptance.hpp"
#include "affgk/io.hpp"

namespace {

using affgk::io::Json;

struct GlobalOpts {
    std::string format = "json";
    std::string outPath;
    int threads = 1;
};

void emit(const GlobalOpts& g, const std::string& text)
{
    if (g.outPath.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(g.outPath);
        if (!out) throw std::runtime_error("cannot open output path " + g.outPath);
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
    }
}

void emit_json(const GlobalOpts& g, const Json& j) { emit(g, j.dump(2)); }

char parse_kind(const std::string& type)
{
    if (type.size() != 1 || type[0] < 'A' || type[0] > 'G')
        throw std::invalid_argument("--type expects a single letter A..G");
    return type[0];
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite and affine Gindikin-Karpelevich generating functions"};
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", global.outPath, "Write the report to a file instead of stdout");
    app.add_option("--threads", global.threads, "Worker threads for enumeration (results never depend on this)")
        ->check(CLI::PositiveNumber);

    std::string type = "A";
    int rank = 1;
    int maxHeight = 4;
    int zmax = 5;
    int nmax = 5;
    bool affineFlag = false;
    std::optional<long long> evalQ;

    auto addTypeRank = [&](CLI::App* cmd) {
        cmd->add_option("--type", type, "Type letter A..G")->required();
        cmd->add_option("--rank", rank, "Rank of the finite type")->required();
    };

    // roots
    auto* rootsCmd = app.add_subcommand("roots", "Positive (co)roots with multiplicities");
    addTypeRank(rootsCmd);
    rootsCmd->add_flag("--affine", affineFlag, "List coroots of the untwisted affinization");
    rootsCmd->add_option("--max-height", maxHeight, "Height bound")->required();

    // gk finite|affine
    auto* gkCmd = app.add_subcommand("gk", "Gindikin-Karpelevich generating function");
    gkCmd->require_subcommand(1);
    auto* gkFinite = gkCmd->add_subcommand("finite", "Finite right-hand side");
    auto* gkAffine = gkCmd->add_subcommand("affine", "Affine right-hand side");
    for (auto* cmd : {gkFinite, gkAffine}) {
        addTypeRank(cmd);
        cmd->add_option("--max-height", maxHeight, "Height bound")->required();
        cmd->add_option("--eval-q", evalQ, "Evaluate coefficients at a numeric q");
    }

    // delta
    auto* deltaCmd = app.add_subcommand("delta", "Graded symmetric-algebra series Delta(z)");
    addTypeRank(deltaCmd);
    deltaCmd->add_option("--zmax", zmax, "Truncation order in z")->required();
    deltaCmd->add_option("--eval-q", evalQ, "Evaluate coefficients at a numeric q");

    // wspace
    auto* wCmd = app.add_subcommand("wspace", "Principal invariant space table (n, d) -> mult");
    addTypeRank(wCmd);
    wCmd->add_option("--nmax", nmax, "Largest loop degree")->required();

    // correction
    std::string method = "product";
    auto* corrCmd = app.add_subcommand("correction", "Affine correction factor");
    addTypeRank(corrCmd);
    corrCmd->add_option("--zmax", zmax, "Truncation order in z")->required();
    corrCmd->add_option("--method", method, "product | partitions")
        ->check(CLI::IsMember({"product", "partitions"}));
    corrCmd->add_option("--eval-q", evalQ, "Numeric q (required for the partitions method)");

    // oracle count
    auto* oracleCmd = app.add_subcommand("oracle", "Brute-force orbit intersection counts");
    oracleCmd->require_subcommand(1);
    auto* countCmd = oracleCmd->add_subcommand("count", "Count points of one intersection");
    std::string group = "SL";
    int oracleRank = 1;
    int prime = 2;
    std::vector<int> gammaCoords;
    std::string poleBound = "auto";
    countCmd->add_option("--group", group, "Group family (SL only)")
        ->check(CLI::IsMember({"SL"}));
    countCmd->add_option("--rank", oracleRank, "1 for SL_2, 2 for SL_3")->required();
    countCmd->add_option("--p", prime, "Prime field size")->required();
    countCmd->add_option("--gamma", gammaCoords, "Coroot coefficients c1[,c2]")
        ->required()
        ->delimiter(',');
    countCmd->add_option("--pole-bound", poleBound, "auto or a fixed bound");

    // check consistency | all
    auto* checkCmd = app.add_subcommand("check", "Identity checks and the acceptance suite");
    checkCmd->require_subcommand(1);
    auto* consCmd = checkCmd->add_subcommand("consistency", "Partition-count identity check");
    addTypeRank(consCmd);
    int consQ = 2;
    std::string countSource = "formula";
    consCmd->add_option("--max-height", maxHeight, "Height bound")->required();
    consCmd->add_option("--q", consQ, "Prime used to evaluate the counts")->required();
    consCmd->add_option("--counts", countSource, "formula | oracle")
        ->check(CLI::IsMember({"formula", "oracle"}));
    auto* allCmd = checkCmd->add_subcommand("all", "Run the full verification suite");
    std::string suite = "desk";
    allCmd->add_option("--suite", suite, "Suite name")->check(CLI::IsMember({"desk"}));

    CLI11_PARSE(app, argc, argv);

    try {
        std::optional<affgk::Int> evalQInt;
        if (evalQ) {
            if (*evalQ == 0) throw std::invalid_argument("--eval-q must be nonzero");
            evalQInt = affgk::Int(*evalQ);
        }

        if (rootsCmd->parsed()) {
            char kind = parse_kind(type);
            std::vector<affgk::CorootWithMult> list;
            if (affineFlag) {
                list = affgk::positive_coroots_with_mult(affgk::build_cartan(kind, rank),
                                                         maxHeight);
            } else {
                for (const auto& r : affgk::positive_roots(affgk::build_cartan(kind, rank))) {
                    if (r.height() > maxHeight) continue;
                    affgk::CorootWithMult c;
                    c.vector = r;
                    list.push_back(c);
                }
            }
            if (global.format == "csv")
                emit(global, affgk::io::roots_csv(list));
            else
                emit_json(global, affgk::io::roots_json(list));
            return 0;
        }

        if (gkFinite->parsed() || gkAffine->parsed()) {
            char kind = parse_kind(type);
            affgk::CartanData c = affgk::build_cartan(kind, rank);
            affgk::GKReport rep = gkFinite->parsed() ? affgk::finite_gk_rhs(c, maxHeight)
                                                     : affgk::affine_gk_rhs(c, maxHeight);
            if (global.format == "csv")
                emit(global, affgk::io::report_csv(rep, evalQInt));
            else
                emit_json(global, affgk::io::report_json(rep, evalQInt));
            return 0;
        }

        if (deltaCmd->parsed()) {
            char kind = parse_kind(type);
            auto W = affgk::compute_W(affgk::build_cartan(kind, rank), std::max(zmax, 1));
            emit_json(global, affgk::io::zseries_json(affgk::delta_z(W, zmax), evalQInt));
            return 0;
        }

        if (wCmd->parsed()) {
            char kind = parse_kind(type);
            auto W = affgk::compute_W(affgk::build_cartan(kind, rank), nmax);
            Json j;
            j["type"] = type;
            j["rank"] = rank;
            j.update(affgk::io::wspace_json(W));
            emit_json(global, j);
            return 0;
        }

        if (corrCmd->parsed()) {
            char kind = parse_kind(type);
            auto W = affgk::compute_W(affgk::build_cartan(kind, rank), std::max(zmax, 1));
            if (method == "product") {
                emit_json(global,
                          affgk::io::zseries_json(affgk::correction_factor(W, zmax), evalQInt));
            } else {
                if (!evalQInt)
                    throw std::invalid_argument("--method partitions requires --eval-q");
                auto numeric = affgk::correction_factor_via_partitions(W, zmax, {*evalQInt});
                Json j;
                j["q"] = evalQInt->str();
                Json coeffs = Json::array();
                for (int n = 0; n <= zmax; ++n) {
                    Json c;
                    c["n"] = n;
                    c["value"] = affgk::io::rat_str(numeric[0].coeffs[n]);
                    coeffs.push_back(std::move(c));
                }
                j["coefficients"] = std::move(coeffs);
                emit_json(global, j);
            }
            return 0;
        }

        if (countCmd->parsed()) {
            affgk::OrbitQuery qry;
            qry.m = oracleRank + 1;
            qry.p = prime;
            qry.gamma = gammaCoords;
            qry.threads = global.threads;
            if (poleBound != "auto") qry.poleBound = std::stoi(poleBound);
            emit_json(global, affgk::io::oracle_json(affgk::count_points(qry)));
            return 0;
        }

        if (consCmd->parsed()) {
            char kind = parse_kind(type);
            affgk::CartanData c = affgk::build_cartan(kind, rank);
            std::map<affgk::LatticeVector, affgk::Int> counts;
            if (countSource == "formula") {
                affgk::GKReport rep = affgk::finite_gk_rhs(c, maxHeight);
                for (const auto& [gamma, poly] : rep.counts) {
                    affgk::Rat value = poly.evalAtQ(affgk::Rat(consQ));
                    counts[gamma] = numerator(value);
                }
            } else {
                if (rank > 2)
                    throw std::invalid_argument("oracle counts reach SL_2 and SL_3 only");
                for (const auto& gamma : affgk::height_simplex(rank, maxHeight)) {
                    affgk::OrbitQuery qry;
                    qry.m = rank + 1;
                    qry.p = consQ;
                    qry.gamma = gamma.coords;
                    qry.threads = global.threads;
                    counts[gamma] = affgk::count_points(qry).count;
                }
            }
            auto report = affgk::finite_consistency_check(c, maxHeight, counts, affgk::Int(consQ));
            emit_json(global, affgk::io::consistency_json(report));
            return report.pass ? 0 : 1;
        }

        if (allCmd->parsed()) {
            auto results = affgk::acceptance::run_all(&std::cout, global.threads);
            bool ok = affgk::acceptance::all_pass(results);
            std::cout << (ok ? "all criteria passed" : "FAILURES above") << std::endl;
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        Json err;
        err["error"] = e.what();
        std::cerr << err.dump(2) << std::endl;
        return 1;
    }
    return 0;
}
