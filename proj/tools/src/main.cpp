#include "cdvwall/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cdvwall;
using namespace cdvwall::cli;

int main(int argc, char** argv) {
    CLI::App app{"Labelled Dynkin data, restricted roots, chambers and BPS vanishing for cDV resolutions", "cdvwall"};
    app.set_version_flag("--version", kVersion);

    std::string command, family, contracted, non_flop, window, config_path;
    std::optional<int> rank, n;
    long long kmax = 3, maxlen = 6;
    bool affine = false, rigidified = false, weighted = false;
    std::string format = "json", out;

    std::string names;
    for (const auto& c : commands()) names += (names.empty() ? "" : ", ") + c;
    app.add_option("command", command, "one of: " + names)->required();
    app.add_option("--family", family, "A, D or E");
    app.add_option("--rank", rank, "rank of the finite diagram");
    app.add_flag("--affine", affine, "use the extended diagram");
    app.add_option("--contracted", contracted, "contracted nodes, e.g. 1,4,5 (empty string for none)");
    app.add_option("--kmax", kmax, "level window |k| <= K")->capture_default_str();
    app.add_option("--maxlen", maxlen, "word-length bound L")->capture_default_str();
    app.add_flag("--rigidified", rigidified, "enable motivic twist and duality relations");
    app.add_flag("--weighted-homogeneous", weighted, "verdicts also label the global invariant");
    app.add_option("--non-flop", non_flop, "nodes whose curves do not flop, e.g. 0,3,4");
    app.add_option("--window", window, "class window, e.g. chi=6,beta=3");
    app.add_option("--format", format, "json, csv, dot or svg")->capture_default_str();
    app.add_option("--out", out, "output path (default: standard output)");
    app.add_option("--n", n, "dihedral case D_2n (default: 2..5)");
    app.add_option("--config", config_path, "JSON config file; its fields override the flags");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        JobConfig cfg;
        if (!family.empty()) {
            try {
                cfg.family = parse_family(family);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("--family: ") + e.what());
            }
        }
        cfg.rank = rank;
        cfg.affine = affine;
        if (app.count("--contracted")) cfg.contracted = parse_node_list(contracted);
        cfg.kmax = kmax;
        cfg.maxlen = maxlen;
        cfg.rigidified = rigidified;
        cfg.weighted_homogeneous = weighted;
        if (!non_flop.empty()) cfg.non_flop = parse_node_list(non_flop);
        if (!window.empty()) cfg.window = parse_window(window);
        cfg.format = format;
        cfg.out = out;
        cfg.n = n;
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) throw UsageError("--config: cannot read '" + config_path + "'");
            std::stringstream s;
            s << f.rdbuf();
            cfg = merge_json(cfg, s.str());
        }
        return run(command, cfg, std::cout, std::cerr);
    } catch (const UsageError& e) {
        std::cerr << "cdvwall: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "cdvwall: " << command << " failed: " << e.what() << "\n";
        return 1;
    }
}
