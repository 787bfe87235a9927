#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "chowfano/app.hpp"
#include "chowfano/expr.hpp"
#include "chowfano/schubert.hpp"

using namespace chowfano;

int main(int argc, char** argv) {
    CLI::App cli{"chowfano: exact Schubert calculus and symplectic checks for the cubic-hypersurface program"};
    cli.require_subcommand(1);

    app::RunConfig cfg;
    std::uint64_t trials_flag = 0;
    bool trials_given = false;
    if (const char* env = std::getenv("CHOWFANO_CACHE")) cfg.cache_path = env;
    cli.add_option("--seed", cfg.seed, "seed for every randomized suite");
    auto* topt = cli.add_option("--trials", trials_flag, "instances per randomized suite");
    cli.add_option("--format", cfg.format, "stdout format: table, json or md")
        ->check(CLI::IsMember({"table", "json", "md"}));
    cli.add_option("--cache", cfg.cache_path, "Littlewood-Richardson cache file (default $CHOWFANO_CACHE)");
    cli.add_option("--out", cfg.out_dir, "directory for report and certificate files");

    std::string target = "all";
    auto* rep = cli.add_subcommand("reproduce", "recompute the enumerative program and compare with the golden table");
    rep->add_option("target", target, "fano-genus4, cubic5-planes, lines-curve or all")
        ->check(CLI::IsMember({"fano-genus4", "cubic5-planes", "lines-curve", "all"}));

    std::string check;
    auto* sym = cli.add_subcommand("symplectic", "run a seeded certificate suite of exact linear-algebra checks");
    sym->add_option("check", check, "theorem1, prop2, prop4, lemma5, nodal, conic-smooth or theta")
        ->required()
        ->check(CLI::IsMember({"theorem1", "prop2", "prop4", "lemma5", "nodal", "conic-smooth", "theta"}));

    std::string expr;
    auto* sch = cli.add_subcommand("schubert", "evaluate a product expression, e.g. \"s[2]*s[3,3,1] @G(3,6) !int\"");
    sch->add_option("expr", expr, "expression with context selector")->required();

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return cli.exit(e);
    }
    trials_given = topt->count() > 0;
    if (trials_given) cfg.trials = trials_flag;

    std::string cache_warning;
    if (!cfg.cache_path.empty()) {
        lr_cache_load(cfg.cache_path, &cache_warning);
        if (!cache_warning.empty()) std::cerr << "warning: " << cache_warning << "\n";
    }

    int status = 1;
    try {
        if (rep->parsed())
            status = app::run_reproduce(target, cfg, std::cout);
        else if (sym->parsed())
            status = app::run_symplectic(check, cfg, std::cout);
        else if (sch->parsed())
            status = app::run_schubert(expr, cfg, std::cout);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (!cfg.cache_path.empty()) lr_cache_save(cfg.cache_path);
    return status;
}
