#include "pw/cli/commands.hpp"
#include "pw/doubles/doubles.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>

namespace {

using pw::cli::Options;
using pw::cli::Report;

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--field-override", opt.field_override,
                    "reinterpret the algebra over F_p for the given prime p");
    cmd->add_option("--out", opt.out, "write output to this file instead of stdout");
    cmd->add_flag("--text", opt.text, "human-readable output instead of JSON");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pivotal-workbench: exact verification of Hopf-algebraic doubles, "
                 "pairs in involution, and a decorated diagram category"};
    app.require_subcommand(1);

    Options opt;
    std::string path, kind = "drinfeld";
    std::uint32_t n = 1;
    bool verify = false;

    auto* hopf_check = app.add_subcommand("hopf-check", "verify all Hopf axioms of a file");
    hopf_check->add_option("path", path)->required();
    add_common(hopf_check, opt);

    auto* grouplikes = app.add_subcommand("grouplikes", "enumerate group-like elements");
    grouplikes->add_option("path", path)->required();
    add_common(grouplikes, opt);

    auto* characters = app.add_subcommand("characters", "enumerate characters");
    characters->add_option("path", path)->required();
    add_common(characters, opt);

    auto* pii = app.add_subcommand("pii", "pairs in involution and their heap");
    pii->add_option("path", path)->required();
    add_common(pii, opt);

    auto* dbl = app.add_subcommand("double", "build the Drinfeld or anti-Drinfeld double");
    dbl->add_option("path", path)->required();
    dbl->add_option("--kind", kind, "drinfeld or anti")->check(CLI::IsMember({"drinfeld", "anti"}));
    // --out exports the double itself; the report always goes to stdout
    add_common(dbl, opt);

    auto* iso = app.add_subcommand("iso", "three-way equivalence: pairs, 1-dim ayd, iso D->A");
    iso->add_option("path", path)->required();
    add_common(iso, opt);

    auto* kappa = app.add_subcommand("kappa", "pair-to-pivot heap morphism and orbit quotient");
    kappa->add_option("path", path)->required();
    add_common(kappa, opt);

    auto* freecat = app.add_subcommand("freecat", "diagram-category verifications");
    freecat->require_subcommand(1);
    auto* relations = freecat->add_subcommand("relations", "check the defining relations");
    add_common(relations, opt);
    auto* halfbraidings = freecat->add_subcommand("halfbraidings", "classify half-braidings");
    halfbraidings->add_option("--n", n, "strand count")->required();
    add_common(halfbraidings, opt);
    auto* zeta = freecat->add_subcommand("zeta", "the signature pivotal assignment");
    zeta->add_flag("--verify", verify, "run the full pivotal verification");
    zeta->add_option("--bound", opt.bound, "verification width bound");
    add_common(zeta, opt);
    auto* noninduced = freecat->add_subcommand("noninduced", "non-inducedness witness report");
    noninduced->add_option("--bound", opt.bound, "verification width bound");
    add_common(noninduced, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        opt.max_scan = pw::cli::max_scan_from_env();
        Report rep;
        Options emit_opt = opt;
        if (hopf_check->parsed()) rep = pw::cli::cmd_hopf_check(path, opt);
        else if (grouplikes->parsed()) rep = pw::cli::cmd_grouplikes(path, opt);
        else if (characters->parsed()) rep = pw::cli::cmd_characters(path, opt);
        else if (pii->parsed()) rep = pw::cli::cmd_pii(path, opt);
        else if (dbl->parsed()) {
            rep = pw::cli::cmd_double(path, kind, opt);
            emit_opt.out.clear();  // --out already consumed by the export
        } else if (iso->parsed()) rep = pw::cli::cmd_iso(path, opt);
        else if (kappa->parsed()) rep = pw::cli::cmd_kappa(path, opt);
        else if (freecat->parsed()) {
            if (relations->parsed()) rep = pw::cli::cmd_freecat_relations(opt);
            else if (halfbraidings->parsed()) rep = pw::cli::cmd_freecat_halfbraidings(n, opt);
            else if (zeta->parsed()) rep = pw::cli::cmd_freecat_zeta(verify, opt);
            else rep = pw::cli::cmd_freecat_noninduced(opt);
        }
        return pw::cli::emit(rep, emit_opt);
    } catch (const pw::doubles::AxiomFailure& e) {
        std::fprintf(stderr, "axiom failure: %s\n", e.what());
        return pw::cli::kExitCheckFailed;
    } catch (const pw::doubles::NotAnIsomorphism& e) {
        std::fprintf(stderr, "isomorphism check failed: %s\n", e.what());
        return pw::cli::kExitCheckFailed;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return pw::cli::kExitInputError;
    }
}
