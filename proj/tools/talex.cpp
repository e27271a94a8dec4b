// talex: twisted Alexander polynomials of two-bridge link families at
// parabolic (and general character-variety) representations.
//
// Exit codes: 0 all checks pass, 1 a mathematical claim failed on a counted
// case, 2 computational failure (residuals, convergence, bad input).

#include <complex>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "talex/suites.hpp"

namespace {

using talex::Report;

int flip_mode_from(const std::string& s) {
    if (s == "unflipped") return 0;
    if (s == "flipped") return 1;
    if (s == "both") return 2;
    throw CLI::ValidationError("--flip", "must be one of unflipped, flipped, both");
}

std::complex<double> parse_z(const std::string& s) {
    try {
        std::size_t comma = s.find(',');
        if (comma == std::string::npos) return {std::stod(s), 0.0};
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--z", "expects RE or RE,IM");
    }
}

void emit(const Report& rep, const std::string& format, const std::string& out_path) {
    std::string text =
        format == "csv" ? talex::report_to_csv(rep) : talex::report_to_json(rep).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

void print_riley_text(const Report& rep) {
    for (const auto& inst : rep.instances) {
        std::cout << "family: " << talex::family_name(inst.family) << "\n";
        if (inst.has_riley)
            std::cout << "riley polynomial: " << inst.riley.to_string("z") << "\n";
        std::cout << "roots (" << inst.cases.size() << "):\n";
        for (const auto& c : inst.cases) {
            std::cout << "  z = " << c.ch.z.real();
            if (c.ch.z.imag() != 0.0) std::cout << (c.ch.z.imag() < 0 ? " - " : " + ")
                                                << std::abs(c.ch.z.imag()) << "i";
            std::cout << "  (multiplicity " << c.multiplicity
                      << (c.is_real_root ? ", real" : ", nonreal")
                      << ", residual " << c.root_residual << ")\n";
        }
        if (!inst.reducible_roots.empty()) {
            std::cout << "reducible roots (|z - 2| below cutoff): ";
            for (std::size_t i = 0; i < inst.reducible_roots.size(); ++i)
                std::cout << (i ? ", " : "") << inst.reducible_roots[i].z.real();
            std::cout << "\n";
        }
        if (!inst.note.empty()) std::cout << "note: " << inst.note << "\n";
    }
}

struct CommonArgs {
    talex::RunConfig cfg;
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* sub, CommonArgs& c) {
    sub->add_option("--tol", c.cfg.tol, "verification tolerance")->capture_default_str();
    sub->add_option("--precision", c.cfg.precision, "root-finder precision")
        ->capture_default_str();
    sub->add_option("--seed", c.cfg.seed, "sampling seed")->capture_default_str();
    sub->add_option("--format", c.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", c.out, "write the report to this file instead of stdout");
}

talex::FamilySpec::Kind kind_from(const std::string& s) {
    return s == "C" ? talex::FamilySpec::Kind::C : talex::FamilySpec::Kind::J;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"talex: twisted Alexander polynomials of two-bridge link families"};
    app.require_subcommand(1);
    app.footer("The environment variable TALEX_THREADS caps the worker thread count.");

    int exit_code = 0;

    // ---- single ----------------------------------------------------------
    auto* single = app.add_subcommand(
        "single", "one instance (or one presentation/representation file pair)");
    auto cs = std::make_shared<CommonArgs>();
    auto single_family = std::make_shared<std::string>("J");
    auto single_flip = std::make_shared<bool>(false);
    auto single_z = std::make_shared<std::string>();
    single->add_option("--family", *single_family, "family kind")
        ->check(CLI::IsMember({"J", "C"}));
    single->add_option("--m", cs->cfg.family.m, "family parameter m")->capture_default_str();
    single->add_option("--n", cs->cfg.family.n, "family parameter n")->capture_default_str();
    single->add_option("--p", cs->cfg.family.p, "family parameter p (C only)")
        ->capture_default_str();
    single->add_flag("--flip", *single_flip, "reverse one component's orientation");
    single->add_option("--z", *single_z, "explicit character value RE,IM (bypasses root finding)");
    single->add_option("--presentation", cs->cfg.presentation_path, ".pres file input");
    single->add_option("--rep", cs->cfg.rep_path, ".rep file with generator images");
    add_common(single, *cs);
    single->callback([cs, single_family, single_flip, single_z, &exit_code]() {
        cs->cfg.family.kind = kind_from(*single_family);
        cs->cfg.flip_mode = *single_flip ? 1 : 0;
        if (!single_z->empty()) {
            cs->cfg.has_z = true;
            cs->cfg.z = parse_z(*single_z);
        }
        Report rep = talex::compute_single(cs->cfg);
        emit(rep, cs->format, cs->out);
        exit_code = talex::report_exit_code(rep);
    });

    // ---- suite -----------------------------------------------------------
    auto* suite = app.add_subcommand("suite", "verification suites over parameter grids");
    suite->require_subcommand(1);

    auto* dfj = suite->add_subcommand("dfj", "J-family genus/fiberedness detection grid");
    auto cd = std::make_shared<CommonArgs>();
    auto dfj_flip = std::make_shared<std::string>("both");
    dfj->add_option("--m-max", cd->cfg.m_max, "grid bound for m")->capture_default_str();
    dfj->add_option("--n-max", cd->cfg.n_max, "grid bound for n")->capture_default_str();
    dfj->add_option("--flip", *dfj_flip, "orientations: unflipped, flipped, both")
        ->capture_default_str();
    add_common(dfj, *cd);
    dfj->callback([cd, dfj_flip, &exit_code]() {
        cd->cfg.flip_mode = flip_mode_from(*dfj_flip);
        Report rep = talex::suite_dfj(cd->cfg);
        emit(rep, cd->format, cd->out);
        exit_code = talex::report_exit_code(rep);
    });

    auto* parab = suite->add_subcommand(
        "parabolic", "C-family detection over odd (m,n,p) grids with m != p");
    auto cp = std::make_shared<CommonArgs>();
    auto parab_flip = std::make_shared<std::string>("unflipped");
    parab->add_option("--odd-max", cp->cfg.odd_max, "largest odd parameter")
        ->capture_default_str();
    parab->add_option("--flip", *parab_flip, "orientations: unflipped, flipped, both")
        ->capture_default_str();
    add_common(parab, *cp);
    parab->callback([cp, parab_flip, &exit_code]() {
        cp->cfg.flip_mode = flip_mode_from(*parab_flip);
        Report rep = talex::suite_parabolic(cp->cfg);
        emit(rep, cp->format, cp->out);
        exit_code = talex::report_exit_code(rep);
    });

    auto* loci = suite->add_subcommand(
        "loci", "J-family character-variety sampling against the degeneration loci");
    auto cl = std::make_shared<CommonArgs>();
    auto loci_flip = std::make_shared<std::string>("unflipped");
    loci->add_option("--m", cl->cfg.family.m, "family parameter m")->capture_default_str();
    loci->add_option("--n", cl->cfg.family.n, "family parameter n")->capture_default_str();
    loci->add_option("--samples", cl->cfg.samples, "off-loci samples per orientation")
        ->capture_default_str();
    loci->add_option("--flip", *loci_flip, "orientations: unflipped, flipped, both")
        ->capture_default_str();
    add_common(loci, *cl);
    loci->callback([cl, loci_flip, &exit_code]() {
        cl->cfg.flip_mode = flip_mode_from(*loci_flip);
        Report rep = talex::suite_loci(cl->cfg);
        emit(rep, cl->format, cl->out);
        exit_code = talex::report_exit_code(rep);
    });

    // ---- riley -----------------------------------------------------------
    auto* riley = app.add_subcommand("riley", "exact parabolic-slice polynomial and its roots");
    auto cr = std::make_shared<CommonArgs>();
    auto riley_family = std::make_shared<std::string>("J");
    riley->add_option("--family", *riley_family, "family kind")
        ->check(CLI::IsMember({"J", "C"}));
    riley->add_option("--m", cr->cfg.family.m, "family parameter m")->capture_default_str();
    riley->add_option("--n", cr->cfg.family.n, "family parameter n")->capture_default_str();
    riley->add_option("--p", cr->cfg.family.p, "family parameter p (C only)")
        ->capture_default_str();
    add_common(riley, *cr);
    riley->callback([cr, riley_family, &exit_code]() {
        cr->cfg.family.kind = kind_from(*riley_family);
        Report rep = talex::riley_report(cr->cfg);
        // Human-readable polynomial and roots on stdout; report to --out.
        print_riley_text(rep);
        if (!cr->out.empty()) emit(rep, cr->format, cr->out);
        exit_code = talex::report_exit_code(rep);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
