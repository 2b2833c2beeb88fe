// Batch front end: generate multiplets, run verification suites, evaluate
// states, and emit machine-readable reports. Deterministic for fixed
// (subcommand, options, seed); exit 0 on success, 1 on verification failure,
// 2 on usage errors.

#include "hopfwave/suites.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace hw = hopfwave;

namespace {

std::vector<double> parse_tuple(const std::string& text, std::size_t n, const char* what) {
    std::vector<double> vals;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) vals.push_back(std::stod(cur));
    if (vals.size() != n)
        throw CLI::ValidationError(std::string(what) + ": expected " + std::to_string(n) +
                                   " comma-separated numbers");
    return vals;
}

void emit(const hw::Json& j) { std::cout << j.dump(2) << "\n"; }

int run_multiplet(const std::string& j_text, const std::string& format, bool normalized) {
    hw::HalfInt j = hw::parse_half_int(j_text);
    hw::Multiplet mult = hw::make_multiplet(j, hw::BuildFrom::Bottom);
    if (format == "json")
        emit(hw::multiplet_json(mult, normalized));
    else if (format == "csv")
        std::cout << hw::multiplet_csv(mult);
    else
        std::cout << hw::multiplet_latex(mult, normalized);
    return 0;
}

int run_verify(const std::string& suite, const hw::SuiteOptions& opt) {
    std::vector<hw::SuiteReport> reports;
    if (suite == "all")
        reports = hw::all_suites(opt);
    else if (suite == "weyl")
        reports = {hw::weyl_suite(opt)};
    else if (suite == "repr")
        reports = {hw::repr_suite(opt)};
    else if (suite == "coords")
        reports = {hw::coords_suite(opt)};
    else
        reports = {hw::hydrogen_suite(opt)};

    hw::Json out = hw::Json::array();
    bool all = true;
    for (const auto& rep : reports) {
        all = all && rep.all_pass();
        hw::Json j = hw::suite_report_json(rep);
        if (rep.suite == "weyl") {
            // per-identity reports with residual operators
            hw::Json tables = hw::Json::array();
            for (const auto& table : hw::verify_all_tables())
                tables.push_back(hw::table_report_json(table));
            j["tables"] = std::move(tables);
        }
        out.push_back(std::move(j));
    }
    emit(out);
    return all ? 0 : 1;
}

int run_eval(const std::string& j_text, const std::string& m_text, const std::string& point) {
    hw::HalfInt j = hw::parse_half_int(j_text), m = hw::parse_half_int(m_text);
    auto coords = parse_tuple(point, 4, "--point");
    hw::EulerPoint p{coords[0], coords[1], coords[2], coords[3]};
    hw::Multiplet mult = hw::make_multiplet(j);
    const hw::Ket& ket = mult.at_m(m);
    hw::KetField field(ket.body, 1.0 / ket.norm.to_double());
    std::complex<double> value = field.eval(p);
    hw::Json out;
    out["j"] = hw::to_string(j);
    out["m"] = hw::to_string(m);
    out["point"] = {hw::format_sig(p.r), hw::format_sig(p.theta), hw::format_sig(p.phi),
                    hw::format_sig(p.psi)};
    out["norm_factor"] = hw::to_string(ket.norm);
    out["value"] = {{"re", hw::format_sig(value.real())}, {"im", hw::format_sig(value.imag())}};
    emit(out);
    return 0;
}

int run_hydrogen(const std::string& j_text, const std::string& m_text, bool all_m, int samples,
                 std::uint64_t seed) {
    hw::HalfInt j = hw::parse_half_int(j_text);
    std::vector<hw::HalfInt> ms;
    if (all_m)
        for (int t = -j.twice; t <= j.twice; t += 2) ms.push_back(hw::HalfInt(t));
    else
        ms.push_back(m_text.empty() ? j : hw::parse_half_int(m_text));

    hw::Json out = hw::Json::array();
    bool all_pass = true;
    for (hw::HalfInt m : ms) {
        hw::HydrogenState state = hw::make_state(j, m);
        hw::ResidualReport rep =
            hw::hamiltonian_residual(state, samples, seed + std::uint64_t(m.twice + 64));
        all_pass = all_pass && rep.max_rel_residual < 1e-5;
        out.push_back(hw::residual_report_json(rep));
    }
    emit(out);
    return all_pass ? 0 : 1;
}

int run_hopf(const std::string& u_text, const std::string& z_text) {
    hw::C2Point z;
    if (!u_text.empty()) {
        auto u = parse_tuple(u_text, 4, "--u");
        z = hw::to_c2({u[0], u[1], u[2], u[3]});
    } else {
        auto v = parse_tuple(z_text, 4, "--z");
        z = {{v[0], v[1]}, {v[2], v[3]}};
    }
    hw::R3Point x = hw::hopf(z);
    hw::Json out;
    out["r3"] = {hw::format_sig(x.x1), hw::format_sig(x.x2), hw::format_sig(x.x3)};
    hw::EulerFromC2 e = hw::c2_to_euler(z);
    out["euler"] = {{"r", hw::format_sig(e.point.r)},
                    {"theta", hw::format_sig(e.point.theta)},
                    {"phi", hw::format_sig(e.point.phi)},
                    {"psi", hw::format_sig(e.point.psi)}};
    out["pole"] = e.pole;
    emit(out);
    return 0;
}

int run_sweep(const std::string& tag_text, const std::string& maxj_text, int samples,
              std::uint64_t seed) {
    auto tag = hw::gen_from_name(tag_text);
    if (!tag) throw CLI::ValidationError("--tag: unknown operator '" + tag_text + "'");
    hw::SweepReport rep = hw::consistency_sweep_tag(*tag, hw::parse_half_int(maxj_text),
                                                    samples, seed);
    emit(hw::sweep_report_json(rep));
    return rep.max_rel_err() < 1e-6 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact angular-momentum multiplets, operator identity checks, and the "
                 "four-variable hydrogen eigenproblem"};
    app.require_subcommand(1);

    std::string j_text = "0", m_text, format = "json", suite, point, u_text, z_text, tag;
    std::string maxj_text = "6";
    bool normalized = false, all_m = false;
    int samples = 0;
    std::uint64_t seed = hw::kDefaultSeed;

    auto* c_mult = app.add_subcommand("multiplet", "generate the 2j+1 states for a given j");
    c_mult->add_option("--j", j_text, "total angular momentum (e.g. 2, 3/2, 1.5)")->required();
    c_mult->add_option("--format", format, "json|csv|latex")
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    c_mult->add_flag("--normalized", normalized, "include exact normalization prefactors");

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("--suite", suite, "weyl|repr|coords|hydrogen|all")
        ->required()
        ->check(CLI::IsMember({"weyl", "repr", "coords", "hydrogen", "all"}));
    c_verify->add_option("--max-j", maxj_text, "largest j exercised (default 6)");
    c_verify->add_option("--samples", samples, "sample count for numeric checks");
    c_verify->add_option("--seed", seed, "RNG seed");

    auto* c_eval = app.add_subcommand("eval", "evaluate a normalized state at a point");
    c_eval->add_option("--j", j_text)->required();
    c_eval->add_option("--m", m_text)->required();
    c_eval->add_option("--point", point, "r,theta,phi,psi")->required();

    auto* c_hyd = app.add_subcommand("hydrogen", "residuals of the hydrogen eigenpairs");
    c_hyd->add_option("--j", j_text, "half-integer j >= 1/2")->required();
    c_hyd->add_option("--m", m_text, "default m = j");
    c_hyd->add_flag("--all-m", all_m, "sweep every m in the multiplet");
    c_hyd->add_option("--samples", samples);
    c_hyd->add_option("--seed", seed);

    auto* c_hopf = app.add_subcommand("hopf", "map a 4D point to R^3 and Euler coordinates");
    auto* opt_u = c_hopf->add_option("--u", u_text, "u1,u2,u3,u4");
    c_hopf->add_option("--z", z_text, "re1,im1,re2,im2")->excludes(opt_u);

    auto* c_sweep = app.add_subcommand("sweep", "Euler-form vs exact-action consistency");
    c_sweep->add_option("--tag", tag, "operator name (L, Lz, L+, L-, Lx, Ly, dz1, ..., Casimir)")
        ->required();
    c_sweep->add_option("--max-j", maxj_text);
    c_sweep->add_option("--samples", samples);
    c_sweep->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_mult)) return run_multiplet(j_text, format, normalized);
        if (app.got_subcommand(c_verify)) {
            hw::SuiteOptions opt;
            opt.max_j = hw::parse_half_int(maxj_text);
            opt.samples = samples;
            opt.seed = seed;
            return run_verify(suite, opt);
        }
        if (app.got_subcommand(c_eval)) return run_eval(j_text, m_text, point);
        if (app.got_subcommand(c_hyd))
            return run_hydrogen(j_text, m_text, all_m, samples > 0 ? samples : 100, seed);
        if (app.got_subcommand(c_hopf)) {
            if (u_text.empty() && z_text.empty())
                throw CLI::ValidationError("hopf requires --u or --z");
            return run_hopf(u_text, z_text);
        }
        if (app.got_subcommand(c_sweep))
            return run_sweep(tag, maxj_text, samples > 0 ? samples : 200, seed);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
