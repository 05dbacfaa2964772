#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "micz/conic_geometry.hpp"
#include "micz/dynamics.hpp"
#include "micz/lorentz.hpp"
#include "micz/orbit_params.hpp"
#include "micz/serde.hpp"
#include "micz/verify.hpp"

namespace {

using namespace micz;

// 0 success, 2 invalid input, 3 integrator failure, 4 class error
int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::StepLimitExceeded:
    case ErrorCode::NearCollision: return 3;
    case ErrorCode::WrongClass:
    case ErrorCode::ClassBoundary:
    case ErrorCode::SignFlip:
    case ErrorCode::HyperbolicUnsupported: return 4;
    default: return 2;
    }
}

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw MiczError(ErrorCode::InvalidArgument, "cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& data)
{
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw MiczError(ErrorCode::InvalidArgument, "cannot open output file: " + path);
    f << data;
}

serde::AnyInput load(const std::string& input_path)
{
    return serde::parse_input(read_input(input_path));
}

MinkowskiOrbitParams as_minkowski(const serde::AnyInput& in)
{
    if (const auto* e = std::get_if<EuclideanOrbitParams>(&in))
        return to_minkowski(*e);
    if (const auto* m = std::get_if<MinkowskiOrbitParams>(&in))
        return *m;
    throw MiczError(ErrorCode::InvalidParams,
                    "expected orbit parameters, got a phase state");
}

EuclideanOrbitParams as_euclidean(const serde::AnyInput& in)
{
    if (const auto* e = std::get_if<EuclideanOrbitParams>(&in))
        return *e;
    return to_euclidean(as_minkowski(in));
}

int run_convert(const std::string& input, const std::string& output, const std::string& to)
{
    const serde::AnyInput in = load(input);
    const bool is_euclid = std::holds_alternative<EuclideanOrbitParams>(in);
    if (std::holds_alternative<PhaseState>(in))
        throw MiczError(ErrorCode::InvalidParams, "convert expects orbit parameters");

    std::string target = to;
    if (target.empty())
        target = is_euclid ? "minkowski" : "euclidean";
    nlohmann::json j;
    if (target == "minkowski")
        j = serde::to_json(as_minkowski(in));
    else if (target == "euclidean")
        j = serde::to_json(as_euclidean(in));
    else
        throw MiczError(ErrorCode::InvalidArgument,
                        "--to must be 'euclidean' or 'minkowski'");
    write_output(output, serde::dump_json(j));
    return 0;
}

int run_info(const std::string& input, const std::string& output)
{
    const serde::AnyInput in = load(input);
    const EuclideanOrbitParams pe = as_euclidean(in);
    const MinkowskiOrbitParams pm = as_minkowski(in);
    // each functional evaluated in its natural representation
    const double e = std::holds_alternative<MinkowskiOrbitParams>(in)
                         ? energy_minkowski(pm)
                         : energy_euclidean(pe);
    const nlohmann::json j = {{"mu", magnetic_charge(pe)},
                              {"energy", e},
                              {"eccentricity", eccentricity(pe)},
                              {"class", to_string(classify(pm))},
                              {"is_circle", is_circle(pe)}};
    write_output(output, serde::dump_json(j));
    return 0;
}

int run_sample(const std::string& input, const std::string& output, int n, double cap)
{
    const MinkowskiOrbitParams pm = as_minkowski(load(input));
    write_output(output, serde::samples_csv(sample_orbit_lifted(pm, n, cap)));
    return 0;
}

int run_integrate(const std::string& input, const std::string& output,
                  const std::string& drift_out, double T, double rel_tol, double abs_tol)
{
    const serde::AnyInput in = load(input);
    PhaseState s0;
    if (const auto* s = std::get_if<PhaseState>(&in))
        s0 = *s;
    else
        s0 = synthesize_initial_state(as_euclidean(in));

    IntegratorConfig cfg;
    cfg.rel_tol = rel_tol;
    cfg.abs_tol = abs_tol;
    const Trajectory tr = integrate(s0, T, cfg);
    write_output(output, serde::trajectory_csv(tr));
    const std::string drift = serde::dump_json(serde::to_json(drift_report(tr)));
    if (drift_out.empty())
        std::cerr << drift;
    else
        write_output(drift_out, drift);
    return 0;
}

int run_canonicalize(const std::string& input, const std::string& output, double tol)
{
    const MinkowskiOrbitParams pm = as_minkowski(load(input));
    const OrientedSymmetry g = canonicalize(pm);
    const MinkowskiOrbitParams target = classify(pm) == OrbitClass::Parabolic
                                            ? canonical_parabolic_pair()
                                            : canonical_elliptic_pair();
    const double resid = params_distance(act(g, pm), target);
    write_output(output, serde::dump_json(serde::to_json(g)));
    std::cerr << "residual " << serde::format_double(resid) << "\n";
    return resid < tol ? 0 : 1;
}

int run_transport(const std::string& input1, const std::string& input2,
                  const std::string& output, double tol)
{
    const MinkowskiOrbitParams p1 = as_minkowski(load(input1));
    const MinkowskiOrbitParams p2 = as_minkowski(load(input2));
    const OrientedSymmetry g = transport(p1, p2);
    const double resid = params_distance(act(g, p1), p2);
    write_output(output, serde::dump_json(serde::to_json(g)));
    std::cerr << "residual " << serde::format_double(resid) << "\n";
    return resid < tol ? 0 : 1;
}

int run_verify(const std::string& output, std::uint64_t seed, int count, double perturb)
{
    const verify::VerifyReport rep = verify::run_verify(seed, count, perturb);
    write_output(output, serde::dump_json(verify::to_json(rep)));
    return rep.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"oriented Kepler-monopole orbits: parameter spaces, sampling, "
                 "integration, and symmetry transport"};
    app.require_subcommand(1);

    std::string input, input2, output, to, drift_out;
    int n = 64;
    double range_cap = 0.0;
    double T = 50.0, rel_tol = 1e-10, abs_tol = 1e-12;
    double tol = 1e-7, perturb = 0.0;
    std::uint64_t seed = 42;
    int count = 100;

    auto* convert = app.add_subcommand("convert", "convert between parameter files");
    convert->add_option("--input,-i", input, "params JSON file, '-' for stdin")->required();
    convert->add_option("--output,-o", output, "output path (default stdout)");
    convert->add_option("--to", to, "target representation: euclidean | minkowski");

    auto* info = app.add_subcommand("info", "scalar functionals of an orbit");
    info->add_option("--input,-i", input, "params JSON file, '-' for stdin")->required();
    info->add_option("--output,-o", output, "output path (default stdout)");

    auto* sample = app.add_subcommand("sample", "sample points on the orbit conic");
    sample->add_option("--input,-i", input, "params JSON file, '-' for stdin")->required();
    sample->add_option("--output,-o", output, "output path (default stdout)");
    sample->add_option("--n", n, "number of samples (>= 3)");
    sample->add_option("--range-cap", range_cap,
                       "max lifted x0 for unbounded orbits (default 1e3/a0)");

    auto* integrate = app.add_subcommand("integrate", "integrate the equation of motion");
    integrate->add_option("--input,-i", input, "params or state JSON file, '-' for stdin")
        ->required();
    integrate->add_option("--output,-o", output, "trajectory CSV path (default stdout)");
    integrate->add_option("--drift-out", drift_out,
                          "drift report JSON path (default stderr)");
    integrate->add_option("--T", T, "time horizon (> 0)");
    integrate->add_option("--rel-tol", rel_tol, "relative tolerance");
    integrate->add_option("--abs-tol", abs_tol, "absolute tolerance");

    auto* canonicalize = app.add_subcommand(
        "canonicalize", "symmetry moving the orbit to its class's canonical pair");
    canonicalize->add_option("--input,-i", input, "params JSON file, '-' for stdin")
        ->required();
    canonicalize->add_option("--output,-o", output, "output path (default stdout)");
    canonicalize->add_option("--tol", tol, "residual bound for exit 0");

    auto* transport = app.add_subcommand(
        "transport", "symmetry carrying the first orbit onto the second");
    transport->add_option("input1", input, "source params JSON file")->required();
    transport->add_option("input2", input2, "target params JSON file")->required();
    transport->add_option("--output,-o", output, "output path (default stdout)");
    transport->add_option("--tol", tol, "residual bound for exit 0");

    auto* verify = app.add_subcommand("verify", "run the seeded invariant families");
    verify->add_option("--output,-o", output, "output path (default stdout)");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--count", count, "cases per family scale");
    verify->add_option("--perturb", perturb, "fault injection for the validation family");

    try {
        app.parse(argc, argv);
        if (convert->parsed())
            return run_convert(input, output, to);
        if (info->parsed())
            return run_info(input, output);
        if (sample->parsed())
            return run_sample(input, output, n, range_cap);
        if (integrate->parsed())
            return run_integrate(input, output, drift_out, T, rel_tol, abs_tol);
        if (canonicalize->parsed())
            return run_canonicalize(input, output, tol);
        if (transport->parsed())
            return run_transport(input, input2, output, tol);
        if (verify->parsed())
            return run_verify(output, seed, count, perturb);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const MiczError& e) {
        std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
