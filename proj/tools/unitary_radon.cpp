// unitary-radon: command-line front end for the transforms, duals, inversions and invariant suites.

#include <unitary_radon/ball.hpp>
#include <unitary_radon/fit.hpp>
#include <unitary_radon/fock.hpp>
#include <unitary_radon/hermitian.hpp>
#include <unitary_radon/io.hpp>
#include <unitary_radon/realspace.hpp>
#include <unitary_radon/sampling.hpp>
#include <unitary_radon/verify.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

namespace ur = unitary_radon;
using ur::io::json;

namespace {

constexpr int kExitContract = 2;
constexpr int kExitInvariant = 3;

struct Job {
    std::string command;
    std::string space;
    std::string in;
    std::string out;
    std::string tuple;
    int n = 2;
    std::string trunc = "40,40";
    std::size_t samples = 100000;
    std::uint64_t seed = 1;
    double tol = ur::kDefaultTolerance;
    bool mc = false;
    int max_degree = 4;
    std::string branch;
    int grade = -1;
    int trials = 10;
    int points = 20;
    bool timing = false;
};

struct Input {
    json doc;
    std::string digest;
};

Input read_input(const Job& job) {
    if (job.in.empty()) throw std::invalid_argument(job.command + " needs --in FILE (use - for stdin)");
    std::string bytes;
    if (job.in == "-") {
        bytes.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream f(job.in, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open " + job.in);
        bytes.assign(std::istreambuf_iterator<char>(f), {});
    }
    try {
        return {json::parse(bytes), ur::io::sha256_hex(bytes)};
    } catch (const json::parse_error& e) {
        throw ur::io::SchemaError("$", e.what());
    }
}

std::optional<ur::Branch> parse_branch(const std::string& b) {
    if (b.empty() || b == "both") return std::nullopt;
    if (b == "ge") return ur::Branch::p_ge_q;
    if (b == "lt") return ur::Branch::p_lt_q;
    throw std::invalid_argument("--branch must be ge, lt or both");
}

std::pair<int, int> parse_trunc(const std::string& t) {
    const auto comma = t.find(',');
    if (comma == std::string::npos) {
        const int k = std::stoi(t);
        return {k, k};
    }
    return {std::stoi(t.substr(0, comma)), std::stoi(t.substr(comma + 1))};
}

template <class S>
json coefficient_table(const std::map<ur::Bidegree, S>& coeffs) {
    json table = json::array();
    for (const auto& [d, c] : coeffs) {
        json row = {{"p", d.p}, {"q", d.q}};
        ur::io::put_scalar(row, c);
        table.push_back(std::move(row));
    }
    return table;
}

template <class S>
json coefficient_table(const std::map<ur::Bidegree, ur::CliffordElement<S>>& coeffs) {
    json table = json::array();
    for (const auto& [d, c] : coeffs) table.push_back({{"p", d.p}, {"q", d.q}, {"blades", ur::io::clifford_json(c)}});
    return table;
}

template <class C>
double poly_distance(const ur::BiPoly<C>& a, const ur::BiPoly<C>& b) {
    double r = 0.0;
    for (const auto& [m, c] : (a - b).terms()) r = std::max(r, ur::magnitude(c));
    return r;
}

template <class S>
double expansion_distance(const ur::realspace::HermiteExpansion<S>& a, const ur::realspace::HermiteExpansion<S>& b) {
    double r = 0.0;
    for (const auto& [k, c] : a.coeffs()) r = std::max(r, ur::magnitude(c - b.coefficient(k)));
    for (const auto& [k, c] : b.coeffs()) r = std::max(r, ur::magnitude(c - a.coefficient(k)));
    return r;
}

json monte_carlo_block(const Job& job, double sigma) {
    return {{"samples", job.samples}, {"seed", job.seed}, {"max_sigma", sigma}, {"within_3_sigma", sigma <= 3.0}};
}

ur::realspace::HermiteExpansion<ur::Complex> read_l2_float(const json& doc, const Job& job, json& report) {
    if (!doc.contains("grid")) return ur::io::parse_expansion<ur::Complex>(doc);
    const auto fit = ur::realspace::fit_hermite_expansion(ur::io::parse_n(doc), ur::io::parse_grid(doc), job.max_degree);
    report["approximate_fit"] = {{"max_degree", job.max_degree},
                                 {"basis_size", fit.basis_size},
                                 {"rank", fit.rank},
                                 {"rms_residual", fit.rms_residual},
                                 {"expansion", ur::io::expansion_json(fit.expansion)}};
    return fit.expansion;
}

// transform ----------------------------------------------------------------------------------

template <class S>
void transform_with(const Job& job, const json& doc, const ur::StiefelTuple<S>& tuple, json& report) {
    const auto branch = parse_branch(job.branch);
    const double tol = ur::is_exact_v<S> ? 0.0 : job.tol;
    if (job.space == "ball-harmonic" || job.space == "ball-holomorphic") {
        const auto f = ur::io::parse_polynomial<S>(doc);
        if (job.space == "ball-holomorphic" && !ur::is_holomorphic(f))
            throw ur::ContractViolation("ball-holomorphic input has zbar terms");
        const auto pr = ur::ball::szego_radon(f, tuple, branch, tol);
        const auto again = ur::ball::szego_radon(pr.reconstructed, tuple, branch, tol);
        report["coefficients"] = coefficient_table(pr.coefficients);
        report["result"] = ur::io::polynomial_json(pr.reconstructed);
        report["residuals"] = {{"idempotence", poly_distance(again.reconstructed, pr.reconstructed)}};
    } else if (job.space == "fock") {
        const ur::fock::FockElement<S> f(ur::io::parse_polynomial<S>(doc));
        const auto pr = ur::fock::bargmann_radon(f, tuple, tol);
        const auto again = ur::fock::bargmann_radon(pr.reconstructed, tuple, tol);
        report["coefficients"] = coefficient_table(pr.coefficients);
        report["result"] = ur::io::polynomial_json(pr.reconstructed.poly());
        report["residuals"] = {{"idempotence", poly_distance(again.reconstructed.poly(), pr.reconstructed.poly())}};
    } else if (job.space == "l2") {
        ur::realspace::HermiteExpansion<S> f(tuple.n());
        if constexpr (ur::is_exact_v<S>)
            f = ur::io::parse_expansion<S>(doc);
        else
            f = read_l2_float(doc, job, report);
        const auto pr = ur::realspace::l2_radon(f, tuple, tol);
        const auto again = ur::realspace::l2_radon(pr.reconstructed, tuple, tol);
        report["coefficients"] = coefficient_table(pr.coefficients);
        report["result"] = ur::io::expansion_json(pr.reconstructed);
        report["residuals"] = {{"idempotence", expansion_distance(again.reconstructed, pr.reconstructed)}};
    } else if (job.space == "hermitian") {
        const auto f = ur::io::parse_polynomial<ur::CliffordElement<S>>(doc);
        const auto pr = ur::hermitian::herm_radon(f, tuple, branch, tol);
        const auto again = ur::hermitian::herm_radon(pr.reconstructed, tuple, branch, tol);
        report["coefficients"] = coefficient_table(pr.coefficients);
        report["result"] = ur::io::polynomial_json(pr.reconstructed);
        report["residuals"] = {{"idempotence", poly_distance(again.reconstructed, pr.reconstructed)}};
    } else {
        throw std::invalid_argument("unknown space: " + job.space);
    }
}

int run_transform(const Job& job, json& report) {
    const auto input = read_input(job);
    report["input_digest"] = input.digest;
    const int n = ur::io::parse_n(input.doc);
    if (job.tuple.empty()) throw std::invalid_argument("transform needs --tuple");
    const auto tuple = ur::io::parse_tuple_spec(job.tuple, n);
    report["tuple"] = ur::io::tuple_json(tuple);
    const bool exact = !input.doc.contains("grid") && ur::io::document_is_exact(input.doc) &&
                       std::holds_alternative<ur::StiefelTuple<ur::GaussRational>>(tuple);
    report["exact"] = exact;
    if (exact) {
        transform_with(job, input.doc, std::get<ur::StiefelTuple<ur::GaussRational>>(tuple), report);
    } else {
        const auto tu = std::visit([](const auto& t) { return ur::to_complex(t); }, tuple);
        transform_with(job, input.doc, tu, report);
    }
    return 0;
}

// invert -------------------------------------------------------------------------------------

template <class S>
void invert_with(const Job& job, const json& doc, json& report) {
    const auto branch = parse_branch(job.branch);
    const double tol = ur::is_exact_v<S> ? 0.0 : job.tol;
    const int n = ur::io::parse_n(doc);
    if (job.space == "ball-holomorphic") {
        report["result"] = ur::io::polynomial_json(ur::ball::invert_holomorphic(ur::io::parse_polynomial<S>(doc), n));
    } else if (job.space == "ball-harmonic") {
        const auto g = ur::io::parse_polynomial<S>(doc);
        ur::BiPoly<S> out(n);
        for (ur::Branch b : {ur::Branch::p_ge_q, ur::Branch::p_lt_q}) {
            if (branch && *branch != b) continue;
            ur::BiPoly<S> part(n);
            for (const auto& [d, piece] : ur::bidegree_split(g))
                if (ur::in_branch(d, b)) part += piece;
            out += ur::ball::invert_general(part, n, b, tol);
        }
        report["result"] = ur::io::polynomial_json(out);
    } else if (job.space == "fock") {
        const ur::fock::FockElement<S> g(ur::io::parse_polynomial<S>(doc));
        report["result"] = ur::io::polynomial_json(ur::fock::fock_invert(g, n).poly());
    } else if (job.space == "l2") {
        report["result"] = ur::io::expansion_json(ur::realspace::l2_invert(ur::io::parse_expansion<S>(doc), n));
    } else if (job.space == "hermitian") {
        const auto g = ur::io::parse_polynomial<ur::CliffordElement<S>>(doc);
        int j = job.grade;
        if (j < 0) {
            const auto pure = ur::hermitian::pure_grade(g, tol);
            if (!pure) throw ur::ContractViolation("hermitian invert: input is not of a single grade; pass --grade");
            j = *pure;
        }
        report["grade"] = j;
        report["result"] = ur::io::polynomial_json(ur::hermitian::herm_invert(g, n, j, branch));
    } else {
        throw std::invalid_argument("unknown space: " + job.space);
    }
}

int run_invert(const Job& job, json& report) {
    const auto input = read_input(job);
    report["input_digest"] = input.digest;
    const bool exact = ur::io::document_is_exact(input.doc);
    report["exact"] = exact;
    if (exact)
        invert_with<ur::GaussRational>(job, input.doc, report);
    else
        invert_with<ur::Complex>(job, input.doc, report);
    return 0;
}

// dual ---------------------------------------------------------------------------------------

template <class S>
void dual_exact_with(const Job& job, const json& doc, json& report) {
    const auto branch = parse_branch(job.branch);
    const double tol = ur::is_exact_v<S> ? 0.0 : job.tol;
    const int n = ur::io::parse_n(doc);
    if (job.space == "ball-harmonic" || job.space == "ball-holomorphic") {
        const auto f = ur::io::parse_polynomial<S>(doc);
        if (job.space == "ball-holomorphic" && !ur::is_holomorphic(f))
            throw ur::ContractViolation("ball-holomorphic input has zbar terms");
        report["result"] = ur::io::polynomial_json(ur::ball::dual_exact(f, n, branch, tol));
    } else if (job.space == "fock") {
        const ur::fock::FockElement<S> f(ur::io::parse_polynomial<S>(doc));
        report["result"] = ur::io::polynomial_json(ur::fock::fock_dual_exact(f, n).poly());
    } else if (job.space == "l2") {
        ur::realspace::HermiteExpansion<S> f(n);
        if constexpr (ur::is_exact_v<S>)
            f = ur::io::parse_expansion<S>(doc);
        else
            f = read_l2_float(doc, job, report);
        report["result"] = ur::io::expansion_json(ur::realspace::l2_dual_exact(f, n));
    } else if (job.space == "hermitian") {
        const auto f = ur::io::parse_polynomial<ur::CliffordElement<S>>(doc);
        report["result"] = ur::io::polynomial_json(ur::hermitian::herm_dual_exact(f, n, branch, tol));
    } else {
        throw std::invalid_argument("unknown space: " + job.space);
    }
}

void dual_monte_carlo(const Job& job, const json& doc, json& report) {
    using ur::Complex;
    const auto branch = parse_branch(job.branch);
    const int n = ur::io::parse_n(doc);
    if (job.space == "ball-harmonic" || job.space == "ball-holomorphic") {
        const auto f = ur::io::parse_polynomial<Complex>(doc);
        const auto mc = ur::ball::dual_monte_carlo(f, n, job.samples, job.seed, branch);
        const auto exact = ur::ball::dual_exact(f, n, branch, job.tol);
        report["monte_carlo"] = monte_carlo_block(job, ur::verify::detail::max_sigma(mc, exact));
        report["monte_carlo"]["mean"] = ur::io::polynomial_json(mc.mean);
    } else if (job.space == "fock") {
        const ur::fock::FockElement<Complex> f(ur::io::parse_polynomial<Complex>(doc));
        const auto mc = ur::fock::fock_dual_monte_carlo(f, n, job.samples, job.seed);
        const auto exact = ur::fock::fock_dual_exact(f, n).poly();
        report["monte_carlo"] = monte_carlo_block(job, ur::verify::detail::max_sigma(mc, exact));
        report["monte_carlo"]["mean"] = ur::io::polynomial_json(mc.mean);
    } else if (job.space == "l2") {
        json scratch;
        const auto f = read_l2_float(doc, job, scratch);
        const auto mc = ur::realspace::l2_dual_monte_carlo(f, n, job.samples, job.seed);
        const auto exact = ur::realspace::segal_bargmann(ur::realspace::l2_dual_exact(f, n)).poly();
        report["monte_carlo"] = monte_carlo_block(job, ur::verify::detail::max_sigma(mc, exact));
        report["monte_carlo"]["mean"] =
            ur::io::expansion_json(ur::realspace::segal_bargmann_inv(ur::fock::FockElement<Complex>(mc.mean)));
    } else if (job.space == "hermitian") {
        const auto f = ur::io::parse_polynomial<ur::CliffordElement<Complex>>(doc);
        ur::hermitian::require_h_monogenic(f, job.tol);
        const auto mc = ur::hermitian::herm_dual_monte_carlo(f, n, job.samples, job.seed, branch);
        const auto exact = ur::hermitian::herm_dual_exact(f, n, branch, job.tol);
        report["monte_carlo"] = monte_carlo_block(job, ur::verify::detail::max_sigma(mc, exact));
        report["monte_carlo"]["mean"] = ur::io::polynomial_json(mc.mean);
    }
}

int run_dual(const Job& job, json& report) {
    const auto input = read_input(job);
    report["input_digest"] = input.digest;
    const bool exact = !input.doc.contains("grid") && ur::io::document_is_exact(input.doc);
    report["exact"] = exact;
    if (exact)
        dual_exact_with<ur::GaussRational>(job, input.doc, report);
    else
        dual_exact_with<ur::Complex>(job, input.doc, report);
    if (job.mc) {
        dual_monte_carlo(job, input.doc, report);
        if (!report["monte_carlo"]["within_3_sigma"].get<bool>()) return kExitInvariant;
    }
    return 0;
}

// verify -------------------------------------------------------------------------------------

int run_verify(const Job& job, json& report) {
    ur::verify::SuiteOptions opts;
    opts.n = job.n;
    opts.max_degree = job.max_degree;
    opts.seed = job.seed;
    opts.samples = job.samples;
    opts.trials = job.trials;
    const auto checks = ur::verify::run_space_suite(job.space, opts);
    json list = json::array();
    for (const auto& c : checks) list.push_back(ur::io::check_json(c));
    const bool ok = ur::verify::all_passed(checks);
    report["checks"] = std::move(list);
    report["passed"] = ok;
    return ok ? 0 : kExitInvariant;
}

// kernel-eval --------------------------------------------------------------------------------

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void csv_complex(std::ostream& os, ur::Complex c) { os << ',' << num(c.real()) << ',' << num(c.imag()); }

std::string kernel_csv(const Job& job) {
    if (job.tuple.empty()) throw std::invalid_argument("kernel-eval needs --tuple");
    const int n = job.n;
    const auto tuple = std::visit([](const auto& t) { return ur::to_complex(t); }, ur::io::parse_tuple_spec(job.tuple, n));
    const auto [pmax, qmax] = parse_trunc(job.trunc);
    const ur::ball::KernelParams params{tuple, pmax, qmax};
    std::mt19937_64 rng(job.seed);
    std::ostringstream os;

    const bool real_space = job.space == "l2";
    os << "point";
    for (const char* side : {"x", "y"})
        for (int j = 1; j <= n; ++j) {
            if (real_space)
                os << ',' << side << j;
            else
                os << ',' << side << j << "_re," << side << j << "_im";
        }

    if (job.space == "hermitian") {
        const auto tau = ur::hermitian::null_tau(tuple);
        const auto ttd = tau * ur::dagger(tau);
        const auto blades = ttd.support();
        for (const char* kind : {"series", "closed"})
            for (auto m : blades) os << ",K_" << kind << "_blade" << m << "_re,K_" << kind << "_blade" << m << "_im";
        os << '\n';
        for (int i = 0; i < job.points; ++i) {
            const auto z = ur::sampling::random_point(rng, n, 0.3);
            const auto u = ur::sampling::random_point(rng, n, 0.3);
            const auto ks = ur::hermitian::herm_kernel_series(params, z, u);
            const auto kc = ur::hermitian::herm_kernel_closed(params, z, u);
            os << i;
            for (const auto& v : {z, u})
                for (const auto& c : v) csv_complex(os, c);
            for (auto m : blades) csv_complex(os, ks[m]);
            for (auto m : blades) csv_complex(os, kc[m]);
            os << '\n';
        }
        return os.str();
    }

    os << ",K_series_re,K_series_im,K_closed_re,K_closed_im" << (real_space ? ",rho\n" : "\n");
    double rho = 0.0;
    if (real_space) {
        ur::Complex sigma = 0.0;
        for (const auto& c : tuple.holo_direction()) sigma += c * c;
        rho = std::abs(sigma) / 2;
    }
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    for (int i = 0; i < job.points; ++i) {
        ur::Complex series, closed;
        os << i;
        if (real_space) {
            std::vector<double> x(n), y(n);
            for (auto& v : x) v = box(rng);
            for (auto& v : y) v = box(rng);
            series = ur::realspace::l2_kernel_series(tuple, x, y, pmax);
            closed = ur::realspace::l2_kernel_closed(tuple, x, y);
            for (const auto& v : {x, y})
                for (double c : v) os << ',' << num(c);
        } else {
            const auto z = ur::sampling::random_point(rng, n, 0.3);
            const auto u = ur::sampling::random_point(rng, n, 0.3);
            if (job.space == "ball-harmonic") {
                series = ur::ball::szego_kernel_series(params, z, u).value;
                closed = ur::ball::szego_kernel_closed(params, z, u);
            } else if (job.space == "ball-holomorphic") {
                series = ur::ball::holo_kernel_series(params, z, u).value;
                closed = ur::ball::holo_kernel_closed(params, z, u);
            } else if (job.space == "fock") {
                series = ur::fock::bargmann_kernel_series(tuple, z, u, pmax).value;
                closed = ur::fock::bargmann_kernel(tuple, z, u);
            } else {
                throw std::invalid_argument("unknown space: " + job.space);
            }
            for (const auto& v : {z, u})
                for (const auto& c : v) csv_complex(os, c);
        }
        csv_complex(os, series);
        csv_complex(os, closed);
        if (real_space) os << ',' << num(rho);
        os << '\n';
    }
    return os.str();
}

// sample-stiefel -----------------------------------------------------------------------------

int run_sample_stiefel(const Job& job, json& report) {
    json tuples = json::array();
    const std::size_t count = job.samples;
    for (std::size_t i = 0; i < count; ++i)
        tuples.push_back(ur::io::tuple_json(ur::sample_stiefel(job.n, ur::derive_seed(job.seed, i))));
    report["n"] = job.n;
    report["seed"] = job.seed;
    report["tuples"] = std::move(tuples);
    return 0;
}

void emit(const Job& job, const std::string& text) {
    if (job.out.empty() || job.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(job.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + job.out);
    f << text;
}

json job_json(const Job& job) {
    json j = {{"command", job.command}, {"seed", job.seed}};
    if (!job.space.empty()) j["space"] = job.space;
    if (job.command == "verify" || job.command == "kernel-eval" || job.command == "sample-stiefel") j["n"] = job.n;
    if (job.command == "verify") {
        j["max_degree"] = job.max_degree;
        j["trials"] = job.trials;
    }
    if (!job.tuple.empty()) j["tuple"] = job.tuple;
    if (!job.branch.empty()) j["branch"] = job.branch;
    if (job.mc || job.command == "sample-stiefel") j["samples"] = job.samples;
    if (job.command == "kernel-eval") {
        j["trunc"] = job.trunc;
        j["points"] = job.points;
    }
    return j;
}

int dispatch(const Job& job) {
    const auto start = std::chrono::steady_clock::now();
    if (job.command == "kernel-eval") {
        emit(job, kernel_csv(job));
        return 0;
    }
    json report = {{"job", job_json(job)}};
    int code = 0;
    if (job.command == "transform")
        code = run_transform(job, report);
    else if (job.command == "invert")
        code = run_invert(job, report);
    else if (job.command == "dual")
        code = run_dual(job, report);
    else if (job.command == "verify")
        code = run_verify(job, report);
    else if (job.command == "sample-stiefel")
        code = run_sample_stiefel(job, report);
    if (job.timing)
        report["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(job, report.dump(2) + "\n");
    return code;
}

void report_error(const char* kind, const std::exception& e) {
    std::cerr << json{{"error", kind}, {"message", e.what()}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radon-type transforms on unitary plane waves"};
    app.require_subcommand(1);
    Job job;

    const std::vector<std::string> spaces = {"ball-harmonic", "ball-holomorphic", "fock", "l2", "hermitian"};
    auto add_common = [&](CLI::App* sub, bool needs_space) {
        auto* s = sub->add_option("--space", job.space, "function space")->check(CLI::IsMember(spaces));
        if (needs_space) s->required();
        sub->add_option("--out", job.out, "output file (default stdout)");
        sub->add_option("--seed", job.seed, "random seed");
        sub->add_flag("--timing", job.timing, "include wall time in the report");
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--in", job.in, "input JSON document (- for stdin)")->required();
        sub->add_option("--tol", job.tol, "floating tolerance for contract checks");
        sub->add_option("--branch", job.branch, "ge, lt or both")->check(CLI::IsMember({"ge", "lt", "both"}));
        sub->add_option("--max-degree", job.max_degree, "degree of the least-squares fit for sampled l2 input");
    };

    auto* transform = app.add_subcommand("transform", "project onto the plane waves of one tuple");
    add_common(transform, true);
    add_input(transform);
    transform->add_option("--tuple", job.tuple, "axis:i,j | haar:K | rational:K | JSON")->required();

    auto* invert = app.add_subcommand("invert", "apply the inversion operator to a dual-transformed input");
    add_common(invert, true);
    add_input(invert);
    invert->add_option("--grade", job.grade, "spinor grade for hermitian input");

    auto* dual = app.add_subcommand("dual", "dual transform of the projection, exactly or by Monte-Carlo");
    add_common(dual, true);
    add_input(dual);
    dual->add_flag("--mc", job.mc, "also integrate over the Stiefel manifold by Monte-Carlo");
    dual->add_option("--samples", job.samples, "Monte-Carlo sample count");

    auto* verify = app.add_subcommand("verify", "run the invariant suite for one space");
    add_common(verify, true);
    verify->add_option("--n", job.n, "complex dimension");
    verify->add_option("--max-degree", job.max_degree, "largest total degree of random inputs");
    verify->add_option("--trials", job.trials, "random inputs per law");
    verify->add_option("--samples", job.samples, "Monte-Carlo sample count");

    auto* kernel = app.add_subcommand("kernel-eval", "CSV of kernel series and closed form at random points");
    add_common(kernel, true);
    kernel->add_option("--tuple", job.tuple, "axis:i,j | haar:K | rational:K | JSON")->required();
    kernel->add_option("--n", job.n, "complex dimension");
    kernel->add_option("--trunc", job.trunc, "series truncation P,Q");
    kernel->add_option("--points", job.points, "number of point pairs");

    auto* stiefel = app.add_subcommand("sample-stiefel", "Haar-distributed Stiefel tuples");
    add_common(stiefel, false);
    stiefel->add_option("--n", job.n, "complex dimension");
    stiefel->add_option("--samples", job.samples, "number of tuples")->default_val(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitContract;
    }
    for (auto* sub : app.get_subcommands()) job.command = sub->get_name();

    try {
        return dispatch(job);
    } catch (const ur::ContractViolation& e) {
        report_error("contract_violation", e);
    } catch (const ur::io::SchemaError& e) {
        report_error("schema_violation", e);
    } catch (const json::exception& e) {
        report_error("schema_violation", e);
    } catch (const std::invalid_argument& e) {
        report_error("invalid_argument", e);
    } catch (const std::domain_error& e) {
        report_error("domain_error", e);
    } catch (const std::exception& e) {
        report_error("runtime_error", e);
        return 1;
    }
    return kExitContract;
}
