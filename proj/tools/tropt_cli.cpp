// Command-line front end: solve / eval / spectral / star / solve-ineq / verify
// over JSON files. Results go to stdout as canonical one-line JSON; anything
// diagnostic goes to stderr.
//
// Exit codes: 0 success, 1 usage or file I/O error, 2 ill-posed problem,
// 3 malformed input, 4 no regular solution (solve-ineq --kind fixed).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropt/inequalities.hpp"
#include "tropt/io.hpp"
#include "tropt/oracle.hpp"
#include "tropt/solver.hpp"
#include "tropt/spectral.hpp"
#include "tropt/structure.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitIllPosed = 2;
constexpr int kExitMalformed = 3;
constexpr int kExitNoRegularSolution = 4;

struct Options {
    std::string verb;
    std::string input_path;
    std::optional<tropt::SemifieldTag> expect_tag;
    bool show_permutation = false;
    std::string ineq_kind = "upper";
    std::vector<double> verify_grid; // lo hi step
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& json) { std::cout << json << "\n"; }

int run_solve(const Options& opt, const std::string& text) {
    const tropt::Problem problem = tropt::io::parse_problem(text, opt.expect_tag);
    const tropt::SolutionSet solution = tropt::solve(problem);
    if (opt.show_permutation) {
        const tropt::NormalForm nf = tropt::normal_form(problem.A);
        emit(tropt::io::write_solution(solution, &nf));
    } else {
        emit(tropt::io::write_solution(solution));
    }
    return kExitOk;
}

int run_eval(const Options& opt, const std::string& text) {
    const tropt::io::EvalInput input = tropt::io::parse_eval(text, opt.expect_tag);
    emit(tropt::io::write_eval(input.problem.semifield(),
                               tropt::objective(input.problem, input.x)));
    return kExitOk;
}

int run_spectral(const Options& opt, const std::string& text) {
    const tropt::Matrix a = tropt::io::parse_matrix(text, opt.expect_tag);
    const tropt::SpectralResult result = tropt::spectral_radius(a);
    if (opt.show_permutation) {
        const tropt::NormalForm nf = tropt::normal_form(a);
        emit(tropt::io::write_spectral(a.semifield(), result, &nf));
    } else {
        emit(tropt::io::write_spectral(a.semifield(), result));
    }
    return kExitOk;
}

int run_star(const Options& opt, const std::string& text) {
    const tropt::Matrix a = tropt::io::parse_matrix(text, opt.expect_tag);
    emit(tropt::io::write_matrix(tropt::bounded_star(a)));
    return kExitOk;
}

int run_solve_ineq(const Options& opt, const std::string& text) {
    if (opt.ineq_kind == "upper") {
        const tropt::io::IneqInput input = tropt::io::parse_ineq(text, "d", opt.expect_tag);
        emit(tropt::io::write_upper(input.a.semifield(), tropt::solve_upper(input.a, input.rhs)));
        return kExitOk;
    }
    const tropt::io::IneqInput input = tropt::io::parse_ineq(text, "b", opt.expect_tag);
    const auto cone = tropt::solve_fixed(input.a, input.rhs);
    if (!cone) {
        std::cerr << "no regular solution: Tr(A) exceeds the identity\n";
        emit(tropt::io::write_no_regular_solution());
        return kExitNoRegularSolution;
    }
    if (opt.show_permutation) {
        const tropt::NormalForm nf = tropt::normal_form(input.a);
        emit(tropt::io::write_cone(*cone, &nf));
    } else {
        emit(tropt::io::write_cone(*cone));
    }
    return kExitOk;
}

int run_verify(const Options& opt, const std::string& text) {
    const tropt::Problem problem = tropt::io::parse_problem(text, opt.expect_tag);
    const tropt::SolutionSet solution = tropt::solve(problem);
    const tropt::oracle::GridSpec grid(opt.verify_grid[0], opt.verify_grid[1],
                                       opt.verify_grid[2], problem.size());
    const tropt::oracle::GridResult result = tropt::oracle::grid_minimize(problem, grid);
    emit(tropt::io::write_verify(problem.semifield(), solution.mu, result.value, result.argmin));
    return kExitOk;
}

int dispatch(const Options& opt) {
    std::string text;
    try {
        text = read_file(opt.input_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }

    try {
        if (opt.verb == "solve") return run_solve(opt, text);
        if (opt.verb == "eval") return run_eval(opt, text);
        if (opt.verb == "spectral") return run_spectral(opt, text);
        if (opt.verb == "star") return run_star(opt, text);
        if (opt.verb == "solve-ineq") return run_solve_ineq(opt, text);
        if (opt.verb == "verify") return run_verify(opt, text);
        std::cerr << "error: unknown command\n";
        return kExitIo;
    } catch (const tropt::IllPosedError& e) {
        std::cerr << "ill-posed: " << e.what() << "\n";
        return kExitIllPosed;
    } catch (const tropt::ParseError& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const tropt::CostGuardError& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const tropt::DomainError& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const tropt::DimensionError& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropical linear algebra and extremal problem solver"};
    app.require_subcommand(1);

    Options opt;
    std::string semifield_name;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", opt.input_path, "input JSON file")->required();
        cmd->add_option("--semifield", semifield_name,
                        "reject inputs whose tag differs (max-plus, min-plus, max-times, min-times)");
    };

    CLI::App* solve = app.add_subcommand("solve", "solve the extremal problem (A, p, q)");
    add_common(solve);
    solve->add_flag("--show-permutation", opt.show_permutation,
                    "include normal-form permutation data");

    CLI::App* eval = app.add_subcommand("eval", "evaluate the objective at x");
    add_common(eval);

    CLI::App* spectral = app.add_subcommand("spectral", "spectral radius and per-block eigenvalues");
    add_common(spectral);
    spectral->add_flag("--show-permutation", opt.show_permutation,
                       "include normal-form permutation data");

    CLI::App* star = app.add_subcommand("star", "bounded Kleene star of a square matrix");
    add_common(star);

    CLI::App* ineq = app.add_subcommand("solve-ineq", "solve a linear inequality");
    add_common(ineq);
    ineq->add_option("--kind", opt.ineq_kind, "inequality kind")
        ->check(CLI::IsMember({"upper", "fixed"}))
        ->required();
    ineq->add_flag("--show-permutation", opt.show_permutation,
                   "include normal-form permutation data (fixed kind)");

    CLI::App* verify = app.add_subcommand("verify", "cross-check solve against a grid search");
    add_common(verify);
    verify->add_option("--verify-grid", opt.verify_grid, "grid LO HI STEP")
        ->expected(3)
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitIo;
    }

    if (!semifield_name.empty()) {
        try {
            opt.expect_tag = tropt::tag_from_name(semifield_name);
        } catch (const tropt::ParseError& e) {
            std::cerr << "malformed input: " << e.what() << "\n";
            return kExitMalformed;
        }
    }

    opt.verb = app.get_subcommands().front()->get_name();
    return dispatch(opt);
}
