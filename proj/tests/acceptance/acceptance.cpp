// Acceptance checks for the elimination library and CLI. Each criterion
// prints exactly one line, "AC-k PASS - detail" or "AC-k FAIL - detail";
// the process exits nonzero if any criterion fails.
//
// Usage: acceptance <path-to-cli-binary>

#include <sys/wait.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "exactlin/backsolve.hpp"
#include "exactlin/counting.hpp"
#include "exactlin/elimination.hpp"
#include "exactlin/errors.hpp"
#include "exactlin/integer.hpp"
#include "exactlin/matrix.hpp"
#include "exactlin/oracle.hpp"
#include "exactlin/polynomial.hpp"
#include "support/checks.hpp"
#include "support/corpus.hpp"

using namespace exactlin;

namespace {

/// Thrown by a criterion to report a failure with a human-readable reason.
struct CriterionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void require(bool condition, const std::string& reason) {
    if (!condition) throw CriterionFailure(reason);
}

struct System {
    Matrix<Int> a;
    std::vector<Int> b;
};

/// The shared random corpus: 500 systems, n in 1..6, entries in [-9, 9].
std::vector<System> small_corpus() {
    testsupport::Rng rng(20240801);
    std::vector<System> corpus;
    corpus.reserve(500);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        corpus.push_back(
            {testsupport::random_matrix(rng, n), testsupport::random_vector(rng, n)});
    }
    return corpus;
}

// ---------------------------------------------------------------------------
// AC-1: determinants and Cramer determinants match the cofactor oracle.
// ---------------------------------------------------------------------------
std::string check_oracle_equivalence() {
    const auto start = Clock::now();
    int nonsingular = 0;
    for (const System& sys : small_corpus()) {
        const Int expected = cofactor_det(sys.a);
        require(determinant(sys.a) == expected, "determinant disagrees with the cofactor oracle");
        if (expected.is_zero()) continue;
        ++nonsingular;
        const ExactSolution<Int> sol = solve(sys.a, sys.b);
        require(sol.delta == expected, "solve determinant disagrees with the cofactor oracle");
        for (int j = 1; j <= sys.a.rows(); ++j) {
            require(sol.cramer[static_cast<std::size_t>(j - 1)] ==
                        cofactor_det(replace_column(sys.a, j, sys.b)),
                    "Cramer determinant disagrees with the column-replaced oracle");
        }
    }
    const long long ms = elapsed_ms(start);
    require(ms < 30000, "corpus took " + std::to_string(ms) + " ms, limit 30000 ms");
    return "500 systems (n in 1..6), " + std::to_string(nonsingular) +
           " nonsingular, all determinants and Cramer values match the oracle in " +
           std::to_string(ms) + " ms";
}

// ---------------------------------------------------------------------------
// AC-2: every division in the forward and backward ways is exact.
// ---------------------------------------------------------------------------
std::string check_divisibility() {
    std::uint64_t divisions_checked = 0;
    const auto run_system = [&divisions_checked](const Matrix<Int>& a,
                                                 const std::vector<Int>& b) {
        try {
            const auto elim = forward_eliminate(augment(a, b));
            if (!elim.singular) back_substitute(elim);
        } catch (const ExactDivisionViolation& e) {
            throw CriterionFailure(std::string("division with remainder: ") + e.what());
        }
        const auto n = static_cast<std::uint64_t>(a.rows());
        divisions_checked += n * (n - 1) * (n + 1) / 3 + (n - 1);
    };

    for (const System& sys : small_corpus()) run_system(sys.a, sys.b);

    testsupport::Rng rng(20240802);
    for (int trial = 0; trial < 100; ++trial) {
        run_system(testsupport::random_matrix(rng, 10), testsupport::random_vector(rng, 10));
    }
    return "600 systems, ~" + std::to_string(divisions_checked) +
           " exact divisions, zero remainder violations";
}

// ---------------------------------------------------------------------------
// AC-3: each post-step-k entry is the bordered minor of order k+1.
// ---------------------------------------------------------------------------
std::string check_intermediate_semantics() {
    testsupport::Rng rng(20240803);
    std::uint64_t entries_checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const AugmentedSystem<Int> system =
            augment(testsupport::random_matrix(rng, n), testsupport::random_vector(rng, n));

        // Eliminate once to learn the row order the pivoting chose, then
        // replay on the pre-permuted system: that run needs no swaps, so its
        // snapshots are directly comparable to bordered minors of its input.
        const EliminationResult<Int> pilot = forward_eliminate(system);
        const AugmentedSystem<Int> permuted(
            system.order(), system.augmented_cols(),
            testsupport::apply_row_permutation(system.body(), pilot.permutation));

        const EliminationTrace<Int> trace = forward_eliminate_traced(permuted);
        const int steps = static_cast<int>(trace.snapshots.size()) - 1;
        for (int k = 1; k <= steps; ++k) {
            const Matrix<Int>& snapshot = trace.snapshots[static_cast<std::size_t>(k)].body();
            for (int i = k + 1; i <= n; ++i) {
                for (int j = k + 1; j <= n + 1; ++j) {
                    require(snapshot(i, j) == bordered_minor(permuted, k + 1, i, j),
                            "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") after step " + std::to_string(k) +
                                " is not the order-" + std::to_string(k + 1) +
                                " bordered minor");
                    ++entries_checked;
                }
            }
        }
    }
    return "200 systems (n <= 5), " + std::to_string(entries_checked) +
           " intermediate entries equal their bordered minors";
}

// ---------------------------------------------------------------------------
// AC-4: the adjugate satisfies A*P = P*A = det*I and matches the oracle.
// ---------------------------------------------------------------------------
std::string check_adjugate_identity() {
    testsupport::Rng rng(20240804);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Matrix<Int> a = testsupport::random_nonsingular(rng, n);
        const AdjugateResult<Int> result = adjugate(a);
        const Matrix<Int> scaled =
            testsupport::scale(result.delta, testsupport::identity<Int>(n));
        require(testsupport::multiply(a, result.adjugate) == scaled, "A * P != det * I");
        require(testsupport::multiply(result.adjugate, a) == scaled, "P * A != det * I");
        require(result.adjugate == naive_adjugate(a), "adjugate disagrees with the oracle");
    }
    return "200 nonsingular systems (n <= 6): A*P = P*A = det*I and P matches the cofactor "
           "transpose";
}

// ---------------------------------------------------------------------------
// AC-5: the Sylvester identity holds, plain and column-replaced.
// ---------------------------------------------------------------------------
std::string check_sylvester() {
    testsupport::Rng rng(20240805);
    std::uint64_t identities = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Matrix<Int> a = testsupport::random_matrix(rng, n);
        const std::vector<Int> v = testsupport::random_vector(rng, n);
        for (int s = 1; s <= n; ++s) {
            require(sylvester_check(a, s),
                    "plain identity fails at order " + std::to_string(s));
            ++identities;
            for (int j = s; j <= n; ++j) {
                require(sylvester_check(a, s, j, v), "column-replaced identity fails at order " +
                                                         std::to_string(s) + ", column " +
                                                         std::to_string(j));
                ++identities;
            }
        }
    }
    return "100 matrices (n <= 5), " + std::to_string(identities) +
           " plain and column-replaced identities hold";
}

// ---------------------------------------------------------------------------
// AC-6: pivoting keeps determinant sign and solutions correct.
// ---------------------------------------------------------------------------
std::string check_pivoting() {
    testsupport::Rng rng(20240806);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        Matrix<Int> a(n, n);
        Int expected;
        do {
            a = testsupport::random_matrix(rng, n);
            a(1, 1) = Int::zero();
            expected = cofactor_det(a);
        } while (expected.is_zero());

        require(determinant(a) == expected,
                "determinant of a pivoted system disagrees with the oracle");

        const std::vector<Int> b = testsupport::random_vector(rng, n);
        const ExactSolution<Int> sol = solve(a, b);
        require(sol.delta == expected, "solve determinant disagrees after pivoting");
        for (int i = 1; i <= n; ++i) {
            Int acc = Int::zero();
            for (int j = 1; j <= n; ++j) {
                acc = acc + a(i, j) * sol.cramer[static_cast<std::size_t>(j - 1)];
            }
            require(acc == sol.delta * b[static_cast<std::size_t>(i - 1)],
                    "Cramer residual is nonzero in row " + std::to_string(i));
        }
    }
    return "100 nonsingular systems with a(1,1) = 0: determinant sign and Cramer residuals "
           "all correct";
}

// ---------------------------------------------------------------------------
// AC-7: multiplication counts stay within 2n^3 and scale cubically.
// ---------------------------------------------------------------------------
std::string check_operation_counts() {
    testsupport::Rng rng(20240807);
    std::uint64_t muls_20 = 0;
    std::uint64_t muls_40 = 0;
    std::string detail;
    for (const int n : {10, 20, 40}) {
        const Matrix<Int> ints = testsupport::random_nonsingular(rng, n);
        Matrix<CountingInt> a(n, n);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) a(i, j) = CountingInt(ints(i, j));
        }
        const std::vector<CountingInt> b(static_cast<std::size_t>(n), CountingInt(1));

        CountingInt::reset_counts();
        const auto result = forward_eliminate(augment(a, b));
        require(!result.singular, "counting run unexpectedly singular");
        const std::uint64_t muls = CountingInt::counts().multiplications;
        const std::uint64_t limit = 2ULL * static_cast<std::uint64_t>(n) * n * n;
        require(muls <= limit, "n=" + std::to_string(n) + " used " + std::to_string(muls) +
                                   " multiplications, limit " + std::to_string(limit));
        if (n == 20) muls_20 = muls;
        if (n == 40) muls_40 = muls;
        detail += (detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " +
                  std::to_string(muls);
    }
    CountingInt::reset_counts();

    const double ratio = static_cast<double>(muls_40) / static_cast<double>(muls_20);
    std::ostringstream formatted;
    formatted.precision(3);
    formatted << std::fixed << ratio;
    require(ratio >= 7.0 && ratio <= 9.0,
            "doubling ratio " + formatted.str() + " outside [7, 9]");
    return detail + " multiplications (all <= 2n^3), doubling ratio " + formatted.str();
}

// ---------------------------------------------------------------------------
// AC-8: a 100x100 solve finishes quickly and growth stays within Hadamard.
// ---------------------------------------------------------------------------
std::string check_desk_scale() {
    const int n = 100;
    testsupport::Rng rng(20240808);
    Matrix<Int> a = testsupport::random_matrix(rng, n);
    std::vector<Int> b = testsupport::random_vector(rng, n);

    const auto start = Clock::now();
    ExactSolution<Int> sol = solve(a, b);
    const long long ms = elapsed_ms(start);
    require(ms < 60000, "solve took " + std::to_string(ms) + " ms, limit 60000 ms");
    require(!sol.delta.is_zero(), "draw was singular");

    // Growth check on a separate instrumented pass: after step k the active
    // block holds bordered minors of order k+1, so each entry must obey the
    // Hadamard bound for that order.
    const Int largest = testsupport::max_abs_entry(a, b);
    std::uint64_t entries_checked = 0;
    forward_eliminate(
        augment(a, b), StepObserver<Int>([&](int k, const AugmentedSystem<Int>& state) {
            const Int bound = testsupport::hadamard_bound_squared(k + 1, largest);
            for (int i = k + 1; i <= n; ++i) {
                for (int j = k + 1; j <= n + 1; ++j) {
                    const Int& entry = state.body()(i, j);
                    require(entry * entry <= bound,
                            "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") after step " + std::to_string(k) +
                                " exceeds the Hadamard bound of order " + std::to_string(k + 1));
                    ++entries_checked;
                }
            }
        }));
    return "100x100 solve in " + std::to_string(ms) + " ms, " +
           std::to_string(entries_checked) + " intermediate entries within the Hadamard bound";
}

// ---------------------------------------------------------------------------
// AC-9: the whole pipeline works over the polynomial ring.
// ---------------------------------------------------------------------------
std::string check_polynomial_ring() {
    testsupport::Rng rng(20240809);
    int produced = 0;
    while (produced < 20) {
        const Matrix<Poly> a = testsupport::random_poly_matrix(rng, 3, 2, 3);
        if (determinant(a).is_zero()) continue;
        ++produced;
        try {
            const AdjugateResult<Poly> result = adjugate(a);
            const Matrix<Poly> scaled =
                testsupport::scale(result.delta, testsupport::identity<Poly>(3));
            require(testsupport::multiply(a, result.adjugate) == scaled,
                    "A * P != det * I over the polynomial ring");
            require(testsupport::multiply(result.adjugate, a) == scaled,
                    "P * A != det * I over the polynomial ring");
        } catch (const ExactDivisionViolation& e) {
            throw CriterionFailure(std::string("polynomial division with remainder: ") +
                                   e.what());
        }
    }
    return "20 nonsingular 3x3 polynomial systems: adjugate identity exact, every division "
           "remainder-free";
}

// ---------------------------------------------------------------------------
// AC-10: the CLI produces byte-exact reports and exit codes.
// ---------------------------------------------------------------------------
std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream content;
    content << file.rdbuf();
    return content.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    file << content;
}

struct CliCase {
    std::string name;
    std::string args;
    std::string input;
    int exit_code = 0;
    std::string expected_out;
    std::string expected_err;
};

std::string check_cli(const std::string& cli_path) {
    const std::vector<CliCase> cases = {
        {"det", "det", "2\n2 1\n1 3\n", 0, "det = 5\n", ""},
        {"solve", "solve", "3\n2 1 1\n1 3 1\n1 1 4\nrhs: 4 5 6\n", 0,
         "det = 17\ncramer = [17, 17, 17]\nx = [1/1, 1/1, 1/1]\n", ""},
        {"solve-json", "solve --format json", "3\n2 1 1\n1 3 1\n1 1 4\nrhs: 4 5 6\n", 0,
         "{\"det\":\"17\",\"cramer\":[\"17\",\"17\",\"17\"],\"x\":[\"1/1\",\"1/1\",\"1/1\"]}\n",
         ""},
        {"adjugate", "adjugate", "2\n2 1\n1 3\n", 0, "det = 5\nadjugate =\n3 -1\n-1 2\n", ""},
        {"singular", "solve", "2\n1 2\n2 4\nrhs: 1 2\n", 1, "",
         "error: singular matrix (det = 0)\n"},
        {"malformed", "det", "2\n2 1\n1 x\n", 2, "",
         "error: line 3, column 3: invalid integer 'x'\n"},
    };

    for (const CliCase& test : cases) {
        const std::string in_path = "ac10_" + test.name + ".in";
        const std::string out_path = "ac10_" + test.name + ".out";
        const std::string err_path = "ac10_" + test.name + ".err";
        write_file(in_path, test.input);

        const std::string command = "\"" + cli_path + "\" " + test.args + " < " + in_path +
                                    " > " + out_path + " 2> " + err_path;
        const int status = std::system(command.c_str());
        require(status != -1 && WIFEXITED(status), test.name + ": CLI did not exit normally");
        const int code = WEXITSTATUS(status);
        require(code == test.exit_code, test.name + ": exit code " + std::to_string(code) +
                                            ", expected " + std::to_string(test.exit_code));
        require(read_file(out_path) == test.expected_out,
                test.name + ": stdout differs from the golden output");
        require(read_file(err_path) == test.expected_err,
                test.name + ": stderr differs from the golden output");

        std::remove(in_path.c_str());
        std::remove(out_path.c_str());
        std::remove(err_path.c_str());
    }
    return std::to_string(cases.size()) +
           " golden CLI cases byte-exact with the expected exit codes";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli-binary>\n";
        return 2;
    }
    const std::string cli_path = argv[1];

    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
        {"AC-1", check_oracle_equivalence},
        {"AC-2", check_divisibility},
        {"AC-3", check_intermediate_semantics},
        {"AC-4", check_adjugate_identity},
        {"AC-5", check_sylvester},
        {"AC-6", check_pivoting},
        {"AC-7", check_operation_counts},
        {"AC-8", check_desk_scale},
        {"AC-9", check_polynomial_ring},
        {"AC-10", [&cli_path] { return check_cli(cli_path); }},
    };

    int failures = 0;
    for (const auto& [id, run] : criteria) {
        try {
            std::cout << id << " PASS - " << run() << std::endl;
        } catch (const std::exception& e) {
            ++failures;
            std::cout << id << " FAIL - " << e.what() << std::endl;
        }
    }
    return failures == 0 ? 0 : 1;
}
