#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "exactlin/integer.hpp"
#include "exactlin/matrix.hpp"

namespace exactlin::cli {

enum class Command { det, solve, adjugate };
enum class OutputFormat { text, json };

/// One CLI invocation: a command plus its input source and output knobs.
/// The CLI works over arbitrary-precision integers only; the polynomial
/// ring is a library-level feature.
struct JobSpec {
    Command command = Command::det;
    /// Absent means standard input.
    std::optional<std::string> input_path;
    OutputFormat format = OutputFormat::text;
    /// Dump elimination snapshots and backward values to the diagnostic
    /// stream.
    bool trace = false;
};

struct ParsedInput {
    Matrix<Int> matrix;
    std::optional<std::vector<Int>> rhs;
};

/// Parses the matrix file format: line 1 holds the order n, lines 2..n+1
/// hold n integers each, and an optional final line "rhs: v1 ... vn" holds
/// the right-hand side. Blank lines are ignored. Throws ParseError with
/// 1-based line/column positions.
ParsedInput parse_input(std::istream& in);

/// Executes the job: reads the input, runs the requested computation, writes
/// the report to out and diagnostics to diag. Returns the process exit code:
/// 0 success, 1 singular matrix, 2 malformed input, 3 internal invariant
/// violation.
int run(const JobSpec& job, std::istream& in, std::ostream& out, std::ostream& diag);

}  // namespace exactlin::cli
