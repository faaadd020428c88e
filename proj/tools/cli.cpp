#include "cli.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "exactlin/backsolve.hpp"
#include "exactlin/elimination.hpp"
#include "exactlin/errors.hpp"
#include "exactlin/fraction.hpp"

namespace exactlin::cli {

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based position in the line
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        tokens.push_back(Token{line.substr(start, i - start), start + 1});
    }
    return tokens;
}

bool is_blank(const std::string& line) {
    for (const char c : line) {
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

/// Line-oriented reader that skips blank lines and tracks the 1-based line
/// number for error positions.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    std::optional<std::string> next_content_line() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!is_blank(line)) return line;
        }
        ++line_no_;
        return std::nullopt;
    }

    std::size_t line_no() const { return line_no_; }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& message) {
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message,
                     line, column);
}

Int parse_value(const Token& token, std::size_t line) {
    try {
        return Int::parse(token.text);
    } catch (const ParseError& e) {
        fail(line, token.column, e.what());
    }
}

std::vector<Int> parse_values(const std::vector<Token>& tokens, std::size_t first, std::size_t count,
                              std::size_t line, const std::string& what) {
    if (tokens.size() - first != count) {
        const std::size_t column =
            tokens.size() - first > count ? tokens[first + count].column : 1;
        fail(line, column,
             what + " has " + std::to_string(tokens.size() - first) + " entries, expected " +
                 std::to_string(count));
    }
    std::vector<Int> values;
    values.reserve(count);
    for (std::size_t t = first; t < tokens.size(); ++t) {
        values.push_back(parse_value(tokens[t], line));
    }
    return values;
}

int parse_order(LineReader& reader) {
    const std::optional<std::string> line = reader.next_content_line();
    if (!line) fail(reader.line_no(), 1, "expected the matrix order, got end of input");
    const std::vector<Token> tokens = tokenize(*line);
    if (tokens.size() != 1) {
        fail(reader.line_no(), tokens[1].column, "expected a single integer (the matrix order)");
    }
    const std::string& text = tokens.front().text;
    for (const char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            fail(reader.line_no(), tokens.front().column,
                 "matrix order must be a positive decimal integer, got '" + text + "'");
        }
    }
    errno = 0;
    char* end = nullptr;
    const long value = std::strtol(text.c_str(), &end, 10);
    if (errno != 0 || value < 1 || value > 100000) {
        fail(reader.line_no(), tokens.front().column,
             "matrix order must be between 1 and 100000, got '" + text + "'");
    }
    return static_cast<int>(value);
}

std::string render_fraction_list(const std::vector<Fraction<Int>>& values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) s += ", ";
        s += to_string(values[i]);
    }
    return s + "]";
}

std::string render_list(const std::vector<Int>& values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) s += ", ";
        s += to_string(values[i]);
    }
    return s + "]";
}

void print_snapshot(std::ostream& diag, int index, const AugmentedSystem<Int>& system) {
    diag << "B_" << index << ":\n" << system.body();
}

/// Triangularizes, dumping each snapshot to diag when tracing.
EliminationResult<Int> eliminate(AugmentedSystem<Int> system, bool trace, std::ostream& diag) {
    if (!trace) return forward_eliminate(std::move(system));
    print_snapshot(diag, 1, system);
    return forward_eliminate(std::move(system),
                             StepObserver<Int>([&diag](int step, const AugmentedSystem<Int>& state) {
                                 print_snapshot(diag, step + 1, state);
                             }));
}

ValueObserver<Int> backward_tracer(bool trace, bool cramer_labels, std::ostream& diag) {
    if (!trace) return {};
    if (cramer_labels) {
        return [&diag](int row, int, const Int& value) {
            diag << "Delta_" << row << " = " << value << '\n';
        };
    }
    return [&diag](int row, int column, const Int& value) {
        diag << "p[" << row << "][" << column << "] = " << value << '\n';
    };
}

int run_det(const JobSpec& job, const ParsedInput& input, std::ostream& out, std::ostream& diag) {
    const std::vector<Int> zero_rhs(static_cast<std::size_t>(input.matrix.rows()), Int::zero());
    const EliminationResult<Int> elim = eliminate(augment(input.matrix, zero_rhs), job.trace, diag);
    const Int det = elim.determinant();
    if (job.trace) diag << "Delta = " << det << '\n';
    if (job.format == OutputFormat::json) {
        nlohmann::ordered_json report;
        report["det"] = to_string(det);
        out << report.dump() << '\n';
    } else {
        out << "det = " << det << '\n';
    }
    return 0;
}

int run_solve(const JobSpec& job, const ParsedInput& input, std::ostream& out, std::ostream& diag) {
    if (!input.rhs) {
        diag << "error: solve requires an \"rhs:\" line in the input\n";
        return 2;
    }
    const EliminationResult<Int> elim = eliminate(augment(input.matrix, *input.rhs), job.trace, diag);
    if (job.trace && !elim.singular) diag << "Delta = " << elim.determinant() << '\n';
    DeterminantVector<Int> dets = back_substitute(elim, backward_tracer(job.trace, true, diag));

    const std::vector<Int>& cramer = dets.columns.front();
    std::vector<Fraction<Int>> solution;
    solution.reserve(cramer.size());
    for (const Int& value : cramer) solution.push_back(reduce_fraction(value, dets.delta));

    if (job.format == OutputFormat::json) {
        nlohmann::ordered_json report;
        report["det"] = to_string(dets.delta);
        nlohmann::ordered_json cramer_json = nlohmann::ordered_json::array();
        for (const Int& value : cramer) cramer_json.push_back(to_string(value));
        report["cramer"] = std::move(cramer_json);
        nlohmann::ordered_json x_json = nlohmann::ordered_json::array();
        for (const Fraction<Int>& x : solution) x_json.push_back(to_string(x));
        report["x"] = std::move(x_json);
        out << report.dump() << '\n';
    } else {
        out << "det = " << dets.delta << '\n';
        out << "cramer = " << render_list(cramer) << '\n';
        out << "x = " << render_fraction_list(solution) << '\n';
    }
    return 0;
}

int run_adjugate(const JobSpec& job, const ParsedInput& input, std::ostream& out,
                 std::ostream& diag) {
    const int n = input.matrix.rows();
    const EliminationResult<Int> elim = eliminate(augment_identity(input.matrix), job.trace, diag);
    if (job.trace && !elim.singular) diag << "Delta = " << elim.determinant() << '\n';
    DeterminantVector<Int> dets = back_substitute(elim, backward_tracer(job.trace, false, diag));

    Matrix<Int> p(n, n);
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n; ++i) {
            p(i, j) = std::move(
                dets.columns[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)]);
        }
    }

    if (job.format == OutputFormat::json) {
        nlohmann::ordered_json report;
        report["det"] = to_string(dets.delta);
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int i = 1; i <= n; ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int j = 1; j <= n; ++j) row.push_back(to_string(p(i, j)));
            rows.push_back(std::move(row));
        }
        report["adjugate"] = std::move(rows);
        out << report.dump() << '\n';
    } else {
        out << "det = " << dets.delta << '\n';
        out << "adjugate =\n" << p;
    }
    return 0;
}

ParsedInput parse_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw ParseError("cannot open input file '" + path + "'");
    }
    return parse_input(file);
}

}  // namespace

ParsedInput parse_input(std::istream& in) {
    LineReader reader(in);
    const int n = parse_order(reader);

    std::vector<std::vector<Int>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const std::optional<std::string> line = reader.next_content_line();
        if (!line) {
            fail(reader.line_no(), 1,
                 "expected matrix row " + std::to_string(i) + " of " + std::to_string(n) +
                     ", got end of input");
        }
        rows.push_back(parse_values(tokenize(*line), 0, static_cast<std::size_t>(n),
                                    reader.line_no(), "matrix row " + std::to_string(i)));
    }
    ParsedInput input{from_rows(rows), std::nullopt};

    const std::optional<std::string> tail = reader.next_content_line();
    if (!tail) return input;
    const std::vector<Token> tokens = tokenize(*tail);
    if (tokens.front().text != "rhs:") {
        fail(reader.line_no(), tokens.front().column,
             "expected \"rhs:\" or end of input after the matrix rows");
    }
    input.rhs = parse_values(tokens, 1, static_cast<std::size_t>(n), reader.line_no(),
                             "right-hand side");

    if (reader.next_content_line()) {
        fail(reader.line_no(), 1, "unexpected content after the rhs line");
    }
    return input;
}

int run(const JobSpec& job, std::istream& in, std::ostream& out, std::ostream& diag) {
    try {
        const ParsedInput input = job.input_path ? parse_file(*job.input_path) : parse_input(in);
        switch (job.command) {
            case Command::det:
                return run_det(job, input, out, diag);
            case Command::solve:
                return run_solve(job, input, out, diag);
            case Command::adjugate:
                return run_adjugate(job, input, out, diag);
        }
        diag << "internal error: unknown command\n";
        return 3;
    } catch (const SingularMatrix&) {
        diag << "error: singular matrix (det = 0)\n";
        return 1;
    } catch (const ParseError& e) {
        diag << "error: " << e.what() << '\n';
        return 2;
    } catch (const EmptyInput& e) {
        diag << "error: " << e.what() << '\n';
        return 2;
    } catch (const RaggedInput& e) {
        diag << "error: " << e.what() << '\n';
        return 2;
    } catch (const ShapeMismatch& e) {
        diag << "error: " << e.what() << '\n';
        return 2;
    } catch (const TooLarge& e) {
        diag << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        // DivisionByZero, ExactDivisionViolation, ZeroPivot, IndexOutOfRange:
        // unreachable from well-formed input; they indicate a library bug.
        diag << "internal error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace exactlin::cli
