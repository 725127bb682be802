#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lrct/gl_weight.hpp"
#include "lrct/integer_tables.hpp"
#include "lrct/orthosymplectic.hpp"

namespace lrct::cli {

enum class CommandKind { Lrc, Osp, Tables, Oracle, Crosscheck, Enumerate };
enum class OutputMode { Json, Text };

// One fully parsed invocation; every field is validated before computation.
struct Request {
    CommandKind command = CommandKind::Lrc;
    OutputMode output_mode = OutputMode::Json;
    bool emit_tables = false;
    int jobs = 1;

    std::vector<GlWeight> weights;      // GL margin weights (n-tuples)
    std::optional<GlWeight> target;     // lrc: ask for this highest weight
    std::vector<Partition> margins;     // O/Sp margin partitions
    std::optional<int> n;               // O/Sp ambient rank; default: threshold
    Group group = Group::Orthogonal;
    std::optional<TableSpec> tables;    // integer-table payload
    bool hollow = false;                // zero-diagonal flag for `enumerate`
};

GlWeight parse_weight(std::string_view text);
Partition parse_partition(std::string_view text);
// Accepts "o"/"orthogonal" and "sp"/"symplectic".
Group parse_group(std::string_view text);
// Comma-separated nonnegative integers, e.g. "1,2,1".
std::vector<int> parse_csv_ints(std::string_view text);

// Executes one request and writes exactly one document (a JSON line or a text
// block) to `out`.  Returns the exit code: 0 success, 1 invalid input or
// internal failure, 2 outside the stable range.
int run(const Request& request, std::ostream& out);

// Batch mode: one JSON request per input line, one JSON response per output
// line.  Malformed lines produce an error response; always returns 0.
int run_batch(std::istream& in, std::ostream& out);

// Parses the JSON form of a request (batch lines, tests).
Request request_from_json(const std::string& text);

// Error document matching what `run` emits, for failures that happen before
// a Request exists.
void write_error(const std::string& message, int code, OutputMode mode, std::ostream& out);

}  // namespace lrct::cli
