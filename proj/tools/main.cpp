#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lrct/cli.hpp"
#include "lrct/errors.hpp"

namespace {

// Reads one bracketed list per line; blank lines and '#' comments skipped.
std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lrct::ParseError("cannot open file \"" + path + "\"");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        const size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        const size_t end = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(start, end - start + 1));
    }
    return lines;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tensor product multiplicities via sums over tables of partitions"};
    app.require_subcommand(0, 1);

    std::string format = "json";
    int jobs = 1;
    bool emit_tables = false;
    bool batch = false;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--jobs", jobs, "worker threads for table sums");
    app.add_flag("--emit-tables", emit_tables, "include the enumerated tables in the output");
    app.add_flag("--batch", batch, "read one JSON request per stdin line");

    // lrc: invariant or general multiplicity for GL_n
    auto* lrc = app.add_subcommand("lrc", "multiplicity in a tensor product of GL_n weights")->fallthrough();
    std::vector<std::string> lrc_weights;
    std::string lrc_target, lrc_file;
    lrc->add_option("--weights", lrc_weights, "weight n-tuples such as [1,0,-1]")->allow_extra_args(false);
    lrc->add_option("--target", lrc_target, "highest weight to extract (default: trivial)");
    lrc->add_option("--file", lrc_file, "file with one weight per line");

    auto* osp = app.add_subcommand("osp", "invariant multiplicity for O_n / Sp_2n")->fallthrough();
    std::vector<std::string> osp_margins;
    std::string osp_file, osp_group = "o";
    int osp_n = -1;
    osp->add_option("--margins", osp_margins, "margin partitions such as [2,1]")->allow_extra_args(false);
    osp->add_option("--file", osp_file, "file with one partition per line");
    osp->add_option("--n", osp_n, "ambient rank (default: stable threshold)");
    osp->add_option("--group", osp_group)->check(CLI::IsMember({"o", "orthogonal", "sp", "symplectic"}));

    auto* tables = app.add_subcommand("tables", "count integer tables with given margins")->fallthrough();
    std::string tab_rows, tab_cols;
    bool tab_hollow = false, tab_symmetric = false;
    int tab_cap = -1;
    tables->add_option("--rows", tab_rows, "row margins, comma separated")->required();
    tables->add_option("--cols", tab_cols, "column margins (default: rows when symmetric)");
    tables->add_flag("--hollow", tab_hollow, "force a zero diagonal");
    tables->add_flag("--symmetric", tab_symmetric, "restrict to symmetric tables");
    tables->add_option("--cap", tab_cap, "maximum entry value");

    auto* oracle = app.add_subcommand("oracle", "independent reference computation")->fallthrough();
    std::vector<std::string> oracle_weights, oracle_margins;
    int oracle_n = -1;
    std::string oracle_group = "o";
    oracle->add_option("--weights", oracle_weights)->allow_extra_args(false);
    oracle->add_option("--margins", oracle_margins)->allow_extra_args(false);
    oracle->add_option("--n", oracle_n);
    oracle->add_option("--group", oracle_group)
        ->check(CLI::IsMember({"o", "orthogonal", "sp", "symplectic"}));

    auto* crosscheck = app.add_subcommand("crosscheck", "table sum and oracle side by side")->fallthrough();
    std::vector<std::string> cc_weights, cc_margins;
    int cc_n = -1;
    std::string cc_group = "o";
    crosscheck->add_option("--weights", cc_weights)->allow_extra_args(false);
    crosscheck->add_option("--margins", cc_margins)->allow_extra_args(false);
    crosscheck->add_option("--n", cc_n);
    crosscheck->add_option("--group", cc_group)
        ->check(CLI::IsMember({"o", "orthogonal", "sp", "symplectic"}));

    auto* enumerate = app.add_subcommand("enumerate", "stream tables for one margin family")->fallthrough();
    std::vector<std::string> enum_weights, enum_margins;
    std::string enum_rows, enum_cols;
    bool enum_hollow = false, enum_symmetric = false;
    int enum_cap = -1, enum_n = -1;
    enumerate->add_option("--weights", enum_weights)->allow_extra_args(false);
    enumerate->add_option("--margins", enum_margins)->allow_extra_args(false);
    enumerate->add_option("--n", enum_n);
    enumerate->add_option("--rows", enum_rows);
    enumerate->add_option("--cols", enum_cols);
    enumerate->add_flag("--hollow", enum_hollow);
    enumerate->add_flag("--symmetric", enum_symmetric);
    enumerate->add_option("--cap", enum_cap);

    CLI11_PARSE(app, argc, argv);

    const lrct::cli::OutputMode mode =
        format == "text" ? lrct::cli::OutputMode::Text : lrct::cli::OutputMode::Json;

    if (batch) {
        if (app.get_subcommands().size() != 0) {
            lrct::cli::write_error("--batch does not take a subcommand", 1, mode, std::cout);
            return 1;
        }
        return lrct::cli::run_batch(std::cin, std::cout);
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return 1;
    }

    lrct::cli::Request req;
    req.output_mode = mode;
    req.emit_tables = emit_tables;
    req.jobs = jobs;
    try {
        if (lrc->parsed()) {
            req.command = lrct::cli::CommandKind::Lrc;
            if (!lrc_file.empty())
                for (const std::string& line : read_lines(lrc_file))
                    req.weights.push_back(lrct::cli::parse_weight(line));
            for (const std::string& w : lrc_weights)
                req.weights.push_back(lrct::cli::parse_weight(w));
            if (!lrc_target.empty()) req.target = lrct::cli::parse_weight(lrc_target);
        } else if (osp->parsed()) {
            req.command = lrct::cli::CommandKind::Osp;
            if (!osp_file.empty())
                for (const std::string& line : read_lines(osp_file))
                    req.margins.push_back(lrct::cli::parse_partition(line));
            for (const std::string& m : osp_margins)
                req.margins.push_back(lrct::cli::parse_partition(m));
            if (osp->count("--n")) req.n = osp_n;
            req.group = lrct::cli::parse_group(osp_group);
        } else if (tables->parsed()) {
            req.command = lrct::cli::CommandKind::Tables;
            lrct::TableSpec spec;
            spec.row_margins = lrct::cli::parse_csv_ints(tab_rows);
            spec.col_margins = tables->count("--cols") ? lrct::cli::parse_csv_ints(tab_cols)
                                                       : std::vector<int>{};
            spec.hollow = tab_hollow;
            spec.symmetric = tab_symmetric;
            if (tables->count("--cap")) spec.entry_cap = tab_cap;
            if (spec.col_margins.empty()) {
                if (spec.symmetric) spec.col_margins = spec.row_margins;
                else throw lrct::ParseError("tables needs --cols unless --symmetric");
            }
            req.tables = std::move(spec);
        } else if (oracle->parsed()) {
            req.command = lrct::cli::CommandKind::Oracle;
            for (const std::string& w : oracle_weights)
                req.weights.push_back(lrct::cli::parse_weight(w));
            for (const std::string& m : oracle_margins)
                req.margins.push_back(lrct::cli::parse_partition(m));
            if (oracle->count("--n")) req.n = oracle_n;
            req.group = lrct::cli::parse_group(oracle_group);
        } else if (crosscheck->parsed()) {
            req.command = lrct::cli::CommandKind::Crosscheck;
            for (const std::string& w : cc_weights)
                req.weights.push_back(lrct::cli::parse_weight(w));
            for (const std::string& m : cc_margins)
                req.margins.push_back(lrct::cli::parse_partition(m));
            if (crosscheck->count("--n")) req.n = cc_n;
            req.group = lrct::cli::parse_group(cc_group);
        } else if (enumerate->parsed()) {
            req.command = lrct::cli::CommandKind::Enumerate;
            for (const std::string& w : enum_weights)
                req.weights.push_back(lrct::cli::parse_weight(w));
            for (const std::string& m : enum_margins)
                req.margins.push_back(lrct::cli::parse_partition(m));
            if (enumerate->count("--n")) req.n = enum_n;
            req.hollow = enum_hollow;
            if (!enum_rows.empty() || !enum_cols.empty()) {
                lrct::TableSpec spec;
                if (!enum_rows.empty()) spec.row_margins = lrct::cli::parse_csv_ints(enum_rows);
                if (!enum_cols.empty()) spec.col_margins = lrct::cli::parse_csv_ints(enum_cols);
                spec.hollow = enum_hollow;
                spec.symmetric = enum_symmetric;
                if (enumerate->count("--cap")) spec.entry_cap = enum_cap;
                if (spec.col_margins.empty() && spec.symmetric)
                    spec.col_margins = spec.row_margins;
                req.tables = std::move(spec);
            }
        }
    } catch (const std::exception& e) {
        lrct::cli::write_error(e.what(), 1, mode, std::cout);
        return 1;
    }
    return lrct::cli::run(req, std::cout);
}
