#include "lrct/cli.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <set>
#include <string>

#include "json.hpp"

#include "lrct/errors.hpp"
#include "lrct/lr_contingency.hpp"
#include "lrct/oracle.hpp"

namespace lrct::cli {

using ordered_json = nlohmann::ordered_json;

GlWeight parse_weight(std::string_view text) { return GlWeight::parse(text); }
Partition parse_partition(std::string_view text) { return Partition::parse(text); }

Group parse_group(std::string_view text) {
    if (text == "o" || text == "orthogonal") return Group::Orthogonal;
    if (text == "sp" || text == "symplectic") return Group::Symplectic;
    throw ParseError("group must be one of: o, orthogonal, sp, symplectic");
}

std::vector<int> parse_csv_ints(std::string_view text) {
    std::vector<int> values;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string token(text.substr(pos, comma - pos));
        token.erase(std::remove_if(token.begin(), token.end(),
                                   [](unsigned char c) { return std::isspace(c); }),
                    token.end());
        if (token.empty()) throw ParseError("empty entry in integer list \"" + std::string(text) + "\"");
        try {
            size_t used = 0;
            values.push_back(std::stoi(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ParseError("cannot parse integer \"" + token + "\"");
        }
        if (values.back() < 0)
            throw ParseError("margins must be nonnegative, got " + token);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return values;
}

namespace {

const char* command_name(CommandKind c) {
    switch (c) {
        case CommandKind::Lrc: return "lrc";
        case CommandKind::Osp: return "osp";
        case CommandKind::Tables: return "tables";
        case CommandKind::Oracle: return "oracle";
        case CommandKind::Crosscheck: return "crosscheck";
        case CommandKind::Enumerate: return "enumerate";
    }
    return "unknown";
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ParseError(message);
}

ordered_json partition_table_json(const PartitionMatrix& table, const BigInt& norm) {
    ordered_json cells = ordered_json::array();
    for (int i = 0; i < table.rank(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < table.rank(); ++j) row.push_back(table.cell(i, j).to_string());
        cells.push_back(std::move(row));
    }
    ordered_json t;
    t["norm"] = to_decimal(norm);
    t["cells"] = std::move(cells);
    return t;
}

ordered_json int_table_json(const IntMatrix& m) {
    ordered_json cells = ordered_json::array();
    for (const auto& row : m) cells.push_back(row);
    ordered_json t;
    t["cells"] = std::move(cells);
    return t;
}

int default_sym_rank(const std::vector<Partition>& margins) {
    int threshold = 0;
    for (const Partition& p : margins) threshold += 2 * p.length();
    return std::max(1, threshold);
}

ordered_json execute(const Request& req) {
    ordered_json doc;
    doc["command"] = command_name(req.command);
    const int jobs = std::max(1, req.jobs);
    switch (req.command) {
        case CommandKind::Lrc: {
            require(!req.weights.empty(), "lrc needs at least one weight");
            require(req.margins.empty() && !req.tables, "lrc takes GL weights only");
            std::vector<GlWeight> ws;
            if (req.target) ws.push_back(req.target->dual());
            ws.insert(ws.end(), req.weights.begin(), req.weights.end());
            MarginSpec margins(std::move(ws));
            SumResult res = lrc_zero_detailed(margins, jobs);
            doc["value"] = to_decimal(res.value);
            doc["n"] = margins.n();
            doc["stable_threshold"] = margins.stable_threshold();
            doc["table_count"] = res.table_count;
            if (req.emit_tables) {
                ordered_json arr = ordered_json::array();
                enumerate_lrct(margins, /*hollow=*/true,
                               [&](const PartitionMatrix& t, const BigInt& norm) {
                                   arr.push_back(partition_table_json(t, norm));
                               });
                doc["tables"] = std::move(arr);
            }
            break;
        }
        case CommandKind::Osp: {
            require(!req.margins.empty(), "osp needs at least one margin partition");
            require(req.weights.empty() && !req.tables, "osp takes margin partitions only");
            const int n = req.n.value_or(default_sym_rank(req.margins));
            SymMarginSpec spec(req.margins, n);
            SumResult res = osp_invariant_dim_detailed(spec, req.group, jobs);
            doc["value"] = to_decimal(res.value);
            doc["n"] = spec.n();
            doc["stable_threshold"] = spec.stable_threshold();
            doc["table_count"] = res.table_count;
            if (req.emit_tables) {
                ordered_json arr = ordered_json::array();
                enumerate_sym_lrct(spec, /*hollow=*/true,
                                   [&](const PartitionMatrix& t, const BigInt& norm) {
                                       arr.push_back(partition_table_json(t, norm));
                                   });
                doc["tables"] = std::move(arr);
            }
            break;
        }
        case CommandKind::Tables: {
            require(req.tables.has_value(), "tables needs row and column margins");
            require(req.weights.empty() && req.margins.empty(),
                    "tables takes integer margins only");
            const BigInt count = count_tables(*req.tables);
            doc["value"] = to_decimal(count);
            doc["table_count"] = count.convert_to<long long>();
            if (req.emit_tables) {
                ordered_json arr = ordered_json::array();
                enumerate_tables(*req.tables,
                                 [&](const IntMatrix& m) { arr.push_back(int_table_json(m)); });
                doc["tables"] = std::move(arr);
            }
            break;
        }
        case CommandKind::Oracle: {
            require(req.weights.empty() != req.margins.empty(),
                    "oracle needs either GL weights or margin partitions");
            require(!req.tables, "oracle does not take integer margins");
            if (!req.weights.empty()) {
                MarginSpec margins(req.weights);
                doc["value"] = to_decimal(oracle_gl_invariants(margins));
                doc["n"] = margins.n();
                doc["stable_threshold"] = margins.stable_threshold();
            } else {
                const int n = req.n.value_or(default_sym_rank(req.margins));
                SymMarginSpec spec(req.margins, n);
                doc["value"] = to_decimal(oracle_osp_invariants(spec));
                doc["n"] = spec.n();
                doc["stable_threshold"] = spec.stable_threshold();
            }
            break;
        }
        case CommandKind::Crosscheck: {
            require(req.weights.empty() != req.margins.empty(),
                    "crosscheck needs either GL weights or margin partitions");
            require(!req.tables, "crosscheck does not take integer margins");
            if (!req.weights.empty()) {
                MarginSpec margins(req.weights);
                SumResult res = lrc_zero_detailed(margins, jobs);
                const BigInt reference = oracle_gl_invariants(margins);
                doc["value"] = to_decimal(res.value);
                doc["n"] = margins.n();
                doc["stable_threshold"] = margins.stable_threshold();
                doc["table_count"] = res.table_count;
                doc["agreement"] = (res.value == reference);
            } else {
                const int n = req.n.value_or(default_sym_rank(req.margins));
                SymMarginSpec spec(req.margins, n);
                SumResult res = osp_invariant_dim_detailed(spec, req.group, jobs);
                const BigInt reference = oracle_osp_invariants(spec);
                doc["value"] = to_decimal(res.value);
                doc["n"] = spec.n();
                doc["stable_threshold"] = spec.stable_threshold();
                doc["table_count"] = res.table_count;
                doc["agreement"] = (res.value == reference);
            }
            break;
        }
        case CommandKind::Enumerate: {
            const int payloads = (req.weights.empty() ? 0 : 1) + (req.margins.empty() ? 0 : 1) +
                                 (req.tables ? 1 : 0);
            require(payloads == 1,
                    "enumerate needs exactly one of GL weights, margin partitions, or integer margins");
            ordered_json arr = ordered_json::array();
            if (req.tables) {
                const BigInt count = count_tables(*req.tables);
                doc["value"] = to_decimal(count);
                doc["table_count"] = count.convert_to<long long>();
                if (req.emit_tables) {
                    enumerate_tables(*req.tables, [&](const IntMatrix& m) {
                        arr.push_back(int_table_json(m));
                    });
                    doc["tables"] = std::move(arr);
                }
                break;
            }
            BigInt sum = 0;
            long long count = 0;
            auto gather = [&](const PartitionMatrix& t, const BigInt& norm) {
                sum += norm;
                ++count;
                if (req.emit_tables) arr.push_back(partition_table_json(t, norm));
            };
            if (!req.weights.empty()) {
                MarginSpec margins(req.weights);
                enumerate_lrct(margins, req.hollow, gather);
                doc["value"] = to_decimal(sum);
                doc["n"] = margins.n();
                doc["stable_threshold"] = margins.stable_threshold();
            } else {
                const int n = req.n.value_or(default_sym_rank(req.margins));
                SymMarginSpec spec(req.margins, n);
                enumerate_sym_lrct(spec, req.hollow, gather);
                doc["value"] = to_decimal(sum);
                doc["n"] = spec.n();
                doc["stable_threshold"] = spec.stable_threshold();
            }
            doc["table_count"] = count;
            if (req.emit_tables) doc["tables"] = std::move(arr);
            break;
        }
    }
    return doc;
}

void render_tables_text(const ordered_json& arr, std::ostream& out) {
    out << "tables:\n";
    size_t index = 1;
    for (const auto& t : arr) {
        out << "  table " << index++;
        if (t.contains("norm")) out << " norm=" << t["norm"].get<std::string>();
        out << '\n';
        for (const auto& row : t["cells"]) {
            out << "   ";
            for (const auto& cell : row) {
                out << ' ';
                if (cell.is_string()) out << cell.get<std::string>();
                else out << cell.dump();
            }
            out << '\n';
        }
    }
}

void write_doc(const ordered_json& doc, OutputMode mode, std::ostream& out) {
    if (mode == OutputMode::Json) {
        out << doc.dump() << '\n';
        return;
    }
    for (const auto& [key, value] : doc.items()) {
        if (key == "tables") {
            render_tables_text(value, out);
        } else if (value.is_string()) {
            out << key << ": " << value.get<std::string>() << '\n';
        } else {
            out << key << ": " << value.dump() << '\n';
        }
    }
}

ordered_json error_doc(const char* command, const std::string& message, int code) {
    ordered_json doc;
    if (command) doc["command"] = command;
    doc["error"] = message;
    doc["code"] = code;
    return doc;
}

}  // namespace

void write_error(const std::string& message, int code, OutputMode mode, std::ostream& out) {
    write_doc(error_doc(nullptr, message, code), mode, out);
}

int run(const Request& request, std::ostream& out) {
    try {
        write_doc(execute(request), request.output_mode, out);
        return 0;
    } catch (const OutsideStableRange& e) {
        write_doc(error_doc(command_name(request.command), e.what(), 2), request.output_mode, out);
        return 2;
    } catch (const std::exception& e) {
        write_doc(error_doc(command_name(request.command), e.what(), 1), request.output_mode, out);
        return 1;
    }
}

Request request_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON request: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("request must be a JSON object");
    static const std::set<std::string> known = {
        "command", "weights", "target", "margins", "n",        "group",
        "rows",    "cols",    "hollow", "symmetric", "cap",    "emit_tables",
        "jobs",    "format"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!known.count(key)) throw ParseError("unknown request field \"" + key + "\"");
    }
    Request req;
    try {
        const std::string command = j.at("command").get<std::string>();
        if (command == "lrc") req.command = CommandKind::Lrc;
        else if (command == "osp") req.command = CommandKind::Osp;
        else if (command == "tables") req.command = CommandKind::Tables;
        else if (command == "oracle") req.command = CommandKind::Oracle;
        else if (command == "crosscheck") req.command = CommandKind::Crosscheck;
        else if (command == "enumerate") req.command = CommandKind::Enumerate;
        else throw ParseError("unknown command \"" + command + "\"");

        if (j.contains("format")) {
            const std::string format = j["format"].get<std::string>();
            if (format == "json") req.output_mode = OutputMode::Json;
            else if (format == "text") req.output_mode = OutputMode::Text;
            else throw ParseError("format must be \"json\" or \"text\"");
        }
        if (j.contains("weights"))
            for (const auto& w : j["weights"]) req.weights.push_back(parse_weight(w.get<std::string>()));
        if (j.contains("target")) req.target = parse_weight(j["target"].get<std::string>());
        if (j.contains("margins"))
            for (const auto& m : j["margins"]) req.margins.push_back(parse_partition(m.get<std::string>()));
        if (j.contains("n")) req.n = j["n"].get<int>();
        if (j.contains("group")) req.group = parse_group(j["group"].get<std::string>());
        if (j.contains("hollow")) req.hollow = j["hollow"].get<bool>();
        if (j.contains("emit_tables")) req.emit_tables = j["emit_tables"].get<bool>();
        if (j.contains("jobs")) req.jobs = j["jobs"].get<int>();
        if (j.contains("rows") || j.contains("cols")) {
            TableSpec spec;
            if (j.contains("rows")) spec.row_margins = j["rows"].get<std::vector<int>>();
            if (j.contains("cols")) spec.col_margins = j["cols"].get<std::vector<int>>();
            if (j.contains("symmetric")) spec.symmetric = j["symmetric"].get<bool>();
            if (j.contains("hollow")) spec.hollow = j["hollow"].get<bool>();
            if (j.contains("cap")) spec.entry_cap = j["cap"].get<int>();
            if (spec.symmetric && spec.col_margins.empty()) spec.col_margins = spec.row_margins;
            req.tables = std::move(spec);
        } else {
            require(!j.contains("symmetric") && !j.contains("cap"),
                    "symmetric/cap apply to integer-table requests only");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid request field: ") + e.what());
    }
    return req;
}

int run_batch(std::istream& in, std::ostream& out) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            Request req = request_from_json(line);
            req.output_mode = OutputMode::Json;
            run(req, out);
        } catch (const std::exception& e) {
            write_error(e.what(), 1, OutputMode::Json, out);
        }
    }
    return 0;
}

}  // namespace lrct::cli
