#include "muxdeg/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace muxdeg {

namespace {

using ordered_json = nlohmann::ordered_json;

struct CsvFile {
    std::string path;
    std::vector<std::string> header;
    // (1-based physical line number, fields); header is line 1
    std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
};

std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> fields;
    std::string current;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    fields.push_back(current);
    return fields;
}

CsvFile read_csv(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::io_failure, "cannot open \"" + path + "\"");
    }
    CsvFile file;
    file.path = path;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (file.header.empty()) {
            file.header = split_fields(line);
        } else {
            file.rows.emplace_back(line_number, split_fields(line));
        }
    }
    if (file.header.empty()) {
        throw Error(ErrorKind::schema_mismatch, "\"" + path + "\" has no header row");
    }
    return file;
}

std::size_t require_column(const CsvFile& file, const std::string& name)
{
    const auto it = std::find(file.header.begin(), file.header.end(), name);
    if (it == file.header.end()) {
        throw Error(ErrorKind::schema_mismatch,
                    "\"" + file.path + "\" is missing column \"" + name + "\"");
    }
    return static_cast<std::size_t>(it - file.header.begin());
}

std::optional<std::size_t> find_column(const CsvFile& file, const std::string& name)
{
    const auto it = std::find(file.header.begin(), file.header.end(), name);
    if (it == file.header.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - file.header.begin());
}

std::int64_t parse_int(const CsvFile& file, std::size_t line, const std::string& field,
                       const std::string& what)
{
    std::int64_t value = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || field.empty()) {
        throw Error(ErrorKind::parse_failure, "\"" + file.path + "\" line " +
                                                  std::to_string(line) + ": " + what + " \"" +
                                                  field + "\" is not an integer");
    }
    return value;
}

const std::vector<std::string>&
row_fields(const CsvFile& file, const std::pair<std::size_t, std::vector<std::string>>& row)
{
    if (row.second.size() != file.header.size()) {
        throw Error(ErrorKind::parse_failure,
                    "\"" + file.path + "\" line " + std::to_string(row.first) + ": expected " +
                        std::to_string(file.header.size()) + " fields, got " +
                        std::to_string(row.second.size()));
    }
    return row.second;
}

std::string csv_escape(const std::string& field)
{
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string quoted = "\"";
    for (char ch : field) {
        if (ch == '"') {
            quoted += '"';
        }
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

std::string role_text(const std::optional<RoleRecord>& role)
{
    return role ? role->display() : std::string{};
}

ordered_json network_json(const ValidationReport& report)
{
    ordered_json layers = ordered_json::array();
    for (const auto& stats : report.layers) {
        layers.push_back({{"name", stats.layer.name},
                          {"active_actors", stats.active_actors},
                          {"edges", stats.edges}});
    }
    ordered_json shared = ordered_json::array();
    for (const auto& pair : report.shared) {
        shared.push_back({{"layer_a", pair.layer_a.name},
                          {"layer_b", pair.layer_b.name},
                          {"count", pair.count}});
    }
    return ordered_json{{"actors", report.total_actors},
                        {"intralayer_edges", report.intralayer_edges},
                        {"coupling_edges", report.coupling_edges},
                        {"layers", std::move(layers)},
                        {"shared_actors", std::move(shared)},
                        {"warnings", report.warnings}};
}

void dump_json(const ordered_json& j, std::ostream& out)
{
    out << j.dump(2) << '\n';
}

} // namespace

LoadResult load_network(const std::vector<LayerSourceSpec>& specs)
{
    if (specs.empty()) {
        throw Error(ErrorKind::invalid_argument, "at least one layer source is required");
    }
    NetworkBuilder builder;
    for (const auto& spec : specs) {
        if (spec.source_column == spec.target_column || spec.source_column == spec.weight_column ||
            spec.target_column == spec.weight_column) {
            throw Error(ErrorKind::invalid_argument,
                        "column names for layer \"" + spec.layer_name + "\" are not distinct");
        }
        const LayerId layer = builder.add_layer(spec.layer_name);
        const CsvFile file = read_csv(spec.path);
        const std::size_t source_col = require_column(file, spec.source_column);
        const std::size_t target_col = require_column(file, spec.target_column);
        const auto weight_col = find_column(file, spec.weight_column);

        for (const auto& row : file.rows) {
            const auto& fields = row_fields(file, row);
            const std::int64_t u = parse_int(file, row.first, fields[source_col], "actor id");
            const std::int64_t v = parse_int(file, row.first, fields[target_col], "actor id");
            if (u < 0 || v < 0) {
                throw Error(ErrorKind::parse_failure,
                            "\"" + file.path + "\" line " + std::to_string(row.first) +
                                ": negative actor id");
            }
            if (u == v) {
                throw Error(ErrorKind::parse_failure,
                            "\"" + file.path + "\" line " + std::to_string(row.first) +
                                ": self-loop on actor " + std::to_string(u));
            }
            std::int64_t weight = 1;
            if (weight_col) {
                weight = parse_int(file, row.first, fields[*weight_col], "weight");
                if (weight < 1) {
                    throw Error(ErrorKind::parse_failure,
                                "\"" + file.path + "\" line " + std::to_string(row.first) +
                                    ": non-positive weight " + std::to_string(weight));
                }
            }
            builder.add_edge(layer, u, v, weight);
        }
    }

    LoadResult result{builder.build(), {}};
    const MultiplexNetwork& net = result.network;
    ValidationReport& report = result.report;

    for (const auto& layer : net.layers()) {
        report.layers.push_back(
            LayerStats{layer, net.active_actor_count(layer), net.layer_edge_count(layer)});
        report.intralayer_edges += report.layers.back().edges;
    }
    for (std::size_t a = 0; a < net.layer_count(); ++a) {
        for (std::size_t b = a + 1; b < net.layer_count(); ++b) {
            report.shared.push_back(SharedActorStats{
                net.layers()[a], net.layers()[b],
                net.shared_actor_count(net.layers()[a], net.layers()[b])});
        }
    }
    report.total_actors = net.actor_count();
    report.coupling_edges = net.actor_count() * net.layer_count() * (net.layer_count() - 1) / 2;
    report.warnings = builder.warnings();

    // multiplex condition: each layer must share an active actor with some other
    if (net.layer_count() >= 2) {
        for (const auto& layer : net.layers()) {
            bool shares = false;
            for (const auto& other : net.layers()) {
                if (other.index != layer.index &&
                    net.shared_actor_count(layer, other) > 0) {
                    shares = true;
                    break;
                }
            }
            if (!shares) {
                report.warnings.push_back("layer \"" + layer.name +
                                          "\" shares no active actor with any other layer");
            }
        }
    }
    return result;
}

RolesResult load_roles(const std::string& path)
{
    const CsvFile file = read_csv(path);
    const std::size_t actor_col = require_column(file, "actor");
    const std::size_t role_col = require_column(file, "role");
    const auto family_col = find_column(file, "family");

    RolesResult result;
    for (const auto& row : file.rows) {
        const auto& fields = row_fields(file, row);
        const std::int64_t actor = parse_int(file, row.first, fields[actor_col], "actor id");
        if (actor < 0) {
            throw Error(ErrorKind::parse_failure, "\"" + file.path + "\" line " +
                                                      std::to_string(row.first) +
                                                      ": negative actor id");
        }
        if (fields[role_col].empty()) {
            throw Error(ErrorKind::parse_failure, "\"" + file.path + "\" line " +
                                                      std::to_string(row.first) + ": empty role");
        }
        RoleRecord record{actor, fields[role_col],
                          family_col ? fields[*family_col] : std::string{}};
        auto [it, inserted] = result.roles.insert_or_assign(actor, std::move(record));
        if (!inserted) {
            result.warnings.push_back("\"" + path + "\" line " + std::to_string(row.first) +
                                      ": duplicate role for actor " + std::to_string(actor) +
                                      ", last record wins");
        }
    }
    return result;
}

std::vector<std::string> role_warnings(const MultiplexNetwork& net, const RoleMap& roles)
{
    std::vector<std::string> warnings;
    for (const auto& [actor, record] : roles) {
        if (!net.has_actor(actor)) {
            warnings.push_back("role record for unknown actor " + std::to_string(actor));
        }
    }
    return warnings;
}

std::string layer_column_name(const std::string& layer_name)
{
    std::string column;
    column.reserve(layer_name.size());
    for (char ch : layer_name) {
        const auto uc = static_cast<unsigned char>(ch);
        column.push_back(std::isalnum(uc) ? static_cast<char>(std::tolower(uc)) : '_');
    }
    return column;
}

void export_degree_table(const DegreeTable& table, const ValidationReport* report,
                         ExportFormat format, std::ostream& out)
{
    if (format == ExportFormat::csv) {
        out << "actor,role,multilayer,aggregate";
        for (const auto& layer : table.layer_order) {
            out << ',' << layer_column_name(layer.name);
        }
        out << '\n';
        for (const auto& row : table.rows) {
            out << row.actor << ',' << csv_escape(role_text(row.role)) << ',' << row.multilayer
                << ',' << row.aggregate;
            for (const auto& cell : row.per_layer) {
                out << ',';
                if (cell) {
                    out << *cell;
                }
            }
            out << '\n';
        }
        return;
    }

    ordered_json results = ordered_json::array();
    for (const auto& row : table.rows) {
        ordered_json scores{{"multilayer", row.multilayer}, {"aggregate", row.aggregate}};
        for (std::size_t c = 0; c < table.layer_order.size(); ++c) {
            const auto key = layer_column_name(table.layer_order[c].name);
            if (row.per_layer[c]) {
                scores[key] = *row.per_layer[c];
            } else {
                scores[key] = nullptr;
            }
        }
        ordered_json entry{{"actor", row.actor}};
        entry["role"] = row.role ? ordered_json(row.role->display()) : ordered_json(nullptr);
        entry["scores"] = std::move(scores);
        results.push_back(std::move(entry));
    }
    ordered_json root;
    root["network"] = report ? network_json(*report) : ordered_json(nullptr);
    root["results"] = std::move(results);
    dump_json(root, out);
}

void export_ranking(const std::vector<RankingEntry>& ranking, ExportFormat format,
                    std::ostream& out)
{
    if (format == ExportFormat::csv) {
        out << "rank,actor,score,role\n";
        for (const auto& entry : ranking) {
            out << entry.rank << ',' << entry.actor << ',' << entry.score << ','
                << csv_escape(role_text(entry.role)) << '\n';
        }
        return;
    }
    ordered_json results = ordered_json::array();
    for (const auto& entry : ranking) {
        ordered_json record{{"rank", entry.rank}, {"actor", entry.actor},
                            {"score", entry.score}};
        record["role"] = entry.role ? ordered_json(entry.role->display()) : ordered_json(nullptr);
        results.push_back(std::move(record));
    }
    dump_json(ordered_json{{"results", std::move(results)}}, out);
}

void export_histogram(const std::vector<HistogramSeries>& series, ExportFormat format,
                      std::ostream& out)
{
    if (format == ExportFormat::csv) {
        out << "actor,series,value\n";
        for (const auto& record : series) {
            for (const auto& [name, value] : record.values) {
                out << record.actor << ',' << csv_escape(name) << ',' << value << '\n';
            }
        }
        return;
    }
    ordered_json results = ordered_json::array();
    for (const auto& record : series) {
        ordered_json values;
        for (const auto& [name, value] : record.values) {
            values[name] = value;
        }
        results.push_back(ordered_json{{"actor", record.actor}, {"values", std::move(values)}});
    }
    dump_json(ordered_json{{"results", std::move(results)}}, out);
}

void export_validation_report(const ValidationReport& report, ExportFormat format,
                              std::ostream& out)
{
    if (format == ExportFormat::csv) {
        out << "section,name,value\n";
        for (const auto& stats : report.layers) {
            out << "layer_active_actors," << csv_escape(stats.layer.name) << ','
                << stats.active_actors << '\n';
            out << "layer_edges," << csv_escape(stats.layer.name) << ',' << stats.edges << '\n';
        }
        for (const auto& pair : report.shared) {
            out << "shared_actors," << csv_escape(pair.layer_a.name + "|" + pair.layer_b.name)
                << ',' << pair.count << '\n';
        }
        out << "total_actors,," << report.total_actors << '\n';
        out << "intralayer_edges,," << report.intralayer_edges << '\n';
        out << "coupling_edges,," << report.coupling_edges << '\n';
        return;
    }
    dump_json(ordered_json{{"network", network_json(report)}}, out);
}

namespace {

template <typename Fn>
void export_to_path(const std::string& path, Fn&& writer)
{
    std::ostringstream buffer;
    writer(buffer);
    write_text_file(path, buffer.str());
}

} // namespace

void export_degree_table(const DegreeTable& table, const ValidationReport* report,
                         ExportFormat format, const std::string& path)
{
    export_to_path(path, [&](std::ostream& out) {
        export_degree_table(table, report, format, out);
    });
}

void export_ranking(const std::vector<RankingEntry>& ranking, ExportFormat format,
                    const std::string& path)
{
    export_to_path(path, [&](std::ostream& out) { export_ranking(ranking, format, out); });
}

void export_histogram(const std::vector<HistogramSeries>& series, ExportFormat format,
                      const std::string& path)
{
    export_to_path(path, [&](std::ostream& out) { export_histogram(series, format, out); });
}

void export_validation_report(const ValidationReport& report, ExportFormat format,
                              const std::string& path)
{
    export_to_path(path,
                   [&](std::ostream& out) { export_validation_report(report, format, out); });
}

std::string layer_edgelist_csv(const MultiplexNetwork& net, const LayerId& layer)
{
    const std::size_t l = net.resolve(layer);
    std::ostringstream out;
    out << "source,target,weight\n";
    for (const auto& edge : net.edges()) {
        if (edge.layer == l) {
            out << edge.u << ',' << edge.v << ',' << edge.weight << '\n';
        }
    }
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorKind::io_failure, "cannot open \"" + path + "\" for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw Error(ErrorKind::io_failure, "failed writing \"" + path + "\"");
    }
}

} // namespace muxdeg
