// muxdeg: multiplex degree analysis of per-layer edge lists.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "muxdeg/analysis.hpp"
#include "muxdeg/io.hpp"

namespace {

using namespace muxdeg;

bool log_enabled()
{
    const char* env = std::getenv("MUXDEG_LOG");
    if (env == nullptr) {
        return false;
    }
    const std::string value = env;
    return !value.empty() && value != "0" && value != "off";
}

void log_line(const std::string& message)
{
    if (log_enabled()) {
        std::cerr << "muxdeg: " << message << '\n';
    }
}

struct CommonOptions {
    std::vector<std::string> layer_args;
    std::string roles_path;
    std::string source_column = "source";
    std::string target_column = "target";
    std::string weight_column = "weight";
    std::string format; // empty = human text on stdout, csv default for -o
    std::string output_path;
    bool stamp = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts)
{
    cmd->add_option("--layer", opts.layer_args, "Layer as NAME=PATH (repeatable, order kept)")
        ->required()
        ->take_all();
    cmd->add_option("--roles", opts.roles_path, "Role annotation CSV (actor,role[,family])");
    cmd->add_option("--source-column", opts.source_column, "Edge list source column name");
    cmd->add_option("--target-column", opts.target_column, "Edge list target column name");
    cmd->add_option("--weight-column", opts.weight_column,
                    "Edge list weight column name (absent column means weight 1)");
    cmd->add_option("--format", opts.format, "Machine output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("-o,--output", opts.output_path, "Write results to a file instead of stdout");
    cmd->add_flag("--stamp", opts.stamp, "Include a generation timestamp in the output");
}

std::vector<LayerSourceSpec> layer_specs(const CommonOptions& opts)
{
    std::vector<LayerSourceSpec> specs;
    for (const auto& arg : opts.layer_args) {
        const auto eq = arg.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size()) {
            throw Error(ErrorKind::invalid_argument,
                        "--layer expects NAME=PATH, got \"" + arg + "\"");
        }
        specs.push_back(LayerSourceSpec{arg.substr(eq + 1), arg.substr(0, eq),
                                        opts.source_column, opts.target_column,
                                        opts.weight_column});
    }
    return specs;
}

LoadResult load(const CommonOptions& opts)
{
    LoadResult result = load_network(layer_specs(opts));
    for (const auto& stats : result.report.layers) {
        log_line("loaded layer \"" + stats.layer.name + "\": " +
                 std::to_string(stats.active_actors) + " active actors, " +
                 std::to_string(stats.edges) + " edges");
    }
    return result;
}

std::optional<RoleMap> load_roles_if_given(const CommonOptions& opts, const MultiplexNetwork& net,
                                           ValidationReport* report)
{
    if (opts.roles_path.empty()) {
        return std::nullopt;
    }
    RolesResult roles = load_roles(opts.roles_path);
    auto unknown = role_warnings(net, roles.roles);
    roles.warnings.insert(roles.warnings.end(), unknown.begin(), unknown.end());
    if (report != nullptr) {
        report->warnings.insert(report->warnings.end(), roles.warnings.begin(),
                                roles.warnings.end());
    } else {
        for (const auto& warning : roles.warnings) {
            std::cerr << "muxdeg: warning: " << warning << '\n';
        }
    }
    return std::move(roles.roles);
}

std::string timestamp_utc()
{
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

std::string stamped(std::string content, const std::string& format, bool stamp)
{
    if (!stamp) {
        return content;
    }
    if (format == "json") {
        auto j = nlohmann::ordered_json::parse(content);
        j["generated_at"] = timestamp_utc();
        return j.dump(2) + "\n";
    }
    return "# generated_at: " + timestamp_utc() + "\n" + content;
}

ExportFormat parse_format(const std::string& format)
{
    return format == "json" ? ExportFormat::json : ExportFormat::csv;
}

/// Routes rendered output: machine format when --format or -o is involved,
/// otherwise the caller's human rendering on stdout.
void emit(const CommonOptions& opts, const std::string& human,
          const std::function<std::string(ExportFormat)>& machine)
{
    if (opts.output_path.empty() && opts.format.empty()) {
        std::cout << stamped(human, "text", opts.stamp);
        return;
    }
    const std::string format = opts.format.empty() ? "csv" : opts.format;
    const std::string content = stamped(machine(parse_format(format)), format, opts.stamp);
    if (opts.output_path.empty()) {
        std::cout << content;
    } else {
        write_text_file(opts.output_path, content);
        log_line("wrote " + opts.output_path);
    }
}

std::string render_table(const std::vector<std::vector<std::string>>& cells)
{
    std::vector<std::size_t> widths;
    for (const auto& row : cells) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::ostringstream out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) {
                line += "  ";
            }
            line += row[c];
            if (c + 1 < row.size()) {
                line.append(widths[c] - row[c].size(), ' ');
            }
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        out << line << '\n';
    }
    return out.str();
}

std::string validation_text(const ValidationReport& report)
{
    std::ostringstream out;
    for (const auto& stats : report.layers) {
        out << "layer \"" << stats.layer.name << "\": " << stats.active_actors
            << " active actors, " << stats.edges << " edges\n";
    }
    for (const auto& pair : report.shared) {
        out << "shared actors \"" << pair.layer_a.name << "\"/\"" << pair.layer_b.name
            << "\": " << pair.count << '\n';
    }
    out << "total actors: " << report.total_actors << '\n';
    out << "intralayer edges: " << report.intralayer_edges << '\n';
    out << "coupling edges: " << report.coupling_edges << '\n';
    for (const auto& warning : report.warnings) {
        out << "warning: " << warning << '\n';
    }
    return out.str();
}

int run_validate(const CommonOptions& opts)
{
    LoadResult result = load(opts);
    load_roles_if_given(opts, result.network, &result.report);
    emit(opts, validation_text(result.report), [&](ExportFormat format) {
        std::ostringstream out;
        export_validation_report(result.report, format, out);
        return out.str();
    });
    return 0;
}

/// Binary mode ranks by distinct-neighbour degrees. Weighted mode swaps in
/// the strength companions: per-layer strength, overlay strength for
/// aggregate, and weighted projection column sums for multilayer.
DegreeVector scores_for_approach(const MultiplexNetwork& net, const std::string& approach,
                                 DegreeMode mode)
{
    if (approach == "aggregate") {
        if (mode == DegreeMode::binary) {
            return approach1_aggregate_degrees(net);
        }
        return degree_vector(overlay_network(net, DegreeMode::weighted), DegreeMode::weighted);
    }
    if (approach == "multilayer") {
        if (mode == DegreeMode::binary) {
            return approach3_multilayer_degrees(net);
        }
        return degree_vector(project_single_layer(assemble_supra(net)), DegreeMode::weighted);
    }
    if (approach.starts_with("layer:")) {
        const LayerId& layer = net.layer(approach.substr(6));
        return degree_vector(layer_adjacency(net, layer).matrix, mode);
    }
    throw Error(ErrorKind::invalid_argument,
                "unknown approach \"" + approach +
                    "\" (expected aggregate, multilayer, or layer:<name>)");
}

int run_rank(const CommonOptions& opts, const std::string& approach, std::size_t k,
             DegreeMode mode)
{
    const LoadResult result = load(opts);
    const auto roles = load_roles_if_given(opts, result.network, nullptr);
    const DegreeVector scores = scores_for_approach(result.network, approach, mode);
    const auto ranking =
        rank_top_k(result.network, scores, k, roles ? &*roles : nullptr);

    std::vector<std::vector<std::string>> cells{{"rank", "actor", "score", "role"}};
    for (const auto& entry : ranking) {
        cells.push_back({std::to_string(entry.rank), std::to_string(entry.actor),
                         std::to_string(entry.score),
                         entry.role ? entry.role->display() : std::string{}});
    }
    emit(opts, render_table(cells), [&](ExportFormat format) {
        std::ostringstream out;
        export_ranking(ranking, format, out);
        return out.str();
    });
    return 0;
}

int run_compare(const CommonOptions& opts, std::size_t k, const std::string& histogram_path)
{
    const LoadResult result = load(opts);
    const auto roles = load_roles_if_given(opts, result.network, nullptr);
    const DegreeTable table = comparison_table(result.network, roles ? &*roles : nullptr, k);

    std::vector<std::vector<std::string>> cells{{"actor", "role", "multilayer", "aggregate"}};
    for (const auto& layer : table.layer_order) {
        cells[0].push_back(layer_column_name(layer.name));
    }
    for (const auto& row : table.rows) {
        std::vector<std::string> line{std::to_string(row.actor),
                                      row.role ? row.role->display() : std::string{},
                                      std::to_string(row.multilayer),
                                      std::to_string(row.aggregate)};
        for (const auto& cell : row.per_layer) {
            line.push_back(cell ? std::to_string(*cell) : "absent");
        }
        cells.push_back(std::move(line));
    }
    emit(opts, render_table(cells), [&](ExportFormat format) {
        std::ostringstream out;
        export_degree_table(table, &result.report, format, out);
        return out.str();
    });

    if (!histogram_path.empty()) {
        const std::string format = opts.format.empty() ? "csv" : opts.format;
        std::ostringstream out;
        export_histogram(histogram_data(table), parse_format(format), out);
        write_text_file(histogram_path, stamped(out.str(), format, opts.stamp));
        log_line("wrote " + histogram_path);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Degree analysis of multiplex (multilayer) edge-list networks"};
    app.require_subcommand(1);

    CommonOptions validate_opts;
    CLI::App* validate = app.add_subcommand(
        "validate", "Load layers and report node/edge/shared-actor statistics");
    add_common(validate, validate_opts);

    CommonOptions rank_opts;
    std::string approach = "multilayer";
    std::string mode = "binary";
    std::size_t rank_k = 20;
    CLI::App* rank = app.add_subcommand("rank", "Rank actors by degree under one approach");
    add_common(rank, rank_opts);
    rank->add_option("--approach", approach, "aggregate, multilayer, or layer:<name>");
    rank->add_option("--mode", mode,
                     "binary counts distinct neighbours; weighted ranks by strength")
        ->check(CLI::IsMember({"binary", "weighted"}));
    rank->add_option("-k,--top", rank_k, "Number of actors to report")
        ->check(CLI::PositiveNumber);

    CommonOptions compare_opts;
    std::size_t compare_k = 20;
    std::string histogram_path;
    CLI::App* compare = app.add_subcommand(
        "compare", "Emit the multilayer/aggregate/per-layer comparison table");
    add_common(compare, compare_opts);
    compare->add_option("-k,--top", compare_k, "Number of actors to report")
        ->check(CLI::PositiveNumber);
    compare->add_option("--histogram", histogram_path,
                        "Also write per-actor stacked-histogram series to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) {
            return run_validate(validate_opts);
        }
        if (rank->parsed()) {
            return run_rank(rank_opts, approach, rank_k,
                            mode == "weighted" ? DegreeMode::weighted : DegreeMode::binary);
        }
        return run_compare(compare_opts, compare_k, histogram_path);
    } catch (const Error& e) {
        std::cerr << "muxdeg: error: " << e.what() << '\n';
        return e.is_input_error() ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "muxdeg: internal error: " << e.what() << '\n';
        return 1;
    }
}
