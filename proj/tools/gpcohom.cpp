#include "gpcohom/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace gpcohom;

namespace {

nlohmann::json read_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) invalid("cannot read config '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        invalid(std::string("config is not valid JSON: ") + e.what());
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cohomology of Coxeter groups, graph products and polyhedral joins"};
    app.require_subcommand(1);
    std::string config_path, format = "json", force, out_path;
    std::optional<int> max_length;
    std::optional<std::size_t> max_elements;
    bool timing = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("config", config_path, "job configuration (JSON)")->required();
        sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "markdown"}));
        sub->add_option("--force-regime", force, "treat the weights as small or large without certification")
            ->check(CLI::IsMember({"small", "large"}));
        sub->add_option("--max-elements", max_elements, "cap on enumerated group elements");
        sub->add_option("--max-length", max_length, "word length bound for censuses");
        sub->add_option("--out", out_path, "write the report here instead of stdout");
        sub->add_flag("--timing", timing, "include per-task wall time (breaks byte-for-byte determinism)");
    };
    auto* analyze = app.add_subcommand("analyze", "run the tasks listed in the config");
    auto* verify = app.add_subcommand("verify", "run the cross-check suites on the config");
    add_common(analyze);
    add_common(verify);
    CLI11_PARSE(app, argc, argv);

    try {
        auto config = JobConfig::from_json(read_config(config_path));
        if (!force.empty()) config.options.force = force == "small" ? ForcedRegime::Small : ForcedRegime::Large;
        if (max_elements) config.options.max_elements = *max_elements;
        if (max_length) config.options.max_length = *max_length;
        if (verify->parsed()) config.tasks = {"verify"};
        auto report = run(config, timing);
        auto text = emit(report, format == "markdown" ? Format::Markdown : Format::Json);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            if (!out) invalid("cannot write '" + out_path + "'");
            out << text;
        }
        return report.checks_failed ? 1 : 0;
    } catch (const Error& e) {
        nlohmann::json err{{"error", {{"kind", kind_name(e.kind()), }, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return exit_code(e.kind());
    }
}
