// Command-line front end. See README.md for the subcommands.
#include "stilde/cli.hpp"
#include "stilde/domain_json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"Hyperbolic-type metric toolkit"};
    app.set_version_flag("--version", "stilde 0.1.0");

    std::string command;
    std::string domain_path;
    std::string format = "csv";
    std::string x_text;
    std::string y_text;
    stilde::RunConfig cfg;
    std::int64_t samples = 0;

    app.add_option("command", command,
                   "eval | verify-axioms | verify-sharpness | verify-bounds | balls | mobius | hausdorff | dilatation")
        ->required();
    app.add_option("--domain", domain_path, "Domain spec (JSON file)");
    app.add_option("--c", cfg.c, "Metric parameter c > 0")->default_val(2.0);
    app.add_option("--seed", cfg.seed, "RNG seed")->default_val(0);
    app.add_option("--samples", samples, "Sweep size (default depends on the command)");
    app.add_option("--out", cfg.out, "Report path (default: stdout)");
    app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--x", x_text, "Point x as comma separated coordinates");
    app.add_option("--y", y_text, "Point y as comma separated coordinates");
    app.add_option("--map", cfg.map, "dilatation map: identity | rotation | scaling | stretch | mobius");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : stilde::kExitUsage;
    }

    try {
        auto cmd = stilde::command_from_string(command);
        if (!cmd) throw stilde::ConfigError("unknown command \"" + command + "\"");
        cfg.command = *cmd;
        if (samples < 0 || (app.count("--samples") && samples == 0)) {
            throw stilde::ConfigError("--samples must be at least 1");
        }
        cfg.samples = static_cast<std::size_t>(samples);
        cfg.format = format == "json" ? stilde::ReportFormat::Json : stilde::ReportFormat::Csv;
        if (!domain_path.empty()) {
            std::ifstream in(domain_path);
            if (!in) throw stilde::ConfigError("cannot read domain file " + domain_path);
            std::stringstream buf;
            buf << in.rdbuf();
            cfg.domain = stilde::parse_domain(buf.str());
        }
        if (!x_text.empty()) cfg.x = stilde::parse_point(x_text);
        if (!y_text.empty()) cfg.y = stilde::parse_point(y_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return stilde::kExitUsage;
    }
    return stilde::run(cfg, std::cout, std::cerr);
}
