#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "relcone/jobs/jobs.hpp"
#include "relcone/simplicial/builtins.hpp"

using namespace relcone;
using relcone::jobs::json;

namespace {

int usage_error(const std::string& message)
{
    std::cerr << "relcone: " << message << "\n";
    return jobs::exit_usage;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Relative homology, Čech cocycles, integrality and alcove computations from JSON jobs"};
    std::string job_path, builtin, format;
    bool list = false;
    auto* job_opt = app.add_option("--job", job_path, "Job file (JSON); '-' reads standard input");
    auto* builtin_opt = app.add_option("--builtin", builtin, "Run the homology job of a built-in space or map");
    app.add_option("--format", format, "Report format (overrides the job's \"format\")")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--list-builtins", list, "Print the built-in spaces and maps");
    job_opt->excludes(builtin_opt);
    CLI11_PARSE(app, argc, argv);

    if (list) {
        for (const auto& s : builtins::space_names())
            std::cout << "space " << s << "\n";
        for (const auto& m : builtins::map_names())
            std::cout << "map " << m << "\n";
        return jobs::exit_ok;
    }

    json job;
    if (!builtin.empty()) {
        try {
            job = jobs::builtin_job(builtin);
        } catch (const ValidationError& e) {
            return usage_error(e.what());
        }
    } else if (!job_path.empty()) {
        std::stringstream text;
        if (job_path == "-") {
            text << std::cin.rdbuf();
        } else {
            std::ifstream in(job_path);
            if (!in)
                return usage_error("cannot read " + job_path);
            text << in.rdbuf();
        }
        try {
            job = json::parse(text.str());
        } catch (const json::parse_error& e) {
            return usage_error("malformed JSON in " + job_path + ": " + e.what());
        }
    } else {
        return usage_error("give --job <file> or --builtin <name>\n" + app.help());
    }

    if (format.empty())
        format = job.is_object() && job.contains("format") && job["format"].is_string() ? job["format"].get<std::string>()
                                                                                        : "text";
    const jobs::Report report = jobs::run(job);
    std::cout << (format == "json" ? jobs::render_json(report.document) : jobs::render_text(report.document));
    return report.exit_code;
}
