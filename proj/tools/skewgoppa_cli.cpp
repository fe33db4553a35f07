#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "skewgoppa/config.hpp"
#include "skewgoppa/errors.hpp"
#include "skewgoppa/verify.hpp"

namespace {

// exit codes: 0 success, 1 verification failure, 2 precondition/hypothesis
// failure, 3 parse error
constexpr int kExitVerifyFail = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitParse = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw skewgoppa::ParseError(0, "cannot open config file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
}

int cmd_build(const std::string& config_path, const std::string& out_dir) {
    skewgoppa::InstanceConfig cfg = skewgoppa::parse_config(read_file(config_path));
    skewgoppa::BuiltInstance inst = skewgoppa::build_instance(cfg);
    skewgoppa::ArtifactTexts texts = skewgoppa::artifact_texts(inst);

    std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    std::string stem = std::filesystem::path(config_path).stem().string();
    auto emit = [&](const std::string& suffix, const std::string& text) {
        std::filesystem::path p = dir / (stem + suffix);
        write_file(p, text);
        std::cout << "wrote " << p.string() << '\n';
    };
    emit(".gen.txt", texts.generator);
    emit(".pcheck.txt", texts.parity);
    if (texts.factors) emit(".factors.txt", *texts.factors);
    return 0;
}

int cmd_params(const std::string& config_path, std::optional<uint64_t> budget) {
    skewgoppa::InstanceConfig cfg = skewgoppa::parse_config(read_file(config_path));
    if (budget) cfg.budget = *budget;
    skewgoppa::BuiltInstance inst = skewgoppa::build_instance(cfg);
    std::cout << skewgoppa::format_report(inst, inst.report());
    return 0;
}

int cmd_distance(const std::string& config_path, std::optional<uint64_t> budget) {
    skewgoppa::InstanceConfig cfg = skewgoppa::parse_config(read_file(config_path));
    if (budget) cfg.budget = *budget;
    skewgoppa::BuiltInstance inst = skewgoppa::build_instance(cfg);
    skewgoppa::DistanceResult d = skewgoppa::min_distance(inst.code, cfg.budget);
    switch (d.kind) {
        case skewgoppa::DistanceResult::Kind::exact:
            std::cout << "d = " << d.value << " (" << d.enumerated
                      << " nonzero codewords enumerated)\n";
            break;
        case skewgoppa::DistanceResult::Kind::budget_exceeded:
            std::cout << "d = budget exceeded (budget " << cfg.budget << ")\n";
            break;
        case skewgoppa::DistanceResult::Kind::zero_code:
            std::cout << "d = undefined (zero code)\n";
            break;
    }
    return 0;
}

int cmd_verify(const std::string& suite, uint64_t seed) {
    skewgoppa::verify::SuiteResult res = skewgoppa::verify::run_suite(suite, seed);
    std::cout << res.output;
    return res.passed ? 0 : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct and verify Goppa-family codes over small finite fields"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".", suite;
    uint64_t seed = 0;
    std::optional<uint64_t> budget;

    CLI::App* build = app.add_subcommand("build", "emit generator/parity-check/factor files");
    build->add_option("config", config_path, "instance config file")->required();
    build->add_option("--out", out_dir, "output directory (default .)");

    CLI::App* params = app.add_subcommand("params", "print the parameter report");
    params->add_option("config", config_path, "instance config file")->required();
    params->add_option("--budget", budget, "codeword budget for the distance search");

    CLI::App* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_option("--seed", seed, "64-bit stream seed (default 0)");

    CLI::App* distance = app.add_subcommand("distance", "exhaustive minimum distance");
    distance->add_option("config", config_path, "instance config file")->required();
    distance->add_option("--budget", budget, "codeword budget override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitParse : 0;
    }

    try {
        if (build->parsed()) return cmd_build(config_path, out_dir);
        if (params->parsed()) return cmd_params(config_path, budget);
        if (verify->parsed()) return cmd_verify(suite, seed);
        if (distance->parsed()) return cmd_distance(config_path, budget);
    } catch (const skewgoppa::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const skewgoppa::HypothesisError& e) {
        std::cerr << "hypothesis failure: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition failure: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const std::out_of_range& e) {
        std::cerr << "precondition failure: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFail;
    }
    return 0;
}
