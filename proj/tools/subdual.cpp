// subdual: check, convert, verify and enumerate finite subordination structures.
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "subdual/enumeration.hpp"
#include "subdual/errors.hpp"
#include "subdual/json_io.hpp"
#include "subdual/verify.hpp"

using namespace subdual;

namespace {

constexpr int kPass = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;

std::string read_input(const std::string& path)
{
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::optional<std::pair<int, int>> size_pair(const std::vector<int>& v)
{
    if (v.empty()) return std::nullopt;
    return std::pair{v[0], v.size() > 1 ? v[1] : v[0]};
}

int run_check(const std::string& path, const std::string& format)
{
    const std::string text = read_input(path);
    std::string kind;
    std::vector<std::string> violations;
    try {
        const Document doc = parse_document(text);
        kind = doc.kind;
        violations = check_document(doc);
    } catch (const ValidationError& e) {
        violations.push_back(e.what());
    }
    if (format == "json") {
        nlohmann::json j;
        j["kind"] = kind;
        j["valid"] = violations.empty();
        j["violations"] = violations;
        std::cout << j.dump() << "\n";
    } else {
        if (violations.empty()) std::cout << "valid " << kind << "\n";
        for (const auto& v : violations) std::cout << v << "\n";
    }
    return violations.empty() ? kPass : kCounterexample;
}

int run_convert(const std::string& path, const std::string& to, const std::string& output)
{
    const Document doc = parse_document(read_input(path));
    const std::string out = emit(convert(doc, to));
    if (output.empty() || output == "-") {
        std::cout << out << "\n";
    } else {
        std::ofstream f(output);
        if (!f) throw ParseError("cannot write " + output);
        f << out << "\n";
    }
    return kPass;
}

int run_verify(const std::string& suite, const VerifyOptions& opt, const std::string& format)
{
    const Report r = run_suite(suite, opt);
    std::cout << (format == "json" ? report_json(r) + "\n" : report_text(r));
    return r.passed() ? kPass : kCounterexample;
}

int run_enumerate(const std::string& space_name, const std::optional<std::pair<int, int>>& atoms,
                  const std::optional<std::pair<int, int>>& points, std::optional<std::uint64_t> random, std::uint64_t seed)
{
    const auto kind = parse_space_kind(space_name);
    if (!kind) throw std::invalid_argument("unknown space '" + space_name + "'");
    const bool by_points = *kind == SpaceKind::relations || *kind == SpaceKind::equivalences || *kind == SpaceKind::split_morphisms;
    const auto& given = by_points ? points : atoms;
    if (!given) throw std::invalid_argument(space_name + " needs " + (by_points ? "--points" : "--atoms"));
    if ((by_points && atoms) || (!by_points && points))
        throw std::invalid_argument(space_name + " takes " + std::string(by_points ? "--points" : "--atoms"));
    InstanceSpace space{*kind, given->first, given->second, std::nullopt};
    if (random) space.random = RandomMode{seed, *random};
    const InstanceStream stream(space);
    for (std::uint64_t i = 0; i < stream.size(); ++i) std::cout << emit(instance_document(*kind, stream.at(i))) << "\n";
    return kPass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"finite subordinations, relations and de Vries morphisms"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    };

    std::string input;
    auto* check = app.add_subcommand("check", "validate a structure and list axiom violations");
    check->add_option("file", input, "input JSON file, - for stdin")->required();
    add_format(check);

    std::string to;
    std::string output;
    auto* convert_cmd = app.add_subcommand("convert", "convert between morphism representations");
    convert_cmd->add_option("file", input, "input JSON file, - for stdin")->required();
    convert_cmd->add_option("--to", to, "target kind")->required();
    convert_cmd->add_option("-o,--output", output, "output file");

    std::vector<int> atoms;
    std::vector<int> points;
    std::optional<std::uint64_t> random;
    std::uint64_t seed = 0;
    int jobs = 0;
    bool serial = false;
    auto add_sizes = [&](CLI::App* cmd) {
        cmd->add_option("--atoms", atoms, "atom counts N [M]")->expected(1, 2);
        cmd->add_option("--points", points, "point counts N [M]")->expected(1, 2);
        cmd->add_option("--random", random, "sample K instances instead of sweeping");
        cmd->add_option("--seed", seed, "seed for --random");
    };

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite id")->required()->check(CLI::IsMember(suite_names()));
    add_sizes(verify);
    verify->add_option("--jobs", jobs, "worker threads (0 = runtime default)");
    verify->add_flag("--serial", serial, "use the serial reference sweep");
    add_format(verify);

    std::string space;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "print every instance of a space, one per line");
    enumerate_cmd->add_option("space", space, "space kind")->required();
    add_sizes(enumerate_cmd);
    // instances are JSON lines whatever the format
    add_format(enumerate_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (check->parsed()) return run_check(input, format);
        if (convert_cmd->parsed()) return run_convert(input, to, output);
        if (verify->parsed()) {
            VerifyOptions opt;
            opt.atoms = size_pair(atoms);
            opt.points = size_pair(points);
            opt.random = random;
            opt.seed = seed;
            opt.jobs = jobs;
            opt.serial = serial;
            return run_verify(suite, opt, format);
        }
        if (enumerate_cmd->parsed())
            return run_enumerate(space, size_pair(atoms), size_pair(points), random, seed);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kCounterexample;
    } catch (const SizeError& e) {
        std::cerr << "size error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
