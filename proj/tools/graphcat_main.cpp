#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphcat/dot.hpp"
#include "graphcat/errors.hpp"
#include "graphcat/functors.hpp"
#include "graphcat/hom_search.hpp"
#include "graphcat/json_io.hpp"
#include "graphcat/laws.hpp"

namespace {

using namespace graphcat;

constexpr int kOk = 0;
constexpr int kSemantic = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct CliError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CliError{kUsage, "cannot read " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw CliError{kUsage, "cannot write " + out_path};
    out << text;
}

GraphObject load_object(const std::string& path) {
    try {
        return parse_object(read_file(path));
    } catch (const ParseError& e) {
        throw CliError{kUsage, path + ": " + e.what()};
    }
}

Caps parse_caps(const std::string& spec) {
    Caps caps;
    if (spec.empty())
        return caps;
    unsigned v = 0, e = 0, i = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(spec);
    if (!(in >> v >> c1 >> e >> c2 >> i) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof())
        throw CliError{kUsage, "--caps expects V,E,I (three sizes), got \"" + spec + "\""};
    return Caps{v, e, i};
}

std::vector<FunctorName> parse_pipeline(const std::string& spec) {
    std::vector<FunctorName> fs;
    if (spec.empty())
        return fs;
    std::istringstream in(spec);
    std::string name;
    while (std::getline(in, name, ',')) {
        auto f = functor_from_name(name);
        if (!f)
            throw CliError{kUsage, "unknown functor \"" + name + "\""};
        fs.push_back(*f);
    }
    return fs;
}

nlohmann::json report_json(const CheckReport& r) {
    return {{"law", r.law},
            {"passed", r.passed},
            {"cases", r.cases},
            {"notes", r.notes},
            {"failures", r.failures}};
}

void print_report(const CheckReport& r) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.law << " (" << r.cases << " cases)\n";
    for (const std::string& n : r.notes)
        std::cout << "  note: " << n << "\n";
    for (const std::string& f : r.failures)
        std::cout << "  failure: " << f << "\n";
}

int cmd_validate(const std::string& file, const std::string& pred_name) {
    GraphObject x = load_object(file);
    std::optional<Predicate> pred;
    if (!pred_name.empty()) {
        pred = predicate_from_name(pred_name);
        if (!pred)
            throw CliError{kUsage, "unknown predicate \"" + pred_name + "\""};
    }
    const std::vector<std::string> violations = validate(x, pred);
    if (violations.empty()) {
        std::cout << "valid " << kind_name(x.kind()) << "\n";
        return kOk;
    }
    for (const std::string& v : violations)
        std::cout << v << "\n";
    return kSemantic;
}

int cmd_apply(const std::string& pipeline_spec, const std::string& file,
              const std::string& out_path) {
    const std::vector<FunctorName> fs = parse_pipeline(pipeline_spec);
    GraphObject x = load_object(file);
    if (auto bad = pipeline_mismatch(fs, x.kind())) {
        const FunctorInfo& info = functor_info(fs[*bad]);
        std::cerr << "stage " << *bad << " (" << info.name << ") does not accept the "
                  << (*bad == 0 ? kind_name(x.kind())
                                : kind_name(functor_info(fs[*bad - 1]).cod_kind))
                  << " produced so far\n";
        return kSemantic;
    }
    write_output(out_path, serialize(apply_pipeline(fs, x)));
    return kOk;
}

int cmd_homs(const std::string& kind_name_arg, const std::string& file_a,
             const std::string& file_b, bool count_only, bool exists_only,
             const std::string& caps_spec) {
    auto kind = mor_kind_from_name(kind_name_arg);
    if (!kind)
        throw CliError{kUsage, "unknown morphism kind \"" + kind_name_arg + "\""};
    GraphObject dom = load_object(file_a);
    GraphObject cod = load_object(file_b);
    if (dom.kind() != object_kind_of(*kind) || cod.kind() != object_kind_of(*kind)) {
        std::cerr << "morphism kind " << mor_kind_name(*kind) << " connects "
                  << kind_name(object_kind_of(*kind)) << " objects, got "
                  << kind_name(dom.kind()) << " and " << kind_name(cod.kind()) << "\n";
        return kSemantic;
    }
    const Caps caps = parse_caps(caps_spec);
    if (count_only) {
        std::cout << count_homs(*kind, dom, cod, caps) << "\n";
        return kOk;
    }
    if (exists_only) {
        const bool yes = exists_hom(*kind, dom, cod, caps);
        std::cout << (yes ? "yes" : "no") << "\n";
        return yes ? kOk : kSemantic;
    }
    nlohmann::json out = nlohmann::json::array();
    for (const Morphism& m : enumerate_homs(*kind, dom, cod, caps))
        out.push_back(nlohmann::json::parse(serialize(m)));
    std::cout << out.dump(2) << "\n";
    return kOk;
}

int cmd_laws(const std::string& suite, unsigned seed, unsigned cases,
             const std::string& caps_spec, const std::string& out_path) {
    LawOptions opt;
    opt.seed = seed;
    opt.cases = cases;
    opt.caps = parse_caps(caps_spec);
    std::vector<CheckReport> reports;
    try {
        reports = run_suite(suite, opt);
    } catch (const DomainError& e) {
        throw CliError{kUsage, e.what()};
    }
    bool all_passed = true;
    nlohmann::json machine = nlohmann::json::array();
    for (const CheckReport& r : reports) {
        print_report(r);
        machine.push_back(report_json(r));
        all_passed = all_passed && r.passed;
    }
    if (!out_path.empty())
        write_output(out_path, machine.dump(2) + "\n");
    std::cout << (all_passed ? "all passed" : "failures above") << " (" << reports.size()
              << " laws)\n";
    return all_passed ? kOk : kSemantic;
}

int cmd_counterexample(const std::string& name, const std::string& out_path) {
    std::string law = name;
    for (char& c : law)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    CheckReport r;
    try {
        r = run_counterexample(law);
    } catch (const DomainError& e) {
        throw CliError{kUsage, e.what()};
    }
    print_report(r);
    if (!out_path.empty())
        write_output(out_path, report_json(r).dump(2) + "\n");
    return r.passed ? kOk : kSemantic;
}

int cmd_dot(const std::string& file, const std::string& out_path) {
    write_output(out_path, to_dot(load_object(file)));
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"categories of graph-like structures: objects, functors, and law checks"};
    app.require_subcommand(1);

    std::string file, file_b, out_path, pred_name, pipeline, kind_arg, caps_spec, suite = "all",
                                                                                  name;
    bool count_only = false, exists_only = false;
    unsigned seed = 0, cases = 100;

    CLI::App* validate = app.add_subcommand("validate", "check a structure file");
    validate->add_option("file", file, "JSON structure file")->required();
    validate->add_option("--predicate", pred_name, "refinement to check as well");

    CLI::App* apply = app.add_subcommand("apply", "run a functor pipeline over an object");
    apply->add_option("pipeline", pipeline, "comma-separated functor names (empty for identity)")
        ->required();
    apply->add_option("file", file, "JSON structure file")->required();
    apply->add_option("--out", out_path, "write the result here instead of stdout");

    CLI::App* homs = app.add_subcommand("homs", "enumerate morphisms between two objects");
    homs->add_option("kind", kind_arg, "morphism kind")->required();
    homs->add_option("fileA", file, "domain object")->required();
    homs->add_option("fileB", file_b, "codomain object")->required();
    homs->add_flag("--count", count_only, "print only the count");
    homs->add_flag("--exists", exists_only, "print yes/no; exit 1 when none");
    homs->add_option("--caps", caps_spec, "size caps as V,E,I");

    CLI::App* laws = app.add_subcommand("laws", "run a law suite");
    laws->add_option("--suite", suite, "suite name (default: all)");
    laws->add_option("--seed", seed, "random seed");
    laws->add_option("--cases", cases, "cases per law");
    laws->add_option("--caps", caps_spec, "generator bounds as V,E,I");
    laws->add_option("--out", out_path, "write a JSON report here");

    CLI::App* cx = app.add_subcommand("counterexample", "reproduce a non-functoriality witness");
    cx->add_option("name", name, "counterexample name, e.g. cx-gamma")->required();
    cx->add_option("--out", out_path, "write a JSON report here");

    CLI::App* dot = app.add_subcommand("dot", "render an object as Graphviz DOT");
    dot->add_option("file", file, "JSON structure file")->required();
    dot->add_option("--out", out_path, "write the drawing here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (validate->parsed())
            return cmd_validate(file, pred_name);
        if (apply->parsed())
            return cmd_apply(pipeline, file, out_path);
        if (homs->parsed())
            return cmd_homs(kind_arg, file, file_b, count_only, exists_only, caps_spec);
        if (laws->parsed())
            return cmd_laws(suite, seed, cases, caps_spec, out_path);
        if (cx->parsed())
            return cmd_counterexample(name, out_path);
        if (dot->parsed())
            return cmd_dot(file, out_path);
    } catch (const CliError& e) {
        std::cerr << e.message << "\n";
        return e.code;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const CapError& e) {
        std::cerr << e.what() << "\n";
        return kResource;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kSemantic;
    }
    return kUsage;
}
