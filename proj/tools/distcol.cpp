#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "distcol/certificates.hpp"

namespace fs = std::filesystem;
using namespace distcol;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // negative verdict or verification failure
constexpr int kExitInput = 2;    // unreadable or malformed input

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_file(path);
    if (format == "edgelist") return parse_edge_list(text);
    return parse_graph6(trim(text));
}

json load_json_arg(const std::string& arg) {
    std::string text = !arg.empty() && (arg[0] == '[' || arg[0] == '{') ? arg : read_file(arg);
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
}

void write_output(const std::string& out_path, const json& doc) {
    if (out_path.empty()) return;
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + out_path);
    out << doc.dump(2) << '\n';
}

Mode make_mode(const std::string& target, bool proper) {
    Mode mode;
    mode.target = target == "edge" ? Target::edge : Target::vertex;
    mode.properness = proper ? Properness::proper : Properness::plain;
    return mode;
}

OraclePolicy parse_oracle(const std::string& s) {
    if (s == "on") return OraclePolicy::on;
    if (s == "off") return OraclePolicy::off;
    return OraclePolicy::auto_;
}

Variant parse_variant(const std::string& s) {
    if (s == "d") return Variant::d;
    if (s == "dc") return Variant::dc;
    if (s == "di") return Variant::di;
    if (s == "dci") return Variant::dci;
    throw ParseError("unknown variant \"" + s + "\"");
}

int run_check(const std::string& input, const std::string& format, const std::string& target,
              bool proper, const std::string& colours_arg, const std::string& out,
              const std::string& oracle) {
    Graph g = load_graph(input, format);
    Mode mode = make_mode(target, proper);
    std::vector<Colour> colours;
    if (!(mode.target == Target::edge && edge_colouring_obstruction(g)))
        colours = colours_from_json(g, mode, load_json_arg(colours_arg));
    json cert = certify_check(g, mode, colours, parse_oracle(oracle));
    write_output(out, cert);
    if (cert.at("kind") == "impossible") {
        std::cout << "impossible: " << cert.at("obstruction").at("kind").get<std::string>() << '\n';
        return kExitFailure;
    }
    bool verdict = cert.at("verdict").get<bool>();
    std::cout << to_string(mode) << (verdict ? ": suitable" : ": not suitable") << '\n';
    if (!verdict && cert.at("evidence").contains("witness"))
        std::cout << "witness: " << cert.at("evidence").at("witness").dump() << '\n';
    if (!verdict && cert.at("evidence").contains("improper"))
        std::cout << "improper at: " << cert.at("evidence").at("improper").dump() << '\n';
    return verdict ? kExitOk : kExitFailure;
}

int run_reduce(const std::string& input, const std::string& format, const std::string& target,
               bool proper, const std::string& colours_arg, const std::string& out) {
    Graph g = load_graph(input, format);
    Mode mode = make_mode(target, proper);
    std::vector<Colour> colours = colours_from_json(g, mode, load_json_arg(colours_arg));
    json cert = certify_reduce(g, mode, colours);
    write_output(out, cert);
    const json& trace = cert.at("trace");
    std::cout << "steps: " << trace.at("steps").size() << '\n';
    std::cout << "final: " << trace.at("final").dump() << '\n';
    std::cout << "irreducible: true\n";
    return kExitOk;
}

int run_number(const std::string& input, const std::string& format, const std::string& variant,
               int cutoff, const std::string& out, const std::string& oracle) {
    Graph g = load_graph(input, format);
    SearchOptions opts;
    opts.cutoff = cutoff;
    json cert = certify_number(g, parse_variant(variant), opts, parse_oracle(oracle));
    write_output(out, cert);
    if (cert.at("value").is_null()) {
        std::cout << variant << ": impossible ("
                  << cert.at("obstruction").at("kind").get<std::string>() << ")\n";
    } else {
        std::cout << variant << ": " << cert.at("value").get<int>() << '\n';
        std::cout << "witness: " << cert.at("witness").dump() << '\n';
    }
    return kExitOk;
}

int run_ds_build(int m, int n, bool clique, const std::string& out) {
    DoubleStarSpec spec(m, n);
    Graph g = clique ? gen_double_clique(spec) : gen_double_star(spec);
    std::cout << emit_graph6(g) << '\n';
    write_output(out, graph_to_json(g));
    return kExitOk;
}

InjectionWitness parse_injection(const std::string& text, int size) {
    if (text.empty()) return InjectionWitness::identity(size);
    InjectionWitness w;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ','))
        w.mapping.push_back(std::stoi(trim(tok)));
    return w;
}

int run_ds_construct(int m, int n, const std::string& injection, const std::string& out) {
    DoubleStarSpec spec(m, n);
    InjectionWitness f = parse_injection(injection, std::min(m, n));
    LemmaColouring lc = construct_from_injection(spec, f);
    json cert = certify_lemma_witness(lc);
    write_output(out, cert);
    std::cout << "condition a, colours: " << used_colours(lc.payload).size() << '\n';
    std::cout << cert.at("payload").dump() << '\n';
    return kExitOk;
}

int run_ds_transform(const std::string& to, const std::string& colouring_arg,
                     const std::string& out) {
    LemmaColouring input = lemma_colouring_from_json(load_json_arg(colouring_arg));
    LemmaColouring result = [&] {
        char from = static_cast<char>('a' + static_cast<int>(input.condition));
        std::string route = std::string(1, from) + to;
        if (route == "ab") return transform_a_to_b(input);
        if (route == "ba") return transform_b_to_a(input);
        if (route == "ac") return transform_a_to_c(input);
        if (route == "ca") return transform_c_to_a(input);
        if (route == "cd") return transform_c_to_d(input);
        if (route == "dc") return transform_d_to_c(input);
        throw ParseError("no transformation from condition " + std::string(1, from) + " to " + to);
    }();
    json cert = certify_lemma_witness(result);
    write_output(out, cert);
    std::cout << "condition " << to << ", colours: " << used_colours(result.payload).size() << '\n';
    std::cout << cert.at("payload").dump() << '\n';
    return kExitOk;
}

int run_ds_verify(int m, int n, const std::string& out) {
    LemmaReport report = verify_lemma_equivalence(DoubleStarSpec(m, n));
    json cert = lemma_report_to_json(report);
    write_output(out, cert);
    for (int i = 0; i < 4; ++i)
        std::cout << "condition " << static_cast<char>('a' + i) << ": witnessed, colours "
                  << report.conditions[i].colours_used << '\n';
    std::cout << "oracle checked: " << (report.oracle_checked ? "yes" : "no") << '\n';
    return kExitOk;
}

int run_batch(const std::string& dir, const std::string& format,
              const std::vector<std::string>& variants, int cutoff, const std::string& oracle,
              const std::string& out) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());

    json rows = json::array();
    json errors = json::array();
    for (const std::string& file : files) {
        std::string name = fs::path(file).filename().string();
        try {
            Graph g = load_graph(file, format);
            json row{{"file", name}, {"n", g.vertex_count()}, {"edges", g.edge_count()}};
            if (g.vertex_count() <= 8)
                row["aut_order"] = all_automorphisms_bruteforce(g).size();
            else
                row["aut_order"] = nullptr;
            json results = json::object();
            for (const std::string& v : variants) {
                SearchOptions opts;
                opts.cutoff = cutoff;
                json cert = certify_number(g, parse_variant(v), opts, parse_oracle(oracle));
                results[v] = cert.at("value");
            }
            row["results"] = std::move(results);
            rows.push_back(std::move(row));
        } catch (const Error& e) {
            errors.push_back({{"file", name}, {"error", e.what()}});
        }
    }
    json doc{{"kind", "batch"}, {"rows", rows}, {"errors", errors}};
    write_output(out, doc);

    std::cout << "file\tn\tedges\taut";
    for (const std::string& v : variants) std::cout << '\t' << v;
    std::cout << '\n';
    for (const json& row : rows) {
        std::cout << row.at("file").get<std::string>() << '\t' << row.at("n") << '\t'
                  << row.at("edges") << '\t';
        if (row.at("aut_order").is_null())
            std::cout << '-';
        else
            std::cout << row.at("aut_order");
        for (const std::string& v : variants) {
            const json& val = row.at("results").at(v);
            std::cout << '\t';
            if (val.is_null())
                std::cout << "impossible";
            else
                std::cout << val;
        }
        std::cout << '\n';
    }
    for (const json& err : errors)
        std::cerr << err.at("file").get<std::string>() << ": " << err.at("error").get<std::string>()
                  << '\n';
    return errors.empty() ? kExitOk : kExitInput;
}

int run_recheck(const std::string& input) {
    json cert = load_json_arg(input);
    bool ok = recheck_certificate(cert);
    std::cout << (ok ? "recheck: ok" : "recheck: FAILED") << '\n';
    return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distinguishing colourings: checks, reductions, exact minima, double stars"};
    app.require_subcommand(1);

    std::string input, format = "graph6", target = "vertex", colours, out, oracle = "auto";
    std::string variant = "d", injection, transform_to;
    bool proper = false, clique = false;
    int cutoff = 10, m = 1, n = 1;
    std::vector<std::string> variants;

    auto* check = app.add_subcommand("check", "verify one colouring");
    check->add_option("--input", input)->required();
    check->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));
    check->add_option("--mode", target)->check(CLI::IsMember({"vertex", "edge"}));
    check->add_flag("--proper", proper);
    check->add_option("--colours", colours)->required();
    check->add_option("--out", out);
    check->add_option("--oracle", oracle)->check(CLI::IsMember({"on", "off", "auto"}));

    auto* reduce = app.add_subcommand("reduce", "merge colours until irreducible");
    reduce->add_option("--input", input)->required();
    reduce->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));
    reduce->add_option("--mode", target)->check(CLI::IsMember({"vertex", "edge"}));
    reduce->add_flag("--proper", proper);
    reduce->add_option("--colours", colours)->required();
    reduce->add_option("--out", out);

    auto* number = app.add_subcommand("number", "exact minimal colour count");
    number->add_option("--input", input)->required();
    number->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));
    number->add_option("--variant", variant)->check(CLI::IsMember({"d", "dc", "di", "dci"}));
    number->add_option("--cutoff", cutoff);
    number->add_option("--out", out);
    number->add_option("--oracle", oracle)->check(CLI::IsMember({"on", "off", "auto"}));

    auto* ds = app.add_subcommand("ds", "double star and double clique tooling");
    ds->require_subcommand(1);
    auto* ds_build = ds->add_subcommand("build", "emit the graph");
    ds_build->add_option("m", m)->required();
    ds_build->add_option("n", n)->required();
    ds_build->add_flag("--clique", clique);
    ds_build->add_option("--out", out);
    auto* ds_construct = ds->add_subcommand("construct", "condition-a colouring from an injection");
    ds_construct->add_option("m", m)->required();
    ds_construct->add_option("n", n)->required();
    ds_construct->add_option("--injection", injection, "comma-separated images of the smaller side");
    ds_construct->add_option("--out", out);
    auto* ds_transform = ds->add_subcommand("transform", "convert between the four colourings");
    ds_transform->add_option("--to", transform_to)->required()->check(CLI::IsMember({"a", "b", "c", "d"}));
    ds_transform->add_option("--colouring", colours)->required();
    ds_transform->add_option("--out", out);
    auto* ds_verify = ds->add_subcommand("verify-lemma", "witness all four colourings");
    ds_verify->add_option("m", m)->required();
    ds_verify->add_option("n", n)->required();
    ds_verify->add_option("--out", out);

    auto* batch = app.add_subcommand("batch", "summarize a directory of graphs");
    batch->add_option("--input", input)->required();
    batch->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));
    batch->add_option("--variant", variants)->check(CLI::IsMember({"d", "dc", "di", "dci"}));
    batch->add_option("--cutoff", cutoff);
    batch->add_option("--oracle", oracle)->check(CLI::IsMember({"on", "off", "auto"}));
    batch->add_option("--out", out);

    auto* recheck = app.add_subcommand("recheck", "re-validate a certificate");
    recheck->add_option("--input", input)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return run_check(input, format, target, proper, colours, out, oracle);
        if (*reduce) return run_reduce(input, format, target, proper, colours, out);
        if (*number) return run_number(input, format, variant, cutoff, out, oracle);
        if (*ds) {
            if (*ds_build) return run_ds_build(m, n, clique, out);
            if (*ds_construct) return run_ds_construct(m, n, injection, out);
            if (*ds_transform) return run_ds_transform(transform_to, colours, out);
            if (*ds_verify) return run_ds_verify(m, n, out);
        }
        if (*batch) return run_batch(input, format, variants, cutoff, oracle, out);
        if (*recheck) return run_recheck(input);
    } catch (const VerificationFailedError& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kExitFailure;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const NotSuitableInputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
