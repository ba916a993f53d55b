#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "condw/condw.hpp"

namespace condw::cli {

namespace {

BeliefBase load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_belief_base(buf.str());
    } catch (const ParseError& e) {
        throw Error(path + ":" + e.what());
    }
}

std::vector<std::string> unsatisfiable_warnings(const BeliefBase& base) {
    std::vector<std::string> out;
    for (auto i : base.unsatisfiable_antecedents()) {
        out.push_back("warning: conditional " + std::to_string(i + 1) + " " + base[i].to_string() +
                      " has an unsatisfiable antecedent and can never be tolerated");
    }
    return out;
}

// Throws InconsistentBaseError after reporting why, if the antecedent check explains it.
void require_consistent(const BeliefBase& base, std::ostream& err) {
    if (is_consistent(base)) return;
    for (const auto& w : unsatisfiable_warnings(base)) err << w << '\n';
    throw InconsistentBaseError();
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<Postulate> parse_checks(const std::string& text) {
    std::vector<Postulate> out;
    auto add = [&](Postulate p) {
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    };
    for (const auto& name : split_csv(text)) {
        if (name == "lemmas") {
            for (auto p : {Postulate::Lemma1, Postulate::Lemma2, Postulate::Lemma3, Postulate::Lemma4}) add(p);
        } else if (name == "all") {
            for (auto p : {Postulate::DI, Postulate::TV, Postulate::Rel, Postulate::Ind,
                           Postulate::SynSplit, Postulate::Lemma1, Postulate::Lemma2,
                           Postulate::Lemma3, Postulate::Lemma4}) {
                add(p);
            }
        } else if (auto p = parse_postulate(name)) {
            add(*p);
        } else {
            throw Error("unknown check '" + name + "'");
        }
    }
    if (out.empty()) throw Error("no checks selected");
    return out;
}

// "b,p,f/v,d"
SyntaxSplitting parse_parts(const BeliefBase& base, const std::string& text) {
    std::vector<std::vector<std::string>> parts;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, '/')) parts.push_back(split_csv(part));
    auto s = make_splitting(base, parts);
    if (!is_syntax_splitting(base, s)) throw Error("'" + text + "' is not a syntax splitting");
    return s;
}

InferenceMode mode_of(const std::string& text) {
    auto m = parse_mode(text);
    if (!m) throw Error("unknown mode '" + text + "'");
    return *m;
}

struct Options {
    std::string file;
    std::string mode = "w";
    std::string antecedent;
    std::string consequent;
    std::string checks = "di,tv,rel,ind,synsplit,lemmas";
    std::string parts;
    std::string order_format = "dot";
    std::string report_format = "text";
    std::size_t bound = 2;
    std::size_t samples = 2000;
    std::uint64_t seed = 0;
    bool conjoin_consequent = false;
    std::size_t vars = 2;
    std::size_t conds = 2;
    std::size_t cases = 100;
};

int cmd_check(const Options& o, std::ostream& out) {
    const auto base = load(o.file);
    const bool ok = is_consistent(base);
    out << (ok ? "consistent" : "inconsistent") << '\n';
    for (const auto& w : unsatisfiable_warnings(base)) out << w << '\n';
    return ok ? kYes : kNo;
}

int cmd_partition(const Options& o, std::ostream& out, std::ostream& err) {
    const auto base = load(o.file);
    require_consistent(base, err);
    const auto partition = *tolerance_partition(base);
    for (std::size_t j = 0; j < partition.layers.size(); ++j) {
        out << j << ':';
        for (std::size_t i = 0; i < partition.layers[j].size(); ++i) {
            out << (i ? ", " : " ") << base[partition.layers[j][i]].to_string();
        }
        out << '\n';
    }
    return kYes;
}

int cmd_infer(const Options& o, std::ostream& out, std::ostream& err) {
    const auto base = load(o.file);
    const auto mode = mode_of(o.mode);
    const auto a = parse_formula(o.antecedent, base.signature_ptr());
    const auto b = parse_formula(o.consequent, base.signature_ptr());
    require_consistent(base, err);
    const bool yes = infer(base, mode, {a, b});
    out << (yes ? "yes" : "no") << '\n';
    return yes ? kYes : kNo;
}

int cmd_split(const Options& o, std::ostream& out) {
    const auto base = load(o.file);
    out << format_splitting(base, detect_splitting(base));
    return kYes;
}

CheckOptions check_options(const Options& o, std::uint64_t seed) {
    CheckOptions c;
    c.exhaustive_bound = o.bound;
    c.seed = seed;
    c.samples = o.samples;
    c.conjoin_consequent = o.conjoin_consequent;
    return c;
}

void emit(const std::vector<PostulateReport>& reports, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << reports_to_json(reports) << '\n';
        return;
    }
    for (const auto& r : reports) out << format_report(r) << '\n';
}

int cmd_postulates(const Options& o, std::ostream& out, std::ostream& err) {
    const auto base = load(o.file);
    const auto mode = mode_of(o.mode);
    const auto checks = parse_checks(o.checks);
    const auto splitting = o.parts.empty() ? detect_splitting(base) : parse_parts(base, o.parts);
    require_consistent(base, err);

    std::vector<PostulateReport> reports;
    for (auto p : checks) reports.push_back(check(p, base, splitting, mode, check_options(o, o.seed)));
    emit(reports, o.report_format, out);
    const bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
    return all ? kYes : kNo;
}

int cmd_order(const Options& o, std::ostream& out, std::ostream& err) {
    const auto base = load(o.file);
    require_consistent(base, err);
    const PreferredStructure order(base);
    if (o.order_format == "tsv") {
        write_tsv(out, order);
    } else {
        write_dot(out, order);
    }
    return kYes;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
    const auto mode = mode_of(o.mode);
    const auto checks = parse_checks(o.checks);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < o.cases; ++i) {
        const std::uint64_t case_seed = o.seed + i;
        const auto generated = generate_split_base(o.vars, o.conds, case_seed);
        for (auto p : checks) {
            const auto r = check(p, generated.base, generated.splitting, mode, check_options(o, case_seed));
            if (!r.passed) {
                ++failures;
                out << "case " << i << " seed=" << case_seed << " failed: " << format_report(r) << '\n';
                break;
            }
        }
    }
    out << "cases=" << o.cases << " failures=" << failures << '\n';
    return failures == 0 ? kYes : kNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reasoning with conditional belief bases: system W, system Z and p-entailment", "condw"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> modes{"w", "z", "p"};
    auto* check = app.add_subcommand("check", "Test a belief base for consistency");
    check->add_option("file", o.file, "Belief-base file")->required();

    auto* partition = app.add_subcommand("partition", "Print the tolerance partition, one layer per line");
    partition->add_option("file", o.file, "Belief-base file")->required();

    auto* inf = app.add_subcommand("infer", "Decide whether A |~ B");
    inf->add_option("file", o.file, "Belief-base file")->required();
    inf->add_option("antecedent", o.antecedent, "Formula A")->required();
    inf->add_option("consequent", o.consequent, "Formula B")->required();
    inf->add_option("--mode,-m", o.mode, "Inference operator")->check(CLI::IsMember(modes));

    auto* split = app.add_subcommand("split", "Print the finest syntax splitting");
    split->add_option("file", o.file, "Belief-base file")->required();

    auto* post = app.add_subcommand("postulates", "Check inference postulates and lemmas on a base");
    post->add_option("file", o.file, "Belief-base file")->required();
    post->add_option("--mode,-m", o.mode, "Inference operator")->check(CLI::IsMember(modes));
    post->add_option("--bound", o.bound, "Largest part size enumerated exhaustively");
    post->add_option("--seed", o.seed, "Sampling seed");
    post->add_option("--samples", o.samples, "Sampled instances per part when not exhaustive");
    post->add_option("--checks", o.checks, "Comma list of di,tv,rel,ind,synsplit,lemma1..4,lemmas,all");
    post->add_option("--parts", o.parts, "Splitting to use instead of the finest, e.g. b,p,f/v,d");
    post->add_option("--format", o.report_format, "Report format")->check(CLI::IsMember({"text", "json"}));
    post->add_flag("--conjoin-consequent", o.conjoin_consequent, "Check (Ind) as AD |~ BD");

    auto* order = app.add_subcommand("order", "Export the preferred structure on worlds");
    order->add_option("file", o.file, "Belief-base file")->required();
    order->add_option("--format", o.order_format, "Output format")->check(CLI::IsMember({"dot", "tsv"}));

    auto* fuzz = app.add_subcommand("fuzz", "Run checks on generated split belief bases");
    fuzz->add_option("--vars", o.vars, "Atoms per part");
    fuzz->add_option("--conds", o.conds, "Conditionals per part");
    fuzz->add_option("--cases", o.cases, "Number of generated bases");
    fuzz->add_option("--seed", o.seed, "Seed of the first case; case i uses seed+i");
    fuzz->add_option("--mode,-m", o.mode, "Inference operator")->check(CLI::IsMember(modes));
    fuzz->add_option("--checks", o.checks, "Comma list of checks");
    fuzz->add_option("--bound", o.bound, "Largest part size enumerated exhaustively");
    fuzz->add_option("--samples", o.samples, "Sampled instances per part when not exhaustive");
    fuzz->add_flag("--conjoin-consequent", o.conjoin_consequent, "Check (Ind) as AD |~ BD");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kYes;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kFault;
    }

    try {
        if (*check) return cmd_check(o, out);
        if (*partition) return cmd_partition(o, out, err);
        if (*inf) return cmd_infer(o, out, err);
        if (*split) return cmd_split(o, out);
        if (*post) return cmd_postulates(o, out, err);
        if (*order) return cmd_order(o, out, err);
        if (*fuzz) return cmd_fuzz(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFault;
    }
    return kFault;
}

}  // namespace condw::cli
