// wbar-workbench: counts, verifications and homology from the command line.
//
// Exit codes: 0 pass, 1 verification failure, 2 input error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <boost/program_options.hpp>
#include <nlohmann/json.hpp>

#include "wbar/bisimplicial.hpp"
#include "wbar/bundle.hpp"
#include "wbar/errors.hpp"
#include "wbar/homology.hpp"
#include "wbar/loop_group.hpp"
#include "wbar/wbar.hpp"

namespace po = boost::program_options;
using nlohmann::json;
using namespace wbar;

namespace {

struct JobSpec {
    std::string command;
    std::string group = "builtin:Z2";
    std::string tau = "free";
    std::string target;
    std::string construction = "wbar";
    std::string input;
    std::string out;
    std::string format = "json";
    int trunc = 3;
    int kmax = 3;
    int imax = -1;
    int k = 3;
    int chain_cap = 3;
    int ordinal_cap = 2;
    std::uint64_t seed = 0;
};

struct Output {
    json report;
    std::string csv;
    bool passed = true;
};

constexpr const char* kUsage =
    "usage: wbar-workbench <command> [options]\n"
    "commands:\n"
    "  counts    sizes of W-bar(tau, G) in degrees 0..kmax\n"
    "  verify    --target epsilon|cr|bk|tonks|zigzag|bundle-roundtrip|cocycle\n"
    "  homology  --construction wbar|wbar_tau|diagonal|total|w_total\n";

std::shared_ptr<const FiniteGroup> load_group(const std::string& source) {
    if (source.rfind("builtin:", 0) == 0)
        return std::make_shared<const FiniteGroup>(FiniteGroup::builtin(source.substr(8)));
    std::ifstream in(source);
    if (!in) throw InvalidInput("cannot open group file " + source);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InvalidInput("group file " + source + ": " + e.what());
    }
    return std::make_shared<const FiniteGroup>(FiniteGroup::from_json(j));
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string verdict_csv(const std::vector<Verdict>& vs) {
    std::ostringstream os;
    os << "map,degrees_checked,checked,status,counterexample\n";
    for (const auto& v : vs)
        os << csv_escape(v.map) << "," << v.max_degree << "," << v.checked << "," << (v.passed ? "pass" : "fail")
           << "," << csv_escape(v.counterexample.value_or("")) << "\n";
    return os.str();
}

std::string torsion_str(const HomologyGroup& H) {
    std::string out;
    for (std::size_t t = 0; t < H.torsion.size(); ++t) out += (t ? " " : "") + H.torsion[t].str();
    return out;
}

Output run_counts(const JobSpec& job) {
    const auto G = load_group(job.group);
    const DiscreteSimplicialGroup K(G);
    const auto tau = TauDescriptor::parse(job.tau);
    const auto counts = wbar_counts(K, tau, job.kmax);
    Output out;
    out.report = {{"command", "counts"}, {"group", G->name()}, {"tau", tau.str()}, {"counts", counts}};
    std::ostringstream os;
    os << "k,count\n";
    for (std::size_t k = 0; k < counts.size(); ++k) os << k << "," << counts[k] << "\n";
    out.csv = os.str();
    return out;
}

template <SimplicialModel M>
std::vector<HomologyGroup> homology_of(const M& model, int N, int imax) {
    return model_homology(model, N, imax);
}

Output run_homology(const JobSpec& job) {
    const int imax = job.imax < 0 ? job.trunc - 1 : job.imax;
    if (imax > job.trunc - 1)
        throw InsufficientTruncation("imax " + std::to_string(imax) + " needs truncation at least " +
                                     std::to_string(imax + 1));
    const auto G = load_group(job.group);
    const DiscreteSimplicialGroup K(G);
    const auto tau = TauDescriptor::parse(job.tau);
    std::vector<HomologyGroup> H;
    const std::string& c = job.construction;
    if (c == "wbar") {
        H = homology_of(Wbar(K), job.trunc, imax);
    } else if (c == "wbar_tau") {
        H = homology_of(Wbar(K, tau), job.trunc, imax);
    } else if (c == "diagonal") {
        const GroupNerve N(K, tau);
        H = homology_of(Diagonal<GroupNerve>(N), job.trunc, imax);
    } else if (c == "total") {
        const GroupNerve N(K, tau);
        H = homology_of(Total<GroupNerve>(N), job.trunc, imax);
    } else if (c == "w_total") {
        H = homology_of(WTotal(K), job.trunc, imax);
    } else {
        throw InvalidInput("unknown construction " + c);
    }
    Output out;
    out.report = {{"command", "homology"},
                  {"construction", c},
                  {"group", G->name()},
                  {"tau", tau.str()},
                  {"truncation", job.trunc},
                  {"homology", homology_report(H, job.trunc)}};
    std::ostringstream os;
    os << "degree,betti,torsion\n";
    for (std::size_t i = 0; i < H.size(); ++i) os << i << "," << H[i].betti << "," << torsion_str(H[i]) << "\n";
    out.csv = os.str();
    return out;
}

BundleData bundle_input(const JobSpec& job, json* raw) {
    if (!job.input.empty()) {
        *raw = read_json(job.input);
        return bundle_from_json(*raw);
    }
    const auto G = load_group(job.group);
    auto K = std::make_shared<const DiscreteSimplicialGroup>(G);
    auto data = random_classified_base(*K, std::min(job.trunc, 3), job.seed);
    return {K, std::move(data.base), std::move(data.r)};
}

// Overrides: [{"simplex": [cell_degree, cell, [degeneracy]], "theta": [values], "value": g}].
void apply_overrides(const json& raw, const TruncatedComplex& B, TransitionAssignment& alpha) {
    if (!raw.contains("transition_overrides")) return;
    try {
        for (const auto& o : raw.at("transition_overrides")) {
            const auto& s = o.at("simplex");
            const int d = s.at(0).get<int>();
            const SimplexRef b{OrdinalMap(s.at(2).get<std::vector<int>>(), d + 1), s.at(1).get<std::size_t>()};
            if (b.cell >= B.cell_count(d)) throw InvalidInput("override refers to a missing cell");
            const OrdinalMap theta(o.at("theta").get<std::vector<int>>(), b.degree() + 1);
            if (!alpha.contains(b, theta)) throw InvalidInput("override outside the assignment");
            alpha.set(b, theta, o.at("value").get<Element>());
        }
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("transition_overrides: ") + e.what());
    }
}

Output run_verify(const JobSpec& job) {
    std::vector<Verdict> verdicts;
    json params = {{"truncation", job.trunc}, {"chain_cap", job.chain_cap}, {"ordinal_cap", job.ordinal_cap}};
    json extra = json::object();
    const std::string& t = job.target;

    if (t == "epsilon") {
        params = {{"k", job.k}, {"n", job.trunc}};
        verdicts.push_back(Epsilon(job.k, job.trunc).verify());
    } else if (t == "cr" || t == "bk" || t == "tonks" || t == "zigzag") {
        const auto G = load_group(job.group);
        const DiscreteSimplicialGroup K(G);
        const auto tau = TauDescriptor::parse(job.tau);
        params["group"] = G->name();
        params["tau"] = tau.str();
        const GroupNerve N(K, tau);
        if (t == "cr") {
            verdicts.push_back(verify_cr(N, job.trunc, "CR on N"));
            // Both sides materialized through trunc; compare H_0 .. H_{trunc-1}.
            const auto Hd = model_homology(Diagonal<GroupNerve>(N), job.trunc, job.trunc - 1);
            const auto Ht = model_homology(Total<GroupNerve>(N), job.trunc, job.trunc - 1);
            Verdict agree;
            agree.map = "homology agreement";
            agree.max_degree = job.trunc - 1;
            json table = json::array();
            for (std::size_t i = 0; i < Hd.size(); ++i) {
                ++agree.checked;
                table.push_back({{"degree", i}, {"diagonal", Hd[i].str()}, {"total", Ht[i].str()},
                                 {"agree", Hd[i] == Ht[i]}});
                if (Hd[i] != Ht[i]) agree.fail("H_" + std::to_string(i) + ": " + Hd[i].str() + " vs " + Ht[i].str());
            }
            verdicts.push_back(agree);
            extra["homology_agreement"] = table;
        } else if (t == "bk") {
            const Psi<GroupNerve> psi(N, job.ordinal_cap);
            verdicts.push_back(verify_bk(psi, job.trunc, "BK"));
        } else if (t == "tonks") {
            const Tonks tonks(K, job.ordinal_cap, tau);
            verdicts.push_back(tonks.verify(job.trunc));
        } else {
            verdicts.push_back(verify_zigzag(K, tau, job.ordinal_cap, job.trunc));
        }
    } else if (t == "bundle-roundtrip" || t == "cocycle") {
        json raw;
        params = {{"seed", job.seed}, {"input", job.input.empty() ? "random" : "file"}};
        try {
            const auto data = bundle_input(job, &raw);
            const auto E = data.make();
            params["cells"] = E.base().cell_counts();
            if (t == "bundle-roundtrip") {
                verdicts.push_back(verify_bundle(E, E.dim()));
                verdicts.push_back(verify_roundtrip(E));
            } else {
                auto alpha = transition_elements(E, canonical_pseudo_section(E));
                apply_overrides(raw, E.base(), alpha);
                verdicts.push_back(transition_functor_check(alpha));
            }
        } catch (const NotSimplicial& e) {
            Verdict v;
            v.map = "classifying map";
            v.fail(e.what());
            verdicts.push_back(v);
        }
    } else {
        throw InvalidInput("unknown verify target '" + t + "'");
    }

    Output out;
    json vs = json::array();
    for (const auto& v : verdicts) {
        vs.push_back(to_json(v));
        out.passed = out.passed && v.passed;
    }
    out.report = {{"command", "verify"}, {"target", t}, {"params", params}, {"verdicts", vs},
                  {"status", out.passed ? "pass" : "fail"}};
    for (auto& [key, value] : extra.items()) out.report[key] = value;
    out.csv = verdict_csv(verdicts);
    return out;
}

void emit(const JobSpec& job, const std::string& text) {
    if (job.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(job.out);
    if (!f) throw InvalidInput("cannot write " + job.out);
    f << text;
}

int fail_with(const JobSpec& job, int code, const std::string& kind, const std::string& message) {
    std::cerr << "wbar-workbench: " << message << "\n";
    if (job.format == "json") {
        const json j = {{"command", job.command}, {"status", "error"}, {"error", kind}, {"message", message}};
        std::cout << j.dump(2) << "\n";
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    JobSpec job;
    po::options_description opts("options");
    opts.add_options()
        ("help,h", "show usage")
        ("command", po::value(&job.command), "counts | verify | homology")
        ("group", po::value(&job.group), "FILE or builtin:NAME")
        ("tau", po::value(&job.tau), "free | gamma:q | gammap:p,q | abmodpk:p,k")
        ("target", po::value(&job.target), "verification target")
        ("construction", po::value(&job.construction), "homology construction")
        ("input", po::value(&job.input), "bundle JSON")
        ("trunc", po::value(&job.trunc), "truncation degree N")
        ("kmax", po::value(&job.kmax), "largest degree for counts")
        ("imax", po::value(&job.imax), "largest homology degree (default trunc - 1)")
        ("k", po::value(&job.k), "simplex dimension for epsilon")
        ("chain-cap", po::value(&job.chain_cap), "chain length cap L")
        ("ordinal-cap", po::value(&job.ordinal_cap), "ordinal cap M")
        ("seed", po::value(&job.seed), "random seed")
        ("out", po::value(&job.out), "write the report here")
        ("format", po::value(&job.format), "json | csv");
    po::positional_options_description pos;
    pos.add("command", 1);

    try {
        po::variables_map vm;
        po::store(po::command_line_parser(argc, argv).options(opts).positional(pos).run(), vm);
        po::notify(vm);
        if (vm.count("help") || job.command.empty()) {
            std::cout << kUsage << opts;
            return job.command.empty() && !vm.count("help") ? 2 : 0;
        }
    } catch (const po::error& e) {
        std::cerr << "wbar-workbench: " << e.what() << "\n" << kUsage;
        return 2;
    }

    try {
        if (job.format != "json" && job.format != "csv") throw InvalidInput("format must be json or csv");
        if (job.trunc < 0 || job.kmax < 0 || job.k < 0) throw InvalidInput("degrees must be nonnegative");
        if (job.chain_cap < 1 || job.ordinal_cap < 1) throw InvalidInput("caps must be positive");

        Output out;
        if (job.command == "counts") out = run_counts(job);
        else if (job.command == "verify") out = run_verify(job);
        else if (job.command == "homology") out = run_homology(job);
        else throw InvalidInput("unknown command '" + job.command + "'");

        emit(job, job.format == "json" ? out.report.dump(2) + "\n" : out.csv);
        return out.passed ? 0 : 1;
    } catch (const BudgetExceeded& e) {
        return fail_with(job, 3, "budget", e.what());
    } catch (const VerificationFailure& e) {
        return fail_with(job, 1, "verification", e.what());
    } catch (const Error& e) {
        return fail_with(job, 2, "input", e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail_with(job, 2, "input", e.what());
    }
}
