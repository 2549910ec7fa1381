// ihs: command-line front end for the ihspace library.
//
// Exit codes: 0 success (including underdetermined sequences), 1 input
// error, 2 inconsistent exact sequence, 3 chain-model verification mismatch.

#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ihspace/catalog.hpp"
#include "ihspace/chain_complex.hpp"
#include "ihspace/errors.hpp"
#include "ihspace/exact_sequence.hpp"
#include "ihspace/io.hpp"
#include "ihspace/perversity.hpp"
#include "ihspace/stratified.hpp"

namespace {

using namespace ihs;
using nlohmann::ordered_json;

constexpr int kInputError = 1;
constexpr int kInconsistent = 2;
constexpr int kMismatch = 3;

struct Options
{
    std::string input;
    std::string perversity = "m";
    bool extended = false;
    std::string theory = "both";
    bool verify = false;
    std::string format = "table";
    bool dense = false;
    bool sweep = false;
    bool simply_connected = false;
};

/// A link read from either a facet file or a Betti table.
struct LoadedLink
{
    LinkSpec spec;
    std::optional<SimplicialComplex> complex;
};

bool looks_like_json(const std::string& path, const std::string& text)
{
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        return true;
    const auto first = text.find_first_not_of(" \t\r\n");
    return first != std::string::npos && text[first] == '{';
}

LoadedLink load_link(const Options& opt)
{
    const std::string text = read_text_file(opt.input);
    if (looks_like_json(opt.input, text))
    {
        BettiTableDocument doc = parse_betti_table(text);
        if (!doc.reduced)
        {
            if (doc.betti[0] == 0)
                throw ParseError("unreduced table has rank 0 in degree 0");
            doc.betti.set(0, doc.betti[0] - 1);
        }
        return {LinkSpec::from_betti(doc.betti, doc.dim, opt.simply_connected), std::nullopt};
    }
    std::istringstream in(text);
    const SimplicialComplex k = SimplicialComplex::from_facets(parse_facets(in));
    return {LinkSpec::from_complex(k, opt.simply_connected), k};
}

void print_table(std::ostream& out, const GradedBetti& b, int dim, bool dense)
{
    if (dense)
    {
        for (int d = b.is_zero() ? 0 : std::min(0, b.min_supported()); d <= dim; ++d)
            out << d << ": " << b[d] << '\n';
        return;
    }
    if (b.is_zero())
        out << "(zero)\n";
    for (const auto& [degree, rank] : b.ranks())
        out << degree << ": " << rank << '\n';
}

ordered_json table_json(const GradedBetti& b, int dim)
{
    // Round-trip through the document serializer so key order stays numeric.
    return ordered_json::parse(to_json(BettiTableDocument{dim, true, b}));
}

std::string join_degrees(const std::set<int>& degrees)
{
    if (degrees.empty())
        return " (none)";
    std::string out;
    for (int d : degrees)
        out += " " + std::to_string(d);
    return out;
}

/// One (link, perversity) evaluation of the cone or suspension command.
struct SpaceRun
{
    std::string perversity;
    int cutoff = 0;
    std::optional<GradedBetti> ih;
    std::optional<GradedBetti> hi;
    std::set<int> differing;
    std::optional<GradedBetti> chain_model;
    bool mismatch = false;
};

SpaceRun run_space(const LoadedLink& link, Construction construction, const Perversity& p, const Options& opt)
{
    SpaceRun run;
    run.perversity = p.label();
    const int l = link.spec.dimension();
    run.cutoff = cutoff_degree(l, p);
    if (construction == Construction::cone)
    {
        const TheoryComparison cmp = compare_theories(ConeSpaceSpec{link.spec}, p);
        if (opt.theory != "hi")
            run.ih = cmp.ih;
        if (opt.theory != "ih")
            run.hi = cmp.hi;
        if (opt.theory == "both")
            run.differing = cmp.differing;
        if (opt.verify)
            run.chain_model = hi_cone_chain_model(*link.complex, p);
        if (run.chain_model)
            run.mismatch = !(*run.chain_model == cmp.hi);
    }
    else
    {
        run.hi = hi_suspension(SuspensionSpaceSpec{link.spec}, p);
        if (opt.verify)
            run.chain_model = hi_suspension_chain_model(*link.complex, p);
        if (run.chain_model)
            run.mismatch = !(*run.chain_model == *run.hi);
    }
    return run;
}

void render_run(std::ostream& out, const SpaceRun& run, int dim, const Options& opt)
{
    if (opt.format == "json")
    {
        ordered_json j;
        j["perversity"] = run.perversity;
        j["cutoff"] = run.cutoff;
        if (run.ih)
            j["ih"] = table_json(*run.ih, dim);
        if (run.hi)
            j["hi"] = table_json(*run.hi, dim);
        if (run.ih && run.hi)
        {
            j["differ"] = ordered_json::array();
            for (int d : run.differing)
                j["differ"].push_back(d);
        }
        if (run.chain_model)
            j["verify"] = run.mismatch ? "MISMATCH" : "MATCH";
        out << j.dump() << '\n';
        return;
    }
    out << "perversity: " << run.perversity << ", cutoff k = " << run.cutoff << '\n';
    if (run.ih)
    {
        out << "IH:\n";
        print_table(out, *run.ih, dim, opt.dense);
    }
    if (run.hi)
    {
        out << "HI:\n";
        print_table(out, *run.hi, dim, opt.dense);
    }
    if (run.ih && run.hi)
        out << "differ:" << join_degrees(run.differing) << '\n';
    if (run.chain_model)
    {
        if (run.mismatch)
        {
            out << "verify: MISMATCH\nchain model HI:\n";
            print_table(out, *run.chain_model, dim, opt.dense);
        }
        else
            out << "verify: MATCH\n";
    }
}

int cmd_space(const Options& opt, Construction construction)
{
    if (opt.theory != "ih" && opt.theory != "hi" && opt.theory != "both")
        throw std::invalid_argument("--theory must be ih, hi or both");
    const LoadedLink link = load_link(opt);
    if (opt.verify && !link.complex)
        throw std::invalid_argument("--verify needs a facet file (the chain model is built from the complex)");
    const int l = link.spec.dimension();

    std::vector<Perversity> perversities;
    if (opt.sweep)
        perversities = sweep_perversities(l);
    else
        perversities.push_back(parse_perversity(opt.perversity, opt.extended, l + 1));

    // Independent evaluations; results are collected in sweep order.
    std::vector<std::future<SpaceRun>> pending;
    for (const auto& p : perversities)
        pending.push_back(std::async(opt.sweep ? std::launch::async : std::launch::deferred,
                                     [&link, construction, p, &opt] { return run_space(link, construction, p, opt); }));

    std::ostringstream out;
    if (opt.format == "table")
        for (const auto& note : link.spec.hypothesis_notes())
            out << "note: " << note << '\n';
    bool mismatch = false;
    for (std::size_t i = 0; i < pending.size(); ++i)
    {
        const SpaceRun run = pending[i].get();
        if (opt.format == "table" && i > 0)
            out << '\n';
        render_run(out, run, l + 1, opt);
        mismatch = mismatch || run.mismatch;
    }
    std::cout << out.str();
    return mismatch ? kMismatch : 0;
}

int cmd_homology(const Options& opt)
{
    const SimplicialComplex k = SimplicialComplex::from_facets(read_facet_file(opt.input));
    const GradedBetti b = betti(chain_complex(k, true));
    if (opt.format == "json")
    {
        if (k.dimension() < 0)
            std::cerr << "empty complex: reduced homology is rank 1 in degree -1, which a table cannot hold\n";
        std::cout << to_json(BettiTableDocument{k.dimension(), true, b}) << '\n';
        return 0;
    }
    if (k.dimension() < 0)
    {
        std::cout << "empty complex: no vertices\n-1: 1\n";
        std::cout << "euler characteristic (reduced): " << b.euler_characteristic() << '\n';
        return 0;
    }
    std::cout << "vertices: " << k.count(0) << ", simplices: " << k.size() << ", dimension: " << k.dimension()
              << '\n';
    print_table(std::cout, b, k.dimension(), opt.dense);
    std::cout << "euler characteristic (reduced): " << b.euler_characteristic() << '\n';
    return 0;
}

int cmd_example(const std::string& name, const Options& opt)
{
    const Catalog& catalog = Catalog::builtin();
    const CatalogEntry& entry = catalog.get(name);
    const auto* composite = std::get_if<CompositeModel>(&entry.model);
    if (!composite)
        throw std::invalid_argument("'" + name + "' is a link, not a singular space; try a cone or suspension entry");
    const int l = catalog.link_spec(composite->link).dimension();
    const ExampleReport report = catalog.run_example(name, parse_perversity(opt.perversity, opt.extended, l + 1));
    if (opt.format == "json")
    {
        ordered_json j;
        j["example"] = report.name;
        j["construction"] = report.construction == Construction::cone ? "cone" : "suspension";
        j["link"] = report.link;
        j["perversity"] = report.perversity;
        j["cutoff"] = report.cutoff;
        if (report.ih)
            j["ih"] = table_json(*report.ih, l + 1);
        j["hi"] = table_json(report.hi, l + 1);
        if (report.ordinary)
            j["ordinary"] = table_json(*report.ordinary, l + 1);
        j["differ"] = ordered_json::array();
        for (int d : report.differing)
            j["differ"].push_back(d);
        j["provenance"] = report.provenance;
        j["notes"] = report.notes;
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << format_report(report);
    return 0;
}

int report_solution(const SequenceSolution& s, const std::vector<std::string>& labels,
                    const std::vector<SequenceArrow>& arrows)
{
    if (s.status == SolveStatus::inconsistent)
    {
        std::cout << "INCONSISTENT: " << s.inconsistency << '\n';
        return kInconsistent;
    }
    if (s.status == SolveStatus::underdetermined)
        std::cout << "UNDETERMINED\n";
    for (std::size_t i = 0; i < labels.size(); ++i)
    {
        std::cout << labels[i] << " = ";
        if (s.term_dims[i])
            std::cout << *s.term_dims[i];
        else
            std::cout << '?';
        std::cout << '\n';
        if (i < s.arrow_ranks.size())
        {
            std::cout << "  rank " << (arrows[i].name.empty() ? "r" + std::to_string(i) : arrows[i].name) << " = ";
            if (s.arrow_ranks[i])
                std::cout << *s.arrow_ranks[i];
            else
                std::cout << '?';
            std::cout << '\n';
        }
    }
    for (const auto& c : s.residual_constraints)
        std::cout << "constraint: " << c << '\n';
    if (s.status == SolveStatus::solved)
        std::cout << "exactness: " << (exactness_holds(s) ? "ok" : "FAILED")
                  << ", alternating sum: " << alternating_sum(s) << '\n';
    return 0;
}

int cmd_sequence(const Options& opt)
{
    std::ifstream in(opt.input);
    if (!in)
        throw ParseError("cannot open " + opt.input);
    const ExactSequenceSpec spec = parse_sequence(in);
    std::vector<std::string> labels;
    for (const auto& t : spec.terms)
        labels.push_back(t.label());
    return report_solution(solve_exact(spec), labels, spec.arrows);
}

int cmd_mv(const Options& opt)
{
    const MVProblem problem = parse_mv_problem(read_text_file(opt.input));
    const MVResult r = mayer_vietoris(problem);
    if (r.status == SolveStatus::inconsistent)
    {
        std::cout << "INCONSISTENT: " << r.solution.inconsistency << '\n';
        return kInconsistent;
    }
    const int dim = std::max({problem.betti_a.top_degree(), problem.betti_b.top_degree(),
                              problem.betti_intersection.top_degree() + 1});
    if (r.status == SolveStatus::solved)
    {
        if (opt.format == "json")
            std::cout << to_json(BettiTableDocument{dim, true, r.union_betti}) << '\n';
        else
        {
            std::cout << "H~(A u B):\n";
            print_table(std::cout, r.union_betti, dim, opt.dense);
            std::cout << "exactness: " << (exactness_holds(r.solution) ? "ok" : "FAILED")
                      << ", alternating sum: " << alternating_sum(r.solution) << '\n';
        }
        return 0;
    }
    // The sequence runs H̃_j(A∩B) -> H̃_j(A) ⊕ H̃_j(B) -> H̃_j(A∪B) from the
    // top degree down; name the known terms after their groups.
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < r.sequence.terms.size(); ++i)
    {
        const std::string j = r.sequence.arrows[i - i % 3].name.substr(3);  // "phi<j>"
        if (i % 3 == 0)
            labels.push_back("H" + j + "(A∩B)");
        else if (i % 3 == 1)
            labels.push_back("H" + j + "(A)+H" + j + "(B)");
        else
            labels.push_back(r.sequence.terms[i].label());
    }
    return report_solution(r.solution, labels, r.sequence.arrows);
}

int cmd_catalog(const Options& opt)
{
    const Catalog& catalog = Catalog::builtin();
    if (opt.format == "json")
    {
        std::cout << catalog.to_json() << '\n';
        return 0;
    }
    for (const auto& e : catalog.entries())
    {
        const BettiModel h = catalog.ordinary_homology(e.name);
        std::cout << e.name << " (dim " << h.dimension << "): H~ = " << h.betti << '\n';
        std::cout << "  " << e.provenance << '\n';
    }
    return 0;
}

void add_format_flags(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    cmd->add_flag("--dense", opt.dense, "Print every degree from 0 to the dimension");
}

void add_perversity_flags(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--perversity,-p", opt.perversity, "zero, m, um, top, or comma-separated p(2),p(3),...");
    cmd->add_flag("--extended", opt.extended, "Accept perversities that break the classical axioms");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Intersection homology and intersection-space homology of cones and suspensions"};
    app.require_subcommand(1);
    Options opt;
    std::string example_name;

    auto* homology = app.add_subcommand("homology", "Reduced rational Betti numbers of a facet file");
    homology->add_option("file", opt.input, "Facet file")->required();
    add_format_flags(homology, opt);

    auto* cone = app.add_subcommand("cone", "IH and HI of the open cone on a link");
    auto* suspension = app.add_subcommand("suspension", "HI of the suspension of a link");
    for (auto* cmd : {cone, suspension})
    {
        cmd->add_option("input", opt.input, "Facet file or Betti table (.json)")->required();
        add_perversity_flags(cmd, opt);
        add_format_flags(cmd, opt);
        cmd->add_flag("--verify", opt.verify, "Cross-check HI against the chain model (facet input only)");
        cmd->add_flag("--sweep-perversities", opt.sweep, "Run zero, m, um, top and the extended sweep");
        cmd->add_flag("--simply-connected", opt.simply_connected, "Assert that the link is simply connected");
    }
    cone->add_option("--theory", opt.theory, "ih, hi or both")->check(CLI::IsMember({"ih", "hi", "both"}));

    auto* example = app.add_subcommand("example", "Run a named catalog example");
    example->add_option("name", example_name, "Catalog entry")->required();
    add_perversity_flags(example, opt);
    example->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "json"}));

    auto* mv = app.add_subcommand("mv", "Solve a Mayer-Vietoris problem");
    mv->add_option("file", opt.input, "MV problem (JSON)")->required();
    add_format_flags(mv, opt);

    auto* sequence = app.add_subcommand("sequence", "Solve a long exact sequence for unknown dimensions");
    sequence->add_option("file", opt.input, "Sequence file")->required();

    auto* catalog = app.add_subcommand("catalog", "List the built-in spaces");
    catalog->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "json"}));

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return kInputError;
    }

    try
    {
        if (*homology)
            return cmd_homology(opt);
        if (*cone)
            return cmd_space(opt, Construction::cone);
        if (*suspension)
            return cmd_space(opt, Construction::suspension);
        if (*example)
            return cmd_example(example_name, opt);
        if (*mv)
            return cmd_mv(opt);
        if (*sequence)
            return cmd_sequence(opt);
        if (*catalog)
            return cmd_catalog(opt);
    }
    catch (const ParseError& e)
    {
        std::cerr << "error: " << opt.input << ": " << e.what() << '\n';
        return kInputError;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
