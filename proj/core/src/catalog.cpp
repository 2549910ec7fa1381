#include "ihspace/catalog.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ihspace/chain_complex.hpp"
#include "ihspace/errors.hpp"

namespace ihs {

namespace {

const char* construction_name(Construction c)
{
    return c == Construction::cone ? "cone" : "suspension";
}

void print_table(std::ostream& out, const std::string& title, const GradedBetti& b)
{
    out << title << ":\n";
    if (b.is_zero())
        out << "(zero)\n";
    for (const auto& [degree, rank] : b.ranks())
        out << degree << ": " << rank << '\n';
}

}  // namespace

Catalog::Catalog()
{
    for (int n = 0; n <= 6; ++n)
        add({"sphere" + std::to_string(n), boundary_of_simplex(n + 1),
             "boundary of the standard " + std::to_string(n + 1) + "-simplex", n >= 2,
             "triangulated S^" + std::to_string(n)});

    add({"su2", boundary_of_simplex(4), "SU(2) is diffeomorphic to S^3", true,
         "triangulated as the boundary of the 4-simplex"});
    add({"su3", BettiModel{{{3, 1}, {5, 1}, {8, 1}}, 8},
         "SU(3) is rationally equivalent to S^3 x S^5 (Kunneth)", true,
         "Betti-only; the tensor product of the S^3 and S^5 chain models has the same ranks"});
    add({"Y", BettiModel{{{4, 1}, {5, 1}, {9, 1}}, 9},
         "Y = {(z,w) in C^3 x C^3 : z.w = 0, |z|^2 + |w|^2 = 1}, a compact 9-manifold; "
         "reduced homology taken as published input (Mayer-Vietoris computation)",
         true, "Betti-only; link of the cone point of the SU(3) universal imploded cross-section"});
    add({"W", BettiModel{{{0, 1}, {5, 2}}, 5}, "two disjoint copies of S^5", false,
         "Betti-only; disconnected"});

    add({"su2-universal-implosion", CompositeModel{Construction::cone, "su2"},
         "universal imploded cross-section of SU(2) is C^2, the open cone on S^3", true,
         "isolated singular point at the cone vertex"});
    add({"su3-universal-implosion", CompositeModel{Construction::cone, "Y"},
         "universal imploded cross-section of SU(3) is homeomorphic to the open cone on Y; "
         "published IH^m: rank 1 in degree 4 only",
         true, "isolated singular point at the cone vertex"});
    add({"qh-su2-double", CompositeModel{Construction::suspension, "su2"},
         "quasi-Hamiltonian SU(2)-space homeomorphic to S^4 = susp(S^3)", true,
         "singular stratum: the two suspension points"});
}

void Catalog::add(CatalogEntry entry)
{
    for (const auto& e : entries_)
        if (e.name == entry.name)
            throw std::logic_error("duplicate catalog entry " + entry.name);
    if (const auto* c = std::get_if<CompositeModel>(&entry.model))
        get(c->link);  // link must already exist
    entries_.push_back(std::move(entry));
}

const Catalog& Catalog::builtin()
{
    static const Catalog catalog;
    return catalog;
}

const CatalogEntry& Catalog::get(const std::string& name) const
{
    for (const auto& e : entries_)
        if (e.name == name)
            return e;
    std::string available;
    for (const auto& n : names())
        available += (available.empty() ? "" : ", ") + n;
    throw LookupError("unknown catalog entry '" + name + "'; available: " + available);
}

std::vector<std::string> Catalog::names() const
{
    std::vector<std::string> out;
    for (const auto& e : entries_)
        out.push_back(e.name);
    return out;
}

LinkSpec Catalog::link_spec(const std::string& name) const
{
    const CatalogEntry& e = get(name);
    if (const auto* k = std::get_if<SimplicialComplex>(&e.model))
        return LinkSpec::from_complex(*k, e.simply_connected);
    if (const auto* b = std::get_if<BettiModel>(&e.model))
        return LinkSpec::from_betti(b->betti, b->dimension, e.simply_connected);
    throw std::invalid_argument("catalog entry '" + name + "' is a composite space, not a link");
}

BettiModel Catalog::ordinary_homology(const std::string& name) const
{
    const CatalogEntry& e = get(name);
    if (const auto* k = std::get_if<SimplicialComplex>(&e.model))
        return {betti(chain_complex(*k, true)), k->dimension()};
    if (const auto* b = std::get_if<BettiModel>(&e.model))
        return *b;
    const auto& c = std::get<CompositeModel>(e.model);
    const BettiModel link = ordinary_homology(c.link);
    if (c.construction == Construction::cone)
        return {GradedBetti{}, link.dimension + 1};
    return {link.betti.shifted(1), link.dimension + 1};
}

ExampleReport Catalog::run_example(const std::string& name, const Perversity& p) const
{
    const CatalogEntry& e = get(name);
    const auto* c = std::get_if<CompositeModel>(&e.model);
    if (!c)
        throw std::invalid_argument("catalog entry '" + name + "' is not a cone or suspension");

    const LinkSpec link = link_spec(c->link);
    ExampleReport report;
    report.name = name;
    report.construction = c->construction;
    report.link = c->link;
    report.perversity = p.label();
    report.link_dimension = link.dimension();

    const TheoryComparison cmp = c->construction == Construction::cone
                                     ? compare_theories(ConeSpaceSpec{link}, p)
                                     : compare_theories(SuspensionSpaceSpec{link}, p);
    report.cutoff = cmp.cutoff;
    report.ih = cmp.ih;
    report.hi = cmp.hi;
    report.ordinary = cmp.ordinary;
    report.differing = cmp.differing;
    report.notes = cmp.notes;
    report.provenance = {e.provenance, get(c->link).provenance};
    return report;
}

std::string Catalog::to_json() const
{
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["entries"] = ordered_json::array();
    for (const auto& e : entries_)
    {
        ordered_json item;
        item["name"] = e.name;
        if (std::holds_alternative<SimplicialComplex>(e.model))
            item["kind"] = "complex";
        else if (std::holds_alternative<BettiModel>(e.model))
            item["kind"] = "betti";
        else
        {
            const auto& c = std::get<CompositeModel>(e.model);
            item["kind"] = construction_name(c.construction);
            item["link"] = c.link;
        }
        const BettiModel h = ordinary_homology(e.name);
        ordered_json betti = ordered_json::object();
        for (const auto& [degree, rank] : h.betti.ranks())
            betti[std::to_string(degree)] = rank;
        item["table"] = {{"dim", h.dimension}, {"reduced", true}, {"betti", betti}};
        item["simply_connected"] = e.simply_connected;
        item["provenance"] = e.provenance;
        item["notes"] = e.notes;
        doc["entries"].push_back(std::move(item));
    }
    return doc.dump(2);
}

std::string format_report(const ExampleReport& r)
{
    std::ostringstream out;
    out << "example: " << r.name << '\n';
    out << "space: " << (r.construction == Construction::cone ? "open cone" : "suspension") << " on " << r.link
        << " (link dimension " << r.link_dimension << ")\n";
    out << "perversity: " << r.perversity << ", cutoff k = " << r.cutoff << '\n';
    if (r.ih)
        print_table(out, "IH", *r.ih);
    print_table(out, "HI", r.hi);
    if (r.ordinary)
        print_table(out, "ordinary H~", *r.ordinary);
    out << "differ:";
    if (r.differing.empty())
        out << " (none)";
    for (int d : r.differing)
        out << ' ' << d;
    out << '\n';
    for (const auto& p : r.provenance)
        out << "provenance: " << p << '\n';
    for (const auto& n : r.notes)
        out << "note: " << n << '\n';
    return out.str();
}

}  // namespace ihs
