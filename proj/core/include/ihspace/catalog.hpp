/**
 * Named spaces: spheres, the SU(2)/SU(3) links, and the singular spaces
 * built from them (universal imploded cross-sections as open cones, the
 * quasi-Hamiltonian double of SU(2) as a suspension).
 */
#ifndef IHSPACE_CATALOG_HPP
#define IHSPACE_CATALOG_HPP

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ihspace/graded_betti.hpp"
#include "ihspace/perversity.hpp"
#include "ihspace/simplicial_complex.hpp"
#include "ihspace/stratified.hpp"

namespace ihs {

struct BettiModel
{
    GradedBetti betti;  ///< reduced
    int dimension = 0;
};

enum class Construction
{
    cone,
    suspension
};

/// A singular space built from another catalog entry.
struct CompositeModel
{
    Construction construction;
    std::string link;
};

struct CatalogEntry
{
    std::string name;
    std::variant<SimplicialComplex, BettiModel, CompositeModel> model;
    std::string provenance;
    bool simply_connected = false;
    std::string notes;

    bool is_composite() const { return std::holds_alternative<CompositeModel>(model); }
};

/// Everything `run_example` reports for one composite entry.
struct ExampleReport
{
    std::string name;
    Construction construction = Construction::cone;
    std::string link;
    std::string perversity;
    int link_dimension = 0;
    int cutoff = 0;
    std::optional<GradedBetti> ih;
    GradedBetti hi;
    std::optional<GradedBetti> ordinary;
    std::set<int> differing;
    std::vector<std::string> provenance;
    std::vector<std::string> notes;
};

class Catalog
{
  public:
    /// The built-in entries; constructed once, read-only afterwards.
    static const Catalog& builtin();

    /// Throws LookupError listing the available names.
    const CatalogEntry& get(const std::string& name) const;
    std::vector<std::string> names() const;
    const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }

    /// Link description for a non-composite entry.
    LinkSpec link_spec(const std::string& name) const;

    /// Reduced Betti numbers and dimension of any entry. For composites this
    /// is the ordinary homology of the cone or suspension.
    BettiModel ordinary_homology(const std::string& name) const;

    /// Throws LookupError for unknown names, std::invalid_argument for a
    /// non-composite entry, DomainError if `p` is undefined at l + 1.
    ExampleReport run_example(const std::string& name, const Perversity& p) const;

    /// All entries as Betti tables with metadata, deterministic order.
    std::string to_json() const;

  private:
    Catalog();
    void add(CatalogEntry entry);

    std::vector<CatalogEntry> entries_;
};

/// Plain-text rendering of a report (the `example` command output).
std::string format_report(const ExampleReport& report);

}  // namespace ihs

#endif
