#pragma once

#include "taufan/render.hpp"
#include "taufan/stability.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace taufan {

struct EngineOptions {
    GraphLimits limits;
    // Dimension bound of the module catalog. Without one, the componentwise
    // maximum over the tau-rigid modules of a complete traversal is used, or
    // all ones when the traversal stops at a cap.
    std::optional<IntVec> bound;
    CatalogOptions catalog;
    int kronecker_depth = 8;
};

struct WallInfo {
    int module = 0;  // index into catalog()
    StabilitySpace space;
    VCone generators;
};

// Everything derived from one algebra, computed on first use and cached.
// Over a prime field the catalog is the brute-force enumeration; over Q it is
// the tau-rigid modules of the traversal together with the simples.
class Engine {
public:
    explicit Engine(AlgebraPtr algebra, EngineOptions options = {});

    const AlgebraPtr& algebra() const { return algebra_; }
    const EngineOptions& options() const { return options_; }
    int rank() const { return algebra_->vertex_count(); }
    bool kronecker() const { return is_kronecker(*algebra_); }

    const MutationGraph& graph();
    ModuleRegistry& registry();
    const IndecomposableCatalog& catalog();
    const std::vector<ProfiledModule>& profiles();
    const std::vector<WallInfo>& walls();
    std::vector<Chamber> chamber_list();
    // Brick (catalog index) on each graph edge; needs a complete traversal.
    const std::vector<int>& edge_labels();
    // All tau-rigid pairs that are direct summands of some graph node.
    const std::vector<TauPair>& rigid_subpairs();

    std::vector<WallGeometry> wall_geometry();
    std::string render_svg(const std::optional<QVec>& projection = std::nullopt);
    std::string mutation_dot(bool labels);
    std::string hasse_dot();

private:
    AlgebraPtr algebra_;
    EngineOptions options_;
    std::unique_ptr<IndecomposableCatalog> catalog_;
    std::unique_ptr<ModuleRegistry> registry_;
    std::optional<MutationGraph> graph_;
    std::optional<std::vector<ProfiledModule>> profiles_;
    std::optional<std::vector<WallInfo>> walls_;
    std::optional<std::vector<int>> labels_;
    std::optional<std::vector<TauPair>> subpairs_;

    void build();
    IndecomposableCatalog pool_catalog(const ModuleRegistry& reg, const IntVec* bound) const;
};

}  // namespace taufan
