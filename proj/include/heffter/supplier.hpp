#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "heffter/array.hpp"
#include "heffter/params.hpp"
#include "heffter/verify.hpp"

namespace heffter {

// What an ingredient request asks for. Diagonal requests are squares of
// side `a` filled on `b` consecutive diagonals; rectangular requests carry
// full (m, n, s, k) parameters.
enum class IngredientShape { DiagonalSquare, Rectangular };

struct IngredientRequest {
    ArrayKind kind = ArrayKind::HeffterInteger;
    IngredientShape shape = IngredientShape::DiagonalSquare;
    int a = 0, b = 0;         // diagonal squares
    DesignParams params;      // rectangular requests
    bool shiftable = false;

    std::string describe() const;
    std::string cache_key() const;

    static IngredientRequest diagonal(ArrayKind kind, int a, int b,
                                      bool shiftable = false);
    static IngredientRequest rectangular(ArrayKind kind, DesignParams p,
                                         bool shiftable = false);
};

// Where a supplied ingredient came from.
struct IngredientProvenance {
    std::string source;  // "bundled", "file", "constructed", "search"
    std::string detail;
};

// Resolves ingredient arrays in order: bundled fixtures, files from the
// registered directories (and HEFFTER_INGREDIENT_PATH), constructions this
// library can derive directly, then bounded exact search. Every result is
// verified against the request before being returned and cached. Thread
// safe; the cache is shared across threads.
class IngredientSupplier {
public:
    IngredientSupplier();

    void add_search_dir(const std::filesystem::path& dir);
    // Reads HEFFTER_INGREDIENT_PATH (colon-separated) into the search path.
    void add_dirs_from_env();

    void set_search_budget(long long nodes, double seconds);
    void disable_search() { search_enabled_ = false; }

    PartiallyFilledArray supply(const IngredientRequest& req);

    // Provenance of the most recent successful supply() for this request.
    std::optional<IngredientProvenance> provenance(
        const IngredientRequest& req) const;

    struct InventoryItem {
        std::string name;
        IngredientRequest satisfies;
        std::string source;
    };
    std::vector<InventoryItem> bundled_inventory() const;
    const std::vector<std::filesystem::path>& search_dirs() const {
        return dirs_;
    }

private:
    PartiallyFilledArray resolve(const IngredientRequest& req,
                                 std::vector<std::string>& attempts,
                                 IngredientProvenance& prov);
    std::optional<PartiallyFilledArray> try_bundled(
        const IngredientRequest& req, IngredientProvenance& prov) const;
    std::optional<PartiallyFilledArray> try_files(
        const IngredientRequest& req, std::vector<std::string>& attempts,
        IngredientProvenance& prov) const;
    std::optional<PartiallyFilledArray> try_constructed(
        const IngredientRequest& req, IngredientProvenance& prov) const;
    std::optional<PartiallyFilledArray> try_search(
        const IngredientRequest& req, std::vector<std::string>& attempts,
        IngredientProvenance& prov) const;

    bool matches(const IngredientRequest& req,
                 const PartiallyFilledArray& a) const;

    mutable std::mutex mu_;
    std::map<std::string, PartiallyFilledArray> cache_;
    std::map<std::string, IngredientProvenance> provenance_;
    std::map<std::string, std::string> failed_;  // negative cache
    std::vector<std::filesystem::path> dirs_;
    long long search_nodes_ = 10'000'000;
    double search_seconds_ = 60.0;
    bool search_enabled_ = true;
};

// Bundled fixture registry (grid-format text plus the request each one
// satisfies). Shared by the supplier and the CLI inventory listing.
struct BundledFixture {
    const char* name;
    const char* grid_text;
    IngredientRequest satisfies;
};
const std::vector<BundledFixture>& bundled_fixtures();

}  // namespace heffter
