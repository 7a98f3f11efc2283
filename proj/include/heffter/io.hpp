#pragma once

#include <string>

#include "heffter/array.hpp"
#include "heffter/params.hpp"

namespace heffter {

enum class ArrayFormat { Grid, Json };

struct Provenance {
    std::string tag;
    std::string detail;
    bool operator==(const Provenance&) const = default;
};

// A serialized array: kind tag, shape parameters, grid and provenance.
// Round-trips losslessly through both formats; JSON is the canonical one
// for fixtures.
struct ArrayDocument {
    std::string kind = "raw";
    DesignParams params;
    PartiallyFilledArray grid{1, 1};
    Provenance provenance;

    bool operator==(const ArrayDocument&) const = default;

    static ArrayDocument wrap(std::string kind, PartiallyFilledArray grid,
                              DesignParams params, Provenance prov = {});
};

// Grid format: whitespace-separated tokens, "." for an empty cell, "#"
// starts a comment line; the first non-comment line may be a header
// "m n s k [t lambda]". "# kind:" and "# provenance:" comments carry the
// remaining document fields. JSON format:
// {kind, params:{m,n,s,k,t?,lambda?}, grid:[[int|null,...],...],
//  provenance:{tag, detail}}.
ArrayDocument parse_array(const std::string& text, ArrayFormat format);

// Canonical output: stable key order, fixed-width grid columns, no
// whitespace variance. parse_array(emit_array(doc)) == doc.
std::string emit_array(const ArrayDocument& doc, ArrayFormat format);

// Pretty grid for terminals (no header or comments).
std::string render_grid(const PartiallyFilledArray& a);

ArrayDocument load_array_file(const std::string& path);

}  // namespace heffter
