#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heffter/array.hpp"
#include "heffter/params.hpp"

namespace heffter {

enum class ViolationKind {
    RowFill,
    ColFill,
    RowSum,
    ColSum,
    Domain,
    SupportMultiplicity,
    DiagonalProfile,
    Shiftability,
};

const char* to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::string location;
    std::string detail;
};

// Result of checking an array against one of the definitions. All
// violations are collected, not just the first, so a broken fixture can be
// diagnosed in one pass.
struct VerificationReport {
    bool passed = true;
    std::vector<Violation> violations;
    // Row/column sum constants observed by the magic-rectangle check.
    std::optional<std::pair<Entry, Entry>> observed_constants;
    // Non-fatal notes, e.g. a necessary existence condition that fails.
    std::vector<std::string> warnings;

    void add(ViolationKind kind, std::string location, std::string detail);
    std::string summary() const;
};

// The array kinds this library can check, construct and search for.
enum class ArrayKind {
    HeffterModular,    // entries over Z_{2nk+1}, one of {x,-x} each
    HeffterInteger,    // entries in {+-1..+-nk}, distinct absolute values
    RelativeModular,   // lambda-fold over Z_v relative to the order-t subgroup
    RelativeInteger,   // integer form of the above
    Sma,               // signed magic array
    Mr,                // magic rectangle
};

const char* to_string(ArrayKind k);
std::optional<ArrayKind> array_kind_from_string(const std::string& name);

// Heffter array over Z_{2nk+1}: s per row, k per column, exactly one of
// {x, -x} for every nonzero x, zero row/column sums mod 2nk+1.
VerificationReport verify_heffter_modular(const PartiallyFilledArray& a,
                                          const DesignParams& p);

// Integer Heffter array: entries in {+-1..+-nk}, no two equal in absolute
// value, zero row/column sums over Z.
VerificationReport verify_integer_heffter(const PartiallyFilledArray& a,
                                          const DesignParams& p);

// lambda-fold Heffter array over Z_v relative to the order-t subgroup J,
// v = 2nk/lambda + t. Modular mode: entries avoid J and every element of
// Z_v \ J appears exactly lambda times in E(A) u -E(A). Integer mode:
// absolute values lie in Phi = {1..floor(v/2)} \ {ell, 2ell, ...} with
// multiplicity lambda (v/2 gets lambda/2 when v is even and t odd).
VerificationReport verify_relative(const PartiallyFilledArray& a,
                                   const DesignParams& p, bool integer);

// Signed magic array: every element of the symmetric range appears exactly
// once (0 included iff nk is odd), zero row/column sums.
VerificationReport verify_sma(const PartiallyFilledArray& a,
                              const DesignParams& p);

// Magic rectangle: entries are exactly 0..nk-1, constant row sums c1 and
// column sums c2. A passing report carries (c1, c2), which are forced to
// s(nk-1)/2 and k(nk-1)/2.
VerificationReport verify_mr(const PartiallyFilledArray& a,
                             const DesignParams& p);

// Passes iff the filled cells are exactly b cyclically consecutive
// diagonals, each fully filled.
VerificationReport verify_diagonal(const PartiallyFilledArray& a, int b);

// Dispatch by kind; relative kinds read t/lambda from the params.
VerificationReport verify_kind(ArrayKind kind, const PartiallyFilledArray& a,
                               const DesignParams& p);

// The admissible entries of one kind, as value classes with multiplicities:
// a sign-free class stands for +-base used in either sign, a fixed class
// for one exact value. Shared by the search pools; row and column sums are
// taken mod v for the modular kinds and over the integers otherwise.
struct EntryDomain {
    ArrayKind kind;
    bool modular_sums = false;
    long long v = 0;    // ambient modulus when modular_sums
    struct Class {
        Entry base;
        bool sign_free;
        int multiplicity;
    };
    std::vector<Class> classes;
    Entry row_target = 0;  // nonzero only for magic rectangles
    Entry col_target = 0;
};
EntryDomain entry_domain(ArrayKind kind, const DesignParams& p);

}  // namespace heffter
