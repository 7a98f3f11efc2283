#include "heffter/supplier.hpp"

namespace heffter {

namespace {

const char k_h_12_3[] = R"GRID(# kind: integer-heffter
# provenance: fixture | bundled cyclically 3-diagonal square
12 12 3 3
-36  12  24   .   .   .   .   .   .   .   .   .
  . -25 -10  35   .   .   .   .   .   .   .   .
  .   . -14  -9  23   .   .   .   .   .   .   .
  .   .   . -26  -8  34   .   .   .   .   .   .
  .   .   .   . -15  -7  22   .   .   .   .   .
  .   .   .   .   . -27  11  16   .   .   .   .
  .   .   .   .   .   . -33   5  28   .   .   .
  .   .   .   .   .   .   . -21   4  17   .   .
  .   .   .   .   .   .   .   . -32   3  29   .
  .   .   .   .   .   .   .   .   . -20   2  18
 30   .   .   .   .   .   .   .   .   . -31   1
  6  13   .   .   .   .   .   .   .   .   . -19
)GRID";

const char k_h_24_3[] = R"GRID(# kind: integer-heffter
# provenance: fixture | bundled cyclically 3-diagonal square, cell-map inverse of the 8x12 fixture
24 24 3 3
-72  24  48   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .
  . -49 -22  71   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .
  .   . -26 -21  47   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .
  .   .   . -50 -20  70   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .
  .   .   .   . -27 -19  46   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .
  .   .   .   .   . -51 -18  69   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .
  .   .   .   .   .   . -28 -17  45   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .
  .   .   .   .   .   .   . -52 -16  68   .   .   .   .   .   .   .   .   .   .   .   .   .   .
  .   .   .   .   .   .   .   . -29 -15  44   .   .   .   .   .   .   .   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   . -53 -14  67   .   .   .   .   .   .   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   . -30 -13  43   .   .   .   .   .   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   .   . -54  23  31   .   .   .   .   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   . -66  11  55   .   .   .   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   . -42  10  32   .   .   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   .   . -65   9  56   .   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   .   .   . -41   8  33   .   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   . -64   7  57   .   .   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   . -40   6  34   .   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   . -63   5  58   .   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   . -39   4  35   .   .
  .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   . -62   3  59   .
  .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   . -38   2  36
 60   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   . -61   1
 12  25   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   . -37
)GRID";

const char k_h_tight_15_4[] = R"GRID(# kind: integer-heffter
# provenance: fixture | bundled tight block from the paired 20x8 strip
15 4 4 15
  7 -16 -10  19
-12  15  17 -20
 -2   9 -18  11
  6   5   3 -14
  1 -13   8   4
 21 -34 -23  36
-22  33  24 -35
 25 -38 -27  40
-26  37  28 -39
-29  43  30 -44
 31 -41 -32  42
 45 -54 -47  56
-46  53  48 -55
-49  58  51 -60
 50 -57 -52  59
)GRID";

const char k_q4[] = R"GRID(# kind: integer-heffter
4 4 4 4
  1  -2  -3   4
 -5   6   7  -8
 -9  10  11 -12
 13 -14 -15  16
)GRID";

const char k_q6[] = R"GRID(# kind: integer-heffter
6 4 4 6
  1 -14  -3  16
 -2  13   4 -15
  5 -18  -7  20
 -6  17   8 -19
 -9  23  10 -24
 11 -21 -12  22
)GRID";

}  // namespace

const std::vector<BundledFixture>& bundled_fixtures() {
    static const std::vector<BundledFixture> table = {
        {"h_12_3", k_h_12_3,
         IngredientRequest::diagonal(ArrayKind::HeffterInteger, 12, 3)},
        {"h_24_3", k_h_24_3,
         IngredientRequest::diagonal(ArrayKind::HeffterInteger, 24, 3)},
        {"h_tight_15_4", k_h_tight_15_4,
         IngredientRequest::rectangular(
             ArrayKind::HeffterInteger,
             DesignParams{15, 4, 4, 15, std::nullopt, std::nullopt})},
        {"q4", k_q4,
         IngredientRequest::diagonal(ArrayKind::HeffterInteger, 4, 4, true)},
        {"q6", k_q6,
         IngredientRequest::rectangular(
             ArrayKind::HeffterInteger,
             DesignParams{6, 4, 4, 6, std::nullopt, std::nullopt}, true)},
    };
    return table;
}

}  // namespace heffter
