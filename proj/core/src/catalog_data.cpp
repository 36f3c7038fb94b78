#include "weyl/catalog.hpp"

namespace weyl {

// Fixed projection-matrix tables for source ranks 2..8. One record per
// algebra-subalgebra pair: key line (plus optional flags), then target-rank
// rows of source-rank integers. Rows partition into the target's factor
// blocks in order; U1 rows sit in place.
//
// The C2 records mirror the B2 ones with the two columns interchanged and
// the coordinates switched, matching the numbering difference between the
// two isomorphic algebras. G2>A1 and B3>A1 come from the exceptional chain
// through G2. A3>C2 is a subjoining, not an inclusion.
//
// One restoration: the last entry of row 3 of B5>A3xC2 is set to 1. The
// variant with 0 there duplicates row 1, fails orbit-size conservation on
// the spinor orbit, and disagrees with the block form of the general-rank
// D x B family after the A3/D3 renumbering.
const char* catalog_text() {
  return R"CATALOG(
# ---- rank 2 ----
B2>A1xU1
2 1
0 1

B2>A1
4 3

B2>2A1
1 1
1 0

C2>A1xU1
1 2
1 0

C2>A1
3 4

C2>2A1
1 1
0 1

# ---- rank 3 ----
B3>C2xU1
0 2 1
1 0 0
0 0 1

B3>A3
0 1 0
1 0 0
0 1 1

B3>G2
0 1 0
1 0 1

B3>3A1
1 1 0
1 1 1
0 2 1

G2>A1
10 6

B3>A1
6 10 6

C3>A2xU1
1 1 0
0 1 2
1 0 1

C3>C2xA1
1 0 0
0 1 1
0 0 1

C3>A1
5 8 9

C3>2A1
1 0 1
2 4 4

A3>C2 subjoining
0 2 0
1 0 1

# ---- rank 4 ----
B4>B3xU1
1 0 0 0
0 1 0 0
0 0 2 1
0 0 0 1

B4>D4
1 0 0 0
0 1 0 0
0 0 1 0
0 0 1 1

B4>A3xA1
0 1 1 0
1 0 0 0
0 1 1 1
0 0 2 1

B4>C2x2A1
0 0 2 1
1 1 0 0
0 1 1 1
0 1 1 0

B4>A1
8 14 18 10

B4>2A1
2 2 4 1
2 4 4 3

C4>A3xU1
1 1 0 0
0 0 1 2
0 1 1 0
1 0 1 0

C4>C3xA1
1 0 0 0
0 1 0 0
0 0 1 1
0 0 0 1

C4>2C2
1 1 0 0
0 0 1 1
0 1 1 0
0 0 0 1

C4>A1
7 12 15 16

C4>3A1
1 0 1 2
1 2 1 2
1 2 3 2

D4>A3xU1
1 1 0 0
0 0 0 1
0 1 1 0
1 0 1 0

D4>B3
1 0 0 0
0 1 0 0
0 0 1 1

D4>C2xA1
0 2 1 1
1 0 0 0
0 0 1 1

D4>4A1
0 1 1 0
0 1 0 1
1 1 1 1
1 1 0 0

D4>A2
1 0 1 1
1 3 1 1

# ---- rank 5 ----
B5>B4xU1
1 0 0 0 0
0 1 0 0 0
0 0 1 0 0
0 0 0 2 1
0 0 0 0 1

B5>D5
1 0 0 0 0
0 1 0 0 0
0 0 1 0 0
0 0 0 1 0
0 0 0 1 1

B5>B3x2A1
1 0 0 0 0
0 1 1 0 0
0 0 0 2 1
0 0 1 1 0
0 0 1 1 1

B5>D4xA1
1 0 0 0 0
0 1 0 0 0
0 0 1 1 0
0 0 1 1 1
0 0 0 2 1

B5>A3xC2
0 0 1 1 0
1 1 0 0 0
0 0 1 1 1
0 0 0 2 1
0 1 1 0 0

B5>A1
10 18 24 28 15

C5>A4xU1
1 1 0 0 0
0 0 1 1 0
0 0 0 1 2
0 1 1 0 0
1 0 1 0 1

C5>C4xA1
1 0 0 0 0
0 1 0 0 0
0 0 1 0 0
0 0 0 1 1
0 0 0 0 1

C5>C3xC2
1 0 0 0 0
0 1 1 0 0
0 0 0 1 1
0 0 1 1 0
0 0 0 0 1

C5>A1
9 16 21 24 25

C5>C2xA1
0 0 2 4 4
1 2 1 0 0
1 0 1 0 1

D5>A4xU1
1 1 0 0 0
0 0 1 1 0
0 0 0 0 1
0 1 1 0 0
2 0 2 -1 1

D5>D4xU1
1 0 0 0 0
0 1 0 0 0
0 0 1 0 0
0 0 1 1 1
0 0 0 1 -1

D5>B4
1 0 0 0 0
0 1 0 0 0
0 0 1 0 0
0 0 0 1 1

D5>B3xA1
1 0 0 0 0
0 1 0 0 0
0 0 2 1 1
0 0 0 1 1

D5>2C2
0 0 2 1 1
1 1 0 0 0
0 0 0 1 1
0 1 1 0 0

D5>A3x2A1
0 0 1 1 0
1 1 0 0 0
0 0 1 0 1
0 1 1 1 1
0 1 1 0 0

D5>C2
2 2 4 1 1
0 1 0 1 1

# ---- rank 6 ----
B6>B5xU1
1 0 0 0 0 0
0 1 0 0 0 0
0 0 1 0 0 0
0 0 0 1 0 0
0 0 0 0 2 1
0 0 0 0 0 1

B6>D6
1 0 0 0 0 0
0 1 0 0 0 0
0 0 1 0 0 0
0 0 0 1 0 0
0 0 0 0 1 0
0 0 0 0 1 1

B6>B4x2A1
1 0 0 0 0 0
0 1 0 0 0 0
0 0 1 1 0 0
0 0 0 0 2 1
0 0 0 1 1 0
0 0 0 1 1 1

B6>D5xA1
1 0 0 0 0 0
0 1 0 0 0 0
0 0 1 0 0 0
0 0 0 1 1 0
0 0 0 1 1 1
0 0 0 0 2 1

B6>B3xA3
1 1 0 0 0 0
0 0 1 1 0 0
0 0 0 0 2 1
0 0 0 1 1 0
0 1 1 0 0 0
0 0 0 1 1 1

B6>D4xC2
1 0 0 0 0 0
0 1 1 0 0 0
0 0 0 1 1 0
0 0 0 1 1 1
0 0 0 0 2 1
0 0 1 1 0 0

B6>A1
12 22 30 36 40 21

C6>A5xU1
1 1 0 0 0 0
0 0 1 1 0 0
0 0 0 0 1 2
0 0 0 1 1 0
0 1 1 0 0 0
1 0 1 0 1 0

C6>C5xA1
1 0 0 0 0 0
0 1 0 0 0 0
0 0 1 0 0 0
0 0 0 1 0 0
0 0 0 0 1 1
0 0 0 0 0 1

C6>C4xC2
1 0 0 0 0 0
0 1 0 0 0 0
0 0 1 1 0 0
0 0 0 0 1 1
0 0 0 1 1 0
0 0 0 0 0 1

C6>2C3
1 1 0 0 0 0
0 0 1 1 0 0
0 0 0 0 1 1
0 1 1 0 0 0
0 0 0 1 1 0
0 0 0 0 0 1

C6>A1
11 20 27 32 35 36

C6>A3xA1
0 0 1 2 1 2
1 2 1 0 0 0
0 0 1 2 3 2
1 0 1 0 1 2

C6>C2xA1
1 2 1 2 1 2
0 0 1 1 2 1
2 2 4 2 2 4

D6>A5xU1
1 1 0 0 0 0
0 0 1 1 0 0
0 0 0 0 0 1
0 0 0 1 1 0
0 1 1 0 0 0
1 0 1 0 1 0

D6>D5xU1
1 0 0 0 0 0
0 1 0 0 0 0
0 0 1 0 0 0
0 0 0 1 0 0
0 0 0 1 1 1
0 0 0 0 1 -1

D6>B5
1 0 0 0 0 0
0 1 0 0 0 0
0 0 1 0 0 0
0 0 0 1 0 0
0 0 0 0 1 1

D6>B4xA1
1 0 0 0 0 0
0 1 0 0 0 0
0 0 1 0 0 0
0 0 0 2 1 1
0 0 0 0 1 1

D6>B3xC2
1 0 0 0 0 0
0 1 1 0 0 0
0 0 0 2 1 1
0 0 0 0 1 1
0 0 1 1 0 0

D6>D4x2A1
1 0 0 0 0 0
0 1 1 0 0 0
0 0 0 1 1 0
0 0 0 1 0 1
0 0 1 1 1 1
0 0 1 1 0 0

D6>2A3
0 0 0 1 1 0
0 1 1 0 0 0
0 0 0 1 0 1
0 0 1 1 0 0
1 1 0 0 0 0
0 0 1 1 1 1

D6>3A1
2 4 6 6 4 4
1 2 1 2 0 1
1 0 1 2 1 0

D6>C3xA1
1 0 1 1 0 0
0 1 1 0 0 1
0 0 0 1 1 0
1 2 1 2 0 1

# ---- rank 7 ----
B7>B6xU1
1 0 0 0 0 0 0
0 1 0 0 0 0 0
0 0 1 0 0 0 0
0 0 0 1 0 0 0
0 0 0 0 1 0 0
0 0 0 0 0 2 1
0 0 0 0 0 0 1

B7>D7
1 0 0 0 0 0 0
0 1 0 0 0 0 0
0 0 1 0 0 0 0
0 0 0 1 0 0 0
0 0 0 0 1 0 0
0 0 0 0 0 1 0
0 0 0 0 0 1 1

B7>D6xA1
1 0 0 0 0 0 0
0 1 0 0 0 0 0
0 0 1 0 0 0 0
0 0 0 1 0 0 0
0 0 0 0 1 1 0
0 0 0 0 1 1 1
0 0 0 0 0 2 1

B7>B5x2A1
1 0 0 0 0 0 0
0 1 0 0 0 0 0
0 0 1 0 0 0 0
0 0 0 1 1 0 0
0 0 0 0 0 2 1
0 0 0 0 1 1 0
0 0 0 0 1 1 1

B7>D5xC2
1 0 0 0 0 0 0
0 1 0 0 0 0 0
0 0 1 1 0 0 0
0 0 0 0 1 1 0
0 0 0 0 1 1 1
0 0 0 0 0 2 1
0 0 0 1 1 0 0

B7>B4xA3
1 0 0 0 0 0 0
0 1 1 0 0 0 0
0 0 0 1 1 0 0
0 0 0 0 0 2 1
0 0 0 0 1 1 0
0 0 1 1 0 0 0
0 0 0 0 1 1 1

B7>D4xB3
1 1 0 0 0 0 0
0 0 1 1 0 0 0
0 0 0 0 1 1 0
0 0 0 0 1 1 1
0 1 1 0 0 0 0
0 0 0 1 1 0 0
0 0 0 0 0 2 1

B7>A1
14 26 36 44 50 54 28

B7>A3
1 0 1 1 0 2 1
0 1 2 1 3 2 1
1 2 1 3 2 2 1

B7>C2xA1
0 0 2 2 4 4 3
1 2 1 2 1 1 0
2 2 4 2 2 4 1

C7>A6xU1
1 1 0 0 0 0 0
0 0 1 1 0 0 0
0 0 0 0 1 1 0
0 0 0 0 0 1 2
0 0 0 1 1 0 0
0 1 1 0 0 0 0
1 0 1 0 1 0 1

C7>C6xA1
1 0 0 0 0 0 0
0 1 0 0 0 0 0
0 0 1 0 0 0 0
0 0 0 1 0 0 0
0 0 0 0 1 0 0
0 0 0 0 0 1 1
0 0 0 0 0 0 1

C7>C5xC2
1 0 0 0 0 0 0
0 1 0 0 0 0 0
0 0 1 0 0 0 0
0 0 0 1 1 0 0
0 0 0 0 0 1 1
0 0 0 0 1 1 0
0 0 0 0 0 0 1

C7>C4xC3
1 0 0 0 0 0 0
0 1 1 0 0 0 0
0 0 0 1 1 0 0
0 0 0 0 0 1 1
0 0 1 1 0 0 0
0 0 0 0 1 1 0
0 0 0 0 0 0 1

C7>A1
13 24 33 40 45 48 49

C7>B3xA1
1 2 1 0 0 0 0
0 0 1 2 1 0 0
0 0 0 0 2 4 4
1 0 1 0 1 0 1

D7>A6xU1
1 1 0 0 0 0 0
0 0 1 1 0 0 0
0 0 0 0 1 1 0
0 0 0 0 0 0 1
0 0 0 1 1 0 0
0 1 1 0 0 0 0
2 0 2 0 2 -1 1

D7>D6xU1
1 0 0 0 0 0 0
0 1 0 0 0 0 0
0 0 1 0 0 0 0
0 0 0 1 0 0 0
0 0 0 0 1 0 0
0 0 0 0 1 1 1
0 0 0 0 0 1 -1

D7>B6
1 0 0 0 0 0 0
0 1 0 0 0 0 0
0 0 1 0 0 0 0
0 0 0 1 0 0 0
0 0 0 0 1 0 0
0 0 0 0 0 1 1

D7>B5xA1
1 0 0 0 0 0 0
0 1 0 0 0 0 0
0 0 1 0 0 0 0
0 0 0 1 0 0 0
0 0 0 0 2 1 1
0 0 0 0 0 1 1

D7>B4xC2
1 0 0 0 0 0 0
0 1 0 0 0 0 0
0 0 1 1 0 0 0
0 0 0 0 2 1 1
0 0 0 0 0 1 1
0 0 0 1 1 0 0

D7>2B3
1 1 0 0 0 0 0
0 0 1 1 0 0 0
0 0 0 0 2 1 1
0 1 1 0 0 0 0
0 0 0 1 1 0 0
0 0 0 0 0 1 1

D7>D5x2A1
1 0 0 0 0 0 0
0 1 0 0 0 0 0
0 0 1 1 0 0 0
0 0 0 0 1 1 0
0 0 0 0 1 0 1
0 0 0 1 1 1 1
0 0 0 1 1 0 0

D7>D4xA3
1 1 0 0 0 0 0
0 0 1 1 0 0 0
0 0 0 0 1 1 0
0 0 0 0 1 0 1
0 0 0 1 1 0 0
0 1 1 0 0 0 0
0 0 0 1 1 1 1

D7>C2
0 2 2 6 4 3 3
2 2 3 1 3 1 1

D7>C3
0 1 0 1 0 1 1
1 0 0 1 3 1 1
0 1 2 1 0 0 0

D7>G2
1 0 0 1 0 1 1
0 3 4 3 5 1 1

# ---- rank 8 ----
B8>B7xU1
1 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0
0 0 1 0 0 0 0 0
0 0 0 1 0 0 0 0
0 0 0 0 1 0 0 0
0 0 0 0 0 1 0 0
0 0 0 0 0 0 2 1
0 0 0 0 0 0 0 1

B8>D8
1 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0
0 0 1 0 0 0 0 0
0 0 0 1 0 0 0 0
0 0 0 0 1 0 0 0
0 0 0 0 0 1 0 0
0 0 0 0 0 0 1 0
0 0 0 0 0 0 1 1

B8>D7xA1
1 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0
0 0 1 0 0 0 0 0
0 0 0 1 0 0 0 0
0 0 0 0 1 0 0 0
0 0 0 0 0 1 1 0
0 0 0 0 0 1 1 1
0 0 0 0 0 0 2 1

B8>B6x2A1
1 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0
0 0 1 0 0 0 0 0
0 0 0 1 0 0 0 0
0 0 0 0 1 1 0 0
0 0 0 0 0 0 2 1
0 0 0 0 0 1 1 0
0 0 0 0 0 1 1 1

B8>D6xC2
1 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0
0 0 1 0 0 0 0 0
0 0 0 1 1 0 0 0
0 0 0 0 0 1 1 0
0 0 0 0 0 1 1 1
0 0 0 0 0 0 2 1
0 0 0 0 1 1 0 0

B8>B5xA3
1 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0
0 0 1 1 0 0 0 0
0 0 0 0 1 1 0 0
0 0 0 0 0 0 2 1
0 0 0 0 0 1 1 0
0 0 0 1 1 0 0 0
0 0 0 0 0 1 1 1

B8>D5xB3
1 0 0 0 0 0 0 0
0 1 1 0 0 0 0 0
0 0 0 1 1 0 0 0
0 0 0 0 0 1 1 0
0 0 0 0 0 1 1 1
0 0 1 1 0 0 0 0
0 0 0 0 1 1 0 0
0 0 0 0 0 0 2 1

B8>B4xD4
1 1 0 0 0 0 0 0
0 0 1 1 0 0 0 0
0 0 0 0 1 1 0 0
0 0 0 0 0 0 2 1
0 1 1 0 0 0 0 0
0 0 0 1 1 0 0 0
0 0 0 0 0 1 1 0
0 0 0 0 0 1 1 1

B8>A1
16 30 42 52 60 66 70 36

C8>A7xU1
1 1 0 0 0 0 0 0
0 0 1 1 0 0 0 0
0 0 0 0 1 1 0 0
0 0 0 0 0 0 1 2
0 0 0 0 0 1 1 0
0 0 0 1 1 0 0 0
0 1 1 0 0 0 0 0
1 0 1 0 1 0 1 0

C8>C7xA1
1 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0
0 0 1 0 0 0 0 0
0 0 0 1 0 0 0 0
0 0 0 0 1 0 0 0
0 0 0 0 0 1 0 0
0 0 0 0 0 0 1 1
0 0 0 0 0 0 0 1

C8>C6xC2
1 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0
0 0 1 0 0 0 0 0
0 0 0 1 0 0 0 0
0 0 0 0 1 1 0 0
0 0 0 0 0 0 1 1
0 0 0 0 0 1 1 0
0 0 0 0 0 0 0 1

C8>C5xC3
1 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0
0 0 1 1 0 0 0 0
0 0 0 0 1 1 0 0
0 0 0 0 0 0 1 1
0 0 0 1 1 0 0 0
0 0 0 0 0 1 1 0
0 0 0 0 0 0 0 1

C8>2C4
1 1 0 0 0 0 0 0
0 0 1 1 0 0 0 0
0 0 0 0 1 1 0 0
0 0 0 0 0 0 1 1
0 1 1 0 0 0 0 0
0 0 0 1 1 0 0 0
0 0 0 0 0 1 1 0
0 0 0 0 0 0 0 1

C8>A1
15 28 39 48 55 60 63 64

C8>D4xA1
1 2 1 0 0 0 0 0
0 0 1 2 1 0 0 0
0 0 0 0 1 2 1 2
0 0 0 0 1 2 3 2
1 0 1 0 1 0 1 2

C8>C2
1 4 3 4 5 8 7 6
1 0 2 2 2 0 1 2

D8>A7xU1
1 1 0 0 0 0 0 0
0 0 1 1 0 0 0 0
0 0 0 0 1 1 0 0
0 0 0 0 0 0 0 1
0 0 0 0 0 1 1 0
0 0 0 1 1 0 0 0
0 1 1 0 0 0 0 0
1 0 1 0 1 0 1 0

D8>D7xU1
1 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0
0 0 1 0 0 0 0 0
0 0 0 1 0 0 0 0
0 0 0 0 1 0 0 0
0 0 0 0 0 1 0 0
0 0 0 0 0 1 1 1
0 0 0 0 0 0 1 -1

D8>B7
1 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0
0 0 1 0 0 0 0 0
0 0 0 1 0 0 0 0
0 0 0 0 1 0 0 0
0 0 0 0 0 1 0 0
0 0 0 0 0 0 1 1

D8>B6xA1
1 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0
0 0 1 0 0 0 0 0
0 0 0 1 0 0 0 0
0 0 0 0 1 0 0 0
0 0 0 0 0 2 1 1
0 0 0 0 0 0 1 1

D8>B5xC2
1 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0
0 0 1 0 0 0 0 0
0 0 0 1 1 0 0 0
0 0 0 0 0 2 1 1
0 0 0 0 0 0 1 1
0 0 0 0 1 1 0 0

D8>B4xB3
1 0 0 0 0 0 0 0
0 1 1 0 0 0 0 0
0 0 0 1 1 0 0 0
0 0 0 0 0 2 1 1
0 0 1 1 0 0 0 0
0 0 0 0 1 1 0 0
0 0 0 0 0 0 1 1

D8>D6x2A1
1 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0
0 0 1 0 0 0 0 0
0 0 0 1 1 0 0 0
0 0 0 0 0 1 1 0
0 0 0 0 0 1 0 1
0 0 0 0 1 1 1 1
0 0 0 0 1 1 0 0

D8>D5xA3
1 0 0 0 0 0 0 0
0 1 1 0 0 0 0 0
0 0 0 1 1 0 0 0
0 0 0 0 0 1 1 0
0 0 0 0 0 1 0 1
0 0 0 0 1 1 0 0
0 0 1 1 0 0 0 0
0 0 0 0 1 1 1 1

D8>2D4
1 1 0 0 0 0 0 0
0 0 1 1 0 0 0 0
0 0 0 0 1 1 0 0
0 0 0 0 1 1 1 1
0 1 1 0 0 0 0 0
0 0 0 1 1 0 0 0
0 0 0 0 0 1 1 0
0 0 0 0 0 1 0 1

D8>B4
0 0 0 1 1 0 1 0
0 0 1 0 1 1 0 0
0 1 0 0 0 0 0 1
1 0 1 2 1 2 1 0

D8>2C2
1 2 1 2 1 2 2 1
0 0 1 1 2 1 0 1
1 0 1 2 1 2 0 1
0 1 1 0 1 1 1 0

D8>C4xA1
1 0 1 1 0 0 0 0
0 1 1 0 1 1 0 0
0 0 0 1 1 0 0 1
0 0 0 0 0 1 1 0
1 2 1 2 1 2 0 1
)CATALOG";
}

}  // namespace weyl
