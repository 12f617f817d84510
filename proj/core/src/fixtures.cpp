#include "flowfilter/fixtures.hpp"

namespace flowfilter::fixtures {

const std::string_view kFig1 =
    "s\tx\n"
    "s\ty\n"
    "x\tz1\n"
    "x\tz2\n"
    "y\tz2\n"
    "y\tz3\n"
    "z1\tw\n"
    "z2\tw\n"
    "z3\tw\n";

const std::string_view kFig2 =
    "s\tu1\n"
    "s\tu2\n"
    "s\tu3\n"
    "u1\tA\n"
    "u2\tA\n"
    "u3\tA\n"
    "A\tt\n"
    "s\tB\n"
    "B\tb1\n"
    "B\tb2\n"
    "B\tb3\n"
    "B\tb4\n";

const std::string_view kDiamond =
    "s\ta\n"
    "s\tb\n"
    "a\tc\n"
    "b\tc\n"
    "c\td\n";

const std::string_view kTree1 =
    "s\tr\n"
    "s\ta\n"
    "r\ta\n"
    "r\tb\n"
    "a\tc\n";

const std::string_view kChain =
    "s\ta\n"
    "a\tb\n"
    "b\tc\n";

const std::string_view kMergerPath =
    "s\ta\n"
    "s\tb\n"
    "a\tm1\n"
    "b\tm1\n"
    "m1\tm2\n"
    "m2\tm3\n"
    "m3\tt\n";

CGraph fig1() { return parse_edge_list(kFig1, "s"); }
CGraph fig2() { return parse_edge_list(kFig2, "s"); }
CGraph diamond() { return parse_edge_list(kDiamond, "s"); }
CGraph tree1() { return parse_edge_list(kTree1, "s"); }
CGraph chain() { return parse_edge_list(kChain, "s"); }
CGraph merger_path() { return parse_edge_list(kMergerPath, "s"); }

}  // namespace flowfilter::fixtures
