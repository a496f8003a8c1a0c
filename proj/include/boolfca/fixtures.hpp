#pragma once

#include "context.hpp"

/// Small example contexts used throughout the tests and the CLI's demo
/// commands. The same tables ship as .cxt files under data/fixtures/.
namespace boolfca::fixtures {

/// 8 objects, 5 attributes, 15 concepts.
inline FormalContext fig2()
{
    return FormalContext::from_strings({"xx...", "x.x..", ".xxxx", "xxx..", ".x.xx", "..xxx", "...x.", "....x"});
}

/// 4 objects, 4 attributes; the lattice is a 3-chain.
inline FormalContext fig3() { return FormalContext::from_strings({"xxxx", "xxxx", "xxx.", "xx.."}); }

/// 5 objects, 5 attributes, 10 concepts.
inline FormalContext fig4() { return FormalContext::from_strings({"xx.x.", "x.xx.", ".xx..", "xx.xx", "...x."}); }

/// 6 objects, 6 attributes, 12 concepts.
inline FormalContext fig5()
{
    return FormalContext::from_strings({"xx....", "x.x...", ".xxx..", ".xx.x.", ".xx..x", ".xxxxx"});
}

/// The contranominal scale N^c(k).
inline FormalContext contranominal(std::size_t k)
{
    std::vector<std::vector<bool>> table(k, std::vector<bool>(k, true));
    for (std::size_t i = 0; i < k; ++i) table[i][i] = false;
    return FormalContext::from_table(table, k);
}

/// Chain of n concepts: staircase with n-1 objects and attributes, row g
/// holding the first g attributes.
inline FormalContext chain(std::size_t n)
{
    const std::size_t k = n == 0 ? 0 : n - 1;
    std::vector<std::vector<bool>> table(k, std::vector<bool>(k, false));
    for (std::size_t g = 0; g < k; ++g)
        for (std::size_t m = 0; m < g; ++m) table[g][m] = true;
    return FormalContext::from_table(table, k);
}

}  // namespace boolfca::fixtures
