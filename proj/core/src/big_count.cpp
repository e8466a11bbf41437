#include "diagseq/big_count.hpp"

#include <cassert>

namespace diagseq {

BigCount binomial(Int n, Int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigCount result = 1;
    // result after step i is C(n - r + i, i), so the division is exact.
    for (Int i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;
    }
    return result;
}

BigCount multinomial(std::span<const Int> counts) {
    BigCount result = 1;
    Int placed = 0;
    for (Int c : counts) {
        assert(c >= 0);
        placed += c;
        result *= binomial(placed, c);
    }
    return result;
}

}  // namespace diagseq
