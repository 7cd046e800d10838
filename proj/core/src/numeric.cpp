#include "hypercover/numeric.hpp"

#include "hypercover/errors.hpp"

#include <boost/multiprecision/integer.hpp>

namespace hypercover {

Int binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result *= Int(n - k + i);
        result /= Int(i);
    }
    return result;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != b.size())
        throw usage_error("dot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool canonicalize_primitive(std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    if (g == 0) return false;
    for (Int& x : v) x /= g;
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        break;
    }
    return true;
}

} // namespace hypercover
