#pragma once

#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gaborlab::detail {

using cd = std::complex<double>;

// Grid sizes are 3-smooth even numbers: N = 2^a * 3^b with a >= 1, N >= 8.
inline bool grid_size_ok(int n) {
    if (n < 8 || n % 2 != 0) return false;
    while (n % 2 == 0) n /= 2;
    while (n % 3 == 0) n /= 3;
    return n == 1;
}

inline const std::vector<cd>& unit_roots(int n, int sign) {
    static std::map<std::pair<int, int>, std::vector<cd>> cache;
    auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<cd> w(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double ang = sign * 2.0 * std::numbers::pi * k / n;
        w[static_cast<std::size_t>(k)] = {std::cos(ang), std::sin(ang)};
    }
    return cache.emplace(key, std::move(w)).first->second;
}

// Mixed-radix (2,3) decimation in time; out[K] = sum_j in[j*stride] e^{sign*2*pi*i*jK/n}.
inline void dft_rec(const cd* in, int stride, cd* out, int n, int sign) {
    if (n == 1) {
        out[0] = in[0];
        return;
    }
    const int p = (n % 2 == 0) ? 2 : 3;
    const int m = n / p;
    for (int r = 0; r < p; ++r) {
        dft_rec(in + static_cast<std::ptrdiff_t>(r) * stride, stride * p, out + static_cast<std::ptrdiff_t>(r) * m, m, sign);
    }
    const auto& w = unit_roots(n, sign);
    const auto& wp = unit_roots(p, sign);
    cd t[3];
    for (int k = 0; k < m; ++k) {
        for (int r = 0; r < p; ++r) t[r] = out[r * m + k] * w[static_cast<std::size_t>(r * k)];
        for (int q = 0; q < p; ++q) {
            cd acc = t[0];
            for (int r = 1; r < p; ++r) acc += t[r] * wp[static_cast<std::size_t>((q * r) % p)];
            out[q * m + k] = acc;
        }
    }
}

inline void dft_inplace(std::vector<cd>& a, int sign) {
    const int n = static_cast<int>(a.size());
    if (n == 0) throw std::invalid_argument("dft: empty input");
    if (n % 2 != 0 && n % 3 != 0 && n != 1)
        throw std::invalid_argument("dft: length must factor into 2s and 3s");
    std::vector<cd> out(a.size());
    dft_rec(a.data(), 1, out.data(), n, sign);
    a.swap(out);
}

}  // namespace gaborlab::detail
