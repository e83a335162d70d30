#include "z2cover/wps.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "z2cover/checked.hpp"

namespace z2c {

bool well_formed(const WeightTuple& a) {
    for (int skip = 0; skip < 4; ++skip) {
        std::int64_t g = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) g = std::gcd(g, a[i]);
        if (g != 1) return false;
    }
    return true;
}

Weights::Weights(WeightTuple a) : a_(a) {
    for (auto x : a_)
        if (x <= 0) throw std::invalid_argument("weights must be positive");
    std::sort(a_.begin(), a_.end());
    L_ = 1;
    W_ = 0;
    A_ = 1;
    sigma2_ = 0;
    for (int i = 0; i < 4; ++i) {
        L_ = mul_checked(L_ / std::gcd(L_, a_[i]), a_[i]);
        W_ = add_checked(W_, a_[i]);
        A_ = mul_checked(A_, a_[i]);
        for (int j = i + 1; j < 4; ++j) sigma2_ = add_checked(sigma2_, mul_checked(a_[i], a_[j]));
    }
}

std::string Weights::str() const {
    return "(" + std::to_string(a_[0]) + "," + std::to_string(a_[1]) + "," + std::to_string(a_[2]) + "," +
           std::to_string(a_[3]) + ")";
}

namespace {

// x with a*x = 1 mod m, for coprime a, m >= 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    std::int64_t g = m, x = 0, x1 = 1, a1 = a % m;
    while (a1 != 0) {
        std::int64_t q = g / a1;
        std::int64_t t = g - q * a1;
        g = a1;
        a1 = t;
        t = x - q * x1;
        x = x1;
        x1 = t;
    }
    x %= m;
    return x < 0 ? x + m : x;
}

// #{(e0, e1) >= 0 : a0 e0 + a1 e1 = r}
std::int64_t count_two(std::int64_t a0, std::int64_t a1, std::int64_t r) {
    if (r < 0) return 0;
    const std::int64_t g = std::gcd(a0, a1);
    if (r % g != 0) return 0;
    a0 /= g;
    a1 /= g;
    r /= g;
    const std::int64_t top = r / a1;  // largest admissible e1
    if (a0 == 1) return top + 1;
    // a1 e1 = r mod a0
    const std::int64_t first = static_cast<std::int64_t>(
        static_cast<__int128>(r % a0) * inverse_mod(a1 % a0, a0) % a0);
    if (first > top) return 0;
    return (top - first) / a0 + 1;
}

}  // namespace

std::int64_t monomial_count(const Weights& w, std::int64_t n) {
    if (n < 0) return 0;
    const auto& a = w.a();
    std::int64_t total = 0;
    for (std::int64_t r3 = n; r3 >= 0; r3 -= a[3])
        for (std::int64_t r2 = r3; r2 >= 0; r2 -= a[2]) total = add_checked(total, count_two(a[0], a[1], r2));
    return total;
}

std::int64_t euler_char_line(const Weights& w, std::int64_t n) {
    return sub_checked(monomial_count(w, n), monomial_count(w, sub_checked(-n, w.W())));
}

}  // namespace z2c
