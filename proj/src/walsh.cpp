#include "z2cover/walsh.hpp"

#include "z2cover/checked.hpp"

namespace z2c {

void fwht_inplace(std::vector<std::int64_t>& a) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("transform length must be a power of two");
    for (std::size_t h = 1; h < n; h <<= 1)
        for (std::size_t i = 0; i < n; i += 2 * h)
            for (std::size_t j = i; j < i + h; ++j) {
                const std::int64_t x = a[j], y = a[j + h];
                a[j] = add_checked(x, y);
                a[j + h] = sub_checked(x, y);
            }
}

Spectrum forward(const GroupFunction& d) {
    Spectrum S{d.rank(), d.values()};
    fwht_inplace(S.v);
    return S;
}

namespace {

// Returns the first index whose value is not divisible by 2^s, or npos.
std::size_t divide_exact(std::vector<std::int64_t>& a, int s) {
    const std::int64_t mask = (std::int64_t{1} << s) - 1;
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (a[x] & mask) return x;
        a[x] >>= s;  // arithmetic shift is exact once divisibility holds
    }
    return std::string::npos;
}

}  // namespace

GroupFunction inverse(const Spectrum& S) {
    check_rank(S.s);
    std::vector<std::int64_t> a = S.v;
    fwht_inplace(a);
    if (auto bad = divide_exact(a, S.s); bad != std::string::npos)
        throw NonIntegral("inverse transform is not integral at " + format_bits(static_cast<Elem>(bad), S.s),
                          static_cast<Elem>(bad));
    return GroupFunction(S.s, std::move(a));
}

std::optional<GroupFunction> try_inverse(const Spectrum& S) {
    check_rank(S.s);
    std::vector<std::int64_t> a = S.v;
    fwht_inplace(a);
    if (divide_exact(a, S.s) != std::string::npos) return std::nullopt;
    return GroupFunction(S.s, std::move(a));
}

std::vector<mpq_class> degrees_from_spectrum(const Spectrum& S) {
    std::vector<mpq_class> l(S.v.size());
    for (std::size_t chi = 1; chi < S.v.size(); ++chi) {
        l[chi] = mpq_class(mpz_class(static_cast<long>(S.v[0])) - mpz_class(static_cast<long>(S.v[chi])), 4);
        l[chi].canonicalize();
    }
    return l;
}

mpq_class triple_convolution_at_zero(const Spectrum& S) {
    mpz_class sum = 0;
    for (auto x : S.v) {
        mpz_class z = static_cast<long>(x);
        sum += z * z * z;
    }
    mpz_class den = 1;
    den <<= S.s;
    mpq_class r(sum, den);
    r.canonicalize();
    return r;
}

}  // namespace z2c
