#include "z2cover/gf2.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "z2cover/checked.hpp"
#include "z2cover/walsh.hpp"

namespace z2c {

void check_rank(int s) {
    if (s < 1 || s > kMaxRank)
        throw RankError("rank s=" + std::to_string(s) + " outside [1, " + std::to_string(kMaxRank) + "]");
}

int dot(Elem chi, Elem g, int s) {
    check_rank(s);
    const Elem bound = Elem{1} << s;
    if (chi >= bound || g >= bound) throw RankError("element does not belong to (Z2)^" + std::to_string(s));
    return dot(chi, g);
}

Elem parse_bits(const std::string& bits, int s) {
    if (static_cast<int>(bits.size()) != s)
        throw std::invalid_argument("bitstring '" + bits + "' does not have length " + std::to_string(s));
    Elem g = 0;
    for (int i = 0; i < s; ++i) {
        if (bits[i] == '1')
            g |= Elem{1} << i;
        else if (bits[i] != '0')
            throw std::invalid_argument("bitstring '" + bits + "' has a character other than 0/1");
    }
    return g;
}

std::string format_bits(Elem g, int s) {
    std::string out(s, '0');
    for (int i = 0; i < s; ++i)
        if ((g >> i) & 1) out[i] = '1';
    return out;
}

GroupFunction::GroupFunction(int s) : s_(s) {
    check_rank(s);
    v_.assign(group_order(s), 0);
}

GroupFunction::GroupFunction(int s, std::vector<std::int64_t> values) : s_(s), v_(std::move(values)) {
    check_rank(s);
    if (v_.size() != group_order(s)) throw std::invalid_argument("group function needs 2^s values");
}

GroupFunction GroupFunction::from_nonzero(int s, const std::vector<std::int64_t>& tail) {
    check_rank(s);
    if (tail.size() + 1 != group_order(s)) throw std::invalid_argument("expected 2^s - 1 values");
    std::vector<std::int64_t> v;
    v.reserve(group_order(s));
    v.push_back(0);
    v.insert(v.end(), tail.begin(), tail.end());
    return GroupFunction(s, std::move(v));
}

std::vector<std::int64_t> GroupFunction::nonzero_values() const { return {v_.begin() + 1, v_.end()}; }

std::int64_t GroupFunction::total() const {
    std::int64_t t = 0;
    for (auto x : v_) t = add_checked(t, x);
    return t;
}

std::int64_t GroupFunction::sum_of_squares() const {
    std::int64_t t = 0;
    for (auto x : v_) t = add_checked(t, mul_checked(x, x));
    return t;
}

std::vector<Elem> GroupFunction::support() const {
    std::vector<Elem> out;
    for (Elem g = 0; g < v_.size(); ++g)
        if (v_[g] != 0) out.push_back(g);
    return out;
}

Elem parity_vector(const GroupFunction& d) {
    Elem p = 0;
    for (Elem g = 1; g < d.size(); ++g)
        if (d[g] & 1) p ^= g;
    return p;
}

GroupFunction canonicalize(const GroupFunction& d) {
    const int s = d.rank();
    if (s > kMaxExactOrbitRank)
        throw RankError("exhaustive orbit canonicalization is capped at s=" + std::to_string(kMaxExactOrbitRank));
    const std::size_t n = group_order(s);
    constexpr auto kInf = std::numeric_limits<std::int64_t>::max();

    std::vector<std::int64_t> best(n, kInf);
    best[0] = d[0];
    std::vector<Elem> img(n, 0);
    std::vector<char> in_span(n, 0);
    in_span[0] = 1;
    std::vector<std::int64_t> block(n);

    std::function<void(int)> extend = [&](int j) {
        if (j == s) return;
        const std::size_t half = std::size_t{1} << j;
        for (Elem b = 1; b < n; ++b) {
            if (in_span[b]) continue;
            for (std::size_t t = 0; t < half; ++t) block[t] = d[b ^ img[t]];
            int cmp = 0;
            for (std::size_t t = 0; t < half && cmp == 0; ++t) {
                if (block[t] < best[half + t]) cmp = -1;
                else if (block[t] > best[half + t]) cmp = 1;
            }
            if (cmp > 0) continue;
            if (cmp < 0) {
                std::copy(block.begin(), block.begin() + half, best.begin() + half);
                std::fill(best.begin() + 2 * half, best.end(), kInf);
            }
            for (std::size_t t = 0; t < half; ++t) {
                img[half + t] = b ^ img[t];
                in_span[img[half + t]] = 1;
            }
            extend(j + 1);
            for (std::size_t t = 0; t < half; ++t) in_span[img[half + t]] = 0;
        }
    };
    extend(0);
    return GroupFunction(s, std::move(best));
}

GroupFunction apply_basis(const GroupFunction& d, const std::vector<Elem>& cols) {
    const int s = d.rank();
    if (static_cast<int>(cols.size()) != s || !is_basis(cols, s)) throw std::invalid_argument("columns do not form a basis");
    GroupFunction out(s);
    for (Elem x = 0; x < d.size(); ++x) {
        Elem y = 0;
        for (int i = 0; i < s; ++i)
            if ((x >> i) & 1) y ^= cols[i];
        out[x] = d[y];
    }
    return out;
}

int gf2_rank(std::vector<Elem> vectors) {
    int r = 0;
    for (int bit = 31; bit >= 0; --bit) {
        auto it = std::find_if(vectors.begin() + r, vectors.end(), [&](Elem v) { return (v >> bit) & 1; });
        if (it == vectors.end()) continue;
        std::swap(*it, vectors[r]);
        for (std::size_t i = 0; i < vectors.size(); ++i)
            if (static_cast<int>(i) != r && ((vectors[i] >> bit) & 1)) vectors[i] ^= vectors[r];
        ++r;
    }
    return r;
}

bool is_basis(const std::vector<Elem>& cols, int s) {
    const Elem bound = Elem{1} << s;
    for (Elem c : cols)
        if (c >= bound) return false;
    return static_cast<int>(cols.size()) == s && gf2_rank(cols) == s;
}

std::vector<std::int64_t> orbit_signature(const GroupFunction& d) {
    const int s = d.rank();
    const std::size_t n = d.size();
    std::vector<std::int64_t> dv = d.values();
    std::sort(dv.begin(), dv.end());

    Spectrum S = forward(d);
    std::vector<std::int64_t> lv(n);
    for (Elem chi = 0; chi < n; ++chi) lv[chi] = S[0] - S[chi];
    std::sort(lv.begin(), lv.end());

    std::vector<std::int64_t> planes;
    if (s >= 2) {
        for (Elem a = 1; a < n; ++a)
            for (Elem b = a + 1; b < n; ++b) {
                Elem c = a ^ b;
                if (c < b) continue;  // each plane once, a < b < c
                planes.push_back(d[a] + d[b] + d[c]);
            }
        std::sort(planes.begin(), planes.end());
    }

    std::vector<std::int64_t> sig;
    sig.reserve(3 + dv.size() + lv.size() + planes.size());
    sig.push_back(s);
    sig.insert(sig.end(), dv.begin(), dv.end());
    sig.push_back(-1);
    sig.insert(sig.end(), lv.begin(), lv.end());
    sig.push_back(-1);
    sig.insert(sig.end(), planes.begin(), planes.end());
    return sig;
}

OrbitKey orbit_key(const GroupFunction& d) {
    if (d.rank() <= kMaxExactOrbitRank) return {true, canonicalize(d).values()};
    return {false, orbit_signature(d)};
}

std::int64_t affine_hyperplane_min_intersection(const std::vector<Elem>& A, int s) {
    check_rank(s);
    const Elem n = static_cast<Elem>(group_order(s));
    for (Elem a : A)
        if (a == 0 || a >= n) throw std::invalid_argument("set must lie in G minus {0}");
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (Elem u = 1; u < n; ++u) {
        std::int64_t c = 0;
        for (Elem a : A) c += dot(u, a);
        best = std::min(best, c);
    }
    return best;
}

}  // namespace z2c
