#include "injscheme/cycle_path.hpp"

#include <algorithm>
#include <stdexcept>

namespace injscheme {

std::string CyclePathType::to_string() const {
    std::string s = "(" + (cycles.empty() ? "-" : cycles.to_string()) + "|";
    std::string rho;
    if (zero_paths > 0) {
        rho = "0";
        if (zero_paths > 1) rho += "^" + std::to_string(zero_paths);
    }
    // paths are stored descending; print ascending to match (0^a,1,2,...) style
    for (int i = paths.length() - 1; i >= 0; --i) {
        if (!rho.empty()) rho += ",";
        rho += std::to_string(paths.part(i));
    }
    if (rho.empty()) rho = "-";
    return s + rho + ")";
}

int class_distance(const CyclePathType& t, int k) { return k - t.cycles.count_part(1); }

bool class_less(const CyclePathType& a, const CyclePathType& b, int k) {
    int da = class_distance(a, k), db = class_distance(b, k);
    if (da != db) return da < db;
    if (a.cycles.weight() != b.cycles.weight()) return a.cycles.weight() > b.cycles.weight();
    if (a.cycles != b.cycles) return b.cycles.parts() < a.cycles.parts();
    return b.paths.parts() < a.paths.parts();
}

std::vector<CyclePathType> enumerate_classes(int k, int n) {
    if (k < 0 || k > n) throw std::invalid_argument("enumerate_classes: need 0 <= k <= n");
    std::vector<CyclePathType> out;
    for (int j = 0; j <= k; ++j)
        for (const auto& cyc : enumerate_partitions(j))
            for (const auto& pth : enumerate_partitions(k - j, n - k))
                out.push_back({cyc, pth, n - k - pth.length()});
    std::sort(out.begin(), out.end(),
              [k](const CyclePathType& a, const CyclePathType& b) { return class_less(a, b, k); });
    return out;
}

CyclePathType classify_pair(const Injection& a, const Injection& b) {
    if (a.k() != b.k() || a.n() != b.n())
        throw std::invalid_argument("classify_pair: mismatched (k, n)");
    const int k = a.k(), n = a.n();
    std::vector<int> from_a(static_cast<std::size_t>(n) + 1, 0), from_b(from_a);
    for (int i = 1; i <= k; ++i) {
        from_a[static_cast<std::size_t>(a(i))] = i;
        from_b[static_cast<std::size_t>(b(i))] = i;
    }
    std::vector<char> seen_dom(static_cast<std::size_t>(k) + 1, 0), seen_cod(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> cycle_parts, path_parts;
    int zero_paths = 0;

    // Paths start at codomain vertices of degree <= 1; the rest are cycles.
    for (int v = 1; v <= n; ++v) {
        int deg = (from_a[static_cast<std::size_t>(v)] != 0) + (from_b[static_cast<std::size_t>(v)] != 0);
        if (deg == 2 || seen_cod[static_cast<std::size_t>(v)]) continue;
        seen_cod[static_cast<std::size_t>(v)] = 1;
        if (deg == 0) {
            ++zero_paths;
            continue;
        }
        bool enter_via_a = from_a[static_cast<std::size_t>(v)] != 0;
        int len = 0, cur = v;
        while (true) {
            int i = enter_via_a ? from_a[static_cast<std::size_t>(cur)] : from_b[static_cast<std::size_t>(cur)];
            if (i == 0) break;
            seen_dom[static_cast<std::size_t>(i)] = 1;
            ++len;
            cur = enter_via_a ? b(i) : a(i);
            seen_cod[static_cast<std::size_t>(cur)] = 1;
        }
        path_parts.push_back(len);
    }
    for (int i0 = 1; i0 <= k; ++i0) {
        if (seen_dom[static_cast<std::size_t>(i0)]) continue;
        int len = 0, i = i0;
        while (!seen_dom[static_cast<std::size_t>(i)]) {
            seen_dom[static_cast<std::size_t>(i)] = 1;
            ++len;
            i = from_b[static_cast<std::size_t>(a(i))];
        }
        cycle_parts.push_back(len);
    }
    std::sort(cycle_parts.rbegin(), cycle_parts.rend());
    std::sort(path_parts.rbegin(), path_parts.rend());
    return {Partition{std::move(cycle_parts)}, Partition{std::move(path_parts)}, zero_paths};
}

Int sphere_size(const CyclePathType& t, int k, int n) {
    if (!t.valid_for(k, n)) throw std::invalid_argument("sphere_size: type invalid for (k, n)");
    Int denom = factorial(t.zero_paths);
    for (int i = 1; i <= k; ++i) {
        int li = t.cycles.count_part(i);
        int ri = t.paths.count_part(i);
        Int p_i;
        mpz_ui_pow_ui(p_i.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(li));
        denom *= p_i * factorial(li) * factorial(ri);
    }
    return exact_div(factorial(k) * factorial(n - k), denom, "sphere_size");
}

Injection class_representative(const CyclePathType& t, int k, int n) {
    if (!t.valid_for(k, n)) throw std::invalid_argument("class_representative: type invalid for (k, n)");
    std::vector<int> w(static_cast<std::size_t>(k), 0);
    int pos = 1, fresh = k + 1;
    for (int c : t.cycles.parts()) {
        for (int off = 0; off < c; ++off)
            w[static_cast<std::size_t>(pos + off - 1)] = pos + (off + 1) % c;
        pos += c;
    }
    for (int p : t.paths.parts()) {
        for (int off = 0; off + 1 < p; ++off)
            w[static_cast<std::size_t>(pos + off - 1)] = pos + off + 1;
        w[static_cast<std::size_t>(pos + p - 2 + 1 - 1)] = fresh++;
        pos += p;
    }
    return {std::move(w), n};
}

}  // namespace injscheme
