#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "injscheme/character_table.hpp"
#include "injscheme/injection.hpp"
#include "injscheme/sn_character.hpp"

namespace injscheme {

namespace {

// Right nullspace basis over the rationals, by Gauss-Jordan elimination.
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<int> pivot_col_of_row;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(pr)]);
        Rat inv = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (int j = c; j < cols; ++j) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            Rat f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (f == 0) continue;
            for (int j = c; j < cols; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        pivot_col_of_row.push_back(c);
        ++r;
    }
    std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
    for (int c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = 1;
    std::vector<std::vector<Rat>> basis;
    for (int free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[static_cast<std::size_t>(free_c)]) continue;
        std::vector<Rat> v(static_cast<std::size_t>(cols), Rat(0));
        v[static_cast<std::size_t>(free_c)] = 1;
        for (int pr = 0; pr < static_cast<int>(pivot_col_of_row.size()); ++pr)
            v[static_cast<std::size_t>(pivot_col_of_row[static_cast<std::size_t>(pr)])] =
                -m[static_cast<std::size_t>(pr)][static_cast<std::size_t>(free_c)];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<int> extend_to_permutation(const Injection& rep) {
    const int k = rep.k(), n = rep.n();
    std::vector<int> sigma(static_cast<std::size_t>(n), 0);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= k; ++i) {
        sigma[static_cast<std::size_t>(i - 1)] = rep(i);
        used[static_cast<std::size_t>(rep(i))] = 1;
    }
    int next = 1;
    for (int i = k + 1; i <= n; ++i) {
        while (used[static_cast<std::size_t>(next)]) ++next;
        sigma[static_cast<std::size_t>(i - 1)] = next;
        used[static_cast<std::size_t>(next)] = 1;
    }
    return sigma;
}

}  // namespace

struct ProjectionOracle::Impl {
    int k, n;
    long long cap;
    Int group_size;
    SnCharacters sn_k, sn_n;
    mutable std::map<std::string, std::vector<std::vector<long long>>> hist_by_class;

    Impl(int k_, int n_, long long cap_)
        : k(k_), n(n_), cap(cap_), group_size(factorial(k_) * factorial(n_ - k_)), sn_k(k_), sn_n(n_) {
        if (k < 0 || k > n) throw std::invalid_argument("ProjectionOracle: need 0 <= k <= n");
        if (group_size > Int(static_cast<long>(cap))) throw BudgetError(group_size, static_cast<long>(cap));
    }

    // Counts, over the stabilizer coset of a representative with trivial
    // domain part, the joint cycle types of the S_k factor and of the
    // product that chi is evaluated on.
    const std::vector<std::vector<long long>>& histogram(const CyclePathType& cls) const {
        std::string key = cls.to_string();
        if (auto it = hist_by_class.find(key); it != hist_by_class.end()) return it->second;

        std::vector<int> sigma = extend_to_permutation(class_representative(cls, k, n));
        std::vector<int> sigma_inv(static_cast<std::size_t>(n));
        for (int x = 1; x <= n; ++x)
            sigma_inv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(x - 1)] - 1)] = x;

        std::vector<std::vector<long long>> hist(sn_k.classes().size(),
                                                 std::vector<long long>(sn_n.classes().size(), 0));
        std::vector<int> k1(static_cast<std::size_t>(k)), k2(static_cast<std::size_t>(n - k));
        for (int i = 0; i < k; ++i) k1[static_cast<std::size_t>(i)] = i + 1;
        std::vector<int> h1(static_cast<std::size_t>(n)), g(static_cast<std::size_t>(n));
        do {
            int t1 = sn_k.class_index(cycle_type(k1));
            for (int x = 1; x <= k; ++x)
                h1[static_cast<std::size_t>(x - 1)] =
                    sigma_inv[static_cast<std::size_t>(k1[static_cast<std::size_t>(x - 1)] - 1)];
            for (int x = k + 1; x <= n; ++x)
                h1[static_cast<std::size_t>(x - 1)] = sigma_inv[static_cast<std::size_t>(x - 1)];
            for (int i = 0; i < n - k; ++i) k2[static_cast<std::size_t>(i)] = k + 1 + i;
            do {
                for (int x = 1; x <= k; ++x)
                    g[static_cast<std::size_t>(x - 1)] = h1[static_cast<std::size_t>(x - 1)];
                for (int x = k + 1; x <= n; ++x)
                    g[static_cast<std::size_t>(x - 1)] =
                        h1[static_cast<std::size_t>(k2[static_cast<std::size_t>(x - k - 1)] - 1)];
                ++hist[static_cast<std::size_t>(t1)]
                      [static_cast<std::size_t>(sn_n.class_index(cycle_type(g)))];
            } while (std::next_permutation(k2.begin(), k2.end()));
        } while (std::next_permutation(k1.begin(), k1.end()));
        return hist_by_class.emplace(std::move(key), std::move(hist)).first->second;
    }

    Rat value(const IrrepLabel& label, const CyclePathType& cls) const {
        if (!cls.valid_for(k, n)) throw std::invalid_argument("ProjectionOracle: invalid class");
        const auto& hist = histogram(cls);
        Int num = 0;
        for (std::size_t a = 0; a < sn_k.classes().size(); ++a) {
            Int chi_a = sn_k.chi(label.mu, sn_k.classes()[a]);
            if (chi_a == 0) continue;
            for (std::size_t b = 0; b < sn_n.classes().size(); ++b) {
                if (hist[a][b] == 0) continue;
                num += chi_a * sn_n.chi(label.lambda, sn_n.classes()[b]) *
                       Int(static_cast<long>(hist[a][b]));
            }
        }
        return make_rat(num, group_size);
    }
};

ProjectionOracle::ProjectionOracle(int k, int n, long long cap)
    : impl_(std::make_shared<Impl>(k, n, cap)) {}

Rat ProjectionOracle::value(const IrrepLabel& label, const CyclePathType& cls) const {
    return impl_->value(label, cls);
}

Rat spherical_oracle(const IrrepLabel& label, const CyclePathType& cls, int k, int n,
                     long long cap) {
    return ProjectionOracle(k, n, cap).value(label, cls);
}

ValidationReport validate(const CharacterTable& ct, ValidateLevel level, const RunConfig& config) {
    ValidationReport report;
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        report.checks.push_back({name, pass, detail});
    };
    const int d = ct.size();
    const int k = ct.k, n = ct.n;

    {
        auto expected = enumerate_classes(k, n);
        bool ok = static_cast<int>(expected.size()) == d &&
                  static_cast<int>(ct.irreps.size()) == d &&
                  static_cast<int>(ct.valencies.size()) == d &&
                  static_cast<int>(ct.p.size()) == d && ct.point_count == injection_count(k, n);
        std::string where;
        for (int j = 0; ok && j < d; ++j) {
            const auto sj = static_cast<std::size_t>(j);
            if (!(ct.classes[sj] == expected[sj]) || ct.valencies[sj] != sphere_size(ct.classes[sj], k, n) ||
                static_cast<int>(ct.p[sj].size()) != d) {
                ok = false;
                where = "class " + ct.classes[sj].to_string();
            }
        }
        Int vsum = 0, msum = 0;
        for (int j = 0; ok && j < d; ++j) {
            const auto sj = static_cast<std::size_t>(j);
            const auto& ir = ct.irreps[sj];
            if (!(irrep_to_class(ir) == ct.classes[sj]) ||
                ir.multiplicity != syt_count(ir.mu) * syt_count(ir.lambda)) {
                ok = false;
                where = "irrep " + ir.to_string();
            }
            vsum += ct.valencies[sj];
            msum += ir.multiplicity;
        }
        if (ok && (vsum != ct.point_count || msum != ct.point_count)) {
            ok = false;
            where = "valency/multiplicity sums";
        }
        add("structure", ok, where);
    }

    {
        bool ok = true;
        std::string where;
        for (int i = 0; ok && i < d; ++i)
            if (ct.p[static_cast<std::size_t>(i)][0] != 1) {
                ok = false;
                where = "irrep " + ct.irreps[static_cast<std::size_t>(i)].to_string();
            }
        add("identity-column", ok, where);
    }
    {
        bool ok = true;
        std::string where;
        for (int j = 0; ok && j < d; ++j)
            if (ct.p[0][static_cast<std::size_t>(j)] != ct.valencies[static_cast<std::size_t>(j)]) {
                ok = false;
                where = "class " + ct.classes[static_cast<std::size_t>(j)].to_string();
            }
        add("trivial-row", ok, where);
    }
    {
        bool ok = true;
        std::string where;
        for (int i = 0; ok && i < d; ++i)
            for (int j = i; ok && j < d; ++j) {
                Int sum = 0;
                for (int h = 0; h < d; ++h)
                    sum += ct.irreps[static_cast<std::size_t>(h)].multiplicity *
                           ct.p[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)] *
                           ct.p[static_cast<std::size_t>(h)][static_cast<std::size_t>(j)];
                Int expect = (i == j) ? Int(ct.point_count * ct.valencies[static_cast<std::size_t>(i)]) : Int(0);
                if (sum != expect) {
                    ok = false;
                    where = "columns (" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
        add("column-orthogonality", ok, where);
    }
    {
        bool ok = true;
        std::string where;
        try {
            dual_table(ct);
        } catch (const IntegrityError& e) {
            ok = false;
            where = e.what();
        }
        add("dual-identity", ok, where);
    }
    {
        bool ok = true;
        std::string where;
        try {
            intersection_numbers(ct);
        } catch (const IntegrityError& e) {
            ok = false;
            where = e.what();
        }
        add("intersection-numbers", ok, where);
    }

    if (level != ValidateLevel::bruteforce) return report;

    {
        Int cost = factorial(k) * factorial(n - k);
        if (cost > Int(static_cast<long>(config.bruteforce_cap))) {
            add("projection-oracle", true, "skipped: k!(n-k)! over brute-force cap");
        } else {
            bool ok = true;
            std::string where;
            ProjectionOracle oracle(k, n, config.bruteforce_cap);
            for (int j = 0; ok && j < d; ++j)
                for (int i = 0; ok && i < d; ++i) {
                    Rat expect = make_rat(ct.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                          ct.valencies[static_cast<std::size_t>(j)]);
                    if (oracle.value(ct.irreps[static_cast<std::size_t>(i)],
                                     ct.classes[static_cast<std::size_t>(j)]) != expect) {
                        ok = false;
                        where = "irrep " + ct.irreps[static_cast<std::size_t>(i)].to_string() +
                                ", class " + ct.classes[static_cast<std::size_t>(j)].to_string();
                    }
                }
            add("projection-oracle", ok, where);
        }
    }

    {
        if (ct.point_count > 200) {
            add("adjacency-eigenspaces", true, "skipped: |X| over eigenspace-check cap");
            return report;
        }
        bool ok = true;
        std::string where;
        const int v = static_cast<int>(ct.point_count.get_si());
        auto points = enumerate_injections(k, n);
        std::vector<std::vector<int>> cls_of(static_cast<std::size_t>(v),
                                             std::vector<int>(static_cast<std::size_t>(v)));
        std::map<std::string, int> lookup;
        for (int j = 0; j < d; ++j) lookup[ct.classes[static_cast<std::size_t>(j)].to_string()] = j;
        for (int x = 0; x < v; ++x)
            for (int y = 0; y < v; ++y)
                cls_of[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = lookup.at(
                    classify_pair(points[static_cast<std::size_t>(x)], points[static_cast<std::size_t>(y)])
                        .to_string());

        // Generic integer combination M = sum_j B^j A_j separates the
        // eigenspaces exactly when P's rows are distinct.
        Int max_abs = 1;
        for (const auto& row : ct.p)
            for (const auto& e : row) max_abs = std::max(max_abs, Int(abs(e)));
        Int base = 2 * d * max_abs + 1;
        std::vector<Int> coeff(static_cast<std::size_t>(d));
        coeff[0] = 1;
        for (int j = 1; j < d; ++j) coeff[static_cast<std::size_t>(j)] = coeff[static_cast<std::size_t>(j - 1)] * base;
        std::vector<Int> theta(static_cast<std::size_t>(d), 0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                theta[static_cast<std::size_t>(i)] +=
                    coeff[static_cast<std::size_t>(j)] * ct.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        for (int i = 0; ok && i < d; ++i)
            for (int i2 = i + 1; ok && i2 < d; ++i2)
                if (theta[static_cast<std::size_t>(i)] == theta[static_cast<std::size_t>(i2)]) {
                    ok = false;
                    where = "duplicate rows in P";
                }

        for (int i = 0; ok && i < d; ++i) {
            std::vector<std::vector<Rat>> m(static_cast<std::size_t>(v),
                                            std::vector<Rat>(static_cast<std::size_t>(v), Rat(0)));
            for (int x = 0; x < v; ++x)
                for (int y = 0; y < v; ++y) {
                    m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = Rat(
                        coeff[static_cast<std::size_t>(cls_of[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)])]);
                    if (x == y)
                        m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] -=
                            Rat(theta[static_cast<std::size_t>(i)]);
                }
            auto basis = nullspace(std::move(m));
            if (Int(static_cast<long>(basis.size())) != ct.irreps[static_cast<std::size_t>(i)].multiplicity) {
                ok = false;
                where = "eigenspace dimension for irrep " +
                        ct.irreps[static_cast<std::size_t>(i)].to_string();
                break;
            }
            for (const auto& w : basis) {
                std::vector<std::vector<Rat>> ajw(static_cast<std::size_t>(d),
                                                  std::vector<Rat>(static_cast<std::size_t>(v), Rat(0)));
                for (int x = 0; x < v; ++x)
                    for (int y = 0; y < v; ++y)
                        ajw[static_cast<std::size_t>(
                            cls_of[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)])]
                           [static_cast<std::size_t>(x)] += w[static_cast<std::size_t>(y)];
                for (int j = 0; ok && j < d; ++j)
                    for (int x = 0; ok && x < v; ++x)
                        if (ajw[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)] !=
                            Rat(ct.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                                w[static_cast<std::size_t>(x)]) {
                            ok = false;
                            where = "A_" + ct.classes[static_cast<std::size_t>(j)].to_string() +
                                    " is not scalar on eigenspace of irrep " +
                                    ct.irreps[static_cast<std::size_t>(i)].to_string();
                        }
                if (!ok) break;
            }
        }
        add("adjacency-eigenspaces", ok, where);
    }

    return report;
}

}  // namespace injscheme
