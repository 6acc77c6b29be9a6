#include "injscheme/character_table.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <thread>

#include "injscheme/cover.hpp"
#include "injscheme/injection.hpp"
#include "injscheme/sn_character.hpp"

namespace injscheme {

IrrepLabel make_irrep(const Partition& mu, const Partition& lambda) {
    if (!is_horizontal_strip(lambda, mu))
        throw std::invalid_argument("make_irrep: lambda/mu is not a horizontal strip");
    return {mu, lambda, syt_count(mu) * syt_count(lambda)};
}

CyclePathType irrep_to_class(const IrrepLabel& label) {
    Partition mu_t = label.mu.transpose();
    Partition lam_t = label.lambda.transpose();
    std::vector<int> cycles, paths;
    int zero_paths = 0;
    for (int c = 0; c < lam_t.length(); ++c) {
        int mcol = mu_t.part(c), lcol = lam_t.part(c);
        if (lcol == mcol) {
            cycles.push_back(mcol);
        } else if (lcol == mcol + 1) {
            if (mcol == 0)
                ++zero_paths;
            else
                paths.push_back(mcol);
        } else {
            throw std::invalid_argument("irrep_to_class: not a horizontal-strip pair");
        }
    }
    std::sort(cycles.rbegin(), cycles.rend());
    std::sort(paths.rbegin(), paths.rend());
    return {Partition{std::move(cycles)}, Partition{std::move(paths)}, zero_paths};
}

IrrepLabel class_to_irrep(const CyclePathType& cls, int k, int n) {
    if (!cls.valid_for(k, n)) throw std::invalid_argument("class_to_irrep: type invalid for (k, n)");
    std::vector<int> mu_cols, lam_cols;
    for (int c : cls.cycles.parts()) {
        mu_cols.push_back(c);
        lam_cols.push_back(c);
    }
    for (int p : cls.paths.parts()) {
        mu_cols.push_back(p);
        lam_cols.push_back(p + 1);
    }
    for (int i = 0; i < cls.zero_paths; ++i) lam_cols.push_back(1);
    std::sort(mu_cols.rbegin(), mu_cols.rend());
    std::sort(lam_cols.rbegin(), lam_cols.rend());
    return make_irrep(Partition{std::move(mu_cols)}.transpose(),
                      Partition{std::move(lam_cols)}.transpose());
}

int CharacterTable::class_index(const CyclePathType& cls) const {
    for (int j = 0; j < size(); ++j)
        if (classes[static_cast<std::size_t>(j)] == cls) return j;
    throw std::invalid_argument("class_index: unknown class " + cls.to_string());
}

Int character_table_cost(int k, int n) {
    Int d = static_cast<long>(enumerate_classes(k, n).size());
    return k == n ? d * d : d * injection_count(k, n);
}

namespace {

CharacterTable table_skeleton(int k, int n) {
    CharacterTable ct;
    ct.k = k;
    ct.n = n;
    ct.point_count = injection_count(k, n);
    ct.classes = enumerate_classes(k, n);
    for (const auto& cls : ct.classes) {
        ct.valencies.push_back(sphere_size(cls, k, n));
        ct.irreps.push_back(class_to_irrep(cls, k, n));
    }
    ct.p.assign(ct.classes.size(), std::vector<Int>(ct.classes.size(), 0));
    return ct;
}

void check_budget(int k, int n, const RunConfig& config) {
    Int cost = character_table_cost(k, n);
    Int budget = static_cast<long>(config.budget);
    if (cost > budget) throw BudgetError(cost, budget);
}

CharacterTable assemble_murnaghan_nakayama(int k, int n) {
    CharacterTable ct = table_skeleton(k, n);
    SnCharacters sn(n);
    const int d = ct.size();
    for (int i = 0; i < d; ++i) {
        const Partition& lambda = ct.irreps[static_cast<std::size_t>(i)].lambda;
        Int dim = syt_count(lambda);
        for (int j = 0; j < d; ++j) {
            const Partition& cls = ct.classes[static_cast<std::size_t>(j)].cycles;
            Int num = sn.class_size(cls) * sn.chi(lambda, cls);
            try {
                ct.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    exact_div(num, dim, "group-scheme eigenvalue");
            } catch (const std::runtime_error&) {
                throw IntegrityError("non-integral eigenvalue at irrep " + lambda.to_string() +
                                     ", class " + cls.to_string());
            }
        }
    }
    return ct;
}

CharacterTable assemble_combinatorial(int k, int n, const RunConfig& config) {
    CharacterTable ct = table_skeleton(k, n);
    const int d = ct.size();
    if (ct.point_count.fits_slong_p() == 0)
        throw BudgetError(ct.point_count, static_cast<long>(config.budget));
    const std::size_t count = static_cast<std::size_t>(ct.point_count.get_si());

    // One pass to classify every injection, then one kernel sweep per irrep.
    std::map<std::string, int> class_lookup;
    for (int j = 0; j < d; ++j) class_lookup[ct.classes[static_cast<std::size_t>(j)].to_string()] = j;
    std::vector<std::uint16_t> class_of(count);
    std::vector<std::int8_t> words(count * static_cast<std::size_t>(k));
    const Injection id = Injection::identity(k, n);
    std::size_t idx = 0;
    for_each_injection(k, n, [&](const std::vector<int>& w) {
        for (int i = 0; i < k; ++i)
            words[idx * static_cast<std::size_t>(k) + static_cast<std::size_t>(i)] =
                static_cast<std::int8_t>(w[static_cast<std::size_t>(i)]);
        class_of[idx] = static_cast<std::uint16_t>(
            class_lookup.at(classify_pair(Injection(w, n), id).to_string()));
        ++idx;
    });

    int threads = config.threads > 0 ? config.threads
                                     : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, d));
    auto run_rows = [&](int first) {
        for (int i = first; i < d; i += threads) {
            auto [s, t] = canonical_pair(ct.irreps[static_cast<std::size_t>(i)].mu,
                                         ct.irreps[static_cast<std::size_t>(i)].lambda);
            CoverKernel kernel(s, t);
            std::vector<long long> acc(static_cast<std::size_t>(d), 0);
            for (std::size_t w = 0; w < count; ++w)
                acc[class_of[w]] += kernel.signed_count(&words[w * static_cast<std::size_t>(k)]);
            for (int j = 0; j < d; ++j)
                ct.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    static_cast<long>(acc[static_cast<std::size_t>(j)]);
        }
    };
    if (threads == 1) {
        run_rows(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(run_rows, t);
        for (auto& th : pool) th.join();
    }
    return ct;
}

}  // namespace

CharacterTable character_table(int k, int n, const RunConfig& config) {
    if (k < 1 || k > n) throw std::invalid_argument("character_table: need 1 <= k <= n");
    check_budget(k, n, config);
    return k == n ? assemble_murnaghan_nakayama(k, n) : assemble_combinatorial(k, n, config);
}

CharacterTable character_table_combinatorial(int k, int n, const RunConfig& config) {
    if (k < 1 || k > n) throw std::invalid_argument("character_table: need 1 <= k <= n");
    Int cost = Int(static_cast<long>(enumerate_classes(k, n).size())) * injection_count(k, n);
    if (cost > Int(static_cast<long>(config.budget)))
        throw BudgetError(cost, static_cast<long>(config.budget));
    return assemble_combinatorial(k, n, config);
}

Int eigenvalue(const IrrepLabel& label, const CyclePathType& cls, int k, int n) {
    if (!cls.valid_for(k, n)) throw std::invalid_argument("eigenvalue: class invalid for (k, n)");
    auto [s, t] = canonical_pair(label.mu, label.lambda);
    CoverKernel kernel(s, t);
    const Injection id = Injection::identity(k, n);
    long long total = 0;
    for_each_injection(k, n, [&](const std::vector<int>& w) {
        if (classify_pair(Injection(w, n), id) == cls) total += kernel.signed_count(w.data());
    });
    return static_cast<long>(total);
}

DualTable dual_table(const CharacterTable& ct) {
    const int d = ct.size();
    DualTable dual;
    dual.q.assign(static_cast<std::size_t>(d), std::vector<Rat>(static_cast<std::size_t>(d)));
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i)
            dual.q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                make_rat(ct.irreps[static_cast<std::size_t>(i)].multiplicity *
                             ct.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                         ct.valencies[static_cast<std::size_t>(j)]);
    // P Q = |X| I must hold exactly; a violation means P is not the
    // eigenvalue matrix of a scheme.
    for (int i = 0; i < d; ++i)
        for (int i2 = 0; i2 < d; ++i2) {
            Rat sum = 0;
            for (int j = 0; j < d; ++j)
                sum += Rat(ct.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                       dual.q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i2)];
            Rat expect = (i == i2) ? Rat(ct.point_count) : Rat(0);
            if (sum != expect)
                throw IntegrityError("dual_table: P*Q != |X|*I at (" + std::to_string(i) + "," +
                                     std::to_string(i2) + ")");
        }
    return dual;
}

std::vector<std::vector<std::vector<Int>>> intersection_numbers(const CharacterTable& ct) {
    const int d = ct.size();
    const std::size_t sd = static_cast<std::size_t>(d);
    std::vector<std::vector<std::vector<Int>>> p(
        sd, std::vector<std::vector<Int>>(sd, std::vector<Int>(sd)));
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j)
            for (int m = 0; m < d; ++m) {
                Int num = 0;
                for (int h = 0; h < d; ++h)
                    num += ct.irreps[static_cast<std::size_t>(h)].multiplicity *
                           ct.p[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)] *
                           ct.p[static_cast<std::size_t>(h)][static_cast<std::size_t>(j)] *
                           ct.p[static_cast<std::size_t>(h)][static_cast<std::size_t>(m)];
                Int den = ct.point_count * ct.valencies[static_cast<std::size_t>(m)];
                Int value;
                try {
                    value = exact_div(num, den, "intersection number");
                } catch (const std::runtime_error&) {
                    throw IntegrityError("intersection number p_{" + std::to_string(i) + "," +
                                         std::to_string(j) + "}(" + std::to_string(m) +
                                         ") is not an integer");
                }
                if (value < 0)
                    throw IntegrityError("intersection number p_{" + std::to_string(i) + "," +
                                         std::to_string(j) + "}(" + std::to_string(m) +
                                         ") is negative");
                p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] = value;
                p[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] = std::move(value);
            }
    return p;
}

bool ValidationReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

}  // namespace injscheme
