#include "injscheme/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace injscheme {

namespace {

std::vector<int> checked_distances(std::vector<int> distances, int k) {
    std::sort(distances.begin(), distances.end());
    distances.erase(std::unique(distances.begin(), distances.end()), distances.end());
    if (distances.empty()) throw std::invalid_argument("DistanceSet: empty distance set");
    if (distances.front() < 1 || distances.back() > k)
        throw std::invalid_argument("DistanceSet: distances must lie in 1..k");
    return distances;
}

}  // namespace

DistanceSet DistanceSet::min_distance(int d, int k) {
    if (d < 1 || d > k) throw std::invalid_argument("DistanceSet: need 1 <= d <= k");
    DistanceSet out;
    out.kind = Kind::min_distance;
    for (int i = d; i <= k; ++i) out.distances.push_back(i);
    return out;
}

DistanceSet DistanceSet::equidistant(int d, int k) {
    DistanceSet out;
    out.kind = Kind::equidistant;
    out.distances = checked_distances({d}, k);
    return out;
}

DistanceSet DistanceSet::explicit_set(std::vector<int> distances, int k) {
    DistanceSet out;
    out.kind = Kind::explicit_set;
    out.distances = checked_distances(std::move(distances), k);
    return out;
}

bool DistanceSet::allows(int d) const {
    return std::binary_search(distances.begin(), distances.end(), d);
}

DistanceSet DistanceSet::complement(int k) const {
    std::vector<int> rest;
    for (int d = 1; d <= k; ++d)
        if (!allows(d)) rest.push_back(d);
    return explicit_set(std::move(rest), k);
}

std::string DistanceSet::to_string() const {
    if (kind == Kind::min_distance) return ">=" + std::to_string(distances.front());
    std::string s = "{";
    for (std::size_t i = 0; i < distances.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(distances[i]);
    }
    return s + "}";
}

std::vector<int> allowed_classes(int k, int n, const DistanceSet& d) {
    auto classes = enumerate_classes(k, n);
    std::vector<int> out;
    for (int j = 1; j < static_cast<int>(classes.size()); ++j)
        if (d.allows(class_distance(classes[static_cast<std::size_t>(j)], k))) out.push_back(j);
    return out;
}

std::pair<Rat, std::vector<Rat>> solve_delsarte(const DualTable& q, const std::vector<int>& allowed) {
    const int d = static_cast<int>(q.q.size());
    const int nv = static_cast<int>(allowed.size());
    // Variables are a_j for allowed j; a_0 = 1 is folded into the right
    // hand side: for each irrep i, sum_j a_j Q[j][i] >= -Q[0][i].
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(d),
                                    std::vector<Rat>(static_cast<std::size_t>(nv)));
    std::vector<Rat> b(static_cast<std::size_t>(d));
    std::vector<Rat> c(static_cast<std::size_t>(nv), Rat(1));
    for (int i = 0; i < d; ++i) {
        for (int t = 0; t < nv; ++t)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] =
                -q.q[static_cast<std::size_t>(allowed[static_cast<std::size_t>(t)])][static_cast<std::size_t>(i)];
        b[static_cast<std::size_t>(i)] = q.q[0][static_cast<std::size_t>(i)];
        if (b[static_cast<std::size_t>(i)] < 0)
            throw IntegrityError("solve_delsarte: negative multiplicity row in Q");
    }
    LpResult lp = solve_lp_max(a, b, c);

    std::vector<Rat> dist(static_cast<std::size_t>(d), Rat(0));
    dist[0] = 1;
    for (int t = 0; t < nv; ++t)
        dist[static_cast<std::size_t>(allowed[static_cast<std::size_t>(t)])] = lp.x[static_cast<std::size_t>(t)];
    // The certificate must be feasible for the original system.
    for (int i = 0; i < d; ++i) {
        Rat sum = 0;
        for (int j = 0; j < d; ++j)
            sum += dist[static_cast<std::size_t>(j)] * q.q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        if (sum < 0) throw IntegrityError("solve_delsarte: optimal point violates a Q >= 0");
    }
    return {lp.optimum + 1, std::move(dist)};
}

Int singleton_bound(int n, int k, int d) {
    if (d < 1 || d > k || k > n) throw std::invalid_argument("singleton_bound: need 1 <= d <= k <= n");
    return falling_factorial(n, k - d + 1);
}

Int ball_size(int n, int k, int r) {
    if (r < 0) throw std::invalid_argument("ball_size: negative radius");
    if (k > n) throw std::invalid_argument("ball_size: need k <= n");
    Int total = 0;
    for (int j = 0; j <= std::min(r, k); ++j) {
        Int inner = 0;
        for (int i = 0; i <= j; ++i) {
            Int term = binomial(j, i) * falling_factorial(n - k + j - i, j - i);
            inner += (i % 2 == 0) ? term : -term;
        }
        total += binomial(k, j) * inner;
    }
    return total;
}

Int sphere_packing_bound(int n, int k, int d) {
    if (d < 1) throw std::invalid_argument("sphere_packing_bound: need d >= 1");
    Int ball = ball_size(n, k, (d - 1) / 2);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), injection_count(k, n).get_mpz_t(), ball.get_mpz_t());
    return q;
}

Int trivial_cc_bound(const CharacterTable& ct, const DistanceSet& d) {
    DistanceSet comp = d.complement(ct.k);
    if (comp.distances.empty())
        throw std::invalid_argument("trivial_cc_bound: D must be a proper subset of 1..k");
    DualTable q = dual_table(ct);
    auto [opt, cert] = solve_delsarte(q, allowed_classes(ct.k, ct.n, comp));
    (void)cert;
    // Divide by the integer LP bound of the complement (its floor), not
    // the exact optimum; a code size is an integer, and this is the form
    // the reference tables use.
    return floor_rat(Rat(ct.point_count) / Rat(floor_rat(opt)));
}

bool separating_check(const CharacterTable& ct, const DistanceSet& d) {
    if (d.distances.empty() || d.is_full(ct.k))
        throw std::invalid_argument("separating_check: D must be proper and nonempty");
    DualTable q = dual_table(ct);
    auto [opt_d, cert_d] = solve_delsarte(q, allowed_classes(ct.k, ct.n, d));
    auto [opt_c, cert_c] = solve_delsarte(q, allowed_classes(ct.k, ct.n, d.complement(ct.k)));
    (void)cert_d;
    (void)cert_c;
    return opt_d * opt_c == Rat(ct.point_count);
}

BoundReport delsarte_bound(const CharacterTable& ct, const DistanceSet& d) {
    BoundReport report;
    report.k = ct.k;
    report.n = ct.n;
    report.d = d;
    DualTable q = dual_table(ct);
    auto [opt, cert] = solve_delsarte(q, allowed_classes(ct.k, ct.n, d));
    report.lp_optimum = opt;
    report.lp_bound = floor_rat(opt);
    report.certificate = std::move(cert);
    report.best = report.lp_bound;

    int least = d.distances.front();
    report.singleton = singleton_bound(ct.n, ct.k, least);
    report.sphere_packing = sphere_packing_bound(ct.n, ct.k, least);
    report.best = std::min(report.best, *report.singleton);
    report.best = std::min(report.best, *report.sphere_packing);
    if (d.kind != DistanceSet::Kind::min_distance && !d.is_full(ct.k)) {
        report.trivial_cc = trivial_cc_bound(ct, d);
        report.best = std::min(report.best, *report.trivial_cc);
    }
    return report;
}

BoundReport delsarte_bound(int k, int n, const DistanceSet& d, const RunConfig& config) {
    return delsarte_bound(character_table(k, n, config), d);
}

}  // namespace injscheme
