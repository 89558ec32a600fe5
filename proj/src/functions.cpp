#include "ksl/functions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ksl {

double CFunction::inf_norm() const {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
}

CFunction& CFunction::operator+=(const CFunction& o) {
    for (size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
}
CFunction& CFunction::operator-=(const CFunction& o) {
    for (size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
    return *this;
}
CFunction& CFunction::operator*=(cplx s) {
    for (auto& v : values) v *= s;
    return *this;
}

ExactValue ExactValue::root(long num, long den) {
    num %= den;
    if (num < 0) num += den;
    long g = std::gcd(num, den);
    if (num == 0) return {false, 0, 1};
    return {false, num / g, den / g};
}

cplx ExactValue::embed() const {
    if (is_zero) return 0.0;
    if (num == 0) return 1.0;
    if (2 * num == den) return -1.0;
    if (4 * num == den) return cplx(0.0, 1.0);
    if (4 * num == 3 * den) return cplx(0.0, -1.0);
    double a = 2.0 * M_PI * static_cast<double>(num) / static_cast<double>(den);
    return cplx(std::cos(a), std::sin(a));
}

ExactValue ExactValue::operator*(const ExactValue& o) const {
    if (is_zero || o.is_zero) return zero();
    long l = std::lcm(den, o.den);
    return root(num * (l / den) + o.num * (l / o.den), l);
}

bool ExactValue::operator<(const ExactValue& o) const {
    if (is_zero != o.is_zero) return is_zero;
    if (is_zero) return false;
    return num * o.den < o.num * den;
}

cplx integrate(const DiscreteMeasure& mu, const CFunction& h) {
    cplx acc = 0.0;
    for (const auto& a : mu.atoms) acc += a.weight * h(a.point);
    return acc;
}

std::vector<std::vector<cplx>> kannappan_transform(const FiniteSemigroup& S,
                                                   const InvolutiveAutomorphism& sigma,
                                                   const DiscreteMeasure& mu, const CFunction& f) {
    std::vector<std::vector<cplx>> K(S.n, std::vector<cplx>(S.n, cplx(0.0)));
    for (int x = 0; x < S.n; ++x)
        for (int y = 0; y < S.n; ++y) {
            int xy = S.mul(x, sigma(y));
            cplx acc = 0.0;
            for (const auto& a : mu.atoms) acc += a.weight * f(S.mul(xy, a.point));
            K[x][y] = acc;
        }
    return K;
}

CFunction sigma_pullback(const CFunction& f, const InvolutiveAutomorphism& sigma) {
    CFunction out(f.size());
    for (int x = 0; x < f.size(); ++x) out[x] = f(sigma(x));
    return out;
}

bool is_exponential(const FiniteSemigroup& S, const CFunction& chi, const ToleranceProfile& tol) {
    if (chi.approx_zero(tol.residual_eps)) return false;
    for (int x = 0; x < S.n; ++x)
        for (int y = 0; y < S.n; ++y)
            if (std::abs(chi(S.mul(x, y)) - chi(x) * chi(y)) > tol.residual_eps) return false;
    return true;
}

namespace {

// DFS with constraint propagation chi(xy) = chi(x)chi(y). Candidate values per
// element are 0 and the roots of unity of order dividing that element's
// period (x^(i+p) = x^i forces chi(x)^p = 1 unless chi(x) = 0).
struct ExponentialSearch {
    const FiniteSemigroup& S;
    std::vector<std::vector<ExactValue>> candidates;
    std::vector<std::optional<ExactValue>> val;
    std::vector<std::vector<ExactValue>> found;

    explicit ExponentialSearch(const FiniteSemigroup& s) : S(s), val(s.n) {
        candidates.resize(S.n);
        for (int x = 0; x < S.n; ++x) {
            ElementCycle c = index_period(S, x);
            candidates[x].push_back(ExactValue::zero());
            for (long j = 0; j < c.period; ++j) candidates[x].push_back(ExactValue::root(j, c.period));
        }
    }

    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int a = 0; a < S.n; ++a) {
                if (!val[a]) continue;
                for (int b = 0; b < S.n; ++b) {
                    if (!val[b]) continue;
                    int p = S.mul(a, b);
                    ExactValue v = *val[a] * *val[b];
                    if (val[p]) {
                        if (!(*val[p] == v)) return false;
                    } else {
                        val[p] = v;
                        changed = true;
                    }
                }
            }
        }
        return true;
    }

    void dfs(int x) {
        while (x < S.n && val[x]) ++x;
        if (x == S.n) {
            bool nonzero = false;
            for (const auto& v : val) nonzero = nonzero || !v->is_zero;
            if (!nonzero) return;
            std::vector<ExactValue> row;
            row.reserve(S.n);
            for (const auto& v : val) row.push_back(*v);
            found.push_back(std::move(row));
            return;
        }
        auto saved = val;
        for (const auto& cand : candidates[x]) {
            val[x] = cand;
            if (propagate()) dfs(x + 1);
            val = saved;
        }
    }
};

}  // namespace

std::vector<Exponential> enumerate_exponentials(const FiniteSemigroup& S) {
    ExponentialSearch search(S);
    search.dfs(0);
    std::sort(search.found.begin(), search.found.end());
    search.found.erase(std::unique(search.found.begin(), search.found.end()), search.found.end());
    std::vector<Exponential> out;
    out.reserve(search.found.size());
    for (auto& exact : search.found) {
        Exponential e;
        e.fn = CFunction(S.n);
        for (int x = 0; x < S.n; ++x) e.fn[x] = exact[x].embed();
        e.exact = std::move(exact);
        out.push_back(std::move(e));
    }
    return out;
}

Exponential exponential_pullback(const Exponential& chi, const InvolutiveAutomorphism& sigma) {
    Exponential out;
    const int n = static_cast<int>(chi.exact.size());
    out.fn = CFunction(n);
    out.exact.resize(n);
    for (int x = 0; x < n; ++x) {
        out.exact[x] = chi.exact[sigma(x)];
        out.fn[x] = chi.fn(sigma(x));
    }
    return out;
}

std::optional<AffineFunctionSet> solve_sine_addition_special(
    const FiniteSemigroup& S, const Exponential& chi, const std::optional<ParityConstraint>& parity,
    const std::vector<MomentConstraint>& moments, const ToleranceProfile& tol) {
    const int n = S.n;
    const int rows = n * n + (parity ? n : 0) + static_cast<int>(moments.size());
    ComplexMatrix A(rows, n);
    std::vector<cplx> b(rows, cplx(0.0));
    int r = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y, ++r) {
            A.at(r, S.mul(x, y)) += 1.0;
            A.at(r, x) -= chi.fn(y);
            A.at(r, y) -= chi.fn(x);
        }
    if (parity) {
        for (int x = 0; x < n; ++x, ++r) {
            A.at(r, parity->sigma(x)) += 1.0;
            A.at(r, x) -= static_cast<double>(parity->sign);
        }
    }
    for (const auto& m : moments) {
        for (const auto& a : m.mu.atoms) A.at(r, a.point) += a.weight;
        b[r] = m.target;
        ++r;
    }
    auto sol = solve_affine(A, b, tol);
    if (!sol) return std::nullopt;
    AffineFunctionSet out;
    out.particular = CFunction(sol->particular);
    for (auto& v : sol->basis) out.basis.emplace_back(std::move(v));
    return out;
}

std::vector<CFunction> solve_special_ks_addition(const FiniteSemigroup& S,
                                                 const InvolutiveAutomorphism& sigma,
                                                 const DiscreteMeasure& mu, const Exponential& chi,
                                                 const ToleranceProfile& tol) {
    cplx m = integrate(mu, chi.fn);
    if (std::abs(m) <= tol.residual_eps) throw DegenerateMoment();
    if (!(exponential_pullback(chi, sigma) == chi)) throw SigmaMismatch();
    const int n = S.n;
    ComplexMatrix A(n * n, n);
    int r = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y, ++r) {
            int xy = S.mul(x, sigma(y));
            for (const auto& a : mu.atoms) A.at(r, S.mul(xy, a.point)) += a.weight;
            A.at(r, x) -= m * chi.fn(y);
            A.at(r, y) -= m * chi.fn(x);
        }
    std::vector<CFunction> out;
    for (auto& v : nullspace(A, tol)) out.emplace_back(std::move(v));
    return out;
}

std::optional<DiscreteMeasure> fit_measure(const FiniteSemigroup& S,
                                           const std::vector<FitConstraint>& constraints,
                                           const std::vector<int>& support,
                                           const ToleranceProfile& tol) {
    if (support.empty()) throw std::invalid_argument("empty support");
    for (int z : support)
        if (z < 0 || z >= S.n) throw std::invalid_argument("support index out of range");
    const int k = static_cast<int>(constraints.size());
    const int s = static_cast<int>(support.size());
    ComplexMatrix A(k, s);
    std::vector<cplx> b(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < s; ++j) A.at(i, j) = constraints[i].h(support[j]);
        b[i] = constraints[i].target;
    }
    auto sol = solve_affine(A, b, tol);
    if (!sol) return std::nullopt;
    DiscreteMeasure mu;
    for (int j = 0; j < s; ++j) mu.atoms.push_back({support[j], sol->particular[j]});
    return mu;
}

}  // namespace ksl
