#include "hampack/bounds.hpp"

#include <stdexcept>

namespace hampack {

namespace {

Integer ball_volume(int n, int q, int r)
{
    Integer v = 0;
    for (int i = 0; i <= r; ++i)
        v += binomial(n, i) * pow_int(q - 1, static_cast<unsigned>(i));
    return v;
}

void check_common(int n, int lambda)
{
    if (n < 1)
        throw std::invalid_argument("length must be positive");
    if (lambda < 1)
        throw std::invalid_argument("lambda must be positive");
}

BoundResult finish(Rational exact, std::string id)
{
    BoundResult b;
    b.exact = std::move(exact);
    b.value = floor_of(b.exact);
    b.formula_id = std::move(id);
    return b;
}

}  // namespace

BoundResult sphere_packing_bound(int n, int q, int lambda, int r)
{
    check_common(n, lambda);
    if (q < 2)
        throw std::invalid_argument("alphabet size must be at least 2");
    if (r < 0 || r > n)
        throw std::invalid_argument("radius must lie in [0,n]");
    Rational v = Rational(Integer(lambda) * pow_int(q, static_cast<unsigned>(n))) / Rational(ball_volume(n, q, r));
    return finish(v, "sphere_packing: floor(lambda q^n / |B_r|)");
}

bool regular_graph_bound_vacuous(const SpectrumBoundInput &in)
{
    return Rational(in.degree * in.lambda) < in.alpha * in.alpha;
}

Rational regular_graph_bound(const SpectrumBoundInput &in)
{
    if (in.alpha < 0)
        throw std::invalid_argument("alpha must be nonnegative");
    if (in.alpha >= Rational(in.degree))
        throw std::domain_error("regular_graph_bound needs alpha < degree");
    Rational r(in.degree);
    Rational a2 = in.alpha * in.alpha;
    return (r * in.lambda - a2) / (r * r - a2);
}

BoundResult hamming_eigenvalue_bound(int n, int q, int lambda)
{
    check_common(n, lambda);
    if (q < 2)
        throw std::invalid_argument("alphabet size must be at least 2");
    SpectrumBoundInput in;
    in.degree = Integer(n) * (q - 1);
    in.lambda = lambda;
    in.num_vertices = pow_int(q, static_cast<unsigned>(n));
    long alpha = -1;
    for (int i = 0; i <= n; ++i) {
        long t = std::labs(static_cast<long>(-n + q * i));
        if (alpha < 0 || t < alpha)
            alpha = t;
    }
    in.alpha = alpha;
    BoundResult b;
    b.formula_id = "hamming_eigenvalue: regular-graph bound with r = n(q-1), alpha = min_i |qi - n|";
    if (q < 2 * n)
        b.assumptions.emplace_back("outside hypothesis q >= 2n");
    if (lambda != n)
        b.assumptions.emplace_back("lambda != n: optimality of MDS codes not implied");
    if (in.alpha >= Rational(in.degree) || regular_graph_bound_vacuous(in)) {
        b.vacuous = true;
        b.assumptions.emplace_back("vacuous: alpha = " + std::to_string(alpha)
                                   + (in.alpha >= Rational(in.degree) ? " >= degree" : ", alpha^2 > r lambda"));
        b.exact = Rational(in.num_vertices * lambda);
        b.value = in.num_vertices * lambda;
        return b;
    }
    b.exact = regular_graph_bound(in) * Rational(in.num_vertices);
    b.value = floor_of(b.exact);
    return b;
}

MdsInterval mds_interval(int n, int q)
{
    check_common(n, 1);
    if (q < 2)
        throw std::invalid_argument("alphabet size must be at least 2");
    MdsInterval m;
    m.lower = pow_int(q, static_cast<unsigned>(n - 1));
    m.upper = Rational(pow_int(q, static_cast<unsigned>(n)) * n) / Rational(Integer(n) * (q - 1) + 1);
    return m;
}

BoundResult lp_bound(int n, int lambda)
{
    check_common(n, lambda);
    if (n < 2)
        throw std::invalid_argument("lp_bound needs n >= 2");
    const int sigma = lambda % 2;
    const Integer p = pow_int(2, static_cast<unsigned>(n));
    const Integer l(lambda), m(n);
    switch (n % 4) {
    case 0:
        return finish(Rational(p * (l * m + 3 * l - 4 + sigma)) / Rational(m * (m + 4)),
                      "lp_bound(a): n = 0 mod 4, 2^n (lambda n + 3 lambda - 4 + sigma) / (n (n+4))");
    case 1:
        return finish(Rational(p * (l * m + l - 2)) / Rational((m - 1) * (m + 3)),
                      "lp_bound(b): n = 1 mod 4, 2^n (lambda n + lambda - 2) / ((n-1)(n+3))");
    case 2:
        return finish(Rational(p * (l * m + l - 2 + sigma)) / Rational(m * (m + 2)),
                      "lp_bound(c): n = 2 mod 4, 2^n (lambda n + lambda - 2 + sigma) / (n (n+2))");
    default:
        return finish(Rational(p * l) / Rational(m + 1), "lp_bound(d): n = 3 mod 4, 2^n lambda / (n+1)");
    }
}

BoundResult lp_bound_even(int n, int lambda)
{
    check_common(n, lambda);
    if (n < 3)
        throw std::invalid_argument("lp_bound_even needs n >= 3");
    const int sigma = lambda % 2;
    const Integer p = pow_int(2, static_cast<unsigned>(n - 1));
    const Integer l(lambda), m(n);
    switch (n % 4) {
    case 1:
        return finish(Rational(p * (l * m + 2 * l - 4 + sigma)) / Rational((m - 1) * (m + 3)),
                      "lp_bound_even(a): n = 1 mod 4, 2^(n-1) (lambda n + 2 lambda - 4 + sigma) / ((n-1)(n+3))");
    case 2:
        return finish(Rational(p * (l * m - 2)) / Rational((m - 2) * (m + 2)),
                      "lp_bound_even(b): n = 2 mod 4, 2^(n-1) (lambda n - 2) / ((n-2)(n+2))");
    case 3:
        return finish(Rational(p * (l * m - 2 + sigma)) / Rational((m - 1) * (m + 1)),
                      "lp_bound_even(c): n = 3 mod 4, 2^(n-1) (lambda n - 2 + sigma) / ((n-1)(n+1))");
    default:
        return finish(Rational(p * l) / Rational(m), "lp_bound_even(d): n = 0 mod 4, 2^(n-1) lambda / n");
    }
}

BoundResult unitrade_min_cardinality(int n, bool extended, bool bipartite)
{
    if (n < 1)
        throw std::invalid_argument("length must be positive");
    BoundResult b;
    if (extended) {
        if (n % 2)
            throw std::invalid_argument("nonempty extended unitrades need even length");
        b.value = pow_int(2, static_cast<unsigned>(n / 2));
        b.formula_id = "unitrade_min(extended): 2^(n/2)";
    } else {
        if (n % 2 == 0)
            throw std::invalid_argument("nonempty 1-perfect unitrades need odd length");
        b.value = pow_int(2, static_cast<unsigned>((n + 1) / 2));
        b.formula_id = "unitrade_min: 2^((n+1)/2)";
    }
    b.exact = Rational(b.value);
    if (bipartite)
        b.assumptions.emplace_back("bipartite: attained by the diagonal construction; each half of the "
                                   "corresponding bitrade has half this size");
    return b;
}

ForcedProfile forced_distance_profile(int n, int lambda)
{
    check_common(n, lambda);
    if (n < 3)
        throw std::invalid_argument("forced_distance_profile needs n >= 3");
    if (n % 4 == 0)
        throw std::invalid_argument("forced_distance_profile: n = 0 mod 4 is not an extremal case (a)-(c)");
    ForcedProfile f;
    f.n = n;
    f.lambda = lambda;
    f.lp_case = n % 4 == 1 ? 'a' : (n % 4 == 2 ? 'b' : 'c');
    auto bound = lp_bound_even(n, lambda);
    f.bound_integral = boost::multiprecision::denominator(bound.exact) == 1;
    f.values.emplace_back(0, Integer(1));
    f.values.emplace_back(2, Integer(n * (lambda - 1) / 2));
    if (f.lp_case == 'a')
        f.values.emplace_back(n - 1, Integer(lambda));
    return f;
}

BoundTable applicable_bounds(int n, int q, int lambda, int r, bool even_weight)
{
    BoundTable t;
    t.n = n;
    t.q = q;
    t.lambda = lambda;
    t.r = r;
    t.even_weight = even_weight;
    t.upper.push_back(sphere_packing_bound(n, q, lambda, r));
    if (r == 1) {
        t.upper.push_back(hamming_eigenvalue_bound(n, q, lambda));
        if (q == 2 && !even_weight && n >= 2)
            t.upper.push_back(lp_bound(n, lambda));
        if (q == 2 && even_weight && n >= 3)
            t.upper.push_back(lp_bound_even(n, lambda));
        if (lambda == n) {
            auto m = mds_interval(n, q);
            BoundResult b;
            b.exact = m.upper;
            b.value = floor_of(m.upper);
            b.formula_id = "mds_interval: q^n / (q - 1 + 1/n)";
            t.upper.push_back(b);
        }
        t.conjecture_applies = lambda == n && q >= n && q < 2 * n;
    }
    return t;
}

}  // namespace hampack
