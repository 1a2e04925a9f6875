#include "rydgate/angular.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace rydgate::angular {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

const BigInt& factorial(int n) {
    static std::vector<BigInt> cache{1, 1};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        cache.push_back(cache.back() * static_cast<int>(cache.size()));
    }
    return cache[n];
}

// Arguments arrive as doubled values; they must be even and non-negative
// whenever the selection rules have been checked upstream.
const BigInt& fact2(int twice_n) { return factorial(twice_n / 2); }

// Triangle coefficient Delta(a,b,c) = (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!
BigRat triangle_delta(HalfInt a, HalfInt b, HalfInt c) {
    BigRat num = fact2(a.twice() + b.twice() - c.twice());
    num *= fact2(a.twice() - b.twice() + c.twice());
    num *= fact2(-a.twice() + b.twice() + c.twice());
    return num / fact2(a.twice() + b.twice() + c.twice() + 2);
}

double to_double(const BigRat& r) { return r.convert_to<double>(); }

// value = s * sqrt(p) with s, p exact rationals, p >= 0.
double signed_sqrt_product(const BigRat& s, const BigRat& p) {
    if (s == 0 || p == 0) return 0.0;
    return to_double(s) * std::sqrt(to_double(p));
}

}  // namespace

double clebsch_gordan(const CGKey& k) {
    return clebsch_gordan(k.j1, k.m1, k.j2, k.m2, k.j, k.m);
}

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m) {
    if (j1.twice() < 0 || j2.twice() < 0 || j.twice() < 0)
        throw std::domain_error("clebsch_gordan: negative angular momentum");
    if (!projection_ok(j1, m1) || !projection_ok(j2, m2) || !projection_ok(j, m))
        throw std::domain_error("clebsch_gordan: projection out of range or parity mismatch");

    if (m.twice() != m1.twice() + m2.twice()) return 0.0;
    if (!triangle_ok(j1, j2, j)) return 0.0;

    // Racah's formula. All factorial arguments below are non-negative
    // integers once the checks above pass.
    BigRat pre = BigRat(j.twice() + 1, 1);  // (2j+1)
    pre *= triangle_delta(j1, j2, j);
    pre *= fact2(j1.twice() + m1.twice());
    pre *= fact2(j1.twice() - m1.twice());
    pre *= fact2(j2.twice() + m2.twice());
    pre *= fact2(j2.twice() - m2.twice());
    pre *= fact2(j.twice() + m.twice());
    pre *= fact2(j.twice() - m.twice());

    // Sum index k (integer), bounds from non-negativity of all factorials.
    const int t_j12j = (j1.twice() + j2.twice() - j.twice()) / 2;
    const int t_j1m1 = (j1.twice() - m1.twice()) / 2;
    const int t_j2m2 = (j2.twice() + m2.twice()) / 2;
    const int t_a = (j.twice() - j2.twice() + m1.twice()) / 2;  // k >= -t_a
    const int t_b = (j.twice() - j1.twice() - m2.twice()) / 2;  // k >= -t_b

    const int k_min = std::max({0, -t_a, -t_b});
    const int k_max = std::min({t_j12j, t_j1m1, t_j2m2});

    BigRat sum = 0;
    for (int k = k_min; k <= k_max; ++k) {
        BigInt den = factorial(k);
        den *= factorial(t_j12j - k);
        den *= factorial(t_j1m1 - k);
        den *= factorial(t_j2m2 - k);
        den *= factorial(t_a + k);
        den *= factorial(t_b + k);
        BigRat term = BigRat(1) / BigRat(den);
        if (k % 2 != 0) term = -term;
        sum += term;
    }
    return signed_sqrt_product(sum, pre);
}

double six_j(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e, HalfInt f) {
    if (a.twice() < 0 || b.twice() < 0 || c.twice() < 0 || d.twice() < 0 || e.twice() < 0 ||
        f.twice() < 0)
        return 0.0;
    if (!triangle_ok(a, b, c) || !triangle_ok(a, e, f) || !triangle_ok(d, b, f) ||
        !triangle_ok(d, e, c))
        return 0.0;

    BigRat pre = triangle_delta(a, b, c);
    pre *= triangle_delta(a, e, f);
    pre *= triangle_delta(d, b, f);
    pre *= triangle_delta(d, e, c);

    // Racah sum. The four triad sums and three opposite-pair sums are
    // integers for any legal argument set.
    const int s1 = (a.twice() + b.twice() + c.twice()) / 2;
    const int s2 = (a.twice() + e.twice() + f.twice()) / 2;
    const int s3 = (d.twice() + b.twice() + f.twice()) / 2;
    const int s4 = (d.twice() + e.twice() + c.twice()) / 2;
    const int b1 = (a.twice() + b.twice() + d.twice() + e.twice()) / 2;
    const int b2 = (b.twice() + c.twice() + e.twice() + f.twice()) / 2;
    const int b3 = (a.twice() + c.twice() + d.twice() + f.twice()) / 2;

    const int t_min = std::max({s1, s2, s3, s4});
    const int t_max = std::min({b1, b2, b3});

    BigRat sum = 0;
    for (int t = t_min; t <= t_max; ++t) {
        BigInt den = factorial(t - s1);
        den *= factorial(t - s2);
        den *= factorial(t - s3);
        den *= factorial(t - s4);
        den *= factorial(b1 - t);
        den *= factorial(b2 - t);
        den *= factorial(b3 - t);
        BigRat term = BigRat(factorial(t + 1)) / BigRat(den);
        if (t % 2 != 0) term = -term;
        sum += term;
    }
    return signed_sqrt_product(sum, pre);
}

double hf_recoupling(HalfInt I, HalfInt j, HalfInt f, HalfInt j_prime, HalfInt f_prime) {
    const double s = six_j(j, I, f, f_prime, HalfInt(1), j_prime);
    if (s == 0.0) return 0.0;
    const int phase_twice = 2 + I.twice() + f.twice() + j_prime.twice();
    // Legal couplings make the exponent an integer.
    const double phase = (phase_twice / 2) % 2 == 0 ? 1.0 : -1.0;
    return phase * std::sqrt(f.twice() + 1.0) * s;
}

}  // namespace rydgate::angular
