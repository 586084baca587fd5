#include "geometry.hpp"

#include "alternant.hpp"
#include "symmetric.hpp"

namespace hsx {

namespace {

void require_triangle(const Nodes& xs) {
    if (xs.size() != 3) {
        throw ArityError("triangle area needs exactly 3 nodes, got " + std::to_string(xs.size()));
    }
}

// sum_{k=offset}^{N} a_k h_{k-offset}(xs); 0 when the range is empty.
Rational weighted_h_sum(const Poly& p, const Nodes& xs, std::size_t offset) {
    auto deg = p.degree();
    if (!deg || *deg < offset) return Rational(0);
    std::vector<Rational> h = h_all_up_to(*deg - offset, xs);
    Rational sum(0);
    for (std::size_t k = offset; k <= *deg; ++k) {
        const Rational& a = p.coeff(k);
        if (!a.is_zero()) sum += a * h[k - offset];
    }
    return sum;
}

Rational factorial(std::size_t n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(std::move(f));
}

VolumeResult assemble(const CurveSimplexSpec& spec, Rational det) {
    VolumeResult r;
    r.difference_product = difference_product(spec.nodes);
    r.h_sum = weighted_h_sum(spec.poly, spec.nodes, spec.nodes.size() - 1);
    r.parallelepiped_volume = det.abs();
    r.simplex_volume = r.parallelepiped_volume / factorial(spec.nodes.size());
    r.det = std::move(det);
    return r;
}

}  // namespace

Rational signed_area_direct(const Poly& p, const Nodes& xs) {
    require_triangle(xs);
    Rational s = (xs[2] - xs[1]) * p.eval(xs[0]) - (xs[2] - xs[0]) * p.eval(xs[1]) +
                 (xs[1] - xs[0]) * p.eval(xs[2]);
    return s / Rational(2);
}

Rational area_factored(const Poly& p, const Nodes& xs) {
    require_triangle(xs);
    Rational diffs = ((xs[0] - xs[1]) * (xs[0] - xs[2]) * (xs[1] - xs[2])).abs();
    if (diffs.is_zero()) return Rational(0);
    Rational hs = weighted_h_sum(p, xs, 2);
    return diffs * hs.abs() / Rational(2);
}

ExactMatrix curve_matrix(const Poly& p, const Nodes& xs) {
    const std::size_t n = xs.size();
    if (n < 2) throw ArityError("curve matrix needs at least 2 nodes");
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational pw(1);
        for (std::size_t j = 0; j + 1 < n; ++j) {
            m.at(i, j) = pw;
            pw *= xs[i];
        }
        m.at(i, n - 1) = p.eval(xs[i]);
    }
    return m;
}

VolumeResult volume_factored(const CurveSimplexSpec& spec) {
    VolumeResult r = assemble(spec, Rational(0));
    r.det = r.difference_product * r.h_sum;
    r.parallelepiped_volume = r.det.abs();
    r.simplex_volume = r.parallelepiped_volume / factorial(spec.nodes.size());
    return r;
}

VolumeResult volume_direct(const CurveSimplexSpec& spec) {
    return assemble(spec, det_bareiss(curve_matrix(spec.poly, spec.nodes)));
}

}  // namespace hsx
