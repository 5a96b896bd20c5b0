#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>

#include "helpers.hpp"
#include "quadrep/error.hpp"
#include "quadrep/maps/catalog.hpp"
#include "quadrep/numeric/hopf.hpp"
#include "quadrep/numeric/quadric.hpp"
#include "quadrep/numeric/topology.hpp"

using namespace quadrep;
using namespace testing;

namespace {

using C = std::complex<double>;

double norm(const RealVector& x) {
  double s = 0.0;
  for (double c : x) s += c * c;
  return std::sqrt(s);
}

// A rational rotation of R^4 with determinant 1: left multiplication by the
// unit quaternion (1/2, 1/2, 1/2, 1/2) followed by right multiplication by
// (3/5, 0, 4/5, 0).
PolyMap rational_rotation() {
  using M = std::array<std::array<Rational, 4>, 4>;
  auto left = [](Rational a, Rational b, Rational c, Rational d) {
    return M{{{a, -b, -c, -d}, {b, a, -d, c}, {c, d, a, -b}, {d, -c, b, a}}};
  };
  auto right = [](Rational a, Rational b, Rational c, Rational d) {
    return M{{{a, -b, -c, -d}, {b, a, d, -c}, {c, -d, a, b}, {d, c, -b, a}}};
  };
  const M L = left(r(1, 2), r(1, 2), r(1, 2), r(1, 2));
  const M R = right(r(3, 5), r(0), r(4, 5), r(0));
  std::vector<Polynomial> comps;
  for (int i = 0; i < 4; ++i) {
    Polynomial row(4);
    for (int j = 0; j < 4; ++j) {
      Rational entry = r(0);
      for (int k = 0; k < 4; ++k) entry = entry + R[i][k] * L[k][j];
      row += var(4, j).scaled(GaussianRational(entry));
    }
    comps.push_back(row);
  }
  const PolyMap rot = PolyMap::from_components(std::move(comps), "rotation");
  return rot.with_certificate(certify_order(rot, 1));
}

}  // namespace

TEST_SUITE("numeric") {
  TEST_CASE("sphere sampling") {
    const auto four = sample_sphere(1, 4, 42);
    REQUIRE(four.size() == 4);
    for (const auto& x : four) CHECK(std::abs(norm(x) - 1.0) < 1e-14);
    CHECK(sample_sphere(3, 0, 1).empty());
    const auto many = sample_sphere(3, 1000, 7);
    for (std::size_t j = 0; j < 4; ++j) {
      double mean = 0.0;
      for (const auto& x : many) mean += x[j];
      CHECK(std::abs(mean / 1000.0) < 0.1);
    }
    CHECK(sample_sphere(2, 5, 9) == sample_sphere(2, 5, 9));
  }

  TEST_CASE("retraction H1") {
    const std::array<double, 3> x{0.6, 0.0, 0.8};
    const RealVector h = retract_H1(QuadricPoint::real(x));
    for (std::size_t j = 0; j < 3; ++j) CHECK(h[j] == doctest::Approx(x[j]).epsilon(1e-15));

    const QuadricPoint p = QuadricPoint::from({std::sqrt(2.0), C(0, 1)});
    CHECK(p.residual < 1e-15);
    const RealVector hp = retract_H1(p);
    CHECK(hp[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(hp[1]) < 1e-15);

    for (const auto& q : sample_quadric(4, 1000, 3)) CHECK(std::abs(norm(retract_H1(q)) - 1.0) < 1e-9);
    CHECK_THROWS_AS(retract_H1(QuadricPoint::from({2.0, 0.0})), Error);
  }

  TEST_CASE("tangent bundle diffeomorphism") {
    const std::array<double, 2> x{0.0, 1.0};
    const TangentPair zero = tangent_bundle_diffeo(QuadricPoint::real(x));
    CHECK(zero.v == RealVector{0.0, 1.0});
    CHECK(zero.w == RealVector{0.0, 0.0});

    const TangentPair t = tangent_bundle_diffeo(QuadricPoint::from({std::sqrt(2.0), C(0, 1)}));
    CHECK(t.v[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(t.v[1]) < 1e-15);
    CHECK(t.w == RealVector{0.0, 1.0});

    for (const auto& q : sample_quadric(5, 200, 4)) {
      const TangentPair vw = tangent_bundle_diffeo(q);
      CHECK(std::abs(norm(vw.v) - 1.0) < 1e-9);
      double dot = 0.0;
      for (std::size_t j = 0; j < 5; ++j) dot += vw.v[j] * vw.w[j];
      CHECK(std::abs(dot) < 1e-9);
      CHECK(from_tangent(vw.v, vw.w).residual < 1e-9);
    }
  }

  TEST_CASE("retraction homotopy") {
    const auto pts = sample_quadric(3, 20, 8);
    for (const auto& p : pts) {
      const QuadricPoint start = retraction_homotopy(p, 0.0);
      for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(start.coords[j] - p.coords[j]) < 1e-15);
      const QuadricPoint end = retraction_homotopy(p, 1.0);
      double x2 = 0.0;
      for (const auto& z : end.coords) {
        CHECK(z.imag() == 0.0);
        x2 += z.real() * z.real();
      }
      CHECK(std::abs(x2 - 1.0) < 1e-12);
    }
    CHECK(retraction_homotopy_residual(3, 100, 11) < 1e-9);
    CHECK_THROWS_AS(retraction_homotopy_residual(1, 10, 11), Error);
  }

  TEST_CASE("quadric residual scans") {
    CHECK(quadric_residual_scan(identity_map(4), 1000).max_residual < 1e-14);
    CHECK(quadric_residual_scan(hopf_pair().f, 10000).max_residual < 1e-12);
    CHECK(quadric_residual_scan(catalog(CatalogTarget::parse("pi_np1:3")), 10000).max_residual < 1e-9);
  }

  TEST_CASE("tilde homotopy blends stay on the quadric") {
    for (const MapPair& p : {hopf_pair(), circle_pair(3), hopf_chain().first})
      for (double t : {0.0, 0.25, 0.5, 0.75, 1.0})
        CHECK(quadric_residual_scan(tilde_homotopy(p.f, p.g, t), 2000).max_residual < 1e-9);
  }

  TEST_CASE("hemisphere check") {
    const PolyMap phi = catalog(CatalogTarget::parse("pi_np1:3"));
    const HemisphereReport rep = hemisphere_check(phi);
    CHECK_MESSAGE(rep.pass, rep.detail);
    CHECK(rep.sign_violations == 0);
    CHECK(rep.equator_max == 0.0);
    CHECK(rep.min_rho > 0);

    // Equator points map to the equator exactly.
    const auto img = phi.evaluate(std::vector<C>{0.5, 0.5, 0.5, 0.5, 0.0});
    CHECK(img[3] == C(0.0));

    Lemma1Triple negated = rho_beta(2);
    negated.rho = -negated.rho;
    const MapPair h = hopf_pair();
    const PolyMap bad = suspend_with_triple(h.f, h.g, 1, negated);
    CHECK(bad.order() == 3u);
    const HemisphereReport neg = hemisphere_check(bad);
    CHECK_FALSE(neg.pass);
    CHECK(neg.sign_violations > 0);

    CHECK_THROWS_AS(hemisphere_check(h.f), Error);
  }

  TEST_CASE("hemisphere lineage from a label") {
    const PolyMap phi = catalog(CatalogTarget::parse("pi_np1:4"));
    const PolyMap bare = PolyMap::from_components(phi.components(), phi.label()).with_certificate(*phi.certificate());
    const auto lineage = suspension_lineage(bare);
    REQUIRE(lineage);
    CHECK(lineage->ell == 2);
    CHECK(lineage->k == 2);
    CHECK(hemisphere_check(bare).pass);
  }

  TEST_CASE("winding degree") {
    CHECK(winding_degree(circle_pair(1).f).degree == 1);
    CHECK(winding_degree(circle_pair(-2).f).degree == -2);
    CHECK(winding_degree(circle_pair(3).f).degree == 3);
    CHECK(winding_degree(circle_pair(3).f).defect < 0.01);
    CHECK_THROWS_AS(winding_degree(identity_map(3)), Error);
  }

  TEST_CASE("degree on S^2") {
    CHECK(degree_s2(identity_map(3)).degree == 1);
    const MapPair c2 = circle_pair(2), cm1 = circle_pair(-1);
    const DegreeResult d2 = degree_s2(suspend(c2.f, c2.g, 1));
    CHECK(d2.degree == 2);
    CHECK(d2.defect < 0.05);
    CHECK(degree_s2(suspend(cm1.f, cm1.g, 1)).degree == -1);
  }

  TEST_CASE("Hopf invariant") {
    const MapPair h = hopf_pair();
    const HopfResult res = hopf_invariant(h.f);
    CHECK(std::abs(res.invariant) == 1);
    CHECK(res.defect < 0.05);
    for (const auto* family : {&res.a, &res.b})
      for (const auto& c : *family) {
        CHECK(c.closed);
        CHECK(c.max_residual < 1e-9);
      }

    const PolyMap rotated = compose_maps(h.f, rational_rotation());
    CHECK(rotated.order() == 2u);
    CHECK(hopf_invariant(rotated).invariant == res.invariant);

    const HopfResult none = hopf_invariant(constant_map(4, 3));
    CHECK(none.invariant == 0);
    CHECK_FALSE(none.curves_found);

    CHECK(std::abs(hopf_invariant(catalog(CatalogTarget::parse("pi3_s2:2"))).invariant) == 2);
  }

  TEST_CASE("even-order nullhomotopy") {
    const NullhomotopyReport r = even_order_nullhomotopy_residual(hopf_pair().f, 11, 1000);
    CHECK(r.max_residual < 1e-9);
    CHECK(r.start_error == 0.0);
    CHECK(r.end_error < 1e-12);
    CHECK_THROWS_AS(even_order_nullhomotopy_residual(catalog(CatalogTarget::parse("pi_np1:3"))), Error);
  }
}
