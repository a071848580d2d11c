#include <cmath>

#include "doctest.h"
#include "spinshape/approx.hpp"
#include "spinshape/ising.hpp"
#include "spinshape/io.hpp"
#include "spinshape/polygon.hpp"
#include "spinshape/prng.hpp"
#include "spinshape/wulff.hpp"
#include "spinshape/zonotope.hpp"
#include "support/oracles.hpp"

using namespace spinshape;

namespace {

Zonotope rational_zonotope(std::vector<std::vector<long long>> gens) {
  std::vector<VecQ> qs;
  for (auto& g : gens) {
    VecQ q(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) q[i] = Rational(g[i]);
    qs.push_back(std::move(q));
  }
  int dim = static_cast<int>(qs.front().size());
  return make_zonotope(dim, std::move(qs));
}

IsingSystem nearest_neighbour_2d() {
  return IsingSystem::from_coefficients(
      2, {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}});
}

}  // namespace

TEST_CASE("support function of zonotopes") {
  Zonotope square = rational_zonotope({{1, 0}, {0, 1}});
  CHECK(support_function(square, VecQ{1, 1}) == 2);

  Zonotope empty;
  empty.dim = 2;
  CHECK(support_function(empty, VecQ{3, 4}) == 0);

  Zonotope three = rational_zonotope({{1, 0}, {0, 1}, {1, 1}});
  CHECK(support_function(three, VecQ{1, 0}) == 2);
}

TEST_CASE("zonotope from measure and back") {
  GeneratingMeasure one =
      GeneratingMeasure::from_exact_classes(2, {{DirectionClass{{1, 0}}, Rational(1, 8)}});
  Zonotope segment = zonotope_from_measure(one);  // lambda = 1/2 -> generator (1,0)
  REQUIRE(segment.generators.size() == 1);
  CHECK(segment.generators[0] == VecQ{1, 0});
  CHECK_FALSE(non_degenerate(segment));

  IsingSystem nn = nearest_neighbour_2d();
  Zonotope w = zonotope_from_measure(nn.generating_measure());
  REQUIRE(w.generators.size() == 2);
  CHECK(w.generators[0] == VecQ{0, 8});  // classes in lexicographic order
  CHECK(w.generators[1] == VecQ{8, 0});
  Rng rng(5);
  for (int t = 0; t < 16; ++t) {
    VecQ z = oracles::random_rational_vector(rng, 2);
    CHECK(support_function(w, z) == nn.surface_tension(z));
  }

  CHECK(zonotope_from_measure(GeneratingMeasure(2)).generators.empty());
}

TEST_CASE("measure from zonotope") {
  Zonotope g34 = rational_zonotope({{3, 4}});
  GeneratingMeasure m = measure_from_zonotope(g34);
  REQUIRE(m.classes().size() == 1);
  CHECK(m.classes()[0].direction.primitive == VecI{3, 4});
  CHECK(m.classes()[0].s == Rational(1, 8));
  CHECK(m.classes()[0].lambda == doctest::Approx(2.5));  // ||(3,4)|| / 2

  Zonotope parallel = rational_zonotope({{1, 0}, {2, 0}});
  GeneratingMeasure pm = measure_from_zonotope(parallel);
  REQUIRE(pm.classes().size() == 1);
  CHECK(pm.classes()[0].lambda == doctest::Approx(1.5));

  ZonotopeD irr;
  irr.dim = 2;
  irr.generators = {{1.0, std::sqrt(2.0)}};
  CHECK_THROWS_WITH_AS(static_cast<void>(measure_from_zonotope(irr, 1000, 1e-12)),
                       "not a rational zonotope", std::invalid_argument);
}

TEST_CASE("round trip through measure merges parallel generators") {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    int d = 2 + static_cast<int>(rng.next_below(2));
    std::vector<VecQ> gens;
    int count = 1 + static_cast<int>(rng.next_below(4));
    for (int g = 0; g < count; ++g) {
      VecQ v(d);
      bool zero = true;
      for (int i = 0; i < d; ++i) {
        v[i] = Rational(static_cast<long long>(rng.next_below(9)) - 4);
        zero &= v[i] == 0;
      }
      if (zero) {
        --g;
        continue;
      }
      gens.push_back(std::move(v));
    }
    Zonotope z = make_zonotope(d, gens);
    GeneratingMeasure m = measure_from_zonotope(z);
    Zonotope z2 = zonotope_from_measure(m);
    GeneratingMeasure m2 = measure_from_zonotope(z2);
    CHECK(m == m2);
    Rng dirs(trial);
    for (int t = 0; t < 20; ++t) {
      VecQ dir = oracles::random_rational_vector(dirs, d);
      CHECK(support_function(z, dir) == support_function(z2, dir));
    }
  }
}

TEST_CASE("zonotope volume") {
  Zonotope cube3 = rational_zonotope({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(volume(cube3) == 8);

  Zonotope hexagen = rational_zonotope({{1, 0}, {0, 1}, {1, 1}});
  CHECK(volume(hexagen) == 12);
  // Monte-Carlo membership oracle (facet-normal test), 1% tolerance
  double mc = oracles::monte_carlo_zonogon_volume({{1, 0}, {0, 1}, {1, 1}}, 1000000, 99);
  CHECK(std::abs(mc - 12.0) / 12.0 < 0.01);

  Zonotope single = rational_zonotope({{2, 1}});
  CHECK(volume(single) == 0);

  // scaling by t multiplies the volume by t^d
  Zonotope scaled = rational_zonotope({{3, 0}, {0, 3}, {3, 3}});
  CHECK(volume(scaled) == 12 * 9);
}

TEST_CASE("polygon_2d zonogon walk") {
  Zonotope square = rational_zonotope({{1, 0}, {0, 1}});
  Polygon p = polygon_2d(square);
  REQUIRE(p.vertices.size() == 4);
  CHECK(polygon_area(p) == 4);
  // centrally symmetric and CCW
  CHECK(p.vertices[0] == VecQ{-1, -1});
  CHECK(p.vertices[2] == VecQ{1, 1});

  Zonotope hexagen = rational_zonotope({{1, 0}, {0, 1}, {1, 1}});
  Polygon hex = polygon_2d(hexagen);
  CHECK(hex.vertices.size() == 6);
  CHECK(polygon_area(hex) == volume(hexagen));  // shoelace equals the volume op, exactly

  Zonotope degenerate = rational_zonotope({{2, 0}});
  CHECK_THROWS_AS(static_cast<void>(polygon_2d(degenerate)), std::domain_error);

  Rng rng(15);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<VecQ> gens;
    for (int g = 0; g < 3; ++g)
      gens.push_back(VecQ{oracles::random_rational(rng), oracles::random_rational(rng)});
    Zonotope z;
    z.dim = 2;
    for (auto& v : gens)
      if (!(v[0] == 0 && v[1] == 0)) z.generators.push_back(v);
    if (!non_degenerate(z)) continue;
    Polygon poly = polygon_2d(z);
    CHECK(polygon_area(poly) == volume(z));
  }
}

TEST_CASE("wulff_shape_2d recovers the coordinate square") {
  auto phi = [](const VecD& z) { return 8.0 * (std::abs(z[0]) + std::abs(z[1])); };
  PolygonD shape = wulff_shape_2d(phi, 360);
  Zonotope square = rational_zonotope({{8, 0}, {0, 8}});
  PolygonD exact = to_double(polygon_2d(square));
  CHECK(hausdorff_distance(shape, exact, 720) <= 0.01);

  auto iso = [](const VecD& z) { return norm2(z); };
  PolygonD disk = wulff_shape_2d(iso, 720);
  CHECK(polygon_area(disk) == doctest::Approx(std::numbers::pi).epsilon(1e-3));

  auto bad = [](const VecD& z) { return std::max(0.0, std::abs(z[0]) - std::abs(z[1])); };
  CHECK_THROWS_AS(static_cast<void>(wulff_shape_2d(bad, 90)), std::domain_error);
}

TEST_CASE("wulff_shape_2d self-consistency with zonogon support functions") {
  Rng rng(25);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<VecQ> gens;
    for (int g = 0; g < 3; ++g) {
      VecQ v{Rational(1 + static_cast<long long>(rng.next_below(4))),
             Rational(static_cast<long long>(rng.next_below(7)) - 3)};
      gens.push_back(std::move(v));
    }
    gens.push_back(VecQ{Rational(0), Rational(1 + static_cast<long long>(rng.next_below(3)))});
    Zonotope z = make_zonotope(2, gens);
    REQUIRE(non_degenerate(z));
    Zonotope zc = z;
    auto phi = [&zc](const VecD& dir) { return support_function(zc, dir); };
    PolygonD exact = to_double(polygon_2d(z));
    // Faces whose normals fall between samples stick out by up to
    // (edge half-length) * tan(pi / n), so the error is linear in 1/n.
    double coarse = hausdorff_distance(wulff_shape_2d(phi, 720), exact, 720);
    double fine = hausdorff_distance(wulff_shape_2d(phi, 2880), exact, 720);
    CHECK(coarse <= 0.03);
    CHECK(fine < coarse);
    CHECK(fine <= 0.0075);
  }
}

TEST_CASE("hausdorff distance") {
  Zonotope a = rational_zonotope({{1, 0}, {0, 1}});
  CHECK(hausdorff_distance(a, a, 128) == 0);

  Zonotope b = rational_zonotope({{2, 0}, {0, 2}});
  CHECK(hausdorff_distance(a, b, 128) == doctest::Approx(std::sqrt(2.0)));

  Zonotope segment = rational_zonotope({{1, 0}});
  CHECK(hausdorff_distance(segment, a, 128) == doctest::Approx(1.0));

  // triangle inequality on a shared sample set, and monotone refinement
  Zonotope c = rational_zonotope({{1, 1}, {1, -1}});
  double ab = hausdorff_distance(a, b, 256);
  double bc = hausdorff_distance(b, c, 256);
  double ac = hausdorff_distance(a, c, 256);
  CHECK(ac <= ab + bc + 1e-12);
  CHECK(hausdorff_distance(a, c, 64) <= hausdorff_distance(a, c, 512) + 1e-12);
}

TEST_CASE("perimeter energy of polygons") {
  auto phi_l1 = [](const VecD& z) { return 8.0 * (std::abs(z[0]) + std::abs(z[1])); };
  Zonotope square3 = rational_zonotope({{3, 0}, {0, 3}});  // side 6
  PolygonD p = to_double(polygon_2d(square3));
  CHECK(perimeter_energy_polygon(phi_l1, p) == doctest::Approx(64.0 * 3));

  auto iso = [](const VecD& z) { return norm2(z); };
  Zonotope unit = rational_zonotope({{1, 0}, {0, 1}});  // side 2
  CHECK(perimeter_energy_polygon(iso, to_double(polygon_2d(unit))) == doctest::Approx(8.0));
}

TEST_CASE("wulff identity: F(W) = 2 |W| exactly for rational zonogons") {
  Rng rng(35);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<VecQ> gens;
    int count = 2 + static_cast<int>(rng.next_below(3));
    for (int g = 0; g < count; ++g) {
      VecQ v{oracles::random_rational(rng), oracles::random_rational(rng)};
      if (v[0] == 0 && v[1] == 0) v[0] = 1;
      gens.push_back(std::move(v));
    }
    Zonotope z = make_zonotope(2, gens);
    if (!non_degenerate(z)) continue;
    Polygon w = polygon_2d(z);
    Zonotope zc = z;
    std::function<Rational(const VecQ&)> f = [&zc](const VecQ& dir) {
      return support_function(zc, dir);
    };
    CHECK(perimeter_energy_polygon(f, w) == 2 * polygon_area(w));
  }
}

TEST_CASE("directed wulff shapes") {
  DirectedIsingSystem east = DirectedIsingSystem::from_coefficients(2, {{{1, 0}, 1}});
  auto [seg, t1] = directed_wulff(east);
  REQUIRE(seg.generators.size() == 1);
  CHECK(seg.generators[0] == VecQ{2, 0});  // centered half of [0,(4,0)]
  CHECK(t1 == VecQ{2, 0});

  DirectedIsingSystem corner =
      DirectedIsingSystem::from_coefficients(2, {{{1, 0}, 1}, {{0, 1}, 1}});
  auto [sq, t2] = directed_wulff(corner);
  CHECK(t2 == VecQ{2, 2});
  Rng rng(45);
  for (int t = 0; t < 16; ++t) {
    VecQ z = oracles::random_rational_vector(rng, 2);
    Rational translated = support_function(sq, z) + dot(t2, z);
    CHECK(translated == corner.surface_tension(z));
  }

  // symmetric systems translate by zero
  IsingSystem nn = nearest_neighbour_2d();
  auto [zon, t3] = directed_wulff(DirectedIsingSystem::from_symmetric(nn));
  CHECK(t3 == VecQ{0, 0});
  for (int t = 0; t < 16; ++t) {
    VecQ z = oracles::random_rational_vector(rng, 2);
    CHECK(support_function(zon, z) == nn.surface_tension(z));
  }
}

TEST_CASE("approximate_zonoid: measures already within the bound are fixed points") {
  GeneratingMeasure target = GeneratingMeasure::from_weights(
      2, {{DirectionClass{{1, 0}}, 1.25}, {DirectionClass{{2, 1}}, 0.5}});
  ZonoidApproxOptions opts;
  opts.check_directions = 720;
  ZonoidApproxResult r = approximate_zonoid(target, 1e-6, 3, opts);
  CHECK(r.sup_error == 0);
  REQUIRE(r.measure.classes().size() == 2);
  CHECK(r.measure.classes()[0].lambda == 1.25);
}

TEST_CASE("approximate_zonoid: disk oracle") {
  auto disk = [](const VecD& z) { return norm2(z); };
  ZonoidApproxOptions opts;
  opts.check_directions = 1200;
  ZonoidApproxResult r = approximate_zonoid(disk, 2, 0.02, 10, opts);
  CHECK(r.sup_error < 0.02);
  // unreachable tolerance reports infeasibility
  CHECK_THROWS_AS(static_cast<void>(approximate_zonoid(disk, 2, 1e-9, 2, opts)),
                  infeasible_error);
}

TEST_CASE("approximate_zonoid: coercive padding keeps the bound and adds axes") {
  GeneratingMeasure target =
      GeneratingMeasure::from_weights(2, {{DirectionClass{{2, 1}}, 1.0}});
  ZonoidApproxOptions opts;
  opts.check_directions = 720;
  opts.coercive_padding = true;
  ZonoidApproxResult r = approximate_zonoid(target, 0.05, 4, opts);
  CHECK(r.sup_error < 0.05);
  bool has_e1 = false, has_e2 = false;
  for (const MeasureClass& c : r.measure.classes()) {
    if (c.direction.primitive == VecI{1, 0}) has_e1 = c.lambda > 0;
    if (c.direction.primitive == VecI{0, 1}) has_e2 = c.lambda > 0;
  }
  CHECK(has_e1);
  CHECK(has_e2);
}
