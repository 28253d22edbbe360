#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace cdindex;
using namespace testsupport;

namespace {

SimplicialComplex cycle(std::size_t n)
{
    std::vector<std::string> labels;
    std::vector<Face> facets;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("v" + std::to_string(i));
        facets.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
    }
    return SimplicialComplex::from_facets(labels, facets);
}

SimplicialComplex octahedron()
{
    std::vector<Face> facets;
    for (Vertex a : {0U, 1U})
        for (Vertex b : {2U, 3U})
            for (Vertex c : {4U, 5U}) facets.push_back({a, b, c});
    return SimplicialComplex::from_facets({"+x", "-x", "+y", "-y", "+z", "-z"}, facets);
}

std::vector<std::size_t> betti(const SimplicialComplex& K)
{
    return reduced_homology(K).betti;
}

} // namespace

TEST_CASE("reduced homology of small complexes")
{
    const auto circle = cycle(5);
    CHECK(reduced_homology(circle).reduced(0) == 0);
    CHECK(reduced_homology(circle).reduced(1) == 1);
    CHECK(reduced_homology(circle).is_sphere(1));

    const auto points = SimplicialComplex::from_facets({"a", "b"}, {{0}, {1}});
    CHECK(reduced_homology(points).reduced(0) == 1);
    CHECK(reduced_homology(points).is_sphere(0));

    const auto edge = SimplicialComplex::from_facets({"a", "b"}, {{0, 1}});
    for (auto b : betti(edge)) CHECK(b == 0);

    const auto empty = SimplicialComplex::from_facets({}, {});
    CHECK(reduced_homology(empty).is_sphere(-1));

    CHECK(reduced_homology(octahedron()).is_sphere(2));

    // Two circles sharing a vertex.
    const auto wedge = SimplicialComplex::from_facets({"o", "a", "b", "c", "d"},
                                                      {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
    CHECK(reduced_homology(wedge).reduced(1) == 2);
    CHECK(reduced_homology(wedge).euler() == reduced_euler_characteristic(wedge));
}

TEST_CASE("modular ranks agree with rational ones on the corpus")
{
    for (const auto& e : parse_corpus("simplex_fan:2..4,cube_fan:3,polygon:4+pyramid,polygon:3+barycentric")) {
        const auto K = order_complex(e.poset);
        const auto exact = reduced_homology(K);
        CHECK(detail::homology_over<detail::ModP>(K).betti == exact.betti);
        CHECK(reduced_homology_fast(K).betti == exact.betti);
        CHECK(has_sphere_homology(K, e.poset.rank() - 1));
        CHECK(exact.euler() == reduced_euler_characteristic(K));
    }
}

TEST_CASE("links")
{
    const auto C = cycle(6);
    CHECK(link(C, {0}).faces(0).size() == 2);
    CHECK(link(C, {0}).dimension() == 0);
    CHECK(link(C, {}).face_count() == C.face_count());
    const auto O = octahedron();
    const auto l = link(O, {0, 2});
    CHECK(l.dimension() == 0);
    CHECK(l.faces(0).size() == 2);
    CHECK(reduced_homology(link(O, {1})).is_sphere(1));
    CHECK_THROWS_AS(link(O, {0, 1}), OutOfRange);
}

TEST_CASE("order complexes")
{
    const auto K3 = order_complex(build_family(Family::polygon, 3));
    CHECK(K3.faces(0).size() == 6);
    CHECK(K3.faces(1).size() == 6);
    CHECK(reduced_homology(K3).is_sphere(1));

    const auto Kc = order_complex(build_family(Family::chain, 2));
    CHECK(Kc.facets().size() == 1);
    CHECK(Kc.dimension() == 1);

    const auto Ks = order_complex(build_family(Family::simplex_fan, 3));
    CHECK(Ks.faces(0).size() == 14);
    CHECK(Ks.facets().size() == 24);
    CHECK(Ks.dimension() == 2);
}

TEST_CASE("Gorenstein* certification")
{
    for (int k = 3; k <= 8; ++k) CHECK(is_gorenstein_star(build_family(Family::polygon, k)));
    CHECK(is_gorenstein_star(square_pyramid()));
    CHECK(is_gorenstein_star(GradedPoset{}));

    const auto c2 = gorenstein_star_certificate(build_family(Family::chain, 2));
    CHECK_FALSE(c2.gorenstein_star);
    REQUIRE(c2.failing_face);
    CHECK(c2.failing_face->empty());

    const auto pm = gorenstein_star_certificate(polygon_minus_facet(4));
    CHECK_FALSE(pm.gorenstein_star);
    CHECK(pm.betti.reduced(1) == 0);

    CHECK_FALSE(is_gorenstein_star(pyramid_without_apex_star()));

    const auto ok = gorenstein_star_certificate(build_family(Family::cube_fan, 3));
    CHECK(ok.gorenstein_star);
    CHECK_FALSE(ok.failing_face);
    CHECK(ok.betti.is_sphere(2));
    const auto j = certificate_to_json(ok);
    CHECK(j["gorenstein_star"] == true);
    CHECK(j["failing_face"].is_null());
}

TEST_CASE("local failure is located")
{
    // Suspension of a triangle with a whisker: sphere homology, but not a manifold.
    PosetBuilder b(3);
    const std::vector<std::string> verts{"v0", "v1", "v2", "w"};
    const std::vector<std::pair<std::string, std::string>> edges{{"v0", "v1"}, {"v1", "v2"}, {"v0", "v2"}, {"v0", "w"}};
    for (const auto& v : verts) b.add(v, 1);
    for (const auto& [x, y] : edges) {
        b.add(x + y, 2);
        b.cover(x, x + y);
        b.cover(y, x + y);
    }
    for (const std::string pole : {"n", "s"}) {
        b.add(pole, 1);
        for (const auto& v : verts) {
            b.add(pole + v, 2);
            b.cover(pole, pole + v);
            b.cover(v, pole + v);
        }
        for (const auto& [x, y] : edges) {
            b.add(pole + x + y, 3);
            b.cover(pole + x, pole + x + y);
            b.cover(pole + y, pole + x + y);
            b.cover(x + y, pole + x + y);
        }
    }
    const auto P = b.build();
    const auto cert = gorenstein_star_certificate(P);
    CHECK(cert.betti.is_sphere(2));
    CHECK_FALSE(cert.gorenstein_star);
    REQUIRE(cert.failing_face);
    CHECK_FALSE(cert.failing_face->empty());
    CHECK_FALSE(gorenstein_star_by_links(P));
}

TEST_CASE("interval criterion agrees with the link definition")
{
    std::mt19937 rng(6);
    for (const auto& e : parse_corpus("polygon:3..6,simplex_fan:1..4,cube_fan:3,crosspoly_fan:3,polygon:4+pyramid"))
        CHECK(is_gorenstein_star(e.poset) == gorenstein_star_by_links(e.poset));
    for (const auto& P : {build_family(Family::chain, 2), build_family(Family::chain, 3), polygon_minus_facet(4),
                          pyramid_without_apex_star()})
        CHECK(is_gorenstein_star(P) == gorenstein_star_by_links(P));
    int positives = 0;
    for (int i = 0; i < 150; ++i) {
        const auto P = random_graded_poset(rng, std::uniform_int_distribution<int>(1, 3)(rng), 3);
        const bool g = is_gorenstein_star(P);
        CHECK(g == gorenstein_star_by_links(P));
        if (g) CHECK(is_eulerian(P));
        positives += g;
    }
    CHECK(positives > 0);
}

TEST_CASE("boundary and quasi-convexity")
{
    const auto pm = polygon_minus_facet(4);
    const auto bnd = boundary_of(pm);
    REQUIRE(bnd);
    CHECK(bnd->poset.rank() == 1);
    CHECK(bnd->poset.of_degree(1).size() == 2);
    CHECK(is_quasi_convex(pm));

    const auto ray = single_ray();
    const auto rb = boundary_of(ray);
    REQUIRE(rb);
    CHECK(rb->poset.rank() == 0);
    CHECK(rb->poset.size() == 2);
    CHECK(is_quasi_convex(ray));

    CHECK_FALSE(boundary_of(build_family(Family::polygon, 5)));
    CHECK(is_quasi_convex(build_family(Family::polygon, 5)));

    // A path of three facets around a hexagon.
    const auto P6 = build_family(Family::polygon, 6);
    const auto path = remove_elements(P6, {P6.index_of("f3"), P6.index_of("f4"), P6.index_of("f5"), P6.index_of("r4"),
                                           P6.index_of("r5")});
    CHECK(is_quasi_convex(path));
    CHECK(boundary_of(path)->poset.of_degree(1).size() == 2);

    // A single cone over a square is quasi-convex; its boundary is the square.
    const auto cone = pyramid_without_apex_star();
    CHECK(is_quasi_convex(cone));
    CHECK(boundary_of(cone)->poset.of_degree(2).size() == 4);

    // Two facets of a hexagon meeting in nothing: boundary is four points.
    const auto split = remove_elements(P6, {P6.index_of("f1"), P6.index_of("f2"), P6.index_of("f4"), P6.index_of("f5"),
                                            P6.index_of("r2"), P6.index_of("r5")});
    CHECK_FALSE(is_quasi_convex(split));
}
