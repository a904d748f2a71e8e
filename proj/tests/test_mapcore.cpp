#include <catch_amalgamated.hpp>

#include <surfmap/map.hpp>
#include <surfmap/unicellular.hpp>

#include <map>
#include <sstream>

using namespace surfmap;

namespace {

// triangle on the sphere: one black and one white face of degree 3
CombinatorialMap triangle() {
    CombinatorialMap m;
    m.n_darts = 6;
    m.sigma = {0, 6, 3, 2, 5, 4, 1};
    m.alpha = {0, 2, 1, 4, 3, 6, 5};
    m.root_dart = 1;
    return m;
}

// square glued into a torus: one vertex, two edges, one face
CombinatorialMap torus_square() {
    CombinatorialMap m;
    m.n_darts = 4;
    m.sigma = {0, 3, 4, 2, 1};
    m.alpha = {0, 2, 1, 4, 3};
    m.root_dart = 1;
    return m;
}

}  // namespace

TEST_CASE("validation and Euler characteristic") {
    CombinatorialMap t = triangle();
    validate(t);
    CHECK(vertices(t).size() == 3);
    CHECK(faces(t).size() == 2);
    CHECK(genus(t) == 0);

    CombinatorialMap q = torus_square();
    validate(q);
    CHECK(vertices(q).size() == 1);
    CHECK(faces(q).size() == 1);
    CHECK(genus(q) == 1);
}

TEST_CASE("face bicoloring") {
    CombinatorialMap t = triangle();
    auto fc = bicolor(t);
    REQUIRE(fc.has_value());
    // the face containing the root dart is black
    CHECK(fc->black(t.root_dart));
    CHECK(is_m_hypermap(t, *fc, 3, {1}));
    CHECK(is_m_constellation(t, *fc, 3));

    // a map with an odd vertex cannot be face-bicolored consistently:
    // one loop plus a pendant edge at the same vertex has a degree-3 vertex
    CombinatorialMap bad;
    bad.n_darts = 4;
    bad.sigma = {0, 2, 3, 1, 4};
    bad.alpha = {0, 2, 1, 4, 3};
    bad.root_dart = 1;
    validate(bad);
    CHECK(!bicolor(bad).has_value());
}

TEST_CASE("canonical form is relabeling-invariant") {
    CombinatorialMap t = triangle();
    // relabel darts by a fixed permutation keeping the root's identity
    std::vector<int> p = {0, 4, 3, 6, 1, 2, 5};  // old dart -> new dart
    CombinatorialMap r;
    r.n_darts = 6;
    r.sigma.assign(7, 0);
    r.alpha.assign(7, 0);
    for (int d = 1; d <= 6; ++d) {
        r.sigma[p[d]] = p[t.sigma[d]];
        r.alpha[p[d]] = p[t.alpha[d]];
    }
    r.root_dart = p[t.root_dart];
    validate(r);
    CHECK(canonical_form(r) == canonical_form(t));
    // the triangle is dart-transitive, so root moves there are invisible;
    // on a two-edge path, rooting at a leaf differs from rooting in the middle
    CombinatorialMap path;
    path.n_darts = 4;
    path.sigma = {0, 1, 3, 2, 4};
    path.alpha = {0, 2, 1, 4, 3};
    path.root_dart = 1;
    validate(path);
    CombinatorialMap moved = path;
    moved.root_dart = 2;
    CHECK(!(canonical_form(moved) == canonical_form(path)));
}

TEST_CASE("text round-trip") {
    CombinatorialMap t = triangle();
    t.pointed_vertex = 1;
    std::stringstream ss;
    write_map(ss, t);
    CombinatorialMap back = read_map(ss);
    CHECK(back == t);
}

TEST_CASE("one-face maps from polygon pairings") {
    // 2 edges: 3 pairings of the square's sides, all one-face;
    // genus split 2 planar + 1 toral (Harer-Zagier numbers 2, 1)
    std::map<int, int> by_genus;
    int total = 0;
    for_each_unicellular(2, [&](const CombinatorialMap& m) {
        CHECK(faces(m).size() == 1);
        ++by_genus[genus(m)];
        ++total;
    });
    CHECK(total == 3);
    CHECK(by_genus[0] == 2);
    CHECK(by_genus[1] == 1);

    // 3 edges: 15 pairings; Harer-Zagier: 5 planar, 10 toral
    by_genus.clear();
    total = 0;
    for_each_unicellular(3, [&](const CombinatorialMap& m) {
        ++by_genus[genus(m)];
        ++total;
    });
    CHECK(total == 15);
    CHECK(by_genus[0] == 5);
    CHECK(by_genus[1] == 10);
}
