#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "semc/catalog.hpp"
#include "semc/fingerprint.hpp"
#include "semc/graph.hpp"
#include "semc/intpoly.hpp"
#include "semc/map.hpp"

using namespace semc;

namespace {

MapFile catalog_entry(const std::string& name) {
    for (const CatalogExpectation& e : catalog_expectations())
        if (e.name == name) return load_map(std::string(SEMC_CATALOG_DIR) + "/" + e.file);
    throw std::runtime_error("no catalog entry " + name);
}

Permutation random_perm(int n, std::mt19937& rng) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::shuffle(im.begin(), im.end(), rng);
    return Permutation(im);
}

// fraction-free (Bareiss) determinant over exact integers: the independent
// route for spot-checking char_poly evaluations
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
    const int n = static_cast<int>(a.size());
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) { p = r; break; }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace

TEST_CASE("edge_graph: tetrahedron is K4") {
    SimpleGraph g = edge_graph(tetrahedron());
    CHECK(g.n == 4);
    CHECK(g.edges.size() == 6);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) CHECK(g.has_edge(u, v));
}

TEST_CASE("edge_graph: catalog regularity") {
    auto maps = load_catalog(SEMC_CATALOG_DIR);
    for (const MapFile& mf : maps) {
        SimpleGraph g = edge_graph(mf.map);
        auto deg = g.degrees();
        int d = FaceSequence::parse(mf.type).degree();
        CAPTURE(mf.name);
        CHECK(std::all_of(deg.begin(), deg.end(), [&](int x) { return x == d; }));
        CHECK(static_cast<int>(g.edges.size()) == 12 * d / 2);
    }
}

TEST_CASE("G_0 of the tetrahedron is empty") {
    CHECK(common_neighbor_graph(tetrahedron(), 0).edges.empty());
    // every pair shares a face and has the other two vertices in common
    CHECK(common_neighbor_graph(tetrahedron(), 2).edges.size() == 6);
}

TEST_CASE("partition property: each pair lands in exactly one G_i") {
    auto maps = load_catalog(SEMC_CATALOG_DIR);
    for (const MapFile& mf : {maps[0], maps[3], maps[10]}) {
        const int n = mf.map.n_vertices;
        std::vector<std::vector<int>> hits(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i)
            for (auto& [u, v] : common_neighbor_graph(mf.map, i).edges) ++hits[u][v];
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) CHECK(hits[u][v] == 1);
    }
}

TEST_CASE("common_neighbor_graph is relabeling-equivariant") {
    std::mt19937 rng(17);
    auto mf = catalog_entry("KO_1[(3^3,4,3,4)]");
    for (int trial = 0; trial < 5; ++trial) {
        Permutation p = random_perm(12, rng);
        PolyhedralMap pm = relabel(mf.map, p);
        for (int i : {5, 6, 7}) {
            SimpleGraph g = common_neighbor_graph(mf.map, i);
            SimpleGraph pg = common_neighbor_graph(pm, i);
            SimpleGraph expect;
            expect.n = 12;
            for (auto& [u, v] : g.edges) expect.add_edge(p(u), p(v));
            expect.finish();
            CHECK(pg == expect);
        }
    }
}

TEST_CASE("char_poly: small closed forms") {
    SimpleGraph empty5;
    empty5.n = 5;
    empty5.finish();
    CHECK(char_poly(empty5) == IntPolynomial::from_ints({1, 0, 0, 0, 0, 0}));

    SimpleGraph path3;
    path3.n = 3;
    path3.add_edge(0, 1);
    path3.add_edge(1, 2);
    path3.finish();
    // 3x3 determinant expanded by hand
    CHECK(char_poly(path3) == IntPolynomial::from_ints({1, 0, -2, 0}));

    SimpleGraph k4 = edge_graph(tetrahedron());
    // (x-3)(x+1)^3
    CHECK(char_poly(k4) == IntPolynomial::from_ints({1, 0, -6, -8, -3}));
}

TEST_CASE("char_poly evaluation agrees with fraction-free determinants") {
    auto mf = catalog_entry("KO_2[(3^4,4^2)]");
    SimpleGraph g = edge_graph(mf.map);
    IntPolynomial p = char_poly(g);
    auto adj = g.adjacency();
    for (int x0 = -2; x0 <= 2; ++x0) {
        std::vector<std::vector<mpz_class>> m(g.n, std::vector<mpz_class>(g.n, 0));
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j) m[i][j] = (i == j ? mpz_class(x0) : mpz_class(0)) - adj[i][j];
        CHECK(p.eval(x0) == bareiss_det(m));
    }
}

TEST_CASE("char_poly is relabeling-invariant") {
    std::mt19937 rng(23);
    auto mf = catalog_entry("KO_1[(3^4,4^2)]");
    IntPolynomial p = char_poly(edge_graph(mf.map));
    for (int trial = 0; trial < 5; ++trial) {
        PolyhedralMap pm = relabel(mf.map, random_perm(12, rng));
        CHECK(char_poly(edge_graph(pm)) == p);
    }
}

TEST_CASE("char_poly x^(n-2) coefficient is minus the edge count") {
    for (const MapFile& mf : load_catalog(SEMC_CATALOG_DIR)) {
        SimpleGraph g = edge_graph(mf.map);
        IntPolynomial p = char_poly(g);
        CHECK(p.coeff(g.n - 2) == -mpz_class(static_cast<long>(g.edges.size())));
        CHECK(p.coeff(g.n) == 1);
        CHECK(p.degree() == g.n);
    }
}

TEST_CASE("IntPolynomial printing") {
    CHECK(IntPolynomial::from_ints({1, 0, -2, 0}).to_string() == "x^3 - 2x");
    CHECK(IntPolynomial::from_ints({1}).to_string() == "1");
    CHECK(IntPolynomial::from_ints({0}).to_string() == "0");
    CHECK(IntPolynomial::from_ints({-1, 1}).to_string() == "-x + 1");
}

TEST_CASE("fingerprints: invariance and separating power") {
    std::mt19937 rng(31);
    auto maps = load_catalog(SEMC_CATALOG_DIR);
    auto ko1 = catalog_entry("KO_1[(3^4,4^2)]");
    auto ko2 = catalog_entry("KO_2[(3^4,4^2)]");
    Fingerprint f1 = invariant_fingerprint(ko1.map);
    Fingerprint f2 = invariant_fingerprint(ko2.map);
    // the char polys coincide here; the G_i degree data still separates them
    CHECK_FALSE(f1 == f2);
    CHECK(f1.edge_char_poly == f2.edge_char_poly);

    for (int trial = 0; trial < 3; ++trial) {
        PolyhedralMap pm = relabel(ko1.map, random_perm(12, rng));
        CHECK(invariant_fingerprint(pm) == f1);
    }

    // all 11 catalog maps have pairwise distinct fingerprints
    std::vector<std::string> encodings;
    for (const MapFile& mf : maps) encodings.push_back(invariant_fingerprint(mf.map).to_json());
    std::sort(encodings.begin(), encodings.end());
    CHECK(std::adjacent_find(encodings.begin(), encodings.end()) == encodings.end());
}

TEST_CASE("fingerprint JSON is canonical") {
    auto mf = catalog_entry("KNO_2[(3,4^4)]");
    Fingerprint f = invariant_fingerprint(mf.map);
    CHECK(f.to_json() == invariant_fingerprint(mf.map).to_json());
    CHECK(f.to_json().substr(0, 4) == "[-2,");
}
