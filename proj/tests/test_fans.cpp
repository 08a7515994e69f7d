#include <algorithm>
#include <optional>

#include "corpus.hpp"
#include "doctest.h"

using namespace tropfan;

namespace {

QuotientVector qv(std::vector<long long> v) { return QuotientVector::from_ints(v).normalized(); }

// Test-only exact solver: the unique coefficients of x in the (independent)
// columns, or nullopt when x is outside their span.
std::optional<QVec> solve_in_columns(const std::vector<QVec>& columns, const QVec& x) {
    std::size_t rows = x.size();
    std::size_t k = columns.size();
    QMat aug(rows, QVec(k + 1, Rat(0)));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < k; ++c) aug[r][c] = columns[c][r];
        aug[r][k] = x[r];
    }
    std::size_t piv = 0;
    std::vector<int> pivot_col;
    for (std::size_t col = 0; col < k && piv < rows; ++col) {
        std::size_t found = rows;
        for (std::size_t r = piv; r < rows; ++r)
            if (!aug[r][col].is_zero()) { found = r; break; }
        if (found == rows) continue;
        std::swap(aug[piv], aug[found]);
        Rat inv = Rat(1) / aug[piv][col];
        for (std::size_t c = col; c <= k; ++c) aug[piv][c] = aug[piv][c] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == piv || aug[r][col].is_zero()) continue;
            Rat f = aug[r][col];
            for (std::size_t c = col; c <= k; ++c) aug[r][c] = aug[r][c] - f * aug[piv][c];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++piv;
    }
    for (std::size_t r = piv; r < rows; ++r)
        if (!aug[r][k].is_zero()) return std::nullopt;  // inconsistent
    QVec out(k, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) out[static_cast<std::size_t>(pivot_col[i])] = aug[i][k];
    return out;
}

// Membership in a simplicial cone spanned by flat rays plus the lineality
// line, decided by solving for the unique coefficients.
bool simplicial_cone_contains(int ground, const std::vector<Subset>& gens, const QuotientVector& v) {
    std::vector<QVec> cols;
    for (const Subset& f : gens) {
        if (f == Subset::full(ground)) continue;
        cols.push_back(ray_vector(ground, f).c);
    }
    cols.push_back(QVec(static_cast<std::size_t>(ground), Rat(1)));
    auto coeffs = solve_in_columns(cols, v.normalized().c);
    if (!coeffs) return false;
    for (std::size_t i = 0; i + 1 < coeffs->size(); ++i)
        if ((*coeffs)[i] < Rat(0)) return false;  // the lineality coefficient is free
    return true;
}

} // namespace

TEST_CASE("tropical membership by the circuit test") {
    Matroid m = corpus::braid3();
    CHECK(trop_contains(m, qv({0, 0, 0, 0, 0, 0})));
    CHECK(trop_contains(m, qv({1, 0, 0, 0, 0, 0})));
    CHECK(!trop_contains(m, qv({-1, 0, 0, 0, 0, 0})));

    Matroid loopy = from_bases(2, {Subset::of({0})});
    CHECK_THROWS_AS(trop_contains(loopy, qv({0, 0})), hypothesis_error);
}

TEST_CASE("chain partitions") {
    Matroid m = corpus::braid3();
    ChainOfFlats chain{{Subset::of({0}), Subset::of({0, 5}), m.ground_set()}};
    ChainPartition part = chain_partition(m, chain);
    CHECK(part.blocks == std::vector<Subset>{Subset::of({0}), Subset::of({5}), Subset::of({1, 2, 3, 4})});

    ChainOfFlats swapped{{Subset::of({5}), Subset::of({0, 5}), m.ground_set()}};
    CHECK(chain_partition(m, swapped).blocks ==
          std::vector<Subset>{Subset::of({5}), Subset::of({0}), Subset::of({1, 2, 3, 4})});

    Matroid u23 = uniform_matroid(2, 3);
    CHECK(chain_partition(u23, ChainOfFlats{{Subset::of({0}), u23.ground_set()}}).blocks ==
          std::vector<Subset>{Subset::of({0}), Subset::of({1, 2})});

    CHECK_THROWS_AS(chain_partition(m, ChainOfFlats{{Subset::of({0}), m.ground_set()}}), std::invalid_argument);
    CHECK_THROWS_AS(chain_partition(m, ChainOfFlats{{Subset::of({0}), Subset::of({0, 1}), m.ground_set()}}),
                    std::invalid_argument);
}

TEST_CASE("transversal bases") {
    Matroid m = corpus::braid3();
    ChainPartition part{{Subset::of({0}), Subset::of({5}), Subset::of({1, 2, 3, 4})}};
    std::vector<Subset> family = transversal_bases(m, part);

    // Brute force over the basis family.
    std::vector<Subset> expected;
    for (const Subset& b : m.bases())
        if (b.contains(0) && b.contains(5)) expected.push_back(b);
    CHECK(family == expected);
    CHECK(family == std::vector<Subset>{Subset::of({0, 1, 5}), Subset::of({0, 2, 5}),
                                        Subset::of({0, 3, 5}), Subset::of({0, 4, 5})});

    // The reordered partition of the second chain through {0,5} gives the
    // same family.
    ChainPartition part2{{Subset::of({5}), Subset::of({0}), Subset::of({1, 2, 3, 4})}};
    CHECK(transversal_bases(m, part2) == family);

    Matroid free3 = uniform_matroid(3, 3);
    ChainPartition unitary{{Subset::of({0}), Subset::of({1}), Subset::of({2})}};
    CHECK(transversal_bases(free3, unitary) == std::vector<Subset>{Subset::of({0, 1, 2})});

    CHECK_THROWS_AS(transversal_bases(m, ChainPartition{{Subset::of({0})}}), std::invalid_argument);
}

TEST_CASE("closed-form chain cone membership") {
    Matroid m = corpus::braid3();
    ChainPartition part = chain_partition(m, ChainOfFlats{{Subset::of({0}), Subset::of({0, 5}), m.ground_set()}});

    CHECK(chain_cone_contains(part, ray_vector(6, Subset::of({0}))));
    CHECK(chain_cone_contains(part, qv({2, 0, 0, 0, 0, 1})));
    CHECK(chain_cone_contains_interior(part, qv({2, 0, 0, 0, 0, 1})));
    CHECK(!chain_cone_contains(part, qv({0, 1, 0, 0, 0, 0})));  // not constant on the big block
    CHECK(chain_cone_contains(part, qv({1, 0, 0, 0, 0, 1})));   // boundary: blocks 0 and 5 tie
    CHECK(!chain_cone_contains_interior(part, qv({1, 0, 0, 0, 0, 1})));
}

TEST_CASE("ray vectors keep their orientation") {
    QuotientVector v = ray_vector(6, Subset::of({0, 5}));
    CHECK(v.c == QVec{Rat(0), Rat(-1), Rat(-1), Rat(-1), Rat(-1), Rat(0)});
    CHECK(trop_contains(corpus::braid3(), v));
    // The sign-flipped vector is a different ray and leaves the support.
    QuotientVector flipped = v;
    for (Rat& x : flipped.c) x = -x;
    CHECK(!trop_contains(corpus::braid3(), flipped));
}

TEST_CASE("fine subdivision") {
    Matroid m = corpus::braid3();
    LatticeOfFlats lat = flats_lattice(m);
    SimplicialFan fine = fine_subdivision(m, lat);
    CHECK(fine.max_cones.size() == 18);
    CHECK(fine.ray_flats.size() == 13);  // all proper nonempty flats
    CHECK(fine.lineality_dim == 1);

    Matroid u23 = uniform_matroid(2, 3);
    CHECK(fine_subdivision(u23, flats_lattice(u23)).max_cones.size() == 3);
    Matroid f7 = corpus::fano();
    CHECK(fine_subdivision(f7, flats_lattice(f7)).max_cones.size() == 21);
    Matroid n5 = corpus::n5();
    CHECK(fine_subdivision(n5, flats_lattice(n5)).max_cones.size() == 14);
}

TEST_CASE("nested set fans") {
    Matroid m = corpus::braid3();
    LatticeOfFlats lat = flats_lattice(m);
    SimplicialFan sigma_min = nested_fan(m, lat, min_building_set(m, lat));
    CHECK(sigma_min.max_cones.size() == 15);
    CHECK(sigma_min.ray_flats.size() == 10);  // the minimal building set minus the top

    SimplicialFan sigma_max = nested_fan(m, lat, max_building_set(lat));
    CHECK(sigma_max == fine_subdivision(m, lat));

    Matroid n5 = corpus::n5();
    LatticeOfFlats lat5 = flats_lattice(n5);
    SimplicialFan min5 = nested_fan(n5, lat5, min_building_set(n5, lat5));
    CHECK(min5.ray_flats.size() == 7);
    CHECK(min5.max_cones.size() == 10);

    // Rays of the minimal fan are exactly the proper members of the
    // building set.
    std::vector<Subset> expected;
    for (const Subset& f : min_building_set(m, lat).members)
        if (f != m.ground_set()) expected.push_back(f);
    CHECK(sigma_min.ray_flats == expected);
}

TEST_CASE("every listed fan ray lies in the tropical linear space") {
    for (auto& [name, m] : corpus::theorem_corpus()) {
        INFO(name);
        LatticeOfFlats lat = flats_lattice(m);
        std::vector<Subset> circuits = m.circuits();
        for (const SimplicialFan& fan :
             {fine_subdivision(m, lat), nested_fan(m, lat, min_building_set(m, lat))}) {
            for (const QuotientVector& r : fan.rays) CHECK(trop_contains(circuits, r));
        }
        for (const QuotientVector& r : bergman_fan(m, lat).rays) CHECK(trop_contains(circuits, r));
    }
}

TEST_CASE("nested fans of disconnected matroids carry the component-count lineality") {
    Matroid d22 = corpus::d22();
    LatticeOfFlats lat = flats_lattice(d22);
    BuildingSet gmin = min_building_set(d22, lat);
    CHECK(gmin.members == std::vector<Subset>{Subset::of({0, 1}), Subset::of({2, 3})});
    SimplicialFan fan = nested_fan(d22, lat, gmin);
    CHECK(fan.lineality_dim == 2);
    CHECK(fan.max_cones.size() == 1);  // the two parallel classes together
    CHECK(fan.ray_flats.size() == 2);
}

TEST_CASE("fan constructions refuse bad hypotheses") {
    Matroid loopy = from_bases(2, {Subset::of({0})});
    CHECK_THROWS_AS(fine_subdivision(loopy, flats_lattice(loopy)), hypothesis_error);
    CHECK_THROWS_AS(bergman_fan(corpus::d22()), hypothesis_error);
    Matroid nonessential = from_matrix(ExactMatrix::rationals({{Rat(1), Rat(1)}, {Rat(0), Rat(0)}}));
    CHECK_THROWS_AS(bergman_fan(nonessential), hypothesis_error);
}

TEST_CASE("matroid polytopes") {
    Matroid u12 = uniform_matroid(1, 2);
    CHECK(matroid_polytope_vertices(u12) == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
    CHECK(polytope_dim(u12) == 1);
    CHECK(polytope_dim(corpus::braid3()) == 5);
    CHECK(polytope_dim(corpus::d22()) == 2);
}

TEST_CASE("degeneration matroids") {
    Matroid m = corpus::braid3();
    CHECK(degeneration_matroid(m, qv({0, 0, 0, 0, 0, 0})).same_bases(m));

    Matroid toward0 = degeneration_matroid(m, qv({1, 0, 0, 0, 0, 0}));
    for (const Subset& b : toward0.bases()) CHECK(b.contains(0));
    CHECK(toward0.is_loopfree());
    CHECK(trop_contains(m, qv({1, 0, 0, 0, 0, 0})));

    Matroid away0 = degeneration_matroid(m, qv({-1, 0, 0, 0, 0, 0}));
    for (const Subset& b : away0.bases()) CHECK(!b.contains(0));
    CHECK(away0.loops() == Subset::of({0}));
    CHECK(!trop_contains(m, qv({-1, 0, 0, 0, 0, 0})));
}

TEST_CASE("bergman fan of the braid-3 matroid") {
    Matroid m = corpus::braid3();
    BergmanFan fan = bergman_fan(m);
    CHECK(fan.cones.size() == 15);
    CHECK(fan.ray_flats.size() == 10);
    CHECK(fan.lineality_dim == 1);

    // Exactly three cones merge two chains, namely those through the pair
    // flats; all other cones are single chains.
    std::vector<Subset> merged_middles;
    for (const BergmanCone& cone : fan.cones) {
        CHECK((cone.chains.size() == 1 || cone.chains.size() == 2));
        if (cone.chains.size() == 2) {
            CHECK(cone.chains[0].flats[1] == cone.chains[1].flats[1]);
            merged_middles.push_back(cone.chains[0].flats[1]);
        }
    }
    std::sort(merged_middles.begin(), merged_middles.end());
    CHECK(merged_middles == std::vector<Subset>{Subset::of({0, 5}), Subset::of({1, 4}), Subset::of({2, 3})});

    // Fan rays coincide with the rays of the minimal nested set fan.
    LatticeOfFlats lat = flats_lattice(m);
    CHECK(fan.ray_flats == nested_fan(m, lat, min_building_set(m, lat)).ray_flats);
}

TEST_CASE("bergman fans across instances") {
    CHECK(bergman_fan(uniform_matroid(2, 3)).cones.size() == 3);
    CHECK(bergman_fan(corpus::n5()).cones.size() == 9);

    Matroid f7 = corpus::fano();
    LatticeOfFlats lat = flats_lattice(f7);
    BergmanFan fan = bergman_fan(f7, lat);
    SimplicialFan sigma_min = nested_fan(f7, lat, min_building_set(f7, lat));
    CHECK(fan.cones.size() == 21);
    CHECK(sigma_min.max_cones.size() == 21);
    CHECK(fan.ray_flats == sigma_min.ray_flats);
    CHECK(fan.ray_flats.size() == 14);

    // Cone-for-cone agreement: every nested cone's interior point lands in
    // a distinct grouped cone whose span matches.
    std::vector<int> targets;
    for (std::size_t i = 0; i < sigma_min.max_cones.size(); ++i) {
        std::vector<Subset> gens = sigma_min.cone_flats(static_cast<int>(i));
        auto target = fan.locate(f7, interior_point(f7.ground_size(), gens));
        REQUIRE(target.has_value());
        gens.push_back(f7.ground_set());
        CHECK(cone_span(7, gens) == fan.cones[static_cast<std::size_t>(*target)].span);
        targets.push_back(*target);
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    CHECK(targets.size() == 21);
}

TEST_CASE("spans in canonical form") {
    Matroid m = corpus::braid3();
    ChainOfFlats a{{Subset::of({0}), Subset::of({0, 5}), m.ground_set()}};
    ChainOfFlats b{{Subset::of({5}), Subset::of({0, 5}), m.ground_set()}};
    CHECK(cone_span(6, a.flats) == cone_span(6, b.flats));

    ChainOfFlats c{{Subset::of({0}), Subset::of({0, 1, 3}), m.ground_set()}};
    ChainOfFlats d{{Subset::of({1}), Subset::of({0, 1, 3}), m.ground_set()}};
    CHECK(!(cone_span(6, c.flats) == cone_span(6, d.flats)));
    CHECK(!(cone_span(6, a.flats) == cone_span(6, c.flats)));

    SpanCanonicalForm lineal = cone_span(6, {});
    CHECK(lineal.rows == QMat{QVec(6, Rat(1))});
}

TEST_CASE("interior points") {
    Matroid m = corpus::braid3();
    ChainOfFlats chain{{Subset::of({0}), Subset::of({0, 5}), m.ground_set()}};
    CHECK(interior_point(6, chain.flats).c == QVec{Rat(0), Rat(-2), Rat(-2), Rat(-2), Rat(-2), Rat(-1)});
    CHECK(interior_point(6, {Subset::of({1})}).c == ray_vector(6, Subset::of({1})).c);

    BergmanFan fan = bergman_fan(m);
    for (const BergmanCone& cone : fan.cones) {
        QuotientVector p = interior_point(m.ground_size(), cone);
        CHECK(p.c == interior_point(m.ground_size(), cone.chains.front().flats).c);
        CHECK(cone.contains(p));
    }
}

TEST_CASE("chain decomposition matches span and grouping both ways") {
    // Span equality of maximal chain cones is equivalent to equality of the
    // unordered block sets, and either implies landing in one grouped cone.
    for (auto& [name, m] : corpus::theorem_corpus()) {
        INFO(name);
        LatticeOfFlats lat = flats_lattice(m);
        std::vector<ChainOfFlats> chains = maximal_chains(m, lat);
        BergmanFan fan = bergman_fan(m, lat);

        std::vector<ChainPartition> parts;
        std::vector<SpanCanonicalForm> spans;
        std::vector<int> cone_of_chain;
        for (const ChainOfFlats& c : chains) {
            parts.push_back(chain_partition(m, c));
            spans.push_back(cone_span(m.ground_size(), c.flats));
            auto where = fan.locate(m, interior_point(m.ground_size(), c.flats));
            REQUIRE(where.has_value());
            cone_of_chain.push_back(*where);
        }
        for (std::size_t i = 0; i < chains.size(); ++i) {
            for (std::size_t j = i + 1; j < chains.size(); ++j) {
                bool same_span = spans[i] == spans[j];
                bool same_blocks = parts[i].block_set() == parts[j].block_set();
                CHECK(same_span == same_blocks);
                if (same_span) CHECK(cone_of_chain[i] == cone_of_chain[j]);
            }
        }
    }
}

TEST_CASE("interior points maximize on the transversal face") {
    for (auto& [name, m] : corpus::theorem_corpus()) {
        INFO(name);
        LatticeOfFlats lat = flats_lattice(m);
        for (const ChainOfFlats& c : maximal_chains(m, lat)) {
            QuotientVector p = interior_point(m.ground_size(), c.flats);
            CHECK(degeneration_matroid(m, p).bases() == transversal_bases(m, chain_partition(m, c)));
        }
    }
}

namespace {

// Exact pairwise fan check for chain cones. The intersection of the cones
// of two maximal chains must be the cone of their common subchain. Both
// sides have closed-form descriptions: equalities merge value classes,
// inequalities order them, so the comparison reduces to a reachability
// computation on the common refinement blocks.
bool chain_cones_meet_in_common_subchain(const Matroid& m, const ChainOfFlats& f, const ChainOfFlats& g) {
    ChainPartition pf = chain_partition(m, f);
    ChainPartition pg = chain_partition(m, g);

    struct Block {
        Subset cells;
        int a;  // position in f's partition
        int b;  // position in g's partition
    };
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < pf.blocks.size(); ++i)
        for (std::size_t j = 0; j < pg.blocks.size(); ++j) {
            Subset meet = pf.blocks[i] & pg.blocks[j];
            if (!meet.empty()) blocks.push_back({meet, static_cast<int>(i), static_cast<int>(j)});
        }

    std::size_t k = blocks.size();
    std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t w = 0; w < k; ++w)
            reach[u][w] = (u == w) || blocks[u].a <= blocks[w].a || blocks[u].b <= blocks[w].b;
    for (std::size_t mid = 0; mid < k; ++mid)
        for (std::size_t u = 0; u < k; ++u)
            for (std::size_t w = 0; w < k; ++w)
                if (reach[u][mid] && reach[mid][w]) reach[u][w] = true;

    // Forced-equal classes of refinement blocks.
    std::vector<int> cls(k, -1);
    int classes = 0;
    for (std::size_t u = 0; u < k; ++u) {
        if (cls[u] >= 0) continue;
        cls[u] = classes;
        for (std::size_t w = u + 1; w < k; ++w)
            if (reach[u][w] && reach[w][u]) cls[w] = classes;
        ++classes;
    }
    std::vector<Subset> class_cells(static_cast<std::size_t>(classes));
    for (std::size_t u = 0; u < k; ++u)
        class_cells[static_cast<std::size_t>(cls[u])] = class_cells[static_cast<std::size_t>(cls[u])] | blocks[u].cells;

    // Blocks of the common subchain.
    std::vector<Subset> common;
    for (const Subset& x : f.flats)
        if (std::find(g.flats.begin(), g.flats.end(), x) != g.flats.end()) common.push_back(x);
    std::sort(common.begin(), common.end(), [](Subset a, Subset b) { return a.size() < b.size(); });
    std::vector<Subset> expected_blocks;
    Subset prev;
    for (const Subset& h : common) {
        expected_blocks.push_back(h - prev);
        prev = h;
    }

    std::vector<Subset> got = class_cells;
    std::sort(got.begin(), got.end());
    std::vector<Subset> want = expected_blocks;
    std::sort(want.begin(), want.end());
    if (got != want) return false;

    // The class order must be the total order of the subchain blocks.
    std::vector<std::size_t> rep(expected_blocks.size(), 0);
    for (std::size_t i = 0; i < expected_blocks.size(); ++i) {
        for (std::size_t u = 0; u < k; ++u)
            if (blocks[u].cells.subset_of(expected_blocks[i])) { rep[i] = u; break; }
    }
    for (std::size_t i = 0; i < expected_blocks.size(); ++i)
        for (std::size_t j = 0; j < expected_blocks.size(); ++j)
            if (reach[rep[i]][rep[j]] != (i <= j)) return false;
    return true;
}

} // namespace

TEST_CASE("the fine subdivision is a fan: chain cones intersect in common subchain cones") {
    for (auto& [name, m] : corpus::theorem_corpus()) {
        if (m.ground_size() > 7) continue;
        INFO(name);
        std::vector<ChainOfFlats> chains = maximal_chains(m, flats_lattice(m));
        for (std::size_t i = 0; i < chains.size(); ++i)
            for (std::size_t j = i; j < chains.size(); ++j)
                CHECK(chain_cones_meet_in_common_subchain(m, chains[i], chains[j]));
    }
}

TEST_CASE("the minimal nested fan is a fan: cones intersect in shared faces") {
    for (auto& [name, m] : corpus::theorem_corpus()) {
        if (m.ground_size() > 7) continue;
        INFO(name);
        LatticeOfFlats lat = flats_lattice(m);
        SimplicialFan fan = nested_fan(m, lat, min_building_set(m, lat));
        std::vector<ChainOfFlats> chains = maximal_chains(m, lat);

        // Member chains of each cone, by exact coefficient membership.
        std::vector<std::vector<const ChainOfFlats*>> members(fan.max_cones.size());
        for (const ChainOfFlats& c : chains) {
            for (std::size_t i = 0; i < fan.max_cones.size(); ++i) {
                std::vector<Subset> gens = fan.cone_flats(static_cast<int>(i));
                bool inside = true;
                for (const Subset& x : c.flats) {
                    if (x == m.ground_set()) continue;
                    if (!simplicial_cone_contains(m.ground_size(), gens, ray_vector(m.ground_size(), x))) {
                        inside = false;
                        break;
                    }
                }
                if (inside) members[i].push_back(&c);
            }
        }
        for (const auto& mem : members) CHECK(!mem.empty());

        for (std::size_t i = 0; i < fan.max_cones.size(); ++i) {
            for (std::size_t j = i + 1; j < fan.max_cones.size(); ++j) {
                std::vector<Subset> gi = fan.cone_flats(static_cast<int>(i));
                std::vector<Subset> gj = fan.cone_flats(static_cast<int>(j));
                std::vector<Subset> shared;
                for (const Subset& x : gi)
                    if (std::find(gj.begin(), gj.end(), x) != gj.end()) shared.push_back(x);
                // The intersection of the two cones is covered by the
                // pairwise common subchains of their member chains; each
                // such subcone must land in the shared-generator face.
                for (const ChainOfFlats* ci : members[i]) {
                    for (const ChainOfFlats* cj : members[j]) {
                        for (const Subset& h : ci->flats) {
                            if (h == m.ground_set()) continue;
                            if (std::find(cj->flats.begin(), cj->flats.end(), h) == cj->flats.end()) continue;
                            CHECK(simplicial_cone_contains(m.ground_size(), shared,
                                                           ray_vector(m.ground_size(), h)));
                        }
                    }
                }
            }
        }
    }
}
