// Acceptance suite: one pass/fail line per criterion, all thresholds pinned.
#include "doctest.h"

#include <cstdio>
#include <random>

#include "arcanon/circular_canon.hpp"
#include "arcanon/core_model.hpp"
#include "arcanon/graph_classes.hpp"
#include "arcanon/interval_canon.hpp"
#include "arcanon/oracle.hpp"
#include "arcanon/star_system.hpp"
#include "test_helpers.hpp"

using namespace arcanon;
using namespace testutil;

namespace {

void report(int criterion, bool pass, const char* what) {
    std::printf("criterion %d %s: %s\n", criterion, pass ? "PASS" : "FAIL", what);
    std::fflush(stdout);
}

// Random circular convex bipartite graph: blue vertices on a circle, red
// neighborhoods are arcs.
Graph random_circular_convex(int blues, int reds, std::mt19937& rng) {
    std::vector<VertexId> names;
    for (int i = 1; i <= blues; ++i) names.push_back("u" + std::to_string(i));
    for (int i = 1; i <= reds; ++i) names.push_back("w" + std::to_string(i));
    std::uniform_int_distribution<int> pos(0, blues - 1);
    std::uniform_int_distribution<int> len(1, blues);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 1; i <= reds; ++i) {
        int s = pos(rng), l = len(rng);
        for (int k = 0; k < l; ++k)
            edges.emplace_back("u" + std::to_string((s + k) % blues + 1),
                               "w" + std::to_string(i));
    }
    return Graph(names, edges);
}

// All hypergraphs over n vertices with up to `max_edges` distinct nonempty
// hyperedges, enumerated by subsets of the powerset.
template <typename Fn>
void for_each_small_hypergraph(int n, int max_edges, Fn fn) {
    int subsets = (1 << n) - 1;  // nonempty subsets encoded 1..2^n-1
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int first) {
        {
            std::vector<std::tuple<std::vector<VertexId>, Color, Mult>> edges;
            for (int mask : chosen) {
                std::vector<VertexId> set;
                for (int v = 0; v < n; ++v)
                    if (mask & (1 << v)) set.push_back(std::to_string(v + 1));
                edges.emplace_back(std::move(set), 0, 1);
            }
            fn(Hypergraph(range_names(n), edges));
        }
        if (static_cast<int>(chosen.size()) == max_edges) return;
        for (int mask = first; mask <= subsets; ++mask) {
            chosen.push_back(mask);
            rec(mask + 1);
            chosen.pop_back();
        }
    };
    rec(1);
}

}  // namespace

TEST_CASE("criterion 1: oracle equivalence for interval and circular-arc recognition") {
    long long mismatches = 0, cases = 0;
    for (int n = 1; n <= 4; ++n) {
        for_each_small_hypergraph(n, 4, [&](const Hypergraph& h) {
            ++cases;
            if (canonical_interval(h).has_value() !=
                oracle::brute_force_interval(h).has_value())
                ++mismatches;
            if (canonical_arc(h).has_value() != oracle::brute_force_ca(h).has_value())
                ++mismatches;
        });
    }
    std::mt19937 rng(1001);
    for (int t = 0; t < 1000; ++t) {
        int n = 5 + t % 2;
        auto h = random_hypergraph(n, 1 + t % 6, rng);
        ++cases;
        if (canonical_interval(h).has_value() !=
            oracle::brute_force_interval(h).has_value())
            ++mismatches;
        if (canonical_arc(h).has_value() != oracle::brute_force_ca(h).has_value())
            ++mismatches;
    }
    report(1, mismatches == 0, "interval/CA recognition agrees with brute force");
    CHECK(mismatches == 0);
    CHECK(cases > 3000);
}

TEST_CASE("criterion 2: canonicity under vertex renaming") {
    std::mt19937 rng(2002);
    long long violations = 0;

    for (int t = 0; t < 200; ++t) {
        int n = 2 + t % 8;  // up to 9
        auto h = random_ca_hypergraph(n, 1 + t % 7, rng, t % 3 == 0);
        auto base = canonical_arc(h);
        if (!base) {
            ++violations;
            continue;
        }
        for (int r = 0; r < 10; ++r) {
            auto [h2, map] = rename_random(h, rng);
            auto res = canonical_arc(h2);
            if (!res || res->serialized_form != base->serialized_form) ++violations;
        }
    }
    for (int t = 0; t < 200; ++t) {
        int n = 2 + t % 8;
        auto h = random_interval_hypergraph(n, 1 + t % 7, rng, t % 3 == 0);
        auto base = canonical_interval(h);
        if (!base) {
            ++violations;
            continue;
        }
        for (int r = 0; r < 10; ++r) {
            auto [h2, map] = rename_random(h, rng);
            auto res = canonical_interval(h2);
            if (!res || res->serialized_form != base->serialized_form) ++violations;
        }
    }

    auto check_labeling = [&](const Graph& g, auto labeler) {
        auto base = labeler(g);
        if (!base) {
            ++violations;
            return;
        }
        for (int r = 0; r < 10; ++r) {
            auto [g2, map] = rename_random(g, rng);
            auto res = labeler(g2);
            if (!res || res->canonical_form != base->canonical_form) ++violations;
        }
    };
    for (int t = 0; t < 100; ++t)
        check_labeling(random_proper_interval_graph(2 + t % 8, rng),
                       canonical_label_proper_interval);
    int done = 0;
    for (int t = 0; t < 3000 && done < 100; ++t) {
        auto g = random_pca_graph(4 + t % 6, rng);
        if (!g.is_connected() || g.complement().two_coloring()) continue;
        ++done;
        check_labeling(g, canonical_label_pca_noncobip);
    }
    if (done < 100) ++violations;
    for (int t = 0; t < 100; ++t)
        check_labeling(random_circular_convex(2 + t % 5, 1 + t % 5, rng),
                       canonical_label_circular_convex);
    for (int t = 0; t < 100; ++t)
        check_labeling(random_coconvex_graph(2 + t % 4, 1 + t % 4, rng),
                       canonical_label_coconvex);

    report(2, violations == 0,
           "serialized forms and canonical labelings stable across renamings");
    CHECK(violations == 0);
}

TEST_CASE("criterion 3: every emitted model is valid; proper/tight where promised") {
    std::mt19937 rng(3003);
    long long violations = 0, models = 0;

    for (int t = 0; t < 400; ++t) {
        auto h = random_ca_hypergraph(2 + t % 8, 1 + t % 7, rng, t % 2 == 0);
        auto res = canonical_arc(h);
        if (!res) {
            ++violations;
            continue;
        }
        ++models;
        if (!validate_model(h, res->model, res->labeling).ok) ++violations;
    }
    for (int t = 0; t < 200; ++t) {
        auto h = random_interval_hypergraph(2 + t % 8, 1 + t % 7, rng);
        auto res = canonical_interval(h);
        if (!res) {
            ++violations;
            continue;
        }
        ++models;
        if (!validate_model(h, res->model, res->labeling).ok) ++violations;
    }
    // Tight pipelines: closed neighborhoods of proper circular-arc graphs.
    int tights = 0;
    for (int t = 0; t < 3000 && tights < 200; ++t) {
        auto g = random_pca_graph(3 + t % 7, rng);
        auto ng = closed_neighborhoods(g);
        auto res = canonical_tight_arc(ng);
        if (!res) continue;
        ++tights;
        ++models;
        if (!validate_model(ng, res->model, res->labeling).ok) ++violations;
        if (!classify_model(res->model).is_tight) ++violations;
    }
    if (tights < 200) ++violations;
    // Proper graph models (arc or interval depending on connectivity).
    for (int t = 0; t < 200; ++t) {
        auto g = random_proper_interval_graph(2 + t % 8, rng);
        auto res = proper_arc_model_pca(g);
        if (!res || (!res->arc_model && !res->interval_model)) {
            ++violations;
            continue;
        }
        ++models;
        const auto& cls = res->arc_model ? classify_model(*res->arc_model)
                                         : classify_model(*res->interval_model);
        if (!cls.is_proper) ++violations;
        Graph got = res->arc_model ? intersection_graph(*res->arc_model)
                                   : intersection_graph(*res->interval_model);
        if (got != g) ++violations;
    }
    int pcas = 0;
    for (int t = 0; t < 3000 && pcas < 100; ++t) {
        auto g = random_pca_graph(3 + t % 6, rng);
        if (!g.is_connected()) continue;
        auto res = proper_arc_model_pca(g);
        if (!res) continue;
        ++pcas;
        ++models;
        const auto& cls = res->arc_model ? classify_model(*res->arc_model)
                                         : classify_model(*res->interval_model);
        if (!cls.is_proper) ++violations;
        Graph got = res->arc_model ? intersection_graph(*res->arc_model)
                                   : intersection_graph(*res->interval_model);
        if (got != g) ++violations;
    }
    if (pcas < 100) ++violations;
    for (int t = 0; t < 100; ++t) {
        auto g = random_coconvex_graph(2 + t % 4, 1 + t % 4, rng);
        auto res = coconvex_arc_model(g);
        if (!res || !res->arc_model) {
            ++violations;
            continue;
        }
        ++models;
        if (intersection_graph(*res->arc_model) != g) ++violations;
    }

    report(3, violations == 0 && models >= 1000,
           "all pipeline models validate (proper and tight where promised)");
    CHECK(violations == 0);
    CHECK(models >= 1000);
}

TEST_CASE("criterion 4: tight representations of strictly connected hypergraphs are unique") {
    std::mt19937 rng(4004);
    long long violations = 0;
    int tested = 0;
    for (int t = 0; t < 20000 && tested < 100; ++t) {
        Hypergraph h = (t % 2 == 0)
                           ? closed_neighborhoods(random_pca_graph(4 + t % 3, rng))
                           : random_ca_hypergraph(4 + t % 3, 2 + t % 4, rng);
        if (h.size() > 6) continue;
        if (!strict_components(h).strictly_connected) continue;
        auto orders = oracle::enumerate_tight_orderings(h);
        if (orders.empty()) continue;
        ++tested;

        auto q = quotient(h);
        auto key_of = [&](const std::vector<VertexId>& ord) {
            int n = static_cast<int>(ord.size());
            std::vector<int> cls;
            for (const auto& v : ord) cls.push_back(q.class_of[h.index_of(v)]);
            std::vector<int> best;
            for (int refl = 0; refl < 2; ++refl) {
                for (int s = 0; s < n; ++s) {
                    std::vector<int> cand;
                    for (int i = 0; i < n; ++i) cand.push_back(cls[(s + i) % n]);
                    if (best.empty() || cand < best) best = cand;
                }
                std::reverse(cls.begin(), cls.end());
            }
            return best;
        };
        auto base = key_of(orders[0]);
        for (const auto& ord : orders)
            if (key_of(ord) != base) ++violations;

        // Closure: every rotation and reflection of a tight ordering is a
        // tight ordering, so the oracle must have listed them all.
        int n = static_cast<int>(orders[0].size());
        std::set<std::vector<VertexId>> seen(orders.begin(), orders.end());
        std::vector<VertexId> seq = orders[0];
        for (int refl = 0; refl < 2; ++refl) {
            for (int s = 0; s < n; ++s) {
                std::vector<VertexId> rot;
                for (int i = 0; i < n; ++i) rot.push_back(seq[(s + i) % n]);
                if (!seen.count(rot)) ++violations;
            }
            std::reverse(seq.begin(), seq.end());
        }
    }
    report(4, violations == 0 && tested == 100,
           "all tight orderings congruent up to rotation/reflection/twins");
    CHECK(violations == 0);
    CHECK(tested == 100);
}

TEST_CASE("criterion 5: exact star system round trips") {
    std::mt19937 rng(5005);
    long long failures = 0;
    int exact_checked = 0, unique_checked = 0;

    for (int t = 0; t < 200; ++t) {
        auto g = random_proper_interval_graph(2 + t % 9, rng);  // up to 10
        auto sol = ssp_ca(closed_neighborhoods(g));
        if (!sol || !(*sol == g)) ++failures;
        ++exact_checked;
        if (g.size() <= 6) {
            auto all = oracle::brute_force_ssp(closed_neighborhoods(g));
            if (all.size() != 1) ++failures;
            ++unique_checked;
        }
    }
    int done = 0;
    for (int t = 0; t < 8000 && done < 200; ++t) {
        auto g = random_pca_graph(4 + t % 7, rng);  // up to 10
        if (!g.is_connected() || g.complement().two_coloring()) continue;
        ++done;
        auto sol = ssp_ca(closed_neighborhoods(g));
        if (!sol || !(*sol == g)) ++failures;
        ++exact_checked;
        if (g.size() <= 6) {
            auto all = oracle::brute_force_ssp(closed_neighborhoods(g));
            if (all.size() != 1) ++failures;
            ++unique_checked;
        }
    }
    if (done < 200) ++failures;
    report(5, failures == 0, "proper interval and non-co-bipartite PCA reconstruct exactly");
    CHECK(failures == 0);
    CHECK(exact_checked >= 400);
    CHECK(unique_checked >= 100);
}

TEST_CASE("criterion 6: co-convex star system round trips up to isomorphism") {
    std::mt19937 rng(6006);
    long long failures = 0;
    for (int t = 0; t < 200; ++t) {
        auto g = random_coconvex_graph(2 + t % 5, 1 + (t / 5) % 5, rng);  // up to 10
        auto ng = closed_neighborhoods(g);
        auto sol = ssp_ca(ng);
        if (!sol) {
            ++failures;
            continue;
        }
        if (closed_neighborhoods(*sol) != ng) ++failures;
        if (g.size() <= 8 && !oracle::brute_force_iso(*sol, g)) ++failures;
    }
    report(6, failures == 0, "co-convex reconstructions solve N[G]=H and are isomorphic");
    CHECK(failures == 0);
}

TEST_CASE("criterion 7: circular-ones matrices agree with brute-force search") {
    std::mt19937 rng(7007);
    long long mismatches = 0;
    std::uniform_int_distribution<int> dim(1, 7);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int t = 0; t < 500; ++t) {
        int rows = dim(rng), cols = dim(rng);
        auto m = BinaryMatrix::make(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.cell[r][c] = static_cast<char>(bit(rng));

        auto row_ok = [&](const std::vector<int>& perm, int r) {
            std::vector<char> bits(cols);
            int ones = 0;
            for (int p = 0; p < cols; ++p) {
                bits[p] = m.cell[r][perm[p]];
                ones += bits[p];
            }
            if (ones == 0 || ones == cols) return true;
            int blocks = 0;
            for (int p = 0; p < cols; ++p)
                if (bits[p] && !bits[p == 0 ? cols - 1 : p - 1]) ++blocks;
            return blocks == 1;
        };
        bool brute = false;
        std::vector<int> perm(cols);
        for (int i = 0; i < cols; ++i) perm[i] = i;
        do {
            bool ok = true;
            for (int r = 0; r < rows && ok; ++r) ok = row_ok(perm, r);
            if (ok) {
                brute = true;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));

        auto res = circular_ones(m);
        if (res.has_value() != brute) ++mismatches;
        if (res) {
            for (int r = 0; r < rows; ++r)
                if (!row_ok(*res, r)) ++mismatches;
        }
    }
    report(7, mismatches == 0, "circular-ones matches brute force; permutations verify");
    CHECK(mismatches == 0);
}

TEST_CASE("criterion 8: class inclusions hold on random graphs") {
    std::mt19937 rng(8008);
    long long violations = 0;
    for (int t = 0; t < 2000; ++t) {
        auto g = random_graph(1 + t % 8, 10 + (t * 17) % 85, rng);
        auto tags = recognize(g);
        bool pi = tags.count(ClassTag::ProperInterval);
        bool pca = tags.count(ClassTag::PCA);
        bool tca = tags.count(ClassTag::TCA);
        bool interval = tags.count(ClassTag::Interval);
        bool cobip = tags.count(ClassTag::CoBipartite);
        if (pi && !pca) ++violations;
        if (pca && !tca) ++violations;
        if (tca && !cobip && !pca) ++violations;
        bool ng_interval =
            canonical_interval(closed_neighborhoods(g)).has_value();
        if (pi != (interval && ng_interval)) ++violations;
    }
    report(8, violations == 0,
           "ProperInterval => PCA => TCA; TCA non-co-bipartite => PCA");
    CHECK(violations == 0);
}
