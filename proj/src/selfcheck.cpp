#include "sgc/selfcheck.hpp"

#include <set>
#include <sstream>

#include "sgc/action.hpp"
#include "sgc/io.hpp"
#include "sgc/quotient.hpp"
#include "sgc/unlabeled.hpp"

namespace sgc {

namespace {

std::string one_line(const SignedGraph& g) {
    std::string text = print_graph(g);
    for (auto& c : text)
        if (c == '\n') c = ';';
    if (!text.empty() && text.back() == ';') text.pop_back();
    return text;
}

std::string describe(const CorpusEntry& entry) {
    return entry.name + " [" + one_line(entry.graph) + "]";
}

std::ostringstream counterexample(const CorpusEntry& entry) {
    std::ostringstream out;
    out << "graph=" << describe(entry);
    return out;
}

bool arrangement_defined(const SignedGraph& g) {
    return !g.has_free_loop() && !g.has_positive_loop();
}

} // namespace

CheckResult check_chromatic_vs_bruteforce(const std::vector<CorpusEntry>& corpus, int k_min,
                                          int k_max, const SelfCheckOptions& options) {
    CheckResult r{"chromatic-vs-bruteforce", true, ""};
    long long evaluations = 0;
    for (const auto& entry : corpus) {
        ExactPolynomial chi = chromatic_polynomial(entry.graph, options.n_max);
        for (int k = k_min; k <= k_max; ++k) {
            long long expected = count_colorings_bruteforce(entry.graph, k, options.budget);
            long long got = chi.evaluate(Rational(k)).as_integer();
            ++evaluations;
            if (expected != got) {
                auto out = counterexample(entry);
                out << " k=" << k << " expected=" << expected << " got=" << got;
                return {r.name, false, out.str()};
            }
        }
    }
    r.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(evaluations) +
               " evaluations";
    return r;
}

CheckResult check_quotient_coloring_count(const std::vector<CorpusEntry>& corpus, int k_min,
                                          int k_max, const SelfCheckOptions& options) {
    CheckResult r{"quotient-coloring-count", true, ""};
    long long pairs = 0;
    auto check_pair = [&](const CorpusEntry& entry, const SignedPermutation& beta,
                          std::string* failure) {
        ++pairs;
        SignedFlat fixed = beta_hat(beta);
        ExactPolynomial chi = chromatic_polynomial(quotient(entry.graph, beta).graph,
                                                   options.n_max);
        for (int k = k_min; k <= k_max; ++k) {
            long long expected = proper_colorings_in_flat(entry.graph, fixed, k, options.budget);
            long long got = chi.evaluate(Rational(k)).as_integer();
            if (expected != got) {
                auto out = counterexample(entry);
                out << " beta=" << print_perm(beta) << " k=" << k << " expected=" << expected
                    << " got=" << got;
                *failure = out.str();
                return false;
            }
        }
        return true;
    };

    std::string failure;
    CorpusEntry figure{"figure-square-diagonal", figure_graph()};
    if (!check_pair(figure, figure_perm(), &failure)) return {r.name, false, failure};
    for (const auto& entry : corpus)
        for (const auto& beta : corpus_perms_for(entry.graph))
            if (!check_pair(entry, beta, &failure)) return {r.name, false, failure};
    r.detail = std::to_string(pairs) + " (graph, beta) pairs, k=" + std::to_string(k_min) + ".." +
               std::to_string(k_max);
    return r;
}

CheckResult check_fixed_coloring_predicates(const std::vector<CorpusEntry>& corpus, int k_min,
                                            int k_max, const SelfCheckOptions& options) {
    // a coloring is fixed by beta exactly when it lies in beta's fixed
    // subspace; counted both ways
    CheckResult r{"fixed-coloring-predicates", true, ""};
    long long comparisons = 0;
    for (const auto& entry : corpus) {
        for (const auto& beta : corpus_perms_for(entry.graph)) {
            SignedFlat fixed = beta_hat(beta);
            for (int k = k_min; k <= k_max; ++k) {
                ++comparisons;
                long long by_action = fixed_proper_colorings(entry.graph, beta, k, options.budget);
                long long by_flat = proper_colorings_in_flat(entry.graph, fixed, k, options.budget);
                if (by_action != by_flat) {
                    auto out = counterexample(entry);
                    out << " beta=" << print_perm(beta) << " k=" << k
                        << " expected=" << by_action << " got=" << by_flat;
                    return {r.name, false, out.str()};
                }
            }
        }
    }
    r.detail = std::to_string(comparisons) + " counts compared both ways";
    return r;
}

CheckResult check_paper_figure_counterexample(const SelfCheckOptions& options) {
    // The alternative sign rule must disagree with the fixed-subspace count
    // on the figure pair; the derived rule owes its existence to this.
    CheckResult r{"paper-figure-rule-counterexample", true, ""};
    SignedGraph g = figure_graph();
    SignedPermutation beta = figure_perm();
    SignedFlat fixed = beta_hat(beta);
    ExactPolynomial chi =
        chromatic_polynomial(quotient(g, beta, QuotientSignRule::paper_figure).graph,
                             options.n_max);
    for (int k = 0; k <= 3; ++k) {
        long long in_flat = proper_colorings_in_flat(g, fixed, k, options.budget);
        long long formula = chi.evaluate(Rational(k)).as_integer();
        if (in_flat != formula) {
            r.detail = "mismatch found at k=" + std::to_string(k) + " (" +
                       std::to_string(in_flat) + " vs " + std::to_string(formula) + ") as required";
            return r;
        }
    }
    return {r.name, false,
            "paper-figure sign rule unexpectedly matched the fixed-subspace counts on the figure pair"};
}

CheckResult check_unlabeled_two_routes(const std::vector<CorpusEntry>& corpus,
                                       const SelfCheckOptions& options) {
    CheckResult r{"unlabeled-chromatic-two-routes", true, ""};
    long long graphs = 0;
    for (const auto& entry : corpus) {
        if (!arrangement_defined(entry.graph)) continue;
        ++graphs;
        ExactPolynomial via_quotients = unlabeled_chromatic_via_quotients(entry.graph, options.n_max);
        ExactPolynomial via_flats = unlabeled_chromatic_via_flats(entry.graph, options.n_max);
        if (via_quotients != via_flats) {
            auto out = counterexample(entry);
            out << " quotient-route=" << via_quotients.pretty()
                << " flat-route=" << via_flats.pretty();
            return {r.name, false, out.str()};
        }
    }
    r.detail = std::to_string(graphs) + " graphs compared coefficient-wise";
    return r;
}

CheckResult check_coloring_orbits(const std::vector<CorpusEntry>& corpus, int k_min, int k_max,
                                  const SelfCheckOptions& options) {
    CheckResult r{"coloring-orbits-vs-unlabeled-chromatic", true, ""};
    long long evaluations = 0;
    for (const auto& entry : corpus) {
        if (entry.graph.n() > 3) continue;
        ExactPolynomial chi_hat = unlabeled_chromatic_via_quotients(entry.graph, options.n_max);
        for (int k = k_min; k <= k_max; ++k) {
            long long orbits = coloring_orbit_count(entry.graph, k, options.n_max, options.budget);
            long long formula = chi_hat.evaluate(Rational(k)).as_integer();
            ++evaluations;
            if (orbits != formula) {
                auto out = counterexample(entry);
                out << " k=" << k << " expected=" << orbits << " got=" << formula;
                return {r.name, false, out.str()};
            }
        }
    }
    r.detail = std::to_string(evaluations) + " orbit partitions compared";
    return r;
}

CheckResult check_closed_form_fixtures(const SelfCheckOptions& options) {
    CheckResult r{"closed-form-fixtures", true, ""};
    struct Fixture {
        std::string name;
        SignedGraph graph;
        ExactPolynomial chi;
        ExactPolynomial chi_hat;
        long long acyclic = -1;          // -1 = not asserted
        long long unlabeled_acyclic = -1;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({"positive-link", SignedGraph(2, {link_edge(1, 2, +1)}),
                        ExactPolynomial({Rational(0), Rational(2), Rational(4)}),
                        ExactPolynomial({Rational(0), Rational(1), Rational(1)}), 2, 1});
    fixtures.push_back({"negative-loop", SignedGraph(1, {loop_edge(1, -1)}),
                        ExactPolynomial({Rational(0), Rational(2)}),
                        ExactPolynomial({Rational(0), Rational(1)}), 2, 1});
    fixtures.push_back({"single-vertex", SignedGraph(1, {}),
                        ExactPolynomial({Rational(1), Rational(2)}),
                        ExactPolynomial({Rational(1), Rational(1)}), 1, 1});
    for (const auto& f : fixtures) {
        auto fail = [&](const std::string& what, const std::string& expected,
                        const std::string& got) {
            return CheckResult{r.name, false,
                               f.name + " " + what + ": expected " + expected + ", got " + got};
        };
        ExactPolynomial chi = chromatic_polynomial(f.graph, options.n_max);
        if (chi != f.chi) return fail("chi", f.chi.pretty(), chi.pretty());
        ExactPolynomial chi_hat = unlabeled_chromatic_via_quotients(f.graph, options.n_max);
        if (chi_hat != f.chi_hat) return fail("chi-hat", f.chi_hat.pretty(), chi_hat.pretty());
        if (f.acyclic >= 0) {
            long long a = acyclic_count(f.graph, options.n_max);
            if (a != f.acyclic)
                return fail("acyclic", std::to_string(f.acyclic), std::to_string(a));
        }
        if (f.unlabeled_acyclic >= 0) {
            long long a = unlabeled_acyclic_count(f.graph, options.n_max);
            if (a != f.unlabeled_acyclic)
                return fail("unlabeled-acyclic", std::to_string(f.unlabeled_acyclic),
                            std::to_string(a));
        }
    }
    r.detail = std::to_string(fixtures.size()) + " fixtures";
    return r;
}

CheckResult check_regions_vs_acyclic(const std::vector<CorpusEntry>& corpus,
                                     const SelfCheckOptions& options) {
    CheckResult r{"regions-vs-acyclic-count", true, ""};
    long long graphs = 0;
    for (const auto& entry : corpus) {
        if (!arrangement_defined(entry.graph) || entry.graph.n() > kDefaultRegionBound) continue;
        ++graphs;
        long long regions =
            static_cast<long long>(regions_bruteforce(entry.graph).regions.size());
        long long formula = acyclic_count(entry.graph, options.n_max);
        if (regions != formula) {
            auto out = counterexample(entry);
            out << " expected=" << regions << " got=" << formula;
            return {r.name, false, out.str()};
        }
    }
    r.detail = std::to_string(graphs) + " arrangements enumerated";
    return r;
}

CheckResult check_regions_on_fixed_subspaces(const std::vector<CorpusEntry>& corpus,
                                             const SelfCheckOptions& options) {
    CheckResult r{"regions-on-fixed-subspaces", true, ""};
    long long pairs = 0;
    for (const auto& entry : corpus) {
        if (!arrangement_defined(entry.graph) || entry.graph.n() > kDefaultRegionBound) continue;
        for (const auto& beta : corpus_perms_for(entry.graph)) {
            ++pairs;
            long long regions = regions_meeting_flat(entry.graph, beta);
            QuotientResult q = quotient(entry.graph, beta);
            Rational value =
                chromatic_polynomial(q.graph, options.n_max).evaluate(Rational(-1));
            if (q.graph.n() % 2 != 0) value = -value;
            long long formula = value.as_integer();
            if (regions != formula) {
                auto out = counterexample(entry);
                out << " beta=" << print_perm(beta) << " expected=" << regions
                    << " got=" << formula;
                return {r.name, false, out.str()};
            }
        }
    }
    r.detail = std::to_string(pairs) + " (graph, beta) pairs";
    return r;
}

CheckResult check_fixed_region_predicates(const std::vector<CorpusEntry>& corpus,
                                          const SelfCheckOptions& options) {
    CheckResult r{"fixed-region-predicates", true, ""};
    long long comparisons = 0;
    for (const auto& entry : corpus) {
        if (!arrangement_defined(entry.graph) || entry.graph.n() > kDefaultRegionBound) continue;
        RegionSet rs = regions_bruteforce(entry.graph);
        for (const auto& beta : automorphism_group(entry.graph, options.n_max)) {
            SignedFlat fixed = beta_hat(beta);
            // all sign vectors realized on the fixed subspace, computed once
            std::set<std::vector<std::int8_t>> on_flat;
            for (const auto& x : flat_sample_points(fixed))
                on_flat.insert(sign_vector(rs.hyperplanes, x));
            for (const auto& region : rs.regions) {
                ++comparisons;
                bool by_action = region_fixed_by(rs, beta, region);
                bool by_flat = on_flat.count(region.signs) > 0;
                if (by_action != by_flat) {
                    auto out = counterexample(entry);
                    out << " beta=" << print_perm(beta)
                        << " action-predicate=" << (by_action ? "fixed" : "moved")
                        << " flat-predicate=" << (by_flat ? "fixed" : "moved");
                    return {r.name, false, out.str()};
                }
            }
        }
    }
    r.detail = std::to_string(comparisons) + " (region, automorphism) comparisons";
    return r;
}

CheckResult check_region_orbits(const std::vector<CorpusEntry>& corpus,
                                const SelfCheckOptions& options) {
    CheckResult r{"region-orbits-vs-unlabeled-acyclic", true, ""};
    long long graphs = 0;
    for (const auto& entry : corpus) {
        if (!arrangement_defined(entry.graph) || entry.graph.n() > kDefaultRegionBound) continue;
        ++graphs;
        long long orbits = region_orbit_count(entry.graph, options.n_max);
        long long formula = unlabeled_acyclic_count(entry.graph, options.n_max);
        if (orbits != formula) {
            auto out = counterexample(entry);
            out << " expected=" << orbits << " got=" << formula;
            return {r.name, false, out.str()};
        }
    }
    r.detail = std::to_string(graphs) + " orbit partitions compared";
    return r;
}

CheckResult check_integrality(const std::vector<CorpusEntry>& corpus, int k_min, int k_max,
                              const SelfCheckOptions& options) {
    CheckResult r{"integrality", true, ""};
    long long values = 0;
    for (const auto& entry : corpus) {
        ExactPolynomial chi_hat = unlabeled_chromatic_via_quotients(entry.graph, options.n_max);
        for (int k = k_min; k <= k_max; ++k) {
            Rational v = chi_hat.evaluate(Rational(k));
            ++values;
            if (!v.is_nonnegative_integer()) {
                auto out = counterexample(entry);
                out << " k=" << k << " chi-hat=" << v.str() << " not a nonnegative integer";
                return {r.name, false, out.str()};
            }
        }
        try {
            unlabeled_acyclic_count(entry.graph, options.n_max); // throws if non-integral
            ++values;
        } catch (const InternalError& err) {
            auto out = counterexample(entry);
            out << " " << err.what();
            return {r.name, false, out.str()};
        }
    }
    r.detail = std::to_string(values) + " values checked";
    return r;
}

std::vector<CheckResult> run_selfcheck(const std::vector<CorpusEntry>& extra,
                                       const SelfCheckOptions& options) {
    std::vector<CorpusEntry> corpus = bundled_corpus();
    corpus.insert(corpus.end(), extra.begin(), extra.end());
    std::vector<CheckResult> out;
    out.push_back(check_chromatic_vs_bruteforce(corpus, options.k_min, options.k_max, options));
    out.push_back(check_fixed_coloring_predicates(corpus, options.k_min, options.k_max, options));
    out.push_back(check_quotient_coloring_count(corpus, options.k_min, options.k_max, options));
    out.push_back(check_paper_figure_counterexample(options));
    out.push_back(check_unlabeled_two_routes(corpus, options));
    out.push_back(check_coloring_orbits(corpus, options.k_min, options.k_max, options));
    out.push_back(check_closed_form_fixtures(options));
    out.push_back(check_regions_vs_acyclic(corpus, options));
    out.push_back(check_regions_on_fixed_subspaces(corpus, options));
    out.push_back(check_fixed_region_predicates(corpus, options));
    out.push_back(check_region_orbits(corpus, options));
    out.push_back(check_integrality(corpus, options.k_min, options.k_max, options));
    return out;
}

} // namespace sgc
