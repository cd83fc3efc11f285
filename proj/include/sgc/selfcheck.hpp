#ifndef SGC_SELFCHECK_HPP
#define SGC_SELFCHECK_HPP

#include <string>
#include <vector>

#include "sgc/corpus.hpp"

namespace sgc {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // first counterexample on failure, summary stats on success
};

struct SelfCheckOptions {
    int k_min = 0;
    int k_max = 3;
    int n_max = 8;
    long long budget = 10'000'000;
};

// The full invariant suite over the bundled corpus plus any extra graphs:
// every closed formula checked against its independent brute-force oracle.
// Each entry reports one named check; a failing check carries the first
// counterexample found (graph, beta, k, expected, got).
std::vector<CheckResult> run_selfcheck(const std::vector<CorpusEntry>& extra = {},
                                       const SelfCheckOptions& options = {});

// Individual checks, exposed so the acceptance suite can pin its own
// parameters per criterion.
CheckResult check_chromatic_vs_bruteforce(const std::vector<CorpusEntry>& corpus, int k_min,
                                          int k_max, const SelfCheckOptions& options);
CheckResult check_fixed_coloring_predicates(const std::vector<CorpusEntry>& corpus, int k_min,
                                            int k_max, const SelfCheckOptions& options);
CheckResult check_quotient_coloring_count(const std::vector<CorpusEntry>& corpus, int k_min,
                                          int k_max, const SelfCheckOptions& options);
CheckResult check_paper_figure_counterexample(const SelfCheckOptions& options);
CheckResult check_unlabeled_two_routes(const std::vector<CorpusEntry>& corpus,
                                       const SelfCheckOptions& options);
CheckResult check_coloring_orbits(const std::vector<CorpusEntry>& corpus, int k_min, int k_max,
                                  const SelfCheckOptions& options);
CheckResult check_closed_form_fixtures(const SelfCheckOptions& options);
CheckResult check_regions_vs_acyclic(const std::vector<CorpusEntry>& corpus,
                                     const SelfCheckOptions& options);
CheckResult check_regions_on_fixed_subspaces(const std::vector<CorpusEntry>& corpus,
                                             const SelfCheckOptions& options);
CheckResult check_fixed_region_predicates(const std::vector<CorpusEntry>& corpus,
                                          const SelfCheckOptions& options);
CheckResult check_region_orbits(const std::vector<CorpusEntry>& corpus,
                                const SelfCheckOptions& options);
CheckResult check_integrality(const std::vector<CorpusEntry>& corpus, int k_min, int k_max,
                              const SelfCheckOptions& options);

} // namespace sgc

#endif
