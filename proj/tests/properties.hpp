#pragma once

// Randomized property suites over corpus algebras. Each suite draws its
// instances from a seeded generator and checks exact assertions.

#include <cstdint>
#include <string>
#include <vector>

namespace syzex::test {

struct PropertyOutcome {
    std::string name;
    int instances = 0;
    int failures = 0;
    std::string first_failure;
    double seconds = 0;
    bool ok() const { return failures == 0 && instances > 0; }
};

PropertyOutcome prop_bullet_split_inclusion(std::uint64_t seed, int instances);
PropertyOutcome prop_sum_lemma(std::uint64_t seed, int instances);
PropertyOutcome prop_max_lemma(std::uint64_t seed, int instances);
PropertyOutcome prop_resolution_membership(std::uint64_t seed, int instances);
PropertyOutcome prop_syzygy_of_layer(std::uint64_t seed, int instances);
PropertyOutcome prop_bullet_inequality(std::uint64_t seed, int instances);
PropertyOutcome prop_layer_monotone(std::uint64_t seed, int instances);
PropertyOutcome prop_syzygy_nesting(std::uint64_t seed, int instances);
PropertyOutcome prop_duality_layer(std::uint64_t seed, int instances);
PropertyOutcome prop_krull_schmidt(std::uint64_t seed, int instances);
PropertyOutcome prop_ext_cardinality(std::uint64_t seed, int instances);
PropertyOutcome prop_middle_additivity(std::uint64_t seed, int instances);
PropertyOutcome prop_engine_monotone(std::uint64_t seed, int instances);

std::vector<PropertyOutcome> run_all_properties(std::uint64_t seed, int instances);

} // namespace syzex::test
