// The seeded instance family behind the stress sweep. Every instance must
// be a checked symmetric action within the advertised size bounds, the
// same seed must always rebuild the same instance, and the family must
// actually spread across group orders, fields and supports.

#include <algorithm>
#include <set>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "phk/random_instances.hpp"

using namespace phk;

TEST_CASE("the same seed rebuilds the same instance") {
    for (std::uint64_t seed : {1ull, 17ull, 400ull, 9999ull}) {
        RandomInstance a = random_instance(seed);
        RandomInstance b = random_instance(seed);
        CHECK(a.label == b.label);
        CHECK(a.field == b.field);
        CHECK(a.action.action_matrix() == b.action.action_matrix());
        CHECK(a.action.hopf() == b.action.hopf());
        CHECK(a.action.alg() == b.action.alg());
    }
}

TEST_CASE("every instance is a checked symmetric action within bounds") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        RandomInstance inst = random_instance(seed);
        INFO("seed " << seed << ": " << inst.label);
        CHECK(inst.seed == seed);
        CHECK(inst.action.pa_checked());
        CHECK(inst.action.symmetric_checked());
        const std::size_t nh = inst.action.hopf().dim();
        CHECK(nh >= 2);
        CHECK(nh <= 4);
        CHECK(inst.action.alg().dim() >= 1);
        CHECK(inst.action.alg().dim() <= 4);
        CHECK(inst.data.idempotents.size() == nh);
        CHECK(inst.data.isos.size() == nh);
    }
}

TEST_CASE("the family spreads across orders, fields and supports") {
    std::set<std::size_t> orders;
    std::set<std::string> fields;
    bool proper_support = false, full_support = false;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        RandomInstance inst = random_instance(seed);
        orders.insert(inst.action.hopf().dim());
        fields.insert(inst.field.to_string());
        // a proper support leaves at least one ambient coordinate out
        if (inst.label.find("} over") != std::string::npos) {
            const std::size_t open = inst.label.find('{');
            const std::size_t close = inst.label.find('}');
            const std::string inside = inst.label.substr(open + 1, close - open - 1);
            const std::size_t listed = 1 + std::count(inside.begin(), inside.end(), ',');
            const std::size_t ambient = inst.label[inst.label.find("k^") + 2] - '0';
            if (listed < ambient) proper_support = true;
            if (listed == ambient) full_support = true;
        }
    }
    CHECK(orders == std::set<std::size_t>{2, 3, 4});
    CHECK(fields.count("Q") == 1);
    CHECK(fields.size() >= 3);
    CHECK(proper_support);
    CHECK(full_support);
}

TEST_CASE("instances serialize through the spec format and back") {
    for (std::uint64_t seed : {2ull, 5ull, 11ull, 23ull, 31ull}) {
        RandomInstance inst = random_instance(seed);
        INFO("seed " << seed << ": " << inst.label);
        SpecFile round = parse_specfile(specfile_to_json(to_specfile(inst)));
        CHECK(round.name == inst.label);
        CHECK(round.field == inst.field);
        PartialAction rebuilt = spec_action(round);
        CHECK(rebuilt.action_matrix() == inst.action.action_matrix());
        CHECK(rebuilt.hopf() == inst.action.hopf());
        CHECK(rebuilt.alg() == inst.action.alg());
    }
}
