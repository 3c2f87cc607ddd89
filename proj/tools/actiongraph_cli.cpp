// Command-line front end: build and export graphs, enumerate trees, run
// verification sweeps, and translate between leaves and Dyck words.
//
// Exit codes: 0 success, 1 verification or domain failure, 2 usage error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <actiongraph/actiongraph.hpp>

namespace {

using namespace actiongraph;

// Full-graph commands tolerate higher generations than exhaustive ones.
constexpr std::uint32_t kFullGraphGuard = kDefaultBuildGuard;       // 16
constexpr std::uint32_t kExhaustiveGuard = kDefaultBijectionGuard;  // 12

std::uint32_t effective_guard(std::uint32_t default_guard,
                              const std::optional<std::uint32_t>& override_value) {
    if (!override_value) return default_guard;
    if (*override_value > default_guard)
        std::cerr << "warning: raising the guard to " << *override_value
                  << "; work and memory grow roughly fourfold per step\n";
    return *override_value;
}

int run_build(std::uint32_t k, const std::string& format, std::uint32_t guard) {
    const ActionGraph g = build(k, guard);
    if (format == "dot")
        write_dot(g, std::cout);
    else
        write_json(g, std::cout);
    return 0;
}

int run_verify(const std::string& target, std::uint32_t max_k, std::uint32_t guard) {
    if (max_k > guard)
        throw GuardExceededError(max_k, guard,
                                 "--max-k " + std::to_string(max_k) + " exceeds the guard of " +
                                     std::to_string(guard) +
                                     " for this target (see --max-k-override)");

    bool all_ok = true;
    const auto report = [&all_ok](std::uint32_t k, const BigInt& expected, const BigInt& actual,
                                  bool ok) {
        all_ok = all_ok && ok;
        std::cout << "k=" << k << " expected=" << expected << " actual=" << actual
                  << (ok ? " OK" : " FAIL") << "\n";
    };

    if (target == "catalan") {
        // newest-generation size against the recurrence
        ActionGraph g = initial_graph();
        for (std::uint32_t k = 0;; ++k) {
            const BigInt expected = catalan_recurrence(k);
            const BigInt actual(g.with_label(k).size());
            report(k, expected, actual, expected == actual);
            if (k == max_k) break;
            g = grow(std::move(g));
        }
    } else if (target == "lemma") {
        // paths 1 -> k in the generation-k graph against paths 0 -> k-1 one
        // generation earlier
        ActionGraph g = initial_graph();
        BigInt expected = count_paths_between_labels(g, 0, 0);
        for (std::uint32_t k = 1; k <= max_k; ++k) {
            g = grow(std::move(g));
            const BigInt actual = count_paths_between_labels(g, 1, k);
            report(k, expected, actual, expected == actual);
            expected = count_paths_between_labels(g, 0, k);
        }
    } else {  // bijection
        for (std::uint32_t k = 0; k <= max_k; ++k) {
            const BijectionReport rep = check_bijection(k, guard);
            const BigInt expected = catalan_recurrence(k);
            report(k, expected, rep.leaf_count, rep.success() && rep.leaf_count == expected);
        }
    }
    return all_ok ? 0 : 1;
}

int run_trees(std::uint32_t k, const std::string& format, std::uint32_t guard) {
    for (const PlanarTree& t : enumerate_trees(k, guard)) {
        if (format == "json")
            write_tree_json(t, std::cout);
        else
            std::cout << to_dyck(t);
        std::cout << "\n";
    }
    return 0;
}

int run_map(std::uint32_t k, const std::optional<std::uint32_t>& leaf_id,
            const std::optional<std::string>& dyck, std::uint32_t guard) {
    const ActionGraph g = build(k, guard);
    if (leaf_id) {
        std::cout << to_dyck(leaf_to_tree(g, *leaf_id)) << "\n";
    } else {
        const PlanarTree t = parse_dyck(*dyck);
        if (edge_count(t) != k)
            throw std::invalid_argument("expected a Dyck word of length " + std::to_string(2 * k) +
                                        " for generation " + std::to_string(k) + ", got length " +
                                        std::to_string(dyck->size()));
        std::cout << tree_to_leaf(g, t) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"inductively grown action graphs, their Catalan-number counts, and the "
                 "leaf/planar-tree correspondence"};
    app.require_subcommand(1);

    std::uint32_t build_k = 0;
    std::string build_format = "json";
    std::optional<std::uint32_t> build_override;
    CLI::App* build_cmd =
        app.add_subcommand("build", "construct the generation-k graph and print it");
    build_cmd->add_option("--k", build_k, "generation to build")->required();
    build_cmd->add_option("--format", build_format, "output format (default json)")
        ->check(CLI::IsMember({"dot", "json"}));
    build_cmd->add_option("--max-k-override", build_override, "replace the generation guard");

    std::string verify_target;
    std::uint32_t verify_max_k = 0;
    std::optional<std::uint32_t> verify_override;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "sweep k and report one OK/FAIL line per generation");
    verify_cmd->add_option("target", verify_target, "catalan, lemma, or bijection")
        ->required()
        ->check(CLI::IsMember({"catalan", "lemma", "bijection"}));
    verify_cmd->add_option("--max-k", verify_max_k, "largest generation to check")->required();
    verify_cmd->add_option("--max-k-override", verify_override, "replace the generation guard");

    std::uint32_t trees_k = 0;
    std::string trees_format = "dyck";
    std::optional<std::uint32_t> trees_override;
    CLI::App* trees_cmd =
        app.add_subcommand("trees", "list all planar rooted trees with k edges, one per line");
    trees_cmd->add_option("--k", trees_k, "edge count")->required();
    trees_cmd->add_option("--format", trees_format, "output format (default dyck)")
        ->check(CLI::IsMember({"dyck", "json"}));
    trees_cmd->add_option("--max-k-override", trees_override, "replace the enumeration guard");

    std::uint32_t map_k = 0;
    std::optional<std::uint32_t> map_leaf;
    std::optional<std::string> map_dyck;
    std::optional<std::uint32_t> map_override;
    CLI::App* map_cmd = app.add_subcommand(
        "map", "translate between a leaf id of the generation-k graph and a Dyck word");
    map_cmd->add_option("--k", map_k, "generation")->required();
    CLI::Option_group* selector = map_cmd->add_option_group("input", "what to translate");
    selector->add_option("--leaf", map_leaf, "leaf id to turn into a Dyck word");
    selector->add_option("--dyck", map_dyck, "Dyck word to turn into a leaf id");
    selector->require_option(1);
    map_cmd->add_option("--max-k-override", map_override, "replace the generation guard");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(build_cmd))
            return run_build(build_k, build_format, effective_guard(kFullGraphGuard, build_override));
        if (app.got_subcommand(verify_cmd)) {
            const std::uint32_t guard =
                verify_target == "bijection" ? kExhaustiveGuard : kFullGraphGuard;
            return run_verify(verify_target, verify_max_k, effective_guard(guard, verify_override));
        }
        if (app.got_subcommand(trees_cmd))
            return run_trees(trees_k, trees_format,
                             effective_guard(kExhaustiveGuard, trees_override));
        if (app.got_subcommand(map_cmd))
            return run_map(map_k, map_leaf, map_dyck,
                           effective_guard(kFullGraphGuard, map_override));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;  // unreachable with require_subcommand(1)
}
