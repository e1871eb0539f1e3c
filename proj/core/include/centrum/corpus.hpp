#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "centrum/fixtures.hpp"

// The fixed randomized suites run by `centrum corpus` and the acceptance test.
namespace centrum::corpus {

struct Options {
    std::uint64_t seed = 20240617;
    std::size_t coequalizer_pairs = 200;
    std::size_t coherence_instances = 50;
    std::size_t beta_instances = 100;
    std::size_t chains = 100;
    std::size_t invertible_instances = 20;
    std::size_t semisimple_cases = 4;
    std::size_t interchange_instances = 200;
};

struct Result {
    std::string name;
    bool pass = true;
    std::size_t instances = 0;
    std::vector<std::string> failures;  // the first few, for the report
    std::vector<std::pair<std::string, std::string>> facts;

    void check(bool ok, const std::string& what);
    void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
};

Result center_suite(const Options& opts);
Result coequalizer_suite(const Options& opts);
Result beta_suite(const Options& opts);
Result lax_functor_suite(const Options& opts);
Result morita_suite(const Options& opts);
Result invertibility_suite(const Options& opts);
Result semisimple_suite(const Options& opts);
Result interchange_suite(const Options& opts);

// All eight, in the order above.
std::vector<Result> run_all(const Options& opts);

}  // namespace centrum::corpus
