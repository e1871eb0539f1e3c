#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <centrum/errors.hpp>
#include <centrum/io.hpp>

namespace centrum::cli {

using json = nlohmann::json;

// Bad invocation or input that fails its validator; exit code 2.
class InputError : public std::runtime_error {
public:
    InputError(const std::string& what, json report = nullptr)
        : std::runtime_error(what), report_(std::move(report)) {}
    const json& report() const { return report_; }

private:
    json report_;
};

// Loaded inputs of one invocation. Every object is validated when it is
// loaded, and its content hash is recorded under the flag it came from.
class Session {
public:
    Session(std::uint32_t prime, std::uint64_t seed) : prime_(prime), seed_(seed), rng_(seed) {}

    std::uint32_t prime() const { return prime_; }
    std::uint64_t seed() const { return seed_; }
    Rng& rng() { return rng_; }

    Algebra algebra(const std::string& slot, const std::string& text);
    AlgebraMap map(const std::string& slot, const std::string& text);
    Bimodule bimodule(const std::string& slot, const std::string& text);
    BimoduleMap bimodule_map(const std::string& slot, const std::string& text);
    Cospan cospan(const std::string& slot, const std::string& text);
    TwoDiagram diagram(const std::string& slot, const std::string& text);
    // A JSON array of objects of one kind, stored as slot[0], slot[1], ...
    json array(const std::string& slot, const std::string& text);

    // Raw JSON from inline text, a file path, or a bare name.
    json document(const std::string& slot, const std::string& text);

    json envelope(const std::string& command) const;

private:
    void require(const std::string& slot, const ValidationReport& r);

    std::uint32_t prime_;
    std::uint64_t seed_;
    Rng rng_;
    std::map<std::string, std::string> hashes_;
};

std::string sha256_hex(const std::string& data);

}  // namespace centrum::cli
