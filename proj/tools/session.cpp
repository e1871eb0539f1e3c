#include "session.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

namespace centrum::cli {

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

json Session::document(const std::string& slot, const std::string& text) {
    json j;
    const char first = text.empty() ? '\0' : text.front();
    try {
        if (first == '{' || first == '[' || first == '"') {
            j = json::parse(text);
        } else if (std::filesystem::is_regular_file(text)) {
            std::ifstream in(text);
            std::stringstream ss;
            ss << in.rdbuf();
            j = json::parse(ss.str());
        } else {
            j = text;
        }
    } catch (const json::parse_error& e) {
        throw InputError(slot + ": malformed JSON: " + e.what());
    }
    hashes_[slot] = sha256_hex(j.dump());
    return j;
}

void Session::require(const std::string& slot, const ValidationReport& r) {
    if (!r.clean()) throw InputError(slot + ": " + r.summary(), io::to_json(r));
}

namespace {

template <class F>
auto parsed(const std::string& slot, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw InputError(slot + ": " + e.what());
    } catch (const ParseError& e) {
        throw InputError(slot + ": " + e.what());
    } catch (const ShapeError& e) {
        throw InputError(slot + ": " + e.what());
    }
}

}  // namespace

Algebra Session::algebra(const std::string& slot, const std::string& text) {
    json j = document(slot, text);
    Algebra a = parsed(slot, [&] { return io::algebra_from_json(j, prime_); });
    require(slot, validate_algebra(a));
    return a;
}

AlgebraMap Session::map(const std::string& slot, const std::string& text) {
    json j = document(slot, text);
    AlgebraMap f = parsed(slot, [&] { return io::map_from_json(j, prime_); });
    require(slot, validate_algebra(f.src()));
    require(slot, validate_algebra(f.tgt()));
    require(slot, validate_map(f));
    return f;
}

Bimodule Session::bimodule(const std::string& slot, const std::string& text) {
    json j = document(slot, text);
    Bimodule m = parsed(slot, [&] { return io::bimodule_from_json(j, prime_); });
    require(slot, validate_algebra(m.left()));
    require(slot, validate_algebra(m.right()));
    require(slot, validate_bimodule(m));
    return m;
}

BimoduleMap Session::bimodule_map(const std::string& slot, const std::string& text) {
    json j = document(slot, text);
    BimoduleMap f = parsed(slot, [&] { return io::bimodule_map_from_json(j, prime_); });
    require(slot, validate_bimodule(f.src));
    require(slot, validate_bimodule(f.tgt));
    require(slot, validate_bimodule_map(f));
    return f;
}

Cospan Session::cospan(const std::string& slot, const std::string& text) {
    json j = document(slot, text);
    Cospan c = parsed(slot, [&] { return io::cospan_from_json(j, prime_); });
    require(slot, validate_cospan(c));
    return c;
}

TwoDiagram Session::diagram(const std::string& slot, const std::string& text) {
    json j = document(slot, text);
    TwoDiagram d = parsed(slot, [&] { return io::diagram_from_json(j, prime_); });
    require(slot, validate_cospan(d.src));
    require(slot, validate_cospan(d.tgt));
    require(slot, validate_2diagram(d));
    return d;
}

json Session::array(const std::string& slot, const std::string& text) {
    json j = document(slot, text);
    if (!j.is_array()) throw InputError(slot + ": expected a JSON array");
    return j;
}

json Session::envelope(const std::string& command) const {
    json inputs = json::object();
    for (const auto& [slot, hash] : hashes_) inputs[slot] = {{"sha256", hash}};
    return {{"schema", "centrum/1"},
            {"command", command},
            {"field", prime_ == 0 ? std::string("rational") : "gfp:" + std::to_string(prime_)},
            {"seed", seed_},
            {"inputs", inputs}};
}

}  // namespace centrum::cli
