#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewgoppa/constructions.hpp"

namespace skewgoppa {

/// Parsed instance description.  The text format is line-oriented
/// "key = value" with '#' comments; lists are bracketed, elements are the
/// integer serialization of field elements.  See README for the full key
/// set per family.
struct InstanceConfig {
    enum class Family { grs, goppa, mgoppa, acar, gsrs, gsg, gsmg };

    Family family = Family::grs;
    uint32_t p = 0, s = 1, t = 1, r = 1;
    std::optional<std::vector<uint32_t>> modulus;
    std::vector<std::vector<uint64_t>> sets;           // set.1 .. set.m
    std::vector<std::vector<uint64_t>> factors;        // g.1 .. (may be one short of m)
    std::optional<uint64_t> ginv_a;                    // InvariantSpec form of the
    std::optional<std::vector<uint64_t>> ginv_v;       // twisted factor
    std::optional<uint64_t> ginv_l;
    std::vector<uint64_t> eta;                         // multipliers (v for grs/gsrs)
    std::optional<uint64_t> k;
    uint64_t budget = kDefaultDistanceBudget;

    std::map<std::string, int> key_lines; // 1-based source line per key

    int line_of(const std::string& key) const {
        auto it = key_lines.find(key);
        return it == key_lines.end() ? 0 : it->second;
    }
};

const char* family_name(InstanceConfig::Family f);

/// Syntax phase: throws ParseError (with line numbers) on malformed text,
/// unknown or duplicate keys, missing required keys, or non-contiguous
/// set.i / g.i indices.
InstanceConfig parse_config(const std::string& text);

/// A constructed instance.  Owns its Field; every matrix and code inside
/// references it.
struct BuiltInstance {
    std::unique_ptr<Field> field;
    InstanceConfig cfg;
    LinearCode code;
    Matrix parity;  // the defining parity-check matrix over F_{q^t}
    std::optional<ParityFactors> factors; // gsg only
    // parameter_report inputs
    uint64_t deg_g = 0;
    std::vector<uint32_t> factor_degrees;
    bool k_upper_claimed = true;
    bool mds_claimed = false;
    std::optional<size_t> rank_h;

    ParameterReport report() const;
};

/// Semantic phase: builds the field, converts element codes, checks every
/// construction hypothesis (HypothesisError names the violated one and the
/// offending config line), and runs the construction.
BuiltInstance build_instance(const InstanceConfig& cfg);

/// Deterministic artifact texts for `build`: generator (code format),
/// parity check (matrix format), and for gsg the factor block.
struct ArtifactTexts {
    std::string generator;
    std::string parity;
    std::optional<std::string> factors;
};
ArtifactTexts artifact_texts(const BuiltInstance& inst);

/// Deterministic `params` report text (one "key = value" per line with
/// PASS/FAIL verdicts).
std::string format_report(const BuiltInstance& inst, const ParameterReport& rep);

} // namespace skewgoppa
