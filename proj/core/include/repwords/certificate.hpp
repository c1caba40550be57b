#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repwords/graph.hpp"
#include "repwords/patterns.hpp"
#include "repwords/word.hpp"

namespace repwords {

enum class CertStatus {
    Represented,       // word found, verified against the graph and the avoid set
    Refuted,           // forbidden induced pattern witness
    RefutedByOracle,   // exhaustive search ruled every candidate word out
    Unknown,           // decision out of budget or oracle disabled
};

// outcome of a decision query, carrying its own evidence.
// word and avoided are set for Represented; witness for Refuted;
// reason explains Unknown and RefutedByOracle.
struct Certificate {
    CertStatus status = CertStatus::Unknown;
    Word word;
    std::vector<Word> avoided;
    std::optional<PatternWitness> witness;
    std::string method;   // "pattern" or "oracle"
    std::string reason;

    // re-verifies the word against g and every avoid pattern; throws on mismatch
    static Certificate represented(const LabeledGraph& g, Word w,
                                   std::vector<Word> avoided, std::string method);
    // re-checks that the witness vertices induce the claimed pattern in g
    static Certificate refuted(const LabeledGraph& g, PatternWitness witness);
    static Certificate refuted_by_oracle(std::string reason);
    static Certificate unknown(std::string reason);
};

const char* to_string(CertStatus s);

}  // namespace repwords
