#include "repwords/certificate.hpp"

#include <stdexcept>

namespace repwords {

Certificate Certificate::represented(const LabeledGraph& g, Word w,
                                     std::vector<Word> avoided, std::string method) {
    if (!twelve_represents(w, g))
        throw std::logic_error("certificate: word does not represent the graph");
    for (const Word& p : avoided)
        if (!avoids(w, p))
            throw std::logic_error("certificate: word contains pattern " + pattern_label(p));
    Certificate c;
    c.status = CertStatus::Represented;
    c.word = std::move(w);
    c.avoided = std::move(avoided);
    c.method = std::move(method);
    return c;
}

Certificate Certificate::refuted(const LabeledGraph& g, PatternWitness witness) {
    const OrderedPattern& p = witness.pattern;
    const auto& v = witness.vertices;
    if (static_cast<int>(v.size()) != p.arity)
        throw std::logic_error("certificate: witness arity mismatch");
    for (int a = 0; a + 1 < p.arity; ++a) {
        if (v[a] >= v[a + 1])
            throw std::logic_error("certificate: witness vertices not ascending");
    }
    for (int a = 0; a < p.arity; ++a) {
        for (int b = a + 1; b < p.arity; ++b) {
            PairConstraint c = p.at(a, b);
            if (c == PairConstraint::FREE) continue;
            bool want = (c == PairConstraint::EDGE);
            if (g.edge(v[a], v[b]) != want)
                throw std::logic_error("certificate: witness does not match pattern " + p.name);
        }
    }
    Certificate c;
    c.status = CertStatus::Refuted;
    c.witness = std::move(witness);
    c.method = "pattern";
    return c;
}

Certificate Certificate::refuted_by_oracle(std::string reason) {
    Certificate c;
    c.status = CertStatus::RefutedByOracle;
    c.method = "oracle";
    c.reason = std::move(reason);
    return c;
}

Certificate Certificate::unknown(std::string reason) {
    Certificate c;
    c.status = CertStatus::Unknown;
    c.reason = std::move(reason);
    return c;
}

const char* to_string(CertStatus s) {
    switch (s) {
        case CertStatus::Represented: return "represented";
        case CertStatus::Refuted: return "refuted";
        case CertStatus::RefutedByOracle: return "refuted_by_oracle";
        case CertStatus::Unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace repwords
